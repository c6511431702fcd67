#include "ggr/format.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace ggr {

const std::string* OutputRecord::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void check_uniform_keys(const std::vector<OutputRecord>& rows) {
  for (size_t i = 1; i < rows.size(); ++i) {
    bool same = rows[i].fields.size() == rows[0].fields.size();
    for (size_t j = 0; same && j < rows[0].fields.size(); ++j)
      same = rows[i].fields[j].first == rows[0].fields[j].first;
    if (!same) throw std::invalid_argument("render: records disagree on keys");
  }
}

// Rows of raw CSV fields; accepts LF and CRLF row endings.
std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  size_t i = 0;
  const size_t n = text.size();
  auto end_field = [&] { row.push_back(std::move(field)); field.clear(); };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < n) {
    char c = text[i];
    if (c == '"' && field.empty()) {
      ++i;  // quoted field
      for (;;) {
        if (i >= n) throw std::invalid_argument("csv: unterminated quote");
        if (text[i] == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          field += text[i++];
        }
      }
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\n') {
      end_row();
      ++i;
    } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
    } else {
      field += c;
      ++i;
    }
  }
  if (!field.empty() || !row.empty()) end_row();  // missing final newline
  return rows;
}

}  // namespace

std::string render_csv(const std::vector<OutputRecord>& rows) {
  if (rows.empty()) return "";
  check_uniform_keys(rows);
  std::string out;
  for (size_t j = 0; j < rows[0].fields.size(); ++j) {
    if (j) out += ',';
    out += csv_field(rows[0].fields[j].first);
  }
  out += '\n';
  for (const auto& r : rows) {
    for (size_t j = 0; j < r.fields.size(); ++j) {
      if (j) out += ',';
      out += csv_field(r.fields[j].second);
    }
    out += '\n';
  }
  return out;
}

std::vector<OutputRecord> parse_csv(const std::string& text) {
  auto raw = split_csv(text);
  std::vector<OutputRecord> out;
  if (raw.empty()) return out;
  const auto& header = raw[0];
  for (size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].size() != header.size())
      throw std::invalid_argument("csv: row width differs from header");
    OutputRecord rec;
    for (size_t j = 0; j < header.size(); ++j) rec.add(header[j], raw[i][j]);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string render_json(const std::vector<OutputRecord>& rows) {
  check_uniform_keys(rows);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields) obj[k] = v;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

std::vector<OutputRecord> parse_json(const std::string& text) {
  auto arr = nlohmann::ordered_json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("json: expected an array");
  std::vector<OutputRecord> out;
  for (const auto& obj : arr) {
    if (!obj.is_object()) throw std::invalid_argument("json: expected objects");
    OutputRecord rec;
    for (const auto& [k, v] : obj.items()) {
      if (!v.is_string()) throw std::invalid_argument("json: expected string values");
      rec.add(k, v.get<std::string>());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string render(const std::vector<OutputRecord>& rows, OutputFormat f) {
  return f == OutputFormat::Csv ? render_csv(rows) : render_json(rows);
}

std::string exact_rational_string(const Rational& x) {
  const Integer& den = x.get_den();
  if (den == 1) return x.get_num().get_str();
  // Terminating decimal exactly when den = 2^a 5^b; use max(a, b) digits.
  Integer d = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return x.get_str();
  return decimal_string(x, static_cast<int>(std::max(twos, fives)));
}

std::string approx_string(const BoundedReal& x, const RenderOptions& opt) {
  return x.decimal(opt.digits);
}

namespace {

std::string join_h(const std::vector<uint64_t>& h) {
  std::string s;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h[i]);
  }
  return s;
}

std::string digits_concat(const std::vector<Rational>& w) {
  std::string s;
  for (const auto& d : w) s += exact_rational_string(d);
  return s;
}

}  // namespace

std::string h_string(const AdmissibleSeq& d) {
  switch (d.kind) {
    case SeqKind::Zero:
      return "()";
    case SeqKind::Finite:
      return "(" + join_h(d.hs.h) + ")";
    case SeqKind::InfiniteResolved:
      return d.hs.h.empty() ? "(1^inf)" : "(" + join_h(d.hs.h) + ",1^inf)";
    case SeqKind::InfinitePrefix:
      return d.hs.h.empty() ? "(...)" : "(" + join_h(d.hs.h) + ",...)";
  }
  return "";
}

std::string d_period_string(const AdmissibleSeq& d) {
  if (!d.word) return "";
  const EpWord& w = *d.word;
  std::string per = digits_concat(w.period());
  if (w.preperiod().empty()) return per;
  return digits_concat(w.preperiod()) + "(" + per + ")";
}

std::string tristate_string(Tristate t) {
  switch (t) {
    case Tristate::No:
      return "no";
    case Tristate::Yes:
      return "yes";
    case Tristate::DepthLimited:
      return "depth_limited";
  }
  return "";
}

namespace {

std::string n_string(const AdmissibleSeq& d) {
  switch (d.kind) {
    case SeqKind::Zero:
      return "0";
    case SeqKind::Finite:
      return std::to_string(d.hs.h.size());
    case SeqKind::InfiniteResolved:
      return "inf";
    case SeqKind::InfinitePrefix:
      return "";
  }
  return "";
}

std::string cond_string(CondKind k) {
  return k == CondKind::Raise ? "raise" : "lower";
}

}  // namespace

OutputRecord table_row(const CriticalResult& r, const RenderOptions& opt) {
  OutputRecord rec;
  rec.add("m", exact_rational_string(r.m));
  rec.add("N", n_string(r.search.seq));
  rec.add("h", h_string(r.search.seq));
  rec.add("d_period", d_period_string(r.search.seq));
  rec.add("p_prime", approx_string(r.p_prime, opt));
  rec.add("p_double_prime", approx_string(r.p_double_prime, opt));
  rec.add("p", approx_string(r.p, opt));
  rec.add("P", approx_string(r.P, opt));
  rec.add("in_C", tristate_string(r.in_c));
  return rec;
}

OutputRecord critical_record(const CriticalResult& r, const RenderOptions& opt) {
  OutputRecord rec = table_row(r, opt);
  rec.add("status", r.search.resolved ? "resolved" : "depth_limited");
  rec.add("p_prime_exact", r.p_prime.symbolic());
  rec.add("p_double_prime_exact", r.p_double_prime.symbolic());
  rec.add("p_exact", r.p.symbolic());
  rec.add("P_exact", r.P.symbolic());
  const auto& br = r.search.m_bracket;
  rec.add("m_bracket_lo", br ? approx_string(BoundedReal(br->lo), opt) : "");
  rec.add("m_bracket_hi", br ? approx_string(BoundedReal(br->hi), opt) : "");
  return rec;
}

std::vector<OutputRecord> qc_records(const CriticalBase& cb, const RenderOptions& opt) {
  std::vector<OutputRecord> rows;
  for (const auto& c : cb.conditions) {
    OutputRecord rec;
    rec.add("kind", cond_string(c.kind));
    rec.add("position", std::to_string(c.position));
    rec.add("digit", exact_rational_string(c.digit));
    rec.add("root", approx_string(c.root, opt));
    rec.add("root_exact", c.root.symbolic());
    rows.push_back(std::move(rec));
  }
  OutputRecord rec;
  rec.add("kind", "critical");
  rec.add("position", "");
  rec.add("digit", "");
  rec.add("root", approx_string(cb.q_c, opt));
  rec.add("root_exact", cb.q_c.symbolic());
  rows.push_back(std::move(rec));
  return rows;
}

OutputRecord unique_record(const Rational& q, const ExpansionReport& rep,
                           const RenderOptions&) {
  OutputRecord rec;
  rec.add("base", exact_rational_string(q));
  rec.add("unique", rep.unique ? "true" : "false");
  const auto& v = rep.first_violation;
  rec.add("violation_position", v ? std::to_string(v->position) : "");
  rec.add("violation_kind", v ? cond_string(v->kind) : "");
  return rec;
}

OutputRecord interval_record(const AdmissibleSeq& d, const ComponentData& cd,
                             const RenderOptions& opt) {
  OutputRecord rec;
  rec.add("h", h_string(d));
  rec.add("d_period", d_period_string(d));
  rec.add("m_d", approx_string(cd.m_lo, opt));
  rec.add("m_d_exact", cd.m_lo.symbolic());
  rec.add("mu_d", approx_string(cd.mu, opt));
  rec.add("mu_d_exact", cd.mu.symbolic());
  rec.add("M_d", approx_string(cd.m_hi, opt));
  rec.add("M_d_exact", cd.m_hi.symbolic());
  return rec;
}

std::vector<OutputRecord> expansion_records(const EnumerationResult& er,
                                            const RenderOptions&) {
  std::vector<OutputRecord> rows;
  const std::string overflow = er.overflow ? "true" : "false";
  for (size_t i = 0; i < er.prefixes.size(); ++i) {
    OutputRecord rec;
    rec.add("index", std::to_string(i + 1));
    std::string digits;
    for (size_t j = 0; j < er.prefixes[i].size(); ++j) {
      if (j) digits += ',';
      digits += exact_rational_string(er.prefixes[i][j]);
    }
    rec.add("digits", digits);
    rec.add("overflow", overflow);
    rows.push_back(std::move(rec));
  }
  return rows;
}

OutputRecord cantor_record(const Rational& m, Tristate t, const RenderOptions&) {
  OutputRecord rec;
  rec.add("m", exact_rational_string(m));
  rec.add("in_C", tristate_string(t));
  return rec;
}

}  // namespace ggr
