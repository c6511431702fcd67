// ggr: critical bases for ternary alphabets, component intervals of the
// parameter m, uniqueness tests, and expansion enumeration, with CSV or
// JSON output.

#include <CLI11.hpp>

#include "ggr/critical.hpp"
#include "ggr/expand.hpp"
#include "ggr/format.hpp"
#include "ggr/rational.hpp"
#include "ggr/words.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace ggr;

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto r = parse_rational(text);
  if (!r) throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  return *r;
}

// Comma-separated rational digits; "-" or "" is the empty list.
std::vector<Rational> parse_digit_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  if (text.empty() || text == "-") return out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - start);
    out.push_back(parse_rational_arg(item, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<uint64_t> parse_h_list(const std::string& text) {
  std::vector<uint64_t> out;
  for (const auto& d : parse_digit_list(text, "h")) {
    if (!is_integer(d) || sgn(d) <= 0)
      throw std::invalid_argument("h: entries must be positive integers");
    if (!d.get_num().fits_ulong_p())
      throw std::invalid_argument("h: entry too large");
    out.push_back(d.get_num().get_ui());
  }
  return out;
}

struct GlobalOpts {
  std::string tol_text = "1/1000000000000";
  std::string format = "csv";
  int digits = 12;
  size_t max_depth = 64;

  Rational tol() const {
    Rational t = parse_rational_arg(tol_text, "--tol");
    if (sgn(t) <= 0) throw std::invalid_argument("--tol: must be positive");
    return t;
  }
  RenderOptions render_opts() const { return RenderOptions{digits}; }
  OutputFormat output_format() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
};

void emit(const std::vector<OutputRecord>& rows, const GlobalOpts& g) {
  std::string text = render(rows, g.output_format());
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

int exit_code_of(const CriticalResult& r) { return r.search.resolved ? 0 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical bases for expansions over three-digit alphabets"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--tol", g.tol_text,
                 "Enclosure width for inexact values (rational or decimal)")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--digits", g.digits, "Fractional digits in decimal output")
      ->check(CLI::Range(0, 80))
      ->capture_default_str();
  app.add_option("--max-depth", g.max_depth,
                 "Stage limit for the sequence search")
      ->check(CLI::Range(size_t(1), size_t(1) << 20))
      ->capture_default_str();

  int rc = 0;

  // critical <m>
  auto* c_cmd = app.add_subcommand(
      "critical", "Critical base p_m on the alphabet {0,1,m}");
  auto c_m = std::make_shared<std::string>();
  auto c_small = std::make_shared<bool>(false);
  c_cmd->add_option("m", *c_m, "Largest digit m")->required();
  c_cmd->add_flag("--allow-small-m", *c_small,
                  "Accept m down to (1+sqrt(5))/2 instead of 2");
  c_cmd->callback([&, c_m, c_small] {
    Rational m = parse_rational_arg(*c_m, "m");
    CriticalResult r = critical_for_m(m, g.tol(), g.max_depth, *c_small);
    if (!r.search.resolved)
      std::cerr << "search depth-limited after " << g.max_depth << " stages\n";
    emit({critical_record(r, g.render_opts())}, g);
    rc = exit_code_of(r);
  });

  // table <m_lo> <m_hi>
  auto* t_cmd = app.add_subcommand(
      "table", "Critical-base rows for every integer m in [m_lo, m_hi]");
  auto t_lo = std::make_shared<long>();
  auto t_hi = std::make_shared<long>();
  t_cmd->add_option("m_lo", *t_lo, "First integer m (>= 2)")->required();
  t_cmd->add_option("m_hi", *t_hi, "Last integer m")->required();
  t_cmd->callback([&, t_lo, t_hi] {
    if (*t_lo < 2 || *t_hi < *t_lo)
      throw std::invalid_argument("table: need 2 <= m_lo <= m_hi");
    std::vector<OutputRecord> rows;
    for (const auto& r : table_rows(*t_lo, *t_hi, g.tol()))
      rows.push_back(table_row(r, g.render_opts()));
    emit(rows, g);
  });

  // unique <base> <alphabet> <preperiod> <period>
  auto* u_cmd = app.add_subcommand(
      "unique", "Is the expansion with the given digits unique in this base?");
  auto u_args = std::make_shared<std::vector<std::string>>(4);
  u_cmd->add_option("base", (*u_args)[0], "Base q in (1, q_max]")->required();
  u_cmd->add_option("alphabet", (*u_args)[1], "Comma-separated digits")->required();
  u_cmd->add_option("preperiod", (*u_args)[2], "Digits before the period, '-' if none")
      ->required();
  u_cmd->add_option("period", (*u_args)[3], "Repeating digits")->required();
  u_cmd->callback([&, u_args] {
    Rational q = parse_rational_arg((*u_args)[0], "base");
    Alphabet A(parse_digit_list((*u_args)[1], "alphabet"));
    EpWord c(parse_digit_list((*u_args)[2], "preperiod"),
             parse_digit_list((*u_args)[3], "period"));
    emit({unique_record(q, is_unique(c, q, A), g.render_opts())}, g);
  });

  // qc <alphabet> <preperiod> <period>
  auto* q_cmd = app.add_subcommand(
      "qc", "Critical base of one sequence: smallest base above which it is unique");
  auto q_args = std::make_shared<std::vector<std::string>>(3);
  q_cmd->add_option("alphabet", (*q_args)[0], "Comma-separated digits")->required();
  q_cmd->add_option("preperiod", (*q_args)[1], "Digits before the period, '-' if none")
      ->required();
  q_cmd->add_option("period", (*q_args)[2], "Repeating digits")->required();
  q_cmd->callback([&, q_args] {
    Alphabet A(parse_digit_list((*q_args)[0], "alphabet"));
    EpWord c(parse_digit_list((*q_args)[1], "preperiod"),
             parse_digit_list((*q_args)[2], "period"));
    CriticalBase cb = critical_base_of_sequence(c, A, g.tol());
    if (cb.clamped)
      std::cerr << "a condition root reached the upper bound q_max\n";
    emit(qc_records(cb, g.render_opts()), g);
  });

  // interval <h>
  auto* i_cmd = app.add_subcommand(
      "interval", "Component [m_d, M_d) and minimum point mu_d of a finite-type d");
  auto i_h = std::make_shared<std::string>();
  i_cmd->add_option("h_list", *i_h, "Comma-separated h-parameters; '' or '-' for 0^inf")
      ->required();
  i_cmd->callback([&, i_h] {
    std::vector<uint64_t> h = parse_h_list(*i_h);
    AdmissibleSeq d = h.empty() ? AdmissibleSeq::zero() : AdmissibleSeq::finite(h);
    emit({interval_record(d, component_interval(d, g.tol()), g.render_opts())}, g);
  });

  // curve <lo> <hi> <step>
  auto* v_cmd = app.add_subcommand(
      "curve", "Sample critical-base rows at m = lo, lo+step, ... up to hi");
  auto v_args = std::make_shared<std::vector<std::string>>(3);
  v_cmd->add_option("lo", (*v_args)[0], "First sample")->required();
  v_cmd->add_option("hi", (*v_args)[1], "Last sample bound")->required();
  v_cmd->add_option("step", (*v_args)[2], "Positive sample spacing")->required();
  v_cmd->callback([&, v_args] {
    Rational lo = parse_rational_arg((*v_args)[0], "lo");
    Rational hi = parse_rational_arg((*v_args)[1], "hi");
    Rational step = parse_rational_arg((*v_args)[2], "step");
    if (sgn(step) <= 0) throw std::invalid_argument("curve: step must be positive");
    std::vector<OutputRecord> rows;
    bool limited = false;
    for (const auto& r : curve_rows(lo, hi, step, g.tol(), g.max_depth)) {
      limited = limited || !r.search.resolved;
      rows.push_back(table_row(r, g.render_opts()));
    }
    if (limited) std::cerr << "some samples were depth-limited\n";
    emit(rows, g);
  });

  // expansions <x> <q> <alphabet>
  auto* e_cmd = app.add_subcommand(
      "expansions", "All digit prefixes extendable to an expansion of x in base q");
  auto e_args = std::make_shared<std::vector<std::string>>(3);
  auto e_depth = std::make_shared<size_t>(12);
  auto e_cap = std::make_shared<size_t>(100);
  e_cmd->add_option("x", (*e_args)[0], "Value to expand")->required();
  e_cmd->add_option("q", (*e_args)[1], "Base (rational, > 1)")->required();
  e_cmd->add_option("alphabet", (*e_args)[2], "Comma-separated digits")->required();
  e_cmd->add_option("--depth", *e_depth, "Prefix length")
      ->check(CLI::Range(size_t(1), size_t(64)))
      ->capture_default_str();
  e_cmd->add_option("--cap", *e_cap, "Maximum number of prefixes reported")
      ->check(CLI::Range(size_t(1), size_t(100000)))
      ->capture_default_str();
  e_cmd->callback([&, e_args, e_depth, e_cap] {
    Rational x = parse_rational_arg((*e_args)[0], "x");
    Rational q = parse_rational_arg((*e_args)[1], "q");
    Alphabet A(parse_digit_list((*e_args)[2], "alphabet"));
    EnumerationResult er = enumerate_expansions(x, q, A, *e_depth, *e_cap);
    if (er.overflow)
      std::cerr << "more than " << *e_cap << " prefixes exist; output truncated\n";
    emit(expansion_records(er, g.render_opts()), g);
  });

  // cantor <m>
  auto* k_cmd = app.add_subcommand(
      "cantor", "Does p_m reach its upper bound P_m at this m?");
  auto k_m = std::make_shared<std::string>();
  k_cmd->add_option("m", *k_m, "Parameter m >= 2")->required();
  k_cmd->callback([&, k_m] {
    Rational m = parse_rational_arg(*k_m, "m");
    Tristate t = in_cantor(m, g.max_depth);
    emit({cantor_record(m, t, g.render_opts())}, g);
    rc = t == Tristate::DepthLimited ? 2 : 0;
  });

  // g <alphabet>
  auto* g_cmd = app.add_subcommand(
      "g", "Critical base of a three-digit alphabet via its normalized m");
  auto g_a = std::make_shared<std::string>();
  g_cmd->add_option("alphabet", *g_a, "Three comma-separated digits")->required();
  g_cmd->callback([&, g_a] {
    Alphabet A(parse_digit_list(*g_a, "alphabet"));
    if (A.size() != 3) throw std::invalid_argument("g: need exactly 3 digits");
    CriticalResult r = ternary_G(A, g.tol(), g.max_depth);
    emit({critical_record(r, g.render_opts())}, g);
    rc = exit_code_of(r);
  });

  for (auto* sc : {c_cmd, t_cmd, u_cmd, q_cmd, i_cmd, v_cmd, e_cmd, k_cmd, g_cmd})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 is help/version
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
