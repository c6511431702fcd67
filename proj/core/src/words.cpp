#include "ggr/words.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ggr {

EpWord::EpWord(std::vector<Rational> pre, std::vector<Rational> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("EpWord: empty period");
  size_t L = per_.size();
  for (size_t d = 1; d <= L / 2; ++d) {
    if (L % d) continue;
    bool repeats = true;
    for (size_t i = d; i < L && repeats; ++i) repeats = per_[i] == per_[i - d];
    if (repeats) {
      per_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

int EpWord::compare(const EpWord& o) const {
  size_t l = std::lcm(per_.size(), o.per_.size());
  if (l > kWordCap) throw std::length_error("EpWord::compare: window too large");
  size_t window = std::max(pre_.size(), o.pre_.size()) + 2 * l + 1;
  for (size_t i = 0; i < window; ++i) {
    int c = cmp(at(i), o.at(i));
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

EpWord EpWord::shifted(size_t n) const {
  if (n <= pre_.size())
    return EpWord({pre_.begin() + static_cast<ptrdiff_t>(n), pre_.end()}, per_);
  size_t r = (n - pre_.size()) % per_.size();
  std::vector<Rational> p(per_.begin() + static_cast<ptrdiff_t>(r), per_.end());
  p.insert(p.end(), per_.begin(), per_.begin() + static_cast<ptrdiff_t>(r));
  return EpWord({}, std::move(p));
}

EpWord EpWord::with_prefix(const Rational& d) const {
  std::vector<Rational> p;
  p.reserve(pre_.size() + 1);
  p.push_back(d);
  p.insert(p.end(), pre_.begin(), pre_.end());
  return EpWord(std::move(p), per_);
}

EpWord EpWord::map(const std::function<Rational(const Rational&)>& f) const {
  std::vector<Rational> p, q;
  p.reserve(pre_.size());
  q.reserve(per_.size());
  for (const auto& d : pre_) p.push_back(f(d));
  for (const auto& d : per_) q.push_back(f(d));
  return EpWord(std::move(p), std::move(q));
}

bool EpWord::is_binary() const {
  auto ok = [](const Rational& d) { return d == 0 || d == 1; };
  for (const auto& d : pre_)
    if (!ok(d)) return false;
  for (const auto& d : per_)
    if (!ok(d)) return false;
  return true;
}

std::string EpWord::str() const {
  auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i].get_str();
    }
    return s;
  };
  return join(pre_) + "(" + join(per_) + ")";
}

std::vector<uint8_t> build_block(const std::vector<uint64_t>& h, size_t j,
                                 int bit, size_t cap) {
  if (j > h.size()) throw std::invalid_argument("build_block: j exceeds h");
  for (size_t i = 0; i < j; ++i)
    if (h[i] < 1) throw std::invalid_argument("build_block: h entries must be >= 1");
  std::vector<uint8_t> one = {1}, zero = {0};
  for (size_t i = 0; i < j; ++i) {
    if (h[i] > cap || one.size() * h[i] + zero.size() > cap)
      throw std::length_error("build_block: word length cap exceeded");
    std::vector<uint8_t> n1, n0;
    n1.reserve(one.size() * h[i] + zero.size());
    for (uint64_t k = 0; k < h[i]; ++k) n1.insert(n1.end(), one.begin(), one.end());
    n1.insert(n1.end(), zero.begin(), zero.end());
    n0.reserve(one.size() * (h[i] - 1) + zero.size());
    for (uint64_t k = 0; k + 1 < h[i]; ++k) n0.insert(n0.end(), one.begin(), one.end());
    n0.insert(n0.end(), zero.begin(), zero.end());
    one = std::move(n1);
    zero = std::move(n0);
  }
  return bit ? one : zero;
}

Integer block_length(const std::vector<uint64_t>& h, size_t j, int bit) {
  if (j > h.size()) throw std::invalid_argument("block_length: j exceeds h");
  Integer l1 = 1, l0 = 1;
  for (size_t i = 0; i < j; ++i) {
    if (h[i] < 1) throw std::invalid_argument("block_length: h entries must be >= 1");
    Integer n1 = h[i] * l1 + l0;
    Integer n0 = (h[i] - 1) * l1 + l0;
    l1 = n1;
    l0 = n0;
  }
  return bit ? l1 : l0;
}

HSpec HSpec::canonical() const {
  HSpec c = *this;
  if (c.tail == Tail::OnesTail)
    while (!c.h.empty() && c.h.back() == 1) c.h.pop_back();
  return c;
}

namespace {

std::vector<Rational> to_digits(const std::vector<uint8_t>& bits) {
  std::vector<Rational> d;
  d.reserve(bits.size());
  for (uint8_t b : bits) d.emplace_back(static_cast<int>(b));
  return d;
}

}  // namespace

EpWord materialize(const HSpec& hs, size_t cap) {
  const size_t n = hs.h.size();
  switch (hs.tail) {
    case Tail::PurePeriodic:
      return EpWord({}, to_digits(build_block(hs.h, n, 1, cap)));
    case Tail::OnesTail:
      return EpWord(to_digits(build_block(hs.h, n, 1, cap)),
                    to_digits(build_block(hs.h, n, 0, cap)));
    case Tail::Prefix:
      throw std::invalid_argument("materialize: Prefix tail has no full word");
  }
  throw std::logic_error("materialize: bad tail");
}

namespace {

std::optional<EpWord> try_materialize(const HSpec& hs) {
  try {
    return materialize(hs);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

}  // namespace

AdmissibleSeq AdmissibleSeq::zero() {
  return {SeqKind::Zero, HSpec{{}, Tail::PurePeriodic}, EpWord::constant(0)};
}

AdmissibleSeq AdmissibleSeq::finite(std::vector<uint64_t> h) {
  HSpec hs{std::move(h), Tail::PurePeriodic};
  auto w = try_materialize(hs);
  return {SeqKind::Finite, std::move(hs), std::move(w)};
}

AdmissibleSeq AdmissibleSeq::ones_tail(std::vector<uint64_t> h) {
  HSpec hs = HSpec{std::move(h), Tail::OnesTail}.canonical();
  auto w = try_materialize(hs);
  return {SeqKind::InfiniteResolved, std::move(hs), std::move(w)};
}

AdmissibleSeq AdmissibleSeq::prefix_only(std::vector<uint64_t> h) {
  return {SeqKind::InfinitePrefix, HSpec{std::move(h), Tail::Prefix}, std::nullopt};
}

bool is_admissible(const EpWord& w) {
  if (!w.is_binary()) return false;
  EpWord low = w.shifted(1).with_prefix(0);
  size_t shifts = w.preperiod().size() + 2 * w.period().size();
  for (size_t n = 0; n <= shifts; ++n) {
    EpWord tail = w.shifted(n);
    if (tail.compare(w) > 0) return false;
    if (tail.compare(low) < 0) return false;
  }
  return true;
}

namespace {

struct Peel {
  uint64_t h;
  EpWord stream;
};

[[noreturn]] void reject(const EpWord& w) {
  throw std::invalid_argument("classify: word is not admissible: " + w.str());
}

// One level of run-length peeling: the word must decompose into tokens
// 1^{h} 0 and 1^{h-1} 0 where h is the initial run of 1s; the token bits
// form the next-level word.
Peel peel(const EpWord& w) {
  const size_t s = w.preperiod().size(), t = w.period().size();
  bool period_has_zero = false;
  for (const auto& d : w.period()) period_has_zero |= d == 0;
  if (!period_has_zero) reject(w);  // ends in 1^inf but is not 1^inf

  uint64_t h = 0;
  while (w.at(h) == 1) ++h;  // bounded: a 0 occurs within s + t positions
  if (h == 0) reject(w);     // starts with 0 but is not 0^inf

  std::vector<Rational> tokens;
  std::map<size_t, size_t> seen;  // periodic-region phase -> token index
  size_t pos = 0;
  for (;;) {
    if (pos >= s) {
      size_t phase = (pos - s) % t;
      auto it = seen.find(phase);
      if (it != seen.end()) {
        std::vector<Rational> pre(tokens.begin(),
                                  tokens.begin() + static_cast<ptrdiff_t>(it->second));
        std::vector<Rational> per(tokens.begin() + static_cast<ptrdiff_t>(it->second),
                                  tokens.end());
        return {h, EpWord(std::move(pre), std::move(per))};
      }
      seen.emplace(phase, tokens.size());
    }
    uint64_t run = 0;
    while (w.at(pos) == 1) {
      ++run;
      ++pos;
      if (run > h) reject(w);
    }
    ++pos;  // consume the 0
    if (run == h)
      tokens.emplace_back(1);
    else if (run + 1 == h)
      tokens.emplace_back(0);
    else
      reject(w);
  }
}

}  // namespace

AdmissibleSeq classify(const EpWord& w, size_t max_depth) {
  if (!w.is_binary())
    throw std::invalid_argument("classify: word has digits outside {0,1}");
  const EpWord zero = EpWord::constant(0);
  const EpWord one = EpWord::constant(1);
  const EpWord one_zero = zero.with_prefix(1);  // 10^inf
  if (w == zero) return AdmissibleSeq::zero();

  std::vector<uint64_t> h;
  EpWord cur = w;
  for (size_t level = 0; level <= max_depth; ++level) {
    if (cur == one) return AdmissibleSeq::finite(h);
    if (cur == one_zero) return AdmissibleSeq::ones_tail(h);
    Peel p = peel(cur);
    h.push_back(p.h);
    cur = p.stream;
  }
  throw std::runtime_error("classify: depth exhausted on eventually periodic input");
}

EpWord derived(const AdmissibleSeq& d) {
  switch (d.kind) {
    case SeqKind::Zero:
      return EpWord::constant(0);
    case SeqKind::Finite: {
      if (d.is_all_ones())
        throw std::invalid_argument("derived: rejected for 1^inf");
      if (!d.word) throw std::runtime_error("derived: word not materialized");
      const size_t n = d.hs.h.size();
      // shift amount l_N - l_{N-1} + 1 reduced mod the (primitive) period
      Integer k = block_length(d.hs.h, n, 1) - block_length(d.hs.h, n - 1, 1) + 1;
      Integer len(static_cast<unsigned long>(d.word->period().size()));
      Integer r = k % len;
      return d.word->shifted(r.get_ui());
    }
    case SeqKind::InfiniteResolved:
      if (!d.word) throw std::runtime_error("derived: word not materialized");
      return d.word->shifted(1);
    case SeqKind::InfinitePrefix:
      throw std::invalid_argument("derived: Prefix kind has no derived sequence");
  }
  throw std::logic_error("derived: bad kind");
}

AdmissibleSeq successor(const AdmissibleSeq& d) {
  if (d.kind == SeqKind::Zero) return AdmissibleSeq::ones_tail({});
  if (d.kind != SeqKind::Finite)
    throw std::invalid_argument("successor: requires finite type");
  if (d.is_all_ones()) throw std::invalid_argument("successor: rejected for 1^inf");
  std::vector<uint64_t> h = d.hs.h;
  h.back() += 1;
  return AdmissibleSeq::ones_tail(std::move(h));
}

}  // namespace ggr
