#pragma once

#include "ggr/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ggr {

// Eventually periodic infinite sequence over rational digits, stored as
// preperiod + period in normal form: the period is primitive (not a power
// of a shorter word) and the preperiod is minimal (its last digit differs
// from the period's last digit, or it is empty). Normal form is unique per
// sequence, so equality is structural.
class EpWord {
 public:
  EpWord(std::vector<Rational> pre, std::vector<Rational> per);
  static EpWord constant(const Rational& digit) { return EpWord({}, {digit}); }

  const std::vector<Rational>& preperiod() const { return pre_; }
  const std::vector<Rational>& period() const { return per_; }
  const Rational& at(size_t i) const {  // 0-based position
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }

  bool operator==(const EpWord& o) const {
    return pre_ == o.pre_ && per_ == o.per_;
  }
  bool operator!=(const EpWord& o) const { return !(*this == o); }
  // Lexicographic three-way order, decided within a window of length
  // max(|pre|) + 2*lcm(|per|) + 1.
  int compare(const EpWord& o) const;

  EpWord shifted(size_t n) const;                // drop the first n digits
  EpWord with_prefix(const Rational& d) const;   // prepend one digit
  EpWord map(const std::function<Rational(const Rational&)>& f) const;

  bool is_binary() const;  // all digits in {0,1}
  std::string str() const;  // "pre(per)", digits comma-separated

 private:
  std::vector<Rational> pre_, per_;
};

// Blocks S(j,1), S(j,0) of the substitution defined by h_1..h_j >= 1:
//   S(0,1) = 1,  S(0,0) = 0,
//   S(j,1) = S(j-1,1)^{h_j}   S(j-1,0),
//   S(j,0) = S(j-1,1)^{h_j-1} S(j-1,0).
inline constexpr size_t kWordCap = size_t(1) << 22;

std::vector<uint8_t> build_block(const std::vector<uint64_t>& h, size_t j,
                                 int bit, size_t cap = kWordCap);
Integer block_length(const std::vector<uint64_t>& h, size_t j, int bit);

enum class Tail { PurePeriodic, OnesTail, Prefix };

// Canonical parameterization of an admissible sequence by its h-list.
// PurePeriodic with N entries encodes S(N,1)^inf (N = 0 gives 1^inf);
// OnesTail encodes the sequence with h-parameters h_1..h_N 1 1 1..., whose
// word is S(N,1) S(N,0)^inf (N = 0 gives 10^inf); Prefix records only that
// the sequence begins with S(N,1).
struct HSpec {
  std::vector<uint64_t> h;
  Tail tail = Tail::PurePeriodic;

  bool operator==(const HSpec&) const = default;
  // OnesTail lists ending in 1 denote the same sequence with the 1 dropped;
  // canonical form has h empty or h_N >= 2. Other tails are unchanged.
  HSpec canonical() const;
};

// Requires PurePeriodic or OnesTail; throws on Prefix. May throw
// std::length_error past the cap.
EpWord materialize(const HSpec& hs, size_t cap = kWordCap);

enum class SeqKind { Zero, Finite, InfiniteResolved, InfinitePrefix };

// An admissible binary sequence: one satisfying
//   0 d_2 d_3 ... <= (d_{n+i}) <= d_1 d_2 d_3 ...   for all n >= 0.
// Zero is 0^inf; Finite is S(N,1)^inf; InfiniteResolved has h-parameters
// ending in 1 1 1...; InfinitePrefix is a depth-limited partial answer.
// word is materialized when the length cap allows (never for Prefix).
struct AdmissibleSeq {
  SeqKind kind = SeqKind::Zero;
  HSpec hs;
  std::optional<EpWord> word;

  static AdmissibleSeq zero();
  static AdmissibleSeq finite(std::vector<uint64_t> h);
  static AdmissibleSeq ones_tail(std::vector<uint64_t> h);  // canonicalizes
  static AdmissibleSeq prefix_only(std::vector<uint64_t> h);

  size_t depth() const { return hs.h.size(); }
  // 1^inf, representable as Finite with empty h; rejected by operations
  // carrying a "d != 1^inf" precondition.
  bool is_all_ones() const {
    return kind == SeqKind::Finite && hs.h.empty();
  }
};

bool is_admissible(const EpWord& w);

// Recovers the HSpec of an admissible eventually periodic word by run-length
// peeling; self-validating (throws std::invalid_argument on words that are
// not admissible). Depth cannot be exhausted for eventually periodic input
// of sane period; hitting max_depth throws std::runtime_error.
AdmissibleSeq classify(const EpWord& w, size_t max_depth = 64);

// The derived sequence d': for finite type, the shift of d by
// l_N - l_{N-1} + 1 positions; for Zero and InfiniteResolved, the shift by
// one. Rejects 1^inf and Prefix kinds.
EpWord derived(const AdmissibleSeq& d);

// Smallest admissible sequence strictly above a finite-type d: h-parameters
// h_1 .. h_{N-1} (h_N + 1) 1 1 1..., whose word is S(N-1,1) d. Zero is
// accepted (its successor is 10^inf); 1^inf and non-finite kinds throw.
AdmissibleSeq successor(const AdmissibleSeq& d);

}  // namespace ggr
