#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggr/words.hpp"

#include <algorithm>
#include <vector>

using namespace ggr;

namespace {

std::vector<Rational> bits_to_digits(const std::vector<uint8_t>& bits) {
  std::vector<Rational> out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out.emplace_back(int(b));
  return out;
}

EpWord word_of(std::vector<uint8_t> pre, std::vector<uint8_t> per) {
  return EpWord(bits_to_digits(pre), bits_to_digits(per));
}

// Block order "A... < B...": the first difference occurs within the shorter
// length, so the comparison holds for every pair of continuations.
bool block_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool ends_with(const std::vector<uint8_t>& whole,
               const std::vector<uint8_t>& tail) {
  if (tail.size() > whole.size()) return false;
  return std::equal(tail.begin(), tail.end(), whole.end() - tail.size());
}

std::vector<std::vector<uint64_t>> h_lists(size_t max_len, uint64_t max_entry) {
  std::vector<std::vector<uint64_t>> out;
  std::vector<std::vector<uint64_t>> frontier = {{}};
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<uint64_t>> next;
    for (const auto& base : frontier)
      for (uint64_t e = 1; e <= max_entry; ++e) {
        auto l = base;
        l.push_back(e);
        out.push_back(l);
        next.push_back(std::move(l));
      }
    frontier = std::move(next);
  }
  return out;
}

// All binary eventually periodic words with the given size bounds, in the
// structural normal form EpWord imposes (duplicates collapse automatically).
std::vector<EpWord> binary_ep_words(size_t max_pre, size_t max_per) {
  std::vector<EpWord> out;
  for (size_t np = 0; np <= max_pre; ++np)
    for (uint32_t pm = 0; pm < (1u << np); ++pm)
      for (size_t nq = 1; nq <= max_per; ++nq)
        for (uint32_t qm = 0; qm < (1u << nq); ++qm) {
          std::vector<uint8_t> pre, per;
          for (size_t i = 0; i < np; ++i) pre.push_back((pm >> i) & 1);
          for (size_t i = 0; i < nq; ++i) per.push_back((qm >> i) & 1);
          EpWord w = word_of(pre, per);
          if (std::find(out.begin(), out.end(), w) == out.end())
            out.push_back(w);
        }
  return out;
}

}  // namespace

TEST_CASE("ep words are stored in a unique normal form") {
  // Period primitivity: a repeated period collapses.
  CHECK(word_of({1}, {1, 0, 1, 0}) == word_of({1}, {1, 0}));
  CHECK(word_of({}, {1, 1, 1}) == EpWord::constant(1));
  // Preperiod minimality: digits matching the rotating period are absorbed.
  CHECK(word_of({1, 0}, {1, 0}) == word_of({}, {1, 0}));
  CHECK(word_of({0}, {1, 0}) == word_of({}, {0, 1}));
  // A genuinely preperiodic word keeps its preperiod.
  EpWord w = word_of({1, 1}, {0});
  CHECK(w.preperiod().size() == 2);
  CHECK(w.period().size() == 1);
  CHECK_THROWS_AS(EpWord({}, {}), std::invalid_argument);
}

TEST_CASE("ep word indexing, shifting and prefixing") {
  EpWord w = word_of({1, 1}, {0, 1});  // 11 (01)^inf
  CHECK(w.at(0) == 1);
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 0);
  CHECK(w.at(3) == 1);
  CHECK(w.at(4) == 0);
  CHECK(w.shifted(1) == word_of({1}, {0, 1}));
  CHECK(w.shifted(2) == word_of({}, {0, 1}));
  CHECK(w.shifted(3) == word_of({}, {1, 0}));
  CHECK(w.shifted(4) == word_of({}, {0, 1}));
  CHECK(w.with_prefix(Rational(0)) == word_of({0, 1, 1}, {0, 1}));
  // map substitutes digit values.
  EpWord m = word_of({}, {1, 0}).map(
      [](const Rational& d) { return d == 1 ? Rational(3) : Rational(1); });
  CHECK(m == EpWord({}, {Rational(3), Rational(1)}));
  CHECK(word_of({}, {1, 0}).is_binary());
  CHECK(!m.is_binary());
  CHECK(word_of({1}, {1, 0}).str() == "1(1,0)");
}

TEST_CASE("ep word comparison is lexicographic") {
  EpWord zero = EpWord::constant(0);
  EpWord ones = EpWord::constant(1);
  EpWord w10 = word_of({}, {1, 0});
  EpWord w110 = word_of({}, {1, 1, 0});
  EpWord w100inf = word_of({1}, {0});
  CHECK(zero.compare(w10) < 0);
  CHECK(w10.compare(w110) < 0);
  CHECK(w110.compare(ones) < 0);
  CHECK(w100inf.compare(w10) < 0);   // 1000... < 1010...
  CHECK(w10.compare(w10) == 0);
  CHECK(w110.compare(w10) > 0);
  // Comparison across different period lengths.
  CHECK(word_of({}, {1, 1, 0, 1, 0}).compare(word_of({}, {1, 1, 0})) < 0);
}

TEST_CASE("block recursion produces the expected small blocks") {
  std::vector<uint64_t> h = {2, 1};
  CHECK(build_block(h, 0, 1) == std::vector<uint8_t>{1});
  CHECK(build_block(h, 0, 0) == std::vector<uint8_t>{0});
  CHECK(build_block(h, 1, 1) == std::vector<uint8_t>{1, 1, 0});
  CHECK(build_block(h, 1, 0) == std::vector<uint8_t>{1, 0});
  CHECK(build_block(h, 2, 1) == std::vector<uint8_t>{1, 1, 0, 1, 0});
  CHECK(build_block(h, 2, 0) == std::vector<uint8_t>{1, 0});
  CHECK_THROWS_AS(build_block({0}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_block(h, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_block({3, 3, 3}, 3, 1, 10), std::length_error);
}

TEST_CASE("block identities hold for all small parameter lists") {
  for (const auto& h : h_lists(4, 3)) {
    size_t n = h.size();
    for (size_t j = 0; j <= n; ++j) {
      auto s1 = build_block(h, j, 1);
      auto s0 = build_block(h, j, 0);
      CHECK(Integer(s1.size()) == block_length(h, j, 1));
      CHECK(Integer(s0.size()) == block_length(h, j, 0));

      // S(j,1) = 1 S(1,0) S(2,0) ... S(j,0).
      std::vector<uint8_t> cat = {1};
      for (size_t k = 1; k <= j; ++k) {
        auto sk0 = build_block(h, k, 0);
        cat.insert(cat.end(), sk0.begin(), sk0.end());
      }
      CHECK(s1 == cat);

      // S(j,0) < S(j,1) as blocks: first difference within the overlap.
      CHECK(block_less(s0, s1));

      if (j >= 1) {
        // S(0,0) S(1,0) ... S(j-1,0) is a suffix of S(j,1), and of S(j,0)
        // when h_j >= 2.
        std::vector<uint8_t> low;
        for (size_t k = 0; k < j; ++k) {
          auto sk0 = build_block(h, k, 0);
          low.insert(low.end(), sk0.begin(), sk0.end());
        }
        CHECK(ends_with(s1, low));
        if (h[j - 1] >= 2) CHECK(ends_with(s0, low));
      }
    }
  }
}

TEST_CASE("every proper suffix of a block is dominated by the block") {
  auto lists = h_lists(3, 3);
  lists.push_back({3, 1, 2, 1});
  lists.push_back({1, 2, 1, 3});
  for (const auto& h : lists) {
    for (size_t j = 0; j <= h.size(); ++j) {
      for (int bit : {1, 0}) {
        auto b = build_block(h, j, bit);
        for (size_t k = 1; k < b.size(); ++k) {
          std::vector<uint8_t> suffix(b.begin() + k, b.end());
          // Strict domination: suffixes are never prefixes of the block.
          CHECK(block_less(suffix, b));
        }
      }
    }
  }
}

TEST_CASE("parameter lists canonicalize by dropping trailing ones tails") {
  CHECK(HSpec{{2, 1}, Tail::OnesTail}.canonical() ==
        HSpec{{2}, Tail::OnesTail});
  CHECK(HSpec{{2, 1, 1}, Tail::OnesTail}.canonical() ==
        HSpec{{2}, Tail::OnesTail});
  CHECK(HSpec{{1, 1}, Tail::OnesTail}.canonical() == HSpec{{}, Tail::OnesTail});
  CHECK(HSpec{{2, 1}, Tail::PurePeriodic}.canonical() ==
        HSpec{{2, 1}, Tail::PurePeriodic});
  // Canonicalization preserves the denoted sequence.
  CHECK(materialize(HSpec{{2, 1}, Tail::OnesTail}) ==
        materialize(HSpec{{2}, Tail::OnesTail}));
  CHECK(materialize(HSpec{{1}, Tail::OnesTail}) ==
        materialize(HSpec{{}, Tail::OnesTail}));
  CHECK(materialize(HSpec{{}, Tail::OnesTail}) == word_of({1}, {0}));
  CHECK_THROWS_AS(materialize(HSpec{{2}, Tail::Prefix}),
                  std::invalid_argument);
}

TEST_CASE("admissibility matches the two-sided shift condition") {
  CHECK(is_admissible(EpWord::constant(0)));
  CHECK(is_admissible(EpWord::constant(1)));
  CHECK(is_admissible(word_of({}, {1, 0})));
  CHECK(is_admissible(word_of({}, {1, 1, 1, 0})));
  CHECK(is_admissible(word_of({}, {1, 0, 0, 0})));
  CHECK(is_admissible(word_of({}, {1, 1, 0, 1, 0})));
  CHECK(is_admissible(word_of({1}, {0})));
  CHECK(is_admissible(word_of({1, 1, 0, 1, 1, 0, 1, 0}, {1, 1, 0, 1, 0})));

  CHECK(!is_admissible(word_of({}, {1, 1, 0, 1})));     // tail 1110... too big
  CHECK(!is_admissible(word_of({}, {1, 0, 1, 1})));     // tail 11... too big
  CHECK(!is_admissible(word_of({0}, {1})));             // tail 1^inf too big
  CHECK(!is_admissible(word_of({}, {1, 0, 0, 1, 1, 0})));
  CHECK(!is_admissible(word_of({1, 0}, {1, 1, 0})));    // 10(110): tail < low
  CHECK(!is_admissible(EpWord::constant(2)));           // not binary
}

TEST_CASE("admissibility agrees with the block characterization on all small words") {
  // Admissible binary ep words are exactly 0^inf, S(N,1)^inf, and the
  // ones-tail words S(N,1) S(N,0)^inf; verify against classify().
  for (const auto& w : binary_ep_words(2, 6)) {
    bool adm = is_admissible(w);
    bool classified = true;
    try {
      classify(w);
    } catch (const std::invalid_argument&) {
      classified = false;
    }
    CAPTURE(w.str());
    CHECK(adm == classified);
  }
}

TEST_CASE("classification inverts materialization") {
  for (const auto& h : h_lists(4, 3)) {
    {
      AdmissibleSeq d = AdmissibleSeq::finite(h);
      REQUIRE(d.word.has_value());
      AdmissibleSeq back = classify(*d.word);
      CHECK(back.kind == SeqKind::Finite);
      CHECK(back.hs == d.hs);
    }
    {
      AdmissibleSeq d = AdmissibleSeq::ones_tail(h);
      REQUIRE(d.word.has_value());
      AdmissibleSeq back = classify(*d.word);
      CHECK(back.kind == SeqKind::InfiniteResolved);
      CHECK(back.hs == d.hs);  // factory already canonicalizes
      CHECK(back.hs == HSpec{h, Tail::OnesTail}.canonical());
    }
  }
  AdmissibleSeq z = classify(EpWord::constant(0));
  CHECK(z.kind == SeqKind::Zero);
  AdmissibleSeq o = classify(EpWord::constant(1));
  CHECK(o.kind == SeqKind::Finite);
  CHECK(o.hs.h.empty());
  AdmissibleSeq t = classify(word_of({1}, {0}));
  CHECK(t.kind == SeqKind::InfiniteResolved);
  CHECK(t.hs == HSpec{{}, Tail::OnesTail});
  CHECK_THROWS_AS(classify(word_of({}, {1, 1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(classify(EpWord::constant(2)), std::invalid_argument);
}

TEST_CASE("derived sequence has the block product structure") {
  for (const auto& h : h_lists(3, 3)) {
    AdmissibleSeq d = AdmissibleSeq::finite(h);
    size_t n = h.size();
    EpWord dw = *d.word;
    EpWord dp = derived(d);

    // d' = S(1,0) ... S(N-1,0) S(N,1)^inf.
    std::vector<uint8_t> pre;
    for (size_t k = 1; k < n; ++k) {
      auto sk0 = build_block(h, k, 0);
      pre.insert(pre.end(), sk0.begin(), sk0.end());
    }
    CHECK(dp == word_of(pre, build_block(h, n, 1)));

    // The shift of d by one = S(1,0) ... S(N-1,0) S(N,0) S(N,1)^inf.
    auto sn0 = build_block(h, n, 0);
    std::vector<uint8_t> pre2 = pre;
    pre2.insert(pre2.end(), sn0.begin(), sn0.end());
    CHECK(dw.shifted(1) == word_of(pre2, build_block(h, n, 1)));

    // The derived sequence equals the shift of d by 1 + l_N - l_{N-1}.
    Integer shift = 1 + block_length(h, n, 1) -
                    block_length(h, n >= 1 ? n - 1 : 0, 1);
    CHECK(dp == dw.shifted(shift.get_ui()));
  }
}

TEST_CASE("derived sequence dominates its own tails at zero positions") {
  // At every position n with d'_n = 0: (d'_{n+i}) >= (d'_i) > (d_{1+i})
  // for finite type, and (d'_{n+i}) >= (d'_i) in the other cases.
  auto check_tail_domination = [](const AdmissibleSeq& d, bool finite_type) {
    EpWord dp = derived(d);
    size_t window = dp.preperiod().size() + 2 * dp.period().size();
    for (size_t n = 1; n <= window; ++n) {
      if (dp.at(n - 1) != 0) continue;
      CHECK(dp.shifted(n).compare(dp) >= 0);
    }
    if (finite_type) CHECK(dp.compare(d.word->shifted(1)) > 0);
  };
  for (const auto& h : h_lists(3, 3))
    check_tail_domination(AdmissibleSeq::finite(h), true);
  for (const auto& h : h_lists(2, 3))
    check_tail_domination(AdmissibleSeq::ones_tail(h), false);
  check_tail_domination(AdmissibleSeq::zero(), false);
}

TEST_CASE("derived sequence is a fixed point exactly for uniform run words") {
  CHECK(derived(AdmissibleSeq::zero()) == EpWord::constant(0));
  for (const auto& h : h_lists(3, 3)) {
    AdmissibleSeq d = AdmissibleSeq::finite(h);
    bool fixed = derived(d) == *d.word;
    CHECK(fixed == (h.size() <= 1));
  }
  CHECK_THROWS_AS(derived(AdmissibleSeq::finite({})), std::invalid_argument);
  CHECK_THROWS_AS(derived(AdmissibleSeq::prefix_only({2})),
                  std::invalid_argument);
}

TEST_CASE("successor is the smallest admissible sequence above a finite one") {
  for (const auto& h : h_lists(3, 3)) {
    AdmissibleSeq d = AdmissibleSeq::finite(h);
    AdmissibleSeq s = successor(d);
    CHECK(s.kind == SeqKind::InfiniteResolved);

    // Parameters h_1 .. h_{N-1} (h_N + 1) with a ones tail.
    std::vector<uint64_t> hp = h;
    hp.back() += 1;
    CHECK(s.hs == HSpec{hp, Tail::OnesTail});

    // Word form S(N-1,1) d, strictly above d.
    auto head = build_block(h, h.size() - 1, 1);
    std::vector<Rational> pre = bits_to_digits(head);
    EpWord expect(pre, bits_to_digits(build_block(h, h.size(), 1)));
    REQUIRE(s.word.has_value());
    CHECK(*s.word == expect);
    CHECK(s.word->compare(*d.word) > 0);

    // The successor has the same derived sequence.
    CHECK(derived(s) == derived(d));
  }
  AdmissibleSeq sz = successor(AdmissibleSeq::zero());
  CHECK(sz.hs == HSpec{{}, Tail::OnesTail});
  CHECK(*sz.word == word_of({1}, {0}));
  CHECK_THROWS_AS(successor(AdmissibleSeq::finite({})), std::invalid_argument);
  CHECK_THROWS_AS(successor(AdmissibleSeq::ones_tail({2})),
                  std::invalid_argument);
}

TEST_CASE("no sequence fits strictly inside the shift corridor of d") {
  // For admissible d, no word c has all its tails strictly between
  // 0 d_2 d_3 ... and d_1 d_2 d_3 ...; a violation always occurs within
  // the first |pre| + |per| shifts of c.
  std::vector<EpWord> dws = {
      EpWord::constant(0), EpWord::constant(1),
      *AdmissibleSeq::finite({1}).word,    *AdmissibleSeq::finite({2}).word,
      *AdmissibleSeq::finite({1, 1}).word, *AdmissibleSeq::finite({2, 2}).word,
      *AdmissibleSeq::finite({2, 1}).word, *AdmissibleSeq::ones_tail({}).word,
      *AdmissibleSeq::ones_tail({2}).word};
  auto cs = binary_ep_words(2, 6);
  for (const auto& d : dws) {
    EpWord low = d.shifted(1).with_prefix(Rational(0));
    for (const auto& c : cs) {
      size_t shifts = c.preperiod().size() + c.period().size();
      bool violated = false;
      for (size_t n = 1; n <= shifts && !violated; ++n) {
        EpWord tail = c.shifted(n);
        violated = !(low.compare(tail) < 0 && tail.compare(d) < 0);
      }
      CAPTURE(d.str());
      CAPTURE(c.str());
      CHECK(violated);
    }
  }
}

TEST_CASE("no sequence fits strictly between the derived corridor bounds") {
  // For admissible d != 1^inf, no word c has all its tails strictly
  // between 0 d' and 1 d'.
  std::vector<AdmissibleSeq> ds = {
      AdmissibleSeq::zero(),           AdmissibleSeq::finite({1}),
      AdmissibleSeq::finite({2}),      AdmissibleSeq::finite({1, 1}),
      AdmissibleSeq::finite({2, 2}),   AdmissibleSeq::finite({2, 1}),
      AdmissibleSeq::ones_tail({}),    AdmissibleSeq::ones_tail({2})};
  auto cs = binary_ep_words(2, 6);
  for (const auto& d : ds) {
    EpWord dp = derived(d);
    EpWord low = dp.with_prefix(Rational(0));
    EpWord high = dp.with_prefix(Rational(1));
    for (const auto& c : cs) {
      size_t shifts = c.preperiod().size() + c.period().size();
      bool violated = false;
      for (size_t n = 1; n <= shifts && !violated; ++n) {
        EpWord tail = c.shifted(n);
        violated = !(low.compare(tail) < 0 && tail.compare(high) < 0);
      }
      CAPTURE(dp.str());
      CAPTURE(c.str());
      CHECK(violated);
    }
  }
}
