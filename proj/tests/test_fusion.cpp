#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <thread>

#include "test_rings.hpp"
#include "wreath/errors.hpp"
#include "wreath/fusion.hpp"
#include "wreath/fusion_checks.hpp"
#include "wreath/set_algebra.hpp"

namespace wreath {
namespace {

using testing::lab;
using testing::w;
using Terms = std::map<Word, Multiplicity>;

// Brute-force oracle: enumerate every factorisation x = u·t, y = t'·v and
// keep those with t' equal to the reversed, dualised t.
Terms oracle_decompose(const BaseRing& ring, const Word& x, const Word& y) {
  Terms out;
  const auto xs = x.letters();
  const auto ys = y.letters();
  for (std::size_t cut = 0; cut <= xs.size(); ++cut) {
    std::vector<Label> u(xs.begin(), xs.begin() + cut);
    std::vector<Label> t(xs.begin() + cut, xs.end());
    if (t.size() > ys.size()) continue;
    std::vector<Label> tbar;
    for (std::size_t i = t.size(); i-- > 0;) tbar.push_back(ring.dual(t[i]));
    if (!std::equal(tbar.begin(), tbar.end(), ys.begin())) continue;
    std::vector<Label> v(ys.begin() + t.size(), ys.end());
    std::vector<Label> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    out[Word(uv)] += 1;
    if (u.empty() || v.empty()) continue;
    for (const auto& term : ring.fuse(u.back(), v.front())) {
      std::vector<Label> fused(u.begin(), u.end() - 1);
      fused.push_back(term.label);
      fused.insert(fused.end(), v.begin() + 1, v.end());
      out[Word(fused)] += term.mult;
    }
  }
  return out;
}

Terms terms_of(const Decomposition& d) { return Terms(d.begin(), d.end()); }

Terms expect_terms(const BaseRing& ring, std::initializer_list<std::pair<const char*, int>> t) {
  Terms out;
  for (const auto& [text, m] : t) out[w(ring, text)] = m;
  return out;
}

BaseRing rep_a4() {
  return load_ring_file(std::filesystem::path(WREATH_DATA_DIR) / "rings" / "rep_a4.json");
}

TEST(Decompose, TrivialBaseRecursion) {
  const BaseRing ring = make_trivial();
  EXPECT_EQ(terms_of(decompose(ring, w(ring, "(1)"), w(ring, "(1)"))),
            expect_terms(ring, {{"()", 1}, {"(1)", 1}, {"(1,1)", 1}}));
}

TEST(Decompose, UnitWord) {
  const BaseRing ring = testing::dual_z2();
  const Word y = w(ring, "(g,1,g)");
  EXPECT_EQ(terms_of(decompose(ring, Word(), y)), (Terms{{y, 1}}));
  EXPECT_EQ(terms_of(decompose(ring, y, Word())), (Terms{{y, 1}}));
}

TEST(Decompose, DualZ2Letter) {
  const BaseRing ring = testing::dual_z2();
  const Word g = w(ring, "(g)");
  EXPECT_EQ(terms_of(decompose(ring, g, g)),
            expect_terms(ring, {{"()", 1}, {"(e)", 1}, {"(g,g)", 1}}));
  // Both bracketings of (g) ⊗ (g) ⊗ (g,g) agree.
  const Word gg = w(ring, "(g,g)");
  Decomposition left;
  for (const auto& [z, m] : decompose(ring, g, g)) left.add(decompose(ring, z, gg), m);
  Decomposition right;
  for (const auto& [z, m] : decompose(ring, g, gg)) right.add(decompose(ring, g, z), m);
  EXPECT_EQ(left, right);
}

TEST(Decompose, FusionKeepsUnitLetters) {
  const BaseRing ring = testing::dual_z2();
  // (g,g) ⊗ (g): m=0 gives (g,g,g) and (g,1); m=1 gives (g).
  EXPECT_EQ(terms_of(decompose(ring, w(ring, "(g,g)"), w(ring, "(g)"))),
            expect_terms(ring, {{"(g)", 1}, {"(g,1)", 1}, {"(g,g,g)", 1}}));
}

TEST(Decompose, MultiplicitiesFromBase) {
  const BaseRing ring = rep_a4();
  // (t) ⊗ (t): ∅, the four fusion words (1),(w),(w2),2·(t), and (t,t).
  EXPECT_EQ(terms_of(decompose(ring, w(ring, "(t)"), w(ring, "(t)"))),
            expect_terms(ring, {{"()", 1}, {"(1)", 1}, {"(w)", 1}, {"(w2)", 1}, {"(t)", 2},
                                {"(t,t)", 1}}));
}

TEST(Decompose, MixedRingsRejected) {
  const BaseRing z2 = testing::dual_z2();
  EXPECT_THROW(decompose(z2, Word{Label{4}}, Word()), PreconditionError);
  EXPECT_THROW(mult_of(z2, Word(), Word(), Word{Label{9}}), PreconditionError);
}

TEST(Decompose, MatchesBruteForceOracle) {
  std::mt19937 rng(7);
  const std::vector<BaseRing> rings = {testing::dual_z2(), testing::dual_z3(), testing::s3(),
                                       rep_a4(), make_interval_step1(8)};
  for (const BaseRing& ring : rings) {
    const auto alphabet = ring.first_labels(4);
    for (int i = 0; i < 300; ++i) {
      Word x = testing::random_word(rng, alphabet, 5);
      Word y = testing::random_word(rng, alphabet, 5);
      if (i % 3 == 0) {
        // Force a long matching prefix so deep splits are exercised.
        y = concat(involute(ring, x.slice(x.size() / 2, x.size() - x.size() / 2)), y);
      }
      EXPECT_EQ(terms_of(decompose(ring, x, y)), oracle_decompose(ring, x, y))
          << render(ring, x) << " (x) " << render(ring, y);
    }
  }
}

TEST(MultOf, Examples) {
  const BaseRing ring = testing::dual_z2();
  const Word g = w(ring, "(g)");
  EXPECT_EQ(mult_of(ring, g, g, Word()), 1);
  EXPECT_EQ(mult_of(ring, w(ring, "(1)"), w(ring, "(1)"), g), 0);
  for (const Word& x : enumerate_words(ring, {4, 2})) {
    EXPECT_EQ(mult_of(ring, x, involute(ring, x), Word()), 1);
  }
}

TEST(DimPoly, TrivialBase) {
  const BaseRing ring = make_trivial();
  EXPECT_EQ(dimpoly(ring, Word()), DimPoly({1}));
  EXPECT_EQ(dimpoly(ring, ones(ring, 1)), DimPoly({-1, 1}));
  EXPECT_EQ(dimpoly(ring, ones(ring, 2)), DimPoly({1, -3, 1}));
  EXPECT_EQ(to_string(dimpoly(ring, ones(ring, 2))), "n^2 - 3n + 1");
  // Dimension consistency on (1) ⊗ (1): (n-1)^2 = 1 + (n-1) + dim(1,1).
  const DimPoly one = dimpoly(ring, ones(ring, 1));
  EXPECT_EQ(one * one, DimPoly({1}) + one + dimpoly(ring, ones(ring, 2)));
}

TEST(DimPoly, SnPlusRecurrenceOracle) {
  // d_0 = 1, d_1 = N-1, d_k = (N-2) d_{k-1} - d_{k-2}, evaluated numerically.
  const BaseRing ring = make_trivial();
  const DimPolyTable dims(ring);
  for (std::int64_t N = 4; N <= 12; ++N) {
    std::int64_t prev = 1;
    std::int64_t cur = N - 1;
    EXPECT_EQ(dims(ones(ring, 0))(N), 1);
    EXPECT_EQ(dims(ones(ring, 1))(N), cur);
    for (std::size_t k = 2; k <= 8; ++k) {
      const std::int64_t next = (N - 2) * cur - prev;
      prev = cur;
      cur = next;
      EXPECT_EQ(dims(ones(ring, k))(N), cur) << "N=" << N << " k=" << k;
    }
  }
}

TEST(DimPoly, LeftRecursionAgrees) {
  // Peel the first letter instead of the last: an independent route to dims.
  for (const BaseRing& ring : {testing::dual_z2(), testing::s3(), rep_a4(),
                               make_interval_step1(8)}) {
    const DimPolyTable dims(ring);
    for (const Word& x : enumerate_words(ring, {4, 3})) {
      if (x.size() < 2) continue;
      const Word head{x.front()};
      const Word tail = x.slice(1, x.size() - 1);
      DimPoly expect = dims(head) * dims(tail);
      for (const auto& [z, m] : decompose(ring, head, tail)) {
        if (z != x) expect -= dims(z) * BigInt(m);
      }
      EXPECT_EQ(dims(x), expect) << render(ring, x);
      EXPECT_EQ(dims(x).degree(), static_cast<int>(x.size()));
    }
  }
}

TEST(DimAt, Examples) {
  const BaseRing trivial = make_trivial();
  EXPECT_EQ(dim_at(trivial, ones(trivial, 2), 8), 41);
  EXPECT_EQ(dim_at(trivial, Word(), 8), 1);
  const BaseRing z2 = testing::dual_z2();
  EXPECT_EQ(dim_at(z2, w(z2, "(g)"), 8), 8);
  EXPECT_EQ(dim_at(z2, w(z2, "(g,g)"), 8), 56);  // n^2 - 1 - (n - 1)
  EXPECT_THROW(dim_at(z2, Word(), 0), PreconditionError);
}

TEST(DimPolyTable, ConcurrentUseMatchesSequential) {
  const BaseRing ring = testing::s3();
  const std::vector<Word> words = enumerate_words(ring, {3, std::nullopt});
  std::vector<DimPoly> expect;
  for (const Word& x : words) expect.push_back(dimpoly(ring, x));

  const DimPolyTable shared(ring);
  std::vector<std::vector<DimPoly>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < words.size(); ++i) {
        results[t].push_back(shared(words[(i + t * 37) % words.size()]));
      }
    });
  }
  for (auto& t : threads) t.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      EXPECT_EQ(results[t][i], expect[(i + t * 37) % words.size()]);
    }
  }
}

// Property oracles over each ring's small universe.
struct OracleCase {
  const char* name;
  BaseRing ring;
  SliceBounds bounds;
};

TEST(FusionProperties, AllOraclesPass) {
  const std::vector<OracleCase> cases = {
      {"dual-Z2", testing::dual_z2(), {3, 2}},
      {"dual-Z3", testing::dual_z3(), {2, std::nullopt}},
      {"S3", testing::s3(), {2, std::nullopt}},
      {"Rep(A4)", rep_a4(), {2, std::nullopt}},
      {"interval-step1", make_interval_step1(8), {3, 2}},
      {"interval-step2", make_interval_step2(5), {2, 3}},
  };
  for (const auto& c : cases) {
    const auto words = enumerate_words(c.ring, c.bounds);
    const DimPolyTable dims(c.ring);
    for (const ReportItem& item :
         {check_associativity(c.ring, words, "u"), check_conjugation_symmetry(c.ring, words, "u"),
          check_frobenius(c.ring, words, "u"), check_unit_law(c.ring, words, "u"),
          check_involution(c.ring, words, "u"),
          check_dimension_consistency(dims, words, "u"), check_sn_recovery(c.ring, 10),
          check_positivity(dims, enumerate_words(c.ring, {5, 2}), 8, "u")}) {
      EXPECT_EQ(item.status, Status::kPass) << c.name << ": " << item.claim << " " << item.witness;
      EXPECT_GT(item.checked, 0u);
    }
  }
}

TEST(FusionProperties, BrokenRingIsCaught) {
  // Unit law broken on the base ring: associativity and dimensions must notice.
  RingTable t;
  t.ids = {"e", "g"};
  t.unit = Label{0};
  t.dual = {Label{0}, Label{1}};
  t.dims = {1, 1};
  t.fusion = {{{Label{0}, 1}}, {{Label{0}, 1}}, {{Label{1}, 1}}, {{Label{0}, 1}}};
  const BaseRing broken = BaseRing::from_table(t);
  const auto words = enumerate_words(broken, {2, 2});
  const DimPolyTable dims(broken);
  const ReportItem dim_item = check_dimension_consistency(dims, words, "u");
  EXPECT_EQ(dim_item.status, Status::kFail);
  EXPECT_FALSE(dim_item.witness.empty());
}

}  // namespace
}  // namespace wreath
