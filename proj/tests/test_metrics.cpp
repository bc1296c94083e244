#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ink/csm.hpp"

using namespace ink;

namespace {

constexpr double kEps = kDefaultEpsilon;
constexpr double kRho = kDefaultOverlapPenalty;

AdjacentBoundary boundary(double gt_gap, double pred_gap, int z = 0, int zhat = 0) {
  AdjacentBoundary b;
  b.index = 1;
  b.gt_cursive = z;
  b.pred_cursive = zhat;
  b.gt_gap = gt_gap;
  b.pred_gap = pred_gap;
  return b;
}

WordGapBoundary word_gap(double gt_width, double pred_width) {
  WordGapBoundary g;
  g.u = 1;
  g.v = 3;
  g.gt_width = gt_width;
  g.pred_width = pred_width;
  return g;
}

}  // namespace

TEST_CASE("F1 returns exactly 1 when neither side has positives") {
  CHECK(f1_cursive_writer(CursiveCounts{}, 0, 0, kEps) == 1.0);
}

TEST_CASE("F1 from the precision/recall formulas") {
  // tp=1 fp=1 fn=0: Prec 0.5, Rec 1, F1 2/3.
  CursiveCounts c;
  c.tp = 1;
  c.fp = 1;
  CHECK(f1_cursive_writer(c, 1, 2, kEps) == doctest::Approx(2.0 / 3.0).epsilon(1e-5));

  CursiveCounts miss;
  miss.fn = 3;
  CHECK(f1_cursive_writer(miss, 3, 0, kEps) == 0.0);
}

TEST_CASE("F1 matches a brute-force confusion matrix on pooled boundaries") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int writer = 0; writer < 10; ++writer) {
    std::vector<std::pair<int, int>> labels;
    const int n = 1 + writer * 13 % 40;
    for (int i = 0; i < n; ++i) labels.push_back({bit(rng), bit(rng)});

    CursiveCounts streamed;
    std::size_t gt_pos = 0, pred_pos = 0;
    for (auto [z, zhat] : labels) {
      streamed.add(z, zhat);
      gt_pos += z;
      pred_pos += zhat;
    }
    // Independent confusion-matrix route.
    std::size_t tp = 0, fp = 0, fn = 0;
    for (auto [z, zhat] : labels) {
      tp += (z == 1 && zhat == 1);
      fp += (z == 0 && zhat == 1);
      fn += (z == 1 && zhat == 0);
    }
    double expected;
    if (gt_pos == 0 && pred_pos == 0) {
      expected = 1.0;
    } else {
      const double prec = tp / (tp + fp + kEps);
      const double rec = tp / (tp + fn + kEps);
      expected = 2.0 * prec * rec / (prec + rec + kEps);
    }
    CHECK(f1_cursive_writer(streamed, gt_pos, pred_pos, kEps) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("CRE is one minus the mean absolute rate difference") {
  // Ten sentence rate pairs whose absolute differences average 0.0656.
  const double diffs[10] = {0.1, 0.05, 0.02, 0.08, 0.06, 0.07, 0.03, 0.09, 0.04, 0.116};
  std::vector<RatePair> rates;
  for (double d : diffs) rates.push_back({0.4, 0.4 + d});
  CHECK(cre_writer(rates) == doctest::Approx(0.9344).epsilon(1e-6));

  std::vector<RatePair> same = {{0.2, 0.2}, {0.9, 0.9}};
  CHECK(cre_writer(same) == 1.0);

  std::vector<RatePair> worst = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK(cre_writer(worst) == 0.0);
}

TEST_CASE("CRE is invariant to sentence order") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  std::vector<RatePair> rates;
  for (int i = 0; i < 25; ++i) rates.push_back({r(rng), r(rng)});
  const double base = cre_writer(rates);
  for (int it = 0; it < 10; ++it) {
    std::shuffle(rates.begin(), rates.end(), rng);
    CHECK(cre_writer(rates) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("gap similarity on the worked width pair") {
  CHECK(gap_similarity(0.094, 0.222, kRho, kEps) ==
        doctest::Approx(0.4234).epsilon(5e-4));
}

TEST_CASE("gap similarity penalizes mutual overlap at exactly rho") {
  CHECK(gap_similarity(-0.01, -0.25, kRho, kEps) == 0.5);
  CHECK(gap_similarity(-1.0, -1.0, kRho, kEps) == 0.5);
}

TEST_CASE("gap similarity of identical positive gaps is 1") {
  CHECK(gap_similarity(0.37, 0.37, kRho, kEps) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gap similarity is symmetric") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> g(-0.5, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const double a = g(rng), b = g(rng);
    CHECK(gap_similarity(a, b, kRho, kEps) ==
          doctest::Approx(gap_similarity(b, a, kRho, kEps)).epsilon(1e-12));
  }
}

TEST_CASE("gap similarity stays in (0,1] and is scale invariant") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> g(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.01, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double s = gap_similarity(g(rng), g(rng), kRho, kEps);
    CHECK(s > 0.0);
    CHECK(s <= 1.0);
  }
  for (int i = 0; i < 2000; ++i) {
    const double a = pos(rng), b = pos(rng), k = scale(rng);
    CHECK(std::abs(gap_similarity(k * a, k * b, kRho, kEps) -
                   gap_similarity(a, b, kRho, kEps)) < 1e-4);
  }
}

TEST_CASE("KGS averages boundary similarities with the epsilon denominator") {
  // One mutually-overlapping pair (0.5) and one identical pair (1.0).
  std::vector<AdjacentBoundary> bs = {boundary(-0.1, -0.2), boundary(0.3, 0.3)};
  const auto kgs = kgs_writer(bs, kRho, kEps);
  REQUIRE(kgs.has_value());
  CHECK(*kgs == doctest::Approx(0.75).epsilon(1e-6));

  CHECK_FALSE(kgs_writer({}, kRho, kEps).has_value());

  std::vector<AdjacentBoundary> one = {boundary(0.094, 0.222)};
  CHECK(*kgs_writer(one, kRho, kEps) == doctest::Approx(0.4234).epsilon(5e-4));
}

TEST_CASE("SSS mirrors KGS over word-gap widths") {
  std::vector<WordGapBoundary> gaps = {word_gap(0.094, 0.222)};
  CHECK(*sss_writer(gaps, kRho, kEps) == doctest::Approx(0.4234).epsilon(5e-4));

  CHECK_FALSE(sss_writer({}, kRho, kEps).has_value());

  std::vector<WordGapBoundary> equal = {word_gap(0.2, 0.2), word_gap(0.05, 0.05)};
  CHECK(*sss_writer(equal, kRho, kEps) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("KGS and SSS are invariant to boundary order") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> g(-0.5, 0.5);
  std::vector<AdjacentBoundary> bs;
  for (int i = 0; i < 30; ++i) bs.push_back(boundary(g(rng), g(rng)));
  const double base = *kgs_writer(bs, kRho, kEps);
  for (int it = 0; it < 10; ++it) {
    std::shuffle(bs.begin(), bs.end(), rng);
    CHECK(*kgs_writer(bs, kRho, kEps) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("macro aggregation averages writers with defined values") {
  WriterScores a, b;
  a.writer_id = "a";
  a.kgs = 0.4;
  b.writer_id = "b";
  b.kgs = 0.6;
  a.sss.reset();
  b.sss = 0.7;
  std::vector<WriterScores> writers = {a, b};
  const MacroReport m = macro_aggregate(writers);
  CHECK(*m.kgs.mean == doctest::Approx(0.5));
  CHECK(m.kgs.writer_count == 2);
  CHECK(*m.sss.mean == doctest::Approx(0.7));
  CHECK(m.sss.writer_count == 1);
  CHECK_FALSE(m.f1_cursive.mean.has_value());

  const MacroReport single = macro_aggregate(std::vector<WriterScores>{a});
  CHECK(*single.kgs.mean == doctest::Approx(0.4));
}

TEST_CASE("macro aggregation over identical writers equals the writer value") {
  WriterScores w;
  w.writer_id = "w";
  w.f1_cursive = 0.8;
  w.cre = 0.9;
  w.kgs = 0.6;
  w.sss = 0.5;
  std::vector<WriterScores> many(7, w);
  const MacroReport m = macro_aggregate(many);
  CHECK(*m.f1_cursive.mean == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(*m.cre.mean == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(*m.kgs.mean == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(*m.sss.mean == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mean CSM difference averages the four component deltas") {
  CsmQuad a{0.6, 0.7, 0.8, 0.9};
  CsmQuad b{0.5, 0.5, 0.5, 0.5};
  CHECK(mean_csm_difference(a, b) == doctest::Approx(0.25));
  CHECK(mean_csm_difference(a, a) == 0.0);

  CsmQuad partial{0.5, std::nullopt, 0.5, 0.5};
  CHECK_THROWS_WITH_AS(mean_csm_difference(a, partial),
                       doctest::Contains("COMPONENT_UNDEFINED"), Error);

  // Macro reports expose the same quad shape.
  WriterScores w;
  w.writer_id = "w";
  w.f1_cursive = 0.6;
  w.cre = 0.7;
  w.kgs = 0.8;
  w.sss = 0.9;
  const MacroReport m = macro_aggregate(std::vector<WriterScores>{w});
  CHECK(mean_csm_difference(quad_of(m), quad_of(w)) == doctest::Approx(0.0));
}

TEST_CASE("rank-sign agreement counts matched signs, zeros disagree") {
  std::vector<std::pair<double, int>> all = {{0.2, 1}, {-0.3, -1}, {0.01, 1}};
  CHECK(rank_sign_agreement(all) == 1.0);

  std::vector<std::pair<double, int>> items;
  for (int i = 0; i < 11; ++i) items.push_back({0.1, 1});
  items.push_back({-0.1, 1});
  items.push_back({-0.2, 1});
  CHECK(rank_sign_agreement(items) == doctest::Approx(0.846).epsilon(0.001 / 0.846));

  std::vector<std::pair<double, int>> with_zero = {{0.0, 1}, {0.5, 1}};
  CHECK(rank_sign_agreement(with_zero) == 0.5);

  std::vector<std::pair<double, int>> bad = {{0.5, 0}};
  CHECK_THROWS_AS(rank_sign_agreement(bad), Error);
}

TEST_CASE("score_writer wires counts, rates, and definedness together") {
  std::vector<AdjacentBoundary> bs = {boundary(0.1, 0.1, 1, 1), boundary(0.2, 0.2, 0, 1)};
  std::vector<WordGapBoundary> gaps;
  std::vector<RatePair> rates = {{0.5, 1.0}};
  const WriterScores w = score_writer("w", bs, gaps, rates, kRho, kEps);
  CHECK(w.counts.tp == 1);
  CHECK(w.counts.fp == 1);
  CHECK(w.counts.fn == 0);
  CHECK(w.gt_positive_total == 1);
  CHECK(w.pred_positive_total == 2);
  REQUIRE(w.f1_cursive.has_value());
  CHECK(*w.f1_cursive == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  REQUIRE(w.cre.has_value());
  CHECK(*w.cre == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(w.kgs.has_value());
  CHECK_FALSE(w.sss.has_value());

  // No boundaries at all: cursive metrics are undefined.
  const WriterScores empty = score_writer("e", {}, {}, rates, kRho, kEps);
  CHECK_FALSE(empty.f1_cursive.has_value());
  CHECK_FALSE(empty.cre.has_value());
  CHECK_FALSE(empty.kgs.has_value());
}
