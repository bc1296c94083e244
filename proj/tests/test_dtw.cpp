#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ink/dtw.hpp"
#include "helpers.hpp"

using namespace ink;
using test::make_char;
using test::make_sample;

namespace {

using Points = std::vector<TrajectoryPoint>;

// Brute-force oracle: walk every monotone warping path anchored at both
// sequence starts and ends, accumulate Euclidean cost along the path, and
// keep the minimum. Independent of the dynamic program under test.
void enumerate_paths(const Points& a, const Points& b, std::size_t i, std::size_t j,
                     double cost, double& best) {
  if (i + 1 == a.size() && j + 1 == b.size()) {
    best = std::min(best, cost);
    return;
  }
  if (i + 1 < a.size()) {
    const double d = std::hypot(a[i + 1].x - b[j].x, a[i + 1].y - b[j].y);
    enumerate_paths(a, b, i + 1, j, cost + d, best);
  }
  if (j + 1 < b.size()) {
    const double d = std::hypot(a[i].x - b[j + 1].x, a[i].y - b[j + 1].y);
    enumerate_paths(a, b, i, j + 1, cost + d, best);
  }
  if (i + 1 < a.size() && j + 1 < b.size()) {
    const double d = std::hypot(a[i + 1].x - b[j + 1].x, a[i + 1].y - b[j + 1].y);
    enumerate_paths(a, b, i + 1, j + 1, cost + d, best);
  }
}

double dtw_oracle(const Points& a, const Points& b) {
  double best = std::numeric_limits<double>::infinity();
  const double d0 = std::hypot(a[0].x - b[0].x, a[0].y - b[0].y);
  enumerate_paths(a, b, 0, 0, d0, best);
  return best;
}

Points grid_sequence(unsigned code, std::size_t length) {
  // Base-9 decoding over the 3x3 integer grid.
  Points out(length);
  for (std::size_t k = 0; k < length; ++k) {
    const unsigned v = code % 9;
    code /= 9;
    out[k] = {static_cast<double>(v % 3), static_cast<double>(v / 3),
              PenState::PenMove};
  }
  return out;
}

}  // namespace

TEST_CASE("identical sequences cost zero") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  Points a;
  for (int i = 0; i < 50; ++i) a.push_back({c(rng), c(rng), PenState::PenMove});
  const DtwResult r = dtw_distance(a, a);
  CHECK(r.raw == 0.0);
  CHECK(r.normalized == 0.0);
  CHECK(r.gt_point_count == 50);
}

TEST_CASE("single-point sequences pay one Euclidean distance") {
  const Points gt = {{0, 0, PenState::PenMove}};
  const Points pred = {{3, 4, PenState::PenMove}};
  const DtwResult r = dtw_distance(gt, pred);
  CHECK(r.raw == doctest::Approx(5.0));
  CHECK(r.normalized == doctest::Approx(5.0));
}

TEST_CASE("empty sequences are rejected") {
  const Points a = {{0, 0, PenState::PenMove}};
  CHECK_THROWS_WITH_AS(dtw_distance({}, a), doctest::Contains("EMPTY_SEQUENCE"), Error);
  CHECK_THROWS_AS(dtw_distance(a, {}), Error);
}

TEST_CASE("dtw equals the path-enumeration oracle on all short grid pairs") {
  // Exhaustive over every sequence pair with lengths <= 3 on {0,1,2}^2.
  std::vector<Points> pool;
  for (std::size_t len = 1; len <= 3; ++len) {
    unsigned count = 1;
    for (std::size_t k = 0; k < len; ++k) count *= 9;
    for (unsigned code = 0; code < count; ++code)
      pool.push_back(grid_sequence(code, len));
  }
  REQUIRE(pool.size() == 9 + 81 + 729);
  std::size_t checked = 0;
  for (const Points& a : pool) {
    for (const Points& b : pool) {
      const double got = dtw_distance(a, b).raw;
      const double want = dtw_oracle(a, b);
      if (got != want) {  // equality is exact; fail loudly with context
        CAPTURE(a.size());
        CAPTURE(b.size());
        REQUIRE(got == want);
      }
      ++checked;
    }
  }
  CHECK(checked == pool.size() * pool.size());
}

TEST_CASE("dtw equals the oracle on random length-5 pairs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coord(0, 2);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int it = 0; it < 20000; ++it) {
    Points a(len(rng)), b(len(rng));
    for (auto& p : a) p = {double(coord(rng)), double(coord(rng)), PenState::PenMove};
    for (auto& p : b) p = {double(coord(rng)), double(coord(rng)), PenState::PenMove};
    REQUIRE(dtw_distance(a, b).raw == dtw_oracle(a, b));
  }
}

TEST_CASE("raw cost is symmetric; normalization follows the GT length") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  Points a, b;
  for (int i = 0; i < 17; ++i) a.push_back({c(rng), c(rng), PenState::PenMove});
  for (int i = 0; i < 23; ++i) b.push_back({c(rng), c(rng), PenState::PenMove});
  const DtwResult ab = dtw_distance(a, b);
  const DtwResult ba = dtw_distance(b, a);
  CHECK(ab.raw == ba.raw);
  CHECK(ab.normalized == ab.raw / 17.0);
  CHECK(ba.normalized == ba.raw / 23.0);
  CHECK(ab.normalized != ba.normalized);
}

TEST_CASE("appending a copy of the last GT point is bounded by its distance "
          "to the last pred point") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(0, 2);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int it = 0; it < 2000; ++it) {
    Points a(len(rng)), b(len(rng));
    for (auto& p : a) p = {double(coord(rng)), double(coord(rng)), PenState::PenMove};
    for (auto& p : b) p = {double(coord(rng)), double(coord(rng)), PenState::PenMove};
    const double base = dtw_distance(a, b).raw;
    Points extended = a;
    extended.push_back(a.back());
    const double grown = dtw_distance(extended, b).raw;
    const double bound = std::hypot(a.back().x - b.back().x, a.back().y - b.back().y);
    CHECK(grown <= base + bound + 1e-12);
  }
}

TEST_CASE("normalize_for_dtw translates to the origin and scales height to 1") {
  const SentenceSample s = make_sample(
      "w", "s", "a",
      {make_char(U'a', {{0, 0}, {4, 0}, {2, 2, PenState::EndOfChar}})});
  const SentenceSample out = normalize_for_dtw(s);
  CHECK(out.characters[0].points[1].x == doctest::Approx(2.0));
  CHECK(out.characters[0].points[2].y == doctest::Approx(1.0));
  CHECK(normalize_for_dtw(out) == out);  // idempotent

  const SentenceSample flat = make_sample(
      "w", "s", "a", {make_char(U'a', {{0, 1}, {2, 1, PenState::EndOfChar}})});
  CHECK_THROWS_WITH_AS(normalize_for_dtw(flat), doctest::Contains("ZERO_HEIGHT"), Error);
}

TEST_CASE("writer stats use population standard deviation and macro means") {
  std::vector<std::pair<std::string, std::vector<DtwResult>>> groups;
  groups.push_back({"w1", {DtwResult{10.0, 1.0, 10}, DtwResult{30.0, 3.0, 10}}});
  const DtwMacro one = dtw_writer_stats(groups);
  CHECK(one.per_writer[0].mean_norm == doctest::Approx(2.0));
  CHECK(one.per_writer[0].std_norm == doctest::Approx(1.0));  // population, n=2
  CHECK(one.per_writer[0].mean_raw == doctest::Approx(20.0));

  groups.push_back({"w2", {DtwResult{8.0, 2.0, 4}}});
  const DtwMacro two = dtw_writer_stats(groups);
  CHECK(two.per_writer[1].std_norm == 0.0);  // single sentence
  CHECK(two.norm == doctest::Approx(2.0));   // (2.0 + 2.0) / 2
  CHECK(two.raw == doctest::Approx(14.0));
  CHECK(two.std_norm == doctest::Approx(0.5));
}
