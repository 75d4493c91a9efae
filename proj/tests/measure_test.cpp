/**
 * @file measure_test.cpp
 * Unit tests for the entropy-energy measure.
 */
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "melscore/errors.h"
#include "melscore/measure.h"
#include "melscore/piece.h"
#include "reference_data.h"

namespace melscore {
namespace {

using testing::referenceData;

Piece makePiece(std::vector<double> frequencies, std::string label = "") {
  return Piece{std::move(label), std::move(frequencies)};
}

std::vector<double> randomValues(std::mt19937& rng, std::size_t size) {
  std::uniform_real_distribution<double> draw(-50.0, 50.0);
  std::vector<double> values(size);
  for (double& value : values) {
    value = draw(rng);
  }
  return values;
}

TEST_SUITE_BEGIN("measure");

TEST_CASE("entropy follows the calibrated convention") {
  CHECK(entropy(std::vector<double>{1}) == 0);
  CHECK(entropy(std::vector<double>{0}) == 0);
  CHECK(entropy(std::vector<double>{}) == 0);
  CHECK(entropy(std::vector<double>{30, -25}) ==
        doctest::Approx(10145.750068).epsilon(1e-9));
  // Only squared values enter, so signs never matter.
  CHECK(entropy(std::vector<double>{30, -25}) ==
        entropy(std::vector<double>{-30, 25}));
  // Zero entries are neutral.
  CHECK(entropy(std::vector<double>{3, 4, 0, 0}) ==
        entropy(std::vector<double>{3, 4}));
}

TEST_CASE("entropy is permutation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values = randomValues(rng, 6);
    const double reference = entropy(values);
    std::shuffle(values.begin(), values.end(), rng);
    CHECK(entropy(values) ==
          doctest::Approx(reference).epsilon(1e-12));
  }
}

TEST_CASE("shannon mode is normalized") {
  std::mt19937 rng(11);
  for (std::size_t size = 2; size <= 8; ++size) {
    const std::vector<double> values = randomValues(rng, size);
    const double value = entropy(values, EntropyMode::kShannon);
    CHECK(value >= 0.0);
    CHECK(value <= std::log(static_cast<double>(size)) + 1e-12);
  }
  // A uniform list attains the maximum.
  CHECK(entropy(std::vector<double>{3, 3, 3, 3}, EntropyMode::kShannon) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(entropy(std::vector<double>{0}, EntropyMode::kShannon) == 0);
}

TEST_CASE("energy sums squared values") {
  CHECK(energy(std::vector<double>{40, 10, -25}) == 2325);
  CHECK(energy(std::vector<double>{1, 41, 51, 26}) == 4959);
  CHECK(energy(std::vector<double>{}) == 0);
}

TEST_CASE("ratio identities") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<double> values = randomValues(rng, 5);
    const LevelScore score = scoreLevel(values);

    // ratio = entropy / energy whenever there is energy.
    CHECK(score.ratio ==
          doctest::Approx(score.entropy / score.energy).epsilon(1e-15));

    // ratio = ln(E) + sum p ln p with p = v^2 / E.
    double plnp = 0.0;
    for (double value : values) {
      const double p = value * value / score.energy;
      if (p > 0.0) {
        plnp += p * std::log(p);
      }
    }
    CHECK(score.ratio ==
          doctest::Approx(std::log(score.energy) + plnp).epsilon(1e-9));

    // ratio(c v) = 2 ln c + ratio(v).
    for (double c : {0.5, 2.0, 10.0}) {
      std::vector<double> scaled = values;
      for (double& value : scaled) {
        value *= c;
      }
      CHECK(scoreLevel(scaled).ratio ==
            doctest::Approx(2.0 * std::log(c) + score.ratio).epsilon(1e-9));
    }
  }

  const LevelScore silent = scoreLevel(std::vector<double>{0, 0});
  CHECK(silent.energy == 0);
  CHECK(silent.ratio == 0);
}

TEST_CASE("reference pieces match their frozen scores") {
  for (const auto& datum : referenceData()) {
    CAPTURE(datum.label);
    const AestheticScore score =
        mValue(makePiece(datum.frequencies, datum.label));
    CHECK(score.shifted.energy == datum.l1Energy);
    CHECK(score.transitions.energy == datum.l2Energy);
    CHECK(score.withinDiffs.energy == datum.l3Energy);
    CHECK(score.shifted.ratio ==
          doctest::Approx(datum.l1Ratio).epsilon(1e-9));
    CHECK(score.transitions.ratio ==
          doctest::Approx(datum.l2Ratio).epsilon(1e-9));
    CHECK(score.withinDiffs.ratio ==
          doctest::Approx(datum.l3Ratio).epsilon(1e-9));
    CHECK(score.m == doctest::Approx(datum.m).epsilon(1e-9));
    // The measure is exactly one tenth of the ratio sum.
    CHECK(score.m ==
          doctest::Approx(kMeasureScale *
                          (score.shifted.ratio + score.transitions.ratio +
                           score.withinDiffs.ratio))
              .epsilon(1e-15));
  }
}

TEST_CASE("the two low-scoring pieces score identically") {
  const auto& data = referenceData();
  const AestheticScore p4 = mValue(makePiece(data[3].frequencies, "P4"));
  const AestheticScore p5 = mValue(makePiece(data[4].frequencies, "P5"));
  CHECK(std::abs(p4.m - p5.m) <= 1e-12);
  CHECK(std::abs(p4.shifted.ratio - p5.shifted.ratio) <= 1e-12);
  CHECK(std::abs(p4.transitions.ratio - p5.transitions.ratio) <= 1e-12);
  CHECK(std::abs(p4.withinDiffs.ratio - p5.withinDiffs.ratio) <= 1e-12);
}

TEST_CASE("mValue needs at least three notes") {
  try {
    mValue(makePiece({120, 160}, "duo"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& error) {
    const std::string message = error.what();
    CHECK(message.find("within-direction") != std::string::npos);
    CHECK(message.find("duo") != std::string::npos);
  }

  // A two-note decomposition can still be scored directly: the lone
  // transition passes through to the within-direction level.
  const AestheticScore duo = scoreDecomposition(decompose(makePiece({120, 160})));
  CHECK(duo.transitions.energy == 1600);
  CHECK(duo.withinDiffs.energy == 1600);

  CHECK_THROWS_AS(scoreDecomposition(Decomposition{}), ValidationError);
}

TEST_CASE("frozen value for the strongest diverging sweep candidate") {
  CHECK(mValue(makePiece({120, 125, 130, 115})).m ==
        doctest::Approx(1.557488602).epsilon(1e-9));
}

TEST_CASE("shannon mode scores differ from the calibrated mode") {
  const Piece p1 = makePiece({120, 160, 170, 145}, "P1");
  const AestheticScore shannon = mValue(p1, EntropyMode::kShannon);
  CHECK(shannon.m > 0.0);
  CHECK(shannon.m != mValue(p1).m);
}

TEST_SUITE_END();

}  // namespace
}  // namespace melscore
