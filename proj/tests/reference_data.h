/**
 * @file reference_data.h
 * The five reference pieces with their expected level decompositions and
 * frozen scores. The expectations live here in test code, independent of the
 * library, so regressions in the production path cannot hide.
 */
#pragma once

#include <vector>

namespace melscore::testing {

struct ReferenceDatum {
  const char* label;
  std::vector<double> frequencies;
  std::vector<double> shifted;
  std::vector<double> transitionDeltas;
  std::vector<double> withinDiffs;
  double directionGap;
  std::vector<std::size_t> clusterSignature;
  double l1Ratio;
  double l2Ratio;
  double l3Ratio;
  double l1Energy;
  double l2Energy;
  double l3Energy;
  double m;
};

inline const std::vector<ReferenceDatum>& referenceData() {
  static const std::vector<ReferenceDatum> data{
      {"P1",
       {120, 160, 170, 145},
       {1, 41, 51, 26},
       {40, 10, -25},
       {30, -25},
       75,
       {2, 3, 1},
       7.530415961,
       7.005817657,
       6.652950864,
       4959,
       2325,
       1525,
       2.118918448},
      {"P2",
       {120, 155, 150, 130},
       {1, 36, 31, 11},
       {35, -5, -20},
       {35, 15},
       60,
       {2, 3, 1},
       6.922612506,
       6.780400282,
       6.847741615,
       2379,
       1650,
       1450,
       2.055075440},
      {"P3",
       {120, 125, 130, 95},
       {26, 31, 36, 1},
       {5, 5, -35},
       {0, -35},
       45,
       {2, 3, 1},
       6.916684054,
       6.958075719,
       7.110696123,
       2934,
       1275,
       1225,
       2.098545590},
      {"P4",
       {120, 135, 140, 135},
       {1, 16, 21, 16},
       {15, 5, -5},
       {10, -5},
       25,
       {2, 3, 1},
       5.790775306,
       5.016605025,
       4.327911314,
       954,
       275,
       125,
       1.513529164},
      {"P5",
       {120, 125, 120, 105},
       {16, 21, 16, 1},
       {5, -5, -15},
       {5, 10},
       25,
       {2, 3, 1},
       5.790775306,
       5.016605025,
       4.327911314,
       954,
       275,
       125,
       1.513529164},
  };
  return data;
}

}  // namespace melscore::testing
