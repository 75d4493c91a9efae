/**
 * @file oracles.h
 * Independent reference computations for the tests. These deliberately avoid
 * the production algorithms: partitions are found by exhaustive enumeration
 * with two-pass mean/SSE arithmetic, counts come from direct combinatorics,
 * and integrals from composite Simpson quadrature.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace melscore::testing {

struct OraclePartition {
  std::vector<std::size_t> signature;
  double wcss = 0.0;
};

/// Minimum-WCSS contiguous partition of the sorted values into k clusters,
/// found by exhaustively enumerating split points. Ties within a small
/// scaled slack resolve to the leftmost split points, mirroring the
/// production tie-break contract.
OraclePartition exhaustiveBestPartition(std::vector<double> values,
                                        std::size_t k);

/// Number of distinct permutations of the multiset: n! / prod(multiplicity!).
unsigned long long multisetPermutations(std::vector<double> values);

/// Number of multisets of `parts` positive integers summing to `total`
/// (partitions of `total` into exactly `parts` parts).
unsigned long long partitionCount(std::size_t parts, unsigned long long total);

/// Composite Simpson integration of f over [a, b] with n panels (n even).
double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t n);

}  // namespace melscore::testing
