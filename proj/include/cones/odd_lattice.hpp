#pragma once

/**
 * @file odd_lattice.hpp
 * @brief l1 distance from a rational point to the odd integer lattice.
 *
 * Z^n_o is the set of integer points whose coordinate sum is odd
 * (equivalently, whose l1 norm is odd). nearest_odd computes
 * d_1(Z^n_o, v) exactly:
 *
 *   1. round every coordinate to its nearest integer (exact halves go
 *      down); the per-coordinate costs f_i = |v_i - w_i| lie in [0, 1/2]
 *      and sum to the unconstrained minimum c;
 *   2. if the rounded point already has odd sum, the distance is c;
 *   3. otherwise flip the rounding of one coordinate to its second
 *      nearest integer. A flip changes the sum's parity and costs
 *      1 - 2*f_i >= 0, so the cheapest single flip is optimal:
 *      distance = c + min_i (1 - 2*f_i).
 *
 * Ties are broken deterministically (round down, flip the smallest
 * index among minimal-cost coordinates, integer coordinates flip up),
 * so the witness is reproducible. nearest_odd_bruteforce enumerates a
 * box around v and serves as the independent oracle in tests.
 */

#include <vector>

#include "cones/rational.hpp"

namespace cones {

struct EmptyVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LatticeResult {
    Rational distance;                          // >= 0, exact
    std::vector<long long> witness;             // integer point with odd sum
    std::vector<Rational> per_coordinate_cost;  // |v_i - witness_i|
};

LatticeResult nearest_odd(const std::vector<Rational>& v);

/// Exhaustive oracle over the box [floor(v_i)-1, ceil(v_i)+1]; the box
/// provably contains a minimizer. Returns the lexicographically least
/// witness. Limited to n <= 8.
LatticeResult nearest_odd_bruteforce(const std::vector<Rational>& v);

enum class Ordering { Less, Equal, Greater };

/// Exact trichotomy of the distance against 1.
Ordering compare_distance_to_one(const LatticeResult& r);

}  // namespace cones
