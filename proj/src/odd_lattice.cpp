#include "cones/odd_lattice.hpp"

#include <limits>

namespace cones {

namespace {

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("lattice coordinate out of range: " + z.get_str());
    return z.get_si();
}

bool odd_sum(const std::vector<long long>& w) {
    long long parity = 0;
    for (long long x : w) parity ^= (x & 1);
    return parity != 0;
}

std::vector<Rational> costs_against(const std::vector<Rational>& v,
                                    const std::vector<long long>& w) {
    std::vector<Rational> costs;
    costs.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        costs.push_back((v[i] - Rational(w[i])).abs());
    return costs;
}

}  // namespace

LatticeResult nearest_odd(const std::vector<Rational>& v) {
    const std::size_t n = v.size();
    if (n == 0) throw EmptyVector("nearest_odd requires n >= 1");

    std::vector<long long> w(n);
    std::vector<Rational> frac(n);  // f_i in [0, 1/2]
    Rational base_cost(0);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = to_ll(v[i].round_half_down());
        frac[i] = (v[i] - Rational(w[i])).abs();
        base_cost += frac[i];
    }

    if (!odd_sum(w)) {
        std::size_t best = 0;
        Rational best_extra = Rational(1) - Rational(2) * frac[0];
        for (std::size_t i = 1; i < n; ++i) {
            const Rational extra = Rational(1) - Rational(2) * frac[i];
            if (extra < best_extra) {
                best_extra = extra;
                best = i;
            }
        }
        // Flip to the integer on the other side of v_i. Exact integers
        // flip up; otherwise the flip target is the floor/ceil the base
        // rounding did not take.
        if (frac[best].is_zero() || Rational(w[best]) < v[best])
            w[best] += 1;
        else
            w[best] -= 1;
        base_cost += best_extra;
    }

    LatticeResult result;
    result.distance = std::move(base_cost);
    result.per_coordinate_cost = costs_against(v, w);
    result.witness = std::move(w);
    return result;
}

LatticeResult nearest_odd_bruteforce(const std::vector<Rational>& v) {
    const std::size_t n = v.size();
    if (n == 0) throw EmptyVector("nearest_odd_bruteforce requires n >= 1");
    if (n > 8) throw DimensionTooLarge("enumeration bound is n <= 8");

    std::vector<long long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = to_ll(v[i].floor()) - 1;
        hi[i] = to_ll(v[i].ceil()) + 1;
    }

    std::vector<long long> point(lo), best;
    Rational best_cost(0);
    bool found = false;
    // Odometer enumeration in lexicographic order; keeping the first
    // strict minimum yields the lexicographically least witness.
    while (true) {
        if (odd_sum(point)) {
            Rational cost(0);
            for (std::size_t i = 0; i < n; ++i)
                cost += (v[i] - Rational(point[i])).abs();
            if (!found || cost < best_cost) {
                best_cost = std::move(cost);
                best = point;
                found = true;
            }
        }
        std::size_t axis = n;
        while (axis > 0) {
            --axis;
            if (point[axis] < hi[axis]) {
                ++point[axis];
                for (std::size_t j = axis + 1; j < n; ++j) point[j] = lo[j];
                break;
            }
            if (axis == 0) {
                LatticeResult result;
                result.distance = std::move(best_cost);
                result.per_coordinate_cost = costs_against(v, best);
                result.witness = std::move(best);
                return result;
            }
        }
    }
}

Ordering compare_distance_to_one(const LatticeResult& r) {
    const auto c = r.distance <=> Rational(1);
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

}  // namespace cones
