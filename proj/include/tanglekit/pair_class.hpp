#pragma once

// Canonical invariant of an unordered pair of slopes up to torus
// homeomorphism: the distance s together with the orbit
// {r, -r, r^-1, -r^-1} mod s of the second slope once the first is moved
// to 1/0.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tanglekit/unimodular.hpp"

namespace tangle {

template <class I>
struct PairClass {
    I dist{0};
    std::vector<I> residues;  // sorted, deduplicated, in [0, dist)

    friend bool operator==(const PairClass& a, const PairClass& b) {
        return a.dist == b.dist && a.residues == b.residues;
    }
    friend bool operator!=(const PairClass& a, const PairClass& b) { return !(a == b); }
};

// {r, -r, r^-1, -r^-1} mod s for the slope r/s, s >= 1. For s = 1 this is
// {0}: all distance-1 pairs are equivalent.
template <class I>
std::vector<I> pair_orbit_residues(const Slope<I>& rs) {
    const I& s = rs.den;
    if (s == 0) throw std::domain_error("pair_orbit_residues: denominator zero");
    if (s == 1) return {I(0)};
    I r = mod_floor(rs.num, s);
    I ri = mod_inverse(r, s);
    std::vector<I> out{r, mod_floor(I(-r), s), ri, mod_floor(I(-ri), s)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class I>
PairClass<I> pair_canonical(const Slope<I>& x, const Slope<I>& y) {
    if (x == y) throw std::domain_error("pair_canonical: slopes equal (distance 0)");
    auto phi = unimodular_taking(x);
    Slope<I> w = phi(y);  // denominator equals slope_distance(x, y)
    return PairClass<I>{w.den, pair_orbit_residues(w)};
}

template <class I>
bool pairs_homeomorphic(const Slope<I>& x0, const Slope<I>& y0, const Slope<I>& x1,
                        const Slope<I>& y1) {
    return pair_canonical(x0, y0) == pair_canonical(x1, y1);
}

}  // namespace tangle
