#pragma once

// The modular group acting on slopes: z -> (az+b)/(cz+d) with ad - bc = 1,
// stored with the first nonzero entry of (a,b) positive so each class of
// +/- has one representative.

#include <array>
#include <stdexcept>

#include "tanglekit/slope.hpp"

namespace tangle {

template <class I>
struct UnimodularMap {
    I a{1}, b{0}, c{0}, d{1};

    UnimodularMap() = default;
    UnimodularMap(I a_, I b_, I c_, I d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1) throw std::invalid_argument("unimodular: det != 1");
        canonicalize();
    }

    static UnimodularMap identity() { return UnimodularMap(); }

    Slope<I> operator()(const Slope<I>& s) const {
        return Slope<I>(a * s.num + b * s.den, c * s.num + d * s.den);
    }

    UnimodularMap inverse() const { return UnimodularMap(d, I(-b), I(-c), a); }

    friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
        return UnimodularMap(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                             f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
    }

    friend bool operator==(const UnimodularMap& f, const UnimodularMap& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
    }

    std::array<std::array<I, 2>, 2> rows() const { return {{{a, b}, {c, d}}}; }

  private:
    void canonicalize() {
        bool flip = a != 0 ? a < 0 : b < 0;
        if (flip) { a = -a; b = -b; c = -c; d = -d; }
    }
};

// phi with phi(s) = 1/0, by the extended Euclidean algorithm; the Bezout
// cofactor is the smallest nonnegative one, so the choice is canonical
template <class I>
UnimodularMap<I> unimodular_taking(const Slope<I>& s) {
    const I& r = s.num;
    const I& q = s.den;
    if (q == 0) return UnimodularMap<I>::identity();
    I sp = mod_inverse(r, q);        // r * sp == 1 mod q, sp in [0, q)
    I rp = (r * sp - 1) / q;
    return UnimodularMap<I>(sp, I(-rp), I(-q), r);
}

}  // namespace tangle
