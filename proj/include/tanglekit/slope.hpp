#pragma once

// Extended rationals p/q in lowest terms with nonnegative denominator.
// 1/0 is the slope of the infinity tangle and is its own negative.

#include <stdexcept>
#include <string>

#include "tanglekit/integer.hpp"

namespace tangle {

template <class I>
struct Slope {
    I num{0};
    I den{1};

    Slope() = default;
    Slope(I n, I d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit Slope(I n) : num(std::move(n)), den(1) {}

    static Slope infinity() { return Slope(I(1), I(0)); }

    bool is_infinity() const { return den == 0; }

    Slope operator-() const { return den == 0 ? *this : Slope(I(-num), den); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.num != b.num) return a.num < b.num;
        return a.den < b.den;
    }

    std::string str() const { return int_to_string(num) + "/" + int_to_string(den); }

  private:
    void normalize() {
        if (num == 0 && den == 0) throw std::invalid_argument("slope 0/0");
        if (den < 0) { num = -num; den = -den; }
        I g = igcd(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (den == 0) num = 1;
    }
};

// |pv - qu|: twice this counts meridian intersections downstairs
template <class I>
I slope_distance(const Slope<I>& x, const Slope<I>& y) {
    return iabs(I(x.num * y.den - x.den * y.num));
}

// text form "p/q"; also accepts a bare integer per the tangle grammar
template <class I>
Slope<I> parse_slope(const std::string& s) {
    size_t pos = 0;
    I num;
    size_t n = parse_int(s, pos, num);
    if (n == 0) throw std::invalid_argument("slope: expected integer at offset 0: " + s);
    pos += n;
    if (pos == s.size()) return Slope<I>(num, I(1));
    if (s[pos] != '/')
        throw std::invalid_argument("slope: expected '/' at offset " + std::to_string(pos));
    ++pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        throw std::invalid_argument("slope: denominator must be unsigned at offset " +
                                    std::to_string(pos));
    I den;
    n = parse_int(s, pos, den);
    if (n == 0)
        throw std::invalid_argument("slope: expected denominator at offset " +
                                    std::to_string(pos));
    pos += n;
    if (pos != s.size())
        throw std::invalid_argument("slope: trailing input at offset " + std::to_string(pos));
    if (num == 0 && den == 0) throw std::invalid_argument("slope: 0/0 rejected");
    return Slope<I>(num, den);
}

}  // namespace tangle
