#pragma once

// Integer helpers shared by the whole library. Everything is templated on
// the integer type; the default build uses boost::multiprecision::cpp_int,
// test oracles may instantiate int64_t where ranges are known small.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangle {

using bigint = boost::multiprecision::cpp_int;

template <class I>
I iabs(const I& x) {
    return x < 0 ? I(-x) : x;
}

template <class I>
int isign(const I& x) {
    return x < 0 ? -1 : (x > 0 ? 1 : 0);
}

template <class I>
I igcd(I a, I b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = ax + by with g = gcd(|a|,|b|) >= 0
template <class I>
void egcd(const I& a, const I& b, I& g, I& x, I& y) {
    I r0 = a, r1 = b;
    I x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        I q = r0 / r1;  // truncated division is fine: invariants hold over Z
        I r2 = r0 - q * r1;
        I x2 = x0 - q * x1;
        I y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    g = r0; x = x0; y = y0;
}

// floor division / nonnegative remainder, any sign of a, m > 0
template <class I>
I floor_div(const I& a, const I& m) {
    I q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0))) q -= 1;
    return q;
}

template <class I>
I ceil_div(const I& a, const I& m) {
    return -floor_div(I(-a), m);
}

template <class I>
I mod_floor(const I& a, const I& m) {
    I r = a % m;
    if (r < 0) r += iabs(m);
    return r;
}

// inverse of a mod m (m >= 1, gcd(a,m) = 1); result in [0,m)
template <class I>
I mod_inverse(const I& a, const I& m) {
    if (m == 1) return I(0);
    I g, x, y;
    egcd(mod_floor(a, m), m, g, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return mod_floor(x, m);
}

template <class I>
I isqrt(const I& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return I(0);
    I x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

template <class I>
bool perfect_square(const I& n, I& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

// positive divisors of |n|, ascending; n must be nonzero
template <class I>
std::vector<I> positive_divisors(const I& n) {
    if (n == 0) throw std::domain_error("divisors of zero");
    I m = iabs(n);
    std::vector<I> small, large;
    for (I i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            small.push_back(i);
            if (i * i != m) large.push_back(m / i);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

template <class I>
std::string int_to_string(const I& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// strict signed decimal integer; returns consumed length or 0 on failure
template <class I>
size_t parse_int(const std::string& s, size_t pos, I& out) {
    size_t i = pos;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return 0;
    I v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + int(s[i] - '0');
        ++i;
    }
    out = neg ? I(-v) : v;
    return i - pos;
}

}  // namespace tangle
