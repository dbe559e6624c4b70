#pragma once

// Continued fractions under the minus-sign convention
//   [a1, a2, ..., ak] = a1 - 1/(a2 - 1/(... - 1/ak)),
// evaluated right to left on projective (num, den) pairs so that division
// by zero never occurs and the empty word has value 1/0.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "tanglekit/slope.hpp"

namespace tangle {

template <class I>
struct ContinuedFraction {
    std::vector<I> coeffs;

    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<I> c) : coeffs(std::move(c)) {}
    ContinuedFraction(std::initializer_list<I> c) : coeffs(c) {}

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.coeffs == b.coeffs;
    }

    std::string str() const {
        std::string out = "[";
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) out += ",";
            out += int_to_string(coeffs[i]);
        }
        out += "]";
        return out;
    }
};

// raw continuant pair before slope normalization; always coprime since each
// step multiplies by a determinant-one matrix
template <class I>
std::pair<I, I> cf_eval_raw(const ContinuedFraction<I>& cf) {
    I n = 1, d = 0;
    for (auto it = cf.coeffs.rbegin(); it != cf.coeffs.rend(); ++it) {
        I n2 = (*it) * n - d;
        d = n;
        n = std::move(n2);
    }
    return {n, d};
}

template <class I>
Slope<I> cf_eval(const ContinuedFraction<I>& cf) {
    auto [n, d] = cf_eval_raw(cf);
    return Slope<I>(n, d);
}

// canonical expansion: subtractive Euclidean, each coefficient the ceiling
// of the remaining value, so every coefficient after the first is >= 2
template <class I>
ContinuedFraction<I> cf_expand(const Slope<I>& s) {
    ContinuedFraction<I> cf;
    I p = s.num, q = s.den;
    while (q != 0) {
        I a = ceil_div(p, q);
        cf.coeffs.push_back(a);
        I r = a * q - p;  // in [0, q)
        p = q;
        q = std::move(r);
    }
    return cf;
}

template <class I>
bool cf_equal(const ContinuedFraction<I>& x, const ContinuedFraction<I>& y) {
    return cf_eval(x) == cf_eval(y);
}

template <class I>
std::vector<I> reverse_negate(const std::vector<I>& c) {
    std::vector<I> out;
    out.reserve(c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(I(-*it));
    return out;
}

// [c1..cn, d, -cn..-c1]; evaluates to da^2/(1+dab) when [c] = a/b
template <class I>
ContinuedFraction<I> palindrome_extend(const std::vector<I>& c, const I& d) {
    std::vector<I> out = c;
    out.push_back(d);
    auto rn = reverse_negate(c);
    out.insert(out.end(), rn.begin(), rn.end());
    return ContinuedFraction<I>(std::move(out));
}

// grammar: "[" (INT ("," INT)*)? "]", whitespace-insensitive
template <class I>
ContinuedFraction<I> parse_cf(const std::string& s) {
    size_t pos = 0;
    auto skip = [&] { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; };
    skip();
    if (pos >= s.size() || s[pos] != '[')
        throw std::invalid_argument("cf: expected '[' at offset " + std::to_string(pos));
    ++pos;
    ContinuedFraction<I> cf;
    skip();
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip();
            I v;
            size_t n = parse_int(s, pos, v);
            if (n == 0)
                throw std::invalid_argument("cf: expected integer at offset " +
                                            std::to_string(pos));
            pos += n;
            cf.coeffs.push_back(v);
            skip();
            if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
            if (pos < s.size() && s[pos] == ']') { ++pos; break; }
            throw std::invalid_argument("cf: expected ',' or ']' at offset " +
                                        std::to_string(pos));
        }
    }
    skip();
    if (pos != s.size())
        throw std::invalid_argument("cf: trailing input at offset " + std::to_string(pos));
    return cf;
}

}  // namespace tangle
