#pragma once

// Lens spaces with orientation (-L(p,q) = L(p,-q)), the two generalized
// Seifert-fibration shapes that give lens spaces, and the surgery calculus
// for torus knots and Klein-bottle regular fibers.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglekit/slope.hpp"
#include "tanglekit/unimodular.hpp"

namespace tangle {

// canonical oriented form: 0 <= q < p for p >= 1, and L(0,1) = S1 x S2
template <class I>
struct LensSpace {
    I p{1};
    I q{0};

    LensSpace() = default;
    LensSpace(I p_, I q_) : p(std::move(p_)), q(std::move(q_)) { normalize(); }

    std::string str() const { return "L(" + int_to_string(p) + "," + int_to_string(q) + ")"; }

    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const LensSpace& a, const LensSpace& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }

  private:
    void normalize() {
        if (p < 0) { p = -p; q = -q; }
        if (p == 0) {
            if (iabs(q) != 1) throw std::invalid_argument("L(0,q): q must be +-1");
            q = 1;
            return;
        }
        q = mod_floor(q, p);
        if (p == 1) { q = 0; return; }
        if (q == 0 || igcd(p, q) != 1)
            throw std::invalid_argument("L(p,q): gcd(p,q) must be 1");
    }
};

template <class I>
LensSpace<I> lens_mirror(const LensSpace<I>& l) {
    if (l.p <= 1) return l;
    return LensSpace<I>(l.p, l.p - l.q);
}

template <class I>
std::vector<I> lens_residues(const LensSpace<I>& l) {
    if (l.p == 0) return {I(1)};
    if (l.p == 1) return {I(0)};
    std::vector<I> out{l.q, mod_inverse(l.q, l.p)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class I>
bool lens_equiv(const LensSpace<I>& x, const LensSpace<I>& y, bool oriented) {
    if (x.p != y.p) return false;
    if (x.p <= 1) return true;
    auto res = lens_residues(x);
    if (std::find(res.begin(), res.end(), y.q) != res.end()) return true;
    if (!oriented) {
        for (const auto& r : res)
            if (mod_floor(I(-r), x.p) == y.q) return true;
    }
    return false;
}

template <class I>
LensSpace<I> parse_lens(const std::string& s) {
    const std::string msg = "lens space: expected L(p,q), got " + s;
    if (s.size() < 6 || s[0] != 'L' || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument(msg);
    I p, q;
    size_t pos = 2;
    size_t n = parse_int(s, pos, p);
    if (n == 0) throw std::invalid_argument(msg);
    pos += n;
    if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument(msg);
    ++pos;
    n = parse_int(s, pos, q);
    if (n == 0 || pos + n + 1 != s.size()) throw std::invalid_argument(msg);
    return LensSpace<I>(p, q);
}

// ---------------------------------------------------------------------------
// generalized Seifert invariants M(g; (a1,b1), ..., (an,bn))

template <class I>
struct SeifertInvariant {
    I g{0};  // negative genus encodes a non-orientable base
    std::vector<std::pair<I, I>> pairs;

    std::string str() const {
        std::string out = "M(" + int_to_string(g) + ";";
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (i) out += ",";
            out += "(" + int_to_string(pairs[i].first) + "," +
                   int_to_string(pairs[i].second) + ")";
        }
        return out + ")";
    }
};

template <class I>
bool seifert_is_klein_shape(const SeifertInvariant<I>& s) {
    return s.g == -1 && s.pairs.size() == 1 && s.pairs[0].second == 1;
}

// the two displayed lens shapes: M(0;(a1,b1),(a2,b2)) and M(-1;(a,1));
// everything else reports none
template <class I>
std::optional<LensSpace<I>> lens_of_seifert(const SeifertInvariant<I>& s) {
    if (seifert_is_klein_shape(s)) {
        const I& alpha = s.pairs[0].first;
        return LensSpace<I>(4 * alpha, 2 * alpha - 1);
    }
    if (s.g == 0 && s.pairs.size() == 2) {
        const auto& [a1, b1] = s.pairs[0];
        const auto& [a2, b2] = s.pairs[1];
        if (igcd(a1, b1) != 1 || igcd(a2, b2) != 1)
            throw std::invalid_argument("lens_of_seifert: non-coprime Seifert pair");
        I P = a1 * b2 + a2 * b1;
        if (P == 0) return LensSpace<I>(I(0), I(1));
        // Bezout column (x,y): b2*y - a2*x = 1; Q is then x*a1 + y*b1,
        // calibrated against M(0;(2,1),(2,2k-1)) = L(4k,2k-1)
        I g, u, v;
        egcd(b2, a2, g, u, v);  // b2*u + a2*v = 1
        I y = u, x = -v;
        return LensSpace<I>(P, x * a1 + y * b1);
    }
    return std::nullopt;
}

// M(-1;(a,1)) -> M(0;(2,1),(2,2a-1)); the lens class is preserved
template <class I>
SeifertInvariant<I> seifert_normalize(const SeifertInvariant<I>& s) {
    if (!seifert_is_klein_shape(s))
        throw std::invalid_argument("seifert_normalize: expected M(-1;(a,1))");
    const I& alpha = s.pairs[0].first;
    return SeifertInvariant<I>{I(0), {{I(2), I(1)}, {I(2), 2 * alpha - 1}}};
}

// ---------------------------------------------------------------------------
// surgeries

template <class I>
struct SurgeryResult {
    LensSpace<I> lens;
    bool core_case;  // |P| = 1 or |delta| = 1: K is a Heegaard core
};

// 1/n-surgery on the (P,Q)-torus knot in L(r,s), torus framing:
// L(r + n*delta*P, s + n*delta*Q) with delta = P*s - r*Q
template <class I>
SurgeryResult<I> torus_knot_surgery(const I& r, const I& s, const I& P, const I& Q,
                                    const I& n) {
    if (igcd(P, Q) != 1) throw std::invalid_argument("torus knot: gcd(P,Q) != 1");
    if (igcd(r, s) != 1) throw std::invalid_argument("lens space: gcd(r,s) != 1");
    I delta = P * s - r * Q;
    LensSpace<I> out(r + n * delta * P, s + n * delta * Q);
    return {out, iabs(P) == 1 || iabs(delta) == 1};
}

// all (P,Q,n) with |n| = d whose surgery lands on `to`, over representatives
// of `from` and (unless `oriented`) simultaneous mirrors of the pair; finite
// via the divisor reduction except that base S1 x S2 needs a bounded sweep
// of Q
template <class I>
std::vector<std::array<I, 3>> torus_knot_surgery_solve(const LensSpace<I>& from,
                                                       const LensSpace<I>& to, const I& d,
                                                       bool oriented = false) {
    if (d < 1) throw std::invalid_argument("torus_knot_surgery_solve: d >= 1 required");
    std::set<std::array<I, 3>> out;
    for (int mu = 0; mu < (oriented ? 1 : 2); ++mu) {
        LensSpace<I> fm = mu ? lens_mirror(from) : from;
        LensSpace<I> tm = mu ? lens_mirror(to) : to;
        const I& r = fm.p;
        const I& u = tm.p;
        for (const I& sr : lens_residues(fm)) {
            for (const I& n : {I(d), I(-d)}) {
                // meridional torus knot (0,1): every surgery returns `from`
                if (lens_equiv(fm, tm, true)) out.insert({I(0), I(1), n});
                // fiber-parallel (r, sr): delta = 0
                if (r >= 1 && lens_equiv(fm, tm, true))
                    out.insert({r, sr, n});
                if (r == 0) {
                    // delta = P*s with s = +-1: u = |n*delta*P| = d*P^2
                    if (u == 0) continue;
                    if (u % d != 0) continue;
                    I P2 = u / d, P;
                    if (!perfect_square(P2, P)) continue;
                    I window = u + 2;
                    for (I Q = -window; Q <= window; ++Q) {
                        if (igcd(P, Q) != 1) continue;
                        auto res = torus_knot_surgery(r, sr, P, Q, n);
                        if (lens_equiv(res.lens, tm, true)) out.insert({P, Q, n});
                    }
                    continue;
                }
                for (int sigma_u : {1, -1}) {
                    if (u == 0 && sigma_u < 0) continue;
                    I W = sigma_u * u - r;  // = n * delta * P
                    if (W == 0 || W % n != 0) continue;
                    I w = W / n;            // = delta * P
                    for (const I& P : positive_divisors(w)) {
                        I delta = w / P;
                        // delta = P*sr - r*Q
                        if (mod_floor(I(P * sr - delta), r) != 0) continue;
                        I Q = (P * sr - delta) / r;
                        if (igcd(P, Q) != 1) continue;
                        auto res = torus_knot_surgery(r, sr, P, Q, n);
                        if (lens_equiv(res.lens, tm, true)) out.insert({P, Q, n});
                    }
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Klein-bottle regular fibers (the 2k-th grid number one knots)

enum class KleinFiberKind { trivial_knot, torus_knot, toroidal_nonfibered };

inline const char* klein_fiber_kind_name(KleinFiberKind k) {
    switch (k) {
        case KleinFiberKind::trivial_knot: return "trivial knot";
        case KleinFiberKind::torus_knot: return "torus knot";
        case KleinFiberKind::toroidal_nonfibered: return "toroidal, non-fibered, not a torus knot";
    }
    return "?";
}

template <class I>
KleinFiberKind klein_fiber_classify(const I& k) {
    if (k == 0) return KleinFiberKind::trivial_knot;
    if (iabs(k) == 1) return KleinFiberKind::torus_knot;
    return KleinFiberKind::toroidal_nonfibered;
}

// one lens-space surgery on the regular fiber of M(-1;(k,1)) in L(4k,2k-1);
// `lens` is the canonical oriented form, `mirror` says the natural
// presentation of the result is -L(p, p-q)
template <class I>
struct KleinSurgery {
    Slope<I> slope;  // with respect to the Klein-bottle framing
    LensSpace<I> lens;
    bool mirror;
};

template <class I>
std::vector<KleinSurgery<I>> klein_fiber_surgeries(const I& k, const I& n_bound) {
    std::vector<KleinSurgery<I>> out;
    if (k == 0) {
        for (I n = -n_bound; n <= n_bound; ++n) {
            if (n == 0) continue;
            out.push_back({Slope<I>(I(1), n), LensSpace<I>(I(0), I(1)), false});
        }
        return out;
    }
    if (iabs(k) == 1) {
        int kappa = k > 0 ? 1 : -1;
        for (I n = -n_bound; n <= n_bound; ++n) {
            if (n == 0) continue;
            Slope<I> sl(kappa * (n + 1), n);
            LensSpace<I> l(4 * (n + 1), kappa * (2 * (n + 1) - 1));
            out.push_back({sl, l, kappa < 0 && l.p > 1});
        }
        return out;
    }
    if (iabs(k) == 2) {
        int kappa = k > 0 ? 1 : -1;
        // +-1-surgery on K in +-L(8,3) yields -+L(8,3)
        out.push_back(
            {Slope<I>(I(kappa), I(1)), LensSpace<I>(I(8), I(-3 * kappa)), kappa > 0});
        return out;
    }
    return out;  // |k| > 2: no non-trivial lens space surgery
}

// which knots with generalized Seifert fibered exterior live in Y
template <class I>
struct SeifertKnotCatalog {
    bool torus_knots = true;
    std::optional<I> klein_fiber_k;  // 2k-th grid number one knot in L(4k,2k-1)
};

template <class I>
SeifertKnotCatalog<I> seifert_knot_catalog(const LensSpace<I>& y) {
    SeifertKnotCatalog<I> cat;
    if (y.p == 0) {
        cat.klein_fiber_k = 0;
        return cat;
    }
    if (y.p % 4 == 0) {
        I k = y.p / 4;
        if (lens_equiv(y, LensSpace<I>(4 * k, 2 * k - 1), false)) cat.klein_fiber_k = k;
    }
    return cat;
}

}  // namespace tangle
