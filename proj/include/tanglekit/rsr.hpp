#pragma once

// The five families of rational subtangle replacement. Witnesses store the
// normalized-family parameters: the queried pair is transport applied to
// (1/0, eps * value) for families O/I/II (exact slope equality), and for
// III/IV the pair class of (1/0, value) matches that of the query.
//
// The family-I/II membership reduction (D = eps*f*t^2, divisions, t
// consistency) and the III/IV divisor reductions are derived algebra; both
// are validated against brute-force enumeration in the test suite before
// anything else relies on them. The reduction must also be run against the
// projectively negated target: the raw family formula can emit a negative
// denominator, and normalization flips the sign of D.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglekit/pair_class.hpp"
#include "tanglekit/plat.hpp"

namespace tangle {

enum class Family { O, I, II, III, IV };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::O: return "O";
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "O") return Family::O;
    if (s == "I") return Family::I;
    if (s == "II") return Family::II;
    if (s == "III") return Family::III;
    if (s == "IV") return Family::IV;
    throw std::invalid_argument("unknown family: " + s);
}

template <class I>
struct RsrWitness {
    Family family{Family::O};
    I d{1};
    int eps{1};
    I a{0};
    I b{0};
    std::optional<int> branch;                     // III/IV Diophantine branch sign
    std::optional<UnimodularMap<I>> transport;     // normalized pair -> queried pair
};

template <class I>
Slope<I> family_normalized_value(Family f, const I& d, const I& a, const I& b) {
    switch (f) {
        case Family::O:
            if (igcd(a, d) != 1) throw std::invalid_argument("family O: gcd(a,d) != 1");
            return Slope<I>(a, d);
        case Family::I:
            if (a == 0 || igcd(a, b) != 1)
                throw std::invalid_argument("family I: need coprime a,b with a != 0");
            return Slope<I>(1 + d * a * b, d * a * a);
        case Family::II:
            if (d != 1) throw std::invalid_argument("family II: d = 1 only");
            if (a == 0 || igcd(a, b) != 1)
                throw std::invalid_argument("family II: need coprime a,b with a != 0");
            return Slope<I>(1 + 4 * a * b, 4 * a * a);
        case Family::III: {
            if (d != 1) throw std::invalid_argument("family III: d = 1 only");
            I m = 2 * a * b - 2 * a - b;
            return Slope<I>((b - 1) * (4 * a * b - 4 * a - 2 * b - 1), m * m);
        }
        case Family::IV: {
            if (d != 1) throw std::invalid_argument("family IV: d = 1 only");
            I m = 2 * a * b + a - b;
            return Slope<I>((2 * a - 1) * (2 * a * b + a - b + 1), m * m);
        }
    }
    throw std::invalid_argument("bad family");
}

template <class I>
Slope<I> witness_value(const RsrWitness<I>& w) {
    return family_normalized_value(w.family, w.d, w.a, w.b);
}

// soundness: does this witness certify the unordered pair {x, y}?
template <class I>
bool witness_matches(const RsrWitness<I>& w, const Slope<I>& x, const Slope<I>& y) {
    Slope<I> v = witness_value(w);
    if (w.family == Family::III || w.family == Family::IV) {
        if (v.den == 0) return false;
        return pair_canonical(x, y) == pair_canonical(Slope<I>::infinity(), v);
    }
    if (!w.transport) return false;
    const auto& t = *w.transport;
    Slope<I> base = t(Slope<I>::infinity());
    Slope<I> target = t(w.eps > 0 ? v : -v);
    return (base == x && target == y) || (base == y && target == x);
}

namespace detail {

// try to express the pair (base, target) as transport(1/0, eps*value) for a
// family-I-shaped value (1 + f*t*b1)/(f*t^2); returns the stored witness
template <class I>
std::optional<RsrWitness<I>> normalize_twist_witness(Family fam, const I& d_store, const I& f,
                                                     const Slope<I>& base,
                                                     const Slope<I>& target, const I& t) {
    UnimodularMap<I> tk = unimodular_taking(base);
    Slope<I> w = tk(target);
    if (w.den != f * t * t) return std::nullopt;
    for (int eps : {1, -1}) {
        I vnum = eps > 0 ? w.num : I(-w.num);
        I ft = f * t;
        if ((vnum - 1) % ft != 0) continue;
        I b1 = (vnum - 1) / ft;
        if (igcd(t, b1) != 1) continue;
        return RsrWitness<I>{fam, d_store, eps, t, b1, std::nullopt, tk.inverse()};
    }
    return std::nullopt;
}

// the derived membership reduction for the twist families (I with factor d,
// II with factor 4); both orderings and raw-sign sweeps are the caller's job
template <class I>
std::optional<RsrWitness<I>> twist_family_test(Family fam, const I& d_store, const I& f,
                                               const Slope<I>& base, const Slope<I>& target,
                                               int raw_sign) {
    const I &P = base.num, &Q = base.den;
    I U = raw_sign > 0 ? target.num : I(-target.num);
    I V = raw_sign > 0 ? target.den : I(-target.den);
    I D = Q * U - P * V;
    if (D == 0 || D % f != 0) return std::nullopt;
    I t2 = iabs(D) / f;
    I t;
    if (!perfect_square(t2, t)) return std::nullopt;
    int eps = D > 0 ? 1 : -1;
    I ft = f * t;
    if ((U - P) % ft != 0 || (V - Q) % ft != 0) return std::nullopt;
    I a = (U - P) / ft * eps;
    I b = (V - Q) / ft * eps;
    if (igcd(a, b) != 1) return std::nullopt;
    if (a * Q - b * P != t) return std::nullopt;
    return normalize_twist_witness(fam, d_store, f, base, target, t);
}

template <class I>
void divisor_family_witnesses(Family fam, const PairClass<I>& pc, const UnimodularMap<I>& psi,
                              std::vector<RsrWitness<I>>& out, bool verbose) {
    const I& s = pc.dist;
    I m;
    if (!perfect_square(s, m)) return;
    auto residue_hit = [&](const Slope<I>& v) {
        if (v.den != s) return false;
        if (s == 1) return true;
        I w = mod_floor(v.num, s);
        for (const auto& r : pc.residues)
            if (r == w) return true;
        return false;
    };
    for (int sigma : {1, -1}) {
        std::vector<I> deltas;
        if (fam == Family::III) {
            I D = 1 + sigma * m;
            if (D == 0) {
                deltas = {I(1), I(-1)};  // m = 1: every odd delta divides zero
            } else {
                for (auto& dd : positive_divisors(D))
                    if (dd % 2 == 1) {
                        deltas.push_back(dd);
                        deltas.push_back(I(-dd));
                    }
            }
            for (const auto& delta : deltas) {
                I Dq = (1 + sigma * m == 0) ? I(0) : (1 + sigma * m) / delta;
                I a = (delta + 1) / 2;
                I b = 1 + Dq;
                Slope<I> v = family_normalized_value(Family::III, I(1), a, b);
                if (!residue_hit(v)) continue;
                out.push_back(RsrWitness<I>{Family::III, I(1), 1, a, b, sigma, psi});
                if (!verbose) return;
            }
        } else {
            I D = 2 * sigma * m - 1;  // odd, never zero
            for (auto& dd : positive_divisors(D)) {
                deltas.push_back(dd);
                deltas.push_back(I(-dd));
            }
            for (const auto& delta : deltas) {
                I b = (delta - 1) / 2;
                I a = (1 + D / delta) / 2;  // D/delta odd, so exact
                Slope<I> v = family_normalized_value(Family::IV, I(1), a, b);
                if (!residue_hit(v)) continue;
                out.push_back(RsrWitness<I>{Family::IV, I(1), 1, a, b, sigma, psi});
                if (!verbose) return;
            }
        }
    }
}

}  // namespace detail

template <class I>
std::vector<RsrWitness<I>> classify_rsr(const Slope<I>& x, const Slope<I>& y, const I& d,
                                        bool verbose = false) {
    if (x == y) throw std::domain_error("classify_rsr: x = y (distance 0)");
    if (d <= 0) throw std::invalid_argument("classify_rsr: d must be positive");
    std::vector<RsrWitness<I>> out;

    if (slope_distance(x, y) == d) {
        UnimodularMap<I> tk = unimodular_taking(x);
        Slope<I> w = tk(y);
        out.push_back(RsrWitness<I>{Family::O, d, 1, w.num, I(0), std::nullopt, tk.inverse()});
    }

    auto run_twist = [&](Family fam, const I& f, const I& d_store) {
        bool found = false;
        for (int ordering = 0; ordering < 2 && (verbose || !found); ++ordering) {
            const Slope<I>& base = ordering ? y : x;
            const Slope<I>& target = ordering ? x : y;
            for (int raw_sign : {1, -1}) {
                auto w = detail::twist_family_test(fam, d_store, f, base, target, raw_sign);
                if (w) {
                    out.push_back(*w);
                    found = true;
                    if (!verbose) break;
                }
            }
        }
    };
    run_twist(Family::I, d, d);
    if (d == 1) {
        run_twist(Family::II, I(4), I(1));
        PairClass<I> pc = pair_canonical(x, y);
        UnimodularMap<I> psi = unimodular_taking(x).inverse();
        detail::divisor_family_witnesses(Family::III, pc, psi, out, verbose);
        detail::divisor_family_witnesses(Family::IV, pc, psi, out, verbose);
    }

    if (!verbose) {  // one witness per family, family order
        std::vector<RsrWitness<I>> dedup;
        for (Family f : {Family::O, Family::I, Family::II, Family::III, Family::IV})
            for (const auto& w : out)
                if (w.family == f) { dedup.push_back(w); break; }
        return dedup;
    }
    return out;
}

// all targets with |a|,|b| <= bound (and cofactor sweep for III/IV),
// deduplicated by target slope, sorted
template <class I>
std::vector<std::pair<Slope<I>, RsrWitness<I>>> family_general_members(const Slope<I>& base,
                                                                       const I& d, Family fam,
                                                                       const I& bound) {
    if (d <= 0) throw std::invalid_argument("family_general_members: d must be positive");
    if ((fam == Family::II || fam == Family::III || fam == Family::IV) && d != 1)
        throw std::invalid_argument("family_general_members: family needs d = 1");
    std::map<Slope<I>, RsrWitness<I>> found;
    UnimodularMap<I> tk = unimodular_taking(base);
    UnimodularMap<I> psi = tk.inverse();
    const I &p = base.num, &q = base.den;

    auto keep = [&](const Slope<I>& target, const RsrWitness<I>& w) {
        if (target == base) return;
        found.emplace(target, w);
    };

    if (fam == Family::O) {
        for (I a = -bound; a <= bound; ++a) {
            if (igcd(a, d) != 1) continue;
            keep(psi(Slope<I>(a, d)), RsrWitness<I>{Family::O, d, 1, a, I(0), std::nullopt, psi});
        }
    } else if (fam == Family::I || fam == Family::II) {
        I f = fam == Family::I ? d : I(4);
        for (I a = -bound; a <= bound; ++a) {
            for (I b = -bound; b <= bound; ++b) {
                if (igcd(a, b) != 1) continue;
                I t = a * q - b * p;
                if (t == 0) continue;
                for (int eps : {1, -1}) {
                    I u = p + eps * f * a * t;
                    I v = q + eps * f * b * t;
                    Slope<I> target(u, v);
                    if (target == base) continue;
                    auto w = detail::normalize_twist_witness(fam, d, f, base, target, iabs(t));
                    if (w) keep(target, *w);
                }
            }
        }
    } else {
        // psi = [[p, p'], [q, q']] up to sign; sweep both displayed
        // fractional forms, eps, and the cofactor window
        I pp = psi.b, qq = psi.d;
        I p0 = psi.a, q0 = psi.c;  // +/- (p, q); consistent column pair
        for (I a = -bound; a <= bound; ++a) {
            for (I b = -bound; b <= bound; ++b) {
                I wn, s, wn2;
                if (fam == Family::III) {
                    I mm = 2 * a * b - 2 * a - b;
                    s = mm * mm;
                    wn = (b - 1) * (4 * a * b - 4 * a - 2 * b - 1);
                    wn2 = (1 - 2 * a) * (1 - 2 * a) * (b - 1);
                } else {
                    I mm = 2 * a * b + a - b;
                    s = mm * mm;
                    wn = (2 * a - 1) * (2 * a * b + a - b + 1);
                    wn2 = (2 * b + 1) * (2 * a * b + a - b + 1);
                }
                if (s == 0) continue;  // degenerate parameters, trivial pair
                for (const I& w0 : {wn, wn2}) {
                    for (int eps : {1, -1}) {
                        for (I n = -bound; n <= bound; ++n) {
                            I u = p0 * w0 + eps * (pp + n * p0) * s;
                            I v = q0 * w0 + eps * (qq + n * q0) * s;
                            if (u == 0 && v == 0) continue;
                            Slope<I> target(u, v);
                            if (target == base) continue;
                            keep(target,
                                 RsrWitness<I>{fam, I(1), 1, a, b, std::nullopt, psi});
                        }
                    }
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

// representative continued fractions: ([], second) with the second value
// equal to -(1+dab)/(da^2) (I), -(1+4ab)/(4a^2) (II), or the displayed
// closed forms (III/IV); family O expands the value itself
template <class I>
std::pair<ContinuedFraction<I>, ContinuedFraction<I>> representative_cf_pair(
    const RsrWitness<I>& w) {
    ContinuedFraction<I> first;
    switch (w.family) {
        case Family::O:
            return {first, cf_expand(Slope<I>(w.a, w.d))};
        case Family::I:
        case Family::II: {
            auto c = cf_expand(Slope<I>(w.a, w.b));
            I mid = w.family == Family::I ? w.d : I(4);
            auto pal = palindrome_extend(c.coeffs, mid);
            std::vector<I> coeffs{I(0)};
            coeffs.insert(coeffs.end(), pal.coeffs.begin(), pal.coeffs.end());
            return {first, ContinuedFraction<I>(std::move(coeffs))};
        }
        case Family::III:
            return {first, ContinuedFraction<I>{I(0), I(-w.a), I(-2), I(-w.b), I(-2), w.a,
                                                I(1), w.b}};
        case Family::IV:
            return {first, ContinuedFraction<I>{I(0), I(-w.b - 1), I(-1), I(1), I(-w.a + 1),
                                                w.b, I(-2), I(w.a - 1)}};
    }
    throw std::invalid_argument("bad family");
}

struct UnsupportedSiteError : std::runtime_error {
    std::string cf_first, cf_second;
    UnsupportedSiteError(std::string f, std::string s)
        : std::runtime_error("site_plat: families III/IV have figure-defined sites; "
                             "use the representative continued fractions"),
          cf_first(std::move(f)),
          cf_second(std::move(s)) {}
};

// the two plats differing only in the marked twist region
template <class I>
std::pair<PlatDesc<I>, PlatDesc<I>> site_plat(const RsrWitness<I>& w) {
    auto make = [](const std::vector<I>& coeffs, size_t site, const std::string& note) {
        PlatDesc<I> p = cf_to_plat(ContinuedFraction<I>(coeffs));
        p.site = site;
        p.framing_note = note;
        return p;
    };
    switch (w.family) {
        case Family::O: {
            std::string note = "site: whole tangle core (full replacement)";
            return {make({I(0)}, 0, note), make({w.d}, 0, note)};
        }
        case Family::I: {
            auto c = cf_expand(Slope<I>(w.a, w.b));
            auto rn = reverse_negate(c.coeffs);
            std::vector<I> cx{I(0)}, cy{I(0)};
            cx.insert(cx.end(), c.coeffs.begin(), c.coeffs.end());
            cy.insert(cy.end(), c.coeffs.begin(), c.coeffs.end());
            cx.push_back(I(0));
            cy.push_back(w.d);
            cx.insert(cx.end(), rn.begin(), rn.end());
            cy.insert(cy.end(), rn.begin(), rn.end());
            size_t site = c.coeffs.size() + 1;
            std::string note = "framed by the plane of the page";
            return {make(cx, site, note), make(cy, site, note)};
        }
        case Family::II: {
            auto c = cf_expand(Slope<I>(w.a, w.b));
            auto rn = reverse_negate(c.coeffs);
            std::vector<I> cx{I(2)}, cy{I(-2)};
            cx.insert(cx.end(), rn.begin(), rn.end());
            cy.insert(cy.end(), rn.begin(), rn.end());
            std::string note = "coefficient diff 2 <-> -2; framed by the plane of the page";
            return {make(cx, 0, note), make(cy, 0, note)};
        }
        case Family::III:
        case Family::IV: {
            auto rep = representative_cf_pair(w);
            throw UnsupportedSiteError(rep.first.str(), rep.second.str());
        }
    }
    throw std::invalid_argument("bad family");
}

}  // namespace tangle
