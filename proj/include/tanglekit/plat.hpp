#pragma once

// Open 4-plat presentations: ordered twist regions alternating between the
// first and middle strand pairs, the first region on the first two strands.
// Rendering is schematic and deterministic; regions with more than
// kGlyphCap half-twists are drawn as a labeled box instead of stacked
// crossing glyphs so huge inputs stay O(#regions).

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tanglekit/continued_fraction.hpp"

namespace tangle {

template <class I>
struct PlatRegion {
    int position{0};  // 0 = strands 1-2, 1 = strands 2-3
    I twists{0};
};

template <class I>
struct PlatDesc {
    std::vector<PlatRegion<I>> regions;
    std::optional<size_t> site;  // region index of the RSR site
    std::optional<std::string> framing_note;

    ContinuedFraction<I> coefficients() const {
        ContinuedFraction<I> cf;
        cf.coeffs.reserve(regions.size());
        for (const auto& r : regions) cf.coeffs.push_back(r.twists);
        return cf;
    }

    Slope<I> value() const { return cf_eval(coefficients()); }
};

template <class I>
PlatDesc<I> cf_to_plat(const ContinuedFraction<I>& cf) {
    PlatDesc<I> p;
    p.regions.reserve(cf.coeffs.size());
    for (size_t i = 0; i < cf.coeffs.size(); ++i)
        p.regions.push_back(PlatRegion<I>{int(i % 2), cf.coeffs[i]});
    return p;
}

namespace detail {

constexpr int kGlyphCap = 8;  // stacked crossing glyphs up to here, label beyond

// strand columns in the ascii grid
constexpr int kCols[4] = {0, 3, 6, 9};

inline std::string plain_row() { return "|  |  |  |"; }

template <class I>
std::string ascii_render(const PlatDesc<I>& p) {
    std::string out;
    auto emit = [&](bool site_row, const std::string& body) {
        out += site_row ? "* " : "  ";
        out += body;
        out += "\n";
    };
    emit(false, "o  o  o  o");
    emit(false, plain_row());
    for (size_t i = 0; i < p.regions.size(); ++i) {
        const auto& r = p.regions[i];
        bool site = p.site && *p.site == i;
        int lc = kCols[r.position];      // left strand column
        int rc = kCols[r.position + 1];  // right strand column
        I a = iabs(r.twists);
        if (r.twists != 0 && a <= kGlyphCap) {
            char lg = r.twists > 0 ? '\\' : '/';
            char rg = r.twists > 0 ? '/' : '\\';
            for (I k = 0; k < a; ++k) {
                std::string row = plain_row();
                row[lc] = lg;
                row[rc] = rg;
                emit(site, row);
            }
        } else {
            std::string label = "(" + int_to_string(r.twists) + ")";
            std::string row = plain_row();
            row.replace(lc, std::min(label.size(), row.size() - lc), label);
            if (label.size() > row.size() - lc)
                row = row.substr(0, lc) + label;
            emit(site, row);
        }
        emit(false, plain_row());
    }
    emit(false, "o  o  o  o");
    if (p.framing_note) out += "# " + *p.framing_note + "\n";
    return out;
}

inline void append_attr(std::string& s, const char* k, const std::string& v) {
    s += " ";
    s += k;
    s += "=\"" + v + "\"";
}

template <class I>
std::string svg_render(const PlatDesc<I>& p) {
    // fixed grid: strand spacing 40, half-twist height 20
    const int spacing = 40, half = 20, margin = 20;
    const int width = margin * 2 + spacing * 3;
    // vertical layout: gap row of `half` before/after each region
    long long height = half;
    std::vector<long long> tops;
    for (const auto& r : p.regions) {
        tops.push_back(height);
        I a = iabs(r.twists);
        long long rows = (r.twists != 0 && a <= kGlyphCap)
                             ? (long long)a
                             : 3;  // labeled box is three half-twists tall
        height += rows * half + half;
    }
    long long total = height + half;
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(total) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(total) + "\">\n";
    for (int i = 0; i < 4; ++i) {
        int x = margin + i * spacing;
        s += "<line";
        append_attr(s, "x1", std::to_string(x));
        append_attr(s, "y1", "0");
        append_attr(s, "x2", std::to_string(x));
        append_attr(s, "y2", std::to_string(total));
        append_attr(s, "stroke", "black");
        s += "/>\n";
    }
    for (size_t i = 0; i < p.regions.size(); ++i) {
        const auto& r = p.regions[i];
        int x0 = margin + r.position * spacing;
        int x1 = x0 + spacing;
        long long y = tops[i];
        I a = iabs(r.twists);
        bool glyphs = r.twists != 0 && a <= kGlyphCap;
        long long boxh = glyphs ? (long long)a * half : 3 * half;
        if (glyphs) {
            for (long long k = 0; k < (long long)a; ++k) {
                long long y0 = y + k * half, y1 = y0 + half;
                // one half-twist: the two strands exchange; sign sets which
                // diagonal is drawn on top (drawn second)
                const char* first = r.twists > 0 ? "gray" : "black";
                const char* second = r.twists > 0 ? "black" : "gray";
                s += "<line";
                append_attr(s, "x1", std::to_string(x0));
                append_attr(s, "y1", std::to_string(y0));
                append_attr(s, "x2", std::to_string(x1));
                append_attr(s, "y2", std::to_string(y1));
                append_attr(s, "stroke", first);
                s += "/>\n<line";
                append_attr(s, "x1", std::to_string(x1));
                append_attr(s, "y1", std::to_string(y0));
                append_attr(s, "x2", std::to_string(x0));
                append_attr(s, "y2", std::to_string(y1));
                append_attr(s, "stroke", second);
                s += "/>\n";
            }
        } else {
            s += "<rect";
            append_attr(s, "x", std::to_string(x0));
            append_attr(s, "y", std::to_string(y));
            append_attr(s, "width", std::to_string(spacing));
            append_attr(s, "height", std::to_string(boxh));
            append_attr(s, "fill", "none");
            append_attr(s, "stroke", "black");
            s += "/>\n<text";
            append_attr(s, "x", std::to_string(x0 + spacing / 2));
            append_attr(s, "y", std::to_string(y + boxh / 2));
            append_attr(s, "text-anchor", "middle");
            s += ">" + int_to_string(r.twists) + "</text>\n";
        }
        if (p.site && *p.site == i) {
            s += "<rect";
            append_attr(s, "x", std::to_string(x0 - 5));
            append_attr(s, "y", std::to_string(y - 5));
            append_attr(s, "width", std::to_string(spacing + 10));
            append_attr(s, "height", std::to_string(boxh + 10));
            append_attr(s, "fill", "none");
            append_attr(s, "stroke", "red");
            s += "/>\n";
        }
    }
    if (p.framing_note) {
        s += "<!-- " + *p.framing_note + " -->\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace detail

enum class PlatFormat { ascii, svg };

template <class I>
std::string plat_render(const PlatDesc<I>& p, PlatFormat format) {
    switch (format) {
        case PlatFormat::ascii: return detail::ascii_render(p);
        case PlatFormat::svg: return detail::svg_render(p);
    }
    throw std::invalid_argument("plat_render: unknown format");
}

inline PlatFormat plat_format_from_string(const std::string& s) {
    if (s == "ascii") return PlatFormat::ascii;
    if (s == "svg") return PlatFormat::svg;
    throw std::invalid_argument("unknown format: " + s + " (expected ascii|svg)");
}

// SLOPE := INT "/" UINT | INT ; CF := "[" (INT ("," INT)*)? "]"
template <class I>
std::variant<Slope<I>, ContinuedFraction<I>> parse_tangle_notation(const std::string& in) {
    size_t i = 0;
    while (i < in.size() && std::isspace((unsigned char)in[i])) ++i;
    if (i < in.size() && in[i] == '[') return parse_cf<I>(in);
    // slopes are whitespace-insensitive too: strip and reparse
    std::string compact;
    for (char ch : in)
        if (!std::isspace((unsigned char)ch)) compact += ch;
    if (compact.empty()) throw std::invalid_argument("empty tangle notation");
    return parse_slope<I>(compact);
}

}  // namespace tangle
