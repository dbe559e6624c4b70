#pragma once

// JSON forms used by the CLI and golden tests. Field order is stable
// (ordered_json). Integers are emitted as JSON numbers when they fit in
// int64 and as decimal strings otherwise.

#include <limits>

#include <nlohmann/json.hpp>

#include "tanglekit/lens.hpp"
#include "tanglekit/two_bridge.hpp"

namespace tangle {

using json = nlohmann::ordered_json;

template <class I>
json int_json(const I& v) {
    static const I lo = I(std::numeric_limits<int64_t>::min());
    static const I hi = I(std::numeric_limits<int64_t>::max());
    if (v >= lo && v <= hi) return json(static_cast<int64_t>(v));
    return json(int_to_string(v));
}

template <class I>
json slope_json(const Slope<I>& s) {
    return json(s.str());
}

template <class I>
json cf_json(const ContinuedFraction<I>& cf) {
    return json(cf.str());
}

template <class I>
json transport_json(const UnimodularMap<I>& t) {
    auto r = t.rows();
    return json::array({json::array({int_json(r[0][0]), int_json(r[0][1])}),
                        json::array({int_json(r[1][0]), int_json(r[1][1])})});
}

template <class I>
json witness_json(const RsrWitness<I>& w) {
    json j;
    j["family"] = family_name(w.family);
    j["d"] = int_json(w.d);
    j["eps"] = w.eps;
    j["a"] = int_json(w.a);
    j["b"] = int_json(w.b);
    j["branch"] = w.branch ? json(*w.branch) : json(nullptr);
    j["transport"] = w.transport ? transport_json(*w.transport) : json(nullptr);
    return j;
}

template <class I>
json lens_json(const LensSpace<I>& l, bool oriented = true) {
    json j;
    j["lens"] = json::array({int_json(l.p), int_json(l.q)});
    j["oriented"] = oriented;
    return j;
}

template <class I>
json seifert_json(const SeifertInvariant<I>& s) {
    json j;
    j["g"] = int_json(s.g);
    json pairs = json::array();
    for (const auto& [a, b] : s.pairs) pairs.push_back(json::array({int_json(a), int_json(b)}));
    j["pairs"] = pairs;
    return j;
}

template <class I>
json check_result_json(const std::pair<bool, std::vector<std::pair<I, int>>>& res,
                       const char* key) {
    json j;
    j["holds"] = res.first;
    json certs = json::array();
    for (const auto& [k, cond] : res.second) {
        json c;
        c[key] = int_json(k);
        c["cond"] = cond;
        certs.push_back(c);
    }
    j["certificates"] = certs;
    return j;
}

}  // namespace tangle
