// tanglekit command line: every operation as a subcommand, plus JSON-lines
// batch mode. Single queries print one JSON object; --batch FILE reads one
// request per line ({"command":...,"args":{...}}) and writes one response
// line per request in input order. Exit codes: 0 full success, 1 any
// per-request error (embedded in the output), 2 usage error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tanglekit/serialize.hpp"
#include "tanglekit/tanglekit.hpp"

namespace {

using tangle::json;
using Z = tangle::bigint;
using SlopeZ = tangle::Slope<Z>;
using CFZ = tangle::ContinuedFraction<Z>;

Z json_int(const json& v, const std::string& key) {
    if (v.is_number_integer()) return Z(v.get<int64_t>());
    if (v.is_string()) {
        Z out;
        const std::string s = v.get<std::string>();
        if (tangle::parse_int(s, size_t(0), out) != s.size())
            throw std::invalid_argument("field '" + key + "': not an integer: " + s);
        return out;
    }
    throw std::invalid_argument("field '" + key + "': expected integer");
}

struct ArgSpec {
    const char* key;
    enum Kind { Int, Str, Bool } kind;
    bool required;
};

const std::map<std::string, std::vector<ArgSpec>>& request_schema() {
    static const std::map<std::string, std::vector<ArgSpec>> schema = {
        {"eval", {{"cf", ArgSpec::Str, true}}},
        {"expand", {{"slope", ArgSpec::Str, true}}},
        {"pair-canon", {{"x", ArgSpec::Str, true}, {"y", ArgSpec::Str, true}}},
        {"classify-rsr",
         {{"x", ArgSpec::Str, true},
          {"y", ArgSpec::Str, true},
          {"d", ArgSpec::Int, true},
          {"verbose", ArgSpec::Bool, false}}},
        {"enumerate-family",
         {{"base", ArgSpec::Str, true},
          {"family", ArgSpec::Str, true},
          {"d", ArgSpec::Int, true},
          {"bound", ArgSpec::Int, true}}},
        {"tb-rsr",
         {{"x", ArgSpec::Str, true}, {"y", ArgSpec::Str, true}, {"d", ArgSpec::Int, true}}},
        {"tb-site",
         {{"x", ArgSpec::Str, true}, {"y", ArgSpec::Str, true}, {"d", ArgSpec::Int, true}}},
        {"greene", {{"link", ArgSpec::Str, true}}},
        {"lisca", {{"link", ArgSpec::Str, true}}},
        {"surgery",
         {{"r", ArgSpec::Int, true},
          {"s", ArgSpec::Int, true},
          {"P", ArgSpec::Int, true},
          {"Q", ArgSpec::Int, true},
          {"n", ArgSpec::Int, true}}},
        {"surgery-solve",
         {{"from", ArgSpec::Str, true},
          {"to", ArgSpec::Str, true},
          {"d", ArgSpec::Int, true},
          {"oriented", ArgSpec::Bool, false}}},
        {"klein", {{"k", ArgSpec::Int, true}, {"bound", ArgSpec::Int, true}}},
        {"catalog", {{"lens", ArgSpec::Str, true}}},
        {"render",
         {{"input", ArgSpec::Str, true},
          {"format", ArgSpec::Str, true},
          {"site", ArgSpec::Int, false}}},
    };
    return schema;
}

void validate_args(const std::string& command, const json& args) {
    auto it = request_schema().find(command);
    if (it == request_schema().end())
        throw std::invalid_argument("unknown command: " + command);
    if (!args.is_object()) throw std::invalid_argument("args must be an object");
    for (const auto& spec : it->second) {
        auto f = args.find(spec.key);
        if (f == args.end()) {
            if (spec.required)
                throw std::invalid_argument(std::string("missing field '") + spec.key + "'");
            continue;
        }
        switch (spec.kind) {
            case ArgSpec::Int: json_int(*f, spec.key); break;
            case ArgSpec::Str:
                if (!f->is_string())
                    throw std::invalid_argument(std::string("field '") + spec.key +
                                                "': expected string");
                break;
            case ArgSpec::Bool:
                if (!f->is_boolean())
                    throw std::invalid_argument(std::string("field '") + spec.key +
                                                "': expected boolean");
                break;
        }
    }
    for (auto& [k, v] : args.items()) {
        bool known = false;
        for (const auto& spec : it->second) known |= (k == spec.key);
        if (!known) throw std::invalid_argument("unknown field '" + k + "'");
    }
}

json dispatch(const std::string& command, const json& args) {
    validate_args(command, args);
    auto str = [&](const char* k) { return args.at(k).get<std::string>(); };
    auto num = [&](const char* k) { return json_int(args.at(k), k); };

    if (command == "eval") {
        json out;
        out["slope"] = tangle::cf_eval(tangle::parse_cf<Z>(str("cf"))).str();
        return out;
    }
    if (command == "expand") {
        json out;
        out["cf"] = tangle::cf_expand(tangle::parse_slope<Z>(str("slope"))).str();
        return out;
    }
    if (command == "pair-canon") {
        auto pc = tangle::pair_canonical(tangle::parse_slope<Z>(str("x")),
                                         tangle::parse_slope<Z>(str("y")));
        json out;
        out["dist"] = tangle::int_json(pc.dist);
        json res = json::array();
        for (const auto& r : pc.residues) res.push_back(tangle::int_json(r));
        out["residues"] = res;
        return out;
    }
    if (command == "classify-rsr") {
        bool verbose = args.value("verbose", false);
        auto ws = tangle::classify_rsr(tangle::parse_slope<Z>(str("x")),
                                       tangle::parse_slope<Z>(str("y")), num("d"), verbose);
        json out;
        json arr = json::array();
        for (const auto& w : ws) arr.push_back(tangle::witness_json(w));
        out["witnesses"] = arr;
        return out;
    }
    if (command == "enumerate-family") {
        auto members = tangle::family_general_members(
            tangle::parse_slope<Z>(str("base")), num("d"),
            tangle::family_from_string(str("family")), num("bound"));
        json out;
        json arr = json::array();
        for (const auto& [s, w] : members) {
            json m;
            m["slope"] = s.str();
            m["witness"] = tangle::witness_json(w);
            arr.push_back(m);
        }
        out["members"] = arr;
        return out;
    }
    if (command == "tb-rsr" || command == "tb-site") {
        auto x = tangle::parse_two_bridge<Z>(str("x"));
        auto y = tangle::parse_two_bridge<Z>(str("y"));
        Z d = num("d");
        auto w = tangle::tb_rsr_decide(x, y, d);
        json out;
        if (command == "tb-rsr") {
            out["witness"] = w ? tangle::witness_json(*w) : json(nullptr);
            return out;
        }
        if (!w) throw std::domain_error("no distance-" + tangle::int_to_string(d) +
                                        " RSR between " + x.str() + " and " + y.str());
        auto [cx, cy] = tangle::tb_rsr_site_cf(x, y, *w);
        out["cf_x"] = cx.str();
        out["cf_y"] = cy.str();
        return out;
    }
    if (command == "greene") {
        return tangle::check_result_json(
            tangle::greene_check(tangle::parse_two_bridge<Z>(str("link"))), "k");
    }
    if (command == "lisca") {
        return tangle::check_result_json(
            tangle::lisca_check(tangle::parse_two_bridge<Z>(str("link"))), "m");
    }
    if (command == "surgery") {
        auto res = tangle::torus_knot_surgery(num("r"), num("s"), num("P"), num("Q"), num("n"));
        json out = tangle::lens_json(res.lens);
        out["core"] = res.core_case;
        return out;
    }
    if (command == "surgery-solve") {
        bool oriented = args.value("oriented", false);
        auto ws = tangle::torus_knot_surgery_solve(tangle::parse_lens<Z>(str("from")),
                                                   tangle::parse_lens<Z>(str("to")), num("d"),
                                                   oriented);
        json out;
        json arr = json::array();
        for (const auto& w : ws)
            arr.push_back(json::array(
                {tangle::int_json(w[0]), tangle::int_json(w[1]), tangle::int_json(w[2])}));
        out["witnesses"] = arr;
        return out;
    }
    if (command == "klein") {
        Z k = num("k");
        json out;
        out["kind"] = tangle::klein_fiber_kind_name(tangle::klein_fiber_classify(k));
        json arr = json::array();
        for (const auto& s : tangle::klein_fiber_surgeries(k, num("bound"))) {
            json e;
            e["slope"] = s.slope.str();
            e["lens"] = json::array({tangle::int_json(s.lens.p), tangle::int_json(s.lens.q)});
            e["mirror"] = s.mirror;
            arr.push_back(e);
        }
        out["surgeries"] = arr;
        return out;
    }
    if (command == "catalog") {
        auto cat = tangle::seifert_knot_catalog(tangle::parse_lens<Z>(str("lens")));
        json out;
        json arr = json::array();
        {
            json t;
            t["type"] = "torus-knots";
            arr.push_back(t);
        }
        if (cat.klein_fiber_k) {
            Z k = *cat.klein_fiber_k;
            json t;
            t["type"] = "klein-fiber";
            t["k"] = tangle::int_json(k);
            t["note"] = "grid number one knot 2k in L(4k,2k-1)";
            t["seifert"] =
                tangle::seifert_json(tangle::SeifertInvariant<Z>{Z(-1), {{k, Z(1)}}});
            arr.push_back(t);
        }
        out["descriptors"] = arr;
        return out;
    }
    if (command == "render") {
        auto fmt = tangle::plat_format_from_string(str("format"));
        auto parsed = tangle::parse_tangle_notation<Z>(str("input"));
        tangle::ContinuedFraction<Z> cf = std::holds_alternative<CFZ>(parsed)
                                              ? std::get<CFZ>(parsed)
                                              : tangle::cf_expand(std::get<SlopeZ>(parsed));
        auto plat = tangle::cf_to_plat(cf);
        if (args.contains("site")) {
            Z site = json_int(args.at("site"), "site");
            if (site < 0 || site >= Z(plat.regions.size()))
                throw std::invalid_argument("site index out of range");
            plat.site = static_cast<size_t>(site);
        }
        json out;
        out["render"] = tangle::plat_render(plat, fmt);
        return out;
    }
    throw std::invalid_argument("unknown command: " + command);
}

json run_request(const std::string& command, const json& args) {
    json line;
    try {
        line["result"] = dispatch(command, args);
    } catch (const tangle::UnsupportedSiteError& e) {
        json err;
        err["message"] = e.what();
        err["cf_pair"] = json::array({e.cf_first, e.cf_second});
        line["error"] = err;
    } catch (const std::exception& e) {
        json err;
        err["message"] = e.what();
        line["error"] = err;
    }
    return line;
}

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TANGLEKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw);
        return 1;
    }
    return std::min(hw, 4u);
}

int run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open batch file: " << path << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);

    std::vector<json> responses(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= lines.size()) break;
            json req = json::parse(lines[i], nullptr, false);
            if (req.is_discarded() || !req.is_object() || !req.contains("command") ||
                !req.at("command").is_string()) {
                json err;
                err["message"] = "malformed request line";
                responses[i]["error"] = err;
                continue;
            }
            json extra = json::object();
            for (auto& [k, v] : req.items())
                if (k != "command" && k != "args") extra[k] = v;
            if (!extra.empty()) {
                json err;
                err["message"] = "unknown field '" + extra.begin().key() + "'";
                responses[i]["error"] = err;
                continue;
            }
            responses[i] = run_request(req.at("command").get<std::string>(),
                                       req.value("args", json::object()));
        }
    };
    unsigned nthreads = std::min<size_t>(thread_budget(), std::max<size_t>(lines.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    bool any_error = false;
    for (const auto& r : responses) {
        std::cout << r.dump() << "\n";
        any_error |= r.contains("error");
    }
    return any_error ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tanglekit: rational tangle RSR classification, 2-bridge links, "
                 "and lens-space surgery calculus"};
    app.require_subcommand(0, 1);

    std::string batch_file;
    app.add_option("--batch", batch_file, "JSON-lines request file");

    // single-query state
    std::string command;
    json args = json::object();

    auto add = [&](const std::string& name, const std::string& desc,
                   const std::vector<std::pair<const char*, const char*>>& positionals,
                   const std::vector<std::pair<const char*, const char*>>& int_opts = {},
                   bool verbose_flag = false, bool format_opt = false) {
        auto* sub = app.add_subcommand(name, desc);
        auto hold = std::make_shared<std::map<std::string, std::string>>();
        for (const auto& [key, help] : positionals)
            sub->add_option(key, (*hold)[key], help)->required();
        for (const auto& [key, help] : int_opts)
            sub->add_option(std::string("--") + key, (*hold)[key], help)->required();
        if (verbose_flag) sub->add_flag("--verbose", (*hold)["__verbose"], "all witnesses");
        if (format_opt)
            sub->add_option("--format", (*hold)["format"], "ascii|svg")->required();
        sub->callback([&, name, hold, int_opts, verbose_flag] {
            command = name;
            for (const auto& [key, val] : *hold) {
                if (val.empty()) continue;
                if (key == "__verbose") { args["verbose"] = true; continue; }
                bool is_int = false;
                for (const auto& [ik, ih] : int_opts) is_int |= key == ik;
                if (is_int)
                    args[key] = val;  // kept as string; json_int parses bigints
                else
                    args[key] = val;
            }
        });
        return sub;
    };

    add("eval", "evaluate a continued fraction to a slope", {{"cf", "[a1,a2,...]"}});
    add("expand", "canonical continued fraction of a slope", {{"slope", "p/q"}});
    add("pair-canon", "canonical invariant of a slope pair",
        {{"x", "slope"}, {"y", "slope"}});
    add("classify-rsr", "families containing the pair at distance d",
        {{"x", "slope"}, {"y", "slope"}}, {{"d", "RSR distance"}}, true);
    add("enumerate-family", "targets of one family from a base slope", {{"base", "slope"}},
        {{"d", "RSR distance"}, {"bound", "parameter bound"}})
        ->add_option("--family", [&args](CLI::results_t r) { args["family"] = r[0]; return true; },
                     "O|I|II|III|IV")
        ->required();
    add("tb-rsr", "decide a distance >= 2 RSR between 2-bridge links",
        {{"x", "S(p,q)"}, {"y", "S(p,q)"}}, {{"d", "RSR distance (>= 2)"}});
    add("tb-site", "site continued fractions for a 2-bridge RSR",
        {{"x", "S(p,q)"}, {"y", "S(p,q)"}}, {{"d", "RSR distance (>= 2)"}});
    add("greene", "distance-1 RSR to the unknot (arithmetic conditions)",
        {{"link", "S(p,q)"}});
    add("lisca", "distance-1 RSR to the unlink (arithmetic conditions)",
        {{"link", "S(p,q)"}});
    add("surgery", "1/n-surgery on a (P,Q)-torus knot in L(r,s)", {},
        {{"r", "lens p"}, {"s", "lens q"}, {"P", "torus knot P"}, {"Q", "torus knot Q"},
         {"n", "surgery 1/n"}});
    add("surgery-solve", "torus-knot surgery descriptions from one lens space to another",
        {{"from", "L(p,q)"}, {"to", "L(p,q)"}}, {{"d", "distance |n|"}})
        ->add_flag_function(
            "--oriented",
            [&args](int64_t count) { if (count) args["oriented"] = true; },
            "match the target with its orientation (no mirror sweep)");
    add("klein", "Klein-bottle fiber knot: classification and lens surgeries", {},
        {{"k", "fiber parameter"}, {"bound", "surgery slope bound"}});
    add("catalog", "knots with Seifert fibered exterior in a lens space",
        {{"lens", "L(p,q)"}});
    add("render", "render a 4-plat (ascii or svg)", {{"input", "slope or [cf]"}}, {}, false,
        true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!batch_file.empty()) return run_batch(batch_file);
    if (command.empty()) {
        std::cerr << app.help();
        return 2;
    }
    json response = run_request(command, args);
    std::cout << response.dump(2) << "\n";
    return response.contains("error") ? 1 : 0;
}
