#include "smoothcolor/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace smoothcolor {

using nlohmann::json;

std::string coloring_to_json(const Coloring& c) {
    json j;
    j["n"] = c.n();
    if (const auto* lin = std::get_if<LinearColoring>(&c.variant())) {
        j["variant"] = "linear";
        j["coeffs"] = lin->coeffs;
    } else if (const auto* pr = std::get_if<PowerResidueColoring>(&c.variant())) {
        j["variant"] = "power_residue";
        j["k"] = pr->k;
        j["p"] = pr->p;
    } else if (const auto* g = std::get_if<GroupColoring>(&c.variant())) {
        j["variant"] = "group";
        j["table"] = g->table.cells;
    } else if (const auto* w = std::get_if<WindowColoring>(&c.variant())) {
        j["variant"] = "window";
        j["lo"] = w->window.lo;
        j["hi"] = w->window.hi;
        j["labels"] = w->labels;
    } else {
        const auto& s = std::get<StripColoring>(c.variant());
        j["variant"] = "strip";
        j["prefix"] = s.prefix;
    }
    return j.dump(2);
}

Coloring coloring_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        u64 n = j.at("n").get<u64>();
        SmoothContext ctx(n);
        std::string variant = j.at("variant").get<std::string>();
        if (variant == "linear")
            return Coloring(ctx, LinearColoring{j.at("coeffs").get<std::vector<int>>()});
        if (variant == "power_residue")
            return Coloring(ctx, PowerResidueColoring{j.at("k").get<u64>(), j.at("p").get<u64>()});
        if (variant == "group") {
            CayleyTable t(static_cast<int>(n), j.at("table").get<std::vector<int>>());
            std::string why;
            if (!t.valid(&why)) throw ParseError("invalid Cayley table: " + why);
            return Coloring(ctx, GroupColoring{std::move(t)});
        }
        if (variant == "window") {
            WindowColoring w;
            w.window = Box(j.at("lo").get<std::vector<int>>(), j.at("hi").get<std::vector<int>>());
            w.labels = j.at("labels").get<std::vector<long long>>();
            if (w.labels.size() != w.window.size())
                throw ParseError("label count does not match window size");
            return Coloring(ctx, std::move(w));
        }
        if (variant == "strip")
            return Coloring(ctx, StripColoring{static_cast<int>(n),
                                               j.at("prefix").get<std::vector<int>>()});
        throw ParseError("unknown variant: " + variant);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad coloring record: ") + e.what());
    }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

u64 parse_u64(const std::string& s) {
    std::size_t pos = 0;
    u64 v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer: " + s);
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, ','))
        out.push_back(static_cast<int>(std::stoll(part)));
    return out;
}

}  // namespace

Coloring parse_coloring(const std::string& literal) {
    if (!literal.empty() && literal[0] == '@') {
        std::ifstream in(literal.substr(1));
        if (!in) throw ParseError("cannot read " + literal.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        return coloring_from_json(buf.str());
    }
    auto parts = split(literal, ':');
    if (parts.size() < 2 || parts[1].rfind("n=", 0) != 0)
        throw ParseError("expected variant:n=N:params, got " + literal);
    u64 n = parse_u64(parts[1].substr(2));
    SmoothContext ctx(n);
    const std::string& kind = parts[0];
    try {
        if (kind == "linear") {
            if (parts.size() != 3) throw ParseError("linear needs a coefficient list");
            return Coloring(ctx, LinearColoring{parse_int_list(parts[2])});
        }
        if (kind == "power") {
            // power:n=6:k=17,p=103
            if (parts.size() != 3) throw ParseError("power needs k=...,p=...");
            u64 k = 0, p = 0;
            for (const auto& kv : split(parts[2], ',')) {
                if (kv.rfind("k=", 0) == 0) k = parse_u64(kv.substr(2));
                else if (kv.rfind("p=", 0) == 0) p = parse_u64(kv.substr(2));
                else throw ParseError("bad parameter: " + kv);
            }
            return Coloring(ctx, PowerResidueColoring{k, p});
        }
        if (kind == "strip") {
            if (parts.size() != 3) throw ParseError("strip needs a seed list");
            return Coloring(ctx, StripColoring{static_cast<int>(n), parse_int_list(parts[2])});
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown coloring literal kind: " + kind);
}

}  // namespace smoothcolor
