// Command-line frontend: every library capability behind one subcommand, with
// JSON output modes, deterministic results for fixed flags, and optional run
// manifests.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "smoothcolor/coincidences.hpp"
#include "smoothcolor/conjectures.hpp"
#include "smoothcolor/groups.hpp"
#include "smoothcolor/k_reps.hpp"
#include "smoothcolor/parallel.hpp"
#include "smoothcolor/serialize.hpp"
#include "smoothcolor/smooth.hpp"
#include "smoothcolor/strips.hpp"
#include "smoothcolor/strong_reps.hpp"
#include "smoothcolor/tiling.hpp"

using json = nlohmann::json;
using namespace smoothcolor;

namespace {

constexpr const char* kVersion = "1.0.0";

u64 parse_scaled(const std::string& s) {
    // Accept 100000 or 1e5.
    if (s.find('e') != std::string::npos || s.find('E') != std::string::npos)
        return static_cast<u64>(std::stod(s));
    return std::stoull(s);
}

Box parse_window(const std::string& spec, std::size_t dims) {
    // Either a single side S (cube [0, S-1]^dims) or "lo:hi,lo:hi,...".
    if (spec.find(':') == std::string::npos)
        return Box::cube(dims, 0, static_cast<int>(std::stoi(spec)) - 1);
    std::vector<int> lo, hi;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto colon = part.find(':');
        lo.push_back(std::stoi(part.substr(0, colon)));
        hi.push_back(std::stoi(part.substr(colon + 1)));
    }
    if (lo.size() != dims)
        throw ParseError("window has " + std::to_string(lo.size()) + " axes, coloring needs " +
                         std::to_string(dims));
    return Box(std::move(lo), std::move(hi));
}

json table_json(const CayleyTable& t) {
    json rows = json::array();
    for (int a = 1; a <= t.n; ++a) {
        json row = json::array();
        for (int b = 1; b <= t.n; ++b) row.push_back(t.op(a, b));
        rows.push_back(row);
    }
    return rows;
}

void print_table(const CayleyTable& t) {
    for (int a = 1; a <= t.n; ++a) {
        for (int b = 1; b <= t.n; ++b) std::cout << (b > 1 ? " " : "") << t.op(a, b);
        std::cout << "\n";
    }
}

std::string method_name(KRepMethod m) {
    switch (m) {
        case KRepMethod::none_by_thm: return "none_by_theorem";
        case KRepMethod::bound_p_lt_k2: return "bound_p_lt_k2";
        case KRepMethod::faulhaber_remainder: return "faulhaber_remainder";
        case KRepMethod::bernoulli_2k_fallback: return "bernoulli_2k_fallback";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"satisfactory colorings of smooth numbers"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (default: SMOOTHCOLOR_THREADS or hardware)");
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a JSON run manifest to this path");

    bool as_json = false;
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };

    // ---- verify
    auto* verify = app.add_subcommand("verify", "check a coloring for satisfactoriness");
    std::string coloring_arg, window_spec;
    std::string bound_str = "100000";
    verify->add_option("--coloring", coloring_arg, "coloring literal or @file.json")->required();
    verify->add_option("--bound", bound_str, "check all a with n*a <= bound");
    verify->add_option("--window", window_spec, "verify on an exponent window instead");
    add_json(verify);

    // ---- linear
    auto* linear = app.add_subcommand("linear", "linear coefficient vector");
    int lin_n = 0;
    std::string lin_mode = "greedy";
    linear->add_option("--n", lin_n)->required();
    linear->add_option("--mode", lin_mode)->check(CLI::IsMember({"greedy", "backtracking"}));
    add_json(linear);

    // ---- strong-rep
    auto* strong = app.add_subcommand("strong-rep", "smallest strong representative");
    u64 sr_n = 0;
    std::string sr_klimit = "100000000";
    strong->add_option("--n", sr_n)->required();
    strong->add_option("--k-limit", sr_klimit);
    add_json(strong);

    // ---- density
    auto* density = app.add_subcommand("density", "strong-representative counts");
    u64 de_n = 0;
    std::string de_upto = "100000";
    density->add_option("--n", de_n)->required();
    density->add_option("--upto", de_upto);
    add_json(density);

    // ---- k-reps
    auto* kreps = app.add_subcommand("k-reps", "all k-representatives for fixed k");
    unsigned kr_k = 0;
    kreps->add_option("--k", kr_k)->required();
    add_json(kreps);

    // ---- groups
    auto* groups = app.add_subcommand("groups", "satisfactory group tables");
    int gr_n = 0;
    std::string gr_type;
    groups->add_option("--n", gr_n)->required();
    groups->add_option("--type", gr_type, "restrict to one type, e.g. 2x4");
    add_json(groups);

    // ---- groupless
    auto* groupless = app.add_subcommand("groupless", "scan for groupless n");
    int gl_from = 0, gl_to = 0;
    groupless->add_option("--from", gl_from)->required();
    groupless->add_option("--to", gl_to)->required();
    add_json(groupless);

    // ---- tiling
    auto* tiling = app.add_subcommand("tiling", "tiling analysis and export");
    std::string ti_coloring, ti_window, ti_svg, ti_csv;
    tiling->add_option("--coloring", ti_coloring)->required();
    tiling->add_option("--window", ti_window, "side or lo:hi,lo:hi,...");
    tiling->add_option("--svg", ti_svg);
    tiling->add_option("--csv", ti_csv);
    add_json(tiling);

    // ---- nonmult
    auto* nonmult = app.add_subcommand("nonmult", "nonmultiplicative families");
    int nm_n = 6, nm_window = 12;
    std::string nm_seed, nm_svg;
    bool nm_extensions = false;
    nonmult->add_option("--n", nm_n)->check(CLI::IsMember({6, 8}));
    nonmult->add_option("--seed", nm_seed, "strip seed list, e.g. 1,2,3,1");
    nonmult->add_option("--window", nm_window);
    nonmult->add_option("--svg", nm_svg, "directory for slice SVGs");
    nonmult->add_flag("--extensions", nm_extensions, "list the six order-6 extensions");
    add_json(nonmult);

    // ---- coincidences
    auto* coin = app.add_subcommand("coincidences", "k-th power collision statistics");
    u64 co_k = 0, co_p = 0;
    coin->add_option("--k", co_k)->required();
    coin->add_option("--p", co_p)->required();
    add_json(coin);

    // ---- conjectures
    auto* conj = app.add_subcommand("conjectures", "randomized property harnesses");
    u64 cj_trials = 1000, cj_seed = 42;
    conj->add_option("--trials", cj_trials);
    conj->add_option("--seed", cj_seed);
    add_json(conj);

    // ---- tables
    auto* tables = app.add_subcommand("tables", "regenerate the reference tables");
    std::string tb_out = "tables";
    u64 tb_max_n = 13;
    tables->add_option("--out", tb_out, "output directory");
    tables->add_option("--max-n", tb_max_n, "largest order for the strong-rep table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream captured;
    auto* stdout_buf = std::cout.rdbuf();
    if (!manifest_path.empty()) std::cout.rdbuf(captured.rdbuf());

    int rc = 0;
    try {
        if (*verify) {
            Coloring c = parse_coloring(coloring_arg);
            VerificationReport rep = window_spec.empty()
                                         ? verify_satisfactory(c, parse_scaled(bound_str))
                                         : verify_on_window(c, parse_window(window_spec,
                                                                            c.ctx().pi_n()));
            if (as_json) {
                json j{{"ok", rep.ok}, {"checked", rep.checked_count}};
                if (rep.violation) {
                    auto [a, i, jx] = *rep.violation;
                    j["violation"] = {{"a", a}, {"i", i}, {"j", jx}};
                }
                std::cout << j.dump(2) << "\n";
            } else if (rep.ok) {
                std::cout << "ok (" << rep.checked_count << " tuples checked)\n";
            } else {
                auto [a, i, jx] = *rep.violation;
                std::cout << "violation at a=" << a << ": colors of " << i << "a and " << jx
                          << "a coincide\n";
            }
        } else if (*linear) {
            auto mode = lin_mode == "greedy" ? LinearMode::greedy : LinearMode::backtracking;
            auto coeffs = linear_coefficients(lin_n, mode);
            if (!coeffs) {
                std::cout << (as_json ? "null\n" : "none\n");
            } else if (as_json) {
                std::cout << json(*coeffs).dump() << "\n";
            } else {
                for (std::size_t i = 0; i < coeffs->size(); ++i)
                    std::cout << (i ? "," : "") << (*coeffs)[i];
                std::cout << "\n";
            }
        } else if (*strong) {
            auto progress = [](u64 k) { std::cerr << "k=" << k << "\n"; };
            auto res = smallest_strong_representative(sr_n, parse_scaled(sr_klimit), threads,
                                                      progress);
            if (!res) {
                std::cout << (as_json ? "null\n" : "none\n");
            } else if (as_json) {
                std::cout << json{{"k", res->first}, {"p", res->second}}.dump() << "\n";
            } else {
                std::cout << "k=" << res->first << " p=" << res->second << "\n";
            }
        } else if (*density) {
            u64 N = parse_scaled(de_upto);
            if (de_n == 5) {
                auto d = density_table_order5(N, threads);
                if (as_json)
                    std::cout << json{{"c1", d.c1},
                                      {"c5", d.c5},
                                      {"all", d.all},
                                      {"primes_1_mod_5", d.totient_primes}}
                                     .dump()
                              << "\n";
                else
                    std::cout << d.c1 << " " << d.c5 << " " << d.all << " " << d.totient_primes
                              << "\n";
            } else {
                u64 count = count_strong_reps(de_n, N, threads);
                if (as_json)
                    std::cout << json{{"n", de_n}, {"upto", N}, {"count", count}}.dump() << "\n";
                else
                    std::cout << count << "\n";
            }
        } else if (*kreps) {
            KRepReport rep = enumerate_k_representatives(kr_k);
            if (as_json) {
                json j{{"k", rep.k},
                       {"method", method_name(rep.method)},
                       {"bound_constant", rep.bound_constant.get_str()},
                       {"complete", rep.complete}};
                for (auto& [n, p] : rep.candidates) j["candidates"].push_back({{"n", n}, {"p", p}});
                j["verified"] = json::array();
                for (auto& [n, p] : rep.verified) j["verified"].push_back({{"n", n}, {"p", p}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "method: " << method_name(rep.method) << "\n";
                if (rep.bound_constant != 0)
                    std::cout << "bound constant: " << rep.bound_constant.get_str() << "\n";
                std::cout << "verified:";
                for (auto& [n, p] : rep.verified) std::cout << " (" << n << "," << p << ")";
                std::cout << "\n";
            }
        } else if (*groups) {
            std::vector<AbelianGroupType> types;
            if (gr_type.empty()) {
                types = abelian_groups_of_order(gr_n);
            } else {
                AbelianGroupType t;
                std::stringstream ss(gr_type);
                std::string part;
                while (std::getline(ss, part, 'x')) t.push_back(std::stoi(part));
                types.push_back(t);
            }
            json all = json::array();
            int count = 0;
            for (const auto& type : types) {
                auto tabs = satisfactory_groups(gr_n, type);
                for (const auto& t : tabs) {
                    ++count;
                    if (as_json) {
                        all.push_back({{"type", type}, {"table", table_json(t)}});
                    } else {
                        std::cout << "type";
                        for (int d : type) std::cout << " " << d;
                        std::cout << ":\n";
                        print_table(t);
                        std::cout << "\n";
                    }
                }
            }
            if (as_json) std::cout << all.dump(2) << "\n";
            else std::cout << count << " tables\n";
        } else if (*groupless) {
            std::vector<int> ns;
            for (int n = gl_from; n <= gl_to; ++n) ns.push_back(n);
            std::vector<char> flag(ns.size(), 0);
            run_sharded(worker_count(threads), [&](unsigned s, unsigned total) {
                for (std::size_t i = s; i < ns.size(); i += total)
                    flag[i] = is_groupless(ns[i]) ? 1 : 0;
            });
            json out = json::array();
            for (std::size_t i = 0; i < ns.size(); ++i)
                if (flag[i]) out.push_back(ns[i]);
            if (as_json) {
                std::cout << out.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < out.size(); ++i)
                    std::cout << (i ? " " : "") << out[i].get<int>();
                std::cout << "\n";
            }
        } else if (*tiling) {
            Coloring c = parse_coloring(ti_coloring);
            Box window = ti_window.empty()
                             ? default_window(c.ctx(), 2 * static_cast<int>(c.n()) + 2)
                             : parse_window(ti_window, c.ctx().pi_n());
            bool invariant = is_translation_invariant(c, window);
            json j{{"translation_invariant", invariant}};
            if (invariant) {
                auto table = extract_cayley_if_invariant(c, window);
                j["table"] = table_json(*table);
                auto lat = identity_lattice(c, window);
                j["lattice_index"] = lat.index;
                j["lattice_basis"] = lat.basis;
            }
            auto B = coloring_to_translates(c, 1, window);
            auto ds = check_direct_sum(polyomino(c.n()), B, window);
            j["direct_sum_ok"] = ds.ok;
            if (!ti_csv.empty()) export_csv(c, window, ti_csv);
            if (!ti_svg.empty()) export_svg(c, window, ti_svg);
            if (as_json) std::cout << j.dump(2) << "\n";
            else
                std::cout << "translation invariant: " << (invariant ? "yes" : "no")
                          << ", direct sum: " << (ds.ok ? "ok" : "violated") << "\n";
        } else if (*nonmult) {
            if (nm_extensions) {
                auto exts = extensions_div5(nm_window);
                Box window({0, 0, -1}, {nm_window - 1, nm_window - 1, nm_window - 2});
                int mult = 0;
                for (const auto& d : exts)
                    if (is_translation_invariant(d, window)) ++mult;
                std::cout << exts.size() << " extensions, " << mult << " multiplicative\n";
            } else {
                if (nm_seed.empty()) throw ParseError("--seed is required without --extensions");
                std::vector<int> prefix;
                std::stringstream ss(nm_seed);
                std::string part;
                while (std::getline(ss, part, ',')) prefix.push_back(std::stoi(part));
                Coloring d = strip_coloring(nm_n, prefix, nm_window);
                Box window = default_window(d.ctx(), nm_window);
                auto rep = verify_on_window(d, window);
                auto inv = strip_invariants_check(d, window);
                if (as_json) {
                    json j{{"satisfactory", rep.ok},
                           {"tuples_checked", rep.checked_count},
                           {"identities_ok", inv.ok},
                           {"identities_checked", inv.checked}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (rep.ok ? "satisfactory" : "NOT satisfactory") << " on window; "
                              << "identities " << (inv.ok ? "hold" : "FAIL") << "\n";
                }
                if (!nm_svg.empty()) export_svg(d, window, nm_svg);
            }
        } else if (*coin) {
            auto st = coincidence_stats(co_k, co_p);
            if (as_json) {
                json j{{"k", st.k},
                       {"p", st.p},
                       {"n", st.n},
                       {"coincidences", st.coincidence_count},
                       {"distinct", st.distinct_count},
                       {"c_k", st.c_k.get_str()},
                       {"predicted_fraction", st.predicted_fraction.get_str()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "n=" << st.n << " coincidences=" << st.coincidence_count
                          << " distinct=" << st.distinct_count << " ("
                          << st.distinct_count << "/" << st.n << ")\n"
                          << "predicted: C_k=" << st.c_k.get_str() << ", fraction="
                          << st.predicted_fraction.get_str() << "\n";
            }
        } else if (*conj) {
            auto g = graham_harness(cj_trials, cj_seed);
            auto p = pilz_harness(cj_trials, cj_seed + 1);
            if (as_json) {
                json j{{"graham", {{"trials", g.trials}, {"violations", g.violations}}},
                       {"pilz", {{"trials", p.trials}, {"violations", p.violations}}}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "graham: " << g.violations << "/" << g.trials << " violations\n"
                          << "pilz:   " << p.violations << "/" << p.trials << " violations\n";
            }
            if (g.violations || p.violations) rc = 1;
        } else if (*tables) {
            std::filesystem::create_directories(tb_out);
            auto dump = [&](const std::string& name, const json& j) {
                std::ofstream out(std::filesystem::path(tb_out) / name);
                out << j.dump(2) << "\n";
            };
            json t1 = json::array();
            for (int n = 1; n <= 31; ++n) {
                try {
                    auto c = linear_coefficients(n, LinearMode::greedy);
                    t1.push_back({{"n", n}, {"coeffs", c ? json(*c) : json(nullptr)}});
                } catch (const GreedyStuck&) {
                    t1.push_back({{"n", n}, {"coeffs", nullptr}});
                }
            }
            dump("linear_coefficients.json", t1);
            json t2 = json::array();
            for (u64 n = 1; n <= tb_max_n; ++n) {
                auto r = smallest_strong_representative(n, 100'000'000, threads);
                std::cerr << "strong-rep n=" << n << " done\n";
                t2.push_back({{"n", n},
                              {"k", r ? json(r->first) : json(nullptr)},
                              {"p", r ? json(r->second) : json(nullptr)}});
            }
            dump("smallest_strong_representatives.json", t2);
            auto d5 = density_table_order5(1'000'000, threads);
            dump("order5_density.json", json{{"c1", d5.c1},
                                             {"c5", d5.c5},
                                             {"all", d5.all},
                                             {"primes_1_mod_5", d5.totient_primes}});
            json t4 = json::object();
            for (u64 n = 2; n <= 10; ++n)
                t4[std::to_string(n)] = count_strong_reps(n, 100'000, threads);
            dump("strong_rep_counts.json", t4);
            json gt = json::array();
            for (int n : {6, 7, 8})
                for (const auto& type : abelian_groups_of_order(n))
                    for (const auto& t : satisfactory_groups(n, type))
                        gt.push_back({{"n", n}, {"type", type}, {"table", table_json(t)}});
            dump("group_tables.json", gt);
            std::cout << "wrote tables to " << tb_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cout.rdbuf(stdout_buf);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!manifest_path.empty()) {
        std::cout.rdbuf(stdout_buf);
        std::cout << captured.str();
        auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json m{{"subcommand", app.get_subcommands().front()->get_name()},
               {"parameters", std::vector<std::string>(argv + 1, argv + argc)},
               {"tool_version", kVersion},
               {"wall_time_seconds", wall},
               {"output_digest", std::to_string(std::hash<std::string>{}(captured.str()))}};
        std::ofstream mf(manifest_path);
        mf << m.dump(2) << "\n";
    }
    return rc;
}
