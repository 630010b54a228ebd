// kappa-lab: command-line front end for the kappa/threshold-clique toolkit.
//
// Output conventions: JSON-lines for records, TSV for tables, human summaries
// on stderr. Exit status 0 on success, 1 on verification failure, 2 on usage
// errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kappalab/arith.hpp"
#include "kappalab/census.hpp"
#include "kappalab/clique.hpp"
#include "kappalab/constructions.hpp"
#include "kappalab/kappa.hpp"
#include "kappalab/rng.hpp"
#include "kappalab/sieve.hpp"

#ifndef KAPPALAB_DATA_DIR
#define KAPPALAB_DATA_DIR "data"
#endif

namespace {

using namespace kappalab;
using ordered_json = nlohmann::ordered_json;

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t segment_entries = std::size_t{1} << 22;
    std::size_t max_entries = std::size_t{1} << 24;
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget = 0.0;
    std::string data_dir = KAPPALAB_DATA_DIR;

    CensusOptions census_options() const {
        CensusOptions opt;
        opt.sieve.segment_entries = segment_entries;
        opt.sieve.max_entries = max_entries;
        opt.threads = threads;
        return opt;
    }
    CliqueBudget clique_budget() const {
        CliqueBudget b;
        b.max_nodes = node_budget;
        b.max_seconds = time_budget;
        b.on_progress = [](std::uint64_t nodes, std::size_t best) {
            std::cerr << "clique progress: " << nodes << " nodes expanded, best clique "
                      << best << "\n";
        };
        return b;
    }
};

// Spec precedence is flags > environment > config file, which differs from
// CLI11's built-in config handling, so config and environment are folded into
// the defaults before the real parse; explicit flags then override.
void apply_key(Globals& g, const std::string& key, const std::string& value) {
    if (key == "threads") {
        g.threads = static_cast<unsigned>(std::stoul(value));
    } else if (key == "segment-size") {
        g.segment_entries = std::stoull(value);
    } else if (key == "max-entries") {
        g.max_entries = std::stoull(value);
    } else if (key == "node-budget") {
        g.node_budget = std::stoull(value);
    } else if (key == "time-budget") {
        g.time_budget = std::stod(value);
    } else if (key == "data-dir") {
        g.data_dir = value;
    } else {
        throw CLI::ValidationError("unknown config key '" + key + "'");
    }
}

void load_config_file(Globals& g, const std::string& path, bool required) {
    std::ifstream in(path);
    if (!in) {
        if (required) throw CLI::ValidationError("cannot open config file '" + path + "'");
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            std::size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) apply_key(g, key, value);
    }
}

void load_environment(Globals& g) {
    const std::pair<const char*, const char*> vars[] = {
        {"KAPPALAB_THREADS", "threads"},
        {"KAPPALAB_SEGMENT_SIZE", "segment-size"},
        {"KAPPALAB_MAX_ENTRIES", "max-entries"},
        {"KAPPALAB_NODE_BUDGET", "node-budget"},
        {"KAPPALAB_TIME_BUDGET", "time-budget"},
        {"KAPPALAB_DATA_DIR", "data-dir"},
    };
    for (const auto& [env, key] : vars) {
        if (const char* value = std::getenv(env); value != nullptr && *value != '\0') {
            apply_key(g, key, value);
        }
    }
}

// Accepts plain decimals and integer-valued scientific notation ("1e8").
u64 parse_scaled_u64(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("empty number");
    std::size_t epos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, epos);
    u64 exponent = 0;
    if (epos != std::string::npos) {
        std::string exp = text.substr(epos + 1);
        if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos) {
            throw CLI::ValidationError("bad exponent in '" + text + "'");
        }
        exponent = std::stoull(exp);
    }
    std::size_t dot = mantissa.find('.');
    std::string digits = mantissa;
    u64 frac_len = 0;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        frac_len = mantissa.size() - dot - 1;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw CLI::ValidationError("bad number '" + text + "'");
    }
    if (frac_len > exponent) {
        throw CLI::ValidationError("'" + text + "' is not an integer");
    }
    u128 value = 0;
    for (char c : digits) {
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > ~u64{0}) throw CLI::ValidationError("'" + text + "' exceeds 64 bits");
    }
    for (u64 i = 0; i < exponent - frac_len; ++i) {
        value *= 10;
        if (value > ~u64{0}) throw CLI::ValidationError("'" + text + "' exceeds 64 bits");
    }
    return static_cast<u64>(value);
}

std::vector<u64> parse_prime_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_scaled_u64(item));
    }
    return out;
}

// Set files: one decimal integer per line, '#' starts a comment.
std::vector<u64> read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open set file '" + path + "'");
    std::vector<u64> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        out.push_back(parse_scaled_u64(line.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw CLI::ValidationError("set file '" + path + "' has no entries");
    return out;
}

std::string factorization_str(const std::vector<PrimePower>& factors) {
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty()) s += ' ';
        s += std::to_string(p);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

ordered_json record_json(const SolutionRecord& rec) {
    ordered_json j;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["func"] = func_name(rec.func);
    j["provenance"] = rec.prov.str();
    j["verified"] = rec.verified;
    return j;
}

ordered_json clique_json(const CliqueResult& r, double seconds) {
    ordered_json j;
    j["size"] = r.size;
    j["members"] = r.members;
    j["proved_maximum"] = r.proved_maximum;
    j["nodes_expanded"] = r.nodes_expanded;
    j["seconds"] = seconds;
    return j;
}

std::vector<u64> resolve_universe(const std::string& set_file,
                                  const std::string& primes_csv, u64 count) {
    if (!set_file.empty()) return read_set_file(set_file);
    if (primes_csv.empty()) {
        throw CLI::ValidationError("need either --set-file or --primes/--count");
    }
    return smooth_numbers(parse_prime_list(primes_csv), count);
}

// ---------------------------------------------------------------------------
// reproduce targets

struct ReproOutcome {
    ordered_json actual;
    std::string headline;
};

constexpr u64 kRemark1Seed = 0x52454d31;  // fixed so reruns are byte-identical

ReproOutcome run_repro_target(const std::string& id, const Globals& g) {
    ReproOutcome out;
    if (id == "theorem1a") {
        auto table = kappa_table(read_set_file(g.data_dir + "/set_theorem1a.txt"));
        out.actual["lcm"] = to_string(table.lcm());
        out.actual["lcm_factorization"] = factorization_str(factor_table_lcm(table));
        out.headline = to_string(table.lcm());
    } else if (id == "theorem1b") {
        auto table = kappa_table(read_set_file(g.data_dir + "/set_theorem1b.txt"));
        out.actual["max"] = to_string(table.max_kappa);
        out.headline = "max kappa " + to_string(table.max_kappa);
    } else if (id == "remark1") {
        std::vector<PrimePower> divisor{{2, 4}, {3, 2}, {5, 2}};
        for (u64 p : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) divisor.push_back({p, 1});
        SplitMix64 rng(kRemark1Seed);
        int failures = 0;
        const int trials = 1000;
        for (int t = 0; t < trials; ++t) {
            auto elements = rng.distinct_in_range(1, 1'000'000, 50);
            if (!pairwise_lcm_divisible(elements, divisor)) ++failures;
        }
        out.actual["trials"] = trials;
        out.actual["failures"] = failures;
        out.actual["divisor"] = "73786773910618969200";
        out.headline = std::to_string(failures) + " failures in " + std::to_string(trials) + " trials";
    } else if (id == "remark2") {
        auto universe = smooth_numbers({2, 3, 5}, 800);
        auto graph = build_threshold_graph(universe, 3569);
        auto clique = max_clique(graph, g.clique_budget());
        out.actual["universe"] = universe.size();
        out.actual["largest"] = universe.back();
        out.actual["threshold"] = "3569";
        out.actual["size"] = clique.size;
        out.actual["proved_maximum"] = clique.proved_maximum;
        out.headline = "clique size " + std::to_string(clique.size);
    } else if (id == "run5186") {
        auto starts = find_runs(3, 1, 10'000, g.census_options());
        out.actual["starts"] = starts;
        out.actual["phi"] = starts.size() == 1 ? phi(starts[0]) : 0;
        out.headline = starts.size() == 1
                           ? "run at " + std::to_string(starts[0]) + ", phi " +
                                 std::to_string(phi(starts[0]))
                           : "unexpected run count";
    } else if (id == "k3census") {
        auto report = enumerate_solutions(Func::Phi, 3, 1, 100'000'000, g.census_options());
        std::vector<u64> ns;
        for (const auto& rec : report.solutions) ns.push_back(rec.n);
        out.actual["solutions"] = ns;
        std::string list;
        for (u64 n : ns) list += (list.empty() ? "" : ", ") + std::to_string(n);
        out.headline = "solutions {" + list + "}";
    } else if (id == "theorem3tables") {
        auto five = kappa_table({1, 2, 3, 4, 6});
        auto four = kappa_table({1, 2, 3, 4});
        out.actual["set_1_2_3_4_6"] = {{"max", to_string(five.max_kappa)},
                                       {"lcm", to_string(five.lcm())}};
        out.actual["set_1_2_3_4"] = {{"max", to_string(four.max_kappa)},
                                     {"lcm", to_string(four.lcm())}};
        out.headline = "lcm " + to_string(five.lcm()) + " / " + to_string(four.lcm());
    } else {
        throw CLI::ValidationError("unknown reproduce target '" + id + "'");
    }
    return out;
}

int cmd_reproduce(const std::string& target, const std::string& manifest_path,
                  const Globals& g) {
    std::string path = manifest_path.empty()
                           ? g.data_dir + "/repro_manifest.jsonl"
                           : manifest_path;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open manifest '" + path + "'");
    std::vector<ordered_json> targets;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        targets.push_back(ordered_json::parse(line));
    }
    bool found = false;
    bool all_pass = true;
    for (const auto& t : targets) {
        std::string id = t.at("id");
        if (target != "all" && target != id) continue;
        found = true;
        auto t0 = std::chrono::steady_clock::now();
        ReproOutcome outcome = run_repro_target(id, g);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = outcome.actual == t.at("expected");
        all_pass = all_pass && pass;
        std::cout << id << '\t' << (pass ? "PASS" : "FAIL") << '\t' << outcome.headline
                  << '\t' << seconds << "s\n";
        if (!pass) {
            std::cerr << id << " mismatch\n  expected: " << t.at("expected").dump()
                      << "\n  actual:   " << outcome.actual.dump() << "\n";
        }
    }
    if (!found) throw CLI::ValidationError("unknown reproduce target '" + target + "'");
    if (!all_pass) throw VerificationFailure("reproduce: some targets failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa invariants, threshold-clique search, phi/sigma solution "
                 "constructions and censuses"};
    app.fallthrough();

    Globals g;
    // Config file first, environment second, so flags parsed below win.
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    }
    try {
        if (!config_path.empty()) {
            load_config_file(g, config_path, true);
        } else if (const char* env = std::getenv("KAPPALAB_CONFIG"); env != nullptr) {
            load_config_file(g, env, true);
        }
        load_environment(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string config_sink;
    app.add_option("--config", config_sink, "config file with key=value lines");
    app.add_option("--threads", g.threads, "worker parallelism for sieving");
    app.add_option("--segment-size", g.segment_entries, "sieve segment entries");
    app.add_option("--max-entries", g.max_entries, "whole-array sieve budget (entries)");
    app.add_option("--node-budget", g.node_budget, "clique search node budget");
    app.add_option("--time-budget", g.time_budget, "clique search seconds budget (0 = off)");
    app.add_option("--data-dir", g.data_dir, "bundled data directory");

    app.require_subcommand(1);

    // kappa a b
    std::string kappa_a, kappa_b;
    auto* sc_kappa = app.add_subcommand("kappa", "evaluate kappa(a, b)");
    sc_kappa->add_option("a", kappa_a)->required();
    sc_kappa->add_option("b", kappa_b)->required();
    sc_kappa->callback([&] {
        std::cout << to_string(kappa(parse_scaled_u64(kappa_a), parse_scaled_u64(kappa_b)))
                  << "\n";
    });

    // table --set-file path
    std::string table_file;
    auto* sc_table = app.add_subcommand("table", "pairwise kappa table of a set file");
    sc_table->add_option("--set-file", table_file, "newline-separated integers")->required();
    sc_table->callback([&] {
        auto table = kappa_table(read_set_file(table_file));
        const std::size_t n = table.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::cout << i << '\t' << j << '\t' << table.elements[i] << '\t'
                          << table.elements[j] << '\t' << to_string(table.at(i, j)) << "\n";
            }
        }
        ordered_json summary;
        summary["max"] = to_string(table.max_kappa);
        if (table.lcm_overflowed) {
            summary["lcm"] = nullptr;
            summary["lcm_factorization"] = nullptr;
            summary["lcm_overflow"] = true;
        } else {
            summary["lcm"] = to_string(table.lcm());
            summary["lcm_factorization"] = factorization_str(factor_table_lcm(table));
            summary["lcm_overflow"] = false;
        }
        std::cout << summary.dump() << "\n";
        std::cerr << n << " elements, max kappa " << to_string(table.max_kappa) << "\n";
    });

    // smooth --primes 2,3,5 --count 800
    std::string smooth_primes = "2,3,5";
    std::string smooth_count = "800";
    auto* sc_smooth = app.add_subcommand("smooth", "ordered smooth-number stream");
    sc_smooth->add_option("--primes", smooth_primes, "comma-separated primes");
    sc_smooth->add_option("--count", smooth_count, "how many values");
    sc_smooth->callback([&] {
        for (u64 v : smooth_numbers(parse_prime_list(smooth_primes),
                                    parse_scaled_u64(smooth_count))) {
            std::cout << v << "\n";
        }
    });

    // clique --primes 2,3,5 --count 800 --threshold 3569 [--set-file]
    std::string cl_primes, cl_count = "800", cl_threshold, cl_set;
    auto* sc_clique = app.add_subcommand("clique", "maximum clique of a threshold graph");
    sc_clique->add_option("--primes", cl_primes, "smooth universe primes");
    sc_clique->add_option("--count", cl_count, "smooth universe size");
    sc_clique->add_option("--set-file", cl_set, "explicit vertex set");
    sc_clique->add_option("--threshold", cl_threshold, "kappa threshold t")->required();
    sc_clique->callback([&] {
        auto universe = resolve_universe(cl_set, cl_primes, parse_scaled_u64(cl_count));
        auto graph = build_threshold_graph(universe, parse_u128(cl_threshold));
        auto t0 = std::chrono::steady_clock::now();
        auto result = max_clique(graph, g.clique_budget());
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << clique_json(result, seconds).dump() << "\n";
        std::cerr << graph.vertices.size() << " vertices, " << graph.edge_count
                  << " edges, clique " << result.size
                  << (result.proved_maximum ? " (maximum)" : " (budget hit)") << "\n";
    });

    // minimax --target 50 ...
    std::string mm_primes, mm_count = "800", mm_set;
    u64 mm_target = 50;
    auto* sc_minimax = app.add_subcommand(
        "minimax", "smallest threshold whose graph holds a clique of target size");
    sc_minimax->add_option("--primes", mm_primes, "smooth universe primes");
    sc_minimax->add_option("--count", mm_count, "smooth universe size");
    sc_minimax->add_option("--set-file", mm_set, "explicit vertex set");
    sc_minimax->add_option("--target", mm_target, "clique size to reach")->required();
    sc_minimax->callback([&] {
        auto universe = resolve_universe(mm_set, mm_primes, parse_scaled_u64(mm_count));
        auto t0 = std::chrono::steady_clock::now();
        auto mm = min_threshold_for_clique(universe, mm_target, g.clique_budget());
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ordered_json j;
        j["t_star"] = to_string(mm.t_star);
        j["exact"] = mm.exact;
        if (!mm.exact) {
            j["bracket_lo"] = to_string(mm.bracket_lo);
            j["bracket_hi"] = to_string(mm.bracket_hi);
        }
        j["witness"] = clique_json(mm.witness, seconds);
        std::cout << j.dump() << "\n";
        std::cerr << "t* = " << to_string(mm.t_star) << (mm.exact ? "" : " (bracketed)")
                  << "\n";
    });

    // construct --method ...
    std::string ct_method;
    std::string ct_k = "0", ct_r = "0", ct_j = "0", ct_a = "0", ct_b = "0", ct_l = "1",
                ct_m = "0", ct_alist;
    auto* sc_construct =
        app.add_subcommand("construct", "run one solution-generating construction");
    sc_construct
        ->add_option("--method", ct_method,
                     "sierpinski|schinzel|ghp|ps|mtup|sigma|yamada")
        ->required();
    sc_construct->add_option("--k", ct_k, "gap k");
    sc_construct->add_option("--r", ct_r, "prime-pair parameter r");
    sc_construct->add_option("--j", ct_j, "GHP j with rad(j) = rad(j+k)");
    sc_construct->add_option("--a", ct_a, "pair parameter a");
    sc_construct->add_option("--b", ct_b, "pair parameter b");
    sc_construct->add_option("--l", ct_l, "multiplier ell");
    sc_construct->add_option("--m", ct_m, "consecutive-friends m");
    sc_construct->add_option("--alist", ct_alist, "comma-separated a-list");
    sc_construct->callback([&] {
        u64 k = parse_scaled_u64(ct_k), r = parse_scaled_u64(ct_r);
        u64 ell = parse_scaled_u64(ct_l);
        std::vector<SolutionRecord> records;
        if (ct_method == "sierpinski") {
            records.push_back(sierpinski_solution(k));
        } else if (ct_method == "schinzel") {
            records.push_back(schinzel_solution(k, r));
        } else if (ct_method == "ghp") {
            records.push_back(ghp_solution(parse_scaled_u64(ct_j), k, r));
        } else if (ct_method == "ps") {
            auto res = ps_solution(parse_scaled_u64(ct_a), parse_scaled_u64(ct_b), r, ell);
            records.push_back(res.record);
            std::cerr << "m1 = " << res.m1 << ", m2 = " << res.m2 << "\n";
        } else if (ct_method == "mtup") {
            auto res = mtup_solution(parse_prime_list(ct_alist), r, ell);
            records = res.records;
            std::cerr << "n = " << res.n << ", common phi = " << res.common_phi << "\n";
        } else if (ct_method == "sigma") {
            auto res = sigma_solution(parse_prime_list(ct_alist), r, ell);
            records = res.records;
            std::cerr << "common sigma = " << to_string(res.common_sigma) << " at index "
                      << res.index.str() << "\n";
        } else if (ct_method == "yamada") {
            records.push_back(yamada_sigma_pair(parse_scaled_u64(ct_m), r));
        } else {
            throw CLI::ValidationError("unknown method '" + ct_method + "'");
        }
        for (const auto& rec : records) std::cout << record_json(rec).dump() << "\n";
    });

    // primepairs a b sign r_min r_max
    std::string pp_a, pp_b, pp_sign, pp_rmin, pp_rmax;
    auto* sc_pp = app.add_subcommand("primepairs", "r with ar+s and br+s both prime");
    sc_pp->add_option("a", pp_a)->required();
    sc_pp->add_option("b", pp_b)->required();
    sc_pp->add_option("sign", pp_sign, "+1 or -1")->required();
    sc_pp->add_option("r_min", pp_rmin)->required();
    sc_pp->add_option("r_max", pp_rmax)->required();
    sc_pp->callback([&] {
        int sign;
        if (pp_sign == "+1" || pp_sign == "1") {
            sign = 1;
        } else if (pp_sign == "-1") {
            sign = -1;
        } else {
            throw CLI::ValidationError("sign must be +1 or -1");
        }
        auto ws = find_prime_pair(parse_scaled_u64(pp_a), parse_scaled_u64(pp_b), sign,
                                  parse_scaled_u64(pp_rmin), parse_scaled_u64(pp_rmax));
        for (const auto& w : ws) {
            ordered_json j;
            j["a"] = w.a;
            j["b"] = w.b;
            j["r"] = w.r;
            std::cout << j.dump() << "\n";
        }
        std::cerr << ws.size() << " prime pairs\n";
    });

    // census --func phi --k 3 --hi 1e8
    std::string cs_func = "phi", cs_k = "1", cs_lo = "1", cs_hi, cs_ckpt;
    bool cs_classify = false;
    auto* sc_census = app.add_subcommand("census", "enumerate func(n) = func(n+k)");
    sc_census->add_option("--func", cs_func, "phi or sigma");
    sc_census->add_option("--k", cs_k, "gap k");
    sc_census->add_option("--lo", cs_lo, "range start");
    sc_census->add_option("--hi", cs_hi, "range end")->required();
    sc_census->add_flag("--classify", cs_classify, "fill GHP/sporadic provenance (phi only)");
    sc_census->add_option("--checkpoint", cs_ckpt, "checkpoint file for resumable scans");
    sc_census->callback([&] {
        Func func;
        if (cs_func == "phi") {
            func = Func::Phi;
        } else if (cs_func == "sigma") {
            func = Func::Sigma;
        } else {
            throw CLI::ValidationError("--func must be phi or sigma");
        }
        auto opt = g.census_options();
        opt.checkpoint_path = cs_ckpt;
        auto report = enumerate_solutions(func, parse_scaled_u64(cs_k),
                                          parse_scaled_u64(cs_lo), parse_scaled_u64(cs_hi),
                                          opt);
        if (cs_classify) classify(report);
        for (const auto& rec : report.solutions) {
            std::cout << record_json(rec).dump() << "\n";
        }
        std::cout << "func\tk\tlo\thi\tsolutions\tsporadic\n";
        std::cout << func_name(report.func) << '\t' << report.k << '\t' << report.lo << '\t'
                  << report.hi << '\t' << report.solutions.size() << '\t'
                  << (report.classified ? std::to_string(report.sporadic_count) : "-")
                  << "\n";
        std::cerr << report.solutions.size() << " solutions in [" << report.lo << ", "
                  << report.hi << "]\n";
    });

    // runs --m 3 --hi 1e7
    std::string rn_m = "2", rn_lo = "1", rn_hi;
    auto* sc_runs = app.add_subcommand("runs", "starts of phi(n) = ... = phi(n+m-1) runs");
    sc_runs->add_option("--m", rn_m, "run length");
    sc_runs->add_option("--lo", rn_lo, "range start");
    sc_runs->add_option("--hi", rn_hi, "range end")->required();
    sc_runs->callback([&] {
        u64 m = parse_scaled_u64(rn_m);
        auto starts = find_runs(m, parse_scaled_u64(rn_lo), parse_scaled_u64(rn_hi),
                                g.census_options());
        for (u64 n : starts) {
            ordered_json j;
            j["n"] = n;
            j["m"] = m;
            j["phi"] = phi(n);
            std::cout << j.dump() << "\n";
        }
        std::cout << "m\tlo\thi\truns\n";
        std::cout << m << '\t' << rn_lo << '\t' << rn_hi << '\t' << starts.size() << "\n";
        std::cerr << starts.size() << " runs\n";
    });

    // friends --hi 1e6 --min-size 2
    std::string fr_lo = "1", fr_hi;
    std::size_t fr_min = 2;
    bool fr_consecutive = false;
    auto* sc_friends = app.add_subcommand("friends", "abundancy-index friend groups");
    sc_friends->add_option("--lo", fr_lo, "range start");
    sc_friends->add_option("--hi", fr_hi, "range end")->required();
    sc_friends->add_option("--min-size", fr_min, "smallest group to report");
    sc_friends->add_flag("--consecutive", fr_consecutive,
                         "list m with abundancy(m) = abundancy(m+1) instead");
    sc_friends->callback([&] {
        u64 lo = parse_scaled_u64(fr_lo), hi = parse_scaled_u64(fr_hi);
        if (fr_consecutive) {
            auto ms = consecutive_friends(lo, hi, g.census_options());
            for (u64 m : ms) {
                ordered_json j;
                j["m"] = m;
                j["index"] = abundancy(m).str();
                std::cout << j.dump() << "\n";
            }
            std::cout << "lo\thi\tconsecutive\n" << lo << '\t' << hi << '\t' << ms.size() << "\n";
            std::cerr << ms.size() << " consecutive friends\n";
            return;
        }
        auto groups = friend_groups(lo, hi, fr_min, g.census_options());
        for (const auto& grp : groups) {
            ordered_json j;
            j["index"] = grp.index.str();
            j["members"] = grp.members;
            std::cout << j.dump() << "\n";
        }
        std::cout << "lo\thi\tgroups\n" << lo << '\t' << hi << '\t' << groups.size() << "\n";
        std::cerr << groups.size() << " groups of size >= " << fr_min << "\n";
    });

    // reproduce <target|all>
    std::string rp_target, rp_manifest;
    auto* sc_repro = app.add_subcommand("reproduce", "replay recorded computations");
    sc_repro->add_option("target", rp_target, "target id or 'all'")->required();
    sc_repro->add_option("--manifest", rp_manifest, "manifest path (JSON lines)");
    sc_repro->callback([&] { cmd_reproduce(rp_target, rp_manifest, g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const ConstructionError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
