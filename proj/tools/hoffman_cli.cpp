// hoffman: command-line front end.
// Exit codes: 0 ok, 1 internal error, 2 usage or input error,
// 3 proven negative, 4 search budget exhausted.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "hoffman/catalog.hpp"
#include "hoffman/classify.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/io.hpp"
#include "hoffman/random.hpp"
#include "hoffman/representation.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kNegative = 3, kBudget = 4 };

// bad input, reported with exit code 2
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HoffmanGraph load(const std::string& path) {
    try {
        return read_hoffman_file(path);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string lambda_word(LambdaOrder o) {
    switch (o) {
    case LambdaOrder::Less: return "less";
    case LambdaOrder::Equal: return "equal";
    case LambdaOrder::Greater: return "greater";
    }
    return "?";
}

// special graph with original vertex ids
Json special_graph_json(const HoffmanGraph& h) {
    const auto s = special_graph(h);
    Json plus = Json::array(), minus = Json::array();
    for (auto [u, v] : s.plus_edges()) plus.push_back({h.slims()[u], h.slims()[v]});
    for (auto [u, v] : s.minus_edges()) minus.push_back({h.slims()[u], h.slims()[v]});
    return {{"plus", plus}, {"minus", minus}};
}

int run_analyze(const std::string& path) {
    const auto h = load(path);
    if (h.slim_count() == 0) throw InputError("the graph has no slim vertex");
    Json weights = Json::object();
    for (Vertex x : h.slims()) weights[std::to_string(x)] = h.weight(x);
    Json factors = Json::array();
    for (const auto& f : decompose(h)) {
        Json slims = Json::array();
        for (Vertex s : f.graph.slims()) slims.push_back(f.origin[s]);
        factors.push_back(slims);
    }
    const auto sp = special_matrix(h);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10f", lambda_extremes_float(sp).first);
    Json out;
    out["slim"] = h.slims();
    out["fat"] = h.fats();
    out["weights"] = weights;
    out["special_matrix"] = to_json(sp);
    out["lambda_min"] = std::stod(buf);
    out["lambda_vs_minus3"] = lambda_word(lambda_min_cmp3(h));
    out["multiplicity_at_minus3"] = eigen_multiplicity_at(sp, -3);
    out["tree_like"] = h.is_tree_like();
    out["fat_hoffman"] = h.is_fat_hoffman();
    out["factors"] = factors.size();
    out["factor_slims"] = factors;
    out["special_graph"] = special_graph_json(h);
    emit(out);
    return kOk;
}

int run_solve(const std::string& path, int t, int dim_cap, std::int64_t budget) {
    const auto h = load(path);
    if (h.slim_count() == 0) throw InputError("the graph has no slim vertex");
    SolveOptions opts;
    opts.t = t;
    opts.dim_cap = dim_cap;
    opts.node_budget = budget;
    const auto out = solve_reduced_integral(h, opts);
    Json j;
    j["status"] = to_string(out.status);
    j["nodes"] = out.nodes;
    if (out.status == SolveStatus::Found) {
        const auto rep = to_json(h, out.rep);
        j["dim"] = rep["dim"];
        j["vectors"] = rep["vectors"];
        j["gram"] = to_json(gram_matrix(out.rep.vectors));
    }
    emit(j);
    if (out.status == SolveStatus::NotRepresentable) return kNegative;
    if (out.status == SolveStatus::BudgetExceeded) return kBudget;
    return kOk;
}

int run_catalog(const std::string& name, int max_m, const std::string& format) {
    if (name.empty()) {
        for (const auto& m : family_F(max_m))
            std::cout << m.tag << "\t" << m.graph.slim_count() << " slims\t" << m.graph.fat_count() << " fats\n";
        return kOk;
    }
    FamilyFMember m;
    try {
        m = catalog_member(name);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (format == "dot") {
        std::cout << to_dot(m.graph);
        return kOk;
    }
    Json j = to_json(m.graph);
    j["tag"] = m.tag;
    if (m.psi) j["psi"] = to_json(m.graph, *m.psi);
    emit(j);
    return kOk;
}

int run_trees(int max_n, bool json, bool csv, std::int64_t budget, const std::string& witness_dir) {
    SolveOptions opts;
    opts.node_budget = budget;
    const auto census = brute_force_ir_trees(max_n, opts);
    bool inconclusive = false;
    Json rows = Json::array();
    if (csv) std::cout << "code,n,lambda_cmp,representable,dim,witness-file\n";
    for (std::size_t i = 0; i < census.size(); ++i) {
        const auto& e = census[i];
        inconclusive = inconclusive || e.representable == Verdict::Inconclusive;
        const int dim = e.witness ? e.witness->dim : -1;
        std::string file;
        if (e.witness && !witness_dir.empty()) {
            file = witness_dir + "/tree_" + std::to_string(i) + ".json";
            std::ofstream f(file);
            if (!f) throw InputError("cannot write " + file);
            const auto h = all_slim(e.tree);
            Json w;
            w["graph"] = to_json(e.tree);
            w["psi"] = to_json(h, *e.witness);
            f << w.dump(2) << "\n";
        }
        if (json) {
            Json r;
            r["code"] = e.code;
            r["n"] = e.n;
            r["lambda_cmp"] = lambda_word(e.lambda_vs_minus3);
            r["representable"] = to_string(e.representable);
            r["dim"] = dim;
            r["witness"] = e.witness ? to_json(all_slim(e.tree), *e.witness) : Json();
            rows.push_back(r);
        } else if (csv) {
            std::cout << e.code << "," << e.n << "," << lambda_word(e.lambda_vs_minus3) << ","
                      << to_string(e.representable) << "," << dim << "," << file << "\n";
        } else {
            std::printf("%-3d %-8s %-13s %3d  %s\n", e.n, lambda_word(e.lambda_vs_minus3).c_str(),
                        to_string(e.representable).c_str(), dim, e.code.c_str());
        }
    }
    if (json) emit(rows);
    return inconclusive ? kBudget : kOk;
}

int run_seedlings(const std::string& base_name, bool json) {
    ExtendedE base;
    try {
        base = parse_extended_e(base_name);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto seeds = enumerate_fat_3_seedlings(base);
    if (json) {
        Json arr = Json::array();
        for (const auto& s : seeds) arr.push_back(to_json(s));
        emit({{"base", base_name}, {"count", seeds.size()}, {"seedlings", arr}});
        return kOk;
    }
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto& s = seeds[i];
        int shared = 0;
        for (Vertex f : s.fats()) shared += s.slim_neighbors(f).size() == 2;
        std::printf("%zu\tfats=%d\tshared=%d\tlambda_min=%s\n", i, s.fat_count(), shared,
                    lambda_word(lambda_min_cmp3(s)).c_str());
    }
    std::cout << seeds.size() << "\n";
    return kOk;
}

int run_verify_main(int max_n, int slack) {
    const auto r = verify_main_theorem(max_n, slack);
    std::printf("n_max %d\nslack %d\ncensus trees %zu\ncensus radius-3 %zu\nconstructed %zu\n", r.n_max, r.slack,
                r.census_trees, r.census_radius3, r.constructed);
    std::printf("only in census %zu\nonly constructed %zu\n", r.only_in_census.size(), r.only_constructed.size());
    std::printf("smaller trees %zu\nnot embedded %zu\nlargest host %d\nbeyond n_max+slack %zu\ninconclusive %zu\n",
                r.smaller_trees, r.not_embedded.size(), r.largest_host, r.beyond_short_slack, r.inconclusive.size());
    for (const auto& c : r.only_in_census) std::printf("census-only %s\n", c.c_str());
    for (const auto& c : r.only_constructed) std::printf("construction-only %s\n", c.c_str());
    for (const auto& c : r.not_embedded) std::printf("not-embedded %s\n", c.c_str());
    std::printf("%s\n", r.ok() ? "ok" : "FAILED");
    if (!r.inconclusive.empty() && r.equality() && r.not_embedded.empty()) return kBudget;
    return r.ok() ? kOk : kNegative;
}

int run_verify_properties(std::uint64_t seed, int cases) {
    const auto r = run_property_suite(seed, cases);
    std::printf("seed %llu\nsandwich cases %d\nsigning cases %d\n", static_cast<unsigned long long>(seed),
                r.sandwich_cases, r.signing_cases);
    for (const auto& f : r.failures) std::printf("failure %s\n", f.c_str());
    std::printf("%s\n", r.ok() ? "ok" : "FAILED");
    return r.ok() ? kOk : kNegative;
}

int run_export(const std::string& path, const std::string& format, bool special) {
    const auto h = load(path);
    if (format == "dot") {
        std::cout << (special ? to_dot(special_graph(h)) : to_dot(h));
    } else {
        emit(special ? to_json(special_graph(h)) : to_json(h));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hoffman graphs and integrally representable trees of norm 3"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string input, format = "json", name, base, witness_dir;
    int t = 3, dim_cap = -1, max_n = 10, slack = 6, max_m = 6, cases = 200;
    std::int64_t budget = 10'000'000;
    std::uint64_t seed = 20240611;
    bool json = false, csv = false, special = false;

    auto* analyze = app.add_subcommand("analyze", "special matrix, lambda_min against -3, factors");
    analyze->add_option("input", input, "Hoffman graph JSON")->required();

    auto* solve = app.add_subcommand("solve", "search for an integral reduced representation");
    solve->add_option("input", input, "Hoffman graph JSON")->required();
    solve->add_option("--t", t, "norm")->check(CLI::Range(1, 3));
    solve->add_option("--dim-cap", dim_cap, "dimension cap (-1: 3 per slim)")->check(CLI::Range(-1, 1 << 20));
    solve->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);

    auto* catalog = app.add_subcommand("catalog", "list the family or print one member");
    catalog->add_option("name", name, "h<t>, fatstar<k>, c<m>, x, e6, e7 or e8");
    catalog->add_option("--max-m", max_m, "largest c_m listed")->check(CLI::Range(2, 200));
    catalog->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* trees = app.add_subcommand("trees", "census of trees on at most N vertices");
    trees->add_option("--max-n", max_n, "largest tree order")->required()->check(CLI::Range(1, 18));
    auto* json_flag = trees->add_flag("--json", json, "JSON output");
    trees->add_flag("--csv", csv, "CSV output")->excludes(json_flag);
    trees->add_option("--budget", budget, "solver node budget per tree")->check(CLI::PositiveNumber);
    trees->add_option("--witness-dir", witness_dir, "write witnesses here (CSV witness-file column)");

    auto* seedlings = app.add_subcommand("seedlings", "fat 3-seedlings over an extended E graph");
    seedlings->add_option("--base", base, "e6, e7 or e8")->required()->check(CLI::IsMember({"e6", "e7", "e8"}));
    seedlings->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify", "verification runs");
    verify->require_subcommand(1);
    auto* main_thm = verify->add_subcommand("main-theorem", "census against construction, plus embeddings");
    main_thm->add_option("--max-n", max_n, "largest tree order")->required()->check(CLI::Range(1, 16));
    main_thm->add_option("--slack", slack, "extra host vertices beyond n_max + n_max")->check(CLI::Range(0, 20));
    auto* props = verify->add_subcommand("properties", "randomized eigenvalue and signing properties");
    props->add_option("--seed", seed, "random seed");
    props->add_option("--cases", cases, "cases per property")->check(CLI::Range(1, 100000));

    auto* exp = app.add_subcommand("export", "DOT or canonical JSON of a Hoffman graph");
    exp->add_option("input", input, "Hoffman graph JSON")->required();
    exp->add_option("--format", format, "dot or json")->required();
    exp->add_flag("--special", special, "export the special graph instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return run_analyze(input);
        if (*solve) return run_solve(input, t, dim_cap, budget);
        if (*catalog) return run_catalog(name, max_m, format);
        if (*trees) return run_trees(max_n, json, csv, budget, witness_dir);
        if (*seedlings) return run_seedlings(base, json);
        if (*main_thm) return run_verify_main(max_n, slack);
        if (*props) return run_verify_properties(seed, cases);
        if (*exp) {
            if (format != "dot" && format != "json") throw InputError("unsupported format: " + format);
            return run_export(input, format, special);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
