// Command-line front end: generators, recognition, Hamiltonian construction,
// brute-force oracle, refinements, level sets and the complexity benchmark.
// Exit codes: 0 success, 1 negative verdict, 2 input error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgraph/json_io.hpp"
#include "dgraph/oracle.hpp"
#include "dgraph/zoo.hpp"

using namespace dgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text << "\n";
    else write_text(out_path, text);
}

int cmd_generate(const std::string& name, const std::vector<int>& params, std::uint64_t seed,
                 bool list, const std::string& out, const std::string& dot) {
    if (list) {
        std::cout << "name                            expected tag             hamiltonian\n";
        for (const auto& fx : zoo::corpus()) {
            std::string tag = tag_name(fx.expected_tag);
            if (fx.expected_dim >= -1) tag += "(" + std::to_string(fx.expected_dim) + ")";
            std::string ham = fx.expected_hamiltonian == zoo::Ham::Yes ? "yes" : "no";
            printf("%-31s %-24s %s\n", fx.name.c_str(), tag.c_str(), ham.c_str());
        }
        return kExitOk;
    }
    Graph g = zoo::by_name(name, params, seed);
    emit(io::graph_to_json(g), out);
    if (!dot.empty()) write_text(dot, io::graph_to_dot(g));
    return kExitOk;
}

int cmd_recognize(const std::string& path, bool exact, const std::string& certs) {
    Graph g = io::load_graph(path);
    RecognitionOptions opts;
    opts.exact_contractibility = exact;
    RecognitionContext ctx = make_context(opts);
    Classification cls = classify_dgraph(g, &ctx);
    std::string text = io::classification_to_json(cls);
    if (!certs.empty()) {
        nlohmann::json j = nlohmann::json::parse(text);
        if (auto col = is_contractible(g, &ctx)) {
            std::string p = certs + ".collapse.json";
            nlohmann::json cj;
            cj["removed"] = col->removed;
            write_text(p, cj.dump());
            j["collapse_certificate"] = p;
        }
        if (cls.has(Tag::Sphere) || cls.has(Tag::Ball)) {
            ShellingOrder order = shelling_for_sphere_or_ball(g, &ctx);
            std::string p = certs + ".shelling.json";
            nlohmann::json sj;
            sj["facets"] = order.facets;
            write_text(p, sj.dump());
            j["shelling_certificate"] = p;
        }
        text = j.dump();
    }
    std::cout << text << "\n";
    return cls.tag == Tag::Other ? kExitNegative : kExitOk;
}

int cmd_hamilton(const std::string& path, bool strong, const std::string& trace_out,
                 bool oracle_check, const std::string& replay_path, const std::string& dot) {
    Graph g = io::load_graph(path);
    if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) throw std::invalid_argument("cannot open " + replay_path);
        std::stringstream ss;
        ss << in.rdbuf();
        Cycle c = replay_trace(g, io::trace_from_json(ss.str()));
        if (!verify_hamiltonian(g, c)) {
            std::cerr << "replayed trace does not yield a Hamiltonian cycle\n";
            return kExitNegative;
        }
        std::cout << io::cycle_to_json(c) << "\n";
        return kExitOk;
    }
    try {
        HamiltonianOutput out = find_hamiltonian(g);
        if (strong && !verify_strong(g, out.cycle, !boundary(g).faces.empty())) {
            std::cerr << "cycle is not strongly Hamiltonian\n";
            return kExitNegative;
        }
        if (oracle_check) {
            auto res = oracle::brute_hamiltonian(g);
            if (res.verdict != oracle::Verdict::Found) {
                std::cerr << "oracle disagrees with the construction\n";
                return kExitNegative;
            }
        }
        if (!trace_out.empty()) write_text(trace_out, io::trace_to_json(out.trace));
        if (!dot.empty()) write_text(dot, io::graph_to_dot(g, &out.cycle));
        std::cout << io::cycle_to_json(out.cycle) << "\n";
        return kExitOk;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n" << io::classification_to_json(e.classification) << "\n";
        return kExitNegative;
    }
}

int cmd_oracle(const std::string& mode, const std::string& path, std::uint64_t budget) {
    Graph g = io::load_graph(path);
    if (mode == "hamiltonian") {
        auto res = oracle::brute_hamiltonian(g, budget);
        switch (res.verdict) {
            case oracle::Verdict::Found:
                std::cout << io::cycle_to_json(normalize_cycle(res.cycle->vertices)) << "\n";
                return kExitOk;
            case oracle::Verdict::Negative:
                std::cout << "{\"verdict\":\"not_hamiltonian\"}\n";
                return kExitNegative;
            case oracle::Verdict::BudgetExceeded:
                std::cout << "{\"verdict\":\"budget_exceeded\"}\n";
                return kExitNegative;
        }
    } else if (mode == "count") {
        auto n = oracle::count_hamiltonian_cycles(g, budget);
        if (!n) {
            std::cout << "{\"verdict\":\"budget_exceeded\"}\n";
            return kExitNegative;
        }
        std::cout << "{\"count\":" << *n << "}\n";
        return kExitOk;
    } else if (mode == "shellable") {
        auto res = oracle::brute_shellable(whitney_complex(g), budget);
        switch (res.verdict) {
            case oracle::Verdict::Found: {
                nlohmann::json j;
                j["facets"] = res.order->facets;
                std::cout << j.dump() << "\n";
                return kExitOk;
            }
            case oracle::Verdict::Negative:
                std::cout << "{\"verdict\":\"not_shellable\"}\n";
                return kExitNegative;
            case oracle::Verdict::BudgetExceeded:
                std::cout << "{\"verdict\":\"budget_exceeded\"}\n";
                return kExitNegative;
        }
    }
    throw std::invalid_argument("oracle mode must be hamiltonian|count|shellable");
}

int cmd_refine(const std::string& path, bool barycentric, const std::string& edge_spec,
               const std::string& out, const std::string& carrier_out) {
    Graph g = io::load_graph(path);
    if (barycentric) {
        Refinement r = barycentric_refinement(g);
        emit(io::graph_to_json(r.graph), out);
        if (!carrier_out.empty()) write_text(carrier_out, io::refinement_carrier_to_json(r));
        return kExitOk;
    }
    if (edge_spec.empty()) throw std::invalid_argument("refine: need --barycentric or --edge a,b");
    auto comma = edge_spec.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--edge expects a,b");
    Edge e = make_edge(std::stoi(edge_spec.substr(0, comma)), std::stoi(edge_spec.substr(comma + 1)));
    emit(io::graph_to_json(edge_refinement(g, e)), out);
    return kExitOk;
}

int cmd_build(const std::string& path, bool do_suspension, bool do_cone, const std::string& out) {
    Graph g = io::load_graph(path);
    if (do_suspension == do_cone)
        throw std::invalid_argument("build: need exactly one of --suspension / --cone");
    emit(io::graph_to_json(do_suspension ? suspension(g) : cone(g)), out);
    return kExitOk;
}

int cmd_levelset(const std::string& path, const std::string& fpath, const std::string& cspec,
                 const std::string& out) {
    Graph g = io::load_graph(path);
    VertexFunction f = io::load_function(fpath);
    Rational c = Rational::parse(cspec);
    LevelSurface s = level_surface(g, f, c);
    emit(io::level_surface_to_json(s), out);
    return kExitOk;
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes, int repeats,
              std::uint64_t seed, const std::string& out) {
    std::ostringstream csv;
    csv << "n,seed,millis,verified,strong\n";
    std::vector<double> logn, logt;
    for (int size : sizes) {
        std::vector<double> times;
        Graph g;
        if (family == "random_refined_sphere") g = zoo::random_refined_sphere(2, size, seed);
        else if (family == "cyclic") g = zoo::cyclic(size);
        else if (family == "torus") g = zoo::torus(size, size);
        else throw std::invalid_argument("bench family must be random_refined_sphere|cyclic|torus");
        bool strong_ok = true;
        for (int r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            HamiltonianOutput res = find_hamiltonian(g);
            auto t1 = std::chrono::steady_clock::now();
            if (!verify_hamiltonian(g, res.cycle))
                throw std::runtime_error("bench: unverified cycle, aborting");
            strong_ok = strong_ok && verify_strong(g, res.cycle, false);
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        csv << g.vertex_count() << "," << seed << "," << median << ",1," << (strong_ok ? 1 : 0)
            << "\n";
        logn.push_back(std::log(static_cast<double>(g.vertex_count())));
        logt.push_back(std::log(std::max(median, 1e-3)));
    }
    // least squares log(t) = a + b log(n)
    double n = static_cast<double>(logn.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < logn.size(); ++i) {
        sx += logn[i];
        sy += logt[i];
        sxx += logn[i] * logn[i];
        sxy += logn[i] * logt[i];
        syy += logt[i] * logt[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double r_num = n * sxy - sx * sy;
    double r_den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
    double r2 = r_den == 0 ? 1.0 : (r_num / r_den) * (r_num / r_den);
    std::ostringstream summary;
    summary << "# slope=" << slope << " r2=" << r2 << "\n";
    emit(csv.str() + summary.str(), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-manifold graph toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a named graph as JSON");
    std::string gen_out, gen_dot;
    std::string gen_name_v;
    std::vector<int> gen_params;
    std::uint64_t gen_seed = 0;
    bool gen_list = false;
    gen->add_option("name", gen_name_v, "generator name");
    gen->add_option("params", gen_params, "integer parameters");
    gen->add_option("--seed", gen_seed, "seed for randomized generators");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->add_option("--dot", gen_dot, "also write DOT to this file");
    gen->add_flag("--list", gen_list, "list generators with expected tags");

    // recognize
    auto* rec = app.add_subcommand("recognize", "classify a graph");
    std::string rec_path, rec_certs;
    bool rec_exact = false;
    rec->add_option("graph", rec_path, "graph JSON file")->required();
    rec->add_flag("--exact", rec_exact, "exact (backtracking) contractibility");
    rec->add_option("--certs", rec_certs, "certificate file prefix");

    // hamilton
    auto* ham = app.add_subcommand("hamilton", "construct a Hamiltonian cycle");
    std::string ham_path, ham_trace, ham_replay, ham_dot;
    bool ham_strong = false, ham_oracle = false;
    ham->add_option("graph", ham_path, "graph JSON file")->required();
    ham->add_flag("--strong", ham_strong, "require the strong property");
    ham->add_option("--trace", ham_trace, "write the construction trace");
    ham->add_flag("--oracle-check", ham_oracle, "cross-check with the brute-force oracle");
    ham->add_option("--replay", ham_replay, "replay a trace file instead of constructing");
    ham->add_option("--dot", ham_dot, "DOT output with the cycle highlighted");

    // oracle
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    std::string orc_mode, orc_path;
    std::uint64_t orc_budget = 100'000'000;
    orc->add_option("mode", orc_mode, "hamiltonian|count|shellable")->required();
    orc->add_option("graph", orc_path, "graph JSON file")->required();
    orc->add_option("--budget", orc_budget, "node-expansion budget");

    // refine
    auto* ref = app.add_subcommand("refine", "barycentric or edge refinement");
    std::string ref_path, ref_edge, ref_out, ref_carrier;
    bool ref_bary = false;
    ref->add_option("graph", ref_path, "graph JSON file")->required();
    ref->add_flag("--barycentric", ref_bary, "barycentric refinement");
    ref->add_option("--edge", ref_edge, "edge refinement at a,b");
    ref->add_option("-o,--out", ref_out, "output file");
    ref->add_option("--carrier", ref_carrier, "write the id->simplex dictionary");

    // build
    auto* bld = app.add_subcommand("build", "cone / suspension");
    std::string bld_path, bld_out;
    bool bld_susp = false, bld_cone = false;
    bld->add_option("graph", bld_path, "graph JSON file")->required();
    bld->add_flag("--suspension", bld_susp, "suspension");
    bld->add_flag("--cone", bld_cone, "cone");
    bld->add_option("-o,--out", bld_out, "output file");

    // levelset
    auto* lvl = app.add_subcommand("levelset", "level surface of a vertex function");
    std::string lvl_path, lvl_f, lvl_c, lvl_out;
    lvl->add_option("graph", lvl_path, "graph JSON file")->required();
    lvl->add_option("--f", lvl_f, "function JSON file")->required();
    lvl->add_option("--c", lvl_c, "cut level (rational, e.g. 7/2)")->required();
    lvl->add_option("-o,--out", lvl_out, "output file");

    // bench
    auto* ben = app.add_subcommand("bench", "construction-time benchmark (CSV)");
    std::string ben_family = "random_refined_sphere", ben_out;
    std::vector<int> ben_sizes;
    int ben_repeats = 3;
    std::uint64_t ben_seed = 0;
    ben->add_option("--family", ben_family, "generator family");
    ben->add_option("--sizes", ben_sizes, "sizes / refinement steps")->required();
    ben->add_option("--repeats", ben_repeats, "repeats per size");
    ben->add_option("--seed", ben_seed, "seed");
    ben->add_option("-o,--out", ben_out, "CSV output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_name_v, gen_params, gen_seed, gen_list, gen_out, gen_dot);
        if (rec->parsed()) return cmd_recognize(rec_path, rec_exact, rec_certs);
        if (ham->parsed())
            return cmd_hamilton(ham_path, ham_strong, ham_trace, ham_oracle, ham_replay, ham_dot);
        if (orc->parsed()) return cmd_oracle(orc_mode, orc_path, orc_budget);
        if (ref->parsed()) return cmd_refine(ref_path, ref_bary, ref_edge, ref_out, ref_carrier);
        if (bld->parsed()) return cmd_build(bld_path, bld_susp, bld_cone, bld_out);
        if (lvl->parsed()) return cmd_levelset(lvl_path, lvl_f, lvl_c, lvl_out);
        if (ben->parsed()) return cmd_bench(ben_family, ben_sizes, ben_repeats, ben_seed, ben_out);
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
