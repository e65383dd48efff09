// lcmfilt: monomial ideal filtrations, cut ideals, signatures and
// persistence distances from the command line.
#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/fixtures.hpp"
#include "lcmfilt/graphs.hpp"
#include "lcmfilt/io.hpp"
#include "lcmfilt/lattice.hpp"
#include "lcmfilt/persistence.hpp"
#include "lcmfilt/reliability.hpp"
#include "lcmfilt/simplicial.hpp"

namespace {

using namespace lcmfilt;
using io::json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitFixture = 4;

struct Options {
    std::string output;  // empty = stdout
    std::uint64_t seed = 0;
    int guard_atoms = kDefaultAtomGuard;
    int guard_gens = kDefaultFiltrationGuard;
    int jobs = 1;
};

Options opts;

std::string meta_comment() {
    std::ostringstream out;
    out << "# lcmfilt " << kVersion << "\n# seed " << opts.seed
        << "\n# guards atoms=" << opts.guard_atoms << " gens=" << opts.guard_gens
        << "\n";
    return out.str();
}

json meta_json() {
    return json{{"version", kVersion},
                {"seed", opts.seed},
                {"guards",
                 {{"atoms", opts.guard_atoms}, {"gens", opts.guard_gens}}}};
}

void emit(const std::string& body) {
    if (opts.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output: " + opts.output);
    out << body;
}

void emit_json(json j) {
    j["meta"] = meta_json();
    emit(j.dump(2) + "\n");
}

void emit_csv(const std::string& table) { emit(meta_comment() + table); }

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

MonomialIdeal load_ideal(const std::string& path) {
    return io::ideal_from_json(load_json(path)).ideal;
}

SimplicialComplex load_complex(const std::string& path) {
    return io::complex_from_json(load_json(path));
}

FiltrationKind parse_mode(const std::string& mode) {
    if (mode == "usual") return FiltrationKind::Usual;
    if (mode == "stepwise") return FiltrationKind::Stepwise;
    throw std::invalid_argument("mode must be usual or stepwise");
}

SystemKind parse_kind(const std::string& kind) {
    if (kind == "kofn") return SystemKind::KOfN;
    if (kind == "clin") return SystemKind::ConsecutiveLinear;
    if (kind == "ccirc") return SystemKind::ConsecutiveCircular;
    throw std::invalid_argument("kind must be kofn, clin or ccirc");
}

void for_each_parallel(int count, const std::function<void(int)>& body) {
    const int jobs = std::max(1, std::min(opts.jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

// ---- ideal subcommands

int cmd_ideal_filtration(const std::string& input, const std::string& mode,
                         bool csv) {
    MonomialIdeal ideal = load_ideal(input);
    if (csv) {
        IdealFiltration f = mode == "stepwise"
                                ? stepwise_filtration(ideal)
                                : lcm_filtration(ideal, opts.guard_gens);
        emit_csv(io::filtration_csv(f));
        return kExitOk;
    }
    json out;
    if (mode == "usual" || mode == "both")
        out["usual"] = io::filtration_to_json(lcm_filtration(ideal, opts.guard_gens));
    if (mode == "stepwise" || mode == "both")
        out["stepwise"] = io::filtration_to_json(stepwise_filtration(ideal));
    if (mode == "both")
        out["comparison"] =
            io::comparison_to_json(compare_filtrations(ideal, opts.guard_gens));
    emit_json(out);
    return kExitOk;
}

int cmd_ideal_lattice(const std::string& input) {
    MonomialIdeal ideal = load_ideal(input);
    LcmLattice lattice = build_lcm_lattice(ideal, opts.guard_atoms);
    json out = io::lattice_to_json(lattice);
    out["pden"] = io::rational_str(poset_density(ideal, opts.guard_atoms));
    out["taylor"] = is_taylor(ideal, opts.guard_atoms);
    emit_json(out);
    return kExitOk;
}

int cmd_ideal_corners(const std::string& input, int prime) {
    MonomialIdeal ideal = load_ideal(input);
    emit_json(io::betti_table_to_json(
        sensitive_corners(ideal, FieldSpec{prime}, opts.guard_atoms)));
    return kExitOk;
}

// ---- complex subcommands

int cmd_complex_step(const std::string& input, int steps) {
    SimplicialComplex complex = load_complex(input);
    json chain = json::array();
    chain.push_back(io::complex_to_json(complex));
    for (int s = 0; s < steps; ++s) {
        complex = stepwise_complex_step(complex);
        chain.push_back(io::complex_to_json(complex));
    }
    emit_json(json{{"steps", chain}});
    return kExitOk;
}

int cmd_complex_betti(const std::string& input, int prime, bool reduced) {
    SimplicialComplex complex = load_complex(input);
    auto betti = reduced ? reduced_betti_numbers(complex, FieldSpec{prime})
                         : betti_numbers(complex, FieldSpec{prime});
    emit_json(json{{"reduced", reduced}, {"betti", betti}});
    return kExitOk;
}

int cmd_complex_fvector(const std::string& input) {
    emit_json(json{{"f", f_vector(load_complex(input))}});
    return kExitOk;
}

// ---- graph subcommands

int cmd_graph_cuts(const std::string& input, int blocks) {
    Graph g = io::graph_from_json(load_json(input));
    json cuts = json::array();
    for (const auto& c : enumerate_cuts(g, blocks)) {
        json part = json::array();
        for (const auto& blk : c.blocks) {
            json b = json::array();
            for (int v : blk) b.push_back(v + 1);
            part.push_back(b);
        }
        cuts.push_back(part);
    }
    emit_json(json{{"blocks", blocks}, {"cuts", cuts}});
    return kExitOk;
}

int cmd_graph_cutideal(const std::string& input, int blocks) {
    Graph g = io::graph_from_json(load_json(input));
    MonomialIdeal ideal = blocks == 2 ? cut_ideal(g) : partition_ideal(g, blocks);
    emit_json(io::ideal_to_json(ideal));
    return kExitOk;
}

int cmd_graph_experiment(int n, int runs) {
    emit_csv(io::deletion_csv(
        deletion_experiment(n, runs, opts.seed, opts.guard_atoms)));
    return kExitOk;
}

// ---- system subcommands

int cmd_system_signature(const std::string& kind, int n, int k, int fold) {
    MonomialIdeal ideal = failure_ideal({parse_kind(kind), n, k});
    SignatureVector s = fold == 1 ? signature(ideal, n)
                                  : kfold_signature(ideal, n, fold);
    json out = io::signature_to_json(s);
    out["kind"] = kind;
    out["n"] = n;
    out["k"] = k;
    out["fold"] = fold;
    emit_json(out);
    return kExitOk;
}

int cmd_system_kcurve(int n, const std::vector<std::string>& kinds) {
    std::vector<SystemKind> parsed;
    for (const auto& k : kinds) parsed.push_back(parse_kind(k));
    emit_csv(io::curve_csv(lattice_ratio_curve(n, parsed, opts.guard_atoms)));
    return kExitOk;
}

// ---- persist subcommands

DistanceOptions distance_options(const std::string& mode,
                                 const std::string& metric, int q, int maxdim,
                                 const std::string& aggregate) {
    DistanceOptions d;
    d.mode = parse_mode(mode);
    d.metric = metric == "wasserstein" ? DistanceMetric::Wasserstein
                                       : DistanceMetric::Bottleneck;
    if (metric != "bottleneck" && metric != "wasserstein")
        throw std::invalid_argument("metric must be bottleneck or wasserstein");
    if (aggregate != "sum" && aggregate != "max")
        throw std::invalid_argument("aggregate must be sum or max");
    d.aggregate = aggregate == "max" ? DimAggregate::Max : DimAggregate::Sum;
    d.wasserstein_q = q;
    d.maxdim = maxdim;
    d.gen_guard = opts.guard_gens;
    return d;
}

int cmd_persist_diagram(const std::string& input, const std::string& mode,
                        int maxdim) {
    auto d = diagram_of_complex(
        load_complex(input),
        distance_options(mode, "bottleneck", 1, maxdim, "sum"));
    json out = io::diagram_to_json(d);
    out["mode"] = mode;
    emit_json(out);
    return kExitOk;
}

int cmd_persist_distance(const std::string& a, const std::string& b,
                         const std::string& mode, const std::string& metric,
                         int q, int maxdim, const std::string& aggregate) {
    DistanceOptions d = distance_options(mode, metric, q, maxdim, aggregate);
    auto da = diagram_of_complex(load_complex(a), d);
    auto db = diagram_of_complex(load_complex(b), d);
    double dist = d.metric == DistanceMetric::Bottleneck
                      ? bottleneck(da, db, d.aggregate)
                      : wasserstein(da, db, q, d.aggregate);
    emit_json(json{{"mode", mode},
                   {"metric", metric},
                   {"distance", io::format_double(dist)}});
    return kExitOk;
}

int cmd_persist_matrix(const std::string& input, const std::string& mode,
                       const std::string& metric, int q, int maxdim,
                       const std::string& aggregate) {
    json j = load_json(input);
    std::vector<SimplicialComplex> complexes;
    for (const auto& c : j.at("complexes")) complexes.push_back(io::complex_from_json(c));
    DistanceOptions d = distance_options(mode, metric, q, maxdim, aggregate);

    std::vector<PersistenceDiagram> diagrams(complexes.size());
    for_each_parallel(static_cast<int>(complexes.size()), [&](int i) {
        diagrams[i] = diagram_of_complex(complexes[i], d);
    });
    const int n = static_cast<int>(complexes.size());
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            double dist = d.metric == DistanceMetric::Bottleneck
                              ? bottleneck(diagrams[i], diagrams[k], d.aggregate)
                              : wasserstein(diagrams[i], diagrams[k], q,
                                            d.aggregate);
            mat[i][k] = mat[k][i] = dist;
        }
    emit_csv(io::matrix_csv(mat));
    return kExitOk;
}

// ---- reproduce-paper

int cmd_reproduce_paper() {
    int mismatches = 0;
    std::ostringstream report;
    auto check = [&](const char* name, bool ok) {
        report << "check " << name << ": " << (ok ? "ok" : "MISMATCH") << "\n";
        if (!ok) ++mismatches;
    };
    auto sf = [](int nvars, std::initializer_list<int> vars) {
        std::vector<int> support;
        for (int v : vars) support.push_back(v - 1);
        return Monomial::from_support(nvars, support);
    };

    {
        auto ideal = fixtures::filtration_demo_ideal();
        auto usual = lcm_filtration(ideal);
        check("worked example usual chain",
              usual.nsteps() == 4 &&
                  usual.step(2) == MonomialIdeal(5, {sf(5, {1, 2, 3, 5}),
                                                     sf(5, {2, 3, 4}),
                                                     sf(5, {2, 4, 5}),
                                                     sf(5, {3, 4, 5})}) &&
                  usual.step(3) == MonomialIdeal(5, {sf(5, {1, 2, 3, 4}),
                                                     sf(5, {2, 3, 4, 5})}) &&
                  usual.step(4) == MonomialIdeal(5, {sf(5, {1, 2, 3, 4, 5})}));
        auto stepwise = stepwise_filtration(ideal);
        check("worked example stepwise chain",
              stepwise.nsteps() == 3 &&
                  stepwise.step(3) == MonomialIdeal(5, {sf(5, {2, 3, 4, 5})}));
    }
    {
        auto ideal = sr_ideal(fixtures::redundancy_demo_complex());
        auto cmp = compare_filtrations(ideal);
        check("redundancy ideal equality pattern",
              ideal.ngens() == 15 && cmp.stepwise_gen_counts.size() == 6 &&
                  cmp.equal_steps ==
                      std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 6},
                                                       {5, 9}, {5, 10}, {6, 12},
                                                       {6, 13}, {6, 14},
                                                       {6, 15}} &&
                  cmp.unmatched_usual_steps ==
                      std::vector<int>{3, 4, 5, 7, 8, 11});
    }
    {
        bool ok = true;
        for (int i = 2; i <= 8 && ok; ++i)
            for (int j = 2; j <= i && ok; ++j)
                ok = static_cast<std::int64_t>(
                         enumerate_cuts(Graph::complete(i), j).size()) ==
                     stirling2(i, j);
        const std::int64_t row10[] = {511,   9330, 34105, 42525, 22827,
                                      5880, 750,  45,    1};
        for (int j = 2; j <= 10; ++j)
            if (stirling2(10, j) != row10[j - 2]) ok = false;
        check("Stirling partition counts", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 7 && ok; ++n)
            for (int k = 1; k <= n && ok; ++k) {
                auto s = signature(failure_ideal({SystemKind::KOfN, n, k}), n);
                for (int i = 1; i <= n; ++i)
                    if (s.values[i - 1] != (i == k ? Rational(1) : Rational(0)))
                        ok = false;
            }
        check("k-of-n signature unit vectors", ok);
    }
    {
        const double expected[4][4][4] = {
            // bottleneck / lcm
            {{0, 3.0, 4.5, 3.5}, {3.0, 0, 4.5, 3.5}, {4.5, 4.5, 0, 4.5},
             {3.5, 3.5, 4.5, 0}},
            // wasserstein / lcm
            {{0, 5.0, 15.5, 20.5}, {5.0, 0, 17.0, 20.5}, {15.5, 17.0, 0, 16.5},
             {20.5, 20.5, 16.5, 0}},
            // bottleneck / stepwise
            {{0, 0.5, 1.0, 1.0}, {0.5, 0, 1.0, 1.0}, {1.0, 1.0, 0, 0.5},
             {1.0, 1.0, 0.5, 0}},
            // wasserstein / stepwise
            {{0, 0.5, 2.5, 3.0}, {0.5, 0, 2.0, 2.5}, {2.5, 2.0, 0, 0.5},
             {3.0, 2.5, 0.5, 0}}};
        auto complexes = fixtures::matched_invariant_complexes();
        const char* names[] = {"distance table bottleneck/lcm",
                               "distance table wasserstein/lcm",
                               "distance table bottleneck/stepwise",
                               "distance table wasserstein/stepwise"};
        for (int which = 0; which < 4; ++which) {
            DistanceOptions d;
            d.mode = which < 2 ? FiltrationKind::Usual : FiltrationKind::Stepwise;
            d.metric = which % 2 == 0 ? DistanceMetric::Bottleneck
                                      : DistanceMetric::Wasserstein;
            auto mat = distance_matrix(complexes, d);
            bool ok = true;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (std::abs(mat[i][j] - expected[which][i][j]) > 1e-9) {
                        ok = false;
                        report << "  " << names[which] << " C" << i + 1 << "C"
                               << j + 1 << " computed "
                               << io::format_double(mat[i][j]) << " reference "
                               << io::format_double(expected[which][i][j])
                               << "\n";
                    }
            check(names[which], ok);
        }
    }

    report << (mismatches == 0 ? "all checks ok\n"
                               : std::to_string(mismatches) + " mismatch(es)\n");
    emit(meta_comment() + report.str());
    return mismatches == 0 ? kExitOk : kExitFixture;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcm filtrations of monomial ideals: lattices, cut ideals, "
                 "signatures and persistence distances"};
    app.require_subcommand(1);
    app.add_option("-o,--output", opts.output, "write output to a file");
    app.add_option("--seed", opts.seed, "seed echoed in output metadata");
    app.add_option("--guard-atoms", opts.guard_atoms,
                   "max lattice atoms (env LCMFILT_GUARD_ATOMS)")
        ->envname("LCMFILT_GUARD_ATOMS");
    app.add_option("--guard-gens", opts.guard_gens,
                   "max generators for the usual filtration");
    app.add_option("--jobs", opts.jobs, "worker threads where applicable");

    std::string input, input_b, mode = "both", metric = "bottleneck";
    std::string kind = "kofn";
    std::vector<std::string> kinds = {"kofn", "clin", "ccirc"};
    int prime = 0, steps = 1, blocks = 2, n = 0, k = 1, fold = 1, runs = 10;
    int q = 1, maxdim = -1;
    std::string aggregate = "sum";
    bool csv = false, reduced = false;

    auto* ideal_cmd = app.add_subcommand("ideal", "monomial ideal operations");
    ideal_cmd->require_subcommand(1);
    auto* ifilt = ideal_cmd->add_subcommand("filtration",
                                            "usual and stepwise lcm-filtrations");
    ifilt->add_option("-i,--input", input, "ideal JSON file")->required();
    ifilt->add_option("--mode", mode, "usual | stepwise | both");
    ifilt->add_flag("--csv", csv, "per-step CSV instead of JSON");
    auto* ilat = ideal_cmd->add_subcommand("lattice", "lcm-lattice and density");
    ilat->add_option("-i,--input", input, "ideal JSON file")->required();
    auto* icorn = ideal_cmd->add_subcommand("corners",
                                            "multigraded Betti table");
    icorn->add_option("-i,--input", input, "ideal JSON file")->required();
    icorn->add_option("--prime", prime, "field characteristic (0 = rationals)");

    auto* complex_cmd = app.add_subcommand("complex", "simplicial complex operations");
    complex_cmd->require_subcommand(1);
    auto* cstep = complex_cmd->add_subcommand("step", "stepwise complex chain");
    cstep->add_option("-i,--input", input, "complex JSON file")->required();
    cstep->add_option("--steps", steps, "number of steps to apply");
    auto* cbetti = complex_cmd->add_subcommand("betti", "Betti numbers");
    cbetti->add_option("-i,--input", input, "complex JSON file")->required();
    cbetti->add_option("--prime", prime, "field characteristic (0 = rationals)");
    cbetti->add_flag("--reduced", reduced, "reduced Betti numbers");
    auto* cf = complex_cmd->add_subcommand("fvector", "face counts");
    cf->add_option("-i,--input", input, "complex JSON file")->required();

    auto* graph_cmd = app.add_subcommand("graph", "graph cut operations");
    graph_cmd->require_subcommand(1);
    auto* gcuts = graph_cmd->add_subcommand("cuts", "connected j-cuts");
    gcuts->add_option("-i,--input", input, "graph JSON file")->required();
    gcuts->add_option("--blocks", blocks, "number of blocks");
    auto* gci = graph_cmd->add_subcommand("cutideal", "cut or partition ideal");
    gci->add_option("-i,--input", input, "graph JSON file")->required();
    gci->add_option("--blocks", blocks, "2 = cut ideal, j > 2 = partition ideal");
    auto* gexp = graph_cmd->add_subcommand(
        "experiment", "random edge deletion on the complete graph");
    gexp->add_option("--n", n, "vertices")->required();
    gexp->add_option("--runs", runs, "independent runs");

    auto* system_cmd = app.add_subcommand("system", "coherent system operations");
    system_cmd->require_subcommand(1);
    auto* ssig = system_cmd->add_subcommand("signature", "system signature");
    ssig->add_option("--kind", kind, "kofn | clin | ccirc");
    ssig->add_option("--n", n, "components")->required();
    ssig->add_option("--k", k, "failure threshold")->required();
    ssig->add_option("--fold", fold, "k-fold signature");
    auto* skcurve = system_cmd->add_subcommand("kcurve",
                                               "lattice ratio vs k table");
    skcurve->add_option("--n", n, "components")->required();
    skcurve->add_option("--kinds", kinds, "system kinds to include");

    auto* persist_cmd = app.add_subcommand("persist", "persistent homology");
    persist_cmd->require_subcommand(1);
    auto* pdiag = persist_cmd->add_subcommand("diagram", "persistence diagram");
    pdiag->add_option("-i,--input", input, "complex JSON file")->required();
    pdiag->add_option("--mode", mode, "usual | stepwise");
    pdiag->add_option("--maxdim", maxdim, "top homology dimension");
    auto* pdist = persist_cmd->add_subcommand("distance", "diagram distance");
    pdist->add_option("-a", input, "first complex JSON file")->required();
    pdist->add_option("-b", input_b, "second complex JSON file")->required();
    pdist->add_option("--mode", mode, "usual | stepwise");
    pdist->add_option("--metric", metric, "bottleneck | wasserstein");
    pdist->add_option("--q", q, "Wasserstein exponent");
    pdist->add_option("--maxdim", maxdim, "top homology dimension");
    pdist->add_option("--aggregate", aggregate, "sum | max over dimensions");
    auto* pmat = persist_cmd->add_subcommand("matrix", "pairwise distance matrix");
    pmat->add_option("-i,--input", input, "JSON file with a complexes array")
        ->required();
    pmat->add_option("--mode", mode, "usual | stepwise");
    pmat->add_option("--metric", metric, "bottleneck | wasserstein");
    pmat->add_option("--q", q, "Wasserstein exponent");
    pmat->add_option("--maxdim", maxdim, "top homology dimension");
    pmat->add_option("--aggregate", aggregate, "sum | max over dimensions");

    auto* repro = app.add_subcommand(
        "reproduce-paper", "recompute every embedded reference fixture");

    // let global options (--jobs, --seed, guards, -o) appear after subcommands
    for (auto* top : app.get_subcommands([](const CLI::App*) { return true; })) {
        top->fallthrough();
        for (auto* sub : top->get_subcommands([](const CLI::App*) { return true; }))
            sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    // "both" only makes sense for ideal filtration; elsewhere default usual
    if (!ifilt->parsed() && mode == "both") mode = "usual";

    try {
        if (ifilt->parsed()) return cmd_ideal_filtration(input, mode, csv);
        if (ilat->parsed()) return cmd_ideal_lattice(input);
        if (icorn->parsed()) return cmd_ideal_corners(input, prime);
        if (cstep->parsed()) return cmd_complex_step(input, steps);
        if (cbetti->parsed()) return cmd_complex_betti(input, prime, reduced);
        if (cf->parsed()) return cmd_complex_fvector(input);
        if (gcuts->parsed()) return cmd_graph_cuts(input, blocks);
        if (gci->parsed()) return cmd_graph_cutideal(input, blocks);
        if (gexp->parsed()) return cmd_graph_experiment(n, runs);
        if (ssig->parsed()) return cmd_system_signature(kind, n, k, fold);
        if (skcurve->parsed()) return cmd_system_kcurve(n, kinds);
        if (pdiag->parsed()) return cmd_persist_diagram(input, mode, maxdim);
        if (pdist->parsed())
            return cmd_persist_distance(input, input_b, mode, metric, q, maxdim,
                                        aggregate);
        if (pmat->parsed())
            return cmd_persist_matrix(input, mode, metric, q, maxdim, aggregate);
        if (repro->parsed()) return cmd_reproduce_paper();
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
