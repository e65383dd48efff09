#include "lcmfilt/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lcmfilt::io {

std::string rational_str(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << "/" << r.denominator();
    return out.str();
}

Rational rational_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
    return json{{"nvars", ideal.nvars()}, {"generators", gens}};
}

IdealReadResult ideal_from_json(const json& j) {
    const int nvars = j.at("nvars").get<int>();
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) {
        auto exps = row.get<std::vector<std::int32_t>>();
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("ideal JSON: generator length != nvars");
        for (auto e : exps)
            if (e < 0) throw std::invalid_argument("ideal JSON: negative exponent");
        gens.emplace_back(std::move(exps));
    }
    const std::size_t raw = gens.size();
    MonomialIdeal ideal(nvars, std::move(gens));
    const bool reduced = static_cast<std::size_t>(ideal.ngens()) != raw;
    IdealReadResult out{std::move(ideal), reduced, {}};
    if (j.contains("vars"))
        out.var_names = j.at("vars").get<std::vector<std::string>>();
    return out;
}

json lattice_to_json(const LcmLattice& lattice,
                     std::optional<std::int64_t> element_limit) {
    json out{{"atoms", lattice.atom_count()}, {"size", lattice.size()}};
    if (!element_limit || lattice.size() <= *element_limit) {
        json elems = json::array();
        for (const auto& m : lattice.elements()) elems.push_back(m.exponents());
        out["elements"] = elems;
    }
    return out;
}

json filtration_to_json(const IdealFiltration& filtration) {
    json steps = json::array();
    for (const auto& s : filtration.steps) steps.push_back(ideal_to_json(s));
    return json{{"kind", filtration.kind == FiltrationKind::Usual ? "usual"
                                                                  : "stepwise"},
                {"steps", steps}};
}

std::string filtration_csv(const IdealFiltration& filtration) {
    std::ostringstream out;
    out << "step,generators,max_degree,lcm_evaluations\n";
    const int r = filtration.steps.front().ngens();
    for (int k = 1; k <= filtration.nsteps(); ++k) {
        const auto& step = filtration.step(k);
        std::int64_t maxdeg = 0;
        for (const auto& g : step.generators())
            maxdeg = std::max(maxdeg, g.degree());
        std::int64_t evals = 0;
        if (k > 1)
            evals = filtration.kind == FiltrationKind::Usual
                        ? binomial(r, k)
                        : binomial(filtration.step(k - 1).ngens(), 2);
        else if (filtration.kind == FiltrationKind::Usual)
            evals = r;
        out << k << "," << step.ngens() << "," << maxdeg << "," << evals << "\n";
    }
    return out.str();
}

json comparison_to_json(const FiltrationComparison& cmp) {
    json equal = json::array();
    for (auto [j, k] : cmp.equal_steps) equal.push_back({j, k});
    return json{{"usual_generators", cmp.usual_gen_counts},
                {"stepwise_generators", cmp.stepwise_gen_counts},
                {"equal_steps", equal},
                {"unmatched_usual_steps", cmp.unmatched_usual_steps},
                {"usual_lcm_evaluations", cmp.usual_lcm_evals},
                {"stepwise_lcm_evaluations", cmp.stepwise_lcm_evals}};
}

json complex_to_json(const SimplicialComplex& complex) {
    json facets = json::array();
    for (auto f : complex.facets()) {
        json verts = json::array();
        for (int v = 0; v < complex.nvertices(); ++v)
            if (f >> v & 1) verts.push_back(v + 1);
        facets.push_back(verts);
    }
    return json{{"nvertices", complex.nvertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    const int n = j.at("nvertices").get<int>();
    std::vector<std::uint64_t> facets;
    for (const auto& row : j.at("facets")) {
        std::uint64_t mask = 0;
        for (int v : row.get<std::vector<int>>()) {
            if (v < 1 || v > n)
                throw std::invalid_argument("complex JSON: vertex out of range");
            mask |= std::uint64_t{1} << (v - 1);
        }
        facets.push_back(mask);
    }
    return SimplicialComplex(n, std::move(facets));
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return json{{"nvertices", g.nvertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    const int n = j.at("nvertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& row : j.at("edges")) {
        auto e = row.get<std::vector<int>>();
        if (e.size() != 2) throw std::invalid_argument("graph JSON: bad edge");
        edges.emplace_back(e[0] - 1, e[1] - 1);
    }
    return Graph(n, std::move(edges));
}

std::string deletion_csv(const std::vector<DeletionRow>& rows) {
    std::ostringstream out;
    out << "run,step,edges_remaining,density,generators,pden\n";
    for (const auto& r : rows) {
        out << r.run << "," << r.step << "," << r.edges_remaining << ","
            << format_double(r.density) << "," << r.generators << ",";
        if (r.pden)
            out << format_double(boost::rational_cast<double>(*r.pden));
        else
            out << "null";
        out << "\n";
    }
    return out.str();
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
    std::ostringstream out;
    out << "kind,k,generators,lattice_size,ratio\n";
    for (const auto& p : points) {
        out << to_string(p.kind) << "," << p.k << "," << p.generators << ",";
        if (p.lattice_size)
            out << *p.lattice_size;
        else
            out << "null";
        out << ",";
        if (p.ratio)
            out << format_double(boost::rational_cast<double>(*p.ratio));
        else
            out << "null";
        out << "\n";
    }
    return out.str();
}

json signature_to_json(const SignatureVector& s) {
    json vals = json::array();
    for (const auto& v : s.values) vals.push_back(rational_str(v));
    return json{{"s", vals}};
}

json diagram_to_json(const PersistenceDiagram& d) {
    json dims = json::object();
    for (const auto& [dim, pairs] : d.dims) {
        json arr = json::array();
        for (const auto& p : pairs) {
            if (p.essential())
                arr.push_back({p.birth, "inf"});
            else
                arr.push_back({p.birth, *p.death});
        }
        dims[std::to_string(dim)] = arr;
    }
    return json{{"dims", dims}};
}

PersistenceDiagram diagram_from_json(const json& j) {
    PersistenceDiagram d;
    for (const auto& [key, arr] : j.at("dims").items()) {
        const int dim = std::stoi(key);
        for (const auto& pair : arr) {
            PersistencePair p{pair.at(0).get<int>(), std::nullopt};
            if (!pair.at(1).is_string()) p.death = pair.at(1).get<int>();
            d.dims[dim].push_back(p);
        }
    }
    return d;
}

std::string matrix_csv(const std::vector<std::vector<double>>& m) {
    std::ostringstream out;
    out << "label";
    for (std::size_t j = 0; j < m.size(); ++j) out << ",C" << j + 1;
    out << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << "C" << i + 1;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out << "," << format_double(m[i][j]);
        out << "\n";
    }
    return out.str();
}

json betti_table_to_json(const BettiTable& table) {
    json entries = json::array();
    for (const auto& e : table.entries)
        entries.push_back({{"i", e.index},
                           {"mu", e.mu.exponents()},
                           {"value", e.value}});
    json out{{"entries", entries}, {"polarized", table.polarized}};
    if (table.polarized) out["var_origin"] = table.var_origin;
    return out;
}

}  // namespace lcmfilt::io
