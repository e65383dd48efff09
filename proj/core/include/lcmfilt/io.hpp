#ifndef LCMFILT_IO_HPP
#define LCMFILT_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/graphs.hpp"
#include "lcmfilt/lattice.hpp"
#include "lcmfilt/persistence.hpp"
#include "lcmfilt/reliability.hpp"
#include "lcmfilt/simplicial.hpp"

namespace lcmfilt::io {

using json = nlohmann::json;

std::string rational_str(const Rational& r);
Rational rational_parse(const std::string& s);
/// '.'-decimal, 12 significant digits, locale independent.
std::string format_double(double v);

// ---- ideals: {"nvars": n, "vars": [...]?, "generators": [[exponents]...]}
json ideal_to_json(const MonomialIdeal& ideal);

struct IdealReadResult {
    MonomialIdeal ideal;
    bool reduced_on_input;  // input generators were not already minimal
    std::vector<std::string> var_names;
};
IdealReadResult ideal_from_json(const json& j);

// ---- lattices: {"atoms": r, "size": s, "elements": [[exponents]...]?}
json lattice_to_json(const LcmLattice& lattice,
                     std::optional<std::int64_t> element_limit = 4096);

// ---- filtrations
json filtration_to_json(const IdealFiltration& filtration);
/// step,generators,max_degree,lcm_evaluations
std::string filtration_csv(const IdealFiltration& filtration);
json comparison_to_json(const FiltrationComparison& cmp);

// ---- complexes: {"nvertices": n, "facets": [[1-based vertices]...]}
json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

// ---- graphs: {"nvertices": n, "edges": [[u, v]...]} with 1-based vertices
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// ---- experiment tables
/// run,step,edges_remaining,density,generators,pden
std::string deletion_csv(const std::vector<DeletionRow>& rows);
/// kind,k,generators,lattice_size,ratio
std::string curve_csv(const std::vector<CurvePoint>& points);

// ---- signatures: {"s": ["p/q", ...]}
json signature_to_json(const SignatureVector& s);

// ---- persistence: {"dims": {"0": [[b, d|"inf"]...], ...}}
json diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const json& j);
/// Square matrix with C1..Cn header row and column.
std::string matrix_csv(const std::vector<std::vector<double>>& m);

// ---- sensitive corners
json betti_table_to_json(const BettiTable& table);

}  // namespace lcmfilt::io

#endif
