#pragma once

// JSON encoding of classification reports and polytope dumps.

#include "edgepoly/classifier.hpp"
#include "edgepoly/lattice_polytope.hpp"

#include <json.hpp>

namespace edgepoly {

/// {fano, reflexive_terminal, dim, smooth_qfactorial, codim2_smooth,
///  codim3_qfactorial, rigid, witness, components}. `witness` is null or
/// {kind, vertices}, plus `rescue` for C2 witnesses.
nlohmann::json report_to_json(const ClassificationReport& r);

/// Inverse of report_to_json; throws nlohmann::json::exception on bad input.
ClassificationReport report_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// {ambient_dim, dim, vertices, facets: [{normal, rhs}]} with facet normals
/// in the embedded lattice coordinates, all lists sorted.
nlohmann::json polytope_to_json(const LatticePolytope& p);

}  // namespace edgepoly
