#pragma once

#include <string>
#include <string_view>

#include "pdnet/cluster.hpp"
#include "pdnet/jacobi.hpp"
#include "pdnet/matrix.hpp"
#include "pdnet/network.hpp"
#include "pdnet/wiring.hpp"

namespace pdnet::io {

// All readers throw ParseError on malformed input; all writers emit UTF-8
// JSON with sorted keys and two-space indentation.

/// {"n_rows": N, "n_cols": N, "entries": [["1", "-1/2", "0+1/1i"], ...]}
Matrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const Matrix& m);

/// [{"kind": "asc|desc|diag", "level": k, "param": "p/q+r/si"}, ...]
FactorSequence factors_from_json(std::string_view text);
std::string factors_to_json(const FactorSequence& factors);

/// {"n": N, "chips": [{"kind": ..., "level": ..., "weight": ...}, ...]}
PlanarNetwork network_from_json(std::string_view text);
std::string network_to_json(const PlanarNetwork& net);

/// {"n": N, "crossings": [{"color": "b|r", "row": k}, ...]}
DoubleWiringDiagram diagram_from_json(std::string_view text);
std::string diagram_to_json(const DoubleWiringDiagram& d);

/// {"vertices": [{"id": "v0", "label": "I|J", "mutable": bool, "value": "p/q"}],
///  "arrows": [["v0", "v1"], ...]}
Seed seed_from_json(std::string_view text);
std::string seed_to_json(const Seed& s);

}  // namespace pdnet::io
