#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qlgraph/gain_graph.hpp"
#include "qlgraph/kuramoto.hpp"
#include "qlgraph/poset.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/ql_bit.hpp"
#include "qlgraph/spectral.hpp"
#include "qlgraph/su2.hpp"

namespace qlgraph {

using Json = nlohmann::json;

/// {"n": int, "edges": [{"u", "v", "re", "im"}], "labels": {label: [vertices]}}.
/// Edges are written with u < v and the gain oriented u -> v.
Json graph_to_json(const GainGraph& g);
/// Throws ValidationError on malformed documents.
GainGraph graph_from_json(const Json& j);

/// Graph document plus a "spec" object with the construction parameters.
Json ql_bit_to_json(const QLBit& bit);
/// Rebuilds a QL bit from its stored graph; requires the "spec" object.
QLBit ql_bit_from_json(const Json& j);
Json spec_to_json(const QLBitSpec& spec);
QLBitSpec spec_from_json(const Json& j);

/// Gains are written as the edge attribute "phase" in radians.
std::string graph_to_dot(const GainGraph& g);
std::string graph_to_graphml(const GainGraph& g);

/// "index,eigenvalue" rows.
std::string spectrum_to_csv(const Spectrum& s);
/// Eigenvalue histogram with `bins` equal-width bins: "lower,upper,count".
std::string spectrum_histogram_csv(const Spectrum& s, std::size_t bins);
/// {"eigenvalue", "gap", "projection": [{"re", "im"}]}.
Json emergent_state_to_json(const EmergentState& s);

/// Graph document plus factors, block names and the per-vertex block code.
Json product_to_json(const ProductGraph& p);
/// Inter-block edges are colored by the factor whose coordinate changes.
std::string product_to_dot(const ProductGraph& p);
std::string hasse_to_dot(const BooleanPoset& poset);

Json quaternion_to_json(const Quaternion& q);
Json jones_to_json(const JonesVector& j);
Json su2_to_json(const SU2Element& u);

std::string trajectory_to_csv(const SimResult& r, const BlockPartition& blocks);
Json sim_report_to_json(const SimResult& r);

/// Shortest round-trip decimal form.
std::string format_number(double x);

/// Throws IoError when the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws IoError on syntax errors.
Json parse_json(const std::string& text, const std::string& source);

}  // namespace qlgraph
