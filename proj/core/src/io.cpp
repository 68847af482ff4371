#include "qlgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qlgraph/errors.hpp"

namespace qlgraph {

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Json graph_to_json(const GainGraph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = Json::array();
    for (const auto& [key, gain] : g.edges()) {
        j["edges"].push_back({{"u", key.lo}, {"v", key.hi}, {"re", gain.real()}, {"im", gain.imag()}});
    }
    Json labels = Json::object();
    if (g.has_labels()) {
        std::map<std::string, std::vector<std::size_t>> groups;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            groups[g.label(v)].push_back(v);
        }
        for (const auto& [label, members] : groups) {
            labels[label] = members;
        }
    }
    j["labels"] = labels;
    return j;
}

GainGraph graph_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
            throw ValidationError("graph document needs \"n\" and \"edges\"");
        }
        const auto n = j.at("n").get<std::size_t>();
        GainGraph g(n);
        for (const auto& e : j.at("edges")) {
            const auto u = e.at("u").get<std::size_t>();
            const auto v = e.at("v").get<std::size_t>();
            const Complex gain(e.at("re").get<double>(), e.value("im", 0.0));
            g.add_edge(u, v, gain);
        }
        if (j.contains("labels")) {
            for (const auto& [label, members] : j.at("labels").items()) {
                for (const auto& v : members) {
                    g.set_label(v.get<std::size_t>(), label);
                }
            }
        }
        return g;
    } catch (const Json::exception& ex) {
        throw ValidationError(std::string("malformed graph document: ") + ex.what());
    }
}

Json spec_to_json(const QLBitSpec& spec) {
    return {{"n", spec.n_per_subgraph},
            {"d", spec.degree},
            {"bias_re", spec.coupling_bias.real()},
            {"bias_im", spec.coupling_bias.imag()},
            {"p", spec.coupling_probability},
            {"seed", spec.rng_seed},
            {"name", spec.name}};
}

QLBitSpec spec_from_json(const Json& j) {
    try {
        QLBitSpec s;
        s.n_per_subgraph = j.at("n").get<std::size_t>();
        s.degree = j.at("d").get<std::size_t>();
        s.coupling_bias = Complex(j.at("bias_re").get<double>(), j.at("bias_im").get<double>());
        s.coupling_probability = j.at("p").get<double>();
        s.rng_seed = j.at("seed").get<std::uint64_t>();
        s.name = j.value("name", std::string("a"));
        return s;
    } catch (const Json::exception& ex) {
        throw ValidationError(std::string("malformed QL bit spec: ") + ex.what());
    }
}

Json ql_bit_to_json(const QLBit& bit) {
    auto j = graph_to_json(bit.graph);
    j["spec"] = spec_to_json(bit.spec);
    j["uncoupled_vertices"] = bit.uncoupled_vertices;
    return j;
}

QLBit ql_bit_from_json(const Json& j) {
    if (!j.contains("spec")) {
        throw ValidationError("document is a plain graph, not a QL bit (no \"spec\")");
    }
    QLBit bit;
    bit.spec = spec_from_json(j.at("spec"));
    bit.spec.validate();
    bit.graph = graph_from_json(j);
    const auto n = bit.spec.n_per_subgraph;
    if (bit.graph.vertex_count() != 2 * n) {
        throw ValidationError("QL bit graph size does not match its spec");
    }
    std::vector<std::size_t> coupling(2 * n, 0);
    for (const auto& [key, gain] : bit.graph.edges()) {
        if (key.lo < n && key.hi >= n) {
            ++coupling[key.lo];
            ++coupling[key.hi];
        }
    }
    for (std::size_t v = 0; v < 2 * n; ++v) {
        bit.partition[v < n ? 0 : 1].push_back(v);
        if (coupling[v] == 0) {
            ++bit.uncoupled_vertices;
        }
    }
    return bit;
}

std::string graph_to_dot(const GainGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels()) {
            out << " [block=\"" << g.label(v) << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [key, gain] : g.edges()) {
        out << "  " << key.lo << " -- " << key.hi << " [phase=" << format_number(std::arg(gain)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_graphml(const GainGraph& g) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"block\" for=\"node\" attr.name=\"block\" attr.type=\"string\"/>\n"
        << "  <key id=\"phase\" for=\"edge\" attr.name=\"phase\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "    <node id=\"n" << v << "\">";
        if (g.has_labels()) {
            out << "<data key=\"block\">" << g.label(v) << "</data>";
        }
        out << "</node>\n";
    }
    for (const auto& [key, gain] : g.edges()) {
        out << "    <edge source=\"n" << key.lo << "\" target=\"n" << key.hi << "\"><data key=\"phase\">"
            << format_number(std::arg(gain)) << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        out << k << "," << format_number(s.eigenvalues(k)) << "\n";
    }
    return out.str();
}

std::string spectrum_histogram_csv(const Spectrum& s, std::size_t bins) {
    if (bins == 0) {
        throw ValidationError("histogram needs at least one bin");
    }
    std::ostringstream out;
    out << "lower,upper,count\n";
    if (s.eigenvalues.size() == 0) {
        return out.str();
    }
    const double lo = s.eigenvalues.minCoeff();
    const double hi = s.eigenvalues.maxCoeff();
    const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
    std::vector<std::size_t> counts(bins, 0);
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        auto b = static_cast<std::size_t>((s.eigenvalues(k) - lo) / width);
        counts[std::min(b, bins - 1)]++;
    }
    for (std::size_t b = 0; b < bins; ++b) {
        out << format_number(lo + width * static_cast<double>(b)) << ","
            << format_number(lo + width * static_cast<double>(b + 1)) << "," << counts[b] << "\n";
    }
    return out.str();
}

Json emergent_state_to_json(const EmergentState& s) {
    Json proj = Json::array();
    for (Eigen::Index k = 0; k < s.projection.size(); ++k) {
        proj.push_back({{"re", s.projection(k).real()}, {"im", s.projection(k).imag()}});
    }
    return {{"eigenvalue", s.eigenvalue}, {"gap", s.gap}, {"projection", proj}};
}

Json product_to_json(const ProductGraph& p) {
    auto j = graph_to_json(p.graph);
    j["q"] = p.q;
    j["factors"] = Json::array();
    for (std::size_t k = 0; k < p.q; ++k) {
        Json f{{"name", p.factor_names[k]}, {"blocks", p.block_names[k]}};
        if (k < p.factor_sizes.size()) {
            f["vertices"] = p.factor_sizes[k];
        }
        if (k < p.factor_specs.size()) {
            f["spec"] = spec_to_json(p.factor_specs[k]);
        }
        j["factors"].push_back(f);
    }
    Json blocks = Json::array();
    for (std::size_t c = 0; c < p.block_count(); ++c) {
        blocks.push_back(p.block_label(c));
    }
    j["block_names"] = blocks;
    j["block_of_vertex"] = p.block_of_vertex;
    return j;
}

namespace {

const char* factor_color(std::size_t k) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
    return palette[k % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace

std::string product_to_dot(const ProductGraph& p) {
    std::ostringstream out;
    out << "graph product {\n";
    for (std::size_t v = 0; v < p.graph.vertex_count(); ++v) {
        out << "  " << v << " [block=\"" << p.block_label(p.block_of_vertex[v]) << "\"];\n";
    }
    for (const auto& [key, gain] : p.graph.edges()) {
        out << "  " << key.lo << " -- " << key.hi << " [phase=" << format_number(std::arg(gain));
        const auto a = p.decode_block(p.block_of_vertex[key.lo]);
        const auto b = p.decode_block(p.block_of_vertex[key.hi]);
        std::size_t changed = p.q;
        std::size_t diff = 0;
        for (std::size_t k = 0; k < p.q; ++k) {
            if (a[k] != b[k]) {
                changed = k;
                ++diff;
            }
        }
        if (diff == 1) {
            out << ", color=" << factor_color(changed);
        } else if (diff > 1) {
            out << ", color=black, style=dashed";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string hasse_to_dot(const BooleanPoset& poset) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (auto x : poset.sets()) {
        out << "  " << x << " [label=\"" << BooleanPoset::format(x) << "\", rank=" << poset.rank_of(x) << "];\n";
    }
    for (const auto& [x, y] : poset.cover_relations()) {
        out << "  " << x << " -> " << y << ";\n";
    }
    out << "}\n";
    return out.str();
}

Json quaternion_to_json(const Quaternion& q) {
    return {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

Json jones_to_json(const JonesVector& j) {
    return {{"x", {{"re", j.x.real()}, {"im", j.x.imag()}}}, {"y", {{"re", j.y.real()}, {"im", j.y.imag()}}}};
}

Json su2_to_json(const SU2Element& u) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            row.push_back({{"re", u.m(r, c).real()}, {"im", u.m(r, c).imag()}});
        }
        rows.push_back(row);
    }
    return {{"matrix", rows}, {"det", {{"re", u.m.determinant().real()}, {"im", u.m.determinant().imag()}}}};
}

std::string trajectory_to_csv(const SimResult& r, const BlockPartition& blocks) {
    std::ostringstream out;
    out << "t,r,psi";
    for (const auto& name : blocks.names) {
        out << ",mean_" << name;
    }
    out << "\n";
    for (const auto& p : r.trajectory) {
        out << format_number(p.t) << "," << format_number(p.r) << "," << format_number(p.psi);
        for (double m : p.block_means) {
            out << "," << format_number(m);
        }
        out << "\n";
    }
    return out.str();
}

Json sim_report_to_json(const SimResult& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        blocks.push_back({{"name", b.name}, {"mean", b.mean}, {"sd", b.sd}});
    }
    const auto op = order_parameter(r.final_state.thetas);
    return {{"t_final", r.t_final}, {"steps", r.steps}, {"plateaued", r.plateaued},
            {"r", op.r}, {"psi", op.psi}, {"blocks", blocks}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed to read '" + path + "'");
    }
    return buf.str();
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& ex) {
        throw IoError("cannot parse '" + source + "' as JSON: " + ex.what());
    }
}

}  // namespace qlgraph
