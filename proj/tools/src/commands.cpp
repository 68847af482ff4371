#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <numbers>
#include <random>
#include <sstream>

#include "qlgraph/entanglement.hpp"
#include "qlgraph/errors.hpp"
#include "qlgraph/io.hpp"
#include "qlgraph/kuramoto.hpp"
#include "qlgraph/nocloning.hpp"
#include "qlgraph/poset.hpp"
#include "qlgraph/product.hpp"
#include "qlgraph/rng.hpp"
#include "qlgraph/su2.hpp"
#include "qlgraph_cli/cli.hpp"

namespace qlgraph::cli {

namespace {

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json load_json(const std::string& path) {
    return parse_json(read_text_file(path), path);
}

struct LoadedGraph {
    GainGraph graph;
    BlockPartition blocks;
    std::optional<QLBit> bit;
};

LoadedGraph load_graph(const std::string& path) {
    const auto j = load_json(path);
    LoadedGraph lg;
    if (j.contains("spec")) {
        lg.bit = ql_bit_from_json(j);
        lg.graph = lg.bit->graph;
        lg.blocks = lg.bit->blocks();
    } else {
        lg.graph = graph_from_json(j);
        lg.blocks = BlockPartition::from_labels(lg.graph);
    }
    return lg;
}

Json complex_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

// ---------------------------------------------------------------- build

struct BuildOptions {
    std::size_t n = 0;
    std::size_t d = 0;
    double bias_re = 1.0;
    double bias_im = 0.0;
    double p = 0.2;
    std::uint64_t seed = 0;
    std::string name = "a";
    std::string out;
    std::string dot;
    std::string graphml;
};

Command make_build(CLI::App& app) {
    auto o = std::make_shared<BuildOptions>();
    auto* sub = app.add_subcommand("build", "Build a QL bit graph");
    sub->add_option("--n", o->n, "Vertices per subgraph")->required();
    sub->add_option("--d", o->d, "Subgraph degree")->required();
    sub->add_option("--bias-re", o->bias_re, "Real part of the coupling bias")->capture_default_str();
    sub->add_option("--bias-im", o->bias_im, "Imaginary part of the coupling bias")->capture_default_str();
    sub->add_option("--p", o->p, "Coupling probability")->capture_default_str();
    sub->add_option("--seed", o->seed, "Random seed")->capture_default_str();
    sub->add_option("--name", o->name, "Bit name (subgraph labels <name>1, <name>2)")->capture_default_str();
    sub->add_option("--out", o->out, "Output JSON file")->capture_default_str();
    sub->add_option("--dot", o->dot, "Also write a DOT file");
    sub->add_option("--graphml", o->graphml, "Also write a GraphML file");
    return {sub, [o](Context& ctx) {
                QLBitSpec spec;
                spec.n_per_subgraph = o->n;
                spec.degree = o->d;
                spec.coupling_bias = Complex(o->bias_re, o->bias_im);
                spec.coupling_probability = o->p;
                spec.rng_seed = o->seed;
                spec.name = o->name;
                const auto bit = build_ql_bit(spec);
                if (bit.has_uncoupled_vertices()) {
                    ctx.err << "warning: " << bit.uncoupled_vertices << " vertices received no coupling edge\n";
                }
                ctx.seeds = {o->seed};
                const auto out = o->out.empty() ? std::string("qlbit.json") : o->out;
                ctx.outputs.add("--out", out, dump(ql_bit_to_json(bit)));
                if (!o->dot.empty()) {
                    ctx.outputs.add("--dot", o->dot, graph_to_dot(bit.graph));
                }
                if (!o->graphml.empty()) {
                    ctx.outputs.add("--graphml", o->graphml, graph_to_graphml(bit.graph));
                }
                ctx.out << "built " << bit.graph.vertex_count() << " vertices, " << bit.graph.edge_count()
                        << " edges (" << bit.coupling_edge_count() << " coupling) -> " << out << "\n";
            }};
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOptions {
    std::string input;
    std::string out;
    std::string emergent;
    std::string histogram;
    std::size_t bins = 40;
};

Command make_spectrum(CLI::App& app) {
    auto o = std::make_shared<SpectrumOptions>();
    auto* sub = app.add_subcommand("spectrum", "Eigenvalues and emergent state of a graph");
    sub->add_option("--input", o->input, "Graph or QL bit JSON")->required();
    sub->add_option("--out", o->out, "Eigenvalue CSV")->required();
    sub->add_option("--emergent", o->emergent, "Emergent-state JSON");
    sub->add_option("--histogram", o->histogram, "Eigenvalue histogram CSV");
    sub->add_option("--bins", o->bins, "Histogram bins")->capture_default_str();
    return {sub, [o](Context& ctx) {
                const auto lg = load_graph(o->input);
                const auto s = eigendecompose(lg.graph);
                ctx.outputs.add("--out", o->out, spectrum_to_csv(s));
                if (!o->histogram.empty()) {
                    ctx.outputs.add("--histogram", o->histogram, spectrum_histogram_csv(s, o->bins));
                }
                if (!o->emergent.empty()) {
                    const auto state = emergent_state(lg.graph, lg.blocks);
                    auto j = emergent_state_to_json(state);
                    j["blocks"] = lg.blocks.names;
                    ctx.outputs.add("--emergent", o->emergent, dump(j));
                    ctx.out << "emergent eigenvalue " << format_number(state.eigenvalue) << ", gap "
                            << format_number(state.gap) << "\n";
                }
                if (lg.bit) {
                    ctx.seeds = {lg.bit->spec.rng_seed};
                }
                ctx.out << s.size() << " eigenvalues, top " << format_number(s.eigenvalues(0)) << "\n";
            }};
}

// ---------------------------------------------------------------- product

struct ProductOptions {
    std::vector<std::string> inputs;
    std::string out;
    std::string dot;
    bool optimized = false;
    std::string layout = "independent";
    std::uint64_t seed = 0;
};

Command make_product(CLI::App& app) {
    auto o = std::make_shared<ProductOptions>();
    auto* sub = app.add_subcommand("product", "Cartesian or optimized product of QL bits");
    sub->add_option("--inputs", o->inputs, "Factor JSON files, leftmost factor first")->required()->expected(1, 16);
    sub->add_option("--out", o->out, "Product JSON")->required();
    sub->add_option("--dot", o->dot, "Product DOT file");
    sub->add_flag("--optimized", o->optimized, "Build the n*2^q optimized product");
    sub->add_option("--layout", o->layout, "Optimized layout")
        ->check(CLI::IsMember({"independent", "tensor"}))
        ->capture_default_str();
    sub->add_option("--seed", o->seed, "Seed for the optimized product")->capture_default_str();
    return {sub, [o](Context& ctx) {
                ProductGraph p;
                if (o->optimized) {
                    std::vector<QLBit> bits;
                    for (const auto& path : o->inputs) {
                        auto lg = load_graph(path);
                        if (!lg.bit) {
                            throw ValidationError("'" + path + "' is not a QL bit document");
                        }
                        bits.push_back(*lg.bit);
                    }
                    const auto layout = o->layout == "tensor" ? ProductLayout::tensor : ProductLayout::independent;
                    p = optimized_product(bits, layout, o->seed);
                    ctx.seeds.push_back(o->seed);
                } else {
                    std::vector<ProductFactor> factors;
                    std::vector<QLBitSpec> specs;
                    for (const auto& path : o->inputs) {
                        auto lg = load_graph(path);
                        if (lg.bit) {
                            factors.push_back(ProductFactor::from_bit(*lg.bit));
                            specs.push_back(lg.bit->spec);
                        } else {
                            factors.push_back(ProductFactor::from_graph(lg.graph));
                        }
                    }
                    p = cartesian_product(factors);
                    if (specs.size() == factors.size()) {
                        p.factor_specs = specs;
                    }
                }
                for (const auto& s : p.factor_specs) {
                    ctx.seeds.push_back(s.rng_seed);
                }
                ctx.outputs.add("--out", o->out, dump(product_to_json(p)));
                if (!o->dot.empty()) {
                    ctx.outputs.add("--dot", o->dot, product_to_dot(p));
                }
                ctx.out << "product of " << p.q << " factors: " << p.graph.vertex_count() << " vertices, "
                        << p.graph.edge_count() << " edges\n";
            }};
}

// ---------------------------------------------------------------- concurrence

struct ConcurrenceOptions {
    std::string experiment = "all";
    std::size_t seeds = 10;
    std::uint64_t seed_base = 1;
    double weight = 1.0;
    double extra_p = 0.0;
    std::size_t n = 60;
    std::size_t d = 40;
    double p = 0.2;
    std::string out;
    std::string json;
};

Command make_concurrence(CLI::App& app) {
    auto o = std::make_shared<ConcurrenceOptions>();
    auto* sub = app.add_subcommand("concurrence", "Concurrence of non-separable two-bit experiments");
    sub->add_option("--experiment", o->experiment, "paper-v1, paper-v2, paper-v3, all or custom")
        ->check(CLI::IsMember({"paper-v1", "paper-v2", "paper-v3", "all", "custom"}))
        ->capture_default_str();
    sub->add_option("--seeds", o->seeds, "Ensemble size")->capture_default_str();
    sub->add_option("--seed-base", o->seed_base, "First seed")->capture_default_str();
    sub->add_option("--weight", o->weight, "Inherited coupling weight (custom)")->capture_default_str();
    sub->add_option("--extra-p", o->extra_p, "Extra a1b2--a2b1 edge probability (custom)")->capture_default_str();
    sub->add_option("--n", o->n, "Vertices per subgraph (custom)")->capture_default_str();
    sub->add_option("--d", o->d, "Subgraph degree (custom)")->capture_default_str();
    sub->add_option("--p", o->p, "Coupling probability (custom)")->capture_default_str();
    sub->add_option("--out", o->out, "Ensemble summary CSV")->required();
    sub->add_option("--json", o->json, "Per-run report JSON");
    return {sub, [o](Context& ctx) {
                if (o->seeds == 0) {
                    throw ValidationError("--seeds must be at least 1");
                }
                std::vector<ExperimentConfig> configs;
                if (o->experiment == "all") {
                    for (const char* name : {"paper-v1", "paper-v2", "paper-v3"}) {
                        configs.push_back(preset_experiment(name));
                    }
                } else if (o->experiment == "custom") {
                    ExperimentConfig c;
                    c.n_per_subgraph = o->n;
                    c.degree = o->d;
                    c.coupling_probability = o->p;
                    c.inherited_weight = o->weight;
                    c.extra_probability = o->extra_p;
                    configs.push_back(c);
                } else {
                    configs.push_back(preset_experiment(o->experiment));
                }
                for (std::size_t i = 0; i < o->seeds; ++i) {
                    ctx.seeds.push_back(o->seed_base + i);
                }

                std::ostringstream csv;
                csv << "experiment,seeds,inherited_weight,extra_probability,mean_concurrence,sd_concurrence,"
                       "mean_diagonal,mean_off_diagonal\n";
                Json report{{"experiments", Json::array()}};
                for (const auto& c : configs) {
                    const auto s = run_ensemble(c, ctx.seeds);
                    csv << c.name << "," << o->seeds << "," << format_number(c.inherited_weight) << ","
                        << format_number(c.extra_probability) << "," << format_number(s.mean_concurrence) << ","
                        << format_number(s.sd_concurrence) << "," << format_number(s.mean_diagonal) << ","
                        << format_number(s.mean_off_diagonal) << "\n";
                    Json runs = Json::array();
                    for (const auto& r : s.runs) {
                        Json coeffs = Json::array();
                        for (int k = 0; k < 4; ++k) {
                            coeffs.push_back(complex_json(r.state.amplitudes(k)));
                        }
                        runs.push_back({{"seed", r.seed},
                                        {"coefficients", coeffs},
                                        {"concurrence", r.concurrence},
                                        {"extra_edges", r.extra_edges}});
                    }
                    report["experiments"].push_back({{"name", c.name},
                                                     {"n", c.n_per_subgraph},
                                                     {"d", c.degree},
                                                     {"p", c.coupling_probability},
                                                     {"inherited_weight", c.inherited_weight},
                                                     {"extra_probability", c.extra_probability},
                                                     {"basis", natural_basis()},
                                                     {"runs", runs},
                                                     {"mean_concurrence", s.mean_concurrence},
                                                     {"sd_concurrence", s.sd_concurrence}});
                    ctx.out << std::left << std::setw(10) << c.name << " concurrence " << std::fixed
                            << std::setprecision(4) << s.mean_concurrence << " +- " << s.sd_concurrence
                            << "  coefficients (" << s.mean_diagonal << ", " << s.mean_off_diagonal << ")\n"
                            << std::defaultfloat;
                }
                ctx.outputs.add("--out", o->out, csv.str());
                if (!o->json.empty()) {
                    ctx.outputs.add("--json", o->json, dump(report));
                }
            }};
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
    std::string input;
    double K = 5.0;
    double K_prime = 0.0;
    double dt = 0.01;
    double t_max = 200.0;
    std::uint64_t seed = 0;
    std::size_t record_every = 10;
    std::size_t simplex_entries = 0;
    bool no_plateau = false;
    std::string out;
    std::string report;
};

Command make_simulate(CLI::App& app) {
    auto o = std::make_shared<SimulateOptions>();
    auto* sub = app.add_subcommand("simulate", "Kuramoto dynamics on a graph");
    sub->add_option("--input", o->input, "Graph or QL bit JSON")->required();
    sub->add_option("--K", o->K, "Pairwise coupling")->capture_default_str();
    sub->add_option("--Kprime", o->K_prime, "Simplex coupling")->capture_default_str();
    sub->add_option("--dt", o->dt, "Time step")->capture_default_str();
    sub->add_option("--tmax", o->t_max, "Horizon")->capture_default_str();
    sub->add_option("--seed", o->seed, "Seed for initial phases and simplex entries")->capture_default_str();
    sub->add_option("--record-every", o->record_every, "Steps between recorded points")->capture_default_str();
    sub->add_option("--simplex-entries", o->simplex_entries, "Random simplex tensor entries")->capture_default_str();
    sub->add_flag("--no-plateau", o->no_plateau, "Always integrate to --tmax");
    sub->add_option("--out", o->out, "Trajectory CSV")->required();
    sub->add_option("--report", o->report, "Final report JSON");
    return {sub, [o](Context& ctx) {
                const auto lg = load_graph(o->input);
                auto e = random_ensemble(lg.graph.vertex_count(), o->K, o->seed);
                e.K_prime = o->K_prime;
                if (o->simplex_entries > 0) {
                    auto rng = make_rng(o->seed, 0x51);
                    std::uniform_int_distribution<std::size_t> pick(0, lg.graph.vertex_count() - 1);
                    for (std::size_t k = 0; k < o->simplex_entries; ++k) {
                        e.simplex.push_back({pick(rng), pick(rng), pick(rng), pick(rng)});
                    }
                }
                SimConfig cfg;
                cfg.dt = o->dt;
                cfg.t_max = o->t_max;
                cfg.seed = o->seed;
                cfg.record_every = o->record_every;
                cfg.stop_on_plateau = !o->no_plateau;
                const auto r = simulate(e, lg.graph, lg.blocks, cfg);
                ctx.seeds = {o->seed};
                ctx.outputs.add("--out", o->out, trajectory_to_csv(r, lg.blocks));
                if (!o->report.empty()) {
                    ctx.outputs.add("--report", o->report, dump(sim_report_to_json(r)));
                }
                const auto op = order_parameter(r.final_state);
                ctx.out << "t = " << format_number(r.t_final) << ", r = " << format_number(op.r)
                        << (r.plateaued ? " (plateau)" : "") << "\n";
                for (const auto& b : r.blocks) {
                    ctx.out << "  " << b.name << ": mean " << format_number(b.mean) << ", sd "
                            << format_number(b.sd) << "\n";
                }
            }};
}

// ---------------------------------------------------------------- nocloning

struct NoCloningOptions {
    std::string input_a;
    std::string input_b;
    std::size_t n0 = 3;
    double rotation = std::numbers::pi / 4.0;
    std::string out;
};

Json constraint_json(const PhaseConstraint& c, std::size_t n0) {
    return {{"u", c.u},
            {"v", c.v},
            {"offset", c.offset},
            {"kind", c.kind == ConstraintKind::invariance ? "invariance" : "block_identity"},
            {"text", c.describe(n0)}};
}

Command make_nocloning(CLI::App& app) {
    auto o = std::make_shared<NoCloningOptions>();
    auto* sub = app.add_subcommand("nocloning", "Phase-conjugation cloning feasibility check");
    sub->add_option("--input-a", o->input_a, "Graph G_A (the state to copy)");
    sub->add_option("--input-b", o->input_b, "Graph G_B (the copy target)");
    sub->add_option("--n0", o->n0, "Vertices of the built-in complete-graph instance")->capture_default_str();
    sub->add_option("--rotation", o->rotation, "Gain rotation of G_B against G_A (built-in instance)")
        ->capture_default_str();
    sub->add_option("--out", o->out, "Verdict JSON")->required();
    return {sub, [o](Context& ctx) {
                GainGraph ga;
                GainGraph gb;
                if (!o->input_a.empty() || !o->input_b.empty()) {
                    if (o->input_a.empty() || o->input_b.empty()) {
                        throw ValidationError("--input-a and --input-b must be given together");
                    }
                    ga = load_graph(o->input_a).graph;
                    gb = load_graph(o->input_b).graph;
                } else {
                    ga = GainGraph(o->n0);
                    gb = GainGraph(o->n0);
                    for (std::size_t u = 0; u < o->n0; ++u) {
                        for (std::size_t v = u + 1; v < o->n0; ++v) {
                            ga.add_edge(u, v, 1.0);
                            gb.add_edge(u, v, std::polar(1.0, o->rotation));
                        }
                    }
                }
                const auto sys = build_clone_constraints(ga, gb);
                const auto verdict = solve_phase_constraints(sys);
                Json j{{"n0", sys.n0},
                       {"constraints", sys.constraints.size()},
                       {"verdict", verdict.feasible ? "FEASIBLE" : "INFEASIBLE"}};
                if (verdict.feasible) {
                    j["phases"] = verdict.phases;
                } else {
                    const auto& w = *verdict.witness;
                    Json path = Json::array();
                    for (const auto& c : w.path) {
                        path.push_back(constraint_json(c, sys.n0));
                    }
                    j["witness"] = {{"conflicting", constraint_json(w.conflicting, sys.n0)},
                                    {"implied", w.implied},
                                    {"path", path},
                                    {"text", w.describe(sys.n0)}};
                    ctx.out << w.describe(sys.n0) << "\n";
                }
                ctx.out << (verdict.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
                ctx.outputs.add("--out", o->out, dump(j));
            }};
}

// ---------------------------------------------------------------- poset

struct PosetOptions {
    std::size_t q = 3;
    std::string hasse;
    std::string out;
};

Command make_poset(CLI::App& app) {
    auto o = std::make_shared<PosetOptions>();
    auto* sub = app.add_subcommand("poset", "Boolean lattice B_q and its Hasse diagram");
    sub->add_option("--q", o->q, "Rank (1..10)")->required();
    sub->add_option("--hasse", o->hasse, "Hasse diagram DOT file");
    sub->add_option("--out", o->out, "Poset JSON");
    return {sub, [o](Context& ctx) {
                if (o->hasse.empty() && o->out.empty()) {
                    throw ValidationError("give --hasse and/or --out");
                }
                const BooleanPoset poset(o->q);
                if (!o->hasse.empty()) {
                    ctx.outputs.add("--hasse", o->hasse, hasse_to_dot(poset));
                }
                if (!o->out.empty()) {
                    Json sets = Json::array();
                    for (auto x : poset.sets()) {
                        sets.push_back({{"set", BooleanPoset::format(x)}, {"rank", poset.rank_of(x)}});
                    }
                    Json covers = Json::array();
                    for (const auto& [x, y] : poset.cover_relations()) {
                        covers.push_back({BooleanPoset::format(x), BooleanPoset::format(y)});
                    }
                    const auto cert = hypercube_check(poset.hasse_graph(), o->q);
                    ctx.outputs.add("--out", o->out,
                                    dump({{"q", o->q},
                                          {"sets", sets},
                                          {"covers", covers},
                                          {"relations", poset.relations().size()},
                                          {"hasse_is_hypercube", cert.is_hypercube}}));
                }
                ctx.out << poset.size() << " sets, " << poset.cover_relations().size() << " cover relations\n";
            }};
}

// ---------------------------------------------------------------- su2

struct Su2Options {
    std::vector<double> jones;
    std::vector<double> quaternion;
    std::vector<double> state;
    std::string out;
};

Command make_su2(CLI::App& app) {
    auto o = std::make_shared<Su2Options>();
    auto* sub = app.add_subcommand("su2", "Convert between Jones vectors, quaternions and SU(2)");
    auto* j = sub->add_option("--jones", o->jones, "x.re x.im y.re y.im")->expected(4);
    auto* q = sub->add_option("--quaternion", o->quaternion, "a b c d")->expected(4);
    auto* s = sub->add_option("--state", o->state, "alpha.re alpha.im beta.re beta.im")->expected(4);
    j->excludes(q)->excludes(s);
    q->excludes(s);
    sub->add_option("--out", o->out, "Output JSON")->required();
    return {sub, [o](Context& ctx) {
                Json doc;
                if (!o->jones.empty()) {
                    const JonesVector jv{Complex(o->jones[0], o->jones[1]), Complex(o->jones[2], o->jones[3])};
                    const auto quat = jones_to_quaternion(jv);
                    doc = {{"jones", jones_to_json(normalized(jv))},
                           {"quaternion", quaternion_to_json(quat)},
                           {"su2", su2_to_json(quaternion_to_su2(quat))}};
                } else if (!o->quaternion.empty()) {
                    const Quaternion quat{o->quaternion[0], o->quaternion[1], o->quaternion[2], o->quaternion[3]};
                    doc = {{"quaternion", quaternion_to_json(normalized(quat))},
                           {"jones", jones_to_json(quaternion_to_jones(quat))},
                           {"su2", su2_to_json(quaternion_to_su2(quat))}};
                } else if (!o->state.empty()) {
                    const auto u = state_to_su2(Complex(o->state[0], o->state[1]), Complex(o->state[2], o->state[3]));
                    doc = {{"state", {complex_json(u.m(0, 0)), complex_json(u.m(1, 0))}}, {"su2", su2_to_json(u)}};
                } else {
                    throw ValidationError("give one of --jones, --quaternion or --state");
                }
                ctx.outputs.add("--out", o->out, dump(doc));
                ctx.out << doc["su2"].dump() << "\n";
            }};
}

// ---------------------------------------------------------------- census

struct CensusOptions {
    std::size_t q_max = 8;
    std::string out;
};

Command make_census(CLI::App& app) {
    auto o = std::make_shared<CensusOptions>();
    auto* sub = app.add_subcommand("census", "Zero-coupling block counts of q-bit products");
    sub->add_option("--q-max", o->q_max, "Largest q (1..12)")->capture_default_str();
    sub->add_option("--out", o->out, "Census CSV")->required();
    return {sub, [o](Context& ctx) {
                std::ostringstream csv;
                csv << "q,blocks,formula,enumerated\n";
                for (std::size_t q = 1; q <= o->q_max; ++q) {
                    const auto f = zero_coupling_block_count(q);
                    const auto e = enumerate_zero_coupling_blocks(q);
                    csv << q << "," << (std::uint64_t{1} << q) << "," << f << "," << e << "\n";
                    ctx.out << "q = " << q << ": " << f << (f == e ? "" : " (enumeration disagrees)") << "\n";
                }
                ctx.outputs.add("--out", o->out, csv.str());
            }};
}

// ---------------------------------------------------------------- cnot

struct CnotOptions {
    std::string out;
};

Json matrix_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).real());
        }
        rows.push_back(row);
    }
    return rows;
}

Json components_json(const BlockMatrix& a) {
    const auto g = block_pattern_graph(a);
    const auto census = connected_components(g);
    Json groups = Json::array();
    for (const auto& members : census.members()) {
        Json names = Json::array();
        for (auto v : members) {
            names.push_back(a.basis[v]);
        }
        groups.push_back(names);
    }
    return {{"count", census.count}, {"components", groups}};
}

Command make_cnot(CLI::App& app) {
    auto o = std::make_shared<CnotOptions>();
    auto* sub = app.add_subcommand("cnot", "CNOT permutation of the two-bit block adjacency");
    sub->add_option("--out", o->out, "Report JSON")->required();
    return {sub, [o](Context& ctx) {
                const auto a = separable_block_matrix();
                const auto b = cnot_transform(a);
                const auto sa = eigendecompose(a.m);
                const auto sb = eigendecompose(b.m);
                Json doc{{"input", {{"basis", a.basis}, {"matrix", matrix_json(a.m)}, {"graph", components_json(a)}}},
                         {"output", {{"basis", b.basis}, {"matrix", matrix_json(b.m)}, {"graph", components_json(b)}}},
                         {"spectrum_change", (sa.eigenvalues - sb.eigenvalues).cwiseAbs().maxCoeff()}};
                ctx.outputs.add("--out", o->out, dump(doc));
                ctx.out << "output basis (" << b.basis[0] << ", " << b.basis[1] << ", " << b.basis[2] << ", "
                        << b.basis[3] << "), " << doc["output"]["graph"]["count"] << " component(s)\n";
            }};
}

// ---------------------------------------------------------------- replay

struct ReplayOptions {
    std::string manifest;
};

Command make_replay(CLI::App& app) {
    auto o = std::make_shared<ReplayOptions>();
    auto* sub = app.add_subcommand("replay", "Re-run a manifest and compare output checksums");
    sub->add_option("--manifest", o->manifest, "Manifest JSON written next to an output")->required();
    Command cmd{sub, [o](Context& ctx) {
                    namespace fs = std::filesystem;
                    const auto m = load_json(o->manifest);
                    if (!m.contains("argv") || !m.contains("outputs")) {
                        throw ValidationError("'" + o->manifest + "' is not a run manifest");
                    }
                    if (m.value("version", std::string()) != tool_version()) {
                        ctx.err << "warning: manifest was written by version " << m.value("version", std::string("?"))
                                << "\n";
                    }
                    auto argv = m.at("argv").get<std::vector<std::string>>();
                    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
                    const auto dir = fs::temp_directory_path() / ("qlgraph-replay-" + std::to_string(stamp));
                    fs::create_directories(dir);
                    std::vector<std::pair<std::string, std::string>> expected;
                    std::size_t index = 0;
                    for (const auto& out : m.at("outputs")) {
                        const auto path = out.at("path").get<std::string>();
                        const auto fresh = (dir / (std::to_string(index++) + "_" + fs::path(path).filename().string())).string();
                        bool substituted = false;
                        for (auto& a : argv) {
                            if (a == path) {
                                a = fresh;
                                substituted = true;
                            }
                        }
                        if (!substituted) {
                            argv.push_back(out.at("flag").get<std::string>());
                            argv.push_back(fresh);
                        }
                        expected.emplace_back(fresh, out.at("sha256").get<std::string>());
                    }
                    std::ostringstream sink;
                    std::ostringstream errors;
                    const int status = run(argv, sink, errors);
                    bool ok = status == kExitOk;
                    if (!ok) {
                        ctx.err << errors.str();
                    }
                    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
                        const auto digest = sha256_hex(read_text_file(expected[i].first));
                        const bool match = digest == expected[i].second;
                        ctx.out << (match ? "match    " : "MISMATCH ") << m.at("outputs")[i].at("path").get<std::string>()
                                << "\n";
                        ok = ok && match;
                    }
                    std::error_code ec;
                    fs::remove_all(dir, ec);
                    if (!ok) {
                        throw NumericalError("replay did not reproduce the recorded outputs");
                    }
                    ctx.out << "replay reproduced " << expected.size() << " output(s)\n";
                }};
    cmd.writes_manifest = false;
    return cmd;
}

}  // namespace

std::vector<Command> register_commands(CLI::App& app) {
    return {make_build(app),    make_spectrum(app), make_product(app), make_concurrence(app),
            make_simulate(app), make_nocloning(app), make_poset(app),  make_su2(app),
            make_census(app),   make_cnot(app),     make_replay(app)};
}

}  // namespace qlgraph::cli
