#include "hodgekit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hodgekit/chains.hpp"
#include "hodgekit/error.hpp"
#include "hodgekit/filters.hpp"
#include "hodgekit/generators.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/homology.hpp"
#include "hodgekit/io.hpp"
#include "hodgekit/sheaf.hpp"
#include "hodgekit/spectral.hpp"

namespace hodgekit::cli {

namespace {

using io::json;

SimplicialComplex load_complex(const std::string& path)
{
    try {
        return build_complex(io::parse_complex(io::read_json_file(path)));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn)
{
    try {
        return fn(io::read_json_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

InnerProductWeights load_weights(const RunConfig& config, const SimplicialComplex& c)
{
    if (config.weights_path.empty())
        return InnerProductWeights::unit(c);
    return with_path(config.weights_path, [&](const json& doc) { return io::parse_weights(doc, simplex_counts(c)); });
}

Cochain load_signal(const RunConfig& config, const SimplicialComplex& c, bool require_dim)
{
    Cochain s = with_path(config.signal_path, [&](const json& doc) { return io::parse_signal(doc, c); });
    if (require_dim && s.dim != config.dim)
        throw Error(ErrorCode::ShapeMismatch, config.signal_path + ": signal has dimension " +
                                                  std::to_string(s.dim) + " but --dim is " +
                                                  std::to_string(config.dim));
    return s;
}

Field parse_field(const std::string& name)
{
    if (name == "gf2")
        return Field::GF2;
    if (name == "real")
        return Field::Real;
    throw Error(ErrorCode::Validation, "unknown field \"" + name + "\"");
}

void dump_matrix(const RunConfig& config, const SparseMatrix& m, const SimplicialComplex& c, int row_dim,
                 int col_dim)
{
    if (config.dump_matrix_path.empty())
        return;
    std::ofstream file(config.dump_matrix_path);
    if (!file)
        throw Error(ErrorCode::Validation, config.dump_matrix_path + ": cannot open for writing");
    io::write_labeled_csv(file, m, io::simplex_labels(c, row_dim), io::simplex_labels(c, col_dim));
}

void emit_json(std::ostream& out, const json& doc)
{
    out << doc.dump() << '\n';
}

void run_command(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    switch (config.command) {
    case Command::Betti: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Field field = parse_field(config.field);
        const BettiVector requested = betti(c, field, config.tol);
        const BettiVector reference = betti(c, Field::GF2);
        if (requested != reference) {
            err << "error: " << config.complex_path
                << ": real and GF(2) Betti numbers disagree; the real rank tolerance is unsuitable\n";
            emit_json(out, json{{"betti", reference}, {"betti_real", requested}});
            throw Error(ErrorCode::Numerical, "Betti numbers disagree between fields");
        }
        emit_json(out, json{{"betti", requested}});
        return;
    }
    case Command::Boundary: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const SparseMatrix d = boundary_matrix(c, config.dim, parse_field(config.field));
        dump_matrix(config, d, c, config.dim - 1, config.dim);
        io::write_dense_csv(out, d);
        return;
    }
    case Command::Laplacian: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const HodgeOperators ops = hodge_laplacian(c, config.dim, load_weights(config, c));
        const SparseMatrix& m = config.part == LaplacianPart::Up     ? ops.up
                                : config.part == LaplacianPart::Down ? ops.down
                                                                     : ops.full;
        dump_matrix(config, m, c, config.dim, config.dim);
        io::write_dense_csv(out, m);
        return;
    }
    case Command::Spectrum: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const SpectralBasis basis = spectral_basis(hodge_laplacian(c, config.dim, load_weights(config, c)));
        out << "k,eigenvalue\n";
        for (Eigen::Index k = 0; k < basis.eigenvalues.size(); ++k)
            out << k << ',' << io::format_number(basis.eigenvalues(k)) << '\n';
        return;
    }
    case Command::Sft: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Cochain x = load_signal(config, c, true);
        const SpectralBasis basis = spectral_basis(hodge_laplacian(c, config.dim));
        emit_json(out, io::signal_to_json(config.inverse ? inverse_sft(x, basis) : sft(x, basis)));
        return;
    }
    case Command::Decompose: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Cochain s = load_signal(config, c, true);
        const InnerProductWeights w = load_weights(config, c);
        const HodgeDecomposition parts = hodge_decompose(s, c, config.dim, w, config.tol);
        emit_json(out, json{{"dim", config.dim},
                            {"irrot", parts.irrot.values},
                            {"harmonic", parts.harmonic.values},
                            {"solenoid", parts.solenoid.values},
                            {"norms",
                             {{"signal", norm(s, w)},
                              {"irrot", norm(parts.irrot, w)},
                              {"harmonic", norm(parts.harmonic, w)},
                              {"solenoid", norm(parts.solenoid, w)}}}});
        return;
    }
    case Command::Filter: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Cochain s = load_signal(config, c, false);
        const FilterSpec spec = with_path(config.filter_path, [](const json& doc) { return io::parse_filter(doc); });
        if (spec.dim != s.dim)
            throw Error(ErrorCode::ShapeMismatch, "filter has dimension " + std::to_string(spec.dim) +
                                                      ", signal has dimension " + std::to_string(s.dim));
        const SparseMatrix H = build_filter(spec, hodge_laplacian(c, spec.dim));
        emit_json(out, io::signal_to_json(apply_filter(H, s)));
        return;
    }
    case Command::SheafCohomology: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Sheaf sh = with_path(config.sheaf_path, [&](const json& doc) { return io::parse_sheaf(doc, c); });
        emit_json(out, json{{"dims", sheaf_cohomology_dims(c, sh, config.tol)}});
        return;
    }
    case Command::SheafCheck: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const Sheaf sh = with_path(config.sheaf_path, [&](const json& doc) { return io::parse_sheaf(doc, c); });
        const Assignment x =
            with_path(config.assignment_path, [&](const json& doc) { return io::parse_assignment(doc, c, sh); });
        const ConsistencyResult result = check_consistency(c, sh, x, config.tol.value_or(kConsistencyTol));
        double worst = 0.0;
        for (double v : result.residual.values)
            worst = std::max(worst, std::abs(v));
        json residual = result.residual.dim <= c.max_dim() ? io::assignment_to_json(result.residual, c, sh)
                                                           : json{{"dim", result.residual.dim}, {"blocks", json::object()}};
        emit_json(out, json{{"consistent", result.consistent}, {"max_residual", worst}, {"residual", residual}});
        return;
    }
    case Command::SpectraCompare: {
        const SimplicialComplex c = load_complex(config.complex_path);
        const SpectraReport r = compare_spectra(c, config.tol);
        emit_json(out, json{{"agree", r.agree},
                            {"zero_mult_diff", r.zero_mult_diff},
                            {"b0_minus_b1", r.b0_minus_b1},
                            {"zero_mult_l0", r.zero_mult_l0},
                            {"zero_mult_l1", r.zero_mult_l1},
                            {"nonzero_l0", r.nonzero_l0},
                            {"nonzero_l1", r.nonzero_l1}});
        return;
    }
    case Command::Generate: {
        TopSimplices tops;
        if (config.kind == "cycle")
            tops = cycle_graph(config.n);
        else if (config.kind == "path")
            tops = path_graph(config.n);
        else if (config.kind == "sphere2")
            tops = octahedron_sphere();
        else if (config.kind == "torus")
            tops = torus7();
        else if (config.kind == "random-graph")
            tops = random_graph(config.n, config.p, config.seed);
        else if (config.kind == "crosslinked-cycle")
            tops = crosslinked_cycle(config.n, config.k, config.seed);
        else
            throw Error(ErrorCode::BadParams, "unknown generator \"" + config.kind + "\"");
        emit_json(out, io::complex_to_json(tops));
        return;
    }
    }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.output_path.empty()) {
            run_command(config, out, err);
        } else {
            std::ostringstream buffer;
            run_command(config, buffer, err);
            std::ofstream file(config.output_path, std::ios::binary);
            if (!file)
                throw Error(ErrorCode::Validation, config.output_path + ": cannot open for writing");
            file << buffer.str();
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool numerical = e.code() == ErrorCode::Numerical || e.code() == ErrorCode::NotSymmetric;
        return numerical ? kExitNumerical : kExitValidation;
    } catch (const io::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    CLI::App app{"Combinatorial Hodge theory toolkit: homology, Hodge Laplacians, spectra, filters and sheaves"};
    app.require_subcommand(1);

    auto add_tol = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--tol", config.tol, help)->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", config.output_path, "Write the result to a file instead of stdout");
    };
    const std::map<std::string, LaplacianPart> parts{
        {"up", LaplacianPart::Up}, {"down", LaplacianPart::Down}, {"full", LaplacianPart::Full}};

    struct Sub {
        CLI::App* app;
        Command command;
    };
    std::vector<Sub> subs;

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex");
    betti_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    betti_cmd->add_option("--field", config.field, "Coefficient field")->check(CLI::IsMember({"gf2", "real"}));
    add_tol(betti_cmd, "Absolute pivot tolerance for real rank");
    subs.push_back({betti_cmd, Command::Betti});

    auto* boundary_cmd = app.add_subcommand("boundary", "Boundary matrix as dense CSV");
    boundary_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    boundary_cmd->add_option("--dim", config.dim, "Chain dimension n of ∂_n")->required();
    boundary_cmd->add_option("--field", config.field, "Coefficient field")->check(CLI::IsMember({"gf2", "real"}));
    boundary_cmd->add_option("--dump-matrix", config.dump_matrix_path, "Also write a labeled CSV here");
    subs.push_back({boundary_cmd, Command::Boundary});

    auto* lap_cmd = app.add_subcommand("laplacian", "Hodge Laplacian as dense CSV");
    lap_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    lap_cmd->add_option("--dim", config.dim, "Dimension")->required();
    lap_cmd->add_option("--weights", config.weights_path, "Inner-product weights JSON");
    lap_cmd->add_option("--part", config.part, "up, down or full")->transform(CLI::CheckedTransformer(parts));
    lap_cmd->add_option("--dump-matrix", config.dump_matrix_path, "Also write a labeled CSV here");
    subs.push_back({lap_cmd, Command::Laplacian});

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of the Hodge Laplacian as CSV");
    spectrum_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    spectrum_cmd->add_option("--dim", config.dim, "Dimension")->required();
    spectrum_cmd->add_option("--weights", config.weights_path, "Inner-product weights JSON");
    subs.push_back({spectrum_cmd, Command::Spectrum});

    auto* sft_cmd = app.add_subcommand("sft", "Simplicial Fourier transform of a signal");
    sft_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    sft_cmd->add_option("signal", config.signal_path, "Signal JSON")->required();
    sft_cmd->add_option("--dim", config.dim, "Dimension")->required();
    sft_cmd->add_flag("--inverse", config.inverse, "Apply the inverse transform");
    subs.push_back({sft_cmd, Command::Sft});

    auto* dec_cmd = app.add_subcommand("decompose", "Hodge decomposition of a signal");
    dec_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    dec_cmd->add_option("signal", config.signal_path, "Signal JSON")->required();
    dec_cmd->add_option("--dim", config.dim, "Dimension")->required();
    dec_cmd->add_option("--weights", config.weights_path, "Inner-product weights JSON");
    add_tol(dec_cmd, "Relative rank threshold of the projections");
    subs.push_back({dec_cmd, Command::Decompose});

    auto* filter_cmd = app.add_subcommand("filter", "Apply a polynomial Laplacian filter");
    filter_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    filter_cmd->add_option("signal", config.signal_path, "Signal JSON")->required();
    filter_cmd->add_option("filter", config.filter_path, "Filter JSON")->required();
    subs.push_back({filter_cmd, Command::Filter});

    auto* coh_cmd = app.add_subcommand("sheaf-cohomology", "Dimensions of sheaf cohomology");
    coh_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    coh_cmd->add_option("sheaf", config.sheaf_path, "Sheaf JSON")->required();
    add_tol(coh_cmd, "Absolute pivot tolerance for real rank");
    subs.push_back({coh_cmd, Command::SheafCohomology});

    auto* check_cmd = app.add_subcommand("sheaf-check", "Consistency of a sheaf assignment");
    check_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    check_cmd->add_option("sheaf", config.sheaf_path, "Sheaf JSON")->required();
    check_cmd->add_option("assignment", config.assignment_path, "Assignment JSON")->required();
    add_tol(check_cmd, "Max-norm tolerance on the residual");
    subs.push_back({check_cmd, Command::SheafCheck});

    auto* cmp_cmd = app.add_subcommand("spectra-compare", "Compare vertex and edge Laplacian spectra of a graph");
    cmp_cmd->add_option("complex", config.complex_path, "Complex JSON")->required();
    add_tol(cmp_cmd, "Relative eigenvalue matching tolerance");
    subs.push_back({cmp_cmd, Command::SpectraCompare});

    auto* gen_cmd = app.add_subcommand("generate", "Emit a fixture complex");
    gen_cmd->add_option("kind", config.kind, "cycle, path, sphere2, torus, random-graph, crosslinked-cycle")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "sphere2", "torus", "random-graph", "crosslinked-cycle"}));
    gen_cmd->add_option("--n", config.n, "Number of vertices");
    gen_cmd->add_option("--k", config.k, "Number of chords");
    gen_cmd->add_option("--p", config.p, "Edge probability");
    gen_cmd->add_option("--seed", config.seed, "Random seed");
    subs.push_back({gen_cmd, Command::Generate});

    for (const auto& sub : subs)
        add_output(sub.app);

    std::vector<const char*> argv{"hodgekit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }
    for (const auto& sub : subs)
        if (sub.app->parsed())
            config.command = sub.command;
    return run(config, out, err);
}

} // namespace hodgekit::cli
