// mdual: generate simplicial meshes, compute median-dual metrics, verify them.
//
// Exit codes: 0 success / verification pass, 2 input error, 3 verification failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mdual/dual_algebraic.hpp"
#include "mdual/generators.hpp"
#include "mdual/io.hpp"
#include "mdual/verify.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        mdual::write_file(out_path, text);
    }
}

mdual::kernels::Backend backend_from(const std::string& name) {
    auto b = mdual::kernels::parse_backend(name);
    if (!b) throw mdual::InputError("unknown kernel \"" + name + "\" (expected auto, scalar or avx2)");
    return *b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Median-dual metrics for d-simplicial meshes"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a Kuhn grid or a canonical mesh");
    int gen_dim = 0;
    int gen_n = 1;
    double gen_perturb = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_canonical;
    std::string gen_out;
    gen->add_option("--dim", gen_dim, "Dimension d (2-5)");
    gen->add_option("--cells-per-axis", gen_n, "Cubes per axis")->check(CLI::PositiveNumber);
    gen->add_option("--perturb", gen_perturb, "Interior perturbation, fraction of local edge length")
        ->check(CLI::Range(0.0, 0.3));
    gen->add_option("--seed", gen_seed, "Perturbation seed");
    gen->add_option("--canonical", gen_canonical, "Named mesh instead of a grid")
        ->check(CLI::IsMember(std::vector<std::string>(mdual::kCanonicalMeshNames.begin(),
                                                        mdual::kCanonicalMeshNames.end())));
    gen->add_option("-o,--output", gen_out, "Output mesh.json (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Check a mesh file");
    std::string val_in;
    val->add_option("mesh", val_in, "mesh.json")->required();

    // dual
    auto* dual = app.add_subcommand("dual", "Compute dual volumes and directed-hyperarea vectors");
    std::string dual_in;
    std::string dual_out;
    bool no_correction = false;
    bool dual_parallel = false;
    std::string dual_kernel = "auto";
    dual->add_option("mesh", dual_in, "mesh.json")->required();
    dual->add_flag("--no-boundary-correction", no_correction, "Omit the boundary-facet term");
    dual->add_flag("--parallel", dual_parallel, "Compute cell normals on worker threads");
    dual->add_option("--kernel", dual_kernel, "auto, scalar or avx2");
    dual->add_option("-o,--output", dual_out, "Output dual.json (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "Closure, oracle and conservation checks");
    std::string ver_in;
    std::string ver_out;
    std::optional<double> ver_coeff;
    bool ver_alt = false;
    std::string ver_kernel = "auto";
    ver->add_option("mesh", ver_in, "mesh.json")->required();
    ver->add_option("--boundary-coefficient", ver_coeff, "Closure weight of boundary normals (default 1/d)");
    ver->add_flag("--paper-coefficient", ver_alt, "Closure weight 1/(d+1) (1/5 in 4D); residuals reported, not gating");
    ver->add_option("--kernel", ver_kernel, "auto, scalar or avx2");
    ver->add_option("-o,--output", ver_out, "Output report.json (default stdout)");

    // info
    auto* info = app.add_subcommand("info", "Print mesh counts");
    std::string info_in;
    info->add_option("mesh", info_in, "mesh.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen) {
            mdual::Triangulation t = [&] {
                if (!gen_canonical.empty()) return mdual::canonical_mesh(gen_canonical);
                if (gen_dim == 0) throw mdual::InputError("generate: --dim or --canonical is required");
                return mdual::kuhn_grid(gen_dim, gen_n, gen_perturb, gen_seed);
            }();
            emit(mdual::dump(mdual::mesh_to_json(mdual::to_mesh_data(t))), gen_out);
            return 0;
        }
        if (*val) {
            mdual::Triangulation t = mdual::to_triangulation(mdual::read_mesh_file(val_in));
            std::cout << "valid: dimension " << t.dim() << ", " << t.num_points() << " points, " << t.num_cells()
                      << " cells\n";
            return 0;
        }
        if (*dual) {
            mdual::Triangulation t = mdual::to_triangulation(mdual::read_mesh_file(dual_in));
            mdual::AccumulateOptions opts;
            opts.boundary_correction = !no_correction;
            opts.execution = dual_parallel ? mdual::Execution::Parallel : mdual::Execution::Sequential;
            opts.backend = backend_from(dual_kernel);
            const mdual::DirectedAreaField field = mdual::directed_area_field(t, opts);
            if (!field.notice.empty()) std::cerr << "note: " << field.notice << "\n";
            emit(mdual::dump(mdual::dual_to_json(t, mdual::dual_volumes(t), field)), dual_out);
            return 0;
        }
        if (*ver) {
            mdual::Triangulation t = mdual::to_triangulation(mdual::read_mesh_file(ver_in));
            mdual::VerifyOptions opts;
            if (ver_coeff) opts.boundary_coefficient = *ver_coeff;
            opts.alternate_coefficient = ver_alt;
            opts.accumulate.backend = backend_from(ver_kernel);
            const mdual::VerificationReport r = mdual::verify(t, opts);
            emit(mdual::dump(mdual::report_to_json(r)), ver_out);
            for (const auto& c : r.checks) {
                std::cerr << (c.pass ? "ok   " : (c.gating ? "FAIL " : "info ")) << c.name << " = " << c.value
                          << " (tol " << c.tolerance << (c.gating ? "" : ", not gating") << ")\n";
            }
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
            std::cerr << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
            return r.pass ? 0 : kExitVerify;
        }
        if (*info) {
            mdual::Triangulation t = mdual::to_triangulation(mdual::read_mesh_file(info_in));
            std::cout << "dimension " << t.dim() << "\n"
                      << "points " << t.num_points() << "\n"
                      << "cells " << t.num_cells() << "\n"
                      << "edges " << t.num_edges() << "\n"
                      << "interior_facets " << t.num_interior_facets() << "\n"
                      << "boundary_facets " << t.num_boundary_facets() << "\n";
            return 0;
        }
    } catch (const mdual::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mdual::MeshError& e) {
        std::cerr << "invalid mesh: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
