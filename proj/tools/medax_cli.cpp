// Command-line front end: squared distance transforms, medial axis maps
// and the verification suites, over CSV point sets, PGM masks and MMAF1
// field files.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 empty set,
// 4 bad parameter.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "medax/edt.hpp"
#include "medax/io.hpp"
#include "medax/medial_axis_map.hpp"
#include "medax/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitEmptySet = 3;
constexpr int kExitBadParameter = 4;

medax::GridSpec parse_grid(const std::string& text) {
    medax::GridSpec spec;
    char c1, c2, c3, c4;
    std::istringstream ss(text);
    if (!(ss >> spec.origin_x >> c1 >> spec.origin_y >> c2 >> spec.spacing >> c3 >> spec.nx >>
          c4 >> spec.ny) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
        throw medax::ParseError("bad --grid, expected \"x0,y0,h,nx,ny\"");
    std::string rest;
    if (ss >> rest) throw medax::ParseError("bad --grid, trailing junk");
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(e.what());  // bad parameter, not parse error
    }
    return spec;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads the input set: CSV -> exact points, PGM -> mask cells.
medax::ScalarField2 load_dist2(const std::string& in, const std::string& grid_text) {
    const medax::GridSpec spec = parse_grid(grid_text);
    if (ends_with(in, ".csv")) {
        medax::PointSet2 pts = medax::read_points_csv(in);
        if (pts.empty()) throw medax::EmptySetError("no points in " + in);
        return medax::edt_points(pts, spec);
    }
    medax::BinaryMask2 mask = medax::read_pgm_mask(in, spec);
    return medax::edt_mask(mask);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"multiscale medial axis maps via quadratic opening transforms"};
    app.require_subcommand(1);

    std::string in, grid_text, out_field, out_mask, out_render, report_path;
    double lambda = 1.0;
    std::string backend = "opening";
    std::optional<double> threshold;
    int threads = 1;
    std::uint64_t seed = 42;
    double iter_tol = 0.0;
    std::string suite = "oracles";

    auto* cmd_edt = app.add_subcommand("edt", "squared Euclidean distance field");
    cmd_edt->add_option("--in", in, "points.csv or mask.pgm")->required();
    cmd_edt->add_option("--grid", grid_text, "x0,y0,h,nx,ny")->required();
    cmd_edt->add_option("--out-field", out_field, "output MMAF1 field")->required();

    auto* cmd_mam = app.add_subcommand("mam", "medial axis map field");
    cmd_mam->add_option("--in", in, "points.csv or mask.pgm")->required();
    cmd_mam->add_option("--grid", grid_text, "x0,y0,h,nx,ny")->required();
    cmd_mam->add_option("--lambda", lambda, "scale, > 0")->required();
    cmd_mam->add_option("--backend", backend, "opening|iterative");
    cmd_mam->add_option("--threshold", threshold, "write suplevel mask at this value");
    cmd_mam->add_option("--out-field", out_field, "output MMAF1 field")->required();
    cmd_mam->add_option("--out-mask", out_mask, "suplevel mask PGM");
    cmd_mam->add_option("--out-render", out_render, "8-bit min-max rendering PGM");
    cmd_mam->add_option("--threads", threads, "worker threads for the separable passes");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "oracles|bounds|stability|backends")->required();
    cmd_verify->add_option("--seed", seed, "seed for the randomized checks");
    cmd_verify->add_option("--report", report_path, "write the JSON report here");
    cmd_verify->add_option("--iter-tol", iter_tol,
                           "override the iterative-envelope stopping tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    if (cmd_edt->parsed()) {
        medax::write_field(out_field, load_dist2(in, grid_text));
        return kExitOk;
    }

    if (cmd_mam->parsed()) {
        if (!(lambda > 0.0)) throw std::domain_error("--lambda must be > 0");
        if (backend != "opening" && backend != "iterative")
            throw std::domain_error("--backend must be opening or iterative");
        if (threads < 1) throw std::domain_error("--threads must be >= 1");
        medax::MamParams params;
        params.lambda = lambda;
        params.threads = threads;
        if (backend == "iterative")
            params.backend.kind = medax::LowerTransformBackend::Kind::IterativeEnvelope;
        medax::MamResult r = medax::mam_from_dist2(load_dist2(in, grid_text), params);
        medax::write_field(out_field, r.m_field);
        if (threshold) {
            if (out_mask.empty()) throw std::domain_error("--threshold needs --out-mask");
            medax::write_pgm_mask(out_mask, medax::suplevel_mask(r.m_field, *threshold));
        }
        if (!out_render.empty()) medax::write_pgm_rendering(out_render, r.m_field);
        return kExitOk;
    }

    // verify
    medax::VerifyOptions opt;
    opt.seed = seed;
    opt.iter_tol_override = iter_tol;
    medax::SuiteReport rep = medax::run_suite(suite, opt);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  measured=" << c.measured
                  << " bound=" << c.bound << "\n";
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        f << rep.to_json() << "\n";
    }
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const medax::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const medax::EmptySetError& e) {
        std::cerr << "empty set: " << e.what() << "\n";
        return kExitEmptySet;
    } catch (const std::domain_error& e) {
        std::cerr << "bad parameter: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad parameter: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameter;
    }
}
