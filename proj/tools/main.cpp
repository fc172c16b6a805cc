#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "framecast/error.hpp"
#include "framecast/io.hpp"

namespace {

using framecast::ErrorKind;

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotAFrame:
    case ErrorKind::IllConditioned:
    case ErrorKind::NoConvergence:
    case ErrorKind::NotPositiveDefinite:
    case ErrorKind::NotHermitian:
    case ErrorKind::AllZeroInput:
    case ErrorKind::DimensionMismatch:
        return 3;
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
        return 4;
    default:
        return 2;
    }
}

} // namespace

int main(int argc, char** argv)
{
    namespace cli = framecast::cli;

    CLI::App app{"Parseval frames, spiral Fourier frames and truncation-error bounds", "framecast"};
    app.set_version_flag("--version", framecast::io::tool_version());
    app.require_subcommand(1);

    std::optional<double> tol_flag;
    std::optional<std::string> config;
    app.add_option("--tol", tol_flag, "Uniform checking tolerance (overrides config and FRAMECAST_TOL)");
    app.add_option("--config", config, "JSON config file with \"tol\" and/or \"tolerances\"");

    cli::SpiralPointsOptions sp;
    auto* sp_cmd = app.add_subcommand("spiral-points", "Greedy arc-length points on the spiral");
    sp_cmd->add_option("--c", sp.c, "Spiral pitch")->capture_default_str();
    sp_cmd->add_option("--R", sp.R, "Signal ball radius")->capture_default_str();
    sp_cmd->add_option("--delta", sp.delta, "Arc-length half-gap")->capture_default_str();
    auto* count_opt = sp_cmd->add_option("--count", sp.count, "Number of points");
    sp_cmd->add_option("--stop-radius", sp.stop_radius, "March until |lambda| reaches this radius")
        ->excludes(count_opt);
    sp_cmd->add_option("--mode", sp.mode, "Arc length: paper or exact")->capture_default_str();
    sp_cmd->add_option("--grid-density", sp.grid_density, "Covering-radius probes per axis")->capture_default_str();
    sp_cmd->add_option("--out", sp.out, "Output JSON (stdout when omitted)");

    cli::ParsevalOptions pv;
    auto* pv_cmd = app.add_subcommand("parseval", "Convert a frame file to a Parseval frame");
    pv_cmd->add_option("--in", pv.in, "Input frame file")->required();
    pv_cmd->add_option("--out", pv.out, "Output frame file")->required();
    pv_cmd->add_option("--emit-transfer", pv.emit_transfer, "CSV of C with g = C f");
    pv_cmd->add_flag("--require-spanning", pv.require_spanning, "Fail unless the frame spans C^dim");
    pv_cmd->add_option("--report", pv.report, "Report JSON (stdout when omitted)");

    cli::ReconstructOptions rc;
    auto* rc_cmd = app.add_subcommand("reconstruct", "Parseval reconstruction of a signal on a grid");
    rc_cmd->add_option("--frame", rc.frame, "Frame file (default: the three-point spiral disk-grid frame)");
    rc_cmd->add_option("--signal", rc.signal, "fig1, fig2, zero or a signal JSON file")->capture_default_str();
    rc_cmd->add_option("--N", rc.n, "Grid size per axis for the builtin frame")->capture_default_str();
    rc_cmd->add_option("--stride", rc.stride, "Write every stride-th node")->capture_default_str();
    rc_cmd->add_option("--max-error", rc.max_error, "Relative L2 error tolerance")->capture_default_str();
    rc_cmd->add_option("--out", rc.out, "Output CSV (stdout when omitted)");
    rc_cmd->add_option("--report", rc.report, "Report JSON");

    cli::ErrorBoundOptions eb;
    auto* eb_cmd = app.add_subcommand("error-bound", "Truncation-error bound for Fourier-frame expansions");
    eb_cmd->add_option("--k", eb.k, "Smoothness order")->capture_default_str();
    eb_cmd->add_option("--deriv-l1", eb.deriv_l1, "L1 norm of the k-th derivative")->capture_default_str();
    eb_cmd->add_option("--A", eb.A, "Lower frame bound")->capture_default_str();
    eb_cmd->add_option("--R", eb.R, "Signal ball radius")->capture_default_str();
    eb_cmd->add_option("--N-tilde", eb.n_tilde, "Number of retained terms")->capture_default_str();
    eb_cmd->add_option("--lambda-scale", eb.lambda_scale, "c with |lambda_n| >= c n")->capture_default_str();
    eb_cmd->add_option("--formula", eb.formula, "thm32, eq35 or highdim")->capture_default_str();
    eb_cmd->add_option("--n-dim", eb.n_dim, "Dimension for highdim")->capture_default_str();
    eb_cmd->add_option("--lambda-norm", eb.lambda_norm, "|lambda| for highdim")->capture_default_str();
    eb_cmd->add_option("--out", eb.out, "Report JSON (stdout when omitted)");

    cli::CompareOptions cp;
    auto* cp_cmd = app.add_subcommand("compare", "Union of per-part Parseval frames against the full one");
    cp_cmd->add_option("--in", cp.in, "Input frame file")->required();
    cp_cmd->add_option("--partition", cp.partition, "0-based parts, e.g. \"0,1;2,3\"")->required();
    cp_cmd->add_option("--coincide-tol", cp.coincide_tol, "Coincidence tolerance")->capture_default_str();
    cp_cmd->add_option("--report", cp.report, "Report JSON (stdout when omitted)");

    cli::FrameBoundsOptions fb;
    auto* fb_cmd = app.add_subcommand("frame-bounds", "Optimal frame bounds of a frame file");
    fb_cmd->add_option("--in", fb.in, "Input frame file")->required();
    fb_cmd->add_flag("--span", fb.span, "Bounds on the span instead of C^dim");
    fb_cmd->add_option("--report", fb.report, "Report JSON (stdout when omitted)");

    cli::IntervalFrameOptions ifr;
    auto* if_cmd = app.add_subcommand("interval-frame", "Exponentials on [-h, h] as a frame file");
    if_cmd->add_option("--lambdas", ifr.lambdas, "Frequencies, e.g. \"10/3,17/4,26/5\"")->required();
    if_cmd->add_option("--halfwidth", ifr.halfwidth, "h")->capture_default_str();
    if_cmd->add_option("--sums", ifr.sums, "Extra vectors as index sums, e.g. \"0+1,0+2\"");
    if_cmd->add_option("--out", ifr.out, "Output frame file (stdout when omitted)");

    cli::GridFrameOptions gf;
    auto* gf_cmd = app.add_subcommand("grid-frame", "Exponentials sampled on a disk or square grid");
    gf_cmd->add_option("--points", gf.points, "spiral-points output file");
    gf_cmd->add_option("--lambdas", gf.lambdas, "Frequencies \"x,y;x,y\"");
    gf_cmd->add_option("--radius", gf.radius, "Grid radius (or square side)")->capture_default_str();
    gf_cmd->add_option("--N", gf.n, "Grid size per axis")->capture_default_str();
    gf_cmd->add_option("--layout", gf.layout, "polar or square")->capture_default_str();
    gf_cmd->add_flag("--weighted", gf.weighted, "Scale entries by sqrt(area element)");
    gf_cmd->add_option("--out", gf.out, "Output frame file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const framecast::Tolerances tol = framecast::io::load_tolerances(
            {.config_file = config ? std::optional<std::filesystem::path>(*config) : std::nullopt,
             .tol_flag = tol_flag,
             .env_tol = std::nullopt});
        if (sp_cmd->parsed()) return cli::run_spiral_points(sp, std::cout);
        if (pv_cmd->parsed()) return cli::run_parseval(pv, tol, std::cout);
        if (rc_cmd->parsed()) return cli::run_reconstruct(rc, tol, std::cout, std::cerr);
        if (eb_cmd->parsed()) return cli::run_error_bound(eb, std::cout);
        if (cp_cmd->parsed()) return cli::run_compare(cp, tol, std::cout);
        if (fb_cmd->parsed()) return cli::run_frame_bounds(fb, tol, std::cout);
        if (if_cmd->parsed()) return cli::run_interval_frame(ifr, std::cout);
        if (gf_cmd->parsed()) return cli::run_grid_frame(gf, std::cout);
    } catch (const framecast::FrameError& e) {
        std::cerr << "framecast: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return 2;
}
