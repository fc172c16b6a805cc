#pragma once

// Subcommand options and entry points of the framecast tool. Each run_*
// returns the process exit code; library failures propagate as FrameError
// and are mapped to exit codes in main.

#include <optional>
#include <ostream>
#include <string>

#include "framecast/tolerances.hpp"

namespace framecast::cli {

struct SpiralPointsOptions {
    double c = 1.0;
    double R = 0.25;
    double delta = 0.25;
    std::optional<std::size_t> count;
    std::optional<double> stop_radius;
    std::string mode = "paper";
    std::size_t grid_density = 200;
    std::string out;
};

struct ParsevalOptions {
    std::string in;
    std::string out;
    std::string emit_transfer;
    bool require_spanning = false;
    std::string report;
};

struct ReconstructOptions {
    std::string frame;
    std::string signal = "fig1";
    std::size_t n = 50;
    std::size_t stride = 1;
    double max_error = 1e-9;
    std::string out;
    std::string report;
};

struct ErrorBoundOptions {
    int k = 2;
    double deriv_l1 = 1.0;
    double A = 1.0;
    double R = 0.5;
    std::size_t n_tilde = 1;
    double lambda_scale = 1.0;
    std::string formula = "thm32";
    int n_dim = 1;
    double lambda_norm = 1.0;
    std::string out;
};

struct CompareOptions {
    std::string in;
    std::string partition;
    double coincide_tol = 1e-8;
    std::string report;
};

struct FrameBoundsOptions {
    std::string in;
    bool span = false;
    std::string report;
};

struct IntervalFrameOptions {
    std::string lambdas;
    double halfwidth = 0.5;
    std::string sums;
    std::string out;
};

struct GridFrameOptions {
    std::string points;
    std::string lambdas;
    double radius = 0.25;
    std::size_t n = 50;
    std::string layout = "polar";
    bool weighted = false;
    std::string out;
};

int run_spiral_points(const SpiralPointsOptions& o, std::ostream& out);
int run_parseval(const ParsevalOptions& o, const Tolerances& tol, std::ostream& out);
int run_reconstruct(const ReconstructOptions& o, const Tolerances& tol, std::ostream& out,
                    std::ostream& err);
int run_error_bound(const ErrorBoundOptions& o, std::ostream& out);
int run_compare(const CompareOptions& o, const Tolerances& tol, std::ostream& out);
int run_frame_bounds(const FrameBoundsOptions& o, const Tolerances& tol, std::ostream& out);
int run_interval_frame(const IntervalFrameOptions& o, std::ostream& out);
int run_grid_frame(const GridFrameOptions& o, std::ostream& out);

} // namespace framecast::cli
