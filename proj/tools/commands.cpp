#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "framecast/error.hpp"
#include "framecast/frame.hpp"
#include "framecast/io.hpp"
#include "framecast/linalg.hpp"
#include "framecast/recon.hpp"
#include "framecast/spiral.hpp"

namespace framecast::cli {

namespace {

using io::Json;

// Parseval output bounds are checked to ten times the frame tolerance
// (1e-9 at the default 1e-10).
constexpr double bound_tol_factor = 10.0;

[[noreturn]] void bad_flag(const std::string& what)
{
    throw FrameError(ErrorKind::InvalidArgument, what);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& text)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) bad_flag("\"" + text + "\" is not a number");
    return v;
}

// "2.5", "-1e-3" or a fraction such as "10/3".
double parse_number(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_double(text);
    const double den = parse_double(text.substr(slash + 1));
    if (den == 0.0) bad_flag("zero denominator in \"" + text + "\"");
    return parse_double(text.substr(0, slash)) / den;
}

std::size_t parse_index(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        bad_flag("\"" + text + "\" is not a 0-based index");
    }
    return std::stoul(text);
}

std::vector<double> parse_numbers(const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_number(item));
    if (out.empty()) bad_flag("empty number list");
    return out;
}

// "0,1;2,3" -> {{0, 1}, {2, 3}}
std::vector<std::vector<std::size_t>> parse_partition(const std::string& text)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto& part : split(text, ';')) {
        std::vector<std::size_t> indices;
        for (const auto& item : split(part, ',')) indices.push_back(parse_index(item));
        out.push_back(std::move(indices));
    }
    return out;
}

// "x,y;x,y"
std::vector<Point2> parse_points(const std::string& text)
{
    std::vector<Point2> out;
    for (const auto& item : split(text, ';')) {
        const auto xy = split(item, ',');
        if (xy.size() != 2) bad_flag("points are written x,y and separated by ';'");
        out.push_back({parse_number(xy[0]), parse_number(xy[1])});
    }
    return out;
}

void emit(const Json& doc, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        io::write_json(path, doc);
    }
}

Json tolerances_json(const Tolerances& tol)
{
    return Json{{"svd", tol.svd}, {"polar", tol.polar}, {"gs", tol.gs}, {"frame", tol.frame}, {"rank", tol.rank}};
}

void add_bound_checks(io::Report& report, const std::string& prefix, const FrameBounds& b, double tol)
{
    report.add_checked(prefix + "lower", b.lower, tol, std::abs(b.lower - 1.0) <= tol);
    report.add_checked(prefix + "upper", b.upper, tol, std::abs(b.upper - 1.0) <= tol);
}

bool all_checks_pass(const io::Report& report)
{
    for (const auto& [key, v] : report.outputs.items()) {
        if (v.is_object() && v.contains("pass") && v["pass"].is_boolean() && !v["pass"].get<bool>()) return false;
    }
    return true;
}

// Spiral points behind the builtin signals: c = 1, theta = 1/16, 1/8, 1/4.
SamplePointSet builtin_points()
{
    SamplePointSet s;
    for (double t : {1.0 / 16, 1.0 / 8, 1.0 / 4}) {
        s.points.push_back(spiral_point(1.0, t));
        s.thetas.push_back(t);
    }
    s.min_separation = min_pairwise_distance(s.points);
    return s;
}

Json grid_json(const DiskGrid& g)
{
    return Json{{"layout", g.layout == GridLayout::Polar ? "polar" : "square"},
                {"radius", g.radius},
                {"n", g.n},
                {"weighted", g.weighted}};
}

std::optional<DiskGrid> grid_from_metadata(const Json& meta)
{
    if (!meta.contains("grid") || !meta["grid"].is_object()) return std::nullopt;
    const Json& g = meta["grid"];
    try {
        const double radius = g.at("radius").get<double>();
        const auto n = g.at("n").get<std::size_t>();
        const bool weighted = g.value("weighted", false);
        return g.value("layout", std::string("polar")) == "square" ? make_square_grid(radius, n, weighted)
                                                                     : make_disk_grid(radius, n, weighted);
    } catch (const nlohmann::json::exception&) {
        throw FrameError(ErrorKind::ParseError, "metadata.grid must hold radius, n and layout");
    }
}

ComplexVector combination(const Frame& f, std::initializer_list<double> weights)
{
    if (f.size() < weights.size()) {
        bad_flag("builtin signal needs at least " + std::to_string(weights.size()) + " frame vectors");
    }
    ComplexVector out(f.dim());
    std::size_t i = 0;
    for (double w : weights) {
        for (std::size_t p = 0; p < f.dim(); ++p) out[p] += w * f[i][p];
        ++i;
    }
    return out;
}

std::string csv_number(double x)
{
    return Json(x).dump();
}

} // namespace

int run_spiral_points(const SpiralPointsOptions& o, std::ostream& out)
{
    const SpiralSpec spec{o.c, o.R, o.delta};
    require_admissible(spec);
    if (o.mode != "paper" && o.mode != "exact") bad_flag("--mode must be paper or exact");
    const auto mode = o.mode == "exact" ? ArcLengthMode::Exact : ArcLengthMode::Paper;
    if (!o.count && !o.stop_radius) bad_flag("give --count or --stop-radius");

    const SamplePointSet pts = select_spiral_points(spec, {o.count, o.stop_radius}, mode);
    const double max_gap = pts.gaps.empty() ? 0.0 : *std::max_element(pts.gaps.begin(), pts.gaps.end());
    CoveringOptions cov_options;
    cov_options.grid_density = o.grid_density;
    const CoveringReport cov = covering_radius(pts, spec.R, cov_options);

    Json doc;
    doc["spec"] = Json{{"c", spec.c}, {"R", spec.R}, {"delta", spec.delta}};
    doc["mode"] = o.mode;
    doc["sample_points"] = io::sample_points_to_json(pts);
    doc["gap_check"] = Json{{"max_gap", max_gap}, {"limit", 2 * spec.delta}, {"pass", max_gap < 2 * spec.delta}};
    doc["covering"] = Json{{"rho", cov.rho},
                           {"ball_R", cov.ball_R},
                           {"R_times_rho", cov.ball_R * cov.rho},
                           {"limit", 0.25},
                           {"beurling_ok", cov.beurling_ok},
                           {"probes", cov.probes},
                           {"grid_density", o.grid_density}};
    doc["tool_version"] = io::tool_version();
    emit(doc, o.out, out);
    return 0;
}

int run_parseval(const ParsevalOptions& o, const Tolerances& tol, std::ostream& out)
{
    const io::FrameFile in = io::read_frame_file(o.in);
    const ParsevalResult r = to_parseval(in.frame, {.require_spanning = o.require_spanning, .tol = tol});

    Json meta = in.metadata;
    meta["parseval_of"] = o.in;
    meta["span_dim"] = r.span_dim;
    io::write_frame_file(o.out, r.parseval, meta);
    if (!o.emit_transfer.empty()) io::write_matrix_csv(o.emit_transfer, r.transfer);

    io::Report report{"parseval"};
    report.inputs_echo = Json{{"in", o.in},
                              {"out", o.out},
                              {"emit_transfer", o.emit_transfer},
                              {"require_spanning", o.require_spanning},
                              {"tolerances", tolerances_json(tol)}};
    report.add("size", r.parseval.size());
    report.add("dim", r.parseval.dim());
    report.add("span_dim", r.span_dim);
    report.add("pivot_order", r.pivot_order);
    add_bound_checks(report, "bound_", span_frame_bounds(r.parseval, tol.rank), bound_tol_factor * tol.frame);
    const double defect = is_partial_isometry(r.w, tol.polar).coisometry_defect;
    report.add_checked("isometry_defect", defect, tol.polar, defect <= tol.polar);
    report.add_value("symmetric_distance", symmetric_distance(in.frame, r.parseval));
    emit(report.to_json(), o.report, out);
    return all_checks_pass(report) ? 0 : 3;
}

int run_reconstruct(const ReconstructOptions& o, const Tolerances& tol, std::ostream& out, std::ostream& err)
{
    if (o.stride == 0) bad_flag("--stride must be positive");
    Frame frame;
    std::optional<DiskGrid> grid;
    if (o.frame.empty()) {
        grid = make_disk_grid(0.25, o.n);
        frame = disk_grid_frame(builtin_points(), *grid);
    } else {
        const io::FrameFile ff = io::read_frame_file(o.frame);
        frame = ff.frame;
        grid = grid_from_metadata(ff.metadata);
        if (grid && grid->nodes.size() != frame.dim()) grid.reset();
    }

    ComplexVector signal;
    if (o.signal == "fig1") {
        signal = combination(frame, {1.0});
    } else if (o.signal == "fig2") {
        signal = combination(frame, {1.0, -2.0, 1.0});
    } else if (o.signal == "zero") {
        signal.assign(frame.dim(), 0.0);
    } else {
        signal = io::signal_from_json(io::read_json(o.signal));
    }
    if (signal.size() != frame.dim()) {
        throw FrameError(ErrorKind::DimensionMismatch, "signal has " + std::to_string(signal.size()) +
                                                           " samples, frame vectors have " +
                                                           std::to_string(frame.dim()));
    }

    const ParsevalResult r = to_parseval(frame, {.tol = tol});
    const ComplexVector rec = reconstruct_parseval(r.parseval, analysis_coefficients(r.parseval, signal));
    const double signal_norm = norm(signal);
    const double abs_err = distance(rec, signal);
    const double rel_err = signal_norm > 0.0 ? abs_err / signal_norm : abs_err;
    if (rel_err > o.max_error) {
        err << "warning: relative error " << rel_err << " exceeds " << o.max_error
            << "; the signal may not lie in the span of the frame\n";
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw FrameError(ErrorKind::IoError, "cannot open " + o.out + " for writing");
    }
    std::ostream& csv = o.out.empty() ? out : file;
    csv << "node_index,x,y,re_original,re_reconstructed,abs_error\n";
    for (std::size_t p = 0; p < signal.size(); p += o.stride) {
        csv << p << ',';
        if (grid) {
            csv << csv_number(grid->nodes[p][0]) << ',' << csv_number(grid->nodes[p][1]) << ',';
        } else {
            csv << ",,";
        }
        csv << csv_number(signal[p].real()) << ',' << csv_number(rec[p].real()) << ','
            << csv_number(std::abs(rec[p] - signal[p])) << '\n';
    }
    csv << "relative_l2_error,,,,," << csv_number(rel_err) << '\n';
    if (!csv) throw FrameError(ErrorKind::IoError, "write of the reconstruction CSV failed");

    if (!o.report.empty()) {
        io::Report report{"reconstruct"};
        report.inputs_echo = Json{{"frame", o.frame.empty() ? Json("builtin") : Json(o.frame)},
                                  {"signal", o.signal},
                                  {"N", o.n},
                                  {"stride", o.stride},
                                  {"tolerances", tolerances_json(tol)}};
        report.add("samples", signal.size());
        report.add("frame_size", frame.size());
        report.add_checked("relative_l2_error", rel_err, o.max_error, rel_err <= o.max_error);
        report.add_value("signal_l2_norm", signal_norm);
        io::write_json(o.report, report.to_json());
    }
    return 0;
}

int run_error_bound(const ErrorBoundOptions& o, std::ostream& out)
{
    ErrorBoundReport r;
    if (o.formula == "highdim") {
        r = highdim_report(o.n_dim, o.k, o.deriv_l1, o.lambda_norm);
    } else if (o.formula == "thm32" || o.formula == "eq35") {
        const TruncationBoundInput in{o.k, o.deriv_l1, o.A, o.R, o.n_tilde, o.lambda_scale};
        r = truncation_bound(in, o.formula == "eq35" ? BoundFormula::Eq35 : BoundFormula::Thm32);
    } else {
        bad_flag("--formula must be thm32, eq35 or highdim");
    }

    io::Report report{"error-bound"};
    report.inputs_echo = Json{{"k", o.k}, {"deriv_l1", o.deriv_l1}, {"formula", std::string(to_string(r.formula))}};
    if (r.formula == BoundFormula::HighDim) {
        report.inputs_echo["n_dim"] = o.n_dim;
        report.inputs_echo["lambda_norm"] = o.lambda_norm;
    } else {
        report.inputs_echo["A"] = o.A;
        report.inputs_echo["R"] = o.R;
        report.inputs_echo["N_tilde"] = o.n_tilde;
        report.inputs_echo["lambda_scale"] = o.lambda_scale;
    }
    report.add_value("bound", r.bound);
    emit(report.to_json(), o.out, out);
    if (!o.out.empty()) out << Json(r.bound).dump() << '\n';
    return 0;
}

int run_compare(const CompareOptions& o, const Tolerances& tol, std::ostream& out)
{
    const io::FrameFile in = io::read_frame_file(o.in);
    const SubframeUnion u = subframe_parseval_union(in.frame, parse_partition(o.partition), tol, o.coincide_tol);
    const ParsevalResult full = to_parseval(in.frame, {.tol = tol});
    const double bound_tol = bound_tol_factor * tol.frame;

    io::Report report{"compare"};
    report.inputs_echo = Json{{"in", o.in},
                              {"partition", o.partition},
                              {"coincide_tol", o.coincide_tol},
                              {"tolerances", tolerances_json(tol)}};
    report.add("coincides", u.coincides);
    report.add_checked("deviation", u.deviation, o.coincide_tol, u.coincides);
    add_bound_checks(report, "union_bound_", u.bounds, bound_tol);
    add_bound_checks(report, "union_block_bound_", u.block_bounds, bound_tol);
    add_bound_checks(report, "full_bound_", span_frame_bounds(full.parseval, tol.rank), bound_tol);
    emit(report.to_json(), o.report, out);
    return 0;
}

int run_frame_bounds(const FrameBoundsOptions& o, const Tolerances& tol, std::ostream& out)
{
    const io::FrameFile in = io::read_frame_file(o.in);
    const FrameBounds b = o.span ? span_frame_bounds(in.frame, tol.rank) : frame_bounds(in.frame, tol.rank);

    io::Report report{"frame-bounds"};
    report.inputs_echo = Json{{"in", o.in}, {"span", o.span}, {"rank_tol", tol.rank}};
    report.add_value("lower", b.lower);
    report.add_value("upper", b.upper);
    const double parseval_gap = std::max(std::abs(b.lower - 1.0), std::abs(b.upper - 1.0));
    report.add_checked("parseval_gap", parseval_gap, bound_tol_factor * tol.frame,
                       parseval_gap <= bound_tol_factor * tol.frame);
    emit(report.to_json(), o.report, out);
    return 0;
}

int run_interval_frame(const IntervalFrameOptions& o, std::ostream& out)
{
    const std::vector<double> lambdas = parse_numbers(o.lambdas);
    Frame f = interval_exponential_frame(lambdas, o.halfwidth).frame;
    if (!o.sums.empty()) {
        std::vector<ComplexVector> rows;
        for (std::size_t i = 0; i < f.size(); ++i) rows.emplace_back(f[i].begin(), f[i].end());
        for (const auto& term : split(o.sums, ',')) {
            ComplexVector v(f.dim());
            std::vector<double> label;
            for (const auto& idx : split(term, '+')) {
                const std::size_t i = parse_index(idx);
                if (i >= lambdas.size()) bad_flag("sum index " + idx + " is out of range");
                for (std::size_t p = 0; p < f.dim(); ++p) v[p] += f[i][p];
                label.push_back(lambdas[i]);
            }
            rows.push_back(std::move(v));
            f.labels.push_back(std::move(label));
        }
        f.vectors = ComplexMatrix::from_rows(rows);
    }
    const Json meta{{"interval", {{"halfwidth", o.halfwidth}, {"lambdas", lambdas}}}, {"sums", o.sums}};
    if (o.out.empty()) {
        out << io::frame_to_json(f, meta).dump(2) << '\n';
    } else {
        io::write_frame_file(o.out, f, meta);
    }
    return 0;
}

int run_grid_frame(const GridFrameOptions& o, std::ostream& out)
{
    if (o.points.empty() == o.lambdas.empty()) bad_flag("give exactly one of --points and --lambdas");
    if (o.layout != "polar" && o.layout != "square") bad_flag("--layout must be polar or square");
    SamplePointSet pts;
    if (!o.lambdas.empty()) {
        pts.points = parse_points(o.lambdas);
    } else {
        const Json doc = io::read_json(o.points);
        const Json& sp = doc.contains("sample_points") ? doc["sample_points"] : doc;
        try {
            if (sp.value("dim", 2) != 2) throw FrameError(ErrorKind::DimensionMismatch, "grid frames need 2-D points");
            for (const auto& p : sp.at("points")) pts.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        } catch (const nlohmann::json::exception&) {
            throw FrameError(ErrorKind::ParseError, o.points + ": expected points as [x, y] pairs");
        }
    }
    const DiskGrid grid = o.layout == "square" ? make_square_grid(o.radius, o.n, o.weighted)
                                               : make_disk_grid(o.radius, o.n, o.weighted);
    const Frame f = disk_grid_frame(pts, grid);
    const Json meta{{"grid", grid_json(grid)}};
    if (o.out.empty()) {
        out << io::frame_to_json(f, meta).dump(2) << '\n';
    } else {
        io::write_frame_file(o.out, f, meta);
    }
    return 0;
}

} // namespace framecast::cli
