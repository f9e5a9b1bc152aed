#include "zsign/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#include "zsign/config.hpp"
#include "zsign/error.hpp"
#include "zsign/report_io.hpp"

namespace zsign {

namespace {

const std::vector<double> kTable1Heights = {100, 200, 500, 1000, 5000, 10000};
const std::vector<double> kTable2Heights = {100, 200, 500, 1000, 5000, 10000, 1e5, 1e6, 1e7, 1e8};

struct CommonOptions {
    std::optional<std::string> config_file;
    ConfigOverrides overrides;
    std::optional<std::string> out_dir;
};

/// What a subcommand needs once flags are parsed.
struct Context {
    ScanConfig cfg;
    OutputDirectory dir;
    RunManifest manifest;
    std::ostream& out;

    void emit(std::string_view suffix, std::string_view content) {
        const auto path = dir.write(manifest.command, suffix, content);
        manifest.outputs.push_back(path.filename().string());
        out << "wrote " << path.string() << '\n';
    }
};

using Action = std::function<int(Context&)>;

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--config", common.config_file, "Config file of 'key = value' lines")->check(CLI::ExistingFile);
    sub->add_option("--rs-order", common.overrides.rs_correction_order, "Riemann-Siegel correction order (1-4)");
    sub->add_option("--em-switch", common.overrides.em_switch_t, "Height below which Euler-Maclaurin is used");
    sub->add_option("--bisection-tol", common.overrides.bisection_tol, "Zero bracket width");
    sub->add_option("--samples-per-gap", common.overrides.samples_per_mean_gap, "Scan samples per mean zero gap");
    sub->add_option("--out", common.out_dir, std::string("Output directory (default $") + kOutDirEnv + " or .)");
}

std::filesystem::path output_root(const CommonOptions& common) {
    if (common.out_dir) return *common.out_dir;
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
    return ".";
}

std::vector<std::pair<std::string, std::string>> recorded_parameters(const CLI::App* sub) {
    std::vector<std::pair<std::string, std::string>> params;
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        std::string joined;
        for (const std::string& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
        params.emplace_back(opt->get_name(), joined);
    }
    return params;
}

int status_exit(const std::vector<TableRow>& rows) {
    for (const TableRow& r : rows)
        if (r.status != "ok") return kExitDomain;
    return kExitOk;
}

void print_rows(std::ostream& out, const std::vector<TableRow>& rows) {
    for (const TableRow& r : rows) {
        out << "T=" << format_number(r.T) << " H=" << format_number(r.H);
        if (r.report) out << " ratio_plus=" << format_number(r.report->ratio_plus) << " zeros=" << r.report->zero_count;
        out << " status=" << r.status << '\n';
    }
}

const CLI::Validator kPositive(
    [](std::string& value) -> std::string {
        double x = 0.0;
        if (!CLI::detail::lexical_cast(value, x) || !(x > 0.0) || !std::isfinite(x))
            return "must be a positive number, got " + value;
        return {};
    },
    "POSITIVE");

/// Storage for every subcommand's flags; only the chosen subcommand's fields are read.
struct Flags {
    std::vector<double> ts;
    double from = 0.0;
    double to = 0.0;
    long points = 0;

    double t0 = 0.0;
    double t1 = 0.0;
    int bins = 30;
    double gap_max = 3.0;

    double T = 0.0;
    double H = 100.0;
    std::vector<double> heights;
    std::vector<double> fixed_heights;

    std::optional<double> X;
    std::optional<double> moll_T;
    std::optional<double> moll_theta;
    bool with_b = false;

    std::vector<double> mean_heights{1000, 10000};
    std::vector<double> thetas{0.05, 0.2};

    double tol = 1e-10;
    std::optional<double> zeros_T;
    std::vector<double> alphas{0.1, 0.25, 0.5, 0.75, 0.952};
};

// Just above 2 pi e, where the asymptotic zero count turns positive.
constexpr double kMinCurveHeight = 17.08;

int z_eval_command(const Flags& f, Context& ctx) {
    std::vector<double> grid = f.ts;
    if (f.points > 0) {
        if (!(f.to > f.from)) throw UsageError("--to: must exceed --from");
        for (long i = 0; i < f.points; ++i)
            grid.push_back(f.from + (f.to - f.from) * static_cast<double>(i) / static_cast<double>(f.points - 1));
    }
    if (grid.empty()) throw UsageError("--t: give ordinates or --from/--to/--points");
    std::vector<CriticalPoint> pts;
    for (const double t : grid) pts.push_back(critical_point(t, ctx.cfg));
    const std::string csv = z_trace_csv(pts);
    ctx.emit(".csv", csv);
    if (pts.size() <= 50) ctx.out << csv;
    return kExitOk;
}

int zeros_command(const Flags& f, Context& ctx) {
    if (!(f.t1 > f.t0)) throw UsageError("--t1: must exceed --t0");
    const ScanResult scan = scan_zeros(f.t0, f.t1, ctx.cfg);
    const std::vector<ZeroRecord> zeros = classify(scan.zeros, ctx.cfg);
    ctx.emit(".csv", zeros_csv(zeros));
    if (zeros.size() >= 2) ctx.emit("-gaps.csv", gaps_csv(gap_stats(zeros, f.bins, f.gap_max)));
    ctx.out << zeros.size() << " zeros on (" << format_number(f.t0) << ", " << format_number(f.t1)
            << "], audit window (" << format_number(scan.window_lo) << ", " << format_number(scan.window_hi)
            << "] expected " << scan.window_expected << " found " << scan.window_found << ", refinements "
            << scan.refinements << '\n';
    return kExitOk;
}

int table_command(Context& ctx, const std::vector<TableRow>& rows) {
    ctx.emit(".csv", measure_csv(rows));
    ctx.emit(".json", measure_json(rows, ctx.cfg));
    print_rows(ctx.out, rows);
    return status_exit(rows);
}

int mollifier_command(const Flags& f, Context& ctx) {
    if (!f.X && !f.moll_T) throw UsageError("--X: give --X or --T with --theta");
    const double X = f.X ? *f.X : std::pow(*f.moll_T, *f.moll_theta);
    if (X > 1e7) throw UsageError("--X: mollifier length at most 1e7");
    if (f.with_b && X > 1e4) throw UsageError("--with-b: needs X <= 1e4");
    const CoeffTable table = f.X ? make_coeff_table(X, f.with_b) : make_coeff_table_for(*f.moll_T, *f.moll_theta, f.with_b);
    ctx.emit(".csv", alpha_beta_csv(table));
    if (f.with_b) ctx.emit("-b.csv", b_csv(table));
    ctx.out << "X=" << format_number(table.X) << " terms=" << table.length()
            << " sum|beta|/sqrt(nu)=" << format_number(eval_B_bound(table)) << '\n';
    return kExitOk;
}

int means_command(const Flags& f, Context& ctx) {
    std::vector<MeanRow> means;
    std::vector<CheckRow> checks;
    for (const double T : f.mean_heights)
        for (const double theta : f.thetas) {
            CheckRow row{sign_split_check(T, theta, ctx.cfg), cauchy_schwarz_check(T, theta, ctx.cfg)};
            means.push_back({"Z_B2", row.sign_split.signed_mean});
            means.push_back({"absZ_B2", row.sign_split.absolute_mean});
            means.push_back({"Z2_B4", row.cauchy_schwarz.fourth_moment});
            means.push_back({"positive_Z_B2", row.sign_split.positive_part});
            ctx.out << "T=" << format_number(T) << " theta=" << format_number(theta)
                    << " Z_B2/T=" << format_number(row.sign_split.signed_mean.value / T)
                    << " absZ_B2/T=" << format_number(row.sign_split.absolute_mean.value / T)
                    << " Z2_B4/T=" << format_number(row.cauchy_schwarz.fourth_moment.value / T)
                    << " sign_split=" << (row.sign_split.holds ? "ok" : "FAILED")
                    << " cauchy_schwarz=" << (row.cauchy_schwarz.holds ? "ok" : "FAILED") << '\n';
            checks.push_back(std::move(row));
        }
    ctx.emit(".csv", means_csv(means));
    ctx.emit("-checks.csv", checks_csv(checks));
    ctx.emit(".json", means_json(means, checks, ctx.cfg));
    return kExitOk;
}

int paircorr_command(const Flags& f, Context& ctx) {
    const PairCorrResult result = maximize(f.tol);
    ctx.emit(".csv", paircorr_csv(result));
    ctx.emit(".json", paircorr_json(result));
    ctx.out << "A_star=" << format_number(result.A_star) << " G_star=" << format_number(result.G_star) << '\n';
    if (f.zeros_T) {
        const double T = *f.zeros_T;
        const std::vector<ZeroRecord> zeros = classify(find_zeros(0.0, T, ctx.cfg), ctx.cfg);
        std::vector<BoundComparison> rows;
        for (const BoundPoint& p : lower_bound_curve(f.alphas, T)) {
            const auto [plus, minus] = n_pm_alpha(zeros, T, p.alpha);
            rows.push_back({p.alpha, p.bound, plus, minus});
        }
        ctx.emit("-bound.csv", bound_csv(rows));
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sign statistics of Hardy's Z-function", "zsign"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonOptions common;
    Flags f;
    Action action;

    {
        auto* sub = app.add_subcommand("z-eval", "Evaluate Z(t) at given points or on a grid");
        add_common(sub, common);
        sub->add_option("--t", f.ts, "Comma-separated ordinates")->delimiter(',');
        sub->add_option("--from", f.from, "Grid start");
        sub->add_option("--to", f.to, "Grid end");
        sub->add_option("--points", f.points, "Grid size")->check(CLI::Range(2L, 10000000L));
        sub->callback([&] { action = [&](Context& ctx) { return z_eval_command(f, ctx); }; });
    }
    {
        auto* sub = app.add_subcommand("zeros", "Locate and classify the zeros of Z on (t0, t1]");
        add_common(sub, common);
        sub->add_option("--t0", f.t0, "Lower end (exclusive)")->check(CLI::NonNegativeNumber);
        sub->add_option("--t1", f.t1, "Upper end")->required()->check(kPositive);
        sub->add_option("--bins", f.bins, "Gap histogram bins")->check(CLI::Range(1, 10000));
        sub->add_option("--gap-max", f.gap_max, "Upper edge of the gap histogram")->check(kPositive);
        sub->callback([&] { action = [&](Context& ctx) { return zeros_command(f, ctx); }; });
    }
    {
        auto* sub = app.add_subcommand("measure", "Measure of {T < t <= T+H : Z(t) > 0}");
        add_common(sub, common);
        sub->add_option("--T", f.T, "Start of the interval")->required()->check(kPositive);
        sub->add_option("--H", f.H, "Length of the interval")->required()->check(kPositive);
        sub->callback([&] {
            action = [&](Context& ctx) { return table_command(ctx, table_fixed(std::vector{f.T}, f.H, ctx.cfg)); };
        });
    }
    {
        auto* sub = app.add_subcommand("table1", "ratio_plus on dyadic intervals (T, 2T]");
        add_common(sub, common);
        f.heights = kTable1Heights;
        sub->add_option("--T", f.heights, "Comma-separated heights")->delimiter(',')->check(kPositive);
        sub->callback([&] { action = [&](Context& ctx) { return table_command(ctx, table_dyadic(f.heights, ctx.cfg)); }; });
    }
    {
        auto* sub = app.add_subcommand("table2", "ratio_plus on (T, T+H]");
        add_common(sub, common);
        f.fixed_heights = kTable2Heights;
        sub->add_option("--T", f.fixed_heights, "Comma-separated heights")->delimiter(',')->check(kPositive);
        sub->add_option("--H", f.H, "Interval length")->check(kPositive);
        sub->callback([&] {
            action = [&](Context& ctx) { return table_command(ctx, table_fixed(f.fixed_heights, f.H, ctx.cfg)); };
        });
    }
    {
        auto* sub = app.add_subcommand("mollifier", "Dump the mollifier coefficients");
        add_common(sub, common);
        auto* x_opt = sub->add_option("--X", f.X, "Mollifier length")->check(kPositive);
        auto* t_opt = sub->add_option("--T", f.moll_T, "Height, with --theta")->check(kPositive);
        auto* th_opt = sub->add_option("--theta", f.moll_theta, "Exponent, X = T^theta")->check(kPositive);
        t_opt->needs(th_opt)->excludes(x_opt);
        th_opt->needs(t_opt);
        sub->add_flag("--with-b", f.with_b, "Also write b(m), m <= X^2");
        sub->callback([&] { action = [&](Context& ctx) { return mollifier_command(f, ctx); }; });
    }
    {
        auto* sub = app.add_subcommand("means", "Mollified mean values and the sign-split checks");
        add_common(sub, common);
        sub->add_option("--T", f.mean_heights, "Comma-separated heights (>= 100)")
            ->delimiter(',')
            ->check(CLI::Range(100.0, 1e7));
        sub->add_option("--theta", f.thetas, "Comma-separated exponents")->delimiter(',')->check(kPositive);
        sub->callback([&] { action = [&](Context& ctx) { return means_command(f, ctx); }; });
    }
    {
        auto* sub = app.add_subcommand("paircorr", "Pair-correlation constant and lower-bound curve");
        add_common(sub, common);
        sub->add_option("--tol", f.tol, "Quadrature tolerance")->check(CLI::Range(1e-14, 1e-2));
        sub->add_option("--zeros-T", f.zeros_T, "Compare N_+/N_- on (0, T] with the lower-bound curve")
            ->check(CLI::Range(kMinCurveHeight, 1e6));
        sub->add_option("--alpha", f.alphas, "Comma-separated alpha grid")
            ->delimiter(',')
            ->check(CLI::NonNegativeNumber);
        sub->callback([&] { action = [&](Context& ctx) { return paircorr_command(f, ctx); }; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    try {
        const std::optional<std::filesystem::path> file =
            common.config_file ? std::optional<std::filesystem::path>(*common.config_file) : std::nullopt;
        Context ctx{load_config(file, common.overrides), OutputDirectory(output_root(common)), {}, out};
        ctx.manifest.command = sub->get_name();
        ctx.manifest.parameters = recorded_parameters(sub);
        ctx.manifest.cfg = ctx.cfg;
        ctx.manifest.started = utc_timestamp();
        int code = kExitOk;
        try {
            code = action(ctx);
        } catch (...) {
            ctx.manifest.finished = utc_timestamp();
            if (!ctx.manifest.outputs.empty()) ctx.dir.append_manifest(ctx.manifest);
            throw;
        }
        ctx.manifest.finished = utc_timestamp();
        ctx.dir.append_manifest(ctx.manifest);
        return code;
    } catch (const AuditFailure& e) {
        err << "error: " << e.what() << " (suspect interval " << format_number(e.suspect_lo()) << ", "
            << format_number(e.suspect_hi()) << ")\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace zsign
