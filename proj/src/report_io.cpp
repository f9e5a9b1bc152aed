#include "zsign/report_io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zsign {

namespace {

using nlohmann::ordered_json;

class Csv {
public:
    explicit Csv(std::initializer_list<std::string_view> header) { row(header); }

    void row(std::initializer_list<std::string_view> cells) {
        bool first = true;
        for (const std::string_view cell : cells) {
            if (!first) out_ << ',';
            out_ << cell;
            first = false;
        }
        out_ << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string num(double x) { return format_number(x); }
std::string num(long x) { return std::to_string(x); }
std::string flag(bool b) { return b ? "true" : "false"; }

// JSON has no NaN or infinity.
ordered_json jnum(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json cfg_object(const ScanConfig& cfg) {
    return {{"rs_correction_order", cfg.rs_correction_order},
            {"em_switch_t", cfg.em_switch_t},
            {"bisection_tol", cfg.bisection_tol},
            {"samples_per_mean_gap", cfg.samples_per_mean_gap}};
}

ordered_json quadrature_object(const std::string& quantity, const QuadratureResult& r) {
    return {{"quantity", quantity},
            {"T", r.T},
            {"theta", r.theta},
            {"X", r.X},
            {"value", r.value},
            {"value_over_T", r.value / r.T},
            {"error_estimate", r.error_estimate},
            {"nodes", r.nodes},
            {"converged", r.converged},
            {"within_hypothesis", r.within_hypothesis}};
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
    return std::string(buf, end);
}

std::string z_trace_csv(const std::vector<CriticalPoint>& points) {
    Csv csv{"t", "z", "phase"};
    for (const CriticalPoint& p : points) csv.row({num(p.t), num(p.z), num(p.phase)});
    return csv.str();
}

std::string zeros_csv(const std::vector<ZeroRecord>& zeros) {
    Csv csv{"gamma", "bracket_width", "derivative_sign"};
    for (const ZeroRecord& z : zeros)
        csv.row({num(z.gamma), num(z.bracket_width), std::string(1, to_char(z.derivative_sign))});
    return csv.str();
}

std::string gaps_csv(const GapStats& stats) {
    Csv csv{"bin_lo", "bin_hi", "count", "predicted", "pair_count", "pair_predicted"};
    for (std::size_t i = 0; i < stats.histogram.size(); ++i) {
        const double lo = stats.bin_width * static_cast<double>(i);
        csv.row({num(lo), num(lo + stats.bin_width), num(stats.histogram[i]), num(stats.predicted[i]),
                 num(stats.pair_histogram[i]), num(stats.pair_predicted[i])});
    }
    return csv.str();
}

std::string measure_csv(const std::vector<TableRow>& rows) {
    Csv csv{"T", "H", "mu_plus", "mu_minus", "ratio_plus", "zero_count", "audit_ok", "refinements", "status"};
    for (const TableRow& row : rows) {
        if (row.report) {
            const MeasureReport& r = *row.report;
            csv.row({num(r.T), num(r.H), num(r.mu_plus), num(r.mu_minus), num(r.ratio_plus), num(r.zero_count),
                     flag(r.audit_ok), num(static_cast<long>(r.grid_refinements)), row.status});
        } else {
            csv.row({num(row.T), num(row.H), "", "", "", "", "false", "", row.status});
        }
    }
    return csv.str();
}

std::string alpha_beta_csv(const CoeffTable& table) {
    Csv csv{"nu", "alpha", "beta"};
    for (std::size_t nu = 1; nu < table.beta.size(); ++nu)
        csv.row({std::to_string(nu), num(table.alpha[nu]), num(table.beta[nu])});
    return csv.str();
}

std::string b_csv(const CoeffTable& table) {
    Csv csv{"m", "b"};
    for (std::size_t m = 1; m < table.b.size(); ++m) csv.row({std::to_string(m), num(table.b[m])});
    return csv.str();
}

std::string paircorr_csv(const PairCorrResult& result) {
    Csv csv{"alpha", "f", "half_minus_f", "G_cumulative"};
    for (const PairCorrSample& s : result.f_samples) csv.row({num(s.alpha), num(s.f), num(s.half_minus_f), num(s.G)});
    return csv.str();
}

std::string bound_csv(const std::vector<BoundComparison>& rows) {
    Csv csv{"alpha", "bound", "n_plus", "n_minus"};
    for (const BoundComparison& r : rows) csv.row({num(r.alpha), num(r.bound), num(r.n_plus), num(r.n_minus)});
    return csv.str();
}

std::string means_csv(const std::vector<MeanRow>& rows) {
    Csv csv{"quantity", "T", "theta", "X", "value", "value_over_T", "error_estimate", "nodes", "converged",
            "within_hypothesis"};
    for (const MeanRow& row : rows) {
        const QuadratureResult& r = row.result;
        csv.row({row.quantity, num(r.T), num(r.theta), num(r.X), num(r.value), num(r.value / r.T),
                 num(r.error_estimate), num(r.nodes), flag(r.converged), flag(r.within_hypothesis)});
    }
    return csv.str();
}

std::string checks_csv(const std::vector<CheckRow>& rows) {
    Csv csv{"T",          "theta",          "X",          "positive_part", "half_sum",  "difference",
            "tolerance",  "sign_split_holds", "mu_plus", "fourth_moment", "cs_bound",  "cs_slack_factor",
            "cs_holds"};
    for (const CheckRow& row : rows) {
        const SignSplitReport& s = row.sign_split;
        const CauchySchwarzReport& c = row.cauchy_schwarz;
        csv.row({num(s.T), num(s.theta), num(s.X), num(s.positive_part.value), num(s.half_sum), num(s.difference),
                 num(s.tolerance), flag(s.holds), num(c.mu_plus), num(c.fourth_moment.value), num(c.bound),
                 num(c.slack_factor), flag(c.holds)});
    }
    return csv.str();
}

std::string measure_json(const std::vector<TableRow>& rows, const ScanConfig& cfg) {
    ordered_json list = ordered_json::array();
    for (const TableRow& row : rows) {
        ordered_json j{{"T", row.T}, {"H", row.H}};
        if (row.report) {
            const MeasureReport& r = *row.report;
            j["mu_plus"] = r.mu_plus;
            j["mu_minus"] = r.mu_minus;
            j["ratio_plus"] = r.ratio_plus;
            j["zero_count"] = r.zero_count;
            j["audit_ok"] = r.audit_ok;
            j["refinements"] = r.grid_refinements;
        } else {
            j["audit_ok"] = false;
        }
        j["status"] = row.status;
        j["runtime_seconds"] = row.seconds;
        list.push_back(std::move(j));
    }
    return ordered_json{{"rows", list}, {"cfg", cfg_object(cfg)}}.dump(2) + "\n";
}

std::string paircorr_json(const PairCorrResult& result) {
    const ordered_json j{{"A_star", result.A_star},
                         {"G_star", result.G_star},
                         {"tol", result.quadrature_tol},
                         {"samples", result.f_samples.size()}};
    return j.dump(2) + "\n";
}

std::string means_json(const std::vector<MeanRow>& means, const std::vector<CheckRow>& checks,
                       const ScanConfig& cfg) {
    ordered_json m = ordered_json::array();
    for (const MeanRow& row : means) m.push_back(quadrature_object(row.quantity, row.result));
    ordered_json c = ordered_json::array();
    for (const CheckRow& row : checks) {
        const SignSplitReport& s = row.sign_split;
        const CauchySchwarzReport& cs = row.cauchy_schwarz;
        c.push_back({{"T", s.T},
                     {"theta", s.theta},
                     {"X", s.X},
                     {"positive_part", s.positive_part.value},
                     {"half_sum", s.half_sum},
                     {"difference", s.difference},
                     {"tolerance", s.tolerance},
                     {"sign_split_holds", s.holds},
                     {"mu_plus", cs.mu_plus},
                     {"fourth_moment", cs.fourth_moment.value},
                     {"cs_bound", cs.bound},
                     {"cs_slack_factor", jnum(cs.slack_factor)},
                     {"cs_holds", cs.holds}});
    }
    return ordered_json{{"means", m}, {"checks", c}, {"cfg", cfg_object(cfg)}}.dump(2) + "\n";
}

std::string config_json(const ScanConfig& cfg) { return cfg_object(cfg).dump(); }

std::string manifest_line(const RunManifest& manifest) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : manifest.parameters) params[key] = value;
    const ordered_json j{{"command", manifest.command},   {"parameters", params},
                         {"cfg", cfg_object(manifest.cfg)}, {"outputs", manifest.outputs},
                         {"started", manifest.started},   {"finished", manifest.finished},
                         {"version", manifest.version}};
    return j.dump();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

OutputDirectory::OutputDirectory(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
    std::ifstream in(root_ / "manifest.jsonl");
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++run_;
}

std::filesystem::path OutputDirectory::file_for(std::string_view command, std::string_view suffix) const {
    char run[16];
    std::snprintf(run, sizeof run, "%04ld", run_);
    return root_ / (std::string(command) + "-" + run + std::string(suffix));
}

std::filesystem::path OutputDirectory::write(std::string_view command, std::string_view suffix,
                                             std::string_view content) const {
    const std::filesystem::path path = file_for(command, suffix);
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return path;
}

void OutputDirectory::append_manifest(const RunManifest& manifest) const {
    std::ofstream out(root_ / "manifest.jsonl", std::ios::app);
    out << manifest_line(manifest) << '\n';
    if (!out) throw std::runtime_error("cannot append to " + (root_ / "manifest.jsonl").string());
}

}  // namespace zsign
