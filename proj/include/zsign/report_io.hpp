#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsign/hardy_z.hpp"
#include "zsign/mollified_means.hpp"
#include "zsign/mollifier.hpp"
#include "zsign/pair_correlation.hpp"
#include "zsign/scan_config.hpp"
#include "zsign/sign_measure.hpp"
#include "zsign/zero_scan.hpp"

namespace zsign {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Fixed CSV number format: 12 significant digits, shortest of %e / %f.
std::string format_number(double x);

std::string z_trace_csv(const std::vector<CriticalPoint>& points);
std::string zeros_csv(const std::vector<ZeroRecord>& zeros);
std::string gaps_csv(const GapStats& stats);
std::string measure_csv(const std::vector<TableRow>& rows);
std::string alpha_beta_csv(const CoeffTable& table);
std::string b_csv(const CoeffTable& table);
std::string paircorr_csv(const PairCorrResult& result);

/// One row of the pair-count comparison against the lower-bound curve.
struct BoundComparison {
    double alpha = 0.0;
    double bound = 0.0;
    long n_plus = 0;
    long n_minus = 0;
};
std::string bound_csv(const std::vector<BoundComparison>& rows);

struct MeanRow {
    std::string quantity;
    QuadratureResult result;
};
std::string means_csv(const std::vector<MeanRow>& rows);

struct CheckRow {
    SignSplitReport sign_split;
    CauchySchwarzReport cauchy_schwarz;
};
std::string checks_csv(const std::vector<CheckRow>& rows);

std::string measure_json(const std::vector<TableRow>& rows, const ScanConfig& cfg);
std::string paircorr_json(const PairCorrResult& result);
std::string means_json(const std::vector<MeanRow>& means, const std::vector<CheckRow>& checks,
                       const ScanConfig& cfg);
std::string config_json(const ScanConfig& cfg);

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    ScanConfig cfg;
    std::vector<std::string> outputs;
    std::string started;
    std::string finished;
    std::string version{kToolVersion};
};
/// The manifest as one line of JSON, without the trailing newline.
std::string manifest_line(const RunManifest& manifest);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// An output directory holding data files and an append-only manifest.jsonl.
/// Files are named <command>-<run>.<ext>, run = 1 + the number of manifest lines,
/// so no data file is ever shared between two manifests.
class OutputDirectory {
public:
    explicit OutputDirectory(std::filesystem::path root);

    const std::filesystem::path& root() const noexcept { return root_; }
    long run_number() const noexcept { return run_; }
    std::filesystem::path file_for(std::string_view command, std::string_view suffix) const;
    /// Writes content to file_for(command, suffix) and returns the path.
    std::filesystem::path write(std::string_view command, std::string_view suffix, std::string_view content) const;
    void append_manifest(const RunManifest& manifest) const;

private:
    std::filesystem::path root_;
    long run_ = 1;
};

}  // namespace zsign
