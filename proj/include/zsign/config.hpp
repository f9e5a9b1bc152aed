#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "zsign/scan_config.hpp"

namespace zsign {

/// Values given on the command line; unset fields fall through to the file, then defaults.
struct ConfigOverrides {
    std::optional<int> rs_correction_order;
    std::optional<double> em_switch_t;
    std::optional<double> bisection_tol;
    std::optional<double> samples_per_mean_gap;
};

/// Parses "key = value" lines ('#' starts a comment) on top of `base`.
/// Keys are the ScanConfig field names; anything else is a ConfigError
/// carrying "<source>:<line>" and the key.
ScanConfig parse_config(std::string_view text, std::string_view source, ScanConfig base = {});

/// Precedence: overrides > file > defaults. The result is validated.
ScanConfig load_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& overrides);

}  // namespace zsign
