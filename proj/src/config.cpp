#include "zsign/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "zsign/error.hpp"

namespace zsign {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, const std::string& context) {
    T value{};
    if constexpr (std::is_integral_v<T>) {
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw ConfigError(context + ": expected an integer, got '" + std::string(text) + "'");
    } else {
        // from_chars for double is unreliable across libstdc++ versions; strtod is fine here.
        const std::string s(text);
        char* end = nullptr;
        value = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value))
            throw ConfigError(context + ": expected a number, got '" + s + "'");
    }
    return value;
}

}  // namespace

void ScanConfig::validate() const {
    if (rs_correction_order < 1 || rs_correction_order > kMaxCorrectionOrder)
        throw UsageError("rs_correction_order must be in [1, 4], got " + std::to_string(rs_correction_order));
    if (!(em_switch_t > 0.0)) throw UsageError("em_switch_t must be > 0");
    if (!(bisection_tol > 0.0)) throw UsageError("bisection_tol must be > 0");
    if (!(samples_per_mean_gap >= 2.0)) throw UsageError("samples_per_mean_gap must be >= 2");
}

ScanConfig parse_config(std::string_view text, std::string_view source, ScanConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        const std::string context = where + ": key '" + key + "'";
        if (key == "rs_correction_order")
            base.rs_correction_order = parse_number<int>(value, context);
        else if (key == "em_switch_t")
            base.em_switch_t = parse_number<double>(value, context);
        else if (key == "bisection_tol")
            base.bisection_tol = parse_number<double>(value, context);
        else if (key == "samples_per_mean_gap")
            base.samples_per_mean_gap = parse_number<double>(value, context);
        else
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
    return base;
}

ScanConfig load_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& overrides) {
    ScanConfig cfg;
    if (file) {
        std::ifstream in(*file);
        if (!in) throw ConfigError("cannot open config file '" + file->string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        cfg = parse_config(buffer.str(), file->string(), cfg);
    }
    if (overrides.rs_correction_order) cfg.rs_correction_order = *overrides.rs_correction_order;
    if (overrides.em_switch_t) cfg.em_switch_t = *overrides.em_switch_t;
    if (overrides.bisection_tol) cfg.bisection_tol = *overrides.bisection_tol;
    if (overrides.samples_per_mean_gap) cfg.samples_per_mean_gap = *overrides.samples_per_mean_gap;
    cfg.validate();
    return cfg;
}

}  // namespace zsign
