#include "zsign/sign_measure.hpp"

#include <chrono>
#include <stdexcept>

#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/summation.hpp"

namespace zsign {
namespace {

TableRow run_row(double T, double H, const ScanConfig& cfg) {
    TableRow row;
    row.T = T;
    row.H = H;
    const auto start = std::chrono::steady_clock::now();
    try {
        row.report = measure_signs(T, H, cfg);
    } catch (const AuditFailure& e) {
        row.status = std::string("audit-failure: ") + e.what();
    } catch (const PrecisionExhausted& e) {
        row.status = std::string("precision-exhausted: ") + e.what();
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

MeasureReport measure_from_zeros(double T, double H, const std::vector<ZeroRecord>& zeros, const ScanConfig& cfg,
                                 SignAnchor anchor) {
    // Segment boundaries T = b_0 < gamma_1 < ... < gamma_k < b_{k+1} = T + H.
    std::vector<double> edges;
    edges.reserve(zeros.size() + 2);
    edges.push_back(T);
    for (const ZeroRecord& z : zeros) edges.push_back(z.gamma);
    edges.push_back(T + H);
    const std::size_t segments = edges.size() - 1;

    const std::size_t ref = anchor == SignAnchor::first_segment ? 0 : segments - 1;
    const double ref_sign = z_eval(0.5 * (edges[ref] + edges[ref + 1]), cfg) > 0 ? 1.0 : -1.0;

    CompensatedSum plus;
    for (std::size_t s = 0; s < segments; ++s) {
        const bool flipped = ((s > ref ? s - ref : ref - s) % 2) == 1;
        const double sign = flipped ? -ref_sign : ref_sign;
        if (sign > 0) plus.add(edges[s + 1] - edges[s]);
    }

    MeasureReport r;
    r.T = T;
    r.H = H;
    r.mu_plus = plus.value();
    r.mu_minus = H - r.mu_plus;
    r.ratio_plus = 2.0 * r.mu_plus / H;
    r.zero_count = static_cast<long>(zeros.size());
    return r;
}

MeasureReport measure_signs(double T, double H, const ScanConfig& cfg) {
    if (!(T > 0.0) || !(H > 0.0)) throw std::invalid_argument("measure_signs: requires T > 0 and H > 0");
    const ScanResult scan = scan_zeros(T, T + H, cfg);
    MeasureReport r = measure_from_zeros(T, H, scan.zeros, cfg);
    r.audit_ok = true;  // scan_zeros throws otherwise
    r.grid_refinements = scan.refinements;
    return r;
}

std::vector<TableRow> table_dyadic(std::span<const double> T_list, const ScanConfig& cfg) {
    std::vector<TableRow> rows;
    for (const double T : T_list) rows.push_back(run_row(T, T, cfg));
    return rows;
}

std::vector<TableRow> table_fixed(std::span<const double> T_list, double H, const ScanConfig& cfg) {
    std::vector<TableRow> rows;
    for (const double T : T_list) rows.push_back(run_row(T, H, cfg));
    return rows;
}

}  // namespace zsign
