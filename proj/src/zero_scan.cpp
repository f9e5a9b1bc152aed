#include "zsign/zero_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/pair_correlation.hpp"
#include "zsign/theta.hpp"

namespace zsign {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRefinements = 4;
// theta(g_0) = 0; below g_0 there are no Gram points with j >= 0 and no zeros below 14.13.
constexpr double kFirstGramPoint = 17.845599540410860817;
constexpr double kLowAnchor = 10.0;

int sign_of(double z) { return (z > 0) - (z < 0); }

double mean_gap(double t) {
    return 2.0 * kPi / std::max(std::log(t / (2.0 * kPi)), 1.0);
}

struct Anchor {
    double t;
    long count;  // N(t) at this anchor
    double z;
};

bool is_good_gram(long j, double z) { return (j % 2 == 0) ? z > 0 : z < 0; }

long gram_index_below(double t) {
    return static_cast<long>(std::floor((theta_dw(t) / dw::kPi).value()));
}

std::string interval_text(double lo, double hi) {
    return "(" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// Bisects a sign change of Z on [lo, hi] down to tol or to adjacent doubles.
ZeroRecord bisect(double lo, double hi, int sign_lo, const ScanConfig& cfg) {
    while (hi - lo > cfg.bisection_tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double z = z_eval(mid, cfg);
        if (z == 0.0) {
            lo = hi = mid;
            break;
        }
        if (sign_of(z) == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    ZeroRecord rec;
    rec.gamma = lo + 0.5 * (hi - lo);
    rec.bracket_width = hi - lo;
    return rec;
}

// Samples (lo, hi] at the given density and returns the bracketed zeros plus the
// number of sign changes seen.
std::vector<ZeroRecord> scan_block(const Anchor& lo, const Anchor& hi, double density,
                                   const ScanConfig& cfg) {
    const double len = hi.t - lo.t;
    const double mid = 0.5 * (lo.t + hi.t);
    const auto n = static_cast<long>(std::max(2.0, std::ceil(len * density / mean_gap(mid))));
    const double h = len / static_cast<double>(n);

    std::vector<ZeroRecord> found;
    double prev_t = lo.t;
    int prev_sign = sign_of(lo.z);
    bool pending_exact = false;
    for (long k = 1; k <= n; ++k) {
        const double t = (k == n) ? hi.t : lo.t + h * static_cast<double>(k);
        const double z = (k == n) ? hi.z : z_eval(t, cfg);
        const int s = sign_of(z);
        if (s == 0) {
            ZeroRecord rec;
            rec.gamma = t;
            found.push_back(rec);
            pending_exact = true;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign && !pending_exact) found.push_back(bisect(prev_t, t, prev_sign, cfg));
        pending_exact = false;
        prev_sign = s;
        prev_t = t;
    }
    return found;
}

}  // namespace

char to_char(DerivativeSign s) noexcept {
    switch (s) {
        case DerivativeSign::plus: return '+';
        case DerivativeSign::minus: return '-';
        default: return '?';
    }
}

double smooth_zero_count(double t) { return theta(t) / kPi + 1.0; }

double asymptotic_zero_count(double T) {
    const double x = T / (2.0 * kPi);
    return x * std::log(x);
}

long zero_count_estimate(double t, const ScanConfig& cfg) {
    if (t <= 0.0) return 0;
    const DoubleWord x = theta_dw(t) / dw::kPi + DoubleWord(1.0);
    const long parity = z_eval(t, cfg) < 0 ? 0 : 1;
    const double half = dw::round((x - DoubleWord(static_cast<double>(parity))) * 0.5);
    return 2 * static_cast<long>(half) + parity;
}

long count_audit(double t0, double t1, const ScanConfig& cfg) {
    if (!(t1 > t0)) return 0;
    return zero_count_estimate(t1, cfg) - zero_count_estimate(t0, cfg);
}

double gram_point(long j) {
    if (j < 0) throw std::invalid_argument("gram_point: index must be >= 0");
    const double target = static_cast<double>(j) * kPi;
    // theta ~ (t/2)(log(t/2pi) - 1) - pi/8: fixed-point start, then Newton in double-word.
    double t = 20.0;
    for (int i = 0; i < 60; ++i) {
        const double next =
            std::max(2.0 * (target + kPi / 8.0) / (std::log(t / (2.0 * kPi)) - 1.0), kFirstGramPoint);
        if (std::fabs(next - t) < 1e-3 * t) {
            t = next;
            break;
        }
        t = next;
    }
    for (int i = 0; i < 50; ++i) {
        const double residual = (theta_dw(t) - dw::kPi * static_cast<double>(j)).value();
        const double step = residual / theta_derivative(t);
        t -= step;
        if (std::fabs(step) <= 4e-16 * t) break;
    }
    return t;
}

ScanResult scan_zeros(double t0, double t1, const ScanConfig& cfg) {
    if (!(t0 >= 0.0) || !(t1 > t0)) throw std::invalid_argument("scan_zeros: requires 0 <= t0 < t1");
    cfg.validate();

    // Anchors: good Gram points (where N(g_j) = j + 1) bracketing (t0, t1], and every
    // good Gram point in between as an audit block boundary.
    std::vector<Anchor> anchors;
    long j = 0;
    if (t0 < kFirstGramPoint) {
        // Z has no zeros below kLowAnchor.
        anchors.push_back({kLowAnchor, 0, z_eval(kLowAnchor, cfg)});
        j = 0;
    } else {
        j = gram_index_below(t0);
        for (;; --j) {
            const double g = gram_point(j);
            if (g > t0) continue;
            const double z = z_eval(g, cfg);
            if (is_good_gram(j, z)) {
                anchors.push_back({g, j + 1, z});
                break;
            }
            if (j == 0) {
                anchors.push_back({kLowAnchor, 0, z_eval(kLowAnchor, cfg)});
                break;
            }
        }
        j = anchors.back().count;  // next index after the anchor
    }
    for (;; ++j) {
        const double g = gram_point(j);
        if (g <= anchors.back().t) continue;
        const double z = z_eval(g, cfg);
        if (!is_good_gram(j, z)) continue;
        anchors.push_back({g, j + 1, z});
        if (g >= t1) break;
    }

    ScanResult result;
    result.window_lo = anchors.front().t;
    result.window_hi = anchors.back().t;
    result.window_expected = anchors.back().count - anchors.front().count;
    std::vector<ZeroRecord> all;
    for (std::size_t b = 0; b + 1 < anchors.size(); ++b) {
        const Anchor& lo = anchors[b];
        const Anchor& hi = anchors[b + 1];
        const long expected = hi.count - lo.count;
        double density = cfg.samples_per_mean_gap;
        std::vector<ZeroRecord> block;
        int level = 0;
        for (;; ++level, density *= 2.0) {
            block = scan_block(lo, hi, density, cfg);
            if (static_cast<long>(block.size()) == expected) break;
            if (level == kMaxRefinements)
                throw AuditFailure("zero scan audit failed on " + interval_text(lo.t, hi.t) + ": expected " +
                                       std::to_string(expected) + " zeros, found " + std::to_string(block.size()) +
                                       " after " + std::to_string(kMaxRefinements) + " refinements",
                                   lo.t, hi.t);
        }
        result.refinements = std::max(result.refinements, level);
        all.insert(all.end(), block.begin(), block.end());
    }
    result.window_found = static_cast<long>(all.size());

    for (const ZeroRecord& z : all) {
        if (z.gamma > t0 && z.gamma <= t1) {
            result.zeros.push_back(z);
            result.zeros.back().index_in_scan = result.zeros.size() - 1;
        }
    }
    return result;
}

std::vector<ZeroRecord> find_zeros(double t0, double t1, const ScanConfig& cfg) {
    return scan_zeros(t0, t1, cfg).zeros;
}

std::vector<ZeroRecord> classify(std::vector<ZeroRecord> zeros, const ScanConfig& cfg) {
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        ZeroRecord& rec = zeros[i];
        const double eps = std::max(rec.bracket_width, 1e-7);
        double z = z_eval(rec.gamma + eps, cfg);
        if (z == 0.0) z = z_eval(rec.gamma + 2.0 * eps, cfg);
        rec.derivative_sign = z > 0 ? DerivativeSign::plus : DerivativeSign::minus;
        if (i > 0 && rec.derivative_sign == zeros[i - 1].derivative_sign)
            throw AlternationViolation("derivative signs do not alternate at gamma = " + std::to_string(rec.gamma) +
                                           " (possible multiple or missed zero)",
                                       i);
    }
    return zeros;
}

GapStats gap_stats(const std::vector<ZeroRecord>& zeros, int bins, double B) {
    if (zeros.size() < 2) throw std::invalid_argument("gap_stats: needs at least two zeros");
    if (bins < 1 || !(B > 0.0)) throw std::invalid_argument("gap_stats: needs bins >= 1 and B > 0");

    GapStats out;
    out.upper = B;
    out.bin_width = B / bins;
    out.histogram.assign(bins, 0);
    out.pair_histogram.assign(bins, 0);
    const auto bin_of = [&](double u) {
        return std::min(bins - 1, static_cast<int>(u / out.bin_width));
    };
    const auto unfold = [](double gamma) { return std::log(gamma / (2.0 * kPi)) / (2.0 * kPi); };

    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        const double density = unfold(zeros[i].gamma);
        const double u = (zeros[i + 1].gamma - zeros[i].gamma) * density;
        out.normalized_gaps.push_back(u);
        if (u > B)
            ++out.overflow;
        else
            ++out.histogram[bin_of(u)];
        for (std::size_t k = i + 1; k < zeros.size(); ++k) {
            const double v = (zeros[k].gamma - zeros[i].gamma) * density;
            if (v > B) break;
            ++out.pair_histogram[bin_of(v)];
        }
    }

    const auto n_gaps = static_cast<double>(out.normalized_gaps.size());
    const auto n_zeros = static_cast<double>(zeros.size());
    for (int b = 0; b < bins; ++b) {
        const double mass = f_alpha((b + 1) * out.bin_width, 1e-12) - f_alpha(b * out.bin_width, 1e-12);
        out.predicted.push_back(n_gaps * mass);
        out.pair_predicted.push_back(n_zeros * mass);
    }
    return out;
}

std::pair<long, long> n_pm_alpha(const std::vector<ZeroRecord>& zeros, double T, double alpha) {
    const double threshold = 2.0 * kPi * alpha / std::log(T);
    long plus = 0;
    long minus = 0;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        if (zeros[i].gamma > T) break;
        if (!(zeros[i + 1].gamma - zeros[i].gamma > threshold)) continue;
        if (zeros[i].derivative_sign == DerivativeSign::plus)
            ++plus;
        else if (zeros[i].derivative_sign == DerivativeSign::minus)
            ++minus;
    }
    return {plus, minus};
}

}  // namespace zsign
