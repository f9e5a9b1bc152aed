#include "zsign/mollified_means.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/mollifier.hpp"
#include "zsign/quadrature.hpp"
#include "zsign/sign_measure.hpp"
#include "zsign/summation.hpp"

namespace zsign {

namespace {

constexpr int kNodesPerPanel = 8;
constexpr double kStartFraction = 0.5;
constexpr int kMaxLevels = 7;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_arguments(double T, double theta) {
    if (!(T >= 100.0) || !std::isfinite(T)) throw UsageError("T must be a finite number >= 100");
    if (!(theta > 0.0) || !std::isfinite(theta)) throw UsageError("theta must be a finite number > 0");
}

/// The mollifier weight |B_X(1/2 + it)|^2, identically 1 when X < 2.
class Weight {
public:
    Weight(double T, double theta) : X_(std::pow(T, theta)) {
        if (X_ >= 2.0) table_ = make_coeff_table(X_);
    }
    double X() const noexcept { return X_; }
    double operator()(double t) const { return X_ < 2.0 ? 1.0 : std::norm(eval_B(t, table_)); }

private:
    double X_;
    CoeffTable table_;
};

double panel_width(double t, double fraction) {
    return fraction * 2.0 * std::numbers::pi / std::log(t / (2.0 * std::numbers::pi));
}

struct Pass {
    double value = 0.0;
    double magnitude = 0.0;  ///< sum of |weight x integrand| over all nodes
    long nodes = 0;
};

/// Gauss-Legendre over [a, b] cut into equal panels no wider than panel_width(b, fraction).
template <class F>
Pass integrate_segment(const F& f, double a, double b, double fraction, const GaussLegendreRule& rule) {
    const auto panels = std::max<long>(1, static_cast<long>(std::ceil((b - a) / panel_width(b, fraction))));
    const double h = (b - a) / static_cast<double>(panels);
    CompensatedSum sum;
    Pass out;
    for (long k = 0; k < panels; ++k) {
        const double lo = a + h * static_cast<double>(k);
        const double hi = k + 1 == panels ? b : lo + h;
        const double centre = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double term = rule.weights[i] * half * f(centre + half * rule.nodes[i]);
            sum.add(term);
            out.magnitude += std::fabs(term);
        }
        out.nodes += static_cast<long>(rule.nodes.size());
    }
    out.value = sum.value();
    return out;
}

bool close_enough(double delta, double value, double T) {
    return std::fabs(delta) <= std::max(1e-6 * std::fabs(value), 1e-6 * T);
}

/// Halves the panel fraction until two successive passes agree.
template <class PassFn>
QuadratureResult refine(double T, double theta, double X, PassFn pass) {
    QuadratureResult r;
    r.T = T;
    r.theta = theta;
    r.X = X;
    double fraction = kStartFraction;
    Pass previous = pass(fraction);
    r.nodes = previous.nodes;
    for (int level = 1; level < kMaxLevels; ++level) {
        fraction *= 0.5;
        const Pass current = pass(fraction);
        r.nodes += current.nodes;
        const double delta = current.value - previous.value;
        r.value = current.value;
        r.error_estimate = std::fabs(delta) + 8.0 * kEps * current.magnitude;
        previous = current;
        if (close_enough(delta, current.value, T)) {
            r.converged = true;
            break;
        }
    }
    return r;
}

template <class Integrand>
QuadratureResult uniform_mean(double T, double theta, double hypothesis, const ScanConfig& cfg,
                              Integrand integrand) {
    check_arguments(T, theta);
    const Weight weight(T, theta);
    const GaussLegendreRule rule = gauss_legendre(kNodesPerPanel);
    auto f = [&](double t) { return integrand(z_eval(t, cfg), weight(t)); };
    QuadratureResult r = refine(T, theta, weight.X(), [&](double fraction) {
        return integrate_segment(f, T, 2.0 * T, fraction, rule);
    });
    r.within_hypothesis = theta < hypothesis;
    return r;
}

}  // namespace

QuadratureResult mean_Z_B2(double T, double theta, const ScanConfig& cfg) {
    return uniform_mean(T, theta, 0.25, cfg, [](double z, double w) { return z * w; });
}

QuadratureResult mean_Z2_B4(double T, double theta, const ScanConfig& cfg) {
    return uniform_mean(T, theta, 0.01, cfg, [](double z, double w) { return z * z * w * w; });
}

ZeroSplitMeans zero_split_means(double T, double theta, const std::vector<ZeroRecord>& zeros,
                                const ScanConfig& cfg) {
    check_arguments(T, theta);
    const Weight weight(T, theta);
    const GaussLegendreRule rule = gauss_legendre(kNodesPerPanel);
    auto f = [&](double t) { return z_eval(t, cfg) * weight(t); };

    std::vector<double> edges;
    edges.reserve(zeros.size() + 2);
    edges.push_back(T);
    for (const ZeroRecord& z : zeros) edges.push_back(z.gamma);
    edges.push_back(2.0 * T);

    // Z keeps one sign on each segment, so |integral| and max(integral, 0) per segment
    // give the absolute and positive-part integrals without integrating a kink.
    Pass positive_pass;
    auto pass = [&](double fraction) {
        CompensatedSum absolute;
        CompensatedSum positive;
        Pass out;
        positive_pass = Pass{};
        for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
            if (!(edges[s + 1] > edges[s])) continue;
            const Pass seg = integrate_segment(f, edges[s], edges[s + 1], fraction, rule);
            absolute.add(std::fabs(seg.value));
            out.magnitude += seg.magnitude;
            out.nodes += seg.nodes;
            if (seg.value > 0.0) {
                positive.add(seg.value);
                positive_pass.magnitude += seg.magnitude;
            }
        }
        out.value = absolute.value();
        positive_pass.value = positive.value();
        positive_pass.nodes = out.nodes;
        return out;
    };

    // Both totals come from the same passes; the positive part is tracked alongside.
    ZeroSplitMeans out;
    double previous_positive = 0.0;
    bool first = true;
    out.absolute = refine(T, theta, weight.X(), [&](double fraction) {
        if (!first) previous_positive = positive_pass.value;
        first = false;
        return pass(fraction);
    });
    out.absolute.within_hypothesis = theta < 0.5;

    out.positive = out.absolute;
    out.positive.value = positive_pass.value;
    const double delta = positive_pass.value - previous_positive;
    out.positive.error_estimate = std::fabs(delta) + 8.0 * kEps * positive_pass.magnitude;
    out.positive.converged = out.absolute.converged && close_enough(delta, positive_pass.value, T);
    out.positive.within_hypothesis = true;
    return out;
}

QuadratureResult mean_absZ_B2(double T, double theta, const ScanConfig& cfg) {
    check_arguments(T, theta);
    return zero_split_means(T, theta, find_zeros(T, 2.0 * T, cfg), cfg).absolute;
}

SignSplitReport sign_split_check(double T, double theta, const ScanConfig& cfg) {
    check_arguments(T, theta);
    SignSplitReport r;
    r.T = T;
    r.theta = theta;
    r.X = std::pow(T, theta);
    r.signed_mean = mean_Z_B2(T, theta, cfg);
    const ZeroSplitMeans split = zero_split_means(T, theta, find_zeros(T, 2.0 * T, cfg), cfg);
    r.absolute_mean = split.absolute;
    r.positive_part = split.positive;
    r.half_sum = 0.5 * (r.signed_mean.value + r.absolute_mean.value);
    r.difference = std::fabs(r.positive_part.value - r.half_sum);
    r.tolerance = r.signed_mean.error_estimate + r.absolute_mean.error_estimate + r.positive_part.error_estimate;
    r.holds = r.difference <= r.tolerance;
    return r;
}

CauchySchwarzReport cauchy_schwarz_check(double T, double theta, const ScanConfig& cfg) {
    check_arguments(T, theta);
    CauchySchwarzReport r;
    r.T = T;
    r.theta = theta;
    r.X = std::pow(T, theta);
    const std::vector<ZeroRecord> zeros = find_zeros(T, 2.0 * T, cfg);
    r.positive_part = zero_split_means(T, theta, zeros, cfg).positive;
    r.mu_plus = measure_from_zeros(T, T, zeros, cfg).mu_plus;
    r.fourth_moment = mean_Z2_B4(T, theta, cfg);
    r.bound = std::sqrt(r.mu_plus) * std::sqrt(r.fourth_moment.value);
    r.slack = r.bound - r.positive_part.value - r.positive_part.error_estimate -
              0.5 * std::sqrt(r.mu_plus / r.fourth_moment.value) * r.fourth_moment.error_estimate;
    r.slack_factor = r.bound / r.positive_part.value;
    r.holds = r.slack >= 0.0;
    return r;
}

}  // namespace zsign
