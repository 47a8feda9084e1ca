#include "wwc/arma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wwc/errors.hpp"
#include "wwc/rng.hpp"

namespace wwc {

namespace {

constexpr double kCoefBound = 0.999;
constexpr double kThetaTolerance = 1e-6;
constexpr double kObjectiveTolerance = 1e-7;

struct InnerFit {
    double css = 0.0;
    double c = 0.0;
    double phi = 0.0;
};

// Conditional least squares in (c, phi) for a fixed theta. With eps_0 = 0 the
// innovation is affine in both coefficients:
//   eps_k = a_k - c * u_k - phi * v_k,
//   a_k = D_k - theta * a_{k-1},  u_k = 1 - theta * u_{k-1},
//   v_k = D_{k-1} - theta * v_{k-1}.
InnerFit conditional_ls(std::span<const double> x, int p, double theta) {
    const std::size_t n = x.size();
    std::vector<double> a(n, 0.0), u(n, 0.0), v(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        a[k] = x[k] - theta * a[k - 1];
        u[k] = 1.0 - theta * u[k - 1];
        v[k] = x[k - 1] - theta * v[k - 1];
    }
    double s_uu = 0.0, s_uv = 0.0, s_vv = 0.0, s_ua = 0.0, s_va = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        s_uu += u[k] * u[k];
        s_uv += u[k] * v[k];
        s_vv += v[k] * v[k];
        s_ua += u[k] * a[k];
        s_va += v[k] * a[k];
    }
    InnerFit fit;
    if (p == 1) {
        const double det = s_uu * s_vv - s_uv * s_uv;
        if (std::abs(det) > 1e-12 * std::max(1.0, s_uu * s_vv)) {
            fit.c = (s_ua * s_vv - s_va * s_uv) / det;
            fit.phi = (s_uu * s_va - s_uv * s_ua) / det;
        } else {
            // Lagged regressor collinear with the intercept; the split between
            // c and phi is unidentified, so take the smallest-phi solution.
            fit.phi = 0.0;
            fit.c = s_uu > 0.0 ? s_ua / s_uu : 0.0;
        }
        if (std::abs(fit.phi) > kCoefBound) {
            fit.phi = std::copysign(kCoefBound, fit.phi);
            fit.c = s_uu > 0.0 ? (s_ua - fit.phi * s_uv) / s_uu : 0.0;
        }
    } else {
        fit.phi = 0.0;
        fit.c = s_uu > 0.0 ? s_ua / s_uu : 0.0;
    }
    double css = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double eps = a[k] - fit.c * u[k] - fit.phi * v[k];
        css += eps * eps;
    }
    fit.css = css;
    return fit;
}

}  // namespace

ArmaFit fit_arma(std::span<const double> values, int p, int q) {
    if (p < 0 || p > 1 || q < 0 || q > 1) {
        throw InvalidParameterError("fit_arma: orders must be 0 or 1");
    }
    const std::size_t min_len = q == 1 ? 10 : 3;
    if (values.size() < min_len) {
        throw InsufficientDataError("fit_arma: need at least " + std::to_string(min_len) +
                                    " observations, got " + std::to_string(values.size()));
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        throw DegenerateSeriesError("fit_arma: series is constant");
    }

    double best_theta = 0.0;
    InnerFit best = conditional_ls(values, p, 0.0);
    if (q == 1) {
        // Deterministic scan, then golden-section refinement of the bracket.
        constexpr int kGridPoints = 81;
        for (int g = 0; g < kGridPoints; ++g) {
            const double t = -kCoefBound + 2.0 * kCoefBound * g / (kGridPoints - 1);
            const InnerFit fit = conditional_ls(values, p, t);
            if (fit.css < best.css) {
                best = fit;
                best_theta = t;
            }
        }
        const double step = 2.0 * kCoefBound / (kGridPoints - 1);
        double a = std::max(-kCoefBound, best_theta - step);
        double b = std::min(kCoefBound, best_theta + step);
        const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
        double t1 = b - inv_golden * (b - a);
        double t2 = a + inv_golden * (b - a);
        double f1 = conditional_ls(values, p, t1).css;
        double f2 = conditional_ls(values, p, t2).css;
        for (int iter = 0; iter < 200 && (b - a) > kThetaTolerance &&
                           std::abs(f1 - f2) > kObjectiveTolerance * (1.0 + best.css);
             ++iter) {
            if (f1 < f2) {
                b = t2;
                t2 = t1;
                f2 = f1;
                t1 = b - inv_golden * (b - a);
                f1 = conditional_ls(values, p, t1).css;
            } else {
                a = t1;
                t1 = t2;
                f1 = f2;
                t2 = a + inv_golden * (b - a);
                f2 = conditional_ls(values, p, t2).css;
            }
        }
        const double mid = 0.5 * (a + b);
        const InnerFit refined = conditional_ls(values, p, mid);
        if (refined.css < best.css) {
            best = refined;
            best_theta = mid;
        }
    }

    const double n_eff = static_cast<double>(values.size() - 1);
    const double sigma2 = best.css / n_eff;
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw DegenerateSeriesError("fit_arma: residuals have no variance");
    }
    ArmaFit fit;
    fit.p = p;
    fit.q = q;
    fit.c = best.c;
    fit.phi = best.phi;
    fit.theta = q == 1 ? best_theta : 0.0;
    fit.sigma2 = sigma2;
    fit.log_objective =
        -0.5 * n_eff * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0);
    return fit;
}

ArmaFit fit_arma(const CountSeries& series, int p, int q) {
    std::vector<double> values(series.values.begin(), series.values.end());
    return fit_arma(values, p, q);
}

std::vector<double> deflate(std::span<const double> values, double phi) {
    if (!(std::abs(phi) < 1.0)) {
        throw InvalidParameterError("deflate: |phi| must be below 1");
    }
    std::vector<double> out;
    if (values.size() < 2) {
        return out;
    }
    out.reserve(values.size() - 1);
    for (std::size_t k = 1; k < values.size(); ++k) {
        out.push_back(values[k] - phi * values[k - 1]);
    }
    return out;
}

DeflatedSeries deflate(const CountSeries& series, double phi) {
    std::vector<double> values(series.values.begin(), series.values.end());
    return DeflatedSeries{deflate(values, phi), series.label};
}

RatioReport wwc_ratio(const DeflatedSeries& right, const DeflatedSeries& wrong) {
    if (right.values.size() != wrong.values.size()) {
        throw InvalidParameterError("wwc_ratio: deflated series must be aligned");
    }
    RatioReport report;
    for (double v : right.values) {
        report.sum_r += v;
        if (v < 0.0) report.negative_mass_warning = true;
    }
    for (double v : wrong.values) {
        report.sum_w += v;
        if (v < 0.0) report.negative_mass_warning = true;
    }
    const double denom = report.sum_r + report.sum_w;
    if (!(denom > 0.0)) {
        throw UndefinedRatioError("wwc_ratio: combined deflated mass is not positive");
    }
    report.ratio = std::clamp(report.sum_w / denom, 0.0, 1.0);
    return report;
}

EstimateResult estimate_from_counts(const CountSeries& right, const CountSeries& wrong,
                                    ArmaOrders right_orders, ArmaOrders wrong_orders) {
    if (right.values.size() != wrong.values.size()) {
        throw InvalidParameterError("estimate_from_counts: series must be aligned");
    }
    const auto all_zero = [](const CountSeries& s) {
        return std::all_of(s.values.begin(), s.values.end(), [](int v) { return v == 0; });
    };

    const std::size_t n = right.values.size();
    EstimateResult result;

    DeflatedSeries right_deflated{std::vector<double>(n > 0 ? n - 1 : 0, 0.0),
                                  FlowLabel::RightWay};
    DeflatedSeries wrong_deflated{std::vector<double>(n > 0 ? n - 1 : 0, 0.0),
                                  FlowLabel::WrongWay};

    // A series with no events at all carries nothing a fit could add; it
    // short-circuits to zero deflated mass instead of erroring.
    if (!all_zero(right)) {
        const ArmaFit fit = fit_arma(right, right_orders.p, right_orders.q);
        right_deflated = deflate(right, fit.phi);
        result.right_fit = fit;
    }
    if (!all_zero(wrong)) {
        const ArmaFit fit = fit_arma(wrong, wrong_orders.p, wrong_orders.q);
        wrong_deflated = deflate(wrong, fit.phi);
        result.wrong_fit = fit;
    }

    result.report = wwc_ratio(right_deflated, wrong_deflated);
    return result;
}

SimulatedSeries simulate_arma(const ArmaFit& fit, std::size_t length, std::uint64_t seed,
                              double t_gap, FlowLabel label) {
    if (!(std::abs(fit.phi) < 1.0) || !(std::abs(fit.theta) < 1.0) || fit.sigma2 < 0.0) {
        throw InvalidParameterError("simulate_arma: fit violates stationarity bounds");
    }
    constexpr std::size_t kBurnIn = 200;
    const double sigma = std::sqrt(fit.sigma2);
    Rng rng(seed);

    SimulatedSeries out;
    out.latent.reserve(length);
    out.counts.values.reserve(length);
    out.counts.t_gap = t_gap;
    out.counts.label = label;

    double prev = fit.c / (1.0 - fit.phi);  // stationary mean
    double eps_prev = 0.0;
    for (std::size_t k = 0; k < kBurnIn + length; ++k) {
        const double eps = sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0;
        const double value = fit.c + eps + fit.phi * prev + fit.theta * eps_prev;
        prev = value;
        eps_prev = eps;
        if (k >= kBurnIn) {
            out.latent.push_back(value);
            out.counts.values.push_back(
                static_cast<int>(std::lround(std::max(0.0, value))));
        }
    }
    return out;
}

}  // namespace wwc
