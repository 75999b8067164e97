#include "sperncube/lp_surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sperncube/quadrature.hpp"

namespace sperncube {

namespace {

void require_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidInput("p must be a finite real >= 1");
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Integrates over the ordered sector 0 <= x_0 <= ... <= x_{d-1} <= f(x) of
// the graph f = (1 - sum x_j^p)^(1/p), where f is the largest coordinate.
// On this sector |df/dx_j| = (x_j/f)^(p-1) <= 1, so the area integrand stays
// in [1, sqrt(n)] and the curved boundary is carried by the limits.
class SectorIntegrator {
public:
    SectorIntegrator(int n, double p, std::size_t max_panels, std::uint64_t max_evaluations)
        : n_(n), p_(p), max_panels_(max_panels), max_evaluations_(max_evaluations),
          x_(static_cast<std::size_t>(n - 1)) {}

    Estimate integrate(int level, double lower, double used, double tol) {
        const int d = n_ - 1;
        const double upper = std::pow(std::max(0.0, (1.0 - used) / (n_ - level)), 1.0 / p_);
        if (upper <= lower) return {};
        auto body = [&](double x) -> Estimate {
            x_[static_cast<std::size_t>(level)] = x;
            const double next_used = used + std::pow(x, p_);
            if (level + 1 == d) {
                ++evaluations_;
                return {integrand(next_used), 0.0};
            }
            return integrate(level + 1, x, next_used, tol / 2);
        };
        // once the evaluation budget is spent every remaining integral gets a
        // single panel, so the run finishes with an honest (large) error
        auto exhausted = [this] { return evaluations_ > max_evaluations_; };
        const std::size_t panels = exhausted() ? 1 : max_panels_;
        const auto r = integrate_adaptive(body, lower, upper, level + 1 == d ? tol : tol / 2, panels, exhausted);
        converged_ = converged_ && r.converged;
        return {r.value, r.error};
    }

    bool converged() const noexcept { return converged_; }
    std::uint64_t evaluations() const noexcept { return evaluations_; }

private:
    double integrand(double used) const {
        const double fp = 1.0 - used;  // f^p >= x_j^p on the sector
        double grad2 = 0.0;
        for (double x : x_) {
            const double ratio = std::pow(x, p_) / fp;  // (x_j/f)^p in [0,1]
            grad2 += std::pow(ratio, 2.0 * (p_ - 1.0) / p_);
        }
        return std::sqrt(1.0 + grad2);
    }

    int n_;
    double p_;
    std::size_t max_panels_;
    std::uint64_t max_evaluations_;
    std::uint64_t evaluations_ = 0;
    std::vector<double> x_;
    bool converged_ = true;
};

// mantissa-exact uniform double in [0,1)
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

double sigma(int n) {
    if (n < 0) throw InvalidInput("sigma(n) needs n >= 0");
    const long double half = static_cast<long double>(n) / 2;
    return static_cast<double>(std::pow(2.0L, n) * std::tgamma(half + 1) /
                               std::pow(std::numbers::pi_v<long double>, half));
}

double lp_orthant_volume(int n, double p) {
    if (n < 1) throw InvalidInput("lp_orthant_volume needs n >= 1");
    require_p(p);
    const long double g = std::tgamma(1.0L + 1.0L / p);
    return static_cast<double>(std::pow(g, n) / std::tgamma(1.0L + static_cast<long double>(n) / p));
}

MonteCarloEstimate monte_carlo_orthant_volume(int n, double p, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("monte_carlo_orthant_volume needs n >= 1");
    require_p(p);
    if (samples == 0) throw InvalidInput("monte_carlo_orthant_volume needs samples > 0");
    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += std::pow(uniform01(rng), p);
        if (sum <= 1.0) ++hits;
    }
    MonteCarloEstimate est;
    est.samples = samples;
    est.value = static_cast<double>(hits) / static_cast<double>(samples);
    est.standard_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(samples));
    return est;
}

MonteCarloEstimate monte_carlo_slab_volume(int n, double c, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("monte_carlo_slab_volume needs n >= 1");
    if (!(c >= 0.0)) throw InvalidInput("slab width must be >= 0");
    if (samples == 0) throw InvalidInput("monte_carlo_slab_volume needs samples > 0");
    const double lo = (n - c) / 2.0;
    const double hi = (n + c) / 2.0;
    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += uniform01(rng);
        if (sum >= lo && sum < hi) ++hits;
    }
    MonteCarloEstimate est;
    est.samples = samples;
    est.value = static_cast<double>(hits) / static_cast<double>(samples);
    est.standard_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(samples));
    return est;
}

bool SurfaceResult::satisfies_bound_chain() const {
    return area <= projection_sum_bound + quadrature_error_estimate &&
           projection_sum_bound <= global_bound * (1.0 + 1e-14);
}

double projection_sum_bound(int n, double p) {
    if (n < 2) throw InvalidInput("projection_sum_bound needs n >= 2");
    return n * sigma(n - 1) * lp_orthant_volume(n - 1, p);
}

SurfaceResult lp_surface_area(int n, double p, double tol) {
    if (n < 2 || n > kMaxSurfaceDimension) {
        throw InvalidInput("lp_surface_area supports n in {2,...," + std::to_string(kMaxSurfaceDimension) + "}");
    }
    require_p(p);
    if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");

    SurfaceResult res;
    res.n = n;
    res.p = p;
    res.projection_sum_bound = projection_sum_bound(n, p);
    res.global_bound = n * sigma(n - 1);

    // n! congruent ordered sectors, each a graph over n-1 coordinates
    const double scale = sigma(n - 1) * factorial(n);
    SectorIntegrator sector(n, p, n == 2 ? 20000 : 2000, kSurfaceEvaluationBudget);
    const auto est = sector.integrate(0, 0.0, 0.0, tol / scale);
    res.area = scale * est.value;
    res.quadrature_error_estimate = scale * est.error;
    if (!sector.converged() || res.quadrature_error_estimate > tol) {
        throw QuadratureFailure("lp_surface_area(n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                                    "): error estimate " + std::to_string(res.quadrature_error_estimate) +
                                    " above tolerance " + std::to_string(tol),
                                res);
    }
    return res;
}

SweepTable sharpness_sweep(int n, std::span<const double> p_list, double tol) {
    for (std::size_t i = 1; i < p_list.size(); ++i) {
        if (!(p_list[i] > p_list[i - 1])) throw InvalidInput("sharpness_sweep: p values must increase");
    }
    SweepTable table;
    for (double p : p_list) {
        SweepRow row;
        try {
            row.result = lp_surface_area(n, p, tol);
        } catch (const QuadratureFailure& e) {
            row.result = e.partial();
            row.failed = true;
            row.failure = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    const SweepRow* first = nullptr;
    const SweepRow* last = nullptr;
    bool below = true;
    for (const auto& row : table.rows) {
        if (row.failed) continue;
        if (!first) first = &row;
        last = &row;
        below = below && row.result.area <=
                             row.result.global_bound + row.result.quadrature_error_estimate;
    }
    if (first && last && first != last) {
        const double gap_first = first->result.global_bound - first->result.area;
        const double gap_last = last->result.global_bound - last->result.area;
        table.approaches_limit = below && gap_last < gap_first;
    }
    return table;
}

namespace {

// Alternating-sum Irwin-Hall CDF in long double, which keeps x - k exact for
// double inputs.
long double irwin_hall_sum(int n, long double x) {
    if (x <= 0) return 0.0L;
    if (x >= n) return 1.0L;
    long double sum = 0.0L;
    long double binom = 1.0L;
    const auto kmax = static_cast<int>(std::floor(x));
    for (int k = 0; k <= kmax; ++k) {
        const long double term = binom * std::pow(x - k, n);
        sum += (k % 2 == 0) ? term : -term;
        binom = binom * (n - k) / (k + 1);
    }
    long double fact = 1.0L;
    for (int i = 2; i <= n; ++i) fact *= i;
    return std::clamp(sum / fact, 0.0L, 1.0L);
}

}  // namespace

double irwin_hall_cdf(int n, double x) {
    if (n < 1) throw InvalidInput("irwin_hall_cdf needs n >= 1");
    if (std::isnan(x)) throw InvalidInput("irwin_hall_cdf: x is NaN");
    return static_cast<double>(irwin_hall_sum(n, x));
}

double slab_volume(int n, double c) {
    if (n < 1) throw InvalidInput("slab_volume needs n >= 1");
    if (!(c >= 0.0)) throw InvalidInput("slab_volume needs c >= 0");
    if (c == 0.0) return 0.0;
    if (c >= n) return 1.0;
    // the half-open sum condition differs from the closed one by a null set
    const long double hi = (static_cast<long double>(n) + c) / 2;
    const long double lo = (static_cast<long double>(n) - c) / 2;
    return static_cast<double>(std::clamp(irwin_hall_sum(n, hi) - irwin_hall_sum(n, lo), 0.0L, 1.0L));
}

}  // namespace sperncube
