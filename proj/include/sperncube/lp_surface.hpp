#pragma once

// Smooth-case quantities: the Hausdorff normalisation sigma_n, areas of the
// positive-orthant l^p sphere S_p (in the unnormalised diam^s convention),
// the projection-sum bound, and the Lebesgue volume of the central slab.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperncube/errors.hpp"

namespace sperncube {

// 2^n Gamma(n/2 + 1) / pi^(n/2): H^n of the unit n-cube when H^n is the
// unnormalised Hausdorff measure.
double sigma(int n);

// Lebesgue volume of {x in [0,1]^n : sum x_j^p <= 1}.
double lp_orthant_volume(int n, double p);

struct MonteCarloEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
};

// Rejection estimate of lp_orthant_volume from `samples` uniform points. The
// stream is a fixed-seed mt19937_64 with explicit 53-bit mantissa extraction,
// so results do not depend on the standard library's distributions.
MonteCarloEstimate monte_carlo_orthant_volume(int n, double p, std::uint64_t samples, std::uint64_t seed);

// Same stream convention, counting samples inside the slab of slab_volume.
MonteCarloEstimate monte_carlo_slab_volume(int n, double c, std::uint64_t samples, std::uint64_t seed);

struct SurfaceResult {
    int n = 0;
    double p = 0.0;
    double area = 0.0;
    double quadrature_error_estimate = 0.0;
    double projection_sum_bound = 0.0;
    double global_bound = 0.0;  // n * sigma(n-1)

    // area <= projection bound (up to the error estimate) <= global bound
    bool satisfies_bound_chain() const;
};

class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& what, SurfaceResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const SurfaceResult& partial() const noexcept { return partial_; }

private:
    SurfaceResult partial_;
};

inline constexpr int kMaxSurfaceDimension = 5;
// Cap on integrand evaluations per lp_surface_area call.
inline constexpr std::uint64_t kSurfaceEvaluationBudget = 20'000'000;

// sigma(n-1) * H^{n-1}-area of S_p with an error estimate <= tol. Throws
// QuadratureFailure if the tolerance is not reached within the panel budget.
SurfaceResult lp_surface_area(int n, double p, double tol);

// n * sigma(n-1) * lp_orthant_volume(n-1, p).
double projection_sum_bound(int n, double p);

struct SweepRow {
    SurfaceResult result;
    bool failed = false;
    std::string failure;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    // every completed area stays below n*sigma(n-1) and the gap to it shrinks
    // from the first to the last completed row
    bool approaches_limit = false;
};

SweepTable sharpness_sweep(int n, std::span<const double> p_list, double tol);

// CDF of the sum of n independent U(0,1) variables.
double irwin_hall_cdf(int n, double x);

// Lebesgue measure of {(n-c)/2 <= sum x_i < (n+c)/2} in [0,1]^n.
double slab_volume(int n, double c);

}  // namespace sperncube
