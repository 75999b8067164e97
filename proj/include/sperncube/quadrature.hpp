#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace sperncube {

// A value together with an absolute error bound.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // own truncation estimate plus propagated integrand error
    bool converged = false;
    std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod nodes (non-negative half) with the embedded 7-point Gauss
// rule on the odd indices.
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value, error, propagated;
    bool operator<(const Panel& o) const { return error + propagated < o.error + o.propagated; }
};

template <class F>
Panel gauss_kronrod(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0, propagated = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const double dx = h * kKronrodNodes[i];
        const Estimate lo = f(c - dx);
        Estimate hi = lo;
        if (i != 7) hi = f(c + dx);
        const double pair_value = i == 7 ? lo.value : lo.value + hi.value;
        const double pair_error = i == 7 ? lo.error : lo.error + hi.error;
        kronrod += kKronrodWeights[i] * pair_value;
        propagated += kKronrodWeights[i] * pair_error;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair_value;
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h), propagated * std::abs(h)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) quadrature of an integrand that
// returns Estimate; the integrand's own errors are integrated alongside and
// added to the reported error. Stops once the total error is <= abs_tol or
// after max_panels panels, or as soon as `stop()` returns true.
struct NeverStop {
    bool operator()() const noexcept { return false; }
};

template <class F, class Stop = NeverStop>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, std::size_t max_panels = 4000,
                                    Stop stop = {}) {
    std::priority_queue<detail::Panel> heap;
    heap.push(detail::gauss_kronrod(f, a, b));
    double value = heap.top().value;
    double error = heap.top().error + heap.top().propagated;
    while (error > abs_tol && heap.size() < max_panels && !stop()) {
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gauss_kronrod(f, worst.a, mid);
        const auto right = detail::gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + left.propagated + right.error + right.propagated - worst.error - worst.propagated;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed the drift of the running updates
    QuadratureResult r;
    r.intervals = heap.size();
    double v = 0.0, e = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error + heap.top().propagated;
        heap.pop();
    }
    r.value = v;
    r.error = e;
    r.converged = e <= abs_tol;
    return r;
}

}  // namespace sperncube
