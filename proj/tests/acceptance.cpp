// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sperncube/antichain_geometry.hpp"
#include "sperncube/grid_poset.hpp"
#include "sperncube/intersecting_families.hpp"
#include "sperncube/lp_surface.hpp"

using namespace sperncube;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// 1. chain partition
Verdict chain_partition_criterion() {
    Verdict v;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 6; ++m) {
            const auto chains = chain_partition(n, m);
            const std::string tag = fmt("n=%g m=%g", n, m);
            std::map<oracle::Tuple, int> hits;
            for (const auto& c : chains)
                for (std::size_t i = 0; i < c.size(); ++i) {
                    ++hits[c.elements[i].coords()];
                    if (i) v.require(oracle::strictly_below(c.elements[i - 1].coords(), c.elements[i].coords()),
                                     tag + ": chain not strictly increasing");
                }
            const auto all = oracle::all_tuples(n, m);
            v.require(hits.size() == all.size(), tag + ": chains miss grid points");
            for (const auto& t : all) v.require(hits[t] == 1, tag + ": point not covered exactly once");
            const std::uint64_t expected = ipow(m, n) - ipow(m - 1, n);
            const std::uint64_t bound = static_cast<std::uint64_t>(n) * ipow(m, n - 1);
            v.require(chains.size() == expected, tag + ": chain count differs from m^n-(m-1)^n");
            v.require(expected <= bound, tag + ": m^n-(m-1)^n exceeds n*m^(n-1)");
        }
    if (v.pass) v.detail = "18 grids partitioned; counts m^n-(m-1)^n <= n*m^(n-1)";
    return v;
}

// 2. exact antichain optimum
Verdict antichain_optimum_criterion() {
    Verdict v;
    const std::vector<std::pair<int, int>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}};
    for (auto [n, m] : cases) {
        const std::string tag = fmt("n=%g m=%g", n, m);
        const auto cert = max_strict_antichain_size(n, m);
        const auto ex = oracle::exhaustive_max_antichain(oracle::all_tuples(n, m), oracle::strictly_below);
        const std::uint64_t expected = ipow(m, n) - ipow(m - 1, n);
        v.require(cert.size == expected, tag + ": width differs from m^n-(m-1)^n");
        v.require(ex.best == expected, tag + ": exhaustive optimum differs from m^n-(m-1)^n");
        v.require(cert.witness.size() == cert.size && is_strict_antichain(cert.witness), tag + ": bad witness");
    }
    if (v.pass) v.detail = "matching width = exhaustive optimum = m^n-(m-1)^n on 7 grids";
    return v;
}

// 3. Boolean Sperner
Verdict boolean_sperner_criterion() {
    Verdict v;
    for (int n = 1; n <= 5; ++n) {
        const auto cert = boolean_max_antichain_size(n);
        const auto expected = oracle::binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2));
        const auto ex = oracle::exhaustive_max_antichain(oracle::all_tuples(n, 2), oracle::subset_below);
        v.require(cert.size == expected, fmt("n=%g: width differs from binomial(n, n/2)", n));
        v.require(ex.best == expected, fmt("n=%g: exhaustive optimum differs from binomial(n, n/2)", n));
        v.require(is_weak_antichain(cert.witness), fmt("n=%g: witness not an antichain", n));
    }
    if (v.pass) v.detail = "widths 1,2,3,6,10 for n=1..5";
    return v;
}

// 4. staircase convergence
Verdict staircase_criterion() {
    Verdict v;
    double worst = 0.0;
    for (int k = 0; k <= 15; ++k) {
        const double formula = 1.0 - std::pow(2.0 / 3.0, k) + std::sqrt(1.0 + std::pow(4.0 / 9.0, k));
        const double gap = std::abs(staircase_length(k) - formula);
        worst = std::max(worst, gap);
        v.require(gap <= 1e-12, fmt("k=%g: |length - closed form| = %g > 1e-12", k, gap));
    }
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
        const double len = staircase_length(k);
        v.require(len > prev, fmt("length not increasing at k=%g", k));
        prev = len;
    }
    const double l20 = staircase_length(20);
    v.require(l20 >= 1.999 && l20 <= 2.0, fmt("staircase_length(20) = %.17g outside [1.999, 2]", l20));
    if (v.pass) v.detail = fmt("max closed-form gap %.3g for k<=15; length(20) = %.15g", worst, l20);
    return v;
}

PointSet anti_diagonal(int count) {
    std::vector<Point> pts;
    for (int i = 0; i <= count; ++i)
        pts.push_back({static_cast<double>(i) / count, static_cast<double>(count - i) / count});
    return PointSet(2, std::move(pts));
}

PointSet random_antichain(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs(count), ys(count);
    for (auto& x : xs) x = u(rng);
    for (auto& y : ys) y = u(rng);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back({xs[i], ys[i]});
    return PointSet(2, std::move(pts));
}

std::size_t box_count_oracle(const PointSet& ps, int m) {
    std::set<std::pair<long long, long long>> cells;
    for (const auto& p : ps.points()) {
        auto c = [m](double x) { return std::min<long long>(static_cast<long long>(std::floor(x * m)), m - 1); };
        cells.insert({c(p[0]), c(p[1])});
    }
    return cells.size();
}

// 5. box bound for planar antichains
Verdict box_bound_criterion() {
    Verdict v;
    const std::vector<int> ms{3, 9, 27, 81, 243, 729};
    std::vector<std::pair<std::string, PointSet>> sets;
    for (int k = 0; k <= 12; ++k) sets.emplace_back(fmt("staircase k=%g", k), staircase_points(k).antichain_vertices());
    for (int count : {10, 100, 1000, 5000}) sets.emplace_back(fmt("anti-diagonal %g", count), anti_diagonal(count));
    double max_slope = -1e300;
    for (const auto& [tag, ps] : sets) {
        v.require(is_cube_antichain(ps), tag + ": not an antichain");
        for (int m : ms) {
            const auto report = grid_box_count(ps, m);
            v.require(report.box_count == box_count_oracle(ps, m), tag + fmt(": box count differs from oracle at m=%g", m));
            v.require(report.box_count <= static_cast<std::uint64_t>(2 * m), tag + fmt(": N > 2m at m=%g", m));
        }
        const double slope = box_dimension_estimate(ps, ms).slope;
        max_slope = std::max(max_slope, slope);
        v.require(slope <= 1.05, tag + fmt(": dimension estimate %.4g > 1.05", slope));
    }
    if (v.pass) v.detail = fmt("17 sets, N(m) <= 2m everywhere; largest slope %.4g", max_slope);
    return v;
}

double polyline_length_oracle(const std::vector<Vertex2>& poly) {
    long double s = 0.0L;
    for (std::size_t i = 1; i < poly.size(); ++i)
        s += std::hypot(static_cast<long double>(poly[i].x) - poly[i - 1].x,
                        static_cast<long double>(poly[i].y) - poly[i - 1].y);
    return static_cast<double>(s);
}

// 6. projection bounds
Verdict projection_criterion() {
    Verdict v;
    std::mt19937_64 rng(20240601);
    std::vector<std::pair<std::string, std::vector<Vertex2>>> polys;
    for (int k = 0; k <= 12; ++k) polys.emplace_back(fmt("staircase k=%g", k), staircase_points(k).breakpoints);
    for (int rep = 0; rep < 50; ++rep) {
        const auto ps = random_antichain(rng, 40);
        std::vector<Vertex2> poly;
        for (const auto& p : ps.points()) poly.push_back({p[0], p[1]});
        polys.emplace_back(fmt("random polyline %g", rep), poly);
    }
    for (const auto& [tag, poly] : polys) {
        const auto bound = projection_length_bound(poly);
        const double len = polyline_length_oracle(poly);
        v.require(len <= bound.bound * (1.0 + 1e-15), tag + fmt(": length %.17g > bound %.17g", len, bound.bound));
    }
    std::size_t checked = 0;
    for (int k = 0; k <= 12; ++k, ++checked)
        v.require(diagonal_projection_check(staircase_points(k).antichain_vertices()).ok,
                  fmt("diagonal check fails on staircase k=%g", k));
    for (int rep = 0; rep < 50; ++rep, ++checked)
        v.require(diagonal_projection_check(random_antichain(rng, 100)).ok, "diagonal check fails on a random antichain");
    v.require(diagonal_projection_check(anti_diagonal(500)).ok, "diagonal check fails on the anti-diagonal");
    const auto bad = diagonal_projection_check(PointSet(2, {{0.2, 0.3}, {0.4, 0.5}, {0.9, 0.1}}));
    v.require(!bad.ok, "diagonal check accepts a dominated pair");
    if (v.pass) v.detail = fmt("%g polylines within bound; diagonal check passes on %g antichains, rejects dominated pair",
                               static_cast<double>(polys.size()), static_cast<double>(checked + 1));
    return v;
}

// 7. surface areas
Verdict surface_criterion() {
    Verdict v;
    struct Case {
        int n;
        double p;
        double tol;
        double expected;
        double slack;
    };
    const std::vector<Case> cases{{2, 2.0, 1e-9, M_PI / 2, 1e-6},
                                  {2, 1.0, 1e-9, std::sqrt(2.0), 1e-6},
                                  {3, 2.0, 1e-5, 2.0, 1e-3},
                                  {2, 64.0, 1e-8, 2.0, 0.05}};
    std::string summary;
    for (const auto& c : cases) {
        const auto r = lp_surface_area(c.n, c.p, c.tol);
        const double sigma_prev = std::pow(2.0, c.n - 1) * std::tgamma((c.n - 1) / 2.0 + 1.0) /
                                  std::pow(M_PI, (c.n - 1) / 2.0);
        const double limit = c.n * sigma_prev;
        const std::string tag = fmt("n=%g p=%g", c.n, c.p);
        v.require(std::abs(r.area - c.expected) <= c.slack,
                  tag + fmt(": area %.12g, expected %.12g", r.area, c.expected));
        v.require(r.area <= r.projection_sum_bound, tag + ": area exceeds the projection bound");
        v.require(r.projection_sum_bound <= limit * (1.0 + 1e-14), tag + ": projection bound exceeds n*sigma(n-1)");
        summary += fmt(" %.10g", r.area);
    }
    if (v.pass) v.detail = "areas" + summary + "; area <= projection bound <= n*sigma(n-1)";
    return v;
}

// 8. volumes
Verdict volume_criterion() {
    Verdict v;
    const std::vector<std::pair<int, double>> cases{{2, 2.0}, {3, 1.0}, {3, 3.0}};
    double worst_z = 0.0;
    for (auto [n, p] : cases) {
        const double closed = std::pow(std::tgamma(1.0 + 1.0 / p), n) / std::tgamma(1.0 + n / p);
        const auto mc = monte_carlo_orthant_volume(n, p, 1'000'000, 12345);
        const double vol = lp_orthant_volume(n, p);
        const double z = std::abs(mc.value - closed) / mc.standard_error;
        worst_z = std::max(worst_z, z);
        v.require(std::abs(vol - closed) <= 1e-12, fmt("n=%g p=%g: closed form mismatch", n, p));
        v.require(z <= 3.0, fmt("n=%g p=%g: Monte Carlo %g standard errors away", n, p, z));
    }
    v.require(slab_volume(2, 1.0) == 0.75, fmt("slab_volume(2,1) = %.17g", slab_volume(2, 1.0)));
    for (double c : {0.1, 0.5, 1.0}) v.require(slab_volume(1, c) == c, fmt("slab_volume(1,%g) = %.17g", c, slab_volume(1, c)));
    if (v.pass) v.detail = fmt("Monte Carlo within %.3g standard errors; slabs exact", worst_z);
    return v;
}

bool intersecting_oracle(const std::vector<oracle::Tuple>& f, int t) {
    for (const auto& a : f)
        for (const auto& b : f) {
            int s = 0;
            for (std::size_t i = 0; i < a.size(); ++i) s += a[i] > 0 && a[i] == b[i];
            if (s < t) return false;
        }
    return true;
}

bool trivial_oracle(const std::vector<oracle::Tuple>& f, int t) {
    if (f.empty()) return true;
    int fixed = 0;
    for (std::size_t i = 0; i < f[0].size(); ++i) {
        bool same = f[0][i] > 0;
        for (const auto& d : f) same = same && d[i] == f[0][i];
        fixed += same;
    }
    return fixed >= t;
}

std::vector<oracle::Tuple> rows_of(const Family& f) {
    std::vector<oracle::Tuple> out;
    for (const auto& d : f.members()) out.push_back(d.coords());
    return out;
}

std::size_t max_nontrivial_oracle(int n, int k, int t, int m) {
    std::vector<oracle::Tuple> h;
    for (auto& c : oracle::all_tuples(n, m + 1)) {
        int s = 0;
        for (int x : c) s += x > 0;
        if (s == k) h.push_back(c);
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << h.size()); ++mask) {
        std::vector<oracle::Tuple> f;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (mask >> i & 1u) f.push_back(h[i]);
        if (f.size() > best && intersecting_oracle(f, t) && !trivial_oracle(f, t)) best = f.size();
    }
    return best;
}

// 9. EKR families
Verdict ekr_criterion() {
    Verdict v;
    int instances = 0;
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k < n; ++k)
            for (int t = 1; t < k; ++t)
                for (int m = 1; m <= 4; ++m) {
                    const FamilyParams p{n, k, t, m};
                    const std::string tag = fmt("(n,k,t)=(%g,%g,", n, k) + fmt("%g) m=%g", t, m);
                    for (const auto& f : {build_F1(p), build_F2(p)}) {
                        const auto rows = rows_of(f);
                        v.require(!rows.empty(), tag + ": empty construction");
                        v.require(is_k_uniform_t_intersecting(f) && intersecting_oracle(rows, t),
                                  tag + ": construction not t-intersecting");
                        v.require(!is_trivial(f) && !trivial_oracle(rows, t), tag + ": construction trivial");
                    }
                    ++instances;
                }
    for (auto p : {FamilyParams{3, 2, 1, 1}, FamilyParams{4, 2, 1, 1}}) {
        const auto r = brute_force_max_nontrivial(p);
        const auto ex = max_nontrivial_oracle(p.n, p.k, p.t, p.m);
        v.require(r.complete, fmt("brute force incomplete at n=%g k=%g", p.n, p.k));
        v.require(r.size == 3 && ex == 3, fmt("brute force %g, exhaustive %g, expected 3", r.size, ex));
    }
    std::vector<int> ms;
    for (int m = 2; m <= 12; ++m) ms.push_back(m);
    const auto rows = family_size_growth(5, 3, 1, ms);
    double lo = 1e300, hi = 0.0;
    for (const auto& r : rows) {
        v.require(!r.skipped, fmt("growth row m=%g skipped", r.m));
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
    }
    v.require(hi / lo <= 8.0, fmt("ratio spread %g > 8", hi / lo));
    v.require(hi < 9.0, fmt("ratio %g not below the limit 9", hi));
    if (v.pass)
        v.detail = fmt("%g admissible instances valid; maxima 3 and 3; (5,3,1) ratio in [%.4g, %.4g]",
                       instances, lo, hi);
    return v;
}

// 10. (n,k,t) dimension and cover mechanics
Verdict nkt_criterion() {
    Verdict v;
    std::vector<int> ms;
    for (int m = 4; m <= 64; ++m) ms.push_back(m);
    struct Case {
        int n, k, t;
        std::vector<double> alphas;
        std::uint64_t seed;
    };
    std::string slopes;
    for (const auto& c : {Case{3, 2, 1, {0.4}, 101}, Case{4, 3, 2, {0.3, 0.8}, 202}}) {
        const auto a = sample_trivial_nkt_set(c.n, c.k, c.t, c.alphas, 50000, c.seed);
        const auto fit = nkt_box_dimension(a, ms);
        const std::string tag = fmt("(n,k,t)=(%g,%g,%g)", c.n, c.k, c.t);
        // every free cell is hit, so |F_m| = binomial(n-t,k-t) * m^(k-t)
        for (auto [m, size] : fit.sizes) {
            std::set<oracle::Tuple> cells;
            for (const auto& x : a.points()) {
                oracle::Tuple d;
                for (double xi : x) d.push_back(xi == 0.0 ? 0 : std::min(static_cast<int>(std::floor(m * xi)) + 1, m));
                cells.insert(d);
            }
            v.require(size == cells.size(), tag + fmt(": cover size differs from oracle at m=%g", m));
        }
        v.require(std::abs(fit.slope - (c.k - c.t)) <= 0.1, tag + fmt(": slope %.4g", fit.slope));
        slopes += fmt(" %.4g", fit.slope);
    }

    const double alpha[3] = {0.3, 0.5, 0.7};
    std::vector<Point> pts;
    for (int skip = 0; skip < 3; ++skip)
        for (double z : {0.15, 0.35, 0.55, 0.75, 0.95}) {
            Point x(4, 0.0);
            for (int i = 0; i < 3; ++i)
                if (i != skip) x[static_cast<std::size_t>(i)] = alpha[i];
            x[3] = z;
            pts.push_back(x);
        }
    const NktPointSet a({4, 3, 1, 0}, pts);
    v.require(satisfies_nkt_condition(a), "separated sample violates the (n,k,t) condition");
    const auto delta = nkt_separation(a);
    v.require(delta.has_value(), "separated sample has no separation");
    int tested = 0;
    if (delta) {
        for (int m = static_cast<int>(std::floor(1.0 / *delta)) + 1; m <= 200; ++m, ++tested) {
            const auto f = grid_cover_family(a, m);
            v.require(is_k_uniform_t_intersecting(f) && intersecting_oracle(rows_of(f), 1),
                      fmt("cover family not 1-intersecting at m=%g", m));
            v.require(!is_trivial(f), fmt("cover family trivial at m=%g", m));
        }
    }
    if (v.pass) v.detail = "slopes" + slopes + fmt("; separated cover intersecting for %g resolutions", tested);
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "chain partition", 1.0, chain_partition_criterion},
        {2, "exact antichain optimum", 30.0, antichain_optimum_criterion},
        {3, "Boolean Sperner", 10.0, boolean_sperner_criterion},
        {4, "staircase convergence", 1.0, staircase_criterion},
        {5, "box bound for antichains", 10.0, box_bound_criterion},
        {6, "projection bounds", 5.0, projection_criterion},
        {7, "surface areas", 60.0, surface_criterion},
        {8, "volumes", 30.0, volume_criterion},
        {9, "EKR families", 60.0, ekr_criterion},
        {10, "(n,k,t) dimension", 30.0, nkt_criterion},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.pass && secs >= c.limit_seconds) {
            v.pass = false;
            v.detail = fmt("took %.2f s, limit %.0f s", secs, c.limit_seconds);
        }
        std::printf("criterion %2d [%s] %s: %s (%.2f s)\n", c.id, v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str(), secs);
        failed += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
