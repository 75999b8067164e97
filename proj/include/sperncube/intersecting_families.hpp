#pragma once

// k-uniform t-intersecting families of integer vectors in {0..m}^n, the
// non-trivial constructions F1 and F2, exact small-instance maxima, and the
// grid-cover bridge from (n,k,t)-point sets to such families.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sperncube/antichain_geometry.hpp"
#include "sperncube/errors.hpp"

namespace sperncube {

// Vector in {0, ..., m}^n.
class IntVector {
public:
    IntVector(std::vector<int> coords, int ambient_m);

    std::size_t ambient_n() const noexcept { return coords_.size(); }
    int ambient_m() const noexcept { return m_; }
    const std::vector<int>& coords() const noexcept { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }
    std::string to_string() const;

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector& a, const IntVector& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<int> coords_;
    int m_;
};

// 1-based index sets, ascending.
std::vector<int> support(const IntVector& d);
std::vector<int> ones(const IntVector& d);

struct FamilyParams {
    int n = 0;
    int k = 0;
    int t = 0;
    int m = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Throws InvalidInput unless n >= k > t >= 1 and m >= 1.
void require_admissible(const FamilyParams& params);

// A set of members of H_{n,k,m} = {d in {0..m}^n : |supp d| = k}; members are
// kept sorted and unique.
class Family {
public:
    explicit Family(FamilyParams params, std::vector<IntVector> members = {});

    const FamilyParams& params() const noexcept { return params_; }
    const std::vector<IntVector>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

private:
    FamilyParams params_;
    std::vector<IntVector> members_;
};

bool in_H(const IntVector& d, int k);

// Common support indices i with d_i == e_i.
std::size_t agreeing_positions(const IntVector& d, const IntVector& e);

bool is_k_uniform_t_intersecting(const Family& family);

// (index, value) pairs, 1-based, where every member carries the same
// positive value.
std::vector<std::pair<int, int>> fixed_positive_coordinates(const Family& family);

// At least t fixed positive coordinates. The empty family counts as trivial.
bool is_trivial(const Family& family);

std::uint64_t h_size(int n, int k, int m);
std::vector<IntVector> enumerate_H(int n, int k, int m, std::uint64_t budget = kDefaultEnumerationBudget);

// The two displayed non-trivial constructions. For n = k the constructions
// degenerate (a single all-ones member, or pairs failing t-intersection);
// callers wanting the non-trivial examples use n > k.
Family build_F1(const FamilyParams& params, std::uint64_t budget = kDefaultEnumerationBudget);
Family build_F2(const FamilyParams& params, std::uint64_t budget = kDefaultEnumerationBudget);

struct GrowthRow {
    int m = 0;
    std::uint64_t f1_size = 0;
    std::uint64_t f2_size = 0;
    double ratio = 0.0;  // max(|F1|,|F2|) / m^(k-t-1)
    bool skipped = false;
    std::string notice;
};

std::vector<GrowthRow> family_size_growth(int n, int k, int t, std::span<const int> m_list,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

struct BruteForceReport {
    FamilyParams params;
    std::size_t size = 0;  // best non-trivial family found
    Family witness{FamilyParams{}};
    bool complete = false;  // search exhausted, so `size` is the exact maximum
    std::uint64_t nodes = 0;
    std::size_t vertices = 0;  // |H_{n,k,m}|
    std::size_t construction_size = 0;  // max(|F1|,|F2|)
    bool matches_construction = false;  // size == construction_size (reported, never required)
};

inline constexpr std::uint64_t kDefaultCliqueVertexBudget = 512;
inline constexpr std::uint64_t kDefaultCliqueNodeCap = 20'000'000;

// Largest non-trivial k-uniform t-intersecting family in H_{n,k,m} by branch
// and bound over the pairwise t-agreement graph. The witness is the
// lexicographically least maximum family. If the node cap is hit the best
// family found so far (or the larger construction, when bigger) is returned
// with complete = false.
BruteForceReport brute_force_max_nontrivial(const FamilyParams& params,
                                            std::uint64_t vertex_budget = kDefaultCliqueVertexBudget,
                                            std::uint64_t node_cap = kDefaultCliqueNodeCap);

std::string to_json(const BruteForceReport& report);

// Points of [0,1]^n with exactly k strictly positive coordinates.
class NktPointSet {
public:
    NktPointSet(FamilyParams params_nkt, std::vector<Point> points);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int t() const noexcept { return t_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    int n_, k_, t_;
    std::vector<Point> points_;
};

// Every pair agrees on t coordinates with equal positive values.
bool satisfies_nkt_condition(const NktPointSet& set);

// Some t coordinates carry one positive value across the whole set.
bool is_trivial_nkt(const NktPointSet& set);

// Smallest |x_i - y_i| over pairs and indices where both are positive and
// differ; nullopt when no such pair exists.
std::optional<double> nkt_separation(const NktPointSet& set);

// d_i = 0 for x_i = 0, otherwise the 1-based index of the cell I_{j,m}
// holding x_i (so x_i = 1 maps to m).
IntVector cover_vector(const Point& x, int m);

Family grid_cover_family(const NktPointSet& set, int m);

struct NktDimensionFit {
    double slope = 0.0;
    std::vector<std::pair<int, std::size_t>> sizes;  // (m, |F_m|)
};

NktDimensionFit nkt_box_dimension(const NktPointSet& set, std::span<const int> m_list);

// binomial(n-t, k-t) * sigma(k-t).
double ekr_measure_bound(int n, int k, int t);

// Samples of the extremal trivial set: x_1..x_t fixed to `alphas`, plus k-t
// further positive coordinates, uniform in (0,1], on a uniformly chosen
// support.
NktPointSet sample_trivial_nkt_set(int n, int k, int t, std::span<const double> alphas, std::size_t count,
                                   std::uint64_t seed);

// Text format: header "n k t m", then one vector per line.
void write_family(std::ostream& out, const Family& family);
Family read_family(std::istream& in);

}  // namespace sperncube
