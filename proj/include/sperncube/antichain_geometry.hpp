#pragma once

// Antichains of the unit n-cube: membership, box-counting covers, the
// devil's-staircase construction and the two planar projection arguments.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sperncube/errors.hpp"

namespace sperncube {

using Point = std::vector<double>;

// Finite point set in [0,1]^n. Points are kept sorted and deduplicated.
class PointSet {
public:
    explicit PointSet(std::size_t dim);
    PointSet(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

private:
    std::size_t dim_;
    std::vector<Point> points_;
};

struct PointSetIngest {
    PointSet points;
    std::size_t clamped_values = 0;  // coordinates pulled back into [0,1]
};

// Text format: header line "n", then one point per line.
PointSetIngest read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& points);

// Some pair of distinct points (i, j) with points[i] <= points[j]
// componentwise, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const PointSet& points);

bool is_cube_antichain(const PointSet& points);

// Cantor function via ternary digits, accurate to `tolerance` for the exact
// binary value of x. Note the function is only Hoelder-continuous (exponent
// log 2 / log 3), so a decimal like 1/3 rounded to double lands ~1e-11 away
// from its rational value; use cantor_value_rational for such inputs.
double cantor_value(double x, double tolerance = 1e-12);

// Cantor function at num/den; exact whenever num/den has a finite ternary
// expansion.
double cantor_value_rational(std::int64_t num, std::int64_t den, double tolerance = 1e-12);

struct Vertex2 {
    double x;
    double y;
    friend bool operator==(const Vertex2&, const Vertex2&) = default;
};

inline constexpr int kMaxStaircaseLevel = 20;

// Level-k polyline of y = 1 - f_k(x), f_k the k-th piecewise-linear Cantor
// approximant: 2^k sloped pieces of width 3^-k and drop 2^-k separated by
// flats.
struct StaircaseApprox {
    int level = 0;
    std::vector<Vertex2> breakpoints;

    // One vertex per sloped piece (its left end) plus (1,0): the flats'
    // duplicate heights are dropped so the set is a strict antichain.
    PointSet antichain_vertices() const;
};

StaircaseApprox staircase_points(int k);

double staircase_length(int k);
double staircase_length_closed_form(int k);

// Euclidean length of a polyline (compensated summation).
double polyline_length(std::span<const Vertex2> polyline);

struct CoverReport {
    int resolution = 0;
    std::uint64_t box_count = 0;
    std::uint64_t theoretical_bound = 0;  // n*m^(n-1), saturating
    std::vector<std::vector<int>> cells;  // filled when requested
};

// Index of the cell I_{j,m} holding x: floor(m x) clamped to m-1.
int cell_index(double x, int m);

CoverReport grid_box_count(const PointSet& points, int m, bool keep_cells = false);

struct DimensionFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<CoverReport> covers;
};

// Least-squares slope of log N(m) against log m.
DimensionFit box_dimension_estimate(const PointSet& points, std::span<const int> resolutions);

// Least-squares slope of log y against log x; shared by the box-dimension
// estimators.
std::pair<double, double> log_log_fit(std::span<const double> xs, std::span<const double> ys);

struct ProjectionBound {
    double x_extent = 0.0;  // measure of the x-projection
    double y_extent = 0.0;
    double bound = 0.0;     // x_extent + y_extent
    double length = 0.0;    // Euclidean polyline length
};

// Rejection carrying the offending vertex pair, in traversal order.
class NotAnAntichain : public InvalidInput {
public:
    NotAnAntichain(const std::string& what, Vertex2 first, Vertex2 second)
        : InvalidInput(what), first_(first), second_(second) {}
    Vertex2 first() const noexcept { return first_; }
    Vertex2 second() const noexcept { return second_; }

private:
    Vertex2 first_;
    Vertex2 second_;
};

// lambda(pi_x(S)) + lambda(pi_y(S)) for a planar polyline whose vertices form
// a 2-cube antichain.
ProjectionBound projection_length_bound(std::span<const Vertex2> polyline);
// Same for a staircase approximant; the antichain check runs on its thinned
// vertex set.
ProjectionBound projection_length_bound(const StaircaseApprox& staircase);

struct DiagonalProjectionReport {
    bool ok = true;
    std::optional<std::pair<Point, Point>> worst_pair;
    double worst_ratio = 0.0;  // max |p-q| / |phi(p)-phi(q)|; +inf on collisions
};

// Checks that phi(x,y) = x-y on {x >= y} and y-x on {x < y} has an inverse
// with Lipschitz constant 1 on each part.
DiagonalProjectionReport diagonal_projection_check(const PointSet& points);

}  // namespace sperncube
