#include "sperncube/antichain_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace sperncube {

namespace {

void validate_point(const Point& p, std::size_t dim) {
    if (p.size() != dim) {
        throw InvalidInput("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim));
    }
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("point coordinate " + std::to_string(v) + " outside [0,1]");
    }
}

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double merged_measure(std::vector<std::pair<double, double>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < intervals.size()) {
        double lo = intervals[i].first;
        double hi = intervals[i].second;
        ++i;
        while (i < intervals.size() && intervals[i].first <= hi) {
            hi = std::max(hi, intervals[i].second);
            ++i;
        }
        total += hi - lo;
    }
    return total;
}

}  // namespace

PointSet::PointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InvalidInput("PointSet dimension must be positive");
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : PointSet(dim) {
    for (const auto& p : points) validate_point(p, dim);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
}

PointSetIngest read_point_set(std::istream& in) {
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header(line);
    long long n = 0;
    if (!(header >> n) || n < 1) throw InvalidInput("point set: bad header '" + line + "'");
    const auto dim = static_cast<std::size_t>(n);
    std::vector<Point> pts;
    std::size_t clamped = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        Point p;
        std::string tok;
        while (row >> tok) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || std::isnan(v)) throw InvalidInput("point set: bad number '" + tok + "'");
            if (v < 0.0 || v > 1.0) {
                v = std::clamp(v, 0.0, 1.0);
                ++clamped;
            }
            p.push_back(v);
        }
        if (p.size() != dim) throw InvalidInput("point set: expected " + std::to_string(dim) + " values in '" + line + "'");
        pts.push_back(std::move(p));
    }
    return {PointSet(dim, std::move(pts)), clamped};
}

void write_point_set(std::ostream& out, const PointSet& points) {
    out << points.dim() << '\n';
    char buf[32];
    for (const auto& p : points.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", p[i]);
            out << (i ? " " : "") << buf;
        }
        out << '\n';
    }
}

std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const PointSet& points) {
    const auto& pts = points.points();
    if (points.dim() == 2) {
        // Sorted by (x, y): an antichain iff y strictly decreases.
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (!(pts[i + 1][1] < pts[i][1])) return std::make_pair(i, i + 1);
        }
        return std::nullopt;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            bool below = true;
            for (std::size_t c = 0; c < points.dim() && below; ++c) below = pts[i][c] <= pts[j][c];
            if (below) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool is_cube_antichain(const PointSet& points) { return !find_comparable_pair(points).has_value(); }

double cantor_value(double x, double tolerance) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("cantor_value: x outside [0,1]");
    if (!(tolerance > 0.0)) throw InvalidInput("cantor_value: tolerance must be positive");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    // Each ternary digit fixes one binary digit of the result, so
    // ceil(log2(1/tol)) digits bound the truncation error by tol.
    const int digits = std::clamp(static_cast<int>(std::ceil(std::log2(1.0 / tolerance))), 1, 64);
    double result = 0.0;
    double weight = 0.5;

    int exp = 0;
    const double mant = std::frexp(x, &exp);
    const int shift = 53 - exp;  // x = mantissa * 2^-shift exactly
    if (shift <= 120) {
        using u128 = unsigned __int128;
        const u128 mask = (u128{1} << shift) - 1;
        u128 r = static_cast<u128>(std::ldexp(mant, 53));
        for (int i = 0; i < digits; ++i) {
            r *= 3;
            const auto digit = static_cast<int>(r >> shift);
            r &= mask;
            if (digit == 1) return result + weight;
            if (digit == 2) result += weight;
            weight *= 0.5;
        }
        return result;
    }
    // x < 2^-67: value below 2^-42, digits from long double suffice.
    long double y = x;
    for (int i = 0; i < digits; ++i) {
        y *= 3;
        const int digit = static_cast<int>(y);
        y -= digit;
        if (digit == 1) return result + weight;
        if (digit == 2) result += weight;
        weight *= 0.5;
    }
    return result;
}

double cantor_value_rational(std::int64_t num, std::int64_t den, double tolerance) {
    if (den <= 0 || num < 0 || num > den) throw InvalidInput("cantor_value: num/den outside [0,1]");
    if (!(tolerance > 0.0)) throw InvalidInput("cantor_value: tolerance must be positive");
    if (num == den) return 1.0;
    const int digits = std::clamp(static_cast<int>(std::ceil(std::log2(1.0 / tolerance))), 1, 64);
    double result = 0.0;
    double weight = 0.5;
    __int128 r = num;
    for (int i = 0; i < digits && r != 0; ++i) {
        r *= 3;
        const auto digit = static_cast<int>(r / den);
        r %= den;
        if (digit == 1) return result + weight;
        if (digit == 2) result += weight;
        weight *= 0.5;
    }
    return result;
}

PointSet StaircaseApprox::antichain_vertices() const {
    std::vector<Point> pts;
    // breakpoints come in (left, right) pairs per sloped piece
    for (std::size_t i = 0; i < breakpoints.size(); i += 2) pts.push_back({breakpoints[i].x, breakpoints[i].y});
    pts.push_back({breakpoints.back().x, breakpoints.back().y});
    return PointSet(2, std::move(pts));
}

StaircaseApprox staircase_points(int k) {
    if (k < 0) throw InvalidInput("staircase level must be non-negative");
    if (k > kMaxStaircaseLevel) {
        throw BudgetExceeded("staircase level", static_cast<std::uint64_t>(k), kMaxStaircaseLevel);
    }
    const std::uint64_t pieces = std::uint64_t{1} << k;
    std::uint64_t pow3 = 1;
    for (int i = 0; i < k; ++i) pow3 *= 3;
    const auto denom_x = static_cast<double>(pow3);
    const auto denom_y = static_cast<double>(pieces);

    StaircaseApprox s;
    s.level = k;
    s.breakpoints.reserve(2 * pieces);
    for (std::uint64_t j = 0; j < pieces; ++j) {
        // left end of the j-th surviving interval: binary digits of j read as
        // ternary digits 0/2
        std::uint64_t left = 0;
        std::uint64_t place = pow3 / 3;
        for (int b = k - 1; b >= 0; --b, place /= 3) {
            if ((j >> b) & 1U) left += 2 * place;
        }
        s.breakpoints.push_back({static_cast<double>(left) / denom_x, 1.0 - static_cast<double>(j) / denom_y});
        s.breakpoints.push_back(
            {static_cast<double>(left + 1) / denom_x, 1.0 - static_cast<double>(j + 1) / denom_y});
    }
    return s;
}

double polyline_length(std::span<const Vertex2> polyline) {
    CompensatedSum sum;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        sum.add(std::hypot(polyline[i + 1].x - polyline[i].x, polyline[i + 1].y - polyline[i].y));
    }
    return sum.value();
}

double staircase_length(int k) { return polyline_length(staircase_points(k).breakpoints); }

double staircase_length_closed_form(int k) {
    return 1.0 - std::pow(2.0 / 3.0, k) + std::sqrt(1.0 + std::pow(4.0 / 9.0, k));
}

int cell_index(double x, int m) {
    const auto j = static_cast<long long>(std::floor(static_cast<double>(m) * x));
    return static_cast<int>(std::clamp<long long>(j, 0, m - 1));
}

CoverReport grid_box_count(const PointSet& points, int m, bool keep_cells) {
    if (m < 1) throw InvalidInput("resolution m must be at least 1");
    CoverReport report;
    report.resolution = m;
    const auto n = static_cast<unsigned>(points.dim());
    const std::uint64_t pow = saturating_pow(static_cast<std::uint64_t>(m), n - 1);
    report.theoretical_bound = pow > UINT64_MAX / n ? UINT64_MAX : pow * n;

    std::vector<std::vector<int>> cells;
    cells.reserve(points.size());
    for (const auto& p : points.points()) {
        std::vector<int> c(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) c[i] = cell_index(p[i], m);
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    report.box_count = cells.size();
    if (keep_cells) report.cells = std::move(cells);
    return report;
}

std::pair<double, double> log_log_fit(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (!(denom > 0)) throw InvalidInput("log-log fit needs distinct abscissae");
    const double slope = (n * sxy - sx * sy) / denom;
    return {slope, (sy - slope * sx) / n};
}

DimensionFit box_dimension_estimate(const PointSet& points, std::span<const int> resolutions) {
    std::vector<int> ms(resolutions.begin(), resolutions.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (ms.size() < 3) throw InvalidInput("box dimension needs at least 3 distinct resolutions");
    if (points.empty()) throw InvalidInput("box dimension of an empty set is undefined");
    DimensionFit fit;
    std::vector<double> xs, ys;
    for (int m : ms) {
        fit.covers.push_back(grid_box_count(points, m));
        xs.push_back(m);
        ys.push_back(static_cast<double>(fit.covers.back().box_count));
    }
    std::tie(fit.slope, fit.intercept) = log_log_fit(xs, ys);
    return fit;
}

ProjectionBound projection_length_bound(std::span<const Vertex2> polyline) {
    if (polyline.empty()) throw InvalidInput("projection bound of an empty polyline");
    // The traced set is a (limit of) 2-cube antichain exactly when the
    // polyline runs monotonically: x non-decreasing and y non-increasing in
    // one of the two traversal directions.
    const bool reversed = polyline.front().x > polyline.back().x ||
                          (polyline.front().x == polyline.back().x && polyline.front().y < polyline.back().y);
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        Vertex2 a = polyline[i];
        Vertex2 b = polyline[i + 1];
        if (reversed) std::swap(a, b);
        if (b.x < a.x || b.y > a.y) {
            throw NotAnAntichain("polyline is not monotone decreasing between (" + std::to_string(a.x) + "," +
                                     std::to_string(a.y) + ") and (" + std::to_string(b.x) + "," +
                                     std::to_string(b.y) + ")",
                                 a, b);
        }
    }
    std::vector<std::pair<double, double>> xi, yi;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        const auto& a = polyline[i];
        const auto& b = polyline[i + 1];
        xi.emplace_back(std::min(a.x, b.x), std::max(a.x, b.x));
        yi.emplace_back(std::min(a.y, b.y), std::max(a.y, b.y));
    }
    ProjectionBound pb;
    pb.x_extent = merged_measure(std::move(xi));
    pb.y_extent = merged_measure(std::move(yi));
    pb.bound = pb.x_extent + pb.y_extent;
    pb.length = polyline_length(polyline);
    return pb;
}

ProjectionBound projection_length_bound(const StaircaseApprox& staircase) {
    const auto vertices = staircase.antichain_vertices();
    if (auto pair = find_comparable_pair(vertices)) {
        const auto& p = vertices[pair->first];
        const auto& q = vertices[pair->second];
        throw NotAnAntichain("staircase vertices are not an antichain", {p[0], p[1]}, {q[0], q[1]});
    }
    return projection_length_bound(staircase.breakpoints);
}

DiagonalProjectionReport diagonal_projection_check(const PointSet& points) {
    if (points.dim() != 2) throw InvalidInput("diagonal projection check needs a planar point set");
    std::vector<const Point*> parts[2];
    for (const auto& p : points.points()) parts[p[0] >= p[1] ? 0 : 1].push_back(&p);

    DiagonalProjectionReport report;
    for (int part = 0; part < 2; ++part) {
        const double sign = part == 0 ? 1.0 : -1.0;
        const auto& ps = parts[part];
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                const Point& p = *ps[i];
                const Point& q = *ps[j];
                const double dist = std::hypot(p[0] - q[0], p[1] - q[1]);
                const double dphi = std::abs(sign * ((p[0] - p[1]) - (q[0] - q[1])));
                const double ratio = dphi > 0 ? dist / dphi : std::numeric_limits<double>::infinity();
                if (ratio > report.worst_ratio || !report.worst_pair) {
                    report.worst_ratio = ratio;
                    report.worst_pair = std::make_pair(p, q);
                }
            }
        }
    }
    // One ulp-scale slack for the hypot/subtraction rounding on equal-ratio
    // pairs (one coordinate shared).
    report.ok = report.worst_ratio <= 1.0 + 1e-12;
    return report;
}

}  // namespace sperncube
