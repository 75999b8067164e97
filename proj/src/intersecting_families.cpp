#include "sperncube/intersecting_families.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "sperncube/lp_surface.hpp"

namespace sperncube {

IntVector::IntVector(std::vector<int> coords, int ambient_m) : coords_(std::move(coords)), m_(ambient_m) {
    if (m_ < 1) throw InvalidInput("IntVector needs m >= 1");
    if (coords_.empty()) throw InvalidInput("IntVector needs n >= 1");
    for (int c : coords_)
        if (c < 0 || c > m_) throw InvalidInput("IntVector coordinate outside {0..m}");
}

std::string IntVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

std::vector<int> support(const IntVector& d) {
    std::vector<int> out;
    for (std::size_t i = 0; i < d.ambient_n(); ++i)
        if (d[i] > 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> ones(const IntVector& d) {
    std::vector<int> out;
    for (std::size_t i = 0; i < d.ambient_n(); ++i)
        if (d[i] == 1) out.push_back(static_cast<int>(i) + 1);
    return out;
}

void require_admissible(const FamilyParams& p) {
    if (!(p.n >= p.k && p.k > p.t && p.t >= 1))
        throw InvalidInput("need n >= k > t >= 1, got n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                           " t=" + std::to_string(p.t));
    if (p.m < 1) throw InvalidInput("need m >= 1");
}

bool in_H(const IntVector& d, int k) {
    return static_cast<int>(std::count_if(d.coords().begin(), d.coords().end(), [](int c) { return c > 0; })) == k;
}

Family::Family(FamilyParams params, std::vector<IntVector> members)
    : params_(params), members_(std::move(members)) {
    for (const auto& d : members_) {
        if (static_cast<int>(d.ambient_n()) != params_.n || d.ambient_m() != params_.m)
            throw InvalidInput("family member " + d.to_string() + " has the wrong shape");
        if (!in_H(d, params_.k))
            throw InvalidInput("family member " + d.to_string() + " does not have support size k");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::size_t agreeing_positions(const IntVector& d, const IntVector& e) {
    if (d.ambient_n() != e.ambient_n()) throw InvalidInput("vectors of different length");
    std::size_t count = 0;
    for (std::size_t i = 0; i < d.ambient_n(); ++i)
        if (d[i] > 0 && d[i] == e[i]) ++count;
    return count;
}

bool is_k_uniform_t_intersecting(const Family& family) {
    const auto& ms = family.members();
    const auto t = static_cast<std::size_t>(family.params().t);
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (agreeing_positions(ms[a], ms[b]) < t) return false;
    return true;
}

std::vector<std::pair<int, int>> fixed_positive_coordinates(const Family& family) {
    std::vector<std::pair<int, int>> out;
    if (family.empty()) return out;
    const auto& ms = family.members();
    for (int i = 0; i < family.params().n; ++i) {
        const int v = ms.front()[i];
        if (v == 0) continue;
        if (std::all_of(ms.begin(), ms.end(), [&](const IntVector& d) { return d[i] == v; }))
            out.emplace_back(i + 1, v);
    }
    return out;
}

bool is_trivial(const Family& family) {
    if (family.empty()) return true;
    return static_cast<int>(fixed_positive_coordinates(family).size()) >= family.params().t;
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Calls f(coords) for every member of H_{n,k,m} in lexicographic order.
template <class F>
void for_each_H(int n, int k, int m, F&& f) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, int i, int remaining) -> void {
        if (i == n) {
            if (remaining == 0) f(c);
            return;
        }
        if (n - i > remaining) {
            c[i] = 0;
            self(self, i + 1, remaining);
        }
        if (remaining > 0) {
            for (int v = 1; v <= m; ++v) {
                c[i] = v;
                self(self, i + 1, remaining - 1);
            }
            c[i] = 0;
        }
    };
    rec(rec, 0, k);
}

void check_h_budget(int n, int k, int m, std::uint64_t budget) {
    const std::uint64_t size = h_size(n, k, m);
    if (size > budget) throw BudgetExceeded("H_{n,k,m} enumeration", size, budget);
}

std::size_t count_in(const std::vector<int>& c, int lo, int hi) {
    std::size_t r = 0;
    for (int i = lo; i <= hi; ++i)
        if (c[static_cast<std::size_t>(i - 1)] == 1) ++r;
    return r;
}

}  // namespace

std::uint64_t h_size(int n, int k, int m) {
    if (n < 1 || k < 0 || k > n || m < 1) throw InvalidInput("h_size needs n >= k >= 0, n >= 1, m >= 1");
    const std::uint64_t b = binomial_u64(n, k);
    const std::uint64_t p = saturating_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(k));
    if (b != 0 && p > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return b * p;
}

std::vector<IntVector> enumerate_H(int n, int k, int m, std::uint64_t budget) {
    check_h_budget(n, k, m, budget);
    std::vector<IntVector> out;
    for_each_H(n, k, m, [&](const std::vector<int>& c) { out.emplace_back(c, m); });
    return out;
}

Family build_F1(const FamilyParams& p, std::uint64_t budget) {
    require_admissible(p);
    check_h_budget(p.n, p.k, p.m, budget);
    const int hi = std::min(p.k + 1, p.n);
    std::vector<IntVector> members;
    for_each_H(p.n, p.k, p.m, [&](const std::vector<int>& c) {
        const std::size_t low = count_in(c, 1, p.t);
        const std::size_t mid = count_in(c, p.t + 1, hi);
        const bool first = low == static_cast<std::size_t>(p.t) && mid > 0;
        const bool second = low + 1 == static_cast<std::size_t>(p.t) && mid == static_cast<std::size_t>(hi - p.t);
        if (first || second) members.emplace_back(c, p.m);
    });
    return Family(p, std::move(members));
}

Family build_F2(const FamilyParams& p, std::uint64_t budget) {
    require_admissible(p);
    check_h_budget(p.n, p.k, p.m, budget);
    const int hi = std::min(p.t + 2, p.n);
    std::vector<IntVector> members;
    for_each_H(p.n, p.k, p.m, [&](const std::vector<int>& c) {
        if (count_in(c, 1, hi) >= static_cast<std::size_t>(p.t + 1)) members.emplace_back(c, p.m);
    });
    return Family(p, std::move(members));
}

std::vector<GrowthRow> family_size_growth(int n, int k, int t, std::span<const int> m_list, std::uint64_t budget) {
    std::vector<GrowthRow> rows;
    for (int m : m_list) {
        GrowthRow row;
        row.m = m;
        const FamilyParams p{n, k, t, m};
        require_admissible(p);
        try {
            row.f1_size = build_F1(p, budget).size();
            row.f2_size = build_F2(p, budget).size();
            const double scale = std::pow(static_cast<double>(m), k - t - 1);
            row.ratio = static_cast<double>(std::max(row.f1_size, row.f2_size)) / scale;
        } catch (const BudgetExceeded& e) {
            row.skipped = true;
            row.notice = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::size_t words = 0;
    std::size_t t = 0;
    int n = 0;
    const std::vector<IntVector>* vertices = nullptr;
    std::vector<Bits> adjacency;
    std::vector<std::vector<Bits>> value_mask;  // [i][v]: vertices with d_i == v
    std::uint64_t node_cap = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    static std::size_t popcount(const Bits& b) {
        std::size_t r = 0;
        for (auto w : b) r += static_cast<std::size_t>(__builtin_popcountll(w));
        return r;
    }

    static bool subset_of(const Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i]) return false;
        return true;
    }

    // Number of coordinates fixed across `current` that no candidate breaks.
    std::size_t locked_coordinates(const Bits& cand, bool& nontrivial_now) const {
        const auto& vs = *vertices;
        std::size_t fixed = 0;
        std::size_t locked = 0;
        const auto& first = vs[current.front()];
        for (int i = 0; i < n; ++i) {
            const int v = first[i];
            if (v == 0) continue;
            bool all = true;
            for (std::size_t idx : current)
                if (vs[idx][i] != v) {
                    all = false;
                    break;
                }
            if (!all) continue;
            ++fixed;
            if (subset_of(cand, value_mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])) ++locked;
        }
        nontrivial_now = fixed < t;
        return locked;
    }

    void dfs(const Bits& cand) {
        if (aborted) return;
        if (++nodes > node_cap) {
            aborted = true;
            return;
        }
        const std::size_t cand_size = popcount(cand);
        if (!current.empty()) {
            bool nontrivial_now = false;
            const std::size_t locked = locked_coordinates(cand, nontrivial_now);
            if (nontrivial_now && current.size() > best.size()) best = current;
            if (locked >= t) return;
        }
        if (current.size() + cand_size <= best.size()) return;
        Bits rest = cand;
        std::size_t remaining = cand_size;
        for (std::size_t w = 0; w < words; ++w) {
            while (rest[w]) {
                if (current.size() + remaining <= best.size()) return;
                const int bit = __builtin_ctzll(rest[w]);
                rest[w] &= rest[w] - 1;
                --remaining;
                const std::size_t v = w * 64 + static_cast<std::size_t>(bit);
                Bits next(words);
                for (std::size_t j = 0; j < words; ++j) next[j] = rest[j] & adjacency[v][j];
                current.push_back(v);
                dfs(next);
                current.pop_back();
                if (aborted) return;
            }
        }
    }
};

}  // namespace

BruteForceReport brute_force_max_nontrivial(const FamilyParams& params, std::uint64_t vertex_budget,
                                            std::uint64_t node_cap) {
    require_admissible(params);
    const std::uint64_t hs = h_size(params.n, params.k, params.m);
    if (hs > vertex_budget) throw BudgetExceeded("clique search vertices", hs, vertex_budget);
    const auto vertices = enumerate_H(params.n, params.k, params.m, vertex_budget);
    const std::size_t nv = vertices.size();

    CliqueSearch s;
    s.words = (nv + 63) / 64;
    s.t = static_cast<std::size_t>(params.t);
    s.n = params.n;
    s.vertices = &vertices;
    s.node_cap = node_cap;
    s.adjacency.assign(nv, Bits(s.words, 0));
    s.value_mask.assign(static_cast<std::size_t>(params.n),
                        std::vector<Bits>(static_cast<std::size_t>(params.m) + 1, Bits(s.words, 0)));
    for (std::size_t a = 0; a < nv; ++a) {
        for (int i = 0; i < params.n; ++i)
            s.value_mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(vertices[a][i])][a / 64] |=
                std::uint64_t{1} << (a % 64);
        for (std::size_t b = a + 1; b < nv; ++b)
            if (agreeing_positions(vertices[a], vertices[b]) >= s.t) {
                s.adjacency[a][b / 64] |= std::uint64_t{1} << (b % 64);
                s.adjacency[b][a / 64] |= std::uint64_t{1} << (a % 64);
            }
    }
    Bits all(s.words, 0);
    for (std::size_t a = 0; a < nv; ++a) all[a / 64] |= std::uint64_t{1} << (a % 64);
    s.dfs(all);

    BruteForceReport report;
    report.params = params;
    report.nodes = std::min(s.nodes, node_cap);
    report.complete = !s.aborted;
    report.vertices = nv;

    std::vector<IntVector> members;
    for (std::size_t idx : s.best) members.push_back(vertices[idx]);
    report.witness = Family(params, std::move(members));

    const Family f1 = build_F1(params, vertex_budget);
    const Family f2 = build_F2(params, vertex_budget);
    report.construction_size = std::max(f1.size(), f2.size());
    if (!report.complete) {
        for (const Family* f : {&f1, &f2})
            if (f->size() > report.witness.size() && is_k_uniform_t_intersecting(*f) && !is_trivial(*f))
                report.witness = *f;
    }
    report.size = report.witness.size();
    report.matches_construction = report.size == report.construction_size;
    return report;
}

std::string to_json(const BruteForceReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.params.n;
    j["k"] = r.params.k;
    j["t"] = r.params.t;
    j["m"] = r.params.m;
    j["size"] = r.size;
    j["complete"] = r.complete;
    j["nodes"] = r.nodes;
    j["vertices"] = r.vertices;
    j["construction_size"] = r.construction_size;
    j["matches_construction"] = r.matches_construction;
    auto& w = j["witness"] = nlohmann::ordered_json::array();
    for (const auto& d : r.witness.members()) w.push_back(d.coords());
    return j.dump();
}

NktPointSet::NktPointSet(FamilyParams p, std::vector<Point> points)
    : n_(p.n), k_(p.k), t_(p.t), points_(std::move(points)) {
    if (!(n_ >= k_ && k_ >= t_ && t_ >= 1)) throw InvalidInput("(n,k,t)-set needs n >= k >= t >= 1");
    for (const auto& x : points_) {
        if (static_cast<int>(x.size()) != n_) throw InvalidInput("point has the wrong dimension");
        int positive = 0;
        for (double v : x) {
            if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("coordinate outside [0,1]");
            if (v > 0.0) ++positive;
        }
        if (positive != k_) throw InvalidInput("point must have exactly k positive coordinates");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool satisfies_nkt_condition(const NktPointSet& set) {
    const auto& ps = set.points();
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            int agree = 0;
            for (int i = 0; i < set.n(); ++i)
                if (ps[a][i] > 0.0 && ps[a][i] == ps[b][i]) ++agree;
            if (agree < set.t()) return false;
        }
    return true;
}

bool is_trivial_nkt(const NktPointSet& set) {
    if (set.points().empty()) return true;
    const auto& ps = set.points();
    int fixed = 0;
    for (int i = 0; i < set.n(); ++i) {
        const double v = ps.front()[i];
        if (v > 0.0 && std::all_of(ps.begin(), ps.end(), [&](const Point& x) { return x[i] == v; })) ++fixed;
    }
    return fixed >= set.t();
}

std::optional<double> nkt_separation(const NktPointSet& set) {
    std::optional<double> best;
    const auto& ps = set.points();
    for (int i = 0; i < set.n(); ++i) {
        std::vector<double> vals;
        for (const auto& x : ps)
            if (x[i] > 0.0) vals.push_back(x[i]);
        std::sort(vals.begin(), vals.end());
        for (std::size_t j = 1; j < vals.size(); ++j) {
            const double gap = vals[j] - vals[j - 1];
            if (gap > 0.0 && (!best || gap < *best)) best = gap;
        }
    }
    return best;
}

IntVector cover_vector(const Point& x, int m) {
    if (m < 1) throw InvalidInput("cover resolution must be >= 1");
    std::vector<int> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || x[i] > 1.0) throw InvalidInput("coordinate outside [0,1]");
        if (x[i] == 0.0) continue;
        const auto cell = static_cast<long long>(std::floor(static_cast<double>(m) * x[i])) + 1;
        c[i] = static_cast<int>(std::min<long long>(cell, m));
    }
    return IntVector(std::move(c), m);
}

Family grid_cover_family(const NktPointSet& set, int m) {
    std::vector<IntVector> members;
    members.reserve(set.size());
    for (const auto& x : set.points()) members.push_back(cover_vector(x, m));
    return Family(FamilyParams{set.n(), set.k(), set.t(), m}, std::move(members));
}

NktDimensionFit nkt_box_dimension(const NktPointSet& set, std::span<const int> m_list) {
    if (set.points().empty()) throw InvalidInput("dimension estimate of an empty set");
    std::vector<int> ms(m_list.begin(), m_list.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (ms.size() < 3) throw InvalidInput("dimension estimate needs at least 3 distinct resolutions");
    NktDimensionFit fit;
    std::vector<double> xs, ys;
    for (int m : ms) {
        if (m < 2) throw InvalidInput("resolutions must be >= 2");
        const std::size_t size = grid_cover_family(set, m).size();
        fit.sizes.emplace_back(m, size);
        xs.push_back(static_cast<double>(m));
        ys.push_back(static_cast<double>(size));
    }
    fit.slope = log_log_fit(xs, ys).first;
    return fit;
}

double ekr_measure_bound(int n, int k, int t) {
    if (!(n >= k && k >= t && t >= 0)) throw InvalidInput("need n >= k >= t >= 0");
    return static_cast<double>(binomial_u64(n - t, k - t)) * sigma(k - t);
}

NktPointSet sample_trivial_nkt_set(int n, int k, int t, std::span<const double> alphas, std::size_t count,
                                   std::uint64_t seed) {
    if (!(n >= k && k >= t && t >= 1)) throw InvalidInput("need n >= k >= t >= 1");
    if (static_cast<int>(alphas.size()) != t) throw InvalidInput("need exactly t fixed values");
    for (double a : alphas)
        if (!(a > 0.0 && a <= 1.0)) throw InvalidInput("fixed values must lie in (0,1]");
    std::mt19937_64 rng(seed);
    const auto uniform_open_closed = [&] { return static_cast<double>((rng() >> 11) + 1) * 0x1p-53; };
    std::vector<Point> points;
    points.reserve(count);
    std::vector<int> free_idx;
    for (std::size_t s = 0; s < count; ++s) {
        Point x(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < t; ++i) x[static_cast<std::size_t>(i)] = alphas[static_cast<std::size_t>(i)];
        free_idx.clear();
        for (int i = t; i < n; ++i) free_idx.push_back(i);
        for (int j = 0; j < k - t; ++j) {
            const auto range = static_cast<std::uint64_t>(free_idx.size() - static_cast<std::size_t>(j));
            const auto pick = static_cast<std::size_t>(j) + static_cast<std::size_t>(rng() % range);
            std::swap(free_idx[static_cast<std::size_t>(j)], free_idx[pick]);
            x[static_cast<std::size_t>(free_idx[static_cast<std::size_t>(j)])] = uniform_open_closed();
        }
        points.push_back(std::move(x));
    }
    return NktPointSet(FamilyParams{n, k, t, 1}, std::move(points));
}

void write_family(std::ostream& out, const Family& family) {
    const auto& p = family.params();
    out << p.n << ' ' << p.k << ' ' << p.t << ' ' << p.m << '\n';
    for (const auto& d : family.members()) {
        for (std::size_t i = 0; i < d.ambient_n(); ++i) out << (i ? " " : "") << d[i];
        out << '\n';
    }
}

Family read_family(std::istream& in) {
    FamilyParams p;
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header(line);
    if (!(header >> p.n >> p.k >> p.t >> p.m)) throw InvalidInput("family header must be \"n k t m\"");
    if (p.n < 1 || p.k < 0 || p.k > p.n || p.t < 0 || p.m < 1) throw InvalidInput("bad family header");
    std::vector<IntVector> members;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<int> c;
        int v;
        while (row >> v) c.push_back(v);
        if (!row.eof()) throw InvalidInput("non-integer entry in family row: " + line);
        if (static_cast<int>(c.size()) != p.n) throw InvalidInput("family row has the wrong length: " + line);
        members.emplace_back(std::move(c), p.m);
    }
    return Family(p, std::move(members));
}

}  // namespace sperncube
