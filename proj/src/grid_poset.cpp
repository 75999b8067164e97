#include "sperncube/grid_poset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "sperncube/matching.hpp"

namespace sperncube {

GridVector::GridVector(std::vector<int> coords, int ambient_m) : coords_(std::move(coords)), m_(ambient_m) {
    if (coords_.empty()) throw InvalidInput("GridVector: ambient_n must be positive");
    if (m_ < 1) throw InvalidInput("GridVector: ambient_m must be positive");
    for (int c : coords_) {
        if (c < 0 || c > m_ - 1) {
            throw InvalidInput("GridVector: coordinate " + std::to_string(c) + " outside [0, " +
                               std::to_string(m_ - 1) + "]");
        }
    }
}

int GridVector::min_coord() const { return *std::min_element(coords_.begin(), coords_.end()); }
int GridVector::max_coord() const { return *std::max_element(coords_.begin(), coords_.end()); }

std::string GridVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords_[i]);
    }
    return s + ')';
}

bool Chain::contains(const GridVector& d) const {
    return std::find(elements.begin(), elements.end(), d) != elements.end();
}

std::string to_string(AntichainMethod method) {
    switch (method) {
        case AntichainMethod::construction: return "construction";
        case AntichainMethod::matching: return "matching";
        case AntichainMethod::exhaustive: return "exhaustive";
    }
    return "unknown";
}

namespace {

void require_same_dimension(const GridVector& d, const GridVector& e) {
    if (d.ambient_n() != e.ambient_n()) {
        throw InvalidInput("dimension mismatch: " + d.to_string() + " vs " + e.to_string());
    }
}

template <class Rel>
bool no_related_pair(std::span<const GridVector> family, Rel&& related) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i != j && related(family[i], family[j])) return false;
        }
    }
    return true;
}

template <class Less>
StrictOrder build_order(const std::vector<GridVector>& elems, Less&& less) {
    StrictOrder order(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i != j && less(elems[i], elems[j])) order[i].push_back(j);
        }
    }
    return order;
}

AntichainCertificate certificate_from(const std::vector<GridVector>& elems,
                                      const std::vector<std::size_t>& indices, AntichainMethod method) {
    AntichainCertificate cert;
    cert.method = method;
    for (std::size_t i : indices) cert.witness.push_back(elems[i]);
    std::sort(cert.witness.begin(), cert.witness.end());
    cert.size = cert.witness.size();
    return cert;
}

}  // namespace

bool strict_dominates(const GridVector& d, const GridVector& e) {
    require_same_dimension(d, e);
    for (std::size_t i = 0; i < d.ambient_n(); ++i) {
        if (!(d[i] < e[i])) return false;
    }
    return true;
}

bool weakly_dominates(const GridVector& d, const GridVector& e) {
    require_same_dimension(d, e);
    for (std::size_t i = 0; i < d.ambient_n(); ++i) {
        if (d[i] > e[i]) return false;
    }
    return d != e;
}

bool is_strict_antichain(std::span<const GridVector> family) {
    return no_related_pair(family, strict_dominates);
}

bool is_weak_antichain(std::span<const GridVector> family) {
    return no_related_pair(family, weakly_dominates);
}

Chain canonical_chain(const GridVector& d) {
    const int lo = d.min_coord();
    const int spread = d.max_coord() - lo;
    const int length = (d.ambient_m() - 1) - spread + 1;
    Chain chain;
    chain.elements.reserve(static_cast<std::size_t>(length));
    for (int j = 0; j < length; ++j) {
        std::vector<int> c(d.coords());
        for (int& x : c) x = x - lo + j;
        chain.elements.emplace_back(std::move(c), d.ambient_m());
    }
    return chain;
}

std::uint64_t checked_grid_size(int n, int m, std::uint64_t budget) {
    if (n < 1) throw InvalidInput("n must be at least 1");
    if (m < 1) throw InvalidInput("m must be at least 1");
    const std::uint64_t size = saturating_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n));
    if (size > budget) throw BudgetExceeded("grid {0.." + std::to_string(m - 1) + "}^" + std::to_string(n), size, budget);
    return size;
}

std::vector<GridVector> enumerate_grid(int n, int m, std::uint64_t budget) {
    const std::uint64_t size = checked_grid_size(n, m, budget);
    std::vector<GridVector> grid;
    grid.reserve(size);
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        grid.emplace_back(c, m);
        for (int i = n - 1; i >= 0; --i) {
            if (++c[static_cast<std::size_t>(i)] < m) break;
            c[static_cast<std::size_t>(i)] = 0;
        }
    }
    return grid;
}

std::vector<Chain> chain_partition(int n, int m, std::uint64_t budget) {
    std::vector<Chain> chains;
    for (const auto& d : enumerate_grid(n, m, budget)) {
        if (d.min_coord() == 0) chains.push_back(canonical_chain(d));
    }
    return chains;
}

std::uint64_t chain_count(int n, int m) {
    return saturating_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n)) -
           saturating_pow(static_cast<std::uint64_t>(m - 1), static_cast<unsigned>(n));
}

std::uint64_t chain_count_bound(int n, int m) {
    const std::uint64_t p = saturating_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n - 1));
    return p > UINT64_MAX / static_cast<std::uint64_t>(n) ? UINT64_MAX : p * static_cast<std::uint64_t>(n);
}

AntichainCertificate zero_coordinate_antichain(int n, int m, std::uint64_t budget) {
    AntichainCertificate cert;
    cert.method = AntichainMethod::construction;
    for (auto& d : enumerate_grid(n, m, budget)) {
        if (d.min_coord() == 0) cert.witness.push_back(std::move(d));
    }
    cert.size = cert.witness.size();
    return cert;
}

std::size_t poset_width(const StrictOrder& order, const std::vector<bool>& active) {
    std::vector<std::size_t> local(order.size(), kUnmatched);
    std::size_t count = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (active[i]) local[i] = count++;
    }
    BipartiteGraph g(count, count);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!active[i]) continue;
        for (std::size_t j : order[i]) {
            if (active[j]) g.add_edge(local[i], local[j]);
        }
    }
    return count - maximum_matching(g).size;
}

std::vector<std::size_t> maximum_antichain(const StrictOrder& order) {
    const std::size_t n = order.size();
    if (n == 0) return {};

    if (n > kLexWitnessLimit) {
        BipartiteGraph g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : order[i]) g.add_edge(i, j);
        }
        const auto matching = maximum_matching(g);
        const auto cover = minimum_vertex_cover(g, matching);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i) {
            if (!cover.left[i] && !cover.right[i]) out.push_back(i);
        }
        return out;
    }

    std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : order[i]) comparable[i][j] = comparable[j][i] = true;
    }

    // Greedy over indices: keep x iff some maximum antichain extends the
    // current choice by x and elements after x only.
    std::vector<bool> allowed(n, true);
    std::size_t remaining = poset_width(order, allowed);
    std::vector<std::size_t> chosen;
    for (std::size_t x = 0; x < n && remaining > 0; ++x) {
        if (!allowed[x]) continue;
        std::vector<bool> next(allowed);
        for (std::size_t y = 0; y <= x; ++y) next[y] = false;
        for (std::size_t y = x + 1; y < n; ++y) {
            if (comparable[x][y]) next[y] = false;
        }
        if (1 + poset_width(order, next) == remaining) {
            chosen.push_back(x);
            allowed = std::move(next);
            --remaining;
        } else {
            allowed[x] = false;
        }
    }
    return chosen;
}

AntichainCertificate max_strict_antichain_size(int n, int m, std::uint64_t budget) {
    const auto grid = enumerate_grid(n, m, budget);
    const auto order = build_order(grid, strict_dominates);
    auto cert = certificate_from(grid, maximum_antichain(order), AntichainMethod::matching);
    if (!is_strict_antichain(cert.witness)) {
        throw InvariantViolation("maximum antichain witness is not a strict antichain");
    }
    return cert;
}

AntichainCertificate boolean_max_antichain_size(int n, std::uint64_t budget) {
    const auto cube = enumerate_grid(n, 2, budget);
    const auto order = build_order(cube, weakly_dominates);
    auto cert = certificate_from(cube, maximum_antichain(order), AntichainMethod::matching);
    if (!is_weak_antichain(cert.witness)) {
        throw InvariantViolation("Boolean maximum antichain witness is not an antichain");
    }
    return cert;
}

void write_grid_family(std::ostream& out, int n, int m, std::span<const GridVector> family) {
    out << n << ' ' << m << '\n';
    for (const auto& d : family) {
        if (d.ambient_n() != static_cast<std::size_t>(n)) throw InvalidInput("family member has wrong dimension");
        for (std::size_t i = 0; i < d.ambient_n(); ++i) out << (i ? " " : "") << d[i];
        out << '\n';
    }
}

std::vector<GridVector> read_grid_family(std::istream& in) {
    int n = 0;
    int m = 0;
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 1 || m < 1) throw InvalidInput("grid family: bad header '" + line + "'");
    std::vector<GridVector> family;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<int> c;
        int v = 0;
        while (row >> v) c.push_back(v);
        if (!row.eof()) throw InvalidInput("grid family: non-integer token in '" + line + "'");
        if (c.size() != static_cast<std::size_t>(n)) throw InvalidInput("grid family: expected " + std::to_string(n) + " entries in '" + line + "'");
        family.emplace_back(std::move(c), m);
    }
    return family;
}

}  // namespace sperncube
