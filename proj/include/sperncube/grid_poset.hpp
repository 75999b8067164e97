#pragma once

// Discrete Sperner theory on the integer grid {0,...,m-1}^n under strict
// componentwise dominance, plus the Boolean lattice case.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sperncube/errors.hpp"

namespace sperncube {

// Integer n-tuple with every coordinate in {0, ..., m-1}.
class GridVector {
public:
    GridVector(std::vector<int> coords, int ambient_m);

    std::size_t ambient_n() const noexcept { return coords_.size(); }
    int ambient_m() const noexcept { return m_; }
    const std::vector<int>& coords() const noexcept { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }

    int min_coord() const;
    int max_coord() const;

    std::string to_string() const;

    friend bool operator==(const GridVector&, const GridVector&) = default;
    friend auto operator<=>(const GridVector& a, const GridVector& b) {
        return a.coords_ <=> b.coords_;
    }

private:
    std::vector<int> coords_;
    int m_;
};

// A diagonal run r, r+1, r+2*1, ... (1 = all-ones vector) starting at a tuple
// with a zero coordinate and ending when some coordinate reaches m-1.
struct Chain {
    std::vector<GridVector> elements;

    const GridVector& representative() const { return elements.front(); }
    std::size_t size() const noexcept { return elements.size(); }
    bool contains(const GridVector& d) const;

    friend bool operator==(const Chain&, const Chain&) = default;
};

enum class AntichainMethod { construction, matching, exhaustive };

std::string to_string(AntichainMethod method);

struct AntichainCertificate {
    std::size_t size = 0;
    std::vector<GridVector> witness;  // sorted lexicographically
    AntichainMethod method = AntichainMethod::construction;
};

// d_i < e_i for every i. Throws InvalidInput on dimension mismatch.
bool strict_dominates(const GridVector& d, const GridVector& e);

// d_i <= e_i for every i and d != e (subset order on 0/1 vectors).
bool weakly_dominates(const GridVector& d, const GridVector& e);

bool is_strict_antichain(std::span<const GridVector> family);
bool is_weak_antichain(std::span<const GridVector> family);

Chain canonical_chain(const GridVector& d);

// Number of grid points m^n, or BudgetExceeded when it exceeds `budget`.
std::uint64_t checked_grid_size(int n, int m, std::uint64_t budget);

// All tuples of {0..m-1}^n in lexicographic order.
std::vector<GridVector> enumerate_grid(int n, int m,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Partition of the grid into diagonal chains, one per tuple with a zero
// coordinate, ordered by representative.
std::vector<Chain> chain_partition(int n, int m,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// Closed-form counts: m^n - (m-1)^n chains, at most n*m^(n-1).
std::uint64_t chain_count(int n, int m);
std::uint64_t chain_count_bound(int n, int m);

AntichainCertificate zero_coordinate_antichain(int n, int m,
                                               std::uint64_t budget = kDefaultEnumerationBudget);

// Element limit for the matching-based exact optima (quadratic comparability
// graph).
inline constexpr std::uint64_t kDefaultMatchingBudget = 4096;

// Above this many poset elements the witness comes straight from the Koenig
// cover instead of the lexicographically least maximum antichain search.
inline constexpr std::size_t kLexWitnessLimit = 1024;

// Exact maximum antichain under strict dominance via minimum chain cover
// (|grid| minus a maximum matching of the comparability graph).
AntichainCertificate max_strict_antichain_size(int n, int m,
                                               std::uint64_t budget = kDefaultMatchingBudget);

// Exact maximum antichain of the subset lattice of [n] (0/1 vectors under
// weak dominance), computed the same way.
AntichainCertificate boolean_max_antichain_size(int n, std::uint64_t budget = kDefaultMatchingBudget);

// Finite strict order given by successor lists: successors[i] holds every j
// with i < j. The relation must already be transitively closed.
using StrictOrder = std::vector<std::vector<std::size_t>>;

// Width (maximum antichain size) of the suborder induced by `active`, as the
// element count minus a maximum matching (Dilworth / Fulkerson).
std::size_t poset_width(const StrictOrder& order, const std::vector<bool>& active);

// Indices of a maximum antichain. When order.size() <= kLexWitnessLimit this
// is the lexicographically least one (indices assumed to follow the caller's
// preferred element order); beyond that it is the Koenig-cover antichain.
std::vector<std::size_t> maximum_antichain(const StrictOrder& order);

// Text format: header "n m" then one tuple per line.
void write_grid_family(std::ostream& out, int n, int m, std::span<const GridVector> family);
std::vector<GridVector> read_grid_family(std::istream& in);

}  // namespace sperncube
