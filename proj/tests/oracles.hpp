#pragma once

// Test-only brute-force oracles. These intentionally work on raw integer
// vectors and never call into the library code they are used to check.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

inline bool strictly_below(const Tuple& a, const Tuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

inline bool subset_below(const Tuple& a, const Tuple& b) {
    bool differ = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        differ |= a[i] != b[i];
    }
    return differ;
}

inline std::vector<Tuple> all_tuples(int n, int m) {
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(t);
        int i = n - 1;
        while (i >= 0 && ++t[static_cast<std::size_t>(i)] == m) t[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

struct ExhaustiveResult {
    std::size_t best = 0;
    std::uint64_t antichains_visited = 0;
};

// Walks every antichain (as an increasing index sequence) and records the
// largest size.
inline ExhaustiveResult exhaustive_max_antichain(const std::vector<Tuple>& elems,
                                                 const std::function<bool(const Tuple&, const Tuple&)>& below) {
    const std::size_t n = elems.size();
    std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            comparable[i][j] = below(elems[i], elems[j]) || below(elems[j], elems[i]);
    ExhaustiveResult res;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        ++res.antichains_visited;
        res.best = std::max(res.best, chosen.size());
        for (std::size_t x = from; x < n; ++x) {
            bool ok = true;
            for (std::size_t c : chosen) ok = ok && !comparable[c][x];
            if (!ok) continue;
            chosen.push_back(x);
            walk(x + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    return res;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
