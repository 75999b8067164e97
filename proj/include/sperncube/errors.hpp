#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sperncube {

// Malformed or out-of-domain arguments (dimension mismatch, coordinate out
// of range, parameter guard violated).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration or search would exceed its configured budget. Thrown instead
// of silently truncating.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t budget)
        : std::runtime_error(what + " (requested " + std::to_string(requested) + ", budget " +
                             std::to_string(budget) + ")"),
          requested_(requested),
          budget_(budget) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t requested_;
    std::uint64_t budget_;
};

// A computed object failed one of the bounds it is supposed to satisfy.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Default limit on the number of grid points / family members a single
// enumeration may materialize.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

// Saturating integer power, used for budget checks on m^n style counts.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace sperncube
