#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqcomm {

// Subset of {1..m} with no nontrivial solution to
//   x_1 + ... + x_r = r * x_{r+1}   for every arity 2 <= r <= k.
struct BehrendSet {
    int m = 0;
    int k = 2;
    std::vector<int> elements;  // sorted ascending
    std::string method;         // sphere-construction | exact-search | greedy

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
};

// A violating instance: x_1 + ... + x_r = r * mean with all members of the
// set and not all equal.
struct EquationViolation {
    int arity = 0;               // r
    std::vector<int> terms;      // x_1..x_r, ascending
    int mean = 0;                // x_{r+1}

    std::string describe() const;
};

struct Verdict {
    std::optional<EquationViolation> violation;

    bool valid() const { return !violation.has_value(); }
};

inline constexpr std::int64_t kDefaultVerifyBudget = 20'000'000;
inline constexpr std::int64_t kDefaultSearchBudget = 50'000'000;

// Exhaustive check of every arity r in 2..k over combinations with
// repetition. Throws BudgetExceeded when the tuple count is out of reach.
Verdict verify_no_nontrivial(const BehrendSet& x,
                             std::int64_t budget = kDefaultVerifyBudget);

// Spot check: `samples` random r-tuples per arity, seeded.
Verdict verify_random(const BehrendSet& x, std::int64_t samples, std::uint64_t seed);

// Digit/sphere construction: pick base q and digit bound d with k*(d-1) < q,
// keep the numbers in {1..m} whose base-q digits stay below d and whose
// digit vector lies on the most popular norm sphere. Scans a small (q, d)
// grid and returns the largest set found; never empty ({1} as a last resort).
BehrendSet sphere_construction(int m, int k);

// Maximum-cardinality valid subset of {1..m} by branch and bound with
// incremental violation checks. Returns the lexicographically least maximum
// set. Throws BudgetExceeded past the node budget.
BehrendSet exact_max_set(int m, int k, std::int64_t budget = kDefaultSearchBudget);

struct DensityReport {
    int size = 0;
    double bound = 0.0;  // m / exp(10 * sqrt(ln m * ln k))
    bool satisfied = false;
};

DensityReport density_report(const BehrendSet& x);

}  // namespace eqcomm
