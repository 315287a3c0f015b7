#include "eqcomm/behrend.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "eqcomm/graph.hpp"  // BudgetExceeded

namespace eqcomm {

bool BehrendSet::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

std::string EquationViolation::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i];
    }
    os << " = " << arity << " * " << mean;
    return os.str();
}

namespace {

// Walks combinations with repetition of `arity` elements; calls visit with
// the (ascending) index tuple. visit returns false to abort.
template <typename Visit>
bool for_each_multiset(int n, int arity, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
        if (!visit(idx)) return false;
        int pos = arity - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) return true;
        int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < arity; ++i) idx[static_cast<std::size_t>(i)] = next;
    }
}

std::int64_t multisets_count(std::int64_t n, int r) {
    // C(n + r - 1, r), saturating
    std::int64_t num = 1;
    for (int i = 1; i <= r; ++i) {
        num = num * (n + r - i);
        if (num < 0 || num > (std::int64_t{1} << 62)) return std::int64_t{1} << 62;
        num /= i;
    }
    return num;
}

std::optional<EquationViolation> check_tuple(const std::vector<int>& elems,
                                             const std::vector<int>& idx, int r) {
    std::int64_t sum = 0;
    for (int i : idx) sum += elems[static_cast<std::size_t>(i)];
    if (sum % r != 0) return std::nullopt;
    int mean = static_cast<int>(sum / r);
    if (!std::binary_search(elems.begin(), elems.end(), mean)) return std::nullopt;
    bool all_equal = true;
    for (int i : idx)
        if (elems[static_cast<std::size_t>(i)] != mean) all_equal = false;
    if (all_equal) return std::nullopt;
    EquationViolation v;
    v.arity = r;
    for (int i : idx) v.terms.push_back(elems[static_cast<std::size_t>(i)]);
    v.mean = mean;
    return v;
}

}  // namespace

Verdict verify_no_nontrivial(const BehrendSet& x, std::int64_t budget) {
    const auto& elems = x.elements;
    int n = static_cast<int>(elems.size());
    if (n <= 1) return {};
    std::int64_t total = 0;
    for (int r = 2; r <= x.k; ++r) total += multisets_count(n, r);
    if (total > budget)
        throw BudgetExceeded("verify_no_nontrivial: " + std::to_string(total) +
                             " tuples exceed budget");
    Verdict verdict;
    for (int r = 2; r <= x.k && verdict.valid(); ++r) {
        for_each_multiset(n, r, [&](const std::vector<int>& idx) {
            if (auto v = check_tuple(elems, idx, r)) {
                verdict.violation = std::move(v);
                return false;
            }
            return true;
        });
    }
    return verdict;
}

Verdict verify_random(const BehrendSet& x, std::int64_t samples, std::uint64_t seed) {
    const auto& elems = x.elements;
    if (elems.size() <= 1) return {};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> arity(2, x.k);
    for (std::int64_t s = 0; s < samples; ++s) {
        int r = arity(rng);
        std::vector<int> idx(static_cast<std::size_t>(r));
        for (auto& i : idx) i = static_cast<int>(pick(rng));
        std::sort(idx.begin(), idx.end());
        if (auto v = check_tuple(elems, idx, r)) return Verdict{std::move(v)};
    }
    return {};
}

BehrendSet sphere_construction(int m, int k) {
    if (m < 1) throw std::invalid_argument("sphere_construction: m must be >= 1");
    if (k < 2) throw std::invalid_argument("sphere_construction: k must be >= 2");
    std::vector<int> best{1};
    // Digit bound d forces k*(d-1) < q, so the defining equation adds
    // digit-wise without carries and the sphere argument applies.
    for (int q = 2; q <= std::min(m + 1, std::max(2 * k + 2, 32)); ++q) {
        int dmax = (q - 1) / k + 1;
        for (int d = 2; d <= dmax; ++d) {
            std::map<long long, std::vector<int>> by_norm;
            for (int value = 1; value <= m; ++value) {
                int v = value;
                long long norm = 0;
                bool ok = true;
                while (v > 0) {
                    int digit = v % q;
                    if (digit >= d) {
                        ok = false;
                        break;
                    }
                    norm += static_cast<long long>(digit) * digit;
                    v /= q;
                }
                if (ok) by_norm[norm].push_back(value);
            }
            for (auto& [norm, values] : by_norm) {
                if (norm == 0) continue;  // the zero vector alone
                if (values.size() > best.size()) best = values;
            }
        }
    }
    BehrendSet out;
    out.m = m;
    out.k = k;
    out.elements = std::move(best);
    out.method = "sphere-construction";
    return out;
}

namespace {

// Does adding `cand` to the (valid, ascending) set keep every arity in 2..k
// free of nontrivial solutions? Only tuples touching `cand` need a look.
bool extension_ok(const std::vector<int>& set, int cand, int k) {
    std::vector<int> ext = set;
    ext.insert(std::lower_bound(ext.begin(), ext.end(), cand), cand);
    int n = static_cast<int>(ext.size());
    int cand_idx = static_cast<int>(
        std::lower_bound(ext.begin(), ext.end(), cand) - ext.begin());
    for (int r = 2; r <= k; ++r) {
        bool ok = for_each_multiset(n, r, [&](const std::vector<int>& idx) {
            bool touches = std::binary_search(idx.begin(), idx.end(), cand_idx);
            if (!touches) {
                // tuple of old elements: only the new mean could offend
                std::int64_t sum = 0;
                for (int i : idx) sum += ext[static_cast<std::size_t>(i)];
                if (sum % r != 0 || sum / r != cand) return true;
            }
            return !check_tuple(ext, idx, r).has_value();
        });
        if (!ok) return false;
    }
    return true;
}

struct MaxSetSearch {
    int m, k;
    std::int64_t budget;
    std::int64_t nodes = 0;
    std::vector<int> current;
    std::vector<int> best;

    void run(int next) {
        if (++nodes > budget) throw BudgetExceeded("exact_max_set: node budget exceeded");
        if (next > m) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (static_cast<int>(current.size()) + (m - next + 1) <= static_cast<int>(best.size()))
            return;
        // include-first keeps the enumeration in lexicographic order, so the
        // first maximum found is the lexicographically least one
        if (extension_ok(current, next, k)) {
            current.push_back(next);
            run(next + 1);
            current.pop_back();
        }
        run(next + 1);
    }
};

}  // namespace

BehrendSet exact_max_set(int m, int k, std::int64_t budget) {
    if (m < 1) throw std::invalid_argument("exact_max_set: m must be >= 1");
    if (k < 2) throw std::invalid_argument("exact_max_set: k must be >= 2");
    if (m > 60) throw BudgetExceeded("exact_max_set: m > 60 is past the search budget");
    MaxSetSearch s{m, k, budget};
    s.run(1);
    BehrendSet out;
    out.m = m;
    out.k = k;
    out.elements = std::move(s.best);
    out.method = "exact-search";
    return out;
}

DensityReport density_report(const BehrendSet& x) {
    DensityReport r;
    r.size = x.size();
    double lm = std::log(static_cast<double>(std::max(x.m, 1)));
    double lk = std::log(static_cast<double>(std::max(x.k, 2)));
    r.bound = static_cast<double>(x.m) / std::exp(10.0 * std::sqrt(lm * lk));
    r.satisfied = static_cast<double>(r.size) >= r.bound;
    return r;
}

}  // namespace eqcomm
