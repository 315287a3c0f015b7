#include "eqcomm/host.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqcomm {

FaithfulHost FaithfulHost::build(Graph pattern, VertexNumbering numbering, int m, BehrendSet x) {
    return make(std::move(pattern), std::move(numbering), m, std::move(x), true);
}

FaithfulHost FaithfulHost::build_unchecked(Graph pattern, VertexNumbering numbering, int m,
                                           BehrendSet x) {
    return make(std::move(pattern), std::move(numbering), m, std::move(x), false);
}

FaithfulHost FaithfulHost::make(Graph pattern, VertexNumbering numbering, int m, BehrendSet x,
                                bool check_set) {
    if (m < 1) throw std::invalid_argument("host: m must be >= 1");
    int k = pattern.vertex_count();
    // the numbering must be the one induced by the pattern's ear structure
    VertexNumbering expect = ear_numbering(ear_decomposition(pattern));
    if (numbering.number != expect.number)
        throw std::invalid_argument("host: numbering is not ear-derived for this pattern");
    if (x.elements.empty()) throw std::invalid_argument("host: empty set");
    if (x.elements.back() > m) throw std::invalid_argument("host: set element above m");
    if (check_set) {
        BehrendSet probe = x;
        probe.k = k;
        if (auto verdict = verify_no_nontrivial(probe); !verdict.valid())
            throw std::invalid_argument("host: set admits a nontrivial solution: " +
                                        verdict.violation->describe());
    }

    FaithfulHost f;
    f.pattern_ = std::move(pattern);
    f.numbering_ = std::move(numbering);
    f.m_ = m;
    f.x_ = std::move(x);
    for (const Edge& e : f.pattern_.edges()) {
        int a = f.numbering_.number[static_cast<std::size_t>(e.u)];
        int b = f.numbering_.number[static_cast<std::size_t>(e.v)];
        if (a > b) std::swap(a, b);
        f.numbered_edges_.push_back(Edge{a, b});
    }
    std::sort(f.numbered_edges_.begin(), f.numbered_edges_.end());
    return f;
}

std::vector<int> FaithfulHost::special_copy(int x, int y) const {
    if (!x_.contains(x)) throw std::out_of_range("special_copy: x not in the set");
    if (y < 1 || y > m_) throw std::out_of_range("special_copy: y out of range");
    std::vector<int> u(static_cast<std::size_t>(k()));
    for (int i = 1; i <= k(); ++i) u[static_cast<std::size_t>(i - 1)] = y + (i - 1) * x;
    return u;
}

std::optional<std::pair<int, int>> FaithfulHost::decode_copy(const std::vector<int>& u) const {
    if (static_cast<int>(u.size()) != k()) return std::nullopt;
    int y = u[0];
    if (y < 1 || y > m_) return std::nullopt;
    int x = u[1] - u[0];
    if (!x_.contains(x)) return std::nullopt;
    for (int i = 1; i <= k(); ++i)
        if (u[static_cast<std::size_t>(i - 1)] != y + (i - 1) * x) return std::nullopt;
    return std::make_pair(x, y);
}

bool FaithfulHost::edge_membership(int a, int b, int ua, int ub) const {
    if (a > b) {
        std::swap(a, b);
        std::swap(ua, ub);
    }
    if (!std::binary_search(numbered_edges_.begin(), numbered_edges_.end(), Edge{a, b}))
        throw std::invalid_argument("edge_membership: not a pattern edge");
    int km = class_size();
    if (ua < 1 || ua > km || ub < 1 || ub > km) return false;
    int diff = ub - ua;
    int span = b - a;
    if (diff <= 0 || diff % span != 0) return false;
    int x = diff / span;
    if (!x_.contains(x)) return false;
    int y = ua - (a - 1) * x;
    return y >= 1 && y <= m_;
}

namespace {

// Walks the ear structure of a special copy the way the faithfulness proof
// does, and returns the first equation instance broken by a mixed copy.
std::optional<EquationViolation> derive_violation(const FaithfulHost& f,
                                                  const std::vector<int>& u) {
    EarDecomposition d = ear_decomposition(f.pattern());
    const auto& num = f.numbering().number;
    auto val = [&](int vertex) {
        return u[static_cast<std::size_t>(num[static_cast<std::size_t>(vertex)] - 1)];
    };
    auto edge_x = [&](int va, int vb) {
        int na = num[static_cast<std::size_t>(va)], nb = num[static_cast<std::size_t>(vb)];
        return (val(vb) - val(va)) / (nb - na);
    };

    const auto& cyc = d.ears[0];
    int t = static_cast<int>(cyc.size());
    std::vector<int> terms;
    for (int i = 0; i + 1 < t; ++i) terms.push_back(edge_x(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(i + 1)]));
    int mean = edge_x(cyc[0], cyc[static_cast<std::size_t>(t - 1)]);
    if (std::any_of(terms.begin(), terms.end(), [&](int v) { return v != terms[0]; }) ||
        terms[0] != mean) {
        EquationViolation v;
        v.arity = t - 1;
        v.terms = terms;
        std::sort(v.terms.begin(), v.terms.end());
        v.mean = mean;
        return v;
    }
    int base_x = mean;

    int numbered = t;
    for (std::size_t e = 1; e < d.ears.size(); ++e) {
        auto ear = d.ears[e];
        int q = static_cast<int>(ear.size()) - 2;
        if (q <= 0) continue;  // endpoint-only ear adds no equation
        int na = num[static_cast<std::size_t>(ear.front())];
        int nb = num[static_cast<std::size_t>(ear.back())];
        if (na < nb) std::reverse(ear.begin(), ear.end());  // start at the j side
        int j = std::max(na, nb), i = std::min(na, nb);
        int ell = numbered;
        numbered += q;

        std::vector<int> xs;  // x_1 .. x_{q+1} along the path
        for (std::size_t p = 0; p + 1 < ear.size(); ++p) xs.push_back(edge_x(ear[p], ear[p + 1]));

        bool consistent = std::all_of(xs.begin(), xs.end(), [&](int v) { return v == base_x; });
        if (consistent) continue;
        EquationViolation v;
        v.arity = ell + q - i;
        for (int rep = 0; rep < j - i; ++rep) v.terms.push_back(base_x);
        for (int rep = 0; rep < ell + 1 - j; ++rep) v.terms.push_back(xs.front());
        for (int p = 1; p < q; ++p) v.terms.push_back(xs[static_cast<std::size_t>(p)]);
        v.mean = xs.back();
        std::sort(v.terms.begin(), v.terms.end());
        return v;
    }
    return std::nullopt;
}

}  // namespace

FaithfulVerdict verify_faithful(const FaithfulHost& f, std::int64_t node_budget) {
    int k = f.k();
    int km = f.class_size();
    // backward pattern edges per class, in numbering space
    std::vector<std::vector<int>> backward(static_cast<std::size_t>(k + 1));
    for (const Edge& e : f.numbered_edges()) backward[static_cast<std::size_t>(e.v)].push_back(e.u);
    for (auto& lst : backward) std::sort(lst.begin(), lst.end());

    FaithfulVerdict verdict;
    verdict.faithful = true;
    std::int64_t nodes = 0;
    std::vector<int> u(static_cast<std::size_t>(k), 0);

    auto record_copy = [&](const std::vector<int>& tuple) {
        ++verdict.special_copies_found;
        if (verdict.faithful && !f.decode_copy(tuple)) {
            verdict.faithful = false;
            verdict.rogue = tuple;
            verdict.violated = derive_violation(f, tuple);
        }
    };

    std::function<void(int)> assign = [&](int i) {
        if (++nodes > node_budget) throw BudgetExceeded("verify_faithful: node budget exceeded");
        if (i > k) {
            record_copy(u);
            return;
        }
        const auto& back = backward[static_cast<std::size_t>(i)];
        auto consistent = [&](int cand) {
            for (std::size_t b = 1; b < back.size(); ++b) {
                int j = back[b];
                if (!f.edge_membership(j, i, u[static_cast<std::size_t>(j - 1)], cand))
                    return false;
            }
            return true;
        };
        if (back.empty()) {
            for (int cand = 1; cand <= km; ++cand) {
                u[static_cast<std::size_t>(i - 1)] = cand;
                assign(i + 1);
            }
            return;
        }
        int j0 = back.front();
        int uj = u[static_cast<std::size_t>(j0 - 1)];
        for (int x : f.x_set().elements) {
            int cand = uj + (i - j0) * x;
            if (cand > km) break;
            if (!f.edge_membership(j0, i, uj, cand)) continue;
            if (!consistent(cand)) continue;
            u[static_cast<std::size_t>(i - 1)] = cand;
            assign(i + 1);
        }
    };
    assign(1);
    return verdict;
}

}  // namespace eqcomm
