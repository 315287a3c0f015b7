#include "eqcomm/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace eqcomm {

Rational CutPacking::value() const {
    Rational total = 0;
    for (const auto& [mask, w] : weights) total += w;
    return total;
}

bool packing_feasible(const Graph& g, const CutPacking& p) {
    for (const auto& [mask, w] : p.weights)
        if (w < 0 || w > 1) return false;
    for (const Edge& e : g.edges()) {
        Rational load = 0;
        for (const auto& [mask, w] : p.weights) {
            bool iu = (mask >> e.u) & 1u;
            bool iv = (mask >> e.v) & 1u;
            if (iu != iv) load += w;
        }
        if (load > 1) return false;
    }
    return true;
}

namespace {

// Dense exact simplex for   max 1^T g   s.t.   A g <= 1, g >= 0,
// where A is a 0/1 matrix given row-wise by the variable indices it hits.
// Bland's rule throughout, so it terminates on degenerate bases too.
struct PackingLp {
    int rows = 0;  // constraints (edge copies)
    int vars = 0;  // variables (cuts)
    std::vector<std::vector<Rational>> t;  // rows x (vars + rows + 1), last is RHS
    std::vector<Rational> obj;             // reduced costs, vars + rows entries
    Rational objective = 0;
    std::vector<int> basis;

    PackingLp(int m, int n, const std::vector<std::vector<int>>& row_vars)
        : rows(m), vars(n) {
        t.assign(static_cast<std::size_t>(m),
                 std::vector<Rational>(static_cast<std::size_t>(n + m + 1), Rational(0)));
        for (int i = 0; i < m; ++i) {
            for (int j : row_vars[static_cast<std::size_t>(i)])
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
            t[static_cast<std::size_t>(i)].back() = 1;
        }
        obj.assign(static_cast<std::size_t>(n + m), Rational(0));
        for (int j = 0; j < n; ++j) obj[static_cast<std::size_t>(j)] = 1;
        basis.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;
    }

    void pivot(int r, int c) {
        auto& prow = t[static_cast<std::size_t>(r)];
        Rational inv = prow[static_cast<std::size_t>(c)];
        for (auto& x : prow) x /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rational f = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
        }
        Rational f = obj[static_cast<std::size_t>(c)];
        if (f != 0) {
            for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * prow[j];
            objective += f * prow.back();
        }
        basis[static_cast<std::size_t>(r)] = c;
    }

    void solve() {
        while (true) {
            int enter = -1;
            for (std::size_t j = 0; j < obj.size(); ++j) {
                if (obj[j] > 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < rows; ++i) {
                const Rational& a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                Rational ratio = t[static_cast<std::size_t>(i)].back() / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("packing LP unbounded");
            pivot(leave, enter);
        }
    }
};

}  // namespace

FcSolution fc(const Graph& g, int vertex_limit) {
    if (!g.is_connected()) throw std::invalid_argument("fc: graph must be connected");
    auto cuts = enumerate_cuts(g, vertex_limit);
    auto copies = g.edge_copies();
    int m = static_cast<int>(copies.size());
    int n = static_cast<int>(cuts.size());
    std::vector<std::vector<int>> row_vars(static_cast<std::size_t>(m));
    for (int j = 0; j < n; ++j)
        for (int e : cuts[static_cast<std::size_t>(j)].crossing)
            row_vars[static_cast<std::size_t>(e)].push_back(j);

    PackingLp lp(m, n, row_vars);
    lp.solve();

    FcSolution sol;
    sol.value = lp.objective;
    sol.edge_costs.assign(static_cast<std::size_t>(m), Rational(0));
    for (int e = 0; e < m; ++e) sol.edge_costs[static_cast<std::size_t>(e)] = -lp.obj[static_cast<std::size_t>(n + e)];
    std::vector<Rational> packing_values(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < m; ++i)
        if (lp.basis[static_cast<std::size_t>(i)] < n)
            packing_values[static_cast<std::size_t>(lp.basis[static_cast<std::size_t>(i)])] =
                lp.t[static_cast<std::size_t>(i)].back();
    for (int j = 0; j < n; ++j)
        if (packing_values[static_cast<std::size_t>(j)] != 0)
            sol.packing.weights[cuts[static_cast<std::size_t>(j)].side] =
                packing_values[static_cast<std::size_t>(j)];

    // strong duality, checked outright: both solutions feasible, equal value
    Rational primal_total = 0;
    for (const auto& b : sol.edge_costs) {
        if (b < 0) throw std::logic_error("fc: negative edge cost");
        primal_total += b;
    }
    for (const auto& cut : cuts) {
        Rational covered = 0;
        for (int e : cut.crossing) covered += sol.edge_costs[static_cast<std::size_t>(e)];
        if (covered < 1) throw std::logic_error("fc: primal solution misses a cut");
    }
    if (!packing_feasible(g, sol.packing)) throw std::logic_error("fc: infeasible packing");
    if (primal_total != sol.value || sol.packing.value() != sol.value)
        throw std::logic_error("fc: duality gap");
    return sol;
}

namespace {

struct C2Search {
    const Graph* g = nullptr;
    int k = 0;
    std::vector<Edge> edges;
    std::vector<int> mult;
    std::vector<int> deg;
    int cost = 0;
    int target = 0;
    std::int64_t nodes = 0;
    std::int64_t budget = 0;
    std::vector<int> found;

    int shortfall() const {
        int s = 0;
        for (int d : deg) s += std::max(0, 2 - d);
        return s;
    }

    // chosen edges plus undecided edges at multiplicity 2
    bool max_graph_feasible(std::size_t next) const {
        Graph h(k);
        for (std::size_t i = 0; i < next; ++i)
            for (int c = 0; c < mult[i]; ++c) h.add_edge(edges[i].u, edges[i].v);
        for (std::size_t i = next; i < edges.size(); ++i) {
            h.add_edge(edges[i].u, edges[i].v);
            h.add_edge(edges[i].u, edges[i].v);
        }
        return is_two_edge_connected(h);
    }

    bool dfs(std::size_t idx) {
        if (++nodes > budget) throw BudgetExceeded("c2: node budget exceeded");
        if (cost + (shortfall() + 1) / 2 > target) return false;
        if (idx == edges.size()) {
            if (shortfall() != 0) return false;
            Graph h(k);
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (int c = 0; c < mult[i]; ++c) h.add_edge(edges[i].u, edges[i].v);
            if (!is_two_edge_connected(h)) return false;
            found = mult;
            return true;
        }
        for (int c = 0; c <= 2; ++c) {
            mult[idx] = c;
            cost += c;
            deg[static_cast<std::size_t>(edges[idx].u)] += c;
            deg[static_cast<std::size_t>(edges[idx].v)] += c;
            bool viable = cost + (shortfall() + 1) / 2 <= target;
            // dropping below 2 copies can only hurt; re-test the relaxation
            if (viable && c < 2) viable = max_graph_feasible(idx + 1);
            if (viable && dfs(idx + 1)) return true;
            deg[static_cast<std::size_t>(edges[idx].u)] -= c;
            deg[static_cast<std::size_t>(edges[idx].v)] -= c;
            cost -= c;
        }
        mult[idx] = 0;
        return false;
    }
};

}  // namespace

C2Solution c2(const Graph& g, std::int64_t node_budget) {
    if (!g.is_connected()) throw std::invalid_argument("c2: graph must be connected");
    int k = g.vertex_count();
    if (k < 2) return {0, {}};
    C2Search s;
    s.g = &g;
    s.k = k;
    s.edges = g.edges();
    s.mult.assign(s.edges.size(), 0);
    s.deg.assign(static_cast<std::size_t>(k), 0);
    s.budget = node_budget;
    // c2 is at least k (every vertex needs two incident copies) and at most
    // 2(k-1) (double a spanning tree); scan targets upward so the first
    // witness found is optimal and lexicographically least.
    for (int target = k; target <= 2 * (k - 1); ++target) {
        s.target = target;
        s.cost = 0;
        std::fill(s.mult.begin(), s.mult.end(), 0);
        std::fill(s.deg.begin(), s.deg.end(), 0);
        if (s.dfs(0)) return {target, s.found};
    }
    throw std::logic_error("c2: doubled spanning tree bound violated");
}

BoundsReport bounds_report(const Graph& g, int vertex_limit) {
    if (!g.is_connected()) throw std::invalid_argument("bounds_report: graph must be connected");
    if (g.vertex_count() < 2) throw std::invalid_argument("bounds_report: need k >= 2");
    BoundsReport r;
    r.fc_value = 0;
    // fc and c2 are additive over blocks, so assemble them block by block
    auto bd = blocks(g);
    for (const Graph& block : bd.blocks) {
        if (block.vertex_count() == 2) {
            r.fc_value += 1;
            r.c2_value += 2;
        } else {
            r.fc_value += fc(block, vertex_limit).value;
            r.c2_value += c2(block).value;
        }
    }
    r.alpha = independence_number(g, vertex_limit);
    r.hamiltonian = is_hamiltonian(g, vertex_limit);
    r.lower = std::max({r.fc_value, Rational(r.alpha), Rational(g.vertex_count(), 2)});
    r.upper = Rational(r.c2_value, 2);
    r.tight = r.lower == r.upper;
    return r;
}

namespace {

std::uint32_t canonical_side(std::uint32_t side, int k) {
    std::uint32_t all = (k == 32) ? ~0u : ((1u << k) - 1u);
    return (side & 1u) ? (all & ~side) : side;
}

}  // namespace

CutPacking degree2_cut_family(const Graph& g) {
    if (!is_two_edge_connected(g))
        throw std::invalid_argument("degree2_cut_family: graph must be 2-edge-connected");
    int k = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < k; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    for (const Edge& e : g.edges())
        if (deg[static_cast<std::size_t>(e.u)] > 2 && deg[static_cast<std::size_t>(e.v)] > 2)
            throw std::invalid_argument("degree2_cut_family: adjacent vertices " +
                                        std::to_string(e.u) + " and " + std::to_string(e.v) +
                                        " both have degree above 2");

    CutPacking p;
    Rational half(1, 2);
    bool any_high = std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; });
    if (!any_high) {
        // the graph is a single cycle: every one-vertex cut at weight 1/2
        for (int v = 0; v < k; ++v)
            p.weights[canonical_side(1u << v, k)] += half;
        return p;
    }

    // incident edge copies per vertex: (copy index, other endpoint)
    auto copies = g.edge_copies();
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < copies.size(); ++i) {
        inc[static_cast<std::size_t>(copies[i].u)].emplace_back(static_cast<int>(i), copies[i].v);
        inc[static_cast<std::size_t>(copies[i].v)].emplace_back(static_cast<int>(i), copies[i].u);
    }
    std::vector<char> used(copies.size(), 0);
    for (int h = 0; h < k; ++h) {
        if (deg[static_cast<std::size_t>(h)] <= 2) continue;
        for (auto [first_copy, first_next] : inc[static_cast<std::size_t>(h)]) {
            if (used[static_cast<std::size_t>(first_copy)]) continue;
            // walk through degree-2 vertices to the next high-degree vertex
            std::vector<int> interior;
            int prev_copy = first_copy;
            int cur = first_next;
            used[static_cast<std::size_t>(first_copy)] = 1;
            while (deg[static_cast<std::size_t>(cur)] == 2) {
                interior.push_back(cur);
                for (auto [copy, nxt] : inc[static_cast<std::size_t>(cur)]) {
                    if (copy == prev_copy) continue;
                    used[static_cast<std::size_t>(copy)] = 1;
                    prev_copy = copy;
                    cur = nxt;
                    break;
                }
            }
            // chains between high-degree vertices have length >= 2, so the
            // interior is never empty
            std::uint32_t interior_mask = 0;
            for (int v : interior) {
                p.weights[canonical_side(1u << v, k)] += half;
                interior_mask |= 1u << v;
            }
            p.weights[canonical_side(interior_mask, k)] += half;
            // the interior cut double-counts the lone single-vertex cut when
            // the chain has exactly one internal vertex, matching the
            // take-it-twice rule
        }
    }
    return p;
}

RegularCheck regular_primal_check(const Graph& g, int vertex_limit) {
    if (!g.is_connected())
        throw std::invalid_argument("regular_primal_check: graph must be connected");
    int k = g.vertex_count();
    int d = g.degree(0);
    for (int v = 1; v < k; ++v)
        if (g.degree(v) != d)
            throw std::invalid_argument("regular_primal_check: graph is not regular");
    RegularCheck rc;
    rc.degree = d;
    auto cuts = enumerate_cuts(g, vertex_limit);
    rc.edge_connectivity_ok = std::all_of(cuts.begin(), cuts.end(), [&](const Cut& c) {
        return static_cast<int>(c.crossing.size()) >= d;
    });
    rc.uniform_feasible = rc.edge_connectivity_ok;  // b = 1/d covers a cut iff it has >= d edges
    rc.uniform_value = Rational(g.edge_count(), d);
    rc.fc_value = fc(g, vertex_limit).value;
    rc.fc_is_half_k = rc.fc_value == Rational(k, 2);
    return rc;
}

}  // namespace eqcomm
