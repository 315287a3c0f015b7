#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcomm/behrend.hpp"
#include "eqcomm/graph.hpp"

namespace eqcomm {

// k-partite host graph for a 2-connected pattern H on k vertices. Classes
// V_1..V_k are each {1..km}; copy (x, y) places y + (i-1)x into V_i. The
// edge set of the host is exactly the union of the copy edge sets.
class FaithfulHost {
public:
    // Validates the numbering against an ear decomposition of the pattern
    // and the set against arity k. `build_unchecked` skips the set check,
    // which is how rogue hosts for negative controls come to exist.
    static FaithfulHost build(Graph pattern, VertexNumbering numbering, int m, BehrendSet x);
    static FaithfulHost build_unchecked(Graph pattern, VertexNumbering numbering, int m,
                                        BehrendSet x);

    const Graph& pattern() const { return pattern_; }
    const VertexNumbering& numbering() const { return numbering_; }
    const BehrendSet& x_set() const { return x_; }
    int m() const { return m_; }
    int k() const { return pattern_.vertex_count(); }
    int class_size() const { return k() * m_; }
    int copy_count() const { return m_ * x_.size(); }

    // Pattern edges as (class a, class b) with a < b in numbering space.
    const std::vector<Edge>& numbered_edges() const { return numbered_edges_; }
    int edge_count() const { return copy_count() * static_cast<int>(numbered_edges_.size()); }

    // Vertices (u_1..u_k) of copy H_{x,y}, 1-indexed by class.
    std::vector<int> special_copy(int x, int y) const;

    // Inverts special_copy; nullopt when the tuple is not one of the copies.
    std::optional<std::pair<int, int>> decode_copy(const std::vector<int>& u) const;

    // Is (ua in V_a) -- (ub in V_b) an edge of the host? Requires (a, b) to
    // be a pattern edge in numbering space.
    bool edge_membership(int a, int b, int ua, int ub) const;

private:
    static FaithfulHost make(Graph pattern, VertexNumbering numbering, int m, BehrendSet x,
                             bool check_set);

    Graph pattern_;
    VertexNumbering numbering_;
    int m_ = 0;
    BehrendSet x_;
    std::vector<Edge> numbered_edges_;
};

struct FaithfulVerdict {
    bool faithful = false;
    std::int64_t special_copies_found = 0;
    // first rogue tuple in lexicographic order, with the equation it breaks
    std::optional<std::vector<int>> rogue;
    std::optional<EquationViolation> violated;
};

// Exhaustively enumerates every special copy of the pattern inside the host
// by backtracking in numbering order with edge-membership pruning. Faithful
// iff each one decodes to an (x, y) index.
FaithfulVerdict verify_faithful(const FaithfulHost& f,
                                std::int64_t node_budget = 200'000'000);

}  // namespace eqcomm
