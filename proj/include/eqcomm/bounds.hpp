#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eqcomm/graph.hpp"
#include "eqcomm/rational.hpp"

namespace eqcomm {

// Weights on canonical cuts; feasible when each edge's incident cut weights
// sum to at most 1.
struct CutPacking {
    std::map<std::uint32_t, Rational> weights;  // cut side mask -> weight

    Rational value() const;
};

// Exact optimum of the cut-covering program and its dual packing, with the
// per-bit demand normalized to 1.
struct FcSolution {
    Rational value;
    std::vector<Rational> edge_costs;  // optimal b per edge copy
    CutPacking packing;                // optimal dual
};

// fc via exact rational simplex over the explicitly enumerated cuts.
// Primal and dual optima are computed together and asserted equal.
FcSolution fc(const Graph& g, int vertex_limit = kDefaultVertexLimit);

struct C2Solution {
    int value = 0;
    std::vector<int> witness;  // multiplicity in {0,1,2} per underlying edge
};

// Minimum edge count of a 2-edge-connected spanning sub-multigraph where
// each edge may be taken twice. Branch and bound; witness ties broken
// lexicographically on the multiplicity vector.
C2Solution c2(const Graph& g, std::int64_t node_budget = 400'000'000);

struct BoundsReport {
    Rational fc_value;
    int c2_value = 0;
    int alpha = 0;
    bool hamiltonian = false;
    Rational lower;  // max(fc, alpha, k/2)
    Rational upper;  // c2 / 2
    bool tight = false;
};

// Assembles the interval for f(G). fc and c2 are computed block by block
// and summed (both are additive over blocks); alpha and Hamiltonicity are
// whole-graph quantities.
BoundsReport bounds_report(const Graph& g, int vertex_limit = kDefaultVertexLimit);

// The explicit half-weight cut family for 2-edge-connected graphs with no
// two adjacent vertices of degree above 2; its value is |E|/2.
CutPacking degree2_cut_family(const Graph& g);

struct RegularCheck {
    int degree = 0;
    bool edge_connectivity_ok = false;  // every cut crosses >= d edges
    bool uniform_feasible = false;      // b = 1/d satisfies every cut
    Rational uniform_value;             // |E|/d
    Rational fc_value;
    bool fc_is_half_k = false;
};

// For d-regular, d-edge-connected graphs: verifies the uniform primal
// solution b = 1/d and that fc equals k/2.
RegularCheck regular_primal_check(const Graph& g, int vertex_limit = kDefaultVertexLimit);

// Evaluates a packing against a graph: feasibility and total value.
bool packing_feasible(const Graph& g, const CutPacking& p);

}  // namespace eqcomm
