#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "eqcomm/behrend.hpp"
#include "eqcomm/graph.hpp"
#include "eqcomm/host.hpp"

namespace eqcomm {

// One n-bit string per vertex, packed little-endian into a word.
struct InputAssignment {
    int n = 0;
    std::vector<std::uint64_t> strings;

    bool all_equal() const;
};

inline constexpr int kMaxInputBits = 62;

// Edge copies are keyed (u, v, copy) so parallel edges account separately.
using EdgeKey = std::tuple<int, int, int>;

struct Transcript {
    bool accept = false;
    std::map<EdgeKey, std::int64_t> per_edge_bits;
    std::int64_t total_bits = 0;
    std::string protocol;
};

// Fixes the lexicographically first 2^n copy indices (x ascending, then y)
// as the representation of input strings.
class Codebook {
public:
    Codebook(FaithfulHost host, int n);

    int n() const { return n_; }
    const FaithfulHost& host() const { return host_; }

    // copy index (x, y) representing string value s < 2^n
    std::pair<int, int> copy_for(std::uint64_t s) const;

private:
    FaithfulHost host_;
    int n_ = 0;
};

// Smallest m (scanning upward) whose densest available set reaches
// m * |X| >= 2^n copies. Exact search up to m = 60, sphere sets beyond.
std::pair<int, BehrendSet> choose_parameters(const Graph& h, int n);

// Convenience: parameters, numbering and host for a 2-connected pattern.
Codebook make_codebook(const Graph& h, int n);

// Rooted spanning tree, everyone forwards their string to the parent.
// Costs exactly (k-1) * n bits.
Transcript run_tree_protocol(const Graph& g, const InputAssignment& a);

// The faithful-host protocol: each player ships the identity of its copy's
// vertex along every out-edge (ceil(log2(km)) bits) plus one consistency
// bit per edge. Costs exactly |E| * (ceil(log2(km)) + 1) bits.
Transcript run_host_protocol(const Graph& h, const InputAssignment& a, const Codebook& c,
                             const Orientation& o);

// Per-block composition: host protocol on 2-connected blocks, a single
// n-bit send-and-compare on bridge blocks, end blocks first.
Transcript run_block_composed(const Graph& g, const InputAssignment& a);

struct SoundnessReport {
    bool sound = false;
    std::int64_t runs = 0;
    std::optional<InputAssignment> violation;  // first erring input
};

// Sweeps the full input space (2^(n*k) assignments) and checks the decision
// against string equality. Budget-guarded.
SoundnessReport exhaustive_soundness(const Graph& g, int n, const std::string& protocol,
                                     std::int64_t budget = 1 << 22);

// Same, with an externally supplied codebook (host protocol only); this is
// how unfaithful hosts are put in front of the soundness sweep.
SoundnessReport exhaustive_soundness_with_codebook(const Graph& h, int n, const Codebook& c,
                                                   std::int64_t budget = 1 << 22);

// Seeded random sample of the input space.
SoundnessReport sampled_soundness(const Graph& g, int n, const std::string& protocol,
                                  std::int64_t samples, std::uint64_t seed);

}  // namespace eqcomm
