#include "eqcomm/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqcomm {

int Graph::edge_count() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int Graph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return 0;
    return mult_[static_cast<std::size_t>(it - edges_.begin())];
}

bool Graph::is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 1; });
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u < 0 || v < 0 || u >= k_ || v >= k_)
        throw std::invalid_argument("vertex out of range");
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) {
        auto idx = static_cast<std::size_t>(it - edges_.begin());
        if (mult_[idx] >= 2) throw std::invalid_argument("multiplicity above 2 rejected");
        ++mult_[idx];
        return;
    }
    auto idx = static_cast<std::size_t>(it - edges_.begin());
    edges_.insert(it, key);
    mult_.insert(mult_.begin() + static_cast<std::ptrdiff_t>(idx), 1);
}

std::vector<Edge> Graph::edge_copies() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (int c = 0; c < mult_[i]; ++c) out.push_back(edges_[i]);
    return out;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k_));
    for (const Edge& e : edges_) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

int Graph::degree(int v) const {
    int d = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == v || edges_[i].v == v) d += mult_[i];
    return d;
}

bool Graph::is_connected() const {
    if (k_ == 0) return false;
    auto adj = adjacency();
    std::vector<char> seen(static_cast<std::size_t>(k_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == k_;
}

std::string Graph::to_edge_list() const {
    std::ostringstream os;
    os << k_ << ' ' << edge_count() << '\n';
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (int c = 0; c < mult_[i]; ++c)
            os << edges_[i].u << ' ' << edges_[i].v << '\n';
    return os.str();
}

// --- parsing ---

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<int, int>> pairs;
    int k = -1, m = -1;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        int a, b;
        if (!(ls >> a)) continue;  // blank or comment-only
        if (!(ls >> b)) throw std::invalid_argument("malformed line " + std::to_string(line_no));
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("malformed line " + std::to_string(line_no));
        if (k < 0) {
            if (a <= 0 || b < 0) throw std::invalid_argument("bad header");
            k = a;
            m = b;
        } else {
            pairs.emplace_back(a, b);
        }
    }
    if (k < 0) throw std::invalid_argument("missing header");
    if (static_cast<int>(pairs.size()) != m)
        throw std::invalid_argument("edge count does not match header");
    Graph g(k);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    return g;
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_path(int k) {
    if (k < 2) throw std::invalid_argument("path needs k >= 2");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_complete(int k) {
    if (k < 2) throw std::invalid_argument("complete graph needs k >= 2");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("bipartite sides must be positive");
    Graph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
    return g;
}

Graph make_theta(int a, int b, int c) {
    // Two branch vertices joined by three internally disjoint paths with
    // a, b, c edges. At most one path may be a single edge, else the graph
    // would need a doubled edge.
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("theta path lengths must be >= 1");
    if ((a == 1) + (b == 1) + (c == 1) > 1)
        throw std::invalid_argument("theta with two unit paths is not simple");
    int k = 2 + (a - 1) + (b - 1) + (c - 1);
    Graph g(k);
    int next = 2;
    auto add_chain = [&](int len) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    };
    add_chain(a);
    add_chain(b);
    add_chain(c);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer C_5
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

namespace {

std::vector<int> parse_int_args(const std::string& name, std::size_t colon) {
    std::vector<int> args;
    std::size_t pos = colon;
    while (pos != std::string::npos) {
        std::size_t next = name.find(':', pos + 1);
        std::string tok = name.substr(pos + 1, next == std::string::npos ? next : next - pos - 1);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("bad graph parameter '" + tok + "'");
        args.push_back(value);
        pos = next;
    }
    return args;
}

}  // namespace

Graph named_graph(const std::string& name) {
    std::size_t colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::vector<int> args =
        colon == std::string::npos ? std::vector<int>{} : parse_int_args(name, colon);
    auto expect = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("graph '" + head + "' expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (head == "petersen") {
        expect(0);
        return make_petersen();
    }
    if (head == "cycle") {
        expect(1);
        return make_cycle(args[0]);
    }
    if (head == "path") {
        expect(1);
        return make_path(args[0]);
    }
    if (head == "complete") {
        expect(1);
        return make_complete(args[0]);
    }
    if (head == "complete_bipartite") {
        expect(2);
        return make_complete_bipartite(args[0], args[1]);
    }
    if (head == "theta") {
        expect(3);
        return make_theta(args[0], args[1], args[2]);
    }
    throw std::invalid_argument("unknown graph '" + name + "'");
}

// --- blocks (Hopcroft-Tarjan lowpoint) ---

namespace {

struct BlockState {
    const Graph* g = nullptr;
    std::vector<std::vector<int>> adj;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<char> is_cut;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    int timer = 0;

    void dfs(int u) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (disc[w] == 0) {
                ++children;
                parent[w] = u;
                edge_stack.emplace_back(u, w);
                dfs(w);
                low[u] = std::min(low[u], low[w]);
                if ((parent[u] == -1 && children > 1) || (parent[u] != -1 && low[w] >= disc[u])) {
                    is_cut[static_cast<std::size_t>(u)] = 1;
                }
                if (low[w] >= disc[u]) pop_block(u, w);
            } else if (w != parent[u] && disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }

    void pop_block(int u, int w) {
        std::vector<std::pair<int, int>> comp;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == std::make_pair(u, w)) break;
        }
        block_edges.push_back(std::move(comp));
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("blocks: graph must be connected");
    BlockState st;
    st.g = &g;
    st.adj = g.adjacency();
    int k = g.vertex_count();
    st.disc.assign(static_cast<std::size_t>(k), 0);
    st.low.assign(static_cast<std::size_t>(k), 0);
    st.parent.assign(static_cast<std::size_t>(k), -1);
    st.is_cut.assign(static_cast<std::size_t>(k), 0);
    st.dfs(0);

    BlockDecomposition out;
    for (auto& comp : st.block_edges) {
        std::vector<int> verts;
        for (auto [a, b] : comp) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Graph bg(static_cast<int>(verts.size()));
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        for (auto [a, b] : comp) {
            int mult = g.multiplicity(a, b);
            for (int c = 0; c < mult; ++c) bg.add_edge(local(a), local(b));
        }
        out.blocks.push_back(std::move(bg));
        out.vertex_maps.push_back(std::move(verts));
    }
    for (int v = 0; v < k; ++v)
        if (st.is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

// --- edge and vertex connectivity checks ---

bool is_two_edge_connected(const Graph& g) {
    if (g.vertex_count() < 2 || !g.is_connected()) return false;
    // A single copy of a bridge disconnects; a doubled edge never does.
    auto adj = g.adjacency();
    int k = g.vertex_count();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (g.multiplicity(static_cast<int>(i)) >= 2) continue;
        const Edge& e = g.edges()[i];
        // connectivity with edge e removed
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != k) return false;
    }
    return true;
}

bool is_biconnected(const Graph& g) {
    return !biconnectivity_witness(g).has_value();
}

std::optional<NonBiconnectedWitness> biconnectivity_witness(const Graph& g) {
    NonBiconnectedWitness w;
    if (g.vertex_count() < 3) {
        w.reason = "fewer than 3 vertices";
        return w;
    }
    if (!g.is_connected()) {
        w.reason = "disconnected";
        return w;
    }
    auto bd = blocks(g);
    if (!bd.cut_vertices.empty()) {
        w.cut_vertex = bd.cut_vertices.front();
        w.reason = "cut vertex " + std::to_string(*w.cut_vertex);
        return w;
    }
    // Connected, no cut vertices, k >= 3: a lone bridge block would force a
    // cut vertex, so the graph is 2-connected.
    return std::nullopt;
}

// --- ear decomposition via chain decomposition ---

EarDecomposition ear_decomposition(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("ear decomposition requires a simple graph");
    if (auto w = biconnectivity_witness(g))
        throw std::invalid_argument("ear decomposition requires a 2-connected graph: " + w->reason);

    int k = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> disc(static_cast<std::size_t>(k), 0);
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k));
    int timer = 0;
    // Iterative DFS visiting neighbours ascending, so the result is a pure
    // function of the input graph.
    {
        std::vector<std::pair<int, std::size_t>> stack;
        stack.emplace_back(0, 0);
        disc[0] = ++timer;
        order.push_back(0);
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            if (it == adj[static_cast<std::size_t>(v)].size()) {
                stack.pop_back();
                continue;
            }
            int w = adj[static_cast<std::size_t>(v)][it++];
            if (disc[static_cast<std::size_t>(w)] == 0) {
                disc[static_cast<std::size_t>(w)] = ++timer;
                parent[static_cast<std::size_t>(w)] = v;
                order.push_back(w);
                stack.emplace_back(w, 0);
            }
        }
    }

    // Back edges grouped by ancestor endpoint, descendants ascending by
    // discovery time.
    std::vector<std::vector<int>> back(static_cast<std::size_t>(k));
    for (const Edge& e : g.edges()) {
        int a = e.u, b = e.v;
        if (parent[static_cast<std::size_t>(a)] == b || parent[static_cast<std::size_t>(b)] == a)
            continue;  // tree edge
        if (disc[static_cast<std::size_t>(a)] > disc[static_cast<std::size_t>(b)]) std::swap(a, b);
        back[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& lst : back)
        std::sort(lst.begin(), lst.end(),
                  [&](int x, int y) { return disc[static_cast<std::size_t>(x)] < disc[static_cast<std::size_t>(y)]; });

    EarDecomposition d;
    d.vertex_count = k;
    std::vector<char> visited(static_cast<std::size_t>(k), 0);
    visited[0] = 1;
    for (int v : order) {
        for (int w : back[static_cast<std::size_t>(v)]) {
            std::vector<int> chain{v};
            int cur = w;
            while (!visited[static_cast<std::size_t>(cur)]) {
                visited[static_cast<std::size_t>(cur)] = 1;
                chain.push_back(cur);
                cur = parent[static_cast<std::size_t>(cur)];
            }
            chain.push_back(cur);
            if (d.ears.empty()) {
                // first chain closes back at the root: store as a cycle
                if (chain.front() != chain.back())
                    throw std::logic_error("first chain did not close a cycle");
                chain.pop_back();
                d.ears.push_back(std::move(chain));
            } else {
                if (chain.front() == chain.back())
                    throw std::invalid_argument("ear decomposition: found a separating vertex");
                d.ears.push_back(std::move(chain));
            }
        }
    }
    return d;
}

VertexNumbering ear_numbering(const EarDecomposition& d) {
    VertexNumbering num;
    num.number.assign(static_cast<std::size_t>(d.vertex_count), 0);
    num.vertex_at.assign(static_cast<std::size_t>(d.vertex_count) + 1, -1);
    int next = 0;
    auto assign = [&](int v) {
        ++next;
        num.number[static_cast<std::size_t>(v)] = next;
        num.vertex_at[static_cast<std::size_t>(next)] = v;
    };
    for (int v : d.ears.at(0)) assign(v);
    for (std::size_t e = 1; e < d.ears.size(); ++e) {
        const auto& ear = d.ears[e];
        if (ear.size() <= 2) continue;  // no internal vertices
        int a = ear.front(), b = ear.back();
        int ia = num.number[static_cast<std::size_t>(a)];
        int ib = num.number[static_cast<std::size_t>(b)];
        // internal vertices take consecutive numbers walking from the
        // higher-numbered endpoint towards the lower one
        if (ia > ib) {
            for (std::size_t i = 1; i + 1 < ear.size(); ++i) assign(ear[i]);
        } else {
            for (std::size_t i = ear.size() - 2; i >= 1; --i) assign(ear[i]);
        }
    }
    if (next != d.vertex_count) throw std::logic_error("numbering did not cover all vertices");
    return num;
}

Orientation positive_indegree_orientation(const Graph& g) {
    EarDecomposition d = ear_decomposition(g);
    VertexNumbering num = ear_numbering(d);
    std::vector<std::pair<int, int>> dir(g.edges().size());
    auto edge_index = [&](int u, int v) {
        int a = std::min(u, v), b = std::max(u, v);
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge{a, b});
        return static_cast<std::size_t>(it - g.edges().begin());
    };
    const auto& cyc = d.ears[0];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        dir[edge_index(u, v)] = {u, v};
    }
    for (std::size_t e = 1; e < d.ears.size(); ++e) {
        auto ear = d.ears[e];
        int a = ear.front(), b = ear.back();
        // run the path from the higher-numbered endpoint down to the lower
        if (num.number[static_cast<std::size_t>(a)] < num.number[static_cast<std::size_t>(b)])
            std::reverse(ear.begin(), ear.end());
        for (std::size_t i = 0; i + 1 < ear.size(); ++i)
            dir[edge_index(ear[i], ear[i + 1])] = {ear[i], ear[i + 1]};
    }
    return Orientation{std::move(dir)};
}

std::vector<int> indegrees(const Graph& g, const Orientation& o) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [from, to] : o.arcs) ++deg[static_cast<std::size_t>(to)];
    return deg;
}

// --- exhaustive oracles ---

std::vector<Cut> enumerate_cuts(const Graph& g, int vertex_limit) {
    int k = g.vertex_count();
    if (k > vertex_limit)
        throw BudgetExceeded("enumerate_cuts: vertex count exceeds limit " +
                             std::to_string(vertex_limit));
    if (k < 2) throw std::invalid_argument("enumerate_cuts needs k >= 2");
    auto copies = g.edge_copies();
    std::vector<Cut> cuts;
    std::uint32_t total = 1u << (k - 1);
    cuts.reserve(total - 1);
    for (std::uint32_t m = 1; m < total; ++m) {
        Cut c;
        c.side = m << 1;  // side over vertices 1..k-1; vertex 0 stays outside
        for (std::size_t i = 0; i < copies.size(); ++i) {
            bool iu = (c.side >> copies[i].u) & 1u;
            bool iv = (c.side >> copies[i].v) & 1u;
            if (iu != iv) c.crossing.push_back(static_cast<int>(i));
        }
        cuts.push_back(std::move(c));
    }
    return cuts;
}

int independence_number(const Graph& g, int vertex_limit) {
    int k = g.vertex_count();
    if (k > vertex_limit)
        throw BudgetExceeded("independence_number: vertex count exceeds limit " +
                             std::to_string(vertex_limit));
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(k), 0);
    for (const Edge& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    int best = 0;
    // branch on the lowest undecided vertex: skip it or take it
    std::function<void(std::uint32_t, int)> go = [&](std::uint32_t avail, int size) {
        if (avail == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(avail) <= best) return;
        int v = std::countr_zero(avail);
        go(avail & ~(1u << v) & ~nbr[static_cast<std::size_t>(v)], size + 1);
        go(avail & ~(1u << v), size);
    };
    go((k == 32 ? ~0u : (1u << k) - 1u), 0);
    return best;
}

bool is_hamiltonian(const Graph& g, int vertex_limit) {
    int k = g.vertex_count();
    if (k > vertex_limit)
        throw BudgetExceeded("is_hamiltonian: vertex count exceeds limit " +
                             std::to_string(vertex_limit));
    if (k < 2) return false;
    if (k == 2) return g.multiplicity(0, 1) >= 2;  // 2-cycle through a doubled edge
    auto adj = g.adjacency();
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    std::vector<int> path{0};
    used[0] = 1;
    std::function<bool()> go = [&]() {
        if (static_cast<int>(path.size()) == k) return g.has_edge(path.back(), 0);
        for (int w : adj[static_cast<std::size_t>(path.back())]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (go()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return go();
}

}  // namespace eqcomm
