#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "crnd/errors.hpp"
#include "crnd/rational.hpp"

namespace crnd {

// Subset of the nodes 0..n-1 of an owning graph.  Complements are taken with
// respect to that universe.  Bitset storage, growable beyond 64 nodes.
class NodeSet {
public:
    NodeSet() : n_(0) {}
    explicit NodeSet(int n) : n_(n), bits_((n + 63) / 64, 0) { assert(n >= 0); }

    static NodeSet all(int n) {
        NodeSet s(n);
        for (int i = 0; i < n; ++i) s.insert(i);
        return s;
    }
    static NodeSet of(int n, std::initializer_list<int> nodes) {
        NodeSet s(n);
        for (int v : nodes) s.insert(v);
        return s;
    }
    static NodeSet from_mask(int n, std::uint64_t mask) {
        assert(n <= 64);
        NodeSet s(n);
        if (n > 0) s.bits_[0] = mask;
        return s;
    }

    int universe_size() const { return n_; }
    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void erase(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto b : bits_) c += __builtin_popcountll(b);
        return c;
    }
    bool empty() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }
    bool is_all() const { return count() == n_; }

    std::uint64_t to_mask() const {
        assert(n_ <= 64);
        return bits_.empty() ? 0 : bits_[0];
    }

    NodeSet complement() const {
        NodeSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
        r.trim();
        return r;
    }
    NodeSet operator&(const NodeSet& o) const {
        assert(n_ == o.n_);
        NodeSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
        return r;
    }
    NodeSet operator|(const NodeSet& o) const {
        assert(n_ == o.n_);
        NodeSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
        return r;
    }
    NodeSet operator-(const NodeSet& o) const {
        assert(n_ == o.n_);
        NodeSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
        return r;
    }

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const NodeSet& o) const { return !(*this == o); }

    bool subset_of(const NodeSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }
    bool intersects(const NodeSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    int first() const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return int(i * 64 + __builtin_ctzll(bits_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    // Order on the ascending node sequences ({0,5} < {1,2}, {0} < {0,1});
    // used for deterministic tie-breaks.
    bool lex_less(const NodeSet& o) const {
        assert(n_ == o.n_);
        auto va = to_vector(), vb = o.to_vector();
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }

private:
    void trim() {
        int spare = int(bits_.size() * 64) - n_;
        if (spare > 0 && !bits_.empty()) bits_.back() &= ~std::uint64_t(0) >> spare;
    }

    int n_;
    std::vector<std::uint64_t> bits_;
};

// Undirected multigraph.  Nodes are 0..n-1, edge ids dense 0..m-1 and stable:
// induced subgraphs keep a mapping back to parent ids.  Parallel edges are
// distinct ids; self-loops are rejected (they cross no cut).
struct Multigraph {
    struct Edge {
        int u, v;
    };

    int n = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    Multigraph(int n_, const std::vector<std::pair<int, int>>& es) : n(n_) {
        edges.reserve(es.size());
        for (size_t i = 0; i < es.size(); ++i) {
            auto [u, v] = es[i];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error("edge " + std::to_string(i) + " endpoint out of range");
            if (u == v)
                throw SelfLoopError("edge " + std::to_string(i) + " is a self-loop");
            edges.push_back({u, v});
        }
    }

    int edge_count() const { return int(edges.size()); }
    NodeSet all_nodes() const { return NodeSet::all(n); }
};

// delta_G(S): edge ids with exactly one endpoint in S, sorted by id.
inline std::vector<int> cut_edges(const Multigraph& g, const NodeSet& s) {
    assert(s.universe_size() == g.n);
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(g.edges[e].u) != s.contains(g.edges[e].v)) out.push_back(e);
    return out;
}

inline long long cut_size(const Multigraph& g, const NodeSet& s) {
    long long c = 0;
    for (const auto& e : g.edges) c += s.contains(e.u) != s.contains(e.v);
    return c;
}

// x(delta_G(S)) for a per-edge weight vector.
inline Rat cut_weight(const Multigraph& g, const NodeSet& s, const std::vector<Rat>& w) {
    assert((int)w.size() == g.edge_count());
    Rat total = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(g.edges[e].u) != s.contains(g.edges[e].v)) total += w[e];
    return total;
}

// Edge ids with both endpoints in S (the edge set of G[S]), sorted by id.
inline std::vector<int> edges_within(const Multigraph& g, const NodeSet& s) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.contains(g.edges[e].u) && s.contains(g.edges[e].v)) out.push_back(e);
    return out;
}

// |delta_{G[domain]}(T)|: edges with both ends in `domain` crossing T.
inline long long cut_size_within(const Multigraph& g, const NodeSet& domain, const NodeSet& t) {
    long long c = 0;
    for (const auto& e : g.edges) {
        if (!domain.contains(e.u) || !domain.contains(e.v)) continue;
        c += t.contains(e.u) != t.contains(e.v);
    }
    return c;
}

struct InducedSubgraph {
    Multigraph graph;                  // dense node labels 0..|S|-1
    std::vector<int> node_to_parent;   // local node -> parent node
    std::vector<int> parent_to_node;   // parent node -> local node, -1 outside S
    std::vector<int> edge_to_parent;   // local edge id -> parent edge id
};

inline InducedSubgraph induced_subgraph(const Multigraph& g, const NodeSet& s) {
    if (s.empty()) throw EmptyNodeSetError("induced_subgraph: empty node set");
    InducedSubgraph out;
    out.parent_to_node.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (s.contains(v)) {
            out.parent_to_node[v] = int(out.node_to_parent.size());
            out.node_to_parent.push_back(v);
        }
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        if (s.contains(ed.u) && s.contains(ed.v)) {
            es.emplace_back(out.parent_to_node[ed.u], out.parent_to_node[ed.v]);
            out.edge_to_parent.push_back(e);
        }
    }
    out.graph = Multigraph(int(out.node_to_parent.size()), es);
    return out;
}

// Connected components of G minus the removed edges, ordered by smallest node.
inline std::vector<NodeSet> components(const Multigraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.edge_count(), false);
    for (int e : removed) {
        assert(e >= 0 && e < g.edge_count());
        gone[e] = true;
    }
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (gone[e]) continue;
        int a = find(g.edges[e].u), b = find(g.edges[e].v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<NodeSet> out;
    std::vector<int> comp_index(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (comp_index[r] == -1) {
            comp_index[r] = int(out.size());
            out.emplace_back(g.n);
        }
        out[comp_index[r]].insert(v);
    }
    return out;
}

}  // namespace crnd
