#pragma once

#include <cassert>
#include <queue>
#include <vector>

#include "crnd/cutreq.hpp"
#include "crnd/errors.hpp"
#include "crnd/graph.hpp"
#include "crnd/rational.hpp"

namespace crnd {

struct MinCutResult {
    Rat value;
    NodeSet side;  // source side; canonical minimal one (residual reachability)
};

namespace detail {

// Edmonds-Karp on exact rationals.  Undirected edges become arc pairs with
// capacity c each way; pushing on one arc frees the partner's residual.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(n, -1) {}

    void add_undirected(int u, int v, const Rat& cap) {
        add_arc(u, v, cap);
        add_arc(v, u, cap);
    }

    Rat max_flow(int s, int t) {
        Rat total = 0;
        while (true) {
            std::vector<int> pred_arc(head_.size(), -1);
            std::vector<bool> seen(head_.size(), false);
            std::queue<int> bfs;
            bfs.push(s);
            seen[s] = true;
            while (!bfs.empty() && !seen[t]) {
                int u = bfs.front();
                bfs.pop();
                for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                    int w = arcs_[a].to;
                    if (seen[w] || arcs_[a].residual <= 0) continue;
                    seen[w] = true;
                    pred_arc[w] = a;
                    bfs.push(w);
                }
            }
            if (!seen[t]) return total;
            Rat push = arcs_[pred_arc[t]].residual;
            for (int v = t; v != s; v = arcs_[pred_arc[v] ^ 1].to)
                push = std::min(push, arcs_[pred_arc[v]].residual);
            for (int v = t; v != s; v = arcs_[pred_arc[v] ^ 1].to) {
                arcs_[pred_arc[v]].residual -= push;
                arcs_[pred_arc[v] ^ 1].residual += push;
            }
            total += push;
        }
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> bfs;
        bfs.push(s);
        seen[s] = true;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (!seen[arcs_[a].to] && arcs_[a].residual > 0) {
                    seen[arcs_[a].to] = true;
                    bfs.push(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to, next;
        Rat residual;
    };

    void add_arc(int u, int v, const Rat& cap) {
        arcs_.push_back({v, head_[u], cap});
        head_[u] = int(arcs_.size()) - 1;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace detail

// Minimum-weight cut among sides S with sources subset of S and sinks disjoint
// from S.  Pinned nodes are merged into a super-source/super-sink node, so no
// infinite capacities are needed.  The returned side is the set of nodes
// reachable from the sources in the residual graph: the unique inclusion-
// minimal minimum cut, which doubles as the deterministic tie-break.
inline MinCutResult min_cut(const Multigraph& g, const std::vector<Rat>& w,
                            const NodeSet& sources, const NodeSet& sinks) {
    assert(!sources.empty() && !sinks.empty());
    if (sources.intersects(sinks))
        throw OverlappingTerminalsError("min_cut: sources and sinks overlap");
    assert((int)w.size() == g.edge_count());

    // contracted ids: 0 = super-source, 1 = super-sink, then the rest
    std::vector<int> node_of(g.n, -1);
    int next = 2;
    for (int v = 0; v < g.n; ++v) {
        if (sources.contains(v))
            node_of[v] = 0;
        else if (sinks.contains(v))
            node_of[v] = 1;
        else
            node_of[v] = next++;
    }
    detail::FlowNetwork net(next);
    for (int e = 0; e < g.edge_count(); ++e) {
        int cu = node_of[g.edges[e].u], cv = node_of[g.edges[e].v];
        if (cu == cv) continue;
        net.add_undirected(cu, cv, w[e]);
    }
    MinCutResult result;
    result.value = net.max_flow(0, 1);
    auto reach = net.residual_reachable(0);
    result.side = NodeSet(g.n);
    for (int v = 0; v < g.n; ++v)
        if (reach[node_of[v]]) result.side.insert(v);
    assert(cut_weight(g, result.side, w) == result.value);
    return result;
}

struct MaxDeficiencyCut {
    Rat value;
    NodeSet side;
    bool no_separating_cut = false;  // every pinning was contradictory
};

// Weighted max-deficiency s-t cut for f^SNDP: maximize f^SNDP(T) - w(delta(T))
// over s-t cuts T.  Solved by one pinned min-cut per requirement pair and
// orientation ({s_i,s}-{t_i,t} and {s_i,t}-{t_i,s}), keeping max r_i - mincut,
// plus the plain s-t min cut covering the cuts that separate no pair
// (f = 0 there, so deficiency is just -w(delta)).  Contradictory pinnings are
// skipped; first maximizer in (i, orientation) scan order wins ties.
inline MaxDeficiencyCut max_deficiency_st_cut(const SndpRequirements& reqs, const Multigraph& g,
                                              const std::vector<Rat>& w, int s, int t) {
    assert(s != t);
    MaxDeficiencyCut best;
    best.side = NodeSet(g.n);
    best.no_separating_cut = true;
    for (const auto& p : reqs.pairs) {
        for (int orient = 0; orient < 2; ++orient) {
            NodeSet sources(g.n), sinks(g.n);
            sources.insert(p.s);
            sinks.insert(p.t);
            sources.insert(orient == 0 ? s : t);
            sinks.insert(orient == 0 ? t : s);
            if (sources.intersects(sinks)) continue;
            MinCutResult mc = min_cut(g, w, sources, sinks);
            Rat value = to_rat(p.r) - mc.value;
            if (best.no_separating_cut || value > best.value) {
                best.value = value;
                best.side = mc.side;
                best.no_separating_cut = false;
            }
        }
    }
    if (best.no_separating_cut) {
        // vacuously "all pinnings contradictory": only possible with no pairs
        best.value = 0;
        return best;
    }
    NodeSet src(g.n), dst(g.n);
    src.insert(s);
    dst.insert(t);
    MinCutResult plain = min_cut(g, w, src, dst);
    if (-plain.value > best.value) {
        best.value = -plain.value;
        best.side = plain.side;
    }
    return best;
}

inline MaxDeficiencyCut max_deficiency_st_cut(const SndpRequirements& reqs, const Multigraph& g,
                                              int s, int t) {
    return max_deficiency_st_cut(reqs, g, std::vector<Rat>(g.edge_count(), Rat(1)), s, t);
}

}  // namespace crnd
