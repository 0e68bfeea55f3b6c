#pragma once

// Brute-force reference oracles, independent of the implementation paths they
// check.  Everything here enumerates.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "crnd/cutreq.hpp"
#include "crnd/graph.hpp"
#include "crnd/instance_io.hpp"
#include "crnd/rational.hpp"
#include "crnd/simplex.hpp"
#include "crnd/solver.hpp"

namespace oracles {

using namespace crnd;

// minimum w(delta(S)) over sources <= S, sinks disjoint from S
inline Rat brute_min_cut(const Multigraph& g, const std::vector<Rat>& w, const NodeSet& sources,
                         const NodeSet& sinks) {
    std::optional<Rat> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        if (!sources.subset_of(side) || side.intersects(sinks)) continue;
        Rat value = cut_weight(g, side, w);
        if (!best || value < *best) best = value;
    }
    return *best;
}

// maximum f(S) - w(delta(S)) over s-t cuts
inline Rat brute_max_def_st(const std::function<long long(const NodeSet&)>& f,
                            const Multigraph& g, const std::vector<Rat>& w, int s, int t) {
    std::optional<Rat> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        if (side.contains(s) == side.contains(t)) continue;
        Rat value = to_rat(f(side)) - cut_weight(g, side, w);
        if (!best || value > *best) best = value;
    }
    return *best;
}

// |delta_H(S)| >= min{f(S), |delta_G(S)|} for every S, straight from the
// definition
inline bool brute_cut_relative_feasible(const std::function<long long(const NodeSet&)>& f,
                                        const Multigraph& g, const std::vector<int>& h) {
    std::vector<bool> in_h(g.edge_count(), false);
    for (int e : h) in_h[e] = true;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        long long have = 0;
        for (int e : cut_edges(g, side)) have += in_h[e];
        if (have < std::min(f(side), cut_size(g, side))) return false;
    }
    return true;
}

inline bool connected_in(const Multigraph& g, const std::vector<bool>& alive, int s, int t) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        if (alive[e]) parent[find(g.edges[e].u)] = find(g.edges[e].v);
    return find(s) == find(t);
}

// path-relative feasibility straight from the definition (fault subsets by
// combination enumeration, union-find connectivity)
inline bool brute_path_relative_feasible(const SndpRequirements& reqs, const Multigraph& g,
                                         const std::vector<int>& h) {
    const int m = g.edge_count();
    std::vector<bool> in_h(m, false);
    for (int e : h) in_h[e] = true;
    for (const auto& p : reqs.pairs) {
        std::vector<int> fault;
        std::function<bool(int)> ok = [&](int start) -> bool {
            std::vector<bool> g_alive(m, true), h_alive = in_h;
            for (int e : fault) g_alive[e] = h_alive[e] = false;
            if (connected_in(g, g_alive, p.s, p.t) && !connected_in(g, h_alive, p.s, p.t))
                return false;
            if ((long long)fault.size() == p.r - 1) return true;
            for (int e = start; e < m; ++e) {
                fault.push_back(e);
                bool good = ok(e + 1);
                fault.pop_back();
                if (!good) return false;
            }
            return true;
        };
        if (!ok(0)) return false;
    }
    return true;
}

// the cut-relative LP with the full exponential constraint family written out
inline Rat brute_full_lp_optimum(const std::function<long long(const NodeSet&)>& f,
                                 const Multigraph& g, const std::vector<Rat>& costs) {
    LinearProgram lp;
    lp.num_vars = g.edge_count();
    lp.objective = costs;
    const std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
    for (std::uint64_t mask = 2; mask < full; mask += 2) {  // node 0 outside S
        NodeSet side = NodeSet::from_mask(g.n, mask);
        long long rhs = std::min(f(side), cut_size(g, side));
        if (rhs <= 0) continue;
        LinearProgram::Row row;
        for (int e : cut_edges(g, side)) row.coeffs.emplace_back(e, Rat(1));
        row.rhs = to_rat(rhs);
        lp.rows.push_back(std::move(row));
    }
    return solve_vertex_lp(lp).objective;
}

// is x feasible for the cut-relative LP? (all constraints enumerated)
inline bool brute_lp_feasible(const std::function<long long(const NodeSet&)>& f,
                              const Multigraph& g, const std::vector<Rat>& x) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (x[e] < 0 || x[e] > 1) return false;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        if (cut_weight(g, side, x) < to_rat(std::min(f(side), cut_size(g, side)))) return false;
    }
    return true;
}

// spanning k-edge-connectivity of (V, H) by cut enumeration
inline bool brute_k_edge_connected(const Multigraph& g, const std::vector<int>& h, long long k) {
    std::vector<bool> in_h(g.edge_count(), false);
    for (int e : h) in_h[e] = true;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        long long have = 0;
        for (int e : cut_edges(g, side)) have += in_h[e];
        if (have < k) return false;
    }
    return true;
}

// seeded corpus of small SNDP instances, built through the real generator and
// parser so ids and costs come out exactly as production would see them
inline ParsedInstance corpus_instance(std::uint64_t seed) {
    crnd::detail::Rng rng(seed * 7919 + 13);
    int n = 2 + int(rng.next() % 5);       // 2..6
    int m = 1 + int(rng.next() % 10);      // 1..10
    int k = 1 + int(rng.next() % 3);       // 1..3
    int rmax = 1 + int(rng.next() % 3);    // 1..3
    return parse_instance(gen_random(n, m, k, rmax, seed));
}

// Same corpus, restricted to connected graphs by deterministic rejection.
// The leaf-partition / components identity presumes a connected graph (an
// isolated component with no small cut stays inside one leaf but is its own
// component), so the decomposition suites draw from here.
inline ParsedInstance corpus_connected_instance(std::uint64_t seed) {
    for (std::uint64_t attempt = seed;; attempt += 100003) {
        ParsedInstance parsed = corpus_instance(attempt);
        if (components(parsed.inst.graph, {}).size() == 1) return parsed;
    }
}

}  // namespace oracles
