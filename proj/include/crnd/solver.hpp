#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crnd/cutreq.hpp"
#include "crnd/errors.hpp"
#include "crnd/flow.hpp"
#include "crnd/graph.hpp"
#include "crnd/lp.hpp"
#include "crnd/rational.hpp"

namespace crnd {

enum class ReqFamily { Sndp, Kecss, Grace };

// A cut-relative network-design instance.  k-ECSS instances also carry the
// equivalent all-pairs SNDP tuples, which power the min-cut machinery
// (f^{k-ECSS} coincides with f^SNDP over all pairs at requirement k).
struct Instance {
    Multigraph graph;
    std::vector<Rat> costs;
    ReqFamily family = ReqFamily::Sndp;
    SndpRequirements reqs;  // Sndp: as given; Kecss: expanded all-pairs
    long long kecss_k = 0;
    GraceProfile grace;

    static Instance sndp(Multigraph g, std::vector<Rat> costs, SndpRequirements reqs) {
        Instance inst;
        inst.graph = std::move(g);
        inst.costs = std::move(costs);
        inst.family = ReqFamily::Sndp;
        inst.reqs = std::move(reqs);
        return inst;
    }
    static Instance kecss(Multigraph g, std::vector<Rat> costs, long long k) {
        Instance inst;
        inst.graph = std::move(g);
        inst.costs = std::move(costs);
        inst.family = ReqFamily::Kecss;
        inst.kecss_k = k;
        for (int u = 0; u < inst.graph.n; ++u)
            for (int v = u + 1; v < inst.graph.n; ++v) inst.reqs.pairs.push_back({u, v, k});
        return inst;
    }
    static Instance grace_fn(Multigraph g, std::vector<Rat> costs, GraceProfile profile) {
        Instance inst;
        inst.graph = std::move(g);
        inst.costs = std::move(costs);
        inst.family = ReqFamily::Grace;
        inst.grace = std::move(profile);
        return inst;
    }

    bool has_separation_oracle() const { return family != ReqFamily::Grace; }

    // The symmetric, normalized base cut-requirement function.
    CutFnPtr base_fn() const {
        switch (family) {
            case ReqFamily::Sndp:
                return make_sndp_fn(reqs);
            case ReqFamily::Kecss:
                return make_kecss_fn(kecss_k);
            case ReqFamily::Grace:
                return symmetrize(make_grace_fn(grace), graph.all_nodes());
        }
        return make_zero_fn();
    }

    Rat cost_of(const std::vector<int>& edge_set) const {
        Rat total = 0;
        for (int e : edge_set) total += costs[e];
        return total;
    }
};

struct IterationRecord {
    int free_edges;            // |E'| before this round's solve
    std::vector<int> z1;       // edges fixed this round
    Rat lp_objective;          // residual LP optimum this round
};

struct Solution {
    std::vector<int> edges;  // sorted edge ids
    Rat cost;
    Rat lp_bound;  // optimum of the original cut-relative LP
    std::vector<IterationRecord> trace;
};

struct FeasibilityReport {
    bool feasible = true;
    // cut model witness
    std::optional<NodeSet> witness_cut;
    long long witness_have = 0, witness_need = 0;
    // path model witness
    std::optional<std::vector<int>> witness_faults;
    int witness_pair = -1;  // index into reqs
};

namespace detail {

inline std::vector<bool> to_edge_flags(const Multigraph& g, const std::vector<int>& edge_set) {
    std::vector<bool> flags(g.edge_count(), false);
    for (int e : edge_set) {
        assert(e >= 0 && e < g.edge_count());
        flags[e] = true;
    }
    return flags;
}

inline std::vector<int> flags_to_edges(const std::vector<bool>& flags) {
    std::vector<int> out;
    for (int e = 0; e < (int)flags.size(); ++e)
        if (flags[e]) out.push_back(e);
    return out;
}

inline bool connects(const Multigraph& g, const std::vector<bool>& alive, int s, int t) {
    std::vector<int> stack{s};
    std::vector<bool> seen(g.n, false);
    seen[s] = true;
    // adjacency scan per edge; graphs here are tiny
    while (!stack.empty()) {
        if (seen[t]) return true;
        int u = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!alive[e]) continue;
            int a = g.edges[e].u, b = g.edges[e].v;
            int other = a == u ? b : (b == u ? a : -1);
            if (other != -1 && !seen[other]) {
                seen[other] = true;
                stack.push_back(other);
            }
        }
    }
    return seen[t];
}

}  // namespace detail

// |delta_H(S)| >= min{f(S), |delta_G(S)|} for all S.  SNDP-family instances
// go through the separation oracle on the 0/1 indicator of H; other families
// enumerate all cuts (size-capped).
inline FeasibilityReport check_cut_relative(const Instance& inst, const std::vector<int>& h,
                                            int max_nodes = 20) {
    const Multigraph& g = inst.graph;
    auto flags = detail::to_edge_flags(g, h);
    FeasibilityReport report;
    if (inst.has_separation_oracle()) {
        std::vector<Rat> x(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) x[e] = flags[e] ? 1 : 0;
        auto violated = separation_oracle_crsndp(inst.reqs, g, flags, x);
        if (violated) {
            report.feasible = false;
            report.witness_cut = violated->side;
            report.witness_have = 0;
            for (int e : cut_edges(g, violated->side)) report.witness_have += flags[e];
            report.witness_need = violated->rhs;
        }
        return report;
    }
    if (g.n > max_nodes)
        throw SizeLimitError("cut-relative check by enumeration limited to " +
                             std::to_string(max_nodes) + " nodes");
    CutFnPtr f = inst.base_fn();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet s = NodeSet::from_mask(g.n, mask);
        long long need = std::min(f->eval(s), cut_size(g, s));
        long long have = 0;
        for (int e : cut_edges(g, s)) have += flags[e];
        if (have < need) {
            report.feasible = false;
            report.witness_cut = s;
            report.witness_have = have;
            report.witness_need = need;
            return report;
        }
    }
    return report;
}

// Path-relative feasibility by fault-set enumeration: for every pair i and
// every F with |F| < r_i, if G-F connects s_i,t_i then H-F must as well.
inline FeasibilityReport check_path_relative(const Instance& inst, const std::vector<int>& h,
                                             long long max_fault_sets = 10'000'000) {
    if (inst.family == ReqFamily::Grace)
        throw UnsupportedFamilyError("path-relative checking needs requirement pairs");
    const Multigraph& g = inst.graph;
    const int m = g.edge_count();
    {
        // Sum_i C(m, r_i - 1) gate on the enumeration size.
        Rat total = 0;
        for (const auto& p : inst.reqs.pairs) {
            Rat binom = 1;
            for (long long j = 0; j < p.r - 1; ++j) binom = binom * to_rat(m - j) / to_rat(j + 1);
            total += binom;
            if (total > to_rat(max_fault_sets))
                throw SizeLimitError("path-relative fault enumeration exceeds cap");
        }
    }
    auto in_h = detail::to_edge_flags(g, h);
    FeasibilityReport report;
    std::vector<bool> g_alive(m, true), h_alive = in_h;
    std::vector<int> fault;
    for (int i = 0; i < (int)inst.reqs.pairs.size(); ++i) {
        const auto& p = inst.reqs.pairs[i];
        // enumerate fault sets of size 0 .. r_i-1 over all edges of G
        std::function<bool(int, int)> scan = [&](int start, int remaining) -> bool {
            if (detail::connects(g, g_alive, p.s, p.t) &&
                !detail::connects(g, h_alive, p.s, p.t)) {
                report.feasible = false;
                report.witness_faults = fault;
                report.witness_pair = i;
                return true;
            }
            if (remaining == 0) return false;
            for (int e = start; e < m; ++e) {
                g_alive[e] = false;
                h_alive[e] = false;
                fault.push_back(e);
                bool done = scan(e + 1, remaining - 1);
                fault.pop_back();
                g_alive[e] = true;
                h_alive[e] = in_h[e];
                if (done) return true;
            }
            return false;
        };
        if (scan(0, int(p.r) - 1)) return report;
    }
    return report;
}

enum class Model { CutRelative, PathRelative };

struct AlgOptions {
    long long max_cuts_per_lp = -1;
};

// Iterative rounding: solve the residual extreme-point LP, fix every free
// edge at or above 1/2, repeat until the picked set passes the separation
// oracle.  Guarantees cost <= 2 * (LP optimum).
inline Solution crndp_alg(const Instance& inst, const AlgOptions& opts = {}) {
    if (!inst.has_separation_oracle())
        throw UnsupportedFamilyError("crndp_alg needs an SNDP-family instance");
    const Multigraph& g = inst.graph;
    const int m = g.edge_count();
    std::vector<bool> fixed(m, false);
    Solution sol;
    sol.lp_bound = 0;
    bool lp_bound_set = false;
    std::vector<Rat> indicator(m);
    for (int round = 0; round <= m + 1; ++round) {
        for (int e = 0; e < m; ++e) indicator[e] = fixed[e] ? 1 : 0;
        if (!separation_oracle_crsndp(inst.reqs, g, fixed, indicator)) break;
        if (round > m) throw IterationLimitError("rounding loop failed to terminate");
        CrlpOptions lp_opts;
        lp_opts.max_cuts = opts.max_cuts_per_lp;
        CrlpResult lp = solve_crlp(inst.reqs, g, inst.costs, fixed, lp_opts);
        if (!lp_bound_set) {
            sol.lp_bound = lp.solution.objective;
            lp_bound_set = true;
        }
        IterationRecord rec;
        rec.lp_objective = lp.solution.objective;
        rec.free_edges = 0;
        for (int e = 0; e < m; ++e) rec.free_edges += !fixed[e];
        for (int e = 0; e < m; ++e) {
            if (fixed[e]) continue;
            if (lp.solution.x[e] * 2 >= 1) {
                fixed[e] = true;
                rec.z1.push_back(e);
            }
        }
        if (rec.z1.empty())
            throw HalfEdgeAssertionError("no edge reached 1/2 in an infeasible round");
        sol.trace.push_back(std::move(rec));
    }
    sol.edges = detail::flags_to_edges(fixed);
    sol.cost = inst.cost_of(sol.edges);
    if (sol.cost > 2 * sol.lp_bound)
        throw Error("approximation bound violated: cost " + rat_to_string(sol.cost) +
                    " > 2 * " + rat_to_string(sol.lp_bound));
    return sol;
}

// Brute-force optimum over all 2^m edge subsets under the chosen model's
// checker; ties resolved toward the lexicographically smallest edge-id set.
inline std::pair<Rat, std::vector<int>> exact_opt(const Instance& inst, Model model,
                                                  int max_edges = 24) {
    const Multigraph& g = inst.graph;
    const int m = g.edge_count();
    if (m > max_edges)
        throw SizeLimitError("exact optimum limited to " + std::to_string(max_edges) +
                             " edges");
    // Precomputed cut tables make the 2^m scan cheap for the cut model.
    std::vector<std::uint64_t> cut_masks;
    std::vector<long long> cut_rhs;
    if (model == Model::CutRelative) {
        if (g.n > 20)
            throw SizeLimitError("exact optimum cut table limited to 20 nodes");
        CutFnPtr f = inst.base_fn();
        // Node 0 kept outside S: S and V-S carry the same constraint.
        const std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
        for (std::uint64_t s = 2; s < full; s += 2) {
            NodeSet side = NodeSet::from_mask(g.n, s);
            long long need = std::min(f->eval(side), cut_size(g, side));
            if (need <= 0) continue;
            std::uint64_t emask = 0;
            for (int e : cut_edges(g, side)) emask |= std::uint64_t(1) << e;
            cut_masks.push_back(emask);
            cut_rhs.push_back(need);
        }
    }
    auto feasible = [&](std::uint64_t h_mask, const std::vector<int>& h_edges) -> bool {
        if (model == Model::CutRelative) {
            for (size_t i = 0; i < cut_masks.size(); ++i)
                if (__builtin_popcountll(cut_masks[i] & h_mask) < cut_rhs[i]) return false;
            return true;
        }
        return check_path_relative(inst, h_edges).feasible;
    };
    std::optional<Rat> best_cost;
    std::vector<int> best_edges;
    for (std::uint64_t h = 0; h < (std::uint64_t(1) << m); ++h) {
        std::vector<int> edges;
        for (int e = 0; e < m; ++e)
            if ((h >> e) & 1) edges.push_back(e);
        Rat cost = inst.cost_of(edges);
        if (best_cost && cost > *best_cost) continue;
        if (!feasible(h, edges)) continue;
        bool better = !best_cost || cost < *best_cost ||
                      std::lexicographical_compare(edges.begin(), edges.end(),
                                                   best_edges.begin(), best_edges.end());
        if (better) {
            best_cost = cost;
            best_edges = edges;
        }
    }
    assert(best_cost);  // the full edge set is always feasible for both models
    return {*best_cost, best_edges};
}

// k-ECSS as cut-relative SNDP: append a source and sink joined to every node
// by zero-cost edges and require (k+n)-edge-connectivity between them.
// Rejects graphs that are not k-edge-connected (no feasible k-ECSS solution).
inline Instance kecss_reduction(const Multigraph& g, const std::vector<Rat>& costs,
                                long long k) {
    assert(k >= 1);
    std::vector<Rat> unit(g.edge_count(), Rat(1));
    for (int v = 1; v < g.n; ++v) {
        NodeSet src(g.n), dst(g.n);
        src.insert(0);
        dst.insert(v);
        if (min_cut(g, unit, src, dst).value < to_rat(k))
            throw NotKConnectedError("graph is not " + std::to_string(k) +
                                     "-edge-connected");
    }
    int n = g.n;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rat> new_costs;
    for (int e = 0; e < g.edge_count(); ++e) {
        edges.emplace_back(g.edges[e].u, g.edges[e].v);
        new_costs.push_back(costs[e]);
    }
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(n, v);  // source edges
        new_costs.push_back(Rat(0));
    }
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, n + 1);  // sink edges
        new_costs.push_back(Rat(0));
    }
    Multigraph reduced(n + 2, edges);
    SndpRequirements reqs;
    reqs.pairs.push_back({n, n + 1, k + n});
    return Instance::sndp(std::move(reduced), std::move(new_costs), std::move(reqs));
}

}  // namespace crnd
