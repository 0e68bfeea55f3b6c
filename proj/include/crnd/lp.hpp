#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "crnd/cutreq.hpp"
#include "crnd/errors.hpp"
#include "crnd/flow.hpp"
#include "crnd/graph.hpp"
#include "crnd/rational.hpp"
#include "crnd/simplex.hpp"

namespace crnd {

// Point in [0,1]^E; fixed edges carry exactly 1.
struct FractionalSolution {
    std::vector<Rat> x;
    Rat objective;  // cost of the free part only
};

struct ViolatedCut {
    NodeSet side;
    long long rhs;  // min{f(S), |delta_G(S)|}
    Rat lhs;        // x(delta_G(S)), strictly below rhs
};

// Separation oracle for the cut-relative SNDP LP.  x must respect the box
// bounds and carry 1 on fixed edges.  For every edge a=uv with x_a < 1 and
// every requirement pair, both pinned min cuts ({s_i,u}-{t_i,v} and
// {s_i,v}-{t_i,u}) must have x-capacity >= r_i; the first failure in
// (edge id, i, orientation) scan order is returned as a violated constraint.
// Small cuts need no special casing: an unsaturated boundary edge of a small
// cut S makes the pinned min cut come in below |delta_G(S)| >= rhs.
inline std::optional<ViolatedCut> separation_oracle_crsndp(const SndpRequirements& reqs,
                                                           const Multigraph& g,
                                                           const std::vector<bool>& fixed,
                                                           const std::vector<Rat>& x) {
    assert((int)x.size() == g.edge_count());
    assert(fixed.empty() || (int)fixed.size() == g.edge_count());
    for (int a = 0; a < g.edge_count(); ++a) {
        assert(x[a] >= 0 && x[a] <= 1);
        if (x[a] == 1) continue;
        assert(fixed.empty() || !fixed[a]);
        int u = g.edges[a].u, v = g.edges[a].v;
        for (const auto& p : reqs.pairs) {
            for (int orient = 0; orient < 2; ++orient) {
                NodeSet sources(g.n), sinks(g.n);
                sources.insert(p.s);
                sinks.insert(p.t);
                sources.insert(orient == 0 ? u : v);
                sinks.insert(orient == 0 ? v : u);
                if (sources.intersects(sinks)) continue;
                MinCutResult mc = min_cut(g, x, sources, sinks);
                if (mc.value >= to_rat(p.r)) continue;
                ViolatedCut cut;
                cut.side = mc.side;
                cut.rhs = std::min(sndp_eval(reqs, mc.side), cut_size(g, mc.side));
                cut.lhs = mc.value;
                assert(cut.lhs < to_rat(cut.rhs));
                return cut;
            }
        }
    }
    return std::nullopt;
}

struct CrlpOptions {
    long long max_cuts = -1;  // default 10*m*k
};

struct CrlpResult {
    FractionalSolution solution;
    struct WorkingCut {
        NodeSet side;
        long long rhs_residual;  // min{f(S),|delta_G(S)|} - |delta_fixed(S)|
    };
    std::vector<WorkingCut> working_cuts;
    int rounds = 0;
};

// Extreme-point optimum of the cut-relative LP on the residual instance with
// the given edges fixed to 1: a cutting-plane loop over the vertex core,
// seeded with the terminal singleton cuts and driven by the separation
// oracle.  The returned point is feasible for the full constraint family and
// a vertex of the working relaxation, hence a vertex of the full polytope.
inline CrlpResult solve_crlp(const SndpRequirements& reqs, const Multigraph& g,
                             const std::vector<Rat>& costs, const std::vector<bool>& fixed,
                             const CrlpOptions& opts = {}) {
    const int m = g.edge_count();
    assert((int)costs.size() == m);
    assert(fixed.empty() || (int)fixed.size() == m);
    auto is_fixed = [&](int e) { return !fixed.empty() && fixed[e]; };

    std::vector<int> var_of(m, -1), edge_of;
    for (int e = 0; e < m; ++e) {
        if (is_fixed(e)) continue;
        var_of[e] = int(edge_of.size());
        edge_of.push_back(e);
    }
    const int nvars = int(edge_of.size());

    LinearProgram lp;
    lp.num_vars = nvars;
    lp.objective.reserve(nvars);
    for (int e : edge_of) lp.objective.push_back(costs[e]);

    CrlpResult result;
    auto add_cut_row = [&](const NodeSet& side) {
        long long rhs = std::min(sndp_eval(reqs, side), cut_size(g, side));
        LinearProgram::Row row;
        for (int e : cut_edges(g, side)) {
            if (is_fixed(e))
                --rhs;
            else
                row.coeffs.emplace_back(var_of[e], Rat(1));
        }
        row.rhs = to_rat(rhs);
        lp.rows.push_back(std::move(row));
        result.working_cuts.push_back({side, rhs});
    };

    // Seed constraints: the terminal singleton cuts, when not already implied.
    std::vector<int> terminals;
    for (const auto& p : reqs.pairs) {
        terminals.push_back(p.s);
        terminals.push_back(p.t);
    }
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    for (int v : terminals) {
        NodeSet single(g.n);
        single.insert(v);
        long long rhs = std::min(sndp_eval(reqs, single), cut_size(g, single));
        for (int e : cut_edges(g, single)) rhs -= is_fixed(e);
        if (rhs > 0) add_cut_row(single);
    }

    long long max_cuts = opts.max_cuts >= 0
                             ? opts.max_cuts
                             : 10LL * std::max(1, m) * std::max<size_t>(1, reqs.size());
    std::optional<Rat> prev_objective;
    std::vector<Rat> full_x(m, Rat(1));
    while (true) {
        VertexSolution vertex = solve_vertex_lp(lp);
        if (prev_objective) {
            // Cutting planes only shrink the relaxation.
            assert(vertex.objective >= *prev_objective);
        }
        prev_objective = vertex.objective;
        for (int e = 0; e < m; ++e) full_x[e] = is_fixed(e) ? Rat(1) : vertex.x[var_of[e]];
        auto violated = separation_oracle_crsndp(reqs, g, fixed, full_x);
        if (!violated) {
            assert(tight_system_rank(lp, vertex.x) == nvars);
            // Corollary of the decomposition result: a nontrivial instance
            // always leaves an edge at or above 1/2 in an extreme point.  An
            // all-zero optimum certifies the instance is trivial (it passed
            // the oracle), the only case with nothing to round.
            bool any_positive = false, any_half = false;
            for (int j = 0; j < nvars; ++j) {
                any_positive = any_positive || vertex.x[j] > 0;
                any_half = any_half || vertex.x[j] * 2 >= 1;
            }
            if (nvars > 0 && any_positive && !any_half)
                throw HalfEdgeAssertionError(
                    "extreme point has no edge with value >= 1/2");
            result.solution.x = full_x;
            result.solution.objective = vertex.objective;
            ++result.rounds;
            return result;
        }
        if ((long long)result.working_cuts.size() >= max_cuts)
            throw IterationLimitError("cutting-plane loop exceeded " +
                                      std::to_string(max_cuts) + " cuts");
        add_cut_row(violated->side);
        {
            // The new row must actually cut off the current vertex.
            const auto& row = lp.rows.back();
            Rat lhs = 0;
            for (const auto& [var, coef] : row.coeffs) lhs += coef * vertex.x[var];
            assert(lhs < row.rhs);
        }
        ++result.rounds;
    }
}

// One working constraint per line: `cut <node list> >= <rhs>`.
inline void dump_working_lp(std::ostream& os, const CrlpResult& result,
                            const std::function<std::string(int)>& node_name) {
    for (const auto& cut : result.working_cuts) {
        os << "cut ";
        bool first = true;
        for (int v : cut.side.to_vector()) {
            if (!first) os << ",";
            os << node_name(v);
            first = false;
        }
        os << " >= " << cut.rhs_residual << "\n";
    }
}

}  // namespace crnd
