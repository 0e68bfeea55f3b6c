#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "crnd/cutreq.hpp"
#include "crnd/errors.hpp"
#include "crnd/flow.hpp"
#include "crnd/graph.hpp"
#include "crnd/rational.hpp"

namespace crnd {

// Node (h, S) of the canonical decomposition tree.  Internal nodes split S
// along a maximum-deficiency cut A into children (h_A, A) and (h_{S-A}, S-A);
// leaves have no small cut left.
struct DecompNode {
    CutFnPtr fn;  // over subsets of S, in original node labels
    NodeSet node_set;
    std::unique_ptr<DecompNode> left, right;
    NodeSet split_cut;           // A, valid on internal nodes
    long long split_deficiency = 0;

    bool is_leaf() const { return !left; }
};

struct DecompTree {
    std::unique_ptr<DecompNode> root;
    Multigraph graph;
    CutFnPtr base_fn;
};

struct Decomposition {
    std::vector<std::pair<CutFnPtr, NodeSet>> leaves;  // left-to-right
    std::vector<int> forced_edges;                     // union of leaf boundaries
};

namespace detail {

// Global max-deficiency s-t cut oracle over (f, G); the tree construction
// only ever queries the root pair, never the wrapped functions.
using MaxDefOracle = std::function<std::pair<long long, NodeSet>(int, int)>;

inline MaxDefOracle sndp_max_def_oracle(const SndpRequirements& reqs, const Multigraph& g) {
    auto cache = std::make_shared<std::map<std::pair<int, int>, std::pair<long long, NodeSet>>>();
    return [&reqs, &g, cache](int s, int t) {
        auto key = std::make_pair(std::min(s, t), std::max(s, t));
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        MaxDeficiencyCut cut = max_deficiency_st_cut(reqs, g, key.first, key.second);
        std::pair<long long, NodeSet> out;
        if (cut.no_separating_cut) {
            // only possible with no requirement pairs at all: f is zero, so
            // the best s-t cut is the plain minimum cut
            NodeSet src(g.n), dst(g.n);
            src.insert(key.first);
            dst.insert(key.second);
            MinCutResult mc = min_cut(g, std::vector<Rat>(g.edge_count(), Rat(1)), src, dst);
            assert(mc.value.get_den() == 1);
            out = {-mc.value.get_num().get_si(), mc.side};
        } else {
            assert(cut.value.get_den() == 1);
            out = {cut.value.get_num().get_si(), cut.side};
        }
        (*cache)[key] = out;
        return out;
    };
}

inline MaxDefOracle brute_max_def_oracle(const CutFunction& f, const Multigraph& g,
                                         int max_nodes) {
    if (g.n > max_nodes)
        throw SizeLimitError("brute-force max-deficiency oracle limited to " +
                             std::to_string(max_nodes) + " nodes");
    return [&f, &g](int s, int t) {
        long long best = 0;
        NodeSet best_side(g.n);
        bool found = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
            if (!((mask >> s) & 1) || ((mask >> t) & 1)) continue;  // s in, t out
            NodeSet side = NodeSet::from_mask(g.n, mask);
            long long def = f.eval(side) - cut_size(g, side);
            if (!found || def > best || (def == best && side.lex_less(best_side))) {
                best = def;
                best_side = side;
                found = true;
            }
        }
        assert(found);
        return std::make_pair(best, best_side);
    };
}

inline std::unique_ptr<DecompNode> build_node(CutFnPtr fn, const NodeSet& node_set,
                                              const Multigraph& g,
                                              const MaxDefOracle& oracle) {
    auto node = std::make_unique<DecompNode>();
    node->fn = fn;
    node->node_set = node_set;
    if (node_set.count() <= 1) return node;

    // Max-deficiency cut inside S via global s-t queries: fix the smallest
    // node, try every other t, intersect each global maximizer with S.
    int s = node_set.first();
    long long best_def = 0;
    NodeSet best_cut(g.n);
    bool found = false;
    for (int t = 0; t < g.n; ++t) {
        if (t == s || !node_set.contains(t)) continue;
        auto [def, side] = oracle(s, t);
        NodeSet candidate = side & node_set;
        if (!found || def > best_def || (def == best_def && candidate.lex_less(best_cut))) {
            best_def = def;
            best_cut = candidate;
            found = true;
        }
    }
    if (!found || best_def <= 0) return node;  // leaf: no small cut

    assert(!best_cut.empty() && best_cut != node_set);
    // The transfer lemma promises the intersected global maximizer attains
    // the same deficiency locally; this is the one place it is relied upon.
    assert(fn->eval(best_cut) - cut_size_within(g, node_set, best_cut) == best_def);

    node->split_cut = best_cut;
    node->split_deficiency = best_def;
    NodeSet rest = node_set - best_cut;
    node->left = build_node(restrict_fn_within(fn, g, node_set, best_cut), best_cut, g, oracle);
    node->right = build_node(restrict_fn_within(fn, g, node_set, rest), rest, g, oracle);
    return node;
}

}  // namespace detail

inline DecompTree build_decomposition_tree(const SndpRequirements& reqs, const Multigraph& g) {
    DecompTree tree;
    tree.graph = g;
    tree.base_fn = make_sndp_fn(reqs);
    auto oracle = detail::sndp_max_def_oracle(reqs, tree.graph);
    tree.root = detail::build_node(tree.base_fn, tree.graph.all_nodes(), tree.graph, oracle);
    return tree;
}

// For families without a min-cut oracle: size-capped brute force.
inline DecompTree build_decomposition_tree(CutFnPtr f, const Multigraph& g,
                                           int max_nodes = 20) {
    DecompTree tree;
    tree.graph = g;
    tree.base_fn = std::move(f);
    if (const SndpRequirements* reqs = tree.base_fn->sndp_reqs()) {
        auto oracle = detail::sndp_max_def_oracle(*reqs, tree.graph);
        tree.root = detail::build_node(tree.base_fn, tree.graph.all_nodes(), tree.graph, oracle);
        return tree;
    }
    auto oracle = detail::brute_max_def_oracle(*tree.base_fn, tree.graph, max_nodes);
    tree.root = detail::build_node(tree.base_fn, tree.graph.all_nodes(), tree.graph, oracle);
    return tree;
}

inline Decomposition leaf_instances(const DecompTree& tree) {
    Decomposition out;
    std::function<void(const DecompNode*)> walk = [&](const DecompNode* node) {
        if (node->is_leaf()) {
            out.leaves.emplace_back(node->fn, node->node_set);
            return;
        }
        walk(node->left.get());
        walk(node->right.get());
    };
    walk(tree.root.get());
    std::vector<bool> forced(tree.graph.edge_count(), false);
    for (const auto& [fn, nodes] : out.leaves)
        for (int e : cut_edges(tree.graph, nodes)) forced[e] = true;
    for (int e = 0; e < tree.graph.edge_count(); ++e)
        if (forced[e]) out.forced_edges.push_back(e);
    return out;
}

// Succinct description of the leaf partition: an edge uv lies on some small
// cut iff the max-deficiency u-v cut is positive; the parts are the
// components after removing all such edges.
inline std::pair<std::vector<int>, std::vector<NodeSet>> small_cut_boundary_partition(
    const SndpRequirements& reqs, const Multigraph& g) {
    std::vector<int> z;
    for (int e = 0; e < g.edge_count(); ++e) {
        MaxDeficiencyCut cut = max_deficiency_st_cut(reqs, g, g.edges[e].u, g.edges[e].v);
        if (!cut.no_separating_cut && cut.value > 0) z.push_back(e);
    }
    return {z, components(g, z)};
}

inline std::pair<std::vector<int>, std::vector<NodeSet>> small_cut_boundary_partition(
    const CutFunction& f, const Multigraph& g, int max_nodes = 20) {
    if (g.n > max_nodes)
        throw SizeLimitError("brute-force boundary scan limited to " +
                             std::to_string(max_nodes) + " nodes");
    std::vector<bool> in_z(g.edge_count(), false);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << g.n); ++mask) {
        NodeSet side = NodeSet::from_mask(g.n, mask);
        if (f.eval(side) - cut_size(g, side) <= 0) continue;
        for (int e : cut_edges(g, side)) in_z[e] = true;
    }
    std::vector<int> z;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_z[e]) z.push_back(e);
    return {z, components(g, z)};
}

// gamma_i(S) = max over unions X of other parts of f(S u X) - |delta_Z(S u X)|
// with Z the union of all part boundaries; coincides with the leaf function.
inline long long gamma_eval(const CutFunction& f, const Multigraph& g,
                            const std::vector<NodeSet>& partition, int leaf, const NodeSet& s,
                            int max_parts = 16) {
    const int p = int(partition.size());
    if (p > max_parts)
        throw SizeLimitError("gamma evaluation limited to " + std::to_string(max_parts) +
                             " parts");
    assert(leaf >= 0 && leaf < p);
    assert(s.subset_of(partition[leaf]));
    if (s.empty() || s == partition[leaf]) return 0;
    std::vector<bool> boundary(g.edge_count(), false);
    for (const auto& part : partition)
        for (int e : cut_edges(g, part)) boundary[e] = true;
    std::vector<int> others;
    for (int i = 0; i < p; ++i)
        if (i != leaf) others.push_back(i);
    long long best = 0;
    bool first = true;
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << others.size()); ++pick) {
        NodeSet arg = s;
        for (size_t i = 0; i < others.size(); ++i)
            if ((pick >> i) & 1) arg = arg | partition[others[i]];
        long long crossing = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!boundary[e]) continue;
            crossing += arg.contains(g.edges[e].u) != arg.contains(g.edges[e].v);
        }
        long long value = f.eval(arg) - crossing;
        if (first || value > best) best = value;
        first = false;
    }
    return best;
}

// One node per line: `node <depth> S={...} split=A={...} def=<d>` for
// internal nodes, `leaf <depth> S={...}` for leaves; preorder.
inline void dump_tree(std::ostream& os, const DecompTree& tree,
                      const std::function<std::string(int)>& node_name) {
    auto set_str = [&](const NodeSet& s) {
        std::string out = "{";
        bool first = true;
        for (int v : s.to_vector()) {
            if (!first) out += ",";
            out += node_name(v);
            first = false;
        }
        return out + "}";
    };
    std::function<void(const DecompNode*, int)> walk = [&](const DecompNode* node, int depth) {
        if (node->is_leaf()) {
            os << "leaf " << depth << " S=" << set_str(node->node_set) << "\n";
            return;
        }
        os << "node " << depth << " S=" << set_str(node->node_set)
           << " split=A=" << set_str(node->split_cut) << " def=" << node->split_deficiency
           << "\n";
        walk(node->left.get(), depth + 1);
        walk(node->right.get(), depth + 1);
    };
    walk(tree.root.get(), 0);
}

}  // namespace crnd
