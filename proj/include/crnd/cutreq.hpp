#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "crnd/errors.hpp"
#include "crnd/graph.hpp"
#include "crnd/rational.hpp"

namespace crnd {

struct ReqTriple {
    int s, t;
    long long r;
};

// The (s_i, t_i, r_i) tuples of an SNDP instance.  Parsed instances have
// k >= 1 and s_i != t_i; an empty list is allowed programmatically and
// evaluates to the all-zero requirement.
struct SndpRequirements {
    std::vector<ReqTriple> pairs;

    size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
};

// max r_i over pairs separated by S; 0 when none (so 0 at the empty set and
// at V), which makes the function symmetric and normalized as-is.
inline long long sndp_eval(const SndpRequirements& reqs, const NodeSet& s) {
    long long best = 0;
    for (const auto& p : reqs.pairs)
        if (s.contains(p.s) != s.contains(p.t)) best = std::max(best, p.r);
    return best;
}

// k on proper nonempty subsets, 0 at the trivial ones.
inline long long kecss_eval(long long k, const NodeSet& s) {
    if (s.empty() || s.is_all()) return 0;
    return k;
}

// Requirement value standing in for "no level of tau admits this set": the
// cut-relative problem caps every requirement at |delta_G(S)|, so any value
// above the edge count behaves as infinity.
constexpr long long kUnboundedRequirement = 1LL << 30;

// Non-increasing fault-tolerance level profile tau, optionally paired with a
// monotone set measure pi (defaults to |S|).
struct GraceProfile {
    std::vector<long long> tau;  // tau(l) = 0 for l >= tau.size()
    std::function<Rat(const NodeSet&)> pi;  // null: pi(S) = |S|

    bool non_increasing() const {
        for (size_t i = 1; i < tau.size(); ++i)
            if (tau[i] > tau[i - 1]) return false;
        return true;
    }
};

// min{ l : tau(l) < pi(S) }, 0 at the empty set.
inline long long grace_eval(const GraceProfile& profile, const NodeSet& s) {
    if (s.empty()) return 0;
    Rat measure = profile.pi ? profile.pi(s) : Rat(s.count());
    if (measure <= 0) return kUnboundedRequirement;
    for (size_t l = 0; l < profile.tau.size(); ++l)
        if (to_rat(profile.tau[l]) < measure) return (long long)l;
    return (long long)profile.tau.size();  // tau is 0 from here on
}

enum class CutFnTag { Sndp, Kecss, Grace, GracePi, Residual, Restriction, Symmetrized, Zero, Custom };

// Cut-requirement function f: 2^V -> Z as a lazy evaluator.  Restrictions and
// residuals compose by wrapping, so decomposition trees never materialize
// 2^V tables.  All wrappers evaluate on node sets over the ORIGINAL universe.
class CutFunction {
public:
    virtual ~CutFunction() = default;
    virtual long long eval(const NodeSet& s) const = 0;
    virtual CutFnTag tag() const = 0;
    // Non-null when the weighted max-deficiency s-t cut oracle applies
    // (the function is backed by SNDP requirement tuples).
    virtual const SndpRequirements* sndp_reqs() const { return nullptr; }
};

using CutFnPtr = std::shared_ptr<const CutFunction>;

namespace detail {

class SndpFn final : public CutFunction {
public:
    explicit SndpFn(SndpRequirements reqs) : reqs_(std::move(reqs)) {}
    long long eval(const NodeSet& s) const override { return sndp_eval(reqs_, s); }
    CutFnTag tag() const override { return CutFnTag::Sndp; }
    const SndpRequirements* sndp_reqs() const override { return &reqs_; }

private:
    SndpRequirements reqs_;
};

class KecssFn final : public CutFunction {
public:
    explicit KecssFn(long long k) : k_(k) {}
    long long eval(const NodeSet& s) const override { return kecss_eval(k_, s); }
    CutFnTag tag() const override { return CutFnTag::Kecss; }

private:
    long long k_;
};

class GraceFn final : public CutFunction {
public:
    explicit GraceFn(GraceProfile profile) : profile_(std::move(profile)) {}
    long long eval(const NodeSet& s) const override { return grace_eval(profile_, s); }
    CutFnTag tag() const override { return profile_.pi ? CutFnTag::GracePi : CutFnTag::Grace; }

private:
    GraceProfile profile_;
};

class ZeroFn final : public CutFunction {
public:
    long long eval(const NodeSet&) const override { return 0; }
    CutFnTag tag() const override { return CutFnTag::Zero; }
};

class SymmetrizedFn final : public CutFunction {
public:
    SymmetrizedFn(CutFnPtr base, NodeSet universe)
        : base_(std::move(base)), universe_(std::move(universe)) {}
    long long eval(const NodeSet& s) const override {
        if (s.empty() || s == universe_) return 0;
        return std::max(base_->eval(s), base_->eval(universe_ - s));
    }
    CutFnTag tag() const override { return CutFnTag::Symmetrized; }
    const SndpRequirements* sndp_reqs() const override { return base_->sndp_reqs(); }

private:
    CutFnPtr base_;
    NodeSet universe_;
};

class ResidualFn final : public CutFunction {
public:
    ResidualFn(CutFnPtr base, std::vector<int> ids, std::vector<Multigraph::Edge> endpoints)
        : base_(std::move(base)), ids_(std::move(ids)), endpoints_(std::move(endpoints)) {}
    long long eval(const NodeSet& s) const override {
        long long crossing = 0;
        for (const auto& e : endpoints_) crossing += s.contains(e.u) != s.contains(e.v);
        return base_->eval(s) - crossing;
    }
    CutFnTag tag() const override { return CutFnTag::Residual; }
    const CutFunction& base() const { return *base_; }
    const CutFnPtr& base_ptr() const { return base_; }
    const std::vector<int>& edge_ids() const { return ids_; }
    const std::vector<Multigraph::Edge>& endpoints() const { return endpoints_; }

private:
    CutFnPtr base_;
    std::vector<int> ids_;
    std::vector<Multigraph::Edge> endpoints_;
};

class RestrictionFn final : public CutFunction {
public:
    RestrictionFn(CutFnPtr base, NodeSet domain, NodeSet parent_domain,
                  std::vector<Multigraph::Edge> boundary)
        : base_(std::move(base)),
          domain_(std::move(domain)),
          parent_rest_(parent_domain - domain_),
          boundary_(std::move(boundary)) {}

    long long eval(const NodeSet& t) const override {
        assert(t.subset_of(domain_));
        if (t.empty() || t == domain_) return 0;
        NodeSet t_ext = t | parent_rest_;
        return std::max(base_->eval(t) - crossing(t), base_->eval(t_ext) - crossing(t_ext));
    }
    CutFnTag tag() const override { return CutFnTag::Restriction; }
    const NodeSet& domain() const { return domain_; }

private:
    long long crossing(const NodeSet& s) const {
        long long c = 0;
        for (const auto& e : boundary_) c += s.contains(e.u) != s.contains(e.v);
        return c;
    }

    CutFnPtr base_;
    NodeSet domain_;
    NodeSet parent_rest_;  // parent domain minus our domain
    std::vector<Multigraph::Edge> boundary_;
};

}  // namespace detail

inline CutFnPtr make_sndp_fn(SndpRequirements reqs) {
    return std::make_shared<detail::SndpFn>(std::move(reqs));
}
inline CutFnPtr make_kecss_fn(long long k) { return std::make_shared<detail::KecssFn>(k); }
inline CutFnPtr make_grace_fn(GraceProfile profile) {
    return std::make_shared<detail::GraceFn>(std::move(profile));
}
inline CutFnPtr make_zero_fn() { return std::make_shared<detail::ZeroFn>(); }

// f^sym(S) = max{f(S), f(V-S)} on proper subsets, 0 at the trivial ones.
inline CutFnPtr symmetrize(CutFnPtr f, NodeSet universe) {
    return std::make_shared<detail::SymmetrizedFn>(std::move(f), std::move(universe));
}

// S |-> f(S) - |delta_Z(S)|.  Nested residuals collapse to a single wrapper
// over the union of the (disjoint) fixed edge sets.
inline CutFnPtr residual_fn(CutFnPtr f, const Multigraph& g, const std::vector<int>& z) {
    std::vector<int> ids = z;
    std::vector<Multigraph::Edge> endpoints;
    CutFnPtr base = std::move(f);
    if (base->tag() == CutFnTag::Residual) {
        const auto& inner = static_cast<const detail::ResidualFn&>(*base);
        ids.insert(ids.end(), inner.edge_ids().begin(), inner.edge_ids().end());
        endpoints = inner.endpoints();
        base = inner.base_ptr();
    }
    for (int e : z) {
        assert(e >= 0 && e < g.edge_count());
        endpoints.push_back(g.edges[e]);
    }
    std::sort(ids.begin(), ids.end());
    assert(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    return std::make_shared<detail::ResidualFn>(std::move(base), std::move(ids),
                                                std::move(endpoints));
}

// Restriction of f (defined on 2^parent_domain, graph side taken from g) to
// S: the symmetric normalized residual after committing delta_{G[parent]}(S).
inline CutFnPtr restrict_fn_within(CutFnPtr f, const Multigraph& g, const NodeSet& parent_domain,
                                   const NodeSet& s) {
    if (s.empty() || s == parent_domain)
        throw InvalidRestrictionError("restriction domain must be a proper nonempty subset");
    assert(s.subset_of(parent_domain));
    std::vector<Multigraph::Edge> boundary;
    for (const auto& e : g.edges) {
        if (!parent_domain.contains(e.u) || !parent_domain.contains(e.v)) continue;
        if (s.contains(e.u) != s.contains(e.v)) boundary.push_back(e);
    }
    return std::make_shared<detail::RestrictionFn>(std::move(f), s, parent_domain,
                                                   std::move(boundary));
}

inline CutFnPtr restrict_fn(CutFnPtr f, const Multigraph& g, const NodeSet& s) {
    return restrict_fn_within(std::move(f), g, g.all_nodes(), s);
}

// f(S) - w(delta_G(S)); the unit-weight form is a "small cut" test when > 0.
inline Rat weighted_deficiency(const CutFunction& f, const Multigraph& g,
                               const std::vector<Rat>& w, const NodeSet& s) {
    return to_rat(f.eval(s)) - cut_weight(g, s, w);
}

inline long long deficiency(const CutFunction& f, const Multigraph& g, const NodeSet& s) {
    return f.eval(s) - cut_size(g, s);
}

struct WsupmViolation {
    NodeSet a, b;
};

// Exhaustive weak-supermodularity check over all pairs A,B of subsets of
// `domain` (4^|domain| pairs).  Returns the first violation in mask order.
inline std::optional<WsupmViolation> weak_supermodularity_violation(const CutFunction& f,
                                                                    const NodeSet& domain,
                                                                    int max_nodes = 20) {
    int universe = domain.universe_size();
    if (domain.count() > max_nodes || universe > std::max(max_nodes, 24))
        throw SizeLimitError("weak-supermodularity check limited to " +
                             std::to_string(max_nodes) + " nodes");
    std::uint64_t dmask = domain.to_mask();
    std::vector<long long> table(std::uint64_t(1) << universe, 0);
    std::vector<std::uint64_t> subs;
    for (std::uint64_t s = 0;; s = (s - dmask) & dmask) {
        subs.push_back(s);
        table[s] = f.eval(NodeSet::from_mask(universe, s));
        if (s == dmask) break;
    }
    for (std::uint64_t a : subs) {
        for (std::uint64_t b : subs) {
            long long lhs = table[a] + table[b];
            long long cap =
                std::max(table[a & b] + table[a | b], table[a & ~b] + table[b & ~a]);
            if (lhs > cap)
                return WsupmViolation{NodeSet::from_mask(universe, a),
                                      NodeSet::from_mask(universe, b)};
        }
    }
    return std::nullopt;
}

inline std::optional<WsupmViolation> weak_supermodularity_violation(const CutFunction& f,
                                                                    int n_nodes,
                                                                    int max_nodes = 20) {
    return weak_supermodularity_violation(f, NodeSet::all(n_nodes), max_nodes);
}

inline bool is_weakly_supermodular(const CutFunction& f, const NodeSet& domain,
                                   int max_nodes = 20) {
    return !weak_supermodularity_violation(f, domain, max_nodes).has_value();
}

inline bool is_weakly_supermodular(const CutFunction& f, int n_nodes, int max_nodes = 20) {
    return !weak_supermodularity_violation(f, n_nodes, max_nodes).has_value();
}

}  // namespace crnd
