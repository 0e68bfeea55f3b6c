#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crnd/errors.hpp"
#include "crnd/rational.hpp"
#include "crnd/solver.hpp"

namespace crnd {

// An instance plus the node-name mapping from its file form.  Names are
// arbitrary non-whitespace tokens, assigned dense ids in first-appearance
// order; the core works on ids only.
struct ParsedInstance {
    Instance inst;
    std::vector<std::string> names;

    int node_id(const std::string& name) const {
        for (int i = 0; i < (int)names.size(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
    std::string name_of(int v) const { return names[v]; }
};

// Grammar (one directive per line, '#' lines are comments):
//   nodes <count>
//   edge <u> <v> <cost>          cost: nonneg decimal or p/q
//   req <s> <t> <r>              r: positive integer
//   kecss <k>
//   grace <t0> <t1> ... <tj>     non-increasing
// Exactly one requirement family per file (unless require_family is cleared,
// for callers that only need the graph).
inline ParsedInstance parse_instance(const std::string& text, bool require_family = true) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::map<std::string, int> id_of;
    std::vector<std::string> names;
    auto intern = [&](const std::string& token) {
        auto it = id_of.find(token);
        if (it != id_of.end()) return it->second;
        int id = int(names.size());
        id_of.emplace(token, id);
        names.push_back(token);
        return id;
    };

    int declared_nodes = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rat> costs;
    std::vector<ReqTriple> reqs;
    long long kecss_k = -1;
    std::vector<long long> tau;
    bool has_grace = false;
    int family_line = 0;

    auto parse_int = [&](const std::string& tok, const char* what) -> long long {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
        }
    };
    auto check_single_family = [&](const std::string& incoming) {
        if ((incoming != "req" && !reqs.empty()) || (incoming != "kecss" && kecss_k >= 0) ||
            (incoming != "grace" && has_grace))
            throw MixedFamiliesError(line_no, "more than one requirement family");
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive[0] == '#') continue;
        if (directive == "nodes") {
            std::string tok;
            if (!(ls >> tok)) throw ParseError(line_no, "nodes: missing count");
            declared_nodes = int(parse_int(tok, "node count"));
            if (declared_nodes < 0) throw ParseError(line_no, "nodes: negative count");
        } else if (directive == "edge") {
            std::string u, v, cost;
            if (!(ls >> u >> v >> cost)) throw ParseError(line_no, "edge: expected <u> <v> <cost>");
            int uid = intern(u), vid = intern(v);
            if (uid == vid) throw SelfLoopError("line " + std::to_string(line_no) +
                                                ": self-loop at '" + u + "'");
            Rat c;
            try {
                c = parse_rat(cost);
            } catch (const Error&) {
                throw ParseError(line_no, "edge: bad cost '" + cost + "'");
            }
            if (c < 0) throw ParseError(line_no, "edge: negative cost");
            edges.emplace_back(uid, vid);
            costs.push_back(c);
        } else if (directive == "req") {
            check_single_family("req");
            std::string s, t, r;
            if (!(ls >> s >> t >> r)) throw ParseError(line_no, "req: expected <s> <t> <r>");
            int sid = intern(s), tid = intern(t);
            if (sid == tid) throw ParseError(line_no, "req: source equals sink");
            long long rv = parse_int(r, "positive integer requirement");
            if (rv < 1) throw ParseError(line_no, "req: requirement must be >= 1");
            reqs.push_back({sid, tid, rv});
            family_line = line_no;
        } else if (directive == "kecss") {
            check_single_family("kecss");
            if (kecss_k >= 0) throw ParseError(line_no, "kecss: repeated directive");
            std::string k;
            if (!(ls >> k)) throw ParseError(line_no, "kecss: missing k");
            kecss_k = parse_int(k, "positive integer k");
            if (kecss_k < 1) throw ParseError(line_no, "kecss: k must be >= 1");
            family_line = line_no;
        } else if (directive == "grace") {
            check_single_family("grace");
            if (has_grace) throw ParseError(line_no, "grace: repeated directive");
            std::string tok;
            while (ls >> tok) {
                long long v = parse_int(tok, "nonnegative integer level");
                if (v < 0) throw ParseError(line_no, "grace: negative level");
                tau.push_back(v);
            }
            if (tau.empty()) throw ParseError(line_no, "grace: empty profile");
            for (size_t i = 1; i < tau.size(); ++i)
                if (tau[i] > tau[i - 1])
                    throw NonDecreasingTauError(line_no, "grace: profile must be non-increasing");
            has_grace = true;
            family_line = line_no;
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
        std::string extra;
        if (directive != "grace" && (ls >> extra))
            throw ParseError(line_no, "trailing token '" + extra + "'");
    }
    (void)family_line;

    int n = int(names.size());
    if (declared_nodes >= 0) {
        if (declared_nodes < n)
            throw ParseError(line_no, "nodes: declared count below named node count");
        // synthesize names for declared-but-unreferenced nodes
        for (int i = n; i < declared_nodes; ++i) {
            std::string name = "n" + std::to_string(i);
            while (id_of.count(name)) name += "_";
            intern(name);
        }
        n = declared_nodes;
    }

    int families = !reqs.empty() + (kecss_k >= 0) + has_grace;
    if (families == 0 && require_family)
        throw ParseError(line_no, "missing requirement family (req/kecss/grace)");

    for (const auto& r : reqs)
        if (r.s >= n || r.t >= n) throw ParseError(line_no, "requirement names unknown node");

    Multigraph g(n, edges);
    ParsedInstance out;
    out.names = std::move(names);
    if (kecss_k >= 0) {
        out.inst = Instance::kecss(std::move(g), std::move(costs), kecss_k);
    } else if (has_grace) {
        GraceProfile profile;
        profile.tau = std::move(tau);
        out.inst = Instance::grace_fn(std::move(g), std::move(costs), std::move(profile));
    } else {
        out.inst = Instance::sndp(std::move(g), std::move(costs), SndpRequirements{std::move(reqs)});
    }
    return out;
}

inline std::string print_instance(const ParsedInstance& parsed) {
    std::ostringstream os;
    const Instance& inst = parsed.inst;
    os << "nodes " << inst.graph.n << "\n";
    for (int e = 0; e < inst.graph.edge_count(); ++e)
        os << "edge " << parsed.names[inst.graph.edges[e].u] << " "
           << parsed.names[inst.graph.edges[e].v] << " " << rat_to_string(inst.costs[e])
           << "\n";
    switch (inst.family) {
        case ReqFamily::Sndp:
            for (const auto& p : inst.reqs.pairs)
                os << "req " << parsed.names[p.s] << " " << parsed.names[p.t] << " " << p.r
                   << "\n";
            break;
        case ReqFamily::Kecss:
            os << "kecss " << inst.kecss_k << "\n";
            break;
        case ReqFamily::Grace: {
            os << "grace";
            for (long long t : inst.grace.tau) os << " " << t;
            os << "\n";
            break;
        }
    }
    return os.str();
}

// The instance behind every golden value in this project: five nodes, six
// edges, one pair at requirement 2, the s-w edge free.
inline std::string gen_nolam() {
    return "# s-t 2-edge-connectivity, cut-relative\n"
           "edge s u 1\n"
           "edge s v 1\n"
           "edge u w 1\n"
           "edge v w 1\n"
           "edge s w 0\n"
           "edge w t 1\n"
           "req s t 2\n";
}

inline std::string gen_kecss_reduction(const ParsedInstance& base, long long k) {
    Instance reduced = kecss_reduction(base.inst.graph, base.inst.costs, k);
    ParsedInstance out;
    out.inst = std::move(reduced);
    out.names = base.names;
    std::string s_name = "_s", t_name = "_t";
    auto taken = [&](const std::string& name) {
        for (const auto& existing : out.names)
            if (existing == name) return true;
        return false;
    };
    while (taken(s_name)) s_name = "_" + s_name;
    while (taken(t_name)) t_name = "_" + t_name;
    out.names.push_back(s_name);
    out.names.push_back(t_name);
    return print_instance(out);
}

namespace detail {

// splitmix64: tiny, seed-stable across platforms (std distributions are not)
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long below(long long bound) { return (long long)(next() % (std::uint64_t)bound); }
};

}  // namespace detail

// Seed-deterministic random SNDP instance; byte-identical across runs.
inline std::string gen_random(int n, int m, int num_reqs, int rmax, std::uint64_t seed) {
    if (n < 2) throw Error("gen random: need at least 2 nodes");
    if (num_reqs < 1) throw Error("gen random: need at least 1 requirement");
    if (rmax < 1) throw Error("gen random: rmax must be >= 1");
    detail::Rng rng(seed);
    std::ostringstream os;
    os << "nodes " << n << "\n";
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int e = 0; e < m; ++e) {
        int u = int(rng.below(n));
        int v = int(rng.below(n - 1));
        if (v >= u) ++v;
        os << "edge " << names[u] << " " << names[v] << " " << rng.below(10) << "\n";
    }
    for (int i = 0; i < num_reqs; ++i) {
        int s = int(rng.below(n));
        int t = int(rng.below(n - 1));
        if (t >= s) ++t;
        os << "req " << names[s] << " " << names[t] << " " << 1 + rng.below(rmax) << "\n";
    }
    return os.str();
}

}  // namespace crnd
