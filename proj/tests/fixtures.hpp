#pragma once

// The five-node golden instance used throughout: s-t pair at requirement 2,
// edge ids su=0 sv=1 uw=2 vw=3 sw=4 wt=5, node ids s=0 u=1 v=2 w=3 t=4.

#include "crnd/instance_io.hpp"

namespace fixtures {

using namespace crnd;

inline constexpr int S = 0, U = 1, V = 2, W = 3, T = 4;
inline constexpr int SU = 0, SV = 1, UW = 2, VW = 3, SW = 4, WT = 5;

inline ParsedInstance nolam() { return parse_instance(gen_nolam()); }

// unit costs on every edge, including sw
inline ParsedInstance nolam_unit_costs() {
    ParsedInstance parsed = nolam();
    parsed.inst.costs[SW] = 1;
    return parsed;
}

inline NodeSet ns(std::initializer_list<int> nodes) { return NodeSet::of(5, nodes); }

// the optimal extreme point from the worked example: 1/2 on su,sv,uw,vw and
// 1 on sw,wt
inline std::vector<Rat> xhat() {
    return {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1), Rat(1)};
}

inline std::vector<Rat> unit_weights(int m) { return std::vector<Rat>(m, Rat(1)); }

}  // namespace fixtures
