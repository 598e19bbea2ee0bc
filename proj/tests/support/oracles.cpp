#include "support/oracles.hpp"

#include <bit>
#include <tuple>
#include <vector>

namespace polcurve::tests {

BigInt spanning_tree_count(const CurveGraph& curve) {
    int n = curve.size();
    int e = curve.edge_count();
    BigInt total(0);
    for (std::uint32_t pick = 0; pick < (1u << e); ++pick) {
        if (std::popcount(pick) != n - 1) continue;
        std::vector<std::tuple<std::string, std::string, int>> edges;
        long long weight = 1;
        bool loop = false;
        for (int i = 0; i < e; ++i) {
            if (!((pick >> i) & 1)) continue;
            const auto& edge = curve.edge(i);
            if (edge.u == edge.v) loop = true;
            edges.emplace_back(curve.vertex(edge.u).id, curve.vertex(edge.v).id,
                               edge.length);
            weight *= edge.length;
        }
        if (loop) continue;
        if (CurveGraph(curve.vertices(), edges).connected()) total += BigInt(weight);
    }
    return total;
}

}  // namespace polcurve::tests
