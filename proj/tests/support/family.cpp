#include "support/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "polcurve/reductions.hpp"

namespace polcurve::tests {

namespace {

// Compositions of `total` into `parts` nonnegative summands.
void compositions(long long total, int parts, std::vector<long long>& current,
                  const std::function<void(const std::vector<long long>&)>& fn) {
    if (parts == 1) {
        current.push_back(total);
        fn(current);
        current.pop_back();
        return;
    }
    for (long long v = 0; v <= total; ++v) {
        current.push_back(v);
        compositions(total - v, parts - 1, current, fn);
        current.pop_back();
    }
}

}  // namespace

std::vector<CurveGraph> wp_stable_curves(long long genus, int max_vertices) {
    std::vector<CurveGraph> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_vertices; ++n) {
        // Vertex pairs (including loops) in a fixed order.
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
        long long max_edges = genus + n - 1;  // cycle rank at most `genus`

        std::vector<int> mult(pairs.size(), 0);
        auto emit = [&](long long edge_total) {
            long long cycle = edge_total - n + 1;
            if (cycle < 0 || cycle > genus) return;
            long long vertex_budget = genus - cycle;
            std::vector<long long> genera;
            compositions(vertex_budget, n, genera, [&](const std::vector<long long>& gs) {
                // Cusp decorations: each vertex can carry up to its genus.
                std::vector<long long> cusps(n, 0);
                auto walk = [&](auto&& self, int i) -> void {
                    if (i == n) {
                        std::vector<VertexData> vertices;
                        for (int v = 0; v < n; ++v)
                            vertices.push_back({"v" + std::to_string(v), gs[v], cusps[v]});
                        std::vector<std::tuple<std::string, std::string, int>> edges;
                        for (std::size_t p = 0; p < pairs.size(); ++p)
                            for (int k = 0; k < mult[p]; ++k)
                                edges.emplace_back("v" + std::to_string(pairs[p].first),
                                                   "v" + std::to_string(pairs[p].second), 1);
                        CurveGraph curve(vertices, edges);
                        if (!curve.connected()) return;
                        if (curve.genus() != genus) return;
                        CurveClass cls;
                        try {
                            cls = classify_curve(curve);
                        } catch (const Error&) {
                            return;
                        }
                        if (!cls.wp_stable) return;
                        if (seen.insert(curve.canonical_key()).second)
                            out.push_back(std::move(curve));
                        return;
                    }
                    for (long long c = 0; c <= gs[i]; ++c) {
                        cusps[i] = c;
                        self(self, i + 1);
                    }
                };
                walk(walk, 0);
            });
        };
        auto enumerate_mult = [&](auto&& self, std::size_t p, long long used) -> void {
            if (p == pairs.size()) {
                emit(used);
                return;
            }
            for (int m = 0; used + m <= max_edges; ++m) {
                mult[p] = m;
                self(self, p + 1, used + m);
            }
            mult[p] = 0;
        };
        enumerate_mult(enumerate_mult, 0, 0);
    }
    std::sort(out.begin(), out.end(), [](const CurveGraph& a, const CurveGraph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.canonical_key() < b.canonical_key();
    });
    return out;
}

std::vector<CurveGraph> quasi_wp_stable_family(long long genus, int max_vertices) {
    std::vector<CurveGraph> out;
    std::set<std::string> seen;
    for (const CurveGraph& base : wp_stable_curves(genus, max_vertices)) {
        for (CurveGraph& model : enumerate_models(base, ModelKind::QuasiWpStable)) {
            if (seen.insert(model.canonical_key()).second) out.push_back(std::move(model));
        }
    }
    return out;
}

CurveGraph random_connected_curve(std::mt19937& rng, int max_vertices, int max_edges,
                                  bool allow_length_two) {
    for (;;) {
        int n = 1 + static_cast<int>(rng() % max_vertices);
        std::vector<VertexData> vertices;
        for (int i = 0; i < n; ++i) {
            long long genus = rng() % 3;
            long long cusps = genus > 0 ? static_cast<long long>(rng() % (genus + 1)) : 0;
            vertices.push_back({"v" + std::to_string(i), genus, cusps});
        }
        std::vector<std::tuple<std::string, std::string, int>> edges;
        int e = n == 1 ? static_cast<int>(rng() % (max_edges + 1))
                       : 1 + static_cast<int>(rng() % max_edges);
        for (int k = 0; k < e; ++k) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            int length = allow_length_two && u != v && rng() % 4 == 0 ? 2 : 1;
            edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v), length);
        }
        try {
            CurveGraph curve(vertices, edges);
            if (curve.connected()) return curve;
        } catch (const Error&) {
        }
    }
}

}  // namespace polcurve::tests
