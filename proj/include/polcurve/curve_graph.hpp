#ifndef POLCURVE_CURVE_GRAPH_HPP
#define POLCURVE_CURVE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polcurve/errors.hpp"

namespace polcurve {

// Vertex subsets are bitmasks over the canonical vertex order.
using VertexMask = std::uint32_t;

// Exhaustive subcurve scans are exponential in the vertex count; this cap
// keeps them at desk scale.
inline constexpr int kDefaultVertexCap = 22;

struct VertexData {
    std::string id;
    long long genus = 0;  // arithmetic genus of the component, cusps included
    long long cusps = 0;
};

struct EdgeData {
    int u = 0;  // vertex indices, u <= v; u == v is a loop (length 1 only)
    int v = 0;
    int length = 1;  // 1 = node, 2 = tacnode with a line
};

// Weighted dual graph of a reduced curve: one vertex per irreducible
// component, one edge per intersection point.
class CurveGraph {
public:
    CurveGraph() = default;
    CurveGraph(std::vector<VertexData> vertices,
               const std::vector<std::tuple<std::string, std::string, int>>& edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const VertexData& vertex(int i) const { return vertices_[i]; }
    const std::vector<VertexData>& vertices() const { return vertices_; }
    const EdgeData& edge(int e) const { return edges_[e]; }
    const std::vector<EdgeData>& edges() const { return edges_; }

    int index_of(const std::string& id) const;  // -1 when absent

    long long genus() const;  // g(X) = sum genus(v) + sum length(e) - |V| + 1
    long long total_cusps() const;
    bool connected() const;

    VertexMask full_mask() const { return size() >= 32 ? ~VertexMask(0) : ((VertexMask(1) << size()) - 1); }
    const std::vector<VertexMask>& neighbor_masks() const { return neighbor_masks_; }
    bool mask_connected(VertexMask mask) const;

    bool is_exceptional_vertex(int i) const;
    VertexMask exceptional_mask() const;

    // Every edge of a quasi-wp-stable curve larger than one vertex that is a
    // candidate blow-up site; used by reductions.
    bool has_length_two_edges() const;

    // Deterministic key identifying the labelled-isomorphism class. The
    // optional per-vertex labels participate in the refinement (used for
    // multidegree-decorated comparisons).
    std::string canonical_key(const std::vector<long long>* vertex_labels = nullptr) const;

    // Vertex indices in the order realizing the canonical key. Two isomorphic
    // graphs are matched by pairing equal positions of their orders.
    std::vector<int> canonical_order(const std::vector<long long>* vertex_labels = nullptr) const;

    friend bool isomorphic(const CurveGraph& a, const CurveGraph& b);

private:
    std::vector<VertexData> vertices_;  // sorted by id
    std::vector<EdgeData> edges_;       // sorted lexicographically by (u, v, length)
    std::vector<VertexMask> neighbor_masks_;

    void validate_and_normalize();
};

bool isomorphic(const CurveGraph& a, const CurveGraph& b);

// Isomorphism of curves decorated with a multidegree.
bool isomorphic_with_labels(const CurveGraph& a, const std::vector<long long>& la,
                            const CurveGraph& b, const std::vector<long long>& lb);

struct SubcurveStats {
    VertexMask mask = 0;
    long long genus = 0;            // g_Z, h^1(O_Z) convention for disconnected Z
    long long crossing_length = 0;  // k_Z = total length of edges leaving Z
    long long omega_degree = 0;     // deg_Z omega_X = 2 g_Z - 2 + k_Z
};

SubcurveStats subcurve_stats(const CurveGraph& curve, VertexMask subset);

// Calls fn on every nonempty proper subset Z with Z and Z^c both connected.
// By the additivity of degree, genus and crossing data this scan domain is
// sufficient for all balanced-type checks.
void for_each_two_sided_subcurve(const CurveGraph& curve,
                                 const std::function<void(VertexMask)>& fn,
                                 int vertex_cap = kDefaultVertexCap);

// Calls fn on every nonempty connected subset (proper and improper).
void for_each_connected_subcurve(const CurveGraph& curve,
                                 const std::function<void(VertexMask)>& fn,
                                 int vertex_cap = kDefaultVertexCap);

std::vector<std::string> mask_ids(const CurveGraph& curve, VertexMask mask);

struct CurveClass {
    bool pre_stable = false;
    bool pre_p_stable = false;
    bool pre_wp_stable = false;
    bool quasi_stable = false;
    bool quasi_p_stable = false;
    bool quasi_wp_stable = false;
    bool stable = false;
    bool p_stable = false;
    bool wp_stable = false;
    bool g_semistable = false;
    bool g_quasistable = false;
    bool g_stable = false;
    std::vector<int> exceptional_vertices;
    int non_exceptional_components = 0;  // gamma(X~)
    std::vector<VertexMask> elliptic_tails;
};

// Exhaustive connected-subcurve scan of every stability flag of Table 1.
CurveClass classify_curve(const CurveGraph& curve, int vertex_cap = kDefaultVertexCap);

}  // namespace polcurve

#endif
