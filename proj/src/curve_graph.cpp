#include "polcurve/curve_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace polcurve {

CurveGraph::CurveGraph(std::vector<VertexData> vertices,
                       const std::vector<std::tuple<std::string, std::string, int>>& edges) {
    vertices_ = std::move(vertices);
    std::sort(vertices_.begin(), vertices_.end(),
              [](const VertexData& a, const VertexData& b) { return a.id < b.id; });
    for (const auto& [u, v, length] : edges) {
        int iu = index_of(u);
        int iv = index_of(v);
        if (iu < 0 || iv < 0)
            throw InvalidCurve("edge endpoint '" + (iu < 0 ? u : v) + "' is not a vertex");
        EdgeData e;
        e.u = std::min(iu, iv);
        e.v = std::max(iu, iv);
        e.length = length;
        edges_.push_back(e);
    }
    validate_and_normalize();
}

void CurveGraph::validate_and_normalize() {
    if (vertices_.size() > 32)
        throw TooLarge("curve has more than 32 vertices");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (vertices_[i].id == vertices_[i + 1].id)
            throw InvalidCurve("duplicate vertex id '" + vertices_[i].id + "'");
    }
    for (const auto& v : vertices_) {
        if (v.id.empty()) throw InvalidCurve("empty vertex id");
        if (v.genus < 0) throw InvalidCurve("negative genus on '" + v.id + "'");
        if (v.cusps < 0) throw InvalidCurve("negative cusp count on '" + v.id + "'");
        if (v.cusps > v.genus)
            throw InvalidCurve("cusp count exceeds genus on '" + v.id +
                               "' (each cusp contributes 1 to the arithmetic genus)");
    }
    for (const auto& e : edges_) {
        if (e.length != 1 && e.length != 2)
            throw InvalidCurve("edge length must be 1 or 2");
        if (e.length == 2 && e.u == e.v)
            throw InvalidCurve("a tacnode edge cannot be a loop");
    }
    std::sort(edges_.begin(), edges_.end(), [](const EdgeData& a, const EdgeData& b) {
        return std::tie(a.u, a.v, a.length) < std::tie(b.u, b.v, b.length);
    });
    neighbor_masks_.assign(vertices_.size(), 0);
    for (const auto& e : edges_) {
        if (e.u != e.v) {
            neighbor_masks_[e.u] |= VertexMask(1) << e.v;
            neighbor_masks_[e.v] |= VertexMask(1) << e.u;
        }
    }
}

int CurveGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(
        vertices_.begin(), vertices_.end(), id,
        [](const VertexData& v, const std::string& key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) return -1;
    return static_cast<int>(it - vertices_.begin());
}

long long CurveGraph::genus() const {
    long long g = 1 - size();
    for (const auto& v : vertices_) g += v.genus;
    for (const auto& e : edges_) g += e.length;
    return g;
}

long long CurveGraph::total_cusps() const {
    long long c = 0;
    for (const auto& v : vertices_) c += v.cusps;
    return c;
}

bool CurveGraph::mask_connected(VertexMask mask) const {
    if (mask == 0) return false;
    VertexMask seen = mask & (~mask + 1);  // lowest set bit
    for (;;) {
        VertexMask frontier = 0;
        VertexMask cursor = seen;
        while (cursor) {
            int i = std::countr_zero(cursor);
            cursor &= cursor - 1;
            frontier |= neighbor_masks_[i] & mask;
        }
        frontier &= ~seen;
        if (!frontier) break;
        seen |= frontier;
    }
    return seen == mask;
}

bool CurveGraph::connected() const {
    if (vertices_.empty()) return false;
    return mask_connected(full_mask());
}

bool CurveGraph::is_exceptional_vertex(int i) const {
    const auto& v = vertices_[i];
    if (v.genus != 0 || v.cusps != 0) return false;
    long long incident = 0;
    for (const auto& e : edges_) {
        if (e.u == i && e.v == i) return false;  // a loop gives the component genus
        if (e.u == i || e.v == i) incident += e.length;
    }
    return incident == 2;
}

VertexMask CurveGraph::exceptional_mask() const {
    VertexMask mask = 0;
    for (int i = 0; i < size(); ++i)
        if (is_exceptional_vertex(i)) mask |= VertexMask(1) << i;
    return mask;
}

bool CurveGraph::has_length_two_edges() const {
    for (const auto& e : edges_)
        if (e.length == 2) return true;
    return false;
}

SubcurveStats subcurve_stats(const CurveGraph& curve, VertexMask subset) {
    if (subset == 0) throw InvalidSubcurve("subcurve must be nonempty");
    if ((subset & ~curve.full_mask()) != 0)
        throw InvalidSubcurve("subset references vertices outside the curve");
    SubcurveStats stats;
    stats.mask = subset;
    long long vertex_genus = 0;
    int count = 0;
    for (int i = 0; i < curve.size(); ++i) {
        if (subset & (VertexMask(1) << i)) {
            vertex_genus += curve.vertex(i).genus;
            ++count;
        }
    }
    long long internal_length = 0;
    for (const auto& e : curve.edges()) {
        bool u_in = (subset >> e.u) & 1;
        bool v_in = (subset >> e.v) & 1;
        if (u_in && v_in) internal_length += e.length;
        else if (u_in || v_in) stats.crossing_length += e.length;
    }
    stats.genus = vertex_genus + internal_length - count + 1;
    stats.omega_degree = 2 * stats.genus - 2 + stats.crossing_length;
    return stats;
}

void for_each_two_sided_subcurve(const CurveGraph& curve,
                                 const std::function<void(VertexMask)>& fn,
                                 int vertex_cap) {
    if (curve.size() > vertex_cap)
        throw TooLarge("subcurve scan above the vertex cap");
    VertexMask full = curve.full_mask();
    for (VertexMask mask = 1; mask < full; ++mask) {
        if (curve.mask_connected(mask) && curve.mask_connected(full & ~mask)) fn(mask);
    }
}

void for_each_connected_subcurve(const CurveGraph& curve,
                                 const std::function<void(VertexMask)>& fn,
                                 int vertex_cap) {
    if (curve.size() > vertex_cap)
        throw TooLarge("subcurve scan above the vertex cap");
    VertexMask full = curve.full_mask();
    for (VertexMask mask = 1; mask <= full; ++mask) {
        if (curve.mask_connected(mask)) fn(mask);
    }
}

std::vector<std::string> mask_ids(const CurveGraph& curve, VertexMask mask) {
    std::vector<std::string> ids;
    for (int i = 0; i < curve.size(); ++i)
        if (mask & (VertexMask(1) << i)) ids.push_back(curve.vertex(i).id);
    return ids;
}

namespace {

// Iterative partition refinement; colors are dense indices into deterministic
// encodings, so equality is exact.
std::vector<int> refine_colors(const CurveGraph& curve,
                               const std::vector<long long>* vertex_labels) {
    int n = curve.size();
    std::vector<std::string> encodings(n);
    for (int i = 0; i < n; ++i) {
        std::ostringstream os;
        const auto& v = curve.vertex(i);
        os << 'g' << v.genus << 'c' << v.cusps;
        if (vertex_labels) os << 'd' << (*vertex_labels)[i];
        std::vector<int> loops, incident;
        for (const auto& e : curve.edges()) {
            if (e.u == i && e.v == i) loops.push_back(e.length);
            else if (e.u == i || e.v == i) incident.push_back(e.length);
        }
        std::sort(loops.begin(), loops.end());
        std::sort(incident.begin(), incident.end());
        os << 'L';
        for (int l : loops) os << l;
        os << 'E';
        for (int l : incident) os << l;
        encodings[i] = os.str();
    }
    std::vector<int> colors(n, 0);
    auto assign = [&](const std::vector<std::string>& enc) {
        std::map<std::string, int> ids;
        for (const auto& e : enc) ids.emplace(e, 0);
        int next = 0;
        for (auto& [k, v] : ids) v = next++;
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = ids[enc[i]];
        return out;
    };
    colors = assign(encodings);
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, int>> nbr;
            for (const auto& e : curve.edges()) {
                if (e.u == i && e.v != i) nbr.emplace_back(colors[e.v], e.length);
                else if (e.v == i && e.u != i) nbr.emplace_back(colors[e.u], e.length);
            }
            std::sort(nbr.begin(), nbr.end());
            std::ostringstream os;
            os << colors[i];
            for (auto& [c, l] : nbr) os << ',' << c << ':' << l;
            next[i] = os.str();
        }
        std::vector<int> refined = assign(next);
        if (refined == colors) break;
        colors = refined;
    }
    return colors;
}

struct CanonicalSearch {
    const CurveGraph& curve;
    const std::vector<long long>* labels;
    std::vector<int> colors;
    std::vector<std::vector<int>> cells;  // orderings must respect cell order
    std::vector<int> position;            // original index -> placed position, -1 unplaced
    std::vector<int> order;               // placed original indices
    std::vector<long long> best;
    std::vector<int> best_order;
    std::vector<long long> current;
    bool have_best = false;

    explicit CanonicalSearch(const CurveGraph& c, const std::vector<long long>* l)
        : curve(c), labels(l) {
        colors = refine_colors(c, l);
        int classes = 0;
        for (int col : colors) classes = std::max(classes, col + 1);
        cells.assign(classes, {});
        for (int i = 0; i < c.size(); ++i) cells[colors[i]].push_back(i);
        position.assign(c.size(), -1);
    }

    // Encoding of one placed vertex: color, vertex labels, then its edges to
    // already-placed vertices (loops included) as sorted (position, length).
    void append_vertex(int v, std::vector<long long>& out) const {
        const auto& data = curve.vertex(v);
        out.push_back(colors[v]);
        out.push_back(data.genus);
        out.push_back(data.cusps);
        out.push_back(labels ? (*labels)[v] : 0);
        std::vector<std::pair<int, int>> back_edges;
        for (const auto& e : curve.edges()) {
            int other;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            else continue;
            if (position[other] >= 0) back_edges.emplace_back(position[other], e.length);
        }
        std::sort(back_edges.begin(), back_edges.end());
        for (auto& [p, l] : back_edges) {
            out.push_back(p);
            out.push_back(l);
        }
        out.push_back(-1);
    }

    // `ahead` records that the current prefix is already strictly smaller
    // than the incumbent; only then may a larger fresh segment survive.
    void search(std::size_t cell, std::size_t placed_in_cell, bool ahead) {
        if (cell == cells.size()) {
            if (!have_best || ahead) {
                best = current;
                best_order = order;
                have_best = true;
            }
            return;
        }
        if (placed_in_cell == cells[cell].size()) {
            search(cell + 1, 0, ahead);
            return;
        }
        for (int v : cells[cell]) {
            if (position[v] >= 0) continue;
            position[v] = static_cast<int>(order.size());
            order.push_back(v);
            std::size_t mark = current.size();
            append_vertex(v, current);
            bool prune = false;
            bool child_ahead = ahead;
            if (have_best && !ahead) {
                // All full encodings have equal length, so offsets align.
                for (std::size_t i = mark; i < current.size() && i < best.size(); ++i) {
                    if (current[i] != best[i]) {
                        if (current[i] > best[i]) prune = true;
                        else child_ahead = true;
                        break;
                    }
                }
            }
            if (!prune) search(cell, placed_in_cell + 1, child_ahead);
            current.resize(mark);
            order.pop_back();
            position[v] = -1;
        }
    }
};

}  // namespace

std::string CurveGraph::canonical_key(const std::vector<long long>* vertex_labels) const {
    CanonicalSearch search(*this, vertex_labels);
    search.search(0, 0, false);
    std::ostringstream os;
    os << size() << ';';
    for (long long t : search.best) os << t << ',';
    return os.str();
}

std::vector<int> CurveGraph::canonical_order(const std::vector<long long>* vertex_labels) const {
    CanonicalSearch search(*this, vertex_labels);
    search.search(0, 0, false);
    return search.best_order;
}

bool isomorphic(const CurveGraph& a, const CurveGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return a.canonical_key() == b.canonical_key();
}

bool isomorphic_with_labels(const CurveGraph& a, const std::vector<long long>& la,
                            const CurveGraph& b, const std::vector<long long>& lb) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return a.canonical_key(&la) == b.canonical_key(&lb);
}

CurveClass classify_curve(const CurveGraph& curve, int vertex_cap) {
    if (!curve.connected()) throw NotConnected("classify_curve requires a connected curve");
    if (curve.genus() < 2) throw GenusTooSmall("classify_curve requires genus >= 2");

    CurveClass result;
    VertexMask exc = curve.exceptional_mask();

    bool omega_nef = true;
    bool omega_ample = true;
    bool exceptional_irreducible = true;
    bool genus0_small_ok = true;
    VertexMask full = curve.full_mask();
    for_each_connected_subcurve(
        curve,
        [&](VertexMask mask) {
            SubcurveStats st = subcurve_stats(curve, mask);
            if (st.omega_degree < 0) omega_nef = false;
            if (st.genus == 0 && st.crossing_length < 3) omega_ample = false;
            if (st.omega_degree == 0 && std::popcount(mask) != 1)
                exceptional_irreducible = false;
            if (st.genus == 0 && st.crossing_length <= 2) {
                bool single_exceptional =
                    std::popcount(mask) == 1 && (exc & mask) == mask;
                if (!single_exceptional) genus0_small_ok = false;
            }
            if (mask != full && st.genus == 1 && st.crossing_length == 1)
                result.elliptic_tails.push_back(mask);
        },
        vertex_cap);

    bool has_cusps = curve.total_cusps() > 0;
    bool has_len2 = curve.has_length_two_edges();
    bool len2_ok = true;
    for (const auto& e : curve.edges()) {
        if (e.length == 2 && !curve.is_exceptional_vertex(e.u) &&
            !curve.is_exceptional_vertex(e.v))
            len2_ok = false;
    }
    bool no_tails = result.elliptic_tails.empty();

    result.pre_stable = !has_cusps && !has_len2;
    result.pre_wp_stable = len2_ok;
    result.pre_p_stable = result.pre_wp_stable && no_tails;
    result.g_semistable = omega_nef;
    result.g_quasistable = omega_nef && exceptional_irreducible;
    result.g_stable = omega_ample;
    result.quasi_wp_stable = result.pre_wp_stable && genus0_small_ok;
    result.quasi_p_stable = result.quasi_wp_stable && no_tails;
    result.quasi_stable = result.quasi_wp_stable && result.pre_stable;
    result.wp_stable = result.pre_wp_stable && omega_ample;
    result.p_stable = result.wp_stable && no_tails;
    result.stable = result.pre_stable && omega_ample;

    for (int i = 0; i < curve.size(); ++i)
        if (exc & (VertexMask(1) << i)) result.exceptional_vertices.push_back(i);

    VertexMask plain = full & ~exc;
    int components = 0;
    VertexMask seen = 0;
    for (int i = 0; i < curve.size(); ++i) {
        VertexMask bit = VertexMask(1) << i;
        if (!(plain & bit) || (seen & bit)) continue;
        ++components;
        VertexMask comp = bit;
        for (;;) {
            VertexMask frontier = 0;
            VertexMask cursor = comp;
            while (cursor) {
                int j = std::countr_zero(cursor);
                cursor &= cursor - 1;
                frontier |= curve.neighbor_masks()[j] & plain;
            }
            frontier &= ~comp;
            if (!frontier) break;
            comp |= frontier;
        }
        seen |= comp;
    }
    result.non_exceptional_components = components;
    return result;
}

}  // namespace polcurve
