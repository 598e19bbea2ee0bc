#include "polcurve/reductions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace polcurve {

BlowupSite BlowupSite::external_node(int edge_index) {
    BlowupSite s;
    s.kind = Kind::ExternalNode;
    s.edge_index = edge_index;
    return s;
}

BlowupSite BlowupSite::internal_node(int edge_index) {
    BlowupSite s;
    s.kind = Kind::InternalNode;
    s.edge_index = edge_index;
    return s;
}

BlowupSite BlowupSite::cusp(std::string vertex_id) {
    BlowupSite s;
    s.kind = Kind::Cusp;
    s.vertex_id = std::move(vertex_id);
    return s;
}

namespace {

std::string fresh_vertex_id(const CurveGraph& curve) {
    for (int n = 1;; ++n) {
        std::string candidate = "e" + std::to_string(n);
        if (curve.index_of(candidate) < 0) return candidate;
    }
}

struct Parts {
    std::vector<VertexData> vertices;
    std::vector<std::tuple<std::string, std::string, int>> edges;
};

Parts to_parts(const CurveGraph& curve) {
    Parts parts;
    parts.vertices = curve.vertices();
    for (const auto& e : curve.edges())
        parts.edges.emplace_back(curve.vertex(e.u).id, curve.vertex(e.v).id, e.length);
    return parts;
}

}  // namespace

BlowupResult blow_up(const CurveGraph& curve, const BlowupSite& site) {
    Parts parts = to_parts(curve);
    std::string fresh = fresh_vertex_id(curve);
    ContractionMap map;
    for (const auto& v : curve.vertices()) map.vertex_map.emplace_back(v.id, v.id);

    switch (site.kind) {
        case BlowupSite::Kind::ExternalNode: {
            if (site.edge_index < 0 || site.edge_index >= curve.edge_count())
                throw InvalidCurve("blow-up site references a missing edge");
            EdgeData e = curve.edge(site.edge_index);
            if (e.length != 1 || e.u == e.v)
                throw InvalidCurve("external node site must be a non-loop edge of length 1");
            std::string u = curve.vertex(e.u).id;
            std::string w = curve.vertex(e.v).id;
            parts.edges.erase(parts.edges.begin() + site.edge_index);
            parts.vertices.push_back({fresh, 0, 0});
            parts.edges.emplace_back(u, fresh, 1);
            parts.edges.emplace_back(fresh, w, 1);
            map.contracted.push_back({fresh, ContractedToNode{u, w}});
            break;
        }
        case BlowupSite::Kind::InternalNode: {
            if (site.edge_index < 0 || site.edge_index >= curve.edge_count())
                throw InvalidCurve("blow-up site references a missing edge");
            EdgeData e = curve.edge(site.edge_index);
            if (e.length != 1 || e.u != e.v)
                throw InvalidCurve("internal node site must be a loop");
            std::string u = curve.vertex(e.u).id;
            parts.edges.erase(parts.edges.begin() + site.edge_index);
            parts.vertices.push_back({fresh, 0, 0});
            parts.edges.emplace_back(u, fresh, 1);
            parts.edges.emplace_back(u, fresh, 1);
            map.contracted.push_back({fresh, ContractedToNode{u, u}});
            break;
        }
        case BlowupSite::Kind::Cusp: {
            int vi = curve.index_of(site.vertex_id);
            if (vi < 0) throw InvalidCurve("cusp site on unknown vertex");
            if (curve.vertex(vi).cusps < 1)
                throw NoCusp("vertex '" + site.vertex_id + "' carries no cusp");
            for (auto& v : parts.vertices) {
                if (v.id == site.vertex_id) {
                    v.cusps -= 1;
                    v.genus -= 1;
                }
            }
            parts.vertices.push_back({fresh, 0, 0});
            parts.edges.emplace_back(site.vertex_id, fresh, 2);
            map.contracted.push_back({fresh, ContractedToCusp{site.vertex_id}});
            break;
        }
    }
    BlowupResult result{CurveGraph(parts.vertices, parts.edges), std::move(map), fresh};
    return result;
}

ReductionResult wps_reduce(const CurveGraph& curve, int vertex_cap) {
    CurveClass cls = classify_curve(curve, vertex_cap);
    if (!cls.quasi_wp_stable)
        throw NotQuasiWpStable("wp-stable reduction needs a quasi-wp-stable curve");

    ContractionMap map;
    std::set<int> drop;
    Parts parts;
    std::vector<std::pair<std::string, long long>> cusp_bump;  // id -> extra cusps

    for (int i : cls.exceptional_vertices) drop.insert(i);
    for (int i = 0; i < curve.size(); ++i) {
        if (drop.count(i)) continue;
        parts.vertices.push_back(curve.vertex(i));
        map.vertex_map.emplace_back(curve.vertex(i).id, curve.vertex(i).id);
    }
    // Each exceptional vertex has either two length-1 edges or one length-2
    // edge; quasi-wp-stability keeps exceptional vertices pairwise
    // non-adjacent, so contractions are independent.
    std::vector<bool> consumed(curve.edge_count(), false);
    for (int i : cls.exceptional_vertices) {
        std::vector<int> incident;
        for (int e = 0; e < curve.edge_count(); ++e) {
            const auto& edge = curve.edge(e);
            if (edge.u == i || edge.v == i) incident.push_back(e);
        }
        const std::string& exc_id = curve.vertex(i).id;
        if (incident.size() == 1) {
            const auto& edge = curve.edge(incident[0]);
            int other = edge.u == i ? edge.v : edge.u;
            std::string target = curve.vertex(other).id;
            for (auto& v : parts.vertices) {
                if (v.id == target) {
                    v.cusps += 1;
                    v.genus += 1;
                }
            }
            map.contracted.push_back({exc_id, ContractedToCusp{target}});
        } else {
            const auto& e0 = curve.edge(incident[0]);
            const auto& e1 = curve.edge(incident[1]);
            int a = e0.u == i ? e0.v : e0.u;
            int b = e1.u == i ? e1.v : e1.u;
            parts.edges.emplace_back(curve.vertex(a).id, curve.vertex(b).id, 1);
            map.contracted.push_back(
                {exc_id, ContractedToNode{curve.vertex(a).id, curve.vertex(b).id}});
        }
        for (int e : incident) consumed[e] = true;
    }
    for (int e = 0; e < curve.edge_count(); ++e) {
        if (consumed[e]) continue;
        const auto& edge = curve.edge(e);
        parts.edges.emplace_back(curve.vertex(edge.u).id, curve.vertex(edge.v).id,
                                 edge.length);
    }
    return ReductionResult{CurveGraph(parts.vertices, parts.edges), std::move(map)};
}

namespace {

// Lexicographically smallest maximal elliptic tail, or 0 when none exist.
VertexMask pick_maximal_tail(const CurveGraph& curve, int vertex_cap) {
    std::vector<VertexMask> tails;
    VertexMask full = curve.full_mask();
    for_each_connected_subcurve(
        curve,
        [&](VertexMask mask) {
            if (mask == full) return;
            SubcurveStats st = subcurve_stats(curve, mask);
            if (st.genus == 1 && st.crossing_length == 1) tails.push_back(mask);
        },
        vertex_cap);
    VertexMask best = 0;
    for (VertexMask t : tails) {
        bool maximal = true;
        for (VertexMask other : tails)
            if (other != t && (other & t) == t) maximal = false;
        if (maximal && (best == 0 || t < best)) best = t;
    }
    return best;
}

}  // namespace

ReductionResult ps_reduce(const CurveGraph& curve, int vertex_cap) {
    if (curve.genus() < 3)
        throw GenusTooSmall("p-stable reduction is defined for genus >= 3");
    ReductionResult stage = wps_reduce(curve, vertex_cap);
    for (;;) {
        VertexMask tail = pick_maximal_tail(stage.curve, vertex_cap);
        if (tail == 0) break;
        const CurveGraph& cur = stage.curve;
        int attach = -1;
        for (const auto& e : cur.edges()) {
            bool u_in = (tail >> e.u) & 1;
            bool v_in = (tail >> e.v) & 1;
            if (u_in != v_in) attach = u_in ? e.v : e.u;
        }
        Parts parts;
        std::string attach_id = cur.vertex(attach).id;
        for (int i = 0; i < cur.size(); ++i) {
            if ((tail >> i) & 1) continue;
            VertexData v = cur.vertex(i);
            if (i == attach) {
                v.cusps += 1;
                v.genus += 1;
            }
            parts.vertices.push_back(v);
        }
        for (const auto& e : cur.edges()) {
            if (((tail >> e.u) & 1) || ((tail >> e.v) & 1)) continue;
            parts.edges.emplace_back(cur.vertex(e.u).id, cur.vertex(e.v).id, e.length);
        }
        for (int i = 0; i < cur.size(); ++i) {
            if (!((tail >> i) & 1)) continue;
            stage.contraction.contracted.push_back(
                {cur.vertex(i).id, ContractedToCusp{attach_id}});
        }
        auto& vm = stage.contraction.vertex_map;
        vm.erase(std::remove_if(vm.begin(), vm.end(),
                                [&](const auto& pair) {
                                    int idx = cur.index_of(pair.second);
                                    return idx >= 0 && ((tail >> idx) & 1);
                                }),
                 vm.end());
        stage.curve = CurveGraph(parts.vertices, parts.edges);
    }
    return stage;
}

namespace {

// Blow-up sites of a wp-stable curve, grouped so interchangeable parallel
// edges are counted once: each entry is (u, v, multiplicity) for non-loop
// node classes, (u, u, multiplicity) for loops, plus per-vertex cusp counts.
struct SiteClasses {
    struct EdgeClass {
        int u, v;
        int multiplicity;
    };
    std::vector<EdgeClass> edge_classes;
    std::vector<int> cusp_counts;  // by vertex index
};

SiteClasses site_classes(const CurveGraph& base, bool include_cusps) {
    SiteClasses sites;
    std::map<std::pair<int, int>, int> counts;
    for (const auto& e : base.edges()) {
        if (e.length != 1) continue;
        counts[{e.u, e.v}] += 1;
    }
    for (const auto& [key, mult] : counts)
        sites.edge_classes.push_back({key.first, key.second, mult});
    sites.cusp_counts.assign(base.size(), 0);
    if (include_cusps)
        for (int i = 0; i < base.size(); ++i)
            sites.cusp_counts[i] = static_cast<int>(base.vertex(i).cusps);
    return sites;
}

// Vertex permutations of the base preserving labels and the edge multiset.
std::vector<std::vector<int>> automorphisms(const CurveGraph& base) {
    int n = base.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::multiset<std::tuple<int, int, int>> reference;
    for (const auto& e : base.edges())
        reference.insert({e.u, e.v, e.length});
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (base.vertex(i).genus != base.vertex(perm[i]).genus ||
                base.vertex(i).cusps != base.vertex(perm[i]).cusps)
                ok = false;
        }
        if (!ok) continue;
        std::multiset<std::tuple<int, int, int>> image;
        for (const auto& e : base.edges()) {
            int u = perm[e.u], v = perm[e.v];
            image.insert({std::min(u, v), std::max(u, v), e.length});
        }
        if (image == reference) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

}  // namespace

std::vector<CurveGraph> enumerate_models(const CurveGraph& base, ModelKind kind,
                                         int vertex_cap) {
    CurveClass cls = classify_curve(base, vertex_cap);
    bool include_cusps = kind != ModelKind::QuasiStable;
    switch (kind) {
        case ModelKind::QuasiStable:
            if (!cls.stable) throw WrongInputClass("quasi-stable models need a stable base");
            break;
        case ModelKind::QuasiPStable:
            if (!cls.p_stable)
                throw WrongInputClass("quasi-p-stable models need a p-stable base");
            break;
        case ModelKind::QuasiWpStable:
            if (!cls.wp_stable)
                throw WrongInputClass("quasi-wp-stable models need a wp-stable base");
            break;
    }

    SiteClasses sites = site_classes(base, include_cusps);
    std::vector<std::vector<int>> autos = automorphisms(base);
    int ec = static_cast<int>(sites.edge_classes.size());
    int n = base.size();

    // A selection is (per-class blow-up count, per-vertex cusp blow-up count).
    std::vector<int> edge_pick(ec, 0), cusp_pick(n, 0);
    std::set<std::vector<int>> seen;
    std::vector<CurveGraph> models;

    std::map<std::pair<int, int>, int> class_index;
    for (int c = 0; c < ec; ++c)
        class_index[{sites.edge_classes[c].u, sites.edge_classes[c].v}] = c;

    // Orbit key under Aut(base): both coordinates composed with the same
    // automorphism so the map is a genuine group action.
    auto canonical_selection = [&](const std::vector<int>& ep, const std::vector<int>& cp) {
        std::vector<int> best;
        for (const auto& perm : autos) {
            std::vector<int> flat;
            for (int c = 0; c < ec; ++c) {
                int u = perm[sites.edge_classes[c].u];
                int v = perm[sites.edge_classes[c].v];
                flat.push_back(ep[class_index.at({std::min(u, v), std::max(u, v)})]);
            }
            for (int i = 0; i < n; ++i) flat.push_back(cp[perm[i]]);
            if (best.empty() || flat < best) best = flat;
        }
        return best;
    };

    auto realize = [&](const std::vector<int>& ep, const std::vector<int>& cp) {
        CurveGraph model = base;
        for (int c = 0; c < ec; ++c) {
            for (int k = 0; k < ep[c]; ++k) {
                // Locate one remaining original edge of this class.
                int found = -1;
                const auto& cls_ref = sites.edge_classes[c];
                std::string uid = base.vertex(cls_ref.u).id;
                std::string vid = base.vertex(cls_ref.v).id;
                int mu = model.index_of(uid), mv = model.index_of(vid);
                for (int e = 0; e < model.edge_count(); ++e) {
                    const auto& edge = model.edge(e);
                    if (edge.length == 1 &&
                        ((edge.u == std::min(mu, mv) && edge.v == std::max(mu, mv))))
                    {
                        found = e;
                        break;
                    }
                }
                BlowupSite site = cls_ref.u == cls_ref.v
                                      ? BlowupSite::internal_node(found)
                                      : BlowupSite::external_node(found);
                model = blow_up(model, site).curve;
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < cp[i]; ++k)
                model = blow_up(model, BlowupSite::cusp(base.vertex(i).id)).curve;
        }
        return model;
    };

    auto walk_cusps = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<int> key = canonical_selection(edge_pick, cusp_pick);
            if (seen.insert(key).second) models.push_back(realize(edge_pick, cusp_pick));
            return;
        }
        for (int c = 0; c <= sites.cusp_counts[i]; ++c) {
            cusp_pick[i] = c;
            self(self, i + 1);
        }
        cusp_pick[i] = 0;
    };
    auto walk_edges = [&](auto&& self, int c) -> void {
        if (c == ec) {
            walk_cusps(walk_cusps, 0);
            return;
        }
        for (int k = 0; k <= sites.edge_classes[c].multiplicity; ++k) {
            edge_pick[c] = k;
            self(self, c + 1);
        }
        edge_pick[c] = 0;
    };
    walk_edges(walk_edges, 0);

    std::sort(models.begin(), models.end(), [](const CurveGraph& a, const CurveGraph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.canonical_key() < b.canonical_key();
    });
    return models;
}

}  // namespace polcurve
