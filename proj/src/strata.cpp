#include "polcurve/strata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace polcurve {

void StratumPair::validate(int vertex_cap) const {
    CurveClass cls = classify_curve(curve, vertex_cap);
    if (!cls.quasi_wp_stable)
        throw NotQuasiWpStable("stratum curve must be quasi-wp-stable");
    BalanceReport report = classify_multidegree(curve, deg, vertex_cap);
    if (!report.properly_balanced)
        throw NotProperlyBalanced("stratum multidegree must be properly balanced");
}

std::string StratumPair::key() const {
    return curve.canonical_key(&deg.values());
}

namespace {

struct DecoratedState {
    CurveGraph curve;
    Multidegree deg;
};

std::vector<DecoratedState> expand_blowups(const DecoratedState& state) {
    std::vector<DecoratedState> out;
    const CurveGraph& curve = state.curve;
    auto push = [&](const BlowupResult& blown, const std::vector<long long>& source_values,
                    int debit_vertex) {
        // Rebuild the degree vector over the blown-up curve: new exceptional
        // vertex carries 1, the chosen branch pays for it.
        std::vector<long long> values(blown.curve.size(), 0);
        for (int i = 0; i < curve.size(); ++i) {
            int j = blown.curve.index_of(curve.vertex(i).id);
            values[j] = source_values[i] - (i == debit_vertex ? 1 : 0);
        }
        values[blown.curve.index_of(blown.new_vertex)] = 1;
        out.push_back({blown.curve, Multidegree(std::move(values))});
    };
    for (int e = 0; e < curve.edge_count(); ++e) {
        const auto& edge = curve.edge(e);
        if (edge.length != 1) continue;
        if (edge.u == edge.v) {
            BlowupResult blown = blow_up(curve, BlowupSite::internal_node(e));
            push(blown, state.deg.values(), edge.u);
        } else {
            BlowupResult blown = blow_up(curve, BlowupSite::external_node(e));
            push(blown, state.deg.values(), edge.u);
            push(blown, state.deg.values(), edge.v);
        }
    }
    for (int i = 0; i < curve.size(); ++i) {
        if (curve.vertex(i).cusps > 0) {
            BlowupResult blown = blow_up(curve, BlowupSite::cusp(curve.vertex(i).id));
            push(blown, state.deg.values(), i);
        }
    }
    return out;
}

}  // namespace

bool preceq(const StratumPair& lower, const StratumPair& upper, int vertex_cap) {
    if (lower.curve.genus() != upper.curve.genus())
        throw Incomparable("strata of different genus are incomparable");
    if (lower.deg.total() != upper.deg.total())
        throw Incomparable("strata of different total degree are incomparable");
    if (lower.curve.size() < upper.curve.size()) return false;
    if (lower.curve.size() > vertex_cap) throw TooLarge("preceq above the vertex cap");

    int depth = lower.curve.size() - upper.curve.size();
    std::string target = lower.key();
    std::set<std::string> visited;
    std::vector<DecoratedState> frontier{{upper.curve, upper.deg}};
    visited.insert(upper.key());
    for (int step = 0; step <= depth; ++step) {
        std::vector<DecoratedState> next;
        for (const auto& state : frontier) {
            if (state.curve.size() == lower.curve.size()) {
                if (state.curve.canonical_key(&state.deg.values()) == target) return true;
                continue;
            }
            for (auto& child : expand_blowups(state)) {
                std::string key = child.curve.canonical_key(&child.deg.values());
                if (visited.insert(key).second) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return false;
}

Multidegree lift_multidegree(const CurveGraph& lower_curve, const Multidegree& d_lower,
                             const CurveGraph& upper_curve, int vertex_cap) {
    if (d_lower.size() != lower_curve.size())
        throw VertexMismatch("multidegree keyed on the wrong vertex set");
    if (lower_curve.genus() != upper_curve.genus())
        throw NotComparable("curves of different genus");
    if (lower_curve.size() < upper_curve.size())
        throw NotComparable("lower curve must refine the upper curve");

    // Find a set of exceptional vertices of the lower curve whose contraction
    // matches the upper curve, then add each contracted unit of degree back to
    // a branch component.
    CurveClass cls = classify_curve(lower_curve, vertex_cap);
    std::vector<int> exceptional = cls.exceptional_vertices;
    int need = lower_curve.size() - upper_curve.size();
    if (need > static_cast<int>(exceptional.size()))
        throw NotComparable("not enough exceptional components to contract");

    std::vector<int> chosen;
    auto attempt = [&]() -> std::optional<Multidegree> {
        // Contract the selected exceptional vertices one at a time.
        CurveGraph current = lower_curve;
        std::vector<long long> values(d_lower.values());
        std::vector<std::string> pending;
        for (int idx : chosen) pending.push_back(lower_curve.vertex(idx).id);
        for (const std::string& id : pending) {
            int i = current.index_of(id);
            if (i < 0 || !current.is_exceptional_vertex(i)) return std::nullopt;
            std::vector<std::pair<int, int>> incident;  // (other vertex, length)
            for (const auto& e : current.edges()) {
                if (e.u == i || e.v == i)
                    incident.emplace_back(e.u == i ? e.v : e.u, e.length);
            }
            std::vector<VertexData> vs;
            std::vector<std::tuple<std::string, std::string, int>> es;
            std::vector<long long> new_values;
            // Branch receiving the contracted degree: smallest id among the
            // attached components.
            int branch = incident[0].first;
            for (const auto& [other, len] : incident) {
                (void)len;
                if (current.vertex(other).id < current.vertex(branch).id) branch = other;
            }
            for (int v = 0; v < current.size(); ++v) {
                if (v == i) continue;
                VertexData data = current.vertex(v);
                long long val = values[v];
                if (v == branch) val += values[i];
                if (incident.size() == 1 && incident[0].second == 2 &&
                    v == incident[0].first) {
                    data.cusps += 1;
                    data.genus += 1;
                }
                vs.push_back(data);
                new_values.push_back(val);
            }
            for (const auto& e : current.edges()) {
                if (e.u == i || e.v == i) continue;
                es.emplace_back(current.vertex(e.u).id, current.vertex(e.v).id, e.length);
            }
            if (incident.size() == 2)
                es.emplace_back(current.vertex(incident[0].first).id,
                                current.vertex(incident[1].first).id, 1);
            // Keep values aligned with the sorted vertex order of the new curve.
            CurveGraph contracted(vs, es);
            std::vector<long long> aligned(contracted.size());
            for (std::size_t k = 0; k < vs.size(); ++k)
                aligned[contracted.index_of(vs[k].id)] = new_values[k];
            current = contracted;
            values = std::move(aligned);
        }
        if (!isomorphic(current, upper_curve)) return std::nullopt;
        // Transport the values onto the upper curve: by id when the curves
        // share ids, otherwise along the canonical-order isomorphism.
        std::vector<long long> out(upper_curve.size(), 0);
        bool ids_match = true;
        for (int v = 0; v < current.size() && ids_match; ++v) {
            int j = upper_curve.index_of(current.vertex(v).id);
            if (j < 0) ids_match = false;
            else out[j] = values[v];
        }
        if (!ids_match) {
            std::vector<int> oc = current.canonical_order();
            std::vector<int> ou = upper_curve.canonical_order();
            for (int k = 0; k < current.size(); ++k) out[ou[k]] = values[oc[k]];
        }
        return Multidegree(std::move(out));
    };

    // Try all subsets of exceptional vertices of the right size.
    int m = static_cast<int>(exceptional.size());
    for (VertexMask select = 0; select < (VertexMask(1) << m); ++select) {
        if (std::popcount(select) != need) continue;
        chosen.clear();
        for (int b = 0; b < m; ++b)
            if ((select >> b) & 1) chosen.push_back(exceptional[b]);
        if (auto lifted = attempt()) return *lifted;
    }
    throw NotComparable("lower curve is not a blow-up model of the upper curve");
}

SpecializationResult specialize_strictly(const StratumPair& pair, int vertex_cap,
                                         int iteration_cap) {
    pair.validate(vertex_cap);
    SpecializationResult result{pair, {}};
    for (int round = 0; round < iteration_cap; ++round) {
        const CurveGraph& curve = result.final.curve;
        const Multidegree& deg = result.final.deg;
        long long d = deg.total();
        long long two_g_minus_2 = 2 * curve.genus() - 2;
        VertexMask exc = curve.exceptional_mask();

        // Strictness witness: an extremal subcurve with a crossing node away
        // from the exceptional locus. Ties resolved to the lexicographically
        // smallest sorted vertex-id set.
        auto id_lex_less = [](VertexMask a, VertexMask b) {
            while (a && b) {
                int ia = std::countr_zero(a), ib = std::countr_zero(b);
                if (ia != ib) return ia < ib;
                a &= a - 1;
                b &= b - 1;
            }
            return a == 0 && b != 0;
        };
        VertexMask witness = 0;
        std::vector<int> witness_edges;
        for_each_two_sided_subcurve(
            curve,
            [&](VertexMask mask) {
                if (witness != 0 && !id_lex_less(mask, witness)) return;
                SubcurveStats st = subcurve_stats(curve, mask);
                long long lhs = 2 * two_g_minus_2 * deg.on_subcurve(mask);
                long long rhs =
                    2 * d * st.omega_degree + two_g_minus_2 * st.crossing_length;
                if (lhs != rhs) return;
                std::vector<int> bad;
                for (int e = 0; e < curve.edge_count(); ++e) {
                    const auto& edge = curve.edge(e);
                    bool u_in = (mask >> edge.u) & 1;
                    bool v_in = (mask >> edge.v) & 1;
                    if (u_in == v_in) continue;
                    if (((exc >> edge.u) & 1) || ((exc >> edge.v) & 1)) continue;
                    bad.push_back(e);
                }
                if (!bad.empty()) {
                    witness = mask;
                    witness_edges = std::move(bad);
                }
            },
            vertex_cap);
        if (witness == 0) return result;  // already strictly balanced

        // Blow up every offending crossing node; the branch on the witness
        // side pays one unit of degree for each new exceptional line.
        SpecializationStep step;
        step.witness = mask_ids(curve, witness);
        CurveGraph current = curve;
        std::vector<long long> values(deg.values());
        // Record endpoints before indices shift.
        std::vector<std::pair<std::string, std::string>> sites;
        std::vector<std::string> debit;  // witness-side endpoint per site
        for (int e : witness_edges) {
            const auto& edge = curve.edge(e);
            sites.emplace_back(curve.vertex(edge.u).id, curve.vertex(edge.v).id);
            debit.push_back(((witness >> edge.u) & 1) ? curve.vertex(edge.u).id
                                                      : curve.vertex(edge.v).id);
        }
        step.blown_up_nodes = sites;
        for (std::size_t s = 0; s < sites.size(); ++s) {
            int iu = current.index_of(sites[s].first);
            int iv = current.index_of(sites[s].second);
            int found = -1;
            for (int e = 0; e < current.edge_count(); ++e) {
                const auto& edge = current.edge(e);
                if (edge.length == 1 && edge.u == std::min(iu, iv) &&
                    edge.v == std::max(iu, iv)) {
                    found = e;
                    break;
                }
            }
            BlowupResult blown = blow_up(current, BlowupSite::external_node(found));
            std::vector<long long> next(blown.curve.size(), 0);
            for (int i = 0; i < current.size(); ++i)
                next[blown.curve.index_of(current.vertex(i).id)] = values[i];
            next[blown.curve.index_of(blown.new_vertex)] = 1;
            next[blown.curve.index_of(debit[s])] -= 1;
            current = blown.curve;
            values = std::move(next);
        }
        result.final = StratumPair{current, Multidegree(std::move(values))};
        result.final.validate(vertex_cap);
        step.result = result.final;
        result.steps.push_back(std::move(step));
    }
    throw NonTermination("specialization did not reach a strictly balanced pair");
}

StrataPoset strata_poset(const CurveGraph& base, long long d, ModelKind kind,
                         int vertex_cap) {
    StrataPoset poset;
    for (const CurveGraph& model : enumerate_models(base, kind, vertex_cap)) {
        for (Multidegree& deg :
             enumerate_balanced(model, d, BalanceLevel::Properly, vertex_cap)) {
            poset.nodes.push_back(StratumPair{model, std::move(deg)});
        }
    }
    std::sort(poset.nodes.begin(), poset.nodes.end(),
              [](const StratumPair& a, const StratumPair& b) {
                  if (a.curve.size() != b.curve.size())
                      return a.curve.size() < b.curve.size();
                  return a.key() < b.key();
              });

    // preceq is antisymmetric only up to decorated isomorphism, so the strict
    // order (and hence the covering relation) lives on isomorphism classes;
    // that keeps the emitted edges acyclic.
    int n = static_cast<int>(poset.nodes.size());
    std::vector<std::string> keys(n);
    for (int i = 0; i < n; ++i) keys[i] = poset.nodes[i].key();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (keys[i] == keys[j]) continue;
            below[i][j] = preceq(poset.nodes[i], poset.nodes[j], vertex_cap);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool covering = true;
            for (int k = 0; k < n && covering; ++k)
                if (below[i][k] && below[k][j]) covering = false;
            if (covering) poset.covers.emplace_back(j, i);
        }
    }
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

namespace {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

}  // namespace

std::string StrataPoset::to_dot() const {
    std::ostringstream os;
    os << "digraph strata {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const StratumPair& node = nodes[i];
        os << "  n" << i << " [label=\"" << fnv1a_hex(node.curve.canonical_key())
           << " / (";
        for (int v = 0; v < node.deg.size(); ++v) {
            if (v) os << ",";
            os << node.deg[v];
        }
        os << ")\"];\n";
    }
    for (const auto& [upper, lower] : covers)
        os << "  n" << upper << " -> n" << lower << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace polcurve
