#include "polcurve/class_group.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace polcurve {

std::vector<long long> TwisterLattice::twist(VertexMask subset) const {
    std::vector<long long> out(rows.empty() ? 0 : rows.size(), 0);
    VertexMask cursor = subset;
    while (cursor) {
        int i = std::countr_zero(cursor);
        cursor &= cursor - 1;
        for (std::size_t j = 0; j < rows.size(); ++j) out[j] += rows[i][j];
    }
    return out;
}

TwisterLattice twister_lattice(const CurveGraph& curve) {
    if (!curve.connected()) throw NotConnected("twister lattice requires a connected curve");
    int n = curve.size();
    TwisterLattice lattice;
    lattice.rows.assign(n, std::vector<long long>(n, 0));
    for (const auto& e : curve.edges()) {
        if (e.u == e.v) continue;  // a loop meets no other component
        lattice.rows[e.u][e.v] += e.length;
        lattice.rows[e.v][e.u] += e.length;
        lattice.rows[e.u][e.u] -= e.length;
        lattice.rows[e.v][e.v] -= e.length;
    }
    return lattice;
}

namespace {

struct SmithWorker {
    int n;
    std::vector<std::vector<BigInt>> a, u, v;

    explicit SmithWorker(const std::vector<std::vector<long long>>& m) {
        n = static_cast<int>(m.size());
        a.assign(n, std::vector<BigInt>(n));
        u.assign(n, std::vector<BigInt>(n));
        v.assign(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i) {
            u[i][i] = BigInt(1);
            v[i][i] = BigInt(1);
            for (int j = 0; j < n; ++j) a[i][j] = BigInt(m[i][j]);
        }
    }

    void row_op(int dst, int src, const BigInt& factor) {  // row dst += factor * row src
        for (int j = 0; j < n; ++j) {
            a[dst][j] += factor * a[src][j];
            u[dst][j] += factor * u[src][j];
        }
    }
    void col_op(int dst, int src, const BigInt& factor) {  // col dst += factor * col src
        for (int i = 0; i < n; ++i) {
            a[i][dst] += factor * a[i][src];
            v[i][dst] += factor * v[i][src];
        }
    }
    void swap_rows(int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < n; ++r) {
            std::swap(a[r][i], a[r][j]);
            std::swap(v[r][i], v[r][j]);
        }
    }
    void negate_row(int i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = -a[i][j];
            u[i][j] = -u[i][j];
        }
    }

    void reduce() {
        for (int t = 0; t < n; ++t) {
            for (;;) {
                int pi = -1, pj = -1;
                for (int i = t; i < n; ++i)
                    for (int j = t; j < n; ++j)
                        if (!a[i][j].is_zero() &&
                            (pi < 0 || a[i][j].abs() < a[pi][pj].abs())) {
                            pi = i;
                            pj = j;
                        }
                if (pi < 0) {
                    for (int k = t; k < n; ++k) a[k][k] = BigInt(0);
                    return finalize(t);
                }
                if (pi != t) swap_rows(pi, t);
                if (pj != t) swap_cols(pj, t);
                if (a[t][t].sign() < 0) negate_row(t);

                bool clean = true;
                for (int i = t + 1; i < n; ++i) {
                    if (a[i][t].is_zero()) continue;
                    BigInt q = a[i][t] / a[t][t];
                    if (!q.is_zero()) row_op(i, t, -q);
                    if (!a[i][t].is_zero()) clean = false;
                }
                for (int j = t + 1; j < n; ++j) {
                    if (a[t][j].is_zero()) continue;
                    BigInt q = a[t][j] / a[t][t];
                    if (!q.is_zero()) col_op(j, t, -q);
                    if (!a[t][j].is_zero()) clean = false;
                }
                if (!clean) continue;
                // Pivot must divide the remaining block; fold in an offender.
                bool divides = true;
                for (int i = t + 1; i < n && divides; ++i)
                    for (int j = t + 1; j < n && divides; ++j)
                        if (!(a[i][j] % a[t][t]).is_zero()) {
                            row_op(t, i, BigInt(1));
                            divides = false;
                        }
                if (divides) break;
            }
        }
        finalize(n);
    }

    void finalize(int) {
        for (int t = 0; t < n; ++t)
            if (a[t][t].sign() < 0) negate_row(t);
    }
};

}  // namespace

DegreeClassGroup::DegreeClassGroup(const CurveGraph& curve) : size_(curve.size()) {
    TwisterLattice lattice = twister_lattice(curve);
    SmithWorker worker(lattice.rows);
    worker.reduce();
    smith_.left = std::move(worker.u);
    smith_.right = std::move(worker.v);
    smith_.diagonal.resize(size_);
    order_ = BigInt(1);
    for (int t = 0; t < size_; ++t) {
        smith_.diagonal[t] = worker.a[t][t];
        if (!smith_.diagonal[t].is_zero()) {
            order_ *= smith_.diagonal[t];
            if (!smith_.diagonal[t].is_one())
                invariant_factors_.push_back(smith_.diagonal[t]);
        }
    }

    constexpr long long kFastLimit = 1ll << 20;
    fast_ = true;
    right_ll_.assign(size_, std::vector<long long>(size_, 0));
    diag_ll_.assign(size_, 0);
    for (int i = 0; i < size_ && fast_; ++i) {
        if (!smith_.diagonal[i].fits_long_long() ||
            std::llabs(diag_ll_[i] = smith_.diagonal[i].to_long_long()) > kFastLimit)
            fast_ = false;
        for (int j = 0; j < size_ && fast_; ++j) {
            if (!smith_.right[i][j].fits_long_long() ||
                std::llabs(right_ll_[i][j] = smith_.right[i][j].to_long_long()) >
                    kFastLimit)
                fast_ = false;
        }
    }
}

DegreeClassGroup degree_class_group(const CurveGraph& curve) {
    return DegreeClassGroup(curve);
}

namespace {

constexpr long long kFastValueLimit = 1ll << 20;

bool fits_fast(const std::vector<long long>& values) {
    for (long long v : values)
        if (std::llabs(v) > kFastValueLimit) return false;
    return true;
}

}  // namespace

bool DegreeClassGroup::contains(const std::vector<long long>& diff) const {
    if (static_cast<int>(diff.size()) != size_)
        throw VertexMismatch("lattice membership on wrong vector length");
    // x A = w  <=>  (x U^{-1}) D = w V, so w is in the row span over Z
    // exactly when wV is componentwise divisible by D.
    if (fast_ && fits_fast(diff)) {
        for (int j = 0; j < size_; ++j) {
            long long coord = 0;
            for (int i = 0; i < size_; ++i) coord += diff[i] * right_ll_[i][j];
            if (diag_ll_[j] == 0) {
                if (coord != 0) return false;
            } else if (coord % diag_ll_[j] != 0) {
                return false;
            }
        }
        return true;
    }
    for (int j = 0; j < size_; ++j) {
        BigInt coord(0);
        for (int i = 0; i < size_; ++i) coord += BigInt(diff[i]) * smith_.right[i][j];
        if (smith_.diagonal[j].is_zero()) {
            if (!coord.is_zero()) return false;
        } else if (!(coord % smith_.diagonal[j]).is_zero()) {
            return false;
        }
    }
    return true;
}

std::string DegreeClassGroup::class_key(const Multidegree& dvec) const {
    if (dvec.size() != size_)
        throw VertexMismatch("class key on wrong vector length");
    std::ostringstream os;
    os << dvec.total();
    if (fast_ && fits_fast(dvec.values())) {
        for (int j = 0; j < size_; ++j) {
            if (diag_ll_[j] == 0) continue;  // fixed by the total degree
            long long coord = 0;
            for (int i = 0; i < size_; ++i) coord += dvec[i] * right_ll_[i][j];
            long long rem = coord % diag_ll_[j];
            if (rem < 0) rem += std::llabs(diag_ll_[j]);
            os << ',' << rem;
        }
        return os.str();
    }
    for (int j = 0; j < size_; ++j) {
        BigInt coord(0);
        for (int i = 0; i < size_; ++i) coord += BigInt(dvec[i]) * smith_.right[i][j];
        if (smith_.diagonal[j].is_zero()) continue;  // fixed by the total degree
        BigInt rem = coord % smith_.diagonal[j];
        if (rem.sign() < 0) rem += smith_.diagonal[j];
        os << ',' << rem.to_string();
    }
    return os.str();
}

namespace {

// Chains may pass through disconnected subcurves, so the candidate set is
// every proper subset attaining the upper extreme.
std::vector<VertexMask> upper_extremal_subcurves(const CurveGraph& curve,
                                                 const Multidegree& dvec,
                                                 int vertex_cap) {
    if (curve.size() > vertex_cap) throw TooLarge("chain search above the vertex cap");
    long long d = dvec.total();
    long long two_g_minus_2 = 2 * curve.genus() - 2;
    std::vector<VertexMask> out;
    VertexMask full = curve.full_mask();
    for (VertexMask mask = 1; mask < full; ++mask) {
        SubcurveStats st = subcurve_stats(curve, mask);
        long long lhs = 2 * two_g_minus_2 * dvec.on_subcurve(mask);
        long long rhs = 2 * d * st.omega_degree + two_g_minus_2 * st.crossing_length;
        if (lhs == rhs) out.push_back(mask);
    }
    return out;
}

bool chain_search(const std::vector<VertexMask>& attaining,
                  const std::vector<std::vector<long long>>& twists,
                  const std::vector<long long>& target, std::size_t max_length,
                  std::vector<int>& chain_out) {
    int n = static_cast<int>(target.size());
    std::vector<long long> acc(n, 0);
    std::vector<int> chain;
    auto rec = [&](auto&& self, std::size_t min_index) -> bool {
        if (acc == target) {
            chain_out = chain;
            return true;
        }
        if (chain.size() == max_length) return false;
        for (std::size_t i = min_index; i < attaining.size(); ++i) {
            if (!chain.empty()) {
                VertexMask prev = attaining[chain.back()];
                if ((prev & attaining[i]) != prev) continue;  // need Z_prev <= Z_i
            }
            for (int j = 0; j < n; ++j) acc[j] += twists[i][j];
            chain.push_back(static_cast<int>(i));
            if (self(self, i)) return true;
            chain.pop_back();
            for (int j = 0; j < n; ++j) acc[j] -= twists[i][j];
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

EquivalenceResult are_equivalent(const CurveGraph& curve, const Multidegree& d1,
                                 const Multidegree& d2, bool want_certificate,
                                 int vertex_cap) {
    if (d1.size() != curve.size() || d2.size() != curve.size())
        throw VertexMismatch("multidegree keyed on the wrong vertex set");
    EquivalenceResult result;
    if (d1.total() != d2.total()) return result;

    std::vector<long long> diff(curve.size());
    for (int i = 0; i < curve.size(); ++i) diff[i] = d2[i] - d1[i];
    DegreeClassGroup group(curve);
    result.equivalent = group.contains(diff);
    if (!result.equivalent || !want_certificate) return result;

    if (d1 == d2) {
        result.chain_searched = true;
        result.chain = std::vector<VertexMask>{};
        result.chain_normalized = true;
        return result;
    }
    if (!classify_multidegree(curve, d1, vertex_cap).balanced ||
        !classify_multidegree(curve, d2, vertex_cap).balanced)
        return result;

    result.chain_searched = true;
    std::vector<VertexMask> attaining = upper_extremal_subcurves(curve, d1, vertex_cap);
    // Favor small subcurves first so nested chains are discovered early.
    std::sort(attaining.begin(), attaining.end(), [](VertexMask a, VertexMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    TwisterLattice lattice = twister_lattice(curve);
    std::vector<std::vector<long long>> twists;
    twists.reserve(attaining.size());
    for (VertexMask mask : attaining) twists.push_back(lattice.twist(mask));

    std::vector<int> chain_indices;
    if (chain_search(attaining, twists, diff, static_cast<std::size_t>(curve.size()),
                     chain_indices)) {
        std::vector<VertexMask> chain;
        for (int i : chain_indices) chain.push_back(attaining[i]);
        result.chain = chain;
        result.chain_normalized = true;
        VertexMask full = curve.full_mask();
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (((full & ~chain[i]) & chain[j]) != 0) result.chain_normalized = false;
    }
    return result;
}

Multidegree balanced_representative(const CurveGraph& curve, const Multidegree& dvec,
                                    int vertex_cap) {
    if (dvec.size() != curve.size())
        throw VertexMismatch("multidegree keyed on the wrong vertex set");
    long long g = curve.genus();
    if (g < 2) throw GenusTooSmall("balanced representative requires genus >= 2");
    if (!curve.connected()) throw NotConnected("balanced representative requires connectivity");

    long long two_g_minus_2 = 2 * g - 2;
    long long d = dvec.total();
    TwisterLattice lattice = twister_lattice(curve);

    std::vector<VertexMask> masks;
    for_each_two_sided_subcurve(curve, [&](VertexMask m) { masks.push_back(m); },
                                vertex_cap);
    struct MaskData {
        VertexMask mask;
        long long crossing;
        long long upper_num;  // scaled upper bound
    };
    std::vector<MaskData> data;
    data.reserve(masks.size());
    for (VertexMask m : masks) {
        SubcurveStats st = subcurve_stats(curve, m);
        data.push_back({m, st.crossing_length,
                        2 * d * st.omega_degree + two_g_minus_2 * st.crossing_length});
    }

    long long max_abs = 0;
    for (int i = 0; i < dvec.size(); ++i) max_abs = std::max(max_abs, std::llabs(dvec[i]));
    long long cap = 10ll * curve.size() * (max_abs + std::llabs(d) + 1);

    std::vector<long long> current(dvec.values());
    long long steps = 0;
    while (steps <= cap) {
        // Largest scaled excess first; ties go to the smallest mask.
        long long best_excess = 0;
        int best = -1;
        for (std::size_t i = 0; i < data.size(); ++i) {
            long long deg = 0;
            VertexMask cursor = data[i].mask;
            while (cursor) {
                int v = std::countr_zero(cursor);
                cursor &= cursor - 1;
                deg += current[v];
            }
            long long excess = 2 * two_g_minus_2 * deg - data[i].upper_num;
            if (excess > best_excess ||
                (excess == best_excess && excess > 0 && best >= 0 &&
                 data[i].mask < data[best].mask)) {
                best_excess = excess;
                best = static_cast<int>(i);
            }
        }
        if (best < 0 || best_excess <= 0) break;
        // Each twist lowers d_Z by k_Z; fire enough copies to clear the excess.
        long long per_fire = 2 * two_g_minus_2 * data[best].crossing;
        long long times = std::max(1ll, best_excess / per_fire +
                                            (best_excess % per_fire != 0 ? 1 : 0));
        times = std::min(times, cap - steps + 1);
        std::vector<long long> twist = lattice.twist(data[best].mask);
        for (int i = 0; i < curve.size(); ++i) current[i] += times * twist[i];
        steps += times;
    }

    Multidegree candidate{std::vector<long long>(current)};
    if (classify_multidegree(curve, candidate, vertex_cap).balanced) return candidate;

    // Greedy descent ran out; fall back to scanning the balanced box for a
    // member of the class.
    DegreeClassGroup group(curve);
    std::string key = group.class_key(dvec);
    for (const Multidegree& b : enumerate_balanced(curve, d, BalanceLevel::Balanced,
                                                   vertex_cap)) {
        if (group.class_key(b) == key) return b;
    }
    throw SearchExhausted("no balanced representative found in the class");
}

}  // namespace polcurve
