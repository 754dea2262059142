#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nccdim/curve.hpp"
#include "nccdim/error.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// Finite directed graph; parallel arrows are allowed, loops are not (they
// would be cycles). Vertices are 0..vertex_count-1.
struct Quiver {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arrows;

    friend bool operator==(const Quiver& a, const Quiver& b) noexcept {
        return a.vertex_count == b.vertex_count && a.arrows == b.arrows;
    }
};

namespace detail {

inline std::vector<std::vector<int>> undirected_adjacency(const Quiver& q) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(q.vertex_count));
    for (const auto& [s, t] : q.arrows) {
        adj[static_cast<std::size_t>(s)].push_back(t);
        adj[static_cast<std::size_t>(t)].push_back(s);
    }
    return adj;
}

inline bool is_connected(const Quiver& q) {
    if (q.vertex_count == 0) return false;
    auto adj = undirected_adjacency(q);
    std::vector<char> seen(static_cast<std::size_t>(q.vertex_count), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    return reached == q.vertex_count;
}

inline bool is_acyclic(const Quiver& q) {
    std::vector<int> indeg(static_cast<std::size_t>(q.vertex_count), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(q.vertex_count));
    for (const auto& [s, t] : q.arrows) {
        out[static_cast<std::size_t>(s)].push_back(t);
        ++indeg[static_cast<std::size_t>(t)];
    }
    std::queue<int> ready;
    for (int v = 0; v < q.vertex_count; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++removed;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    return removed == q.vertex_count;
}

} // namespace detail

inline void validate_quiver(const Quiver& q, bool require_connected = true) {
    if (q.vertex_count < 1)
        throw ValidationError("Quiver", "vertex count >= 1", "empty quiver");
    for (const auto& [s, t] : q.arrows)
        if (s < 0 || s >= q.vertex_count || t < 0 || t >= q.vertex_count)
            throw ValidationError("Quiver", "arrow endpoints in range",
                                  "arrow (" + std::to_string(s) + "," + std::to_string(t) +
                                      ") out of range");
    if (!detail::is_acyclic(q))
        throw ValidationError("Quiver", "acyclic as a directed graph", "directed cycle found");
    if (require_connected && !detail::is_connected(q))
        throw ValidationError("Quiver", "connected as an undirected graph", "disconnected quiver");
}

enum class DynkinSeries { A, D, E };

struct DynkinType {
    DynkinSeries series = DynkinSeries::A;
    int rank = 1;

    std::string name() const {
        const char* s = series == DynkinSeries::A ? "A" : (series == DynkinSeries::D ? "D" : "E");
        return s + std::to_string(rank);
    }

    friend bool operator==(const DynkinType& a, const DynkinType& b) noexcept {
        return a.series == b.series && a.rank == b.rank;
    }
    friend bool operator<(const DynkinType& a, const DynkinType& b) noexcept {
        return a.series != b.series ? a.series < b.series : a.rank < b.rank;
    }
};

enum class QuiverKind { Dynkin, Extended, Wild };

struct QuiverClassification {
    QuiverKind kind = QuiverKind::Wild;
    std::optional<DynkinType> type; // Dynkin only
    std::optional<int> coxeter;     // Dynkin only
    bool is_a1 = false;
};

namespace detail {

enum class Definiteness { PositiveDefinite, SemidefiniteWithRadical, Indefinite };

// Exact-rational symmetric elimination of the Tits form
//   q(x) = sum_v x_v^2 - sum_{arrows} x_s x_t.
// Vertices are eliminated leaves-first (reverse BFS), which keeps the
// elimination sparse on trees and near-trees; zero pivots with a zero row
// are radical directions, zero pivots with a nonzero row mean a hyperbolic
// plane, hence indefiniteness.
inline Definiteness tits_definiteness(const Quiver& q) {
    const int n = q.vertex_count;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    {
        auto adj = undirected_adjacency(q);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            order.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    bfs.push(w);
                }
        }
        std::reverse(order.begin(), order.end());
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])]
                                 [static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = Rational(1);
    const Rational half(1, 2);
    for (const auto& [s, t] : q.arrows) {
        const std::size_t a = static_cast<std::size_t>(pos[static_cast<std::size_t>(s)]);
        const std::size_t b = static_cast<std::size_t>(pos[static_cast<std::size_t>(t)]);
        m[a][b] -= half;
        m[b][a] -= half;
    }

    bool radical = false;
    for (int k = 0; k < n; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        const Rational d = m[kk][kk];
        if (d < Rational(0)) return Definiteness::Indefinite;
        if (d.is_zero()) {
            for (int j = k + 1; j < n; ++j)
                if (!m[kk][static_cast<std::size_t>(j)].is_zero())
                    return Definiteness::Indefinite;
            radical = true;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            if (m[ii][kk].is_zero()) continue;
            const Rational f = m[ii][kk] / d;
            for (int j = k + 1; j < n; ++j) {
                const std::size_t jj = static_cast<std::size_t>(j);
                if (m[kk][jj].is_zero()) continue;
                m[ii][jj] -= f * m[kk][jj];
            }
        }
    }
    return radical ? Definiteness::SemidefiniteWithRadical : Definiteness::PositiveDefinite;
}

// Matches the underlying simple tree against the ADE shapes: paths are
// type A, one degree-3 vertex with arm profile (1,1,k) is type D and
// (1,2,2), (1,2,3), (1,2,4) are E6, E7, E8.
inline std::optional<DynkinType> match_ade_tree(const Quiver& q) {
    const int n = q.vertex_count;
    if (static_cast<int>(q.arrows.size()) != n - 1) return std::nullopt;
    std::set<std::pair<int, int>> simple_edges;
    for (auto [s, t] : q.arrows) {
        if (s > t) std::swap(s, t);
        if (s == t || !simple_edges.insert({s, t}).second) return std::nullopt;
    }
    auto adj = undirected_adjacency(q);
    if (n == 1) return DynkinType{DynkinSeries::A, 1};

    int branch = -1;
    for (int v = 0; v < n; ++v) {
        const int deg = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (deg > 3) return std::nullopt;
        if (deg == 3) {
            if (branch >= 0) return std::nullopt;
            branch = v;
        }
    }
    if (branch < 0) return DynkinType{DynkinSeries::A, n};

    std::vector<int> arms;
    for (int start : adj[static_cast<std::size_t>(branch)]) {
        int len = 1, prev = branch, cur = start;
        while (static_cast<int>(adj[static_cast<std::size_t>(cur)].size()) == 2) {
            int next = adj[static_cast<std::size_t>(cur)][0] == prev
                           ? adj[static_cast<std::size_t>(cur)][1]
                           : adj[static_cast<std::size_t>(cur)][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return std::nullopt;
    if (arms[1] == 1) return DynkinType{DynkinSeries::D, n};
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{DynkinSeries::E, n};
    return std::nullopt;
}

// Cartan pairing <beta, alpha_i> = 2 beta_i - sum_{j ~ i} beta_j for a
// simply-laced diagram given by its adjacency lists.
inline std::int64_t cartan_pairing(const std::vector<std::int64_t>& beta,
                                   const std::vector<std::vector<int>>& adj, int i) {
    std::int64_t p = 2 * beta[static_cast<std::size_t>(i)];
    for (int j : adj[static_cast<std::size_t>(i)]) p -= beta[static_cast<std::size_t>(j)];
    return p;
}

// All positive roots, generated by height: a root of height k+1 is some
// root of height k plus a simple root alpha_i with <beta, alpha_i> < 0.
inline std::vector<std::vector<std::int64_t>>
positive_roots(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    std::vector<std::vector<std::int64_t>> all(frontier);
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                if (cartan_pairing(beta, adj, i) >= 0) continue;
                std::vector<std::int64_t> gamma = beta;
                ++gamma[static_cast<std::size_t>(i)];
                if (seen.insert(gamma).second) {
                    all.push_back(gamma);
                    next.push_back(std::move(gamma));
                }
            }
        }
        frontier = std::move(next);
        if (all.size() > 1000000)
            throw InternalError("positive root enumeration exceeded sanity bound");
    }
    return all;
}

// The highest root, reached by climbing: keep adding a simple root that
// pairs negatively until the result is dominant.
inline std::vector<std::int64_t> highest_root(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::int64_t> beta(static_cast<std::size_t>(n), 0);
    beta[0] = 1;
    for (;;) {
        bool climbed = false;
        for (int i = 0; i < n; ++i) {
            if (cartan_pairing(beta, adj, i) < 0) {
                ++beta[static_cast<std::size_t>(i)];
                climbed = true;
                break;
            }
        }
        if (!climbed) return beta;
    }
}

// Canonical tree of a Dynkin type, as adjacency lists. A_n is the path
// 0-1-...-(n-1); D_n and E_n are stars with arm profiles (1,1,n-3) and
// (1,2,n-4), center first, arms laid out one after another.
inline std::vector<std::vector<int>> dynkin_adjacency(const DynkinType& t) {
    const bool valid = (t.series == DynkinSeries::A && t.rank >= 1) ||
                       (t.series == DynkinSeries::D && t.rank >= 4) ||
                       (t.series == DynkinSeries::E && t.rank >= 6 && t.rank <= 8);
    if (!valid)
        throw ValidationError("DynkinType", "A(n>=1), D(n>=4) or E(6..8)",
                              "invalid type " + t.name());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.rank));
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    };
    if (t.series == DynkinSeries::A) {
        for (int v = 0; v + 1 < t.rank; ++v) link(v, v + 1);
        return adj;
    }
    std::vector<int> arms = t.series == DynkinSeries::D ? std::vector<int>{1, 1, t.rank - 3}
                                                        : std::vector<int>{1, 2, t.rank - 4};
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            link(prev, next);
            prev = next++;
        }
    }
    return adj;
}

} // namespace detail

// Coxeter number computed from the root system itself: h = 2 |Phi+| / rank
// with the positive roots enumerated by reflection closure. Results are
// memoized per type.
inline int coxeter_number(const DynkinType& t) {
    static std::map<DynkinType, int> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(t);
        if (it != cache.end()) return it->second;
    }
    const auto roots = detail::positive_roots(detail::dynkin_adjacency(t));
    const std::int64_t doubled = 2 * static_cast<std::int64_t>(roots.size());
    if (doubled % t.rank != 0)
        throw InternalError("2|Phi+| not divisible by the rank for " + t.name());
    const int h = static_cast<int>(doubled / t.rank);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(t, h);
    return h;
}

// Classification of a connected acyclic quiver by the exact definiteness
// of its Tits form: positive definite is Dynkin (with the ADE type read
// off the tree shape and the Coxeter number from root enumeration),
// positive semidefinite with radical is extended, indefinite is wild.
inline QuiverClassification classify(const Quiver& q) {
    validate_quiver(q);
    QuiverClassification out;
    out.is_a1 = (q.vertex_count == 1);
    switch (detail::tits_definiteness(q)) {
        case detail::Definiteness::PositiveDefinite: {
            auto type = detail::match_ade_tree(q);
            if (!type)
                throw InternalError("positive definite Tits form on a non-ADE shape");
            out.kind = QuiverKind::Dynkin;
            out.type = *type;
            out.coxeter = coxeter_number(*type);
            return out;
        }
        case detail::Definiteness::SemidefiniteWithRadical:
            out.kind = QuiverKind::Extended;
            return out;
        case detail::Definiteness::Indefinite:
            out.kind = QuiverKind::Wild;
            return out;
    }
    throw InternalError("unreachable definiteness state");
}

// Dimension row of rep(Q): the one-vertex quiver is semisimple and scores
// zero everywhere; other Dynkin quivers score (1, 0, 1, 1-2/h, 1-2/h);
// everything else scores (1, 1, 1, 1, 1).
inline DimensionReport quiver_dimension_report(const Quiver& q) {
    const QuiverClassification cls = classify(q);
    DimensionReport r;
    if (cls.is_a1) {
        r.sdim = Rational(0);
        r.gldim = Rational(0);
        r.validate();
        return r;
    }
    if (cls.kind == QuiverKind::Dynkin) {
        r.hdim = 1;
        r.rdim = 0;
        r.ddim = 1;
        r.sdim = Rational(1) - Rational(2, *cls.coxeter);
        r.gldim = r.sdim;
        r.validate();
        return r;
    }
    r.hdim = 1;
    r.rdim = 1;
    r.ddim = 1;
    r.sdim = Rational(1);
    r.gldim = Rational(1);
    r.validate();
    return r;
}

struct StarQuiverResult {
    Quiver quiver;                        // extended star, arrows outward
    QuiverClassification classification; // of the extended quiver
    QuiverClassification star;           // of the unextended star
};

// Builds the outward-oriented star with arms of lengths a1-1, a2-1, a3-1
// for a weight triple in one of the negative families, then attaches the
// affine vertex the root system dictates: the new vertex receives one
// arrow from every vertex pairing to 1 against the highest root (two from
// the same vertex in the rank-1 case). The result must classify as
// extended; the unextended star's classification is reported alongside.
inline StarQuiverResult gl_star_quiver(int a1, int a2, int a3) {
    std::array<int, 3> t{a1, a2, a3};
    for (int a : t)
        if (a < 1)
            throw ValidationError("gl_star_quiver", "weights >= 1",
                                  "weight " + std::to_string(a) + " below 1");
    std::sort(t.begin(), t.end());
    std::vector<int> orders;
    for (int a : t)
        if (a >= 2) orders.push_back(a);
    const CurveSignature sig = CurveSignature::make(0, orders);
    if (!negative_family(sig))
        throw ValidationError("gl_star_quiver", "deg(omega) < 0 (the ddim = 1 criterion)",
                              "triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                  std::to_string(t[2]) + ") has deg(omega) = " +
                                  omega_degree(sig).to_string() + " >= 0");

    Quiver star;
    star.vertex_count = t[0] + t[1] + t[2] - 2;
    {
        int next = 1;
        for (int a : t) {
            int prev = 0;
            for (int k = 0; k < a - 1; ++k) {
                star.arrows.emplace_back(prev, next);
                prev = next++;
            }
        }
    }

    StarQuiverResult out;
    out.star = classify(star);
    if (out.star.kind != QuiverKind::Dynkin)
        throw InternalError("gl_star_quiver: star of a negative triple is not Dynkin");

    const auto star_adj = detail::undirected_adjacency(star);
    const auto theta = detail::highest_root(star_adj);
    Quiver extended = star;
    const int affine = extended.vertex_count++;
    for (int v = 0; v < star.vertex_count; ++v) {
        const std::int64_t mult = detail::cartan_pairing(theta, star_adj, v);
        for (std::int64_t k = 0; k < mult; ++k) extended.arrows.emplace_back(v, affine);
    }

    out.quiver = std::move(extended);
    out.classification = classify(out.quiver);
    if (out.classification.kind != QuiverKind::Extended)
        throw InternalError("gl_star_quiver: extended star did not classify as extended");
    return out;
}

} // namespace nccdim
