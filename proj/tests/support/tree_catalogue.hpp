#pragma once

// Brute-force tree machinery for cross-checking the quiver classifier:
// exhaustive enumeration of all trees on up to nine vertices (Pruefer
// sequences deduplicated by canonical form), AHU canonical strings as the
// isomorphism oracle, and the hardcoded ADE / extended-ADE shape catalogue.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace treecat {

using EdgeList = std::vector<std::pair<int, int>>;

// AHU canonical string of a rooted tree.
inline std::string ahu(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> children;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) children.push_back(ahu(w, v, adj));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    s += ")";
    return s;
}

// Canonical string of an unrooted tree: root at the centroid, take the
// lexicographically smaller string over the (at most two) centroids.
inline std::string canonical_tree(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    if (n == 1) return "()";
    // centroid(s) by repeated leaf stripping
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (int root : layer) {
        std::string s = ahu(root, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// All trees on n vertices up to isomorphism. Every tree arises by
// attaching a leaf to some tree on one vertex fewer, so growing from the
// single vertex and deduplicating canonically is exhaustive. The counts
// per size run 1, 1, 1, 2, 3, 6, 11, 23, 47.
inline std::vector<EdgeList> all_trees(int n) {
    std::vector<std::vector<EdgeList>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1] = {EdgeList{}};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        for (const auto& base : by_size[static_cast<std::size_t>(k - 1)])
            for (int v = 0; v < k - 1; ++v) {
                EdgeList e = base;
                e.push_back({v, k - 1});
                if (seen.insert(canonical_tree(k, e)).second)
                    by_size[static_cast<std::size_t>(k)].push_back(std::move(e));
            }
    }
    return by_size[static_cast<std::size_t>(n)];
}

// Star with the given arm lengths (center 0, arms laid out consecutively).
inline EdgeList star_edges(const std::vector<int>& arms) {
    EdgeList edges;
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return edges;
}

inline EdgeList path_edges(int n) {
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return edges;
}

enum class Verdict { Dynkin, Extended, Wild };

// Canonical-form catalogue of the finite and affine simply-laced tree
// shapes on at most max_n vertices. Every other tree is wild.
inline std::map<std::string, std::pair<Verdict, std::string>> shape_catalogue(int max_n) {
    std::map<std::string, std::pair<Verdict, std::string>> cat;
    auto put = [&](int n, const EdgeList& e, Verdict v, const std::string& name) {
        cat[canonical_tree(n, e)] = {v, name};
    };
    for (int n = 1; n <= max_n; ++n) put(n, path_edges(n), Verdict::Dynkin, "A" + std::to_string(n));
    for (int n = 4; n <= max_n; ++n)
        put(n, star_edges({1, 1, n - 3}), Verdict::Dynkin, "D" + std::to_string(n));
    if (max_n >= 6) put(6, star_edges({1, 2, 2}), Verdict::Dynkin, "E6");
    if (max_n >= 7) put(7, star_edges({1, 2, 3}), Verdict::Dynkin, "E7");
    if (max_n >= 8) put(8, star_edges({1, 2, 4}), Verdict::Dynkin, "E8");
    // affine D_n: central path with a fork of two leaves at each end
    for (int n = 4; n + 1 <= max_n; ++n) {
        EdgeList e;
        const int left = n - 3; // deepest long-arm vertex of D_n
        e = star_edges({1, 1, left});
        const int tip = 2 + left; // last vertex of the long arm
        const int attach = left == 1 ? 0 : tip - 1;
        e.push_back({attach, n});
        put(n + 1, e, Verdict::Extended, "D~" + std::to_string(n));
    }
    if (max_n >= 7) put(7, star_edges({2, 2, 2}), Verdict::Extended, "E~6");
    if (max_n >= 8) put(8, star_edges({1, 3, 3}), Verdict::Extended, "E~7");
    if (max_n >= 9) put(9, star_edges({1, 2, 5}), Verdict::Extended, "E~8");
    return cat;
}

} // namespace treecat
