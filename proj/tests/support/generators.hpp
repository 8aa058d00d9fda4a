#pragma once

// Deterministic random instance generators shared by the property tests and
// the acceptance suite.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "polylap/common.hpp"
#include "polylap/lattice.hpp"
#include "polylap/matrix.hpp"

namespace polylap::testing {

/// Connected random subset of Z^d grown from the origin by attaching uniformly
/// random boundary vertices. Optional bounding box [0, coord_cap]^d keeps the
/// coordinate extent small when a Fourier grid has to cover the result.
inline LatticeDomain random_connected_domain(Rng& rng, int d, int target_size, int coord_cap = -1) {
    std::set<Vertex> chosen;
    std::vector<Vertex> candidates;
    std::set<Vertex> seen;

    auto add_candidates = [&](const Vertex& v) {
        Vertex nbr = v;
        for (int a = 0; a < d; ++a)
            for (int step : {-1, +1}) {
                nbr[static_cast<std::size_t>(a)] += step;
                bool in_cap = true;
                if (coord_cap >= 0)
                    for (int c : nbr)
                        if (c < 0 || c > coord_cap) { in_cap = false; break; }
                if (in_cap && !chosen.count(nbr) && !seen.count(nbr)) {
                    seen.insert(nbr);
                    candidates.push_back(nbr);
                }
                nbr[static_cast<std::size_t>(a)] -= step;
            }
    };

    Vertex origin(static_cast<std::size_t>(d), 0);
    chosen.insert(origin);
    add_candidates(origin);
    while (static_cast<int>(chosen.size()) < target_size && !candidates.empty()) {
        const int pick = rng.next_below(static_cast<int>(candidates.size()));
        Vertex v = candidates[static_cast<std::size_t>(pick)];
        candidates[static_cast<std::size_t>(pick)] = candidates.back();
        candidates.pop_back();
        if (chosen.count(v)) continue;
        chosen.insert(v);
        add_candidates(v);
    }
    return LatticeDomain(d, std::vector<Vertex>(chosen.begin(), chosen.end()));
}

/// Nested pair Omega_1 subset Omega_2: grow to n1, snapshot, keep growing.
inline std::pair<LatticeDomain, LatticeDomain> random_nested_pair(Rng& rng, int d, int n1, int n2) {
    std::set<Vertex> chosen;
    std::vector<Vertex> candidates;
    std::set<Vertex> seen;

    auto add_candidates = [&](const Vertex& v) {
        Vertex nbr = v;
        for (int a = 0; a < d; ++a)
            for (int step : {-1, +1}) {
                nbr[static_cast<std::size_t>(a)] += step;
                if (!chosen.count(nbr) && !seen.count(nbr)) {
                    seen.insert(nbr);
                    candidates.push_back(nbr);
                }
                nbr[static_cast<std::size_t>(a)] -= step;
            }
    };

    Vertex origin(static_cast<std::size_t>(d), 0);
    chosen.insert(origin);
    add_candidates(origin);
    std::vector<Vertex> inner;
    while (static_cast<int>(chosen.size()) < n2 && !candidates.empty()) {
        if (static_cast<int>(chosen.size()) == n1 && inner.empty())
            inner.assign(chosen.begin(), chosen.end());
        const int pick = rng.next_below(static_cast<int>(candidates.size()));
        Vertex v = candidates[static_cast<std::size_t>(pick)];
        candidates[static_cast<std::size_t>(pick)] = candidates.back();
        candidates.pop_back();
        if (chosen.count(v)) continue;
        chosen.insert(v);
        add_candidates(v);
    }
    if (inner.empty()) inner.assign(chosen.begin(), chosen.end());
    return {LatticeDomain(d, std::move(inner)),
            LatticeDomain(d, std::vector<Vertex>(chosen.begin(), chosen.end()))};
}

/// Connected random graph: a random attachment tree plus extra random edges,
/// omega a random nonempty subset.
inline AmbientGraph random_ambient_graph(Rng& rng, int n, int extra_edges, int omega_size) {
    std::set<std::pair<int, int>> edge_set;
    for (int v = 1; v < n; ++v) {
        const int u = rng.next_below(v);
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    for (int t = 0; t < extra_edges; ++t) {
        const int u = rng.next_below(n);
        const int v = rng.next_below(n);
        if (u != v) edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());

    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(rng.next_below(i + 1))]);
    ids.resize(static_cast<std::size_t>(std::max(1, std::min(omega_size, n))));
    return AmbientGraph(n, edges, ids);
}

/// Symmetric positive semidefinite matrix B^T B with random B.
inline Matrix random_psd_matrix(Rng& rng, int n) {
    Matrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = rng.uniform(-1.0, 1.0);
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += b.at(k, i) * b.at(k, j);
            m.at(i, j) = s;
            m.at(j, i) = s;
        }
    return m;
}

inline Matrix random_symmetric_matrix(Rng& rng, int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform(-1.0, 1.0);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

inline std::vector<double> random_vector(Rng& rng, int n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> f(static_cast<std::size_t>(n));
    for (double& x : f) x = rng.uniform(lo, hi);
    return f;
}

}  // namespace polylap::testing
