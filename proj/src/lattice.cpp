#include "polylap/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "polylap/common.hpp"

namespace polylap {

namespace {

void check_dim(int d, const Vertex& v, const char* what) {
    if (static_cast<int>(v.size()) != d)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(d) +
                                    " coordinates, got " + std::to_string(v.size()));
}

}  // namespace

LatticeDomain::LatticeDomain(int d, std::vector<Vertex> vertices) : d_(d), verts_(std::move(vertices)) {
    if (d_ < 1) throw std::invalid_argument("dimension must be >= 1");
    if (verts_.empty()) throw std::invalid_argument("domain must contain at least one vertex");
    for (const Vertex& v : verts_) check_dim(d_, v, "vertex");
    std::sort(verts_.begin(), verts_.end());
    for (std::size_t i = 1; i < verts_.size(); ++i)
        if (verts_[i] == verts_[i - 1]) throw std::invalid_argument("duplicate vertex in domain");
    index_.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) index_[verts_[i]] = static_cast<int>(i);
}

int LatticeDomain::index_of(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("vertex not in domain");
    return it->second;
}

LatticeDomain make_box(int d, const Vertex& lo, const Vertex& hi) {
    check_dim(d, lo, "lo");
    check_dim(d, hi, "hi");
    for (int i = 0; i < d; ++i)
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)])
            throw std::invalid_argument("make_box: lo > hi in coordinate " + std::to_string(i));

    std::vector<Vertex> verts;
    Vertex cur = lo;
    for (;;) {
        verts.push_back(cur);
        int i = d - 1;
        while (i >= 0) {
            auto ui = static_cast<std::size_t>(i);
            if (cur[ui] < hi[ui]) {
                ++cur[ui];
                break;
            }
            cur[ui] = lo[ui];
            --i;
        }
        if (i < 0) break;
    }
    return LatticeDomain(d, std::move(verts));
}

LatticeDomain make_ball(int d, const Vertex& center, int r) {
    check_dim(d, center, "center");
    if (r < 0) throw std::invalid_argument("make_ball: radius must be >= 0");

    // Enumerate the box [-r, r]^d around the center and keep the L1 ball.
    std::vector<Vertex> verts;
    Vertex offset(static_cast<std::size_t>(d), -r);
    for (;;) {
        int l1 = 0;
        for (int c : offset) l1 += std::abs(c);
        if (l1 <= r) {
            Vertex v(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                v[static_cast<std::size_t>(i)] = center[static_cast<std::size_t>(i)] + offset[static_cast<std::size_t>(i)];
            verts.push_back(std::move(v));
        }
        int i = d - 1;
        while (i >= 0) {
            auto ui = static_cast<std::size_t>(i);
            if (offset[ui] < r) {
                ++offset[ui];
                break;
            }
            offset[ui] = -r;
            --i;
        }
        if (i < 0) break;
    }
    return LatticeDomain(d, std::move(verts));
}

AmbientGraph::AmbientGraph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<int> omega)
    : n_(n), adj_(static_cast<std::size_t>(n)), omega_(std::move(omega)) {
    if (n_ < 1) throw std::invalid_argument("ambient graph must have at least one vertex");
    if (n_ > kAmbientVertexCap)
        throw std::invalid_argument("ambient graph exceeds the vertex cap of " +
                                    std::to_string(kAmbientVertexCap));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("duplicate edge");
        max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
    }
    if (omega_.empty()) throw std::invalid_argument("omega must be nonempty");
    std::sort(omega_.begin(), omega_.end());
    if (std::adjacent_find(omega_.begin(), omega_.end()) != omega_.end())
        throw std::invalid_argument("duplicate vertex in omega");
    if (omega_.front() < 0 || omega_.back() >= n_)
        throw std::invalid_argument("omega index out of range");
}

std::vector<int> PaddedDomain::layer_vertices(int j) const {
    std::vector<int> ids;
    for (int i = 0; i < n_total; ++i)
        if (layer[static_cast<std::size_t>(i)] == j) ids.push_back(i);
    return ids;
}

PaddedDomain pad_domain(const LatticeDomain& dom, int layers) {
    if (layers < 0) throw std::invalid_argument("layer count must be >= 0");
    const int d = dom.dim();

    PaddedDomain pd;
    pd.n_omega = dom.size();
    pd.coords = dom.vertices();
    pd.layer.assign(static_cast<std::size_t>(pd.n_omega), 0);

    VertexIndexMap index;
    index.reserve(pd.coords.size() * 2);
    for (std::size_t i = 0; i < pd.coords.size(); ++i) index[pd.coords[i]] = static_cast<int>(i);

    // Grow one layer at a time; each new layer is sorted before ids are
    // assigned so the numbering is independent of hash iteration order.
    // Beyond the first pass only the previous layer can reach new vertices.
    std::size_t gen_begin = 0, gen_end = pd.coords.size();
    for (int j = 1; j <= layers; ++j) {
        std::vector<Vertex> fresh;
        for (std::size_t i = gen_begin; i < gen_end; ++i) {
            Vertex nbr = pd.coords[i];
            for (int axis = 0; axis < d; ++axis) {
                auto ua = static_cast<std::size_t>(axis);
                for (int step : {-1, +1}) {
                    nbr[ua] += step;
                    if (!index.count(nbr)) {
                        index[nbr] = -1;  // reserve; real id assigned after sorting
                        fresh.push_back(nbr);
                    }
                    nbr[ua] -= step;
                }
            }
        }
        std::sort(fresh.begin(), fresh.end());
        gen_begin = pd.coords.size();
        for (Vertex& v : fresh) {
            index[v] = static_cast<int>(pd.coords.size());
            pd.coords.push_back(std::move(v));
            pd.layer.push_back(j);
        }
        gen_end = pd.coords.size();
        if (gen_begin == gen_end) break;
    }

    pd.n_total = static_cast<int>(pd.coords.size());
    pd.adj.assign(static_cast<std::size_t>(pd.n_total), {});
    pd.ambient_degree.assign(static_cast<std::size_t>(pd.n_total), 2 * d);
    for (int i = 0; i < pd.n_total; ++i) {
        Vertex nbr = pd.coords[static_cast<std::size_t>(i)];
        auto& out = pd.adj[static_cast<std::size_t>(i)];
        for (int axis = 0; axis < d; ++axis) {
            auto ua = static_cast<std::size_t>(axis);
            for (int step : {-1, +1}) {
                nbr[ua] += step;
                auto it = index.find(nbr);
                if (it != index.end()) out.push_back(it->second);
                nbr[ua] -= step;
            }
        }
        std::sort(out.begin(), out.end());
    }
    return pd;
}

PaddedDomain pad_domain(const AmbientGraph& g, int layers) {
    if (layers < 0) throw std::invalid_argument("layer count must be >= 0");

    PaddedDomain pd;
    pd.n_omega = g.omega_size();
    pd.ambient_ids = g.omega();

    std::vector<int> layer_of(static_cast<std::size_t>(g.size()), -1);
    for (int v : g.omega()) layer_of[static_cast<std::size_t>(v)] = 0;
    pd.layer.assign(static_cast<std::size_t>(pd.n_omega), 0);

    std::vector<int> frontier = g.omega();
    for (int j = 1; j <= layers; ++j) {
        std::vector<int> fresh;
        for (int v : frontier)
            for (int u : g.neighbors(v))
                if (layer_of[static_cast<std::size_t>(u)] < 0) {
                    layer_of[static_cast<std::size_t>(u)] = j;
                    fresh.push_back(u);
                }
        std::sort(fresh.begin(), fresh.end());
        for (int u : fresh) {
            pd.ambient_ids.push_back(u);
            pd.layer.push_back(j);
        }
        if (fresh.empty()) break;
        frontier = std::move(fresh);
    }

    pd.n_total = static_cast<int>(pd.ambient_ids.size());
    std::vector<int> padded_id(static_cast<std::size_t>(g.size()), -1);
    for (int i = 0; i < pd.n_total; ++i) padded_id[static_cast<std::size_t>(pd.ambient_ids[static_cast<std::size_t>(i)])] = i;

    pd.adj.assign(static_cast<std::size_t>(pd.n_total), {});
    pd.ambient_degree.assign(static_cast<std::size_t>(pd.n_total), 0);
    for (int i = 0; i < pd.n_total; ++i) {
        const int v = pd.ambient_ids[static_cast<std::size_t>(i)];
        pd.ambient_degree[static_cast<std::size_t>(i)] = g.degree(v);
        auto& out = pd.adj[static_cast<std::size_t>(i)];
        for (int u : g.neighbors(v)) {
            const int pid = padded_id[static_cast<std::size_t>(u)];
            if (pid >= 0) out.push_back(pid);
        }
        std::sort(out.begin(), out.end());
    }
    return pd;
}

PaddedDomain pad_domain(const DomainRef& dom, int layers) {
    return std::visit([layers](const auto* d) { return pad_domain(*d, layers); }, dom);
}

namespace {

BoundaryLayers layers_from_padded(PaddedDomain pd, int L) {
    BoundaryLayers bl;
    bl.layers.assign(static_cast<std::size_t>(L), {});
    for (int i = pd.n_omega; i < pd.n_total; ++i) {
        const int j = pd.layer[static_cast<std::size_t>(i)];
        bl.layers[static_cast<std::size_t>(j - 1)].push_back(i);
    }
    bl.padded = std::move(pd);
    return bl;
}

}  // namespace

BoundaryLayers boundary_layers(const LatticeDomain& dom, int L) {
    if (L < 1) throw std::invalid_argument("layer count must be >= 1");
    return layers_from_padded(pad_domain(dom, L), L);
}

BoundaryLayers boundary_layers(const AmbientGraph& g, int L) {
    if (L < 1) throw std::invalid_argument("layer count must be >= 1");
    return layers_from_padded(pad_domain(g, L), L);
}

namespace {

EdgeCounts edge_counts_padded(const PaddedDomain& pd) {
    EdgeCounts ec;
    for (int u = 0; u < pd.n_total; ++u) {
        const int lu = pd.layer[static_cast<std::size_t>(u)];
        for (int v : pd.adj[static_cast<std::size_t>(u)]) {
            if (v <= u) continue;  // each unordered edge once
            const int lv = pd.layer[static_cast<std::size_t>(v)];
            const int a = std::min(lu, lv), b = std::max(lu, lv);
            if (a == 0 && b == 1) ++ec.e1;
            else if (a == 1 && b == 1) ++ec.e2;
            else if (a == 1 && b == 2) ++ec.e3;
        }
    }
    return ec;
}

}  // namespace

EdgeCounts edge_counts(const LatticeDomain& dom) { return edge_counts_padded(pad_domain(dom, 2)); }
EdgeCounts edge_counts(const AmbientGraph& g) { return edge_counts_padded(pad_domain(g, 2)); }
EdgeCounts edge_counts(const DomainRef& dom) {
    return std::visit([](const auto* d) { return edge_counts(*d); }, dom);
}

long long count_paths(int d, const Vertex& x, const Vertex& y, int m) {
    check_dim(d, x, "x");
    check_dim(d, y, "y");
    if (m < 0) throw std::invalid_argument("walk length must be >= 0");
    // Walks of length m from x never leave B(x, m).
    const LatticeDomain ball = make_ball(d, x, m);
    if (!ball.contains(y)) return 0;
    const PaddedDomain pd = pad_domain(ball, 0);

    std::vector<long long> f(static_cast<std::size_t>(pd.n_total), 0);
    f[static_cast<std::size_t>(ball.index_of(x))] = 1;
    std::vector<long long> g(f.size());
    for (int step = 0; step < m; ++step) {
        for (int v = 0; v < pd.n_total; ++v) {
            long long s = 0;
            for (int u : pd.adj[static_cast<std::size_t>(v)]) s += f[static_cast<std::size_t>(u)];
            g[static_cast<std::size_t>(v)] = s;
        }
        f.swap(g);
    }
    return f[static_cast<std::size_t>(ball.index_of(y))];
}

long long count_paths(const AmbientGraph& g, int x, int y, int m) {
    if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
        throw std::invalid_argument("vertex out of range");
    if (m < 0) throw std::invalid_argument("walk length must be >= 0");
    std::vector<long long> f(static_cast<std::size_t>(g.size()), 0);
    f[static_cast<std::size_t>(x)] = 1;
    std::vector<long long> h(f.size());
    for (int step = 0; step < m; ++step) {
        for (int v = 0; v < g.size(); ++v) {
            long long s = 0;
            for (int u : g.neighbors(v)) s += f[static_cast<std::size_t>(u)];
            h[static_cast<std::size_t>(v)] = s;
        }
        f.swap(h);
    }
    return f[static_cast<std::size_t>(y)];
}

int graph_distance(int d, const Vertex& x, const Vertex& y) {
    check_dim(d, x, "x");
    check_dim(d, y, "y");
    int l1 = 0;
    for (int i = 0; i < d; ++i) l1 += std::abs(x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)]);
    return l1;
}

std::optional<int> graph_distance(const AmbientGraph& g, int x, int y) {
    if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
        throw std::invalid_argument("vertex out of range");
    if (x == y) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    dist[static_cast<std::size_t>(x)] = 0;
    std::deque<int> queue{x};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] >= 0) continue;
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            if (u == y) return dist[static_cast<std::size_t>(u)];
            queue.push_back(u);
        }
    }
    return std::nullopt;
}

bool is_connected(const LatticeDomain& dom) {
    const PaddedDomain pd = pad_domain(dom, 0);
    std::vector<char> seen(static_cast<std::size_t>(pd.n_total), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : pd.adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                queue.push_back(u);
            }
    }
    return reached == pd.n_total;
}

bool is_connected(const AmbientGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                queue.push_back(u);
            }
    }
    return reached == g.size();
}

int domain_size(const DomainRef& dom) {
    if (std::holds_alternative<const LatticeDomain*>(dom))
        return std::get<const LatticeDomain*>(dom)->size();
    return std::get<const AmbientGraph*>(dom)->omega_size();
}

int lattice_dim(const DomainRef& dom) {
    if (std::holds_alternative<const LatticeDomain*>(dom))
        return std::get<const LatticeDomain*>(dom)->dim();
    return 0;
}

int max_ambient_degree(const DomainRef& dom) {
    if (std::holds_alternative<const LatticeDomain*>(dom))
        return 2 * std::get<const LatticeDomain*>(dom)->dim();
    return std::get<const AmbientGraph*>(dom)->max_degree();
}

}  // namespace polylap
