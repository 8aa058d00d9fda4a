#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

namespace polylap {

/// A lattice point in Z^d.
using Vertex = std::vector<int>;

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int c : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned int>(c));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

using VertexIndexMap = std::unordered_map<Vertex, int, VertexHash>;

/// A finite vertex set in Z^d. Vertices are stored in lexicographic order and
/// indexed 0..n-1 in that order, so every downstream matrix is reproducible.
/// Adjacency is the ambient Z^d adjacency: x ~ y iff |x-y|_1 = 1.
class LatticeDomain {
  public:
    LatticeDomain(int d, std::vector<Vertex> vertices);

    int dim() const { return d_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& vertex(int i) const { return verts_[static_cast<std::size_t>(i)]; }
    bool contains(const Vertex& v) const { return index_.count(v) != 0; }
    int index_of(const Vertex& v) const;

  private:
    int d_;
    std::vector<Vertex> verts_;
    VertexIndexMap index_;
};

/// Axis-aligned box prod_i {lo_i..hi_i}.
LatticeDomain make_box(int d, const Vertex& lo, const Vertex& hi);

/// L1 ball {y : |y-center|_1 <= r}; graph distance on Z^d equals L1 distance.
LatticeDomain make_ball(int d, const Vertex& center, int r);

/// A general finite simple undirected graph with a designated subset omega.
class AmbientGraph {
  public:
    /// Edges as (u,v) pairs on {0..n-1}; duplicates and self-loops rejected.
    AmbientGraph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<int> omega);

    int size() const { return n_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const { return max_degree_; }
    const std::vector<int>& omega() const { return omega_; }
    int omega_size() const { return static_cast<int>(omega_.size()); }

  private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> omega_;
    int max_degree_ = 0;
};

/// Non-owning reference to either domain flavour; most operator-level code is
/// written once against this.
using DomainRef = std::variant<const LatticeDomain*, const AmbientGraph*>;

/// Zero extension substrate: omega plus `layers` boundary layers, with the
/// adjacency induced on that set and the *ambient* degree of every vertex
/// (2d on Z^d, deg_G on a finite ambient graph). Vertices 0..n_omega-1 are
/// omega in domain index order; each subsequent layer is appended in a
/// deterministic order.
struct PaddedDomain {
    int n_omega = 0;
    int n_total = 0;
    std::vector<int> layer;                 // 0 for omega, j >= 1 for delta_j
    std::vector<std::vector<int>> adj;      // sorted neighbor ids within the padded set
    std::vector<int> ambient_degree;
    std::vector<Vertex> coords;             // lattice domains only, else empty
    std::vector<int> ambient_ids;           // ambient graphs only, else empty

    std::vector<int> layer_vertices(int j) const;
    int layer_size(int j) const { return static_cast<int>(layer_vertices(j).size()); }
};

PaddedDomain pad_domain(const LatticeDomain& dom, int layers);
PaddedDomain pad_domain(const AmbientGraph& g, int layers);
PaddedDomain pad_domain(const DomainRef& dom, int layers);

/// Boundary layers delta_1, ..., delta_L as padded-domain vertex id lists
/// (use `coords`/`ambient_ids` of the carried PaddedDomain to map back).
struct BoundaryLayers {
    PaddedDomain padded;
    std::vector<std::vector<int>> layers;   // layers[j-1] = ids of delta_j
};

BoundaryLayers boundary_layers(const LatticeDomain& dom, int L);
BoundaryLayers boundary_layers(const AmbientGraph& g, int L);

/// E1 = |E(delta Omega, Omega)|, E2 = |E(delta Omega)|, E3 = |E(delta Omega, delta_2 Omega)|,
/// each unordered edge counted once.
struct EdgeCounts {
    long long e1 = 0;
    long long e2 = 0;
    long long e3 = 0;
};

EdgeCounts edge_counts(const LatticeDomain& dom);
EdgeCounts edge_counts(const AmbientGraph& g);
EdgeCounts edge_counts(const DomainRef& dom);

/// Number of walks of length m between two lattice points, i.e. (A^m)_{xy} on
/// Z^d, computed by repeated adjacency application inside B(x, m).
long long count_paths(int d, const Vertex& x, const Vertex& y, int m);

/// Number of walks of length m between two vertices of a finite graph.
long long count_paths(const AmbientGraph& g, int x, int y, int m);

/// BFS distance on Z^d (equals the L1 distance).
int graph_distance(int d, const Vertex& x, const Vertex& y);

/// BFS distance on a finite graph; nullopt when y is unreachable from x.
std::optional<int> graph_distance(const AmbientGraph& g, int x, int y);

/// Whether the induced subgraph on the domain's vertex set is connected.
bool is_connected(const LatticeDomain& dom);
bool is_connected(const AmbientGraph& g);

int domain_size(const DomainRef& dom);
int lattice_dim(const DomainRef& dom);      // 0 for ambient graphs
int max_ambient_degree(const DomainRef& dom);  // 2d on Z^d

}  // namespace polylap
