// Finite d-out-regular directed multigraphs and their constructors:
// edge-list parsing, non-backtracking lifts of regular undirected graphs,
// Cayley digraphs from permutation generators, and seeded random regular
// graphs (permutation/matching model, resampled until simple).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsm::nbrw {

struct SymmetryHint {
    bool vertex_transitive = false;
    int orbit_count = 0;  // 0 = unknown
};

struct Digraph {
    int n = 0;
    int d = 0;
    // Flat out-neighbor table: out[v*d + k], multiset semantics.
    std::vector<int> out;
    SymmetryHint symmetry;

    int out_neighbor(int v, int k) const { return out[static_cast<std::size_t>(v) * d + k]; }
};

// Undirected simple k-regular graph, adjacency lists sorted.
struct UndirectedGraph {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> adj;
};

// Parses lines of "src dst" (0-indexed); out-degree inferred and checked
// uniform. Repeated lines are multi-edges. Throws with the offending vertex
// on ragged degrees, and on empty input or out-of-range ids.
Digraph from_edge_list(std::istream& in);
Digraph from_edge_list_text(const std::string& text);

// File format: header "n d", then one "src dst" line per edge.
Digraph read_graph_file(std::istream& in);

// Serializes in the header + edge-list format.
void write_graph_file(std::ostream& out, const Digraph& g);

// Directed-edge chain of an undirected k-regular graph: vertices are
// orientations (u -> v) of edges, out-neighbors of (u -> v) are (v -> w)
// with w adjacent to v and w != u. Gives n*k vertices of out-degree k-1.
Digraph nonbacktracking_lift(const UndirectedGraph& base,
                             bool transitive_hint = false);

// Vertex ids of the lift are assigned in order of (u, v) with u < n, v in
// adj[u]; this exposes the mapping for tests.
int lift_vertex_id(const UndirectedGraph& base, int from, int to);

// Cayley digraph on the closure of the generators (permutations given as
// image vectors on a common finite set), edges g -> g*s per generator.
// Throws if the closure exceeds the cap.
Digraph cayley_digraph(const std::vector<std::vector<int>>& generators,
                       std::size_t closure_cap = 2'000'000);

// Stock constructors.
Digraph directed_cycle(int n);
Digraph complete_with_loops(int n);  // out-neighbors of every vertex = all vertices
UndirectedGraph complete_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph petersen_graph();

// Seeded random simple k-regular graph on n vertices: union of k/2 random
// permutations plus, for odd k, a perfect matching (n must then be even);
// resampled until simple.
UndirectedGraph random_regular_graph(int n, int k, std::uint64_t seed);

// BFS distances from a source along out-edges; -1 marks unreachable.
std::vector<int> bfs_distances(const Digraph& g, int source);

bool strongly_connected(const Digraph& g);

// gcd of directed cycle lengths (1 = aperiodic); graph must be strongly
// connected.
int period(const Digraph& g);

// Girth of an undirected simple graph (shortest cycle), or -1 if acyclic.
int undirected_girth(const UndirectedGraph& g);

}  // namespace dsm::nbrw
