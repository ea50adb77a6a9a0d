#ifndef SRPOW_GRAPH_HPP
#define SRPOW_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srpow/ideal.hpp"
#include "srpow/simplicial.hpp"

namespace srpow {

// Simple labeled graph on {1..n}: no loops, no isolated vertices, n >= 3.
// Vertices are 0-based internally; text I/O is 1-based.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; } // sorted, u < v
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    FaceMask edge_mask(std::size_t e) const; // two-bit mask of edge e

    // Edge set as a bitmask over the lexicographic pair order
    // (0,1),(0,2),...,(0,n-1),(1,2),...; bit k set = pair k is an edge.
    std::uint64_t edge_bitmask() const;
    static int pair_count(int n) { return n * (n - 1) / 2; }
    static bool bitmask_valid(int n, std::uint64_t mask); // no isolated vertex
    static Graph from_bitmask(int n, std::uint64_t mask);

    // Text format: first line "n <count>", then one "u v" line per edge,
    // 1-based. Duplicate edges are rejected.
    static Graph parse(std::istream& in);
    std::string to_text() const;
    std::string edges_to_string() const; // "1-2;2-3;..."

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<FaceMask> adj_; // adjacency masks per vertex
};

enum class GraphClass { Path, Cycle, TwoDisjointEdges, Other };
std::string to_string(GraphClass c);

// I_G: intersection of the primes P_ij over the edges of G. Generated by the
// non-edge products x_i x_j and the edge-triangle products x_i x_j x_k.
MonomialIdeal ideal_of_graph(const Graph& g, long field_char = 0);
// The generator description route, used as a cross-check for ideal_of_graph.
MonomialIdeal ideal_of_graph_direct(const Graph& g, long field_char = 0);

// I_G^{(m)}: intersection of the P_ij^m over the edges.
MonomialIdeal symbolic_power(const Graph& g, int m, long field_char = 0);
// Membership without generators: degree outside every edge at least m.
bool in_symbolic_power(const Graph& g, int m, const Monomial& f);

// Delta_a(I_G^{(m)}) for a >= 0: the subgraph of edges {i,j} with
// sum of a_t over t outside {i,j} below m; void when no edge qualifies.
SimplicialComplex delta_a_closed_form(const Graph& g, int m, const DegreeVector& a);

// Max shortest-path distance; empty when G is disconnected.
std::optional<int> diameter(const Graph& g);

// Every pair of disjoint edges lies in a 4-cycle (vacuously true without
// disjoint pairs).
bool disjoint_pairs_in_4cycles(const Graph& g);

GraphClass classify(const Graph& g);

// Non-edges of G; may cover only part of {1..n} and is exempt from the Graph
// invariants.
std::vector<std::pair<int, int>> complement_edges(const Graph& g);
bool is_bipartite(int n, const std::vector<std::pair<int, int>>& edges);

// The six combinatorial criteria the censuses check against, all
// m-independent; m only selects
// which of them apply and must be >= 2.
struct CriteriaRecord {
    bool cm_sym2;      // I^(2) CM        <=> diam(G) <= 2
    bool cm_sym_high;  // I^(m) CM, m>=3  <=> disjoint edge pairs in 4-cycles
    bool eq2;          // I^(2) = I^2     <=> n=3, or n=4 path/cycle/2K2, or n=5 cycle
    bool eq_high;      // I^(m) = I^m m>=3<=> n=3, or n=4 and path/cycle/2K2
    bool cm_ord2;      // I^2 CM          <=> n=3, or cycle with n in {4,5}
    bool cm_ord_high;  // I^m CM, m>=3    <=> n=3, or cycle with n=4

    bool operator==(const CriteriaRecord&) const = default;
};

CriteriaRecord criteria(const Graph& g, int m);

} // namespace srpow

#endif
