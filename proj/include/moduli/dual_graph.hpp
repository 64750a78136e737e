#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moduli/errors.hpp"

namespace moduli {

// Dual graph of a nodal curve: vertices carry the geometric genus of a
// component, edges are nodes (loops allowed, multi-edges allowed), legs are
// marked points.  Edges are stored as a sorted multiset of id pairs with
// first <= second.
struct DualGraph {
    struct Vertex {
        int id = 0;
        long long genus = 0;

        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::map<int, int> legs; // marking -> vertex id

    DualGraph(std::vector<Vertex> vs, std::vector<std::pair<int, int>> es,
              std::map<int, int> ls = {});

    const Vertex& vertex(int id) const;
    long long degree(int id) const; // loops count twice, legs not included
    long long leg_count(int id) const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

// sum of vertex genera + first Betti number (E - V + 1); the graph must be
// connected, else DisconnectedError.
long long arithmetic_genus(const DualGraph& g);

// 2 genus(v) - 2 + degree(v) + legs(v) > 0 at every vertex.
bool is_stable(const DualGraph& g);

// Smoothing the node that edge e represents.  A loop disappears and raises
// its vertex's genus by one; a non-loop edge contracts, merging the two
// endpoint vertices with genera added (remaining edges between them turn
// into loops).  Either way the arithmetic genus is preserved.
DualGraph smooth_edge(const DualGraph& g, std::pair<int, int> e);

// Label-independent key: the lexicographically smallest relabeling over
// all vertex permutations.  Brute force; fine for the <= 4-vertex graphs
// this project handles, refused above 8 vertices.
struct GraphKey {
    std::vector<long long> genus;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> legs;

    friend auto operator<=>(const GraphKey&, const GraphKey&) = default;
};

GraphKey canonical_key(const DualGraph& g);

// Closure of g under single-edge smoothings, g itself included, deduplicated
// up to isomorphism and sorted by canonical key.  Refuses |E| > 16.
std::vector<DualGraph> all_smoothings(const DualGraph& g);

// A boundary stratum to test membership against: the irreducible-node
// stratum, or the one-node splitting of type (i, S).
struct Stratum {
    enum class Kind { Irr, Split };

    Kind kind = Kind::Irr;
    long long i = 0;
    std::vector<int> S; // markings on the genus-i side

    static Stratum irr();
    static Stratum split(long long i, std::vector<int> S = {});
};

// Whether some iterated smoothing of g (possibly none) is exactly the
// stratum's one-edge graph.  InvalidStratum when the stratum does not name
// a boundary divisor for g's genus and markings.
bool lies_in_boundary(const DualGraph& g, const Stratum& stratum);

// The four degenerate-member shapes of the genus-13 pencil, instantiated
// for every split a + b = 8 of the gluing nodes: named graphs, all of
// arithmetic genus 13.
std::vector<std::pair<std::string, DualGraph>> genus13_pencil_graphs();

} // namespace moduli
