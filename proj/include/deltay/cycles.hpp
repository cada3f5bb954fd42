#ifndef DELTAY_CYCLES_HPP
#define DELTAY_CYCLES_HPP

#include <string>
#include <vector>

#include "deltay/graph.hpp"

namespace deltay {

// A cycle as a vertex sequence in canonical cyclic order: minimal vertex
// first, then the smaller of its two cycle neighbors.
struct Cycle {
    std::vector<int> verts;

    static Cycle from_sequence(std::vector<int> seq); // canonicalizes
    size_t length() const { return verts.size(); }
    bool contains(int v) const;
    std::string key() const; // "v-v-v"

    bool operator==(const Cycle&) const = default;
};

// Comparison used for all sorted cycle output: by length, then lexicographic.
bool cycle_less(const Cycle& a, const Cycle& b);

// An element of the cycle set: one cycle, or a union of mutually
// vertex-disjoint cycles (two within this project's scope), components kept
// in canonical order.
struct CycleSetElement {
    std::vector<Cycle> components;

    static CycleSetElement knot(Cycle c);
    static CycleSetElement link(Cycle a, Cycle b); // canonical component order
    static CycleSetElement make(std::vector<Cycle> comps);

    bool is_knot() const { return components.size() == 1; }
    bool is_link2() const { return components.size() == 2; }
    bool contains_vertex(int v) const;
    bool contains_all(std::initializer_list<int> vs) const;
    std::string key() const; // components joined by "|"

    bool operator==(const CycleSetElement&) const = default;
};

bool element_less(const CycleSetElement& a, const CycleSetElement& b);

// Validation against a host graph: consecutive adjacency, distinct vertices,
// length >= 3, pairwise disjoint components.
bool is_cycle_of(const Graph& g, const Cycle& c);
bool is_element_of(const Graph& g, const CycleSetElement& e);

// All cycles of g, canonical, sorted.
std::vector<Cycle> enumerate_cycles(const Graph& g);

// All unordered pairs of vertex-disjoint cycles, sorted.
std::vector<CycleSetElement> enumerate_disjoint_pairs(const Graph& g);

// Pairs whose component lengths are {k,l} (order-insensitive).
std::vector<CycleSetElement> enumerate_pairs_of_type(const Graph& g, int k, int l);

// All unions of n mutually disjoint cycles (n >= 1).
std::vector<CycleSetElement> enumerate_gamma_n(const Graph& g, int n);

// Gamma-bar within scope: knots plus 2-component links.
std::vector<CycleSetElement> enumerate_gamma_bar(const Graph& g);

// The rerouting map induced by a delta-y exchange at `site`: edges of the
// triangle are replaced by paths through the fresh vertex (an edge uv
// becomes u-x-v; a two-edge passage u-v-w becomes u-x-w). Defined on
// elements that do not contain the triangle as a component.
CycleSetElement phi_map(const Graph& g_delta, const TriangleSite& site,
                        const CycleSetElement& elem);

// Exact inverse image of phi_map. Size is 1 when the element contains all
// of u,v,w,x or omits x, and 2 otherwise.
std::vector<CycleSetElement> phi_preimage(const Graph& g_delta, const TriangleSite& site,
                                          const CycleSetElement& elem);

// Cycle list file format: one canonical vertex sequence per line, pair
// components separated by '|'.
std::string write_cycles_text(const std::vector<CycleSetElement>& elems);
std::vector<CycleSetElement> parse_cycles_text(const std::string& text);
CycleSetElement parse_element_key(const std::string& key);

} // namespace deltay

#endif
