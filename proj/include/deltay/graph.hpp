#ifndef DELTAY_GRAPH_HPP
#define DELTAY_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace deltay {

// Finite simple labeled graph. Vertices are integer labels kept sorted;
// edges are unordered pairs stored as (min,max), sorted lexicographically.
struct Graph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    int max_label() const;

    void add_vertex(int v);
    void add_edge(int u, int v); // endpoints must already be vertices
    void remove_edge(int u, int v);
    void remove_vertex(int v); // drops incident edges

    void check_invariants() const; // throws on malformed data

    bool operator==(const Graph&) const = default;
};

Graph make_graph(const std::vector<int>& vertices,
                 const std::vector<std::pair<int, int>>& edges);

Graph complete_graph(int n);

// A 3-cycle on vertices u,v,w of the host graph.
struct TriangleSite {
    int u, v, w;
    TriangleSite normalized() const;
    bool operator==(const TriangleSite&) const = default;
};

// A degree-3 vertex x with neighbors u,v,w.
struct WyeSite {
    int x;
    int u, v, w;
    bool operator==(const WyeSite&) const = default;
};

// Replace the triangle uvw by a new vertex x joined to u,v,w. The fresh
// vertex always gets label max+1 so exchange sequences replay exactly.
// Edge count is preserved, vertex count goes up by one.
Graph delta_y(const Graph& g, const TriangleSite& site, int* created_vertex = nullptr);

// The inverse: delete the degree-3 vertex x and join its neighbors into a
// triangle. Rejects sites where some triangle edge already exists (the
// result must stay simple).
Graph y_delta(const Graph& g, const WyeSite& site);

std::vector<TriangleSite> triangle_sites(const Graph& g);
std::vector<WyeSite> wye_sites(const Graph& g); // all degree-3 vertices

// Canonical form: relabeling-invariant certificate. Two graphs have equal
// certificates iff they are isomorphic. Computed by equitable degree
// refinement plus backtracking over the smallest cell; fine for the sizes
// handled here (at most 14 vertices).
struct CanonicalCertificate {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // on labels 0..n-1

    std::string to_string() const;
    static CanonicalCertificate parse(const std::string& s);

    bool operator==(const CanonicalCertificate&) const = default;
    auto operator<=>(const CanonicalCertificate&) const = default;
};

CanonicalCertificate canonical_form(const Graph& g);

// Canonical labeling: perm[i] = canonical position of vertices[i].
std::vector<int> canonical_labeling(const Graph& g);

// All automorphisms, as permutations of vertex positions (vertices[] order).
std::vector<std::vector<int>> automorphisms(const Graph& g);

// One exchange applied during a family search.
struct ExchangeStep {
    bool is_delta_y = true;
    TriangleSite tri{};  // valid when is_delta_y
    WyeSite wye{};       // valid otherwise
};

struct FamilyMember {
    std::string name;
    Graph graph; // representative, labels from a deterministic replay
    CanonicalCertificate cert;
    std::vector<ExchangeStep> witness; // from the root to this member
    bool delta_only = true;            // reachable by delta-y steps alone
};

// Breadth-first closure of the root under delta-y exchanges (and, when
// allow_ydelta is set, y-delta as well), deduplicated by canonical form.
// Members reachable by delta-y alone are explored first so their witnessing
// sequences are pure delta-y sequences.
std::vector<FamilyMember> family_closure(const Graph& root, bool allow_ydelta,
                                         const std::string& root_name);

// Graph file format: "graph <name> <nvertices>" header, then one "u v" pair
// per line in ascending order.
std::string write_graph_text(const Graph& g, const std::string& name);
Graph parse_graph_text(const std::string& text, std::string* name = nullptr);

} // namespace deltay

#endif
