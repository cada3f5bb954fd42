#include "deltay/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deltay {

Cycle Cycle::from_sequence(std::vector<int> seq) {
    if (seq.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    {
        std::set<int> s(seq.begin(), seq.end());
        if (s.size() != seq.size()) throw std::invalid_argument("cycle vertices not distinct");
    }
    auto mn = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), mn, seq.end());
    if (seq[1] > seq.back()) {
        std::reverse(seq.begin() + 1, seq.end());
    }
    Cycle c;
    c.verts = std::move(seq);
    return c;
}

bool Cycle::contains(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

std::string Cycle::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) os << "-";
        os << verts[i];
    }
    return os.str();
}

bool cycle_less(const Cycle& a, const Cycle& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    return a.verts < b.verts;
}

CycleSetElement CycleSetElement::knot(Cycle c) {
    CycleSetElement e;
    e.components.push_back(std::move(c));
    return e;
}

CycleSetElement CycleSetElement::link(Cycle a, Cycle b) {
    return make({std::move(a), std::move(b)});
}

CycleSetElement CycleSetElement::make(std::vector<Cycle> comps) {
    std::sort(comps.begin(), comps.end(), cycle_less);
    CycleSetElement e;
    e.components = std::move(comps);
    return e;
}

bool CycleSetElement::contains_vertex(int v) const {
    for (auto& c : components)
        if (c.contains(v)) return true;
    return false;
}

bool CycleSetElement::contains_all(std::initializer_list<int> vs) const {
    for (int v : vs)
        if (!contains_vertex(v)) return false;
    return true;
}

std::string CycleSetElement::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << "|";
        os << components[i].key();
    }
    return os.str();
}

bool element_less(const CycleSetElement& a, const CycleSetElement& b) {
    if (a.components.size() != b.components.size())
        return a.components.size() < b.components.size();
    for (size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i] == b.components[i]) continue;
        return cycle_less(a.components[i], b.components[i]);
    }
    return false;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    size_t n = c.verts.size();
    if (n < 3) return false;
    std::set<int> seen;
    for (size_t i = 0; i < n; ++i) {
        if (!g.has_vertex(c.verts[i])) return false;
        if (!seen.insert(c.verts[i]).second) return false;
        if (!g.has_edge(c.verts[i], c.verts[(i + 1) % n])) return false;
    }
    return true;
}

bool is_element_of(const Graph& g, const CycleSetElement& e) {
    if (e.components.empty()) return false;
    std::set<int> used;
    for (auto& c : e.components) {
        if (!is_cycle_of(g, c)) return false;
        for (int v : c.verts)
            if (!used.insert(v).second) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration. DFS over vertex sequences with the start pinned to the cycle
// minimum and the direction fixed by second < last; each cycle is produced
// exactly once, already in canonical rotation.

std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> out;
    int n = (int)g.vertices.size();
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[g.vertices[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (auto& e : g.edges) {
        adj[index.at(e.first)].push_back(index.at(e.second));
        adj[index.at(e.second)].push_back(index.at(e.first));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> path;
    std::vector<bool> used(n, false);

    auto emit = [&]() {
        std::vector<int> seq;
        seq.reserve(path.size());
        for (int i : path) seq.push_back(g.vertices[i]);
        Cycle c;
        c.verts = std::move(seq); // already canonical by construction
        out.push_back(std::move(c));
    };

    std::function<void(int, int)> dfs = [&](int start, int cur) {
        for (int nxt : adj[cur]) {
            if (nxt == start && path.size() >= 3 && path[1] < path.back()) emit();
            if (nxt <= start || used[nxt]) continue;
            used[nxt] = true;
            path.push_back(nxt);
            dfs(start, nxt);
            path.pop_back();
            used[nxt] = false;
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        dfs(s, s);
    }
    std::sort(out.begin(), out.end(), cycle_less);
    return out;
}

std::vector<CycleSetElement> enumerate_disjoint_pairs(const Graph& g) {
    auto r = enumerate_gamma_n(g, 2);
    return r;
}

std::vector<CycleSetElement> enumerate_pairs_of_type(const Graph& g, int k, int l) {
    std::vector<CycleSetElement> out;
    for (auto& e : enumerate_disjoint_pairs(g)) {
        int a = (int)e.components[0].length(), b = (int)e.components[1].length();
        if ((a == k && b == l) || (a == l && b == k)) out.push_back(e);
    }
    return out;
}

namespace {

uint32_t vertex_mask(const Graph& g, const Cycle& c) {
    uint32_t m = 0;
    for (int v : c.verts) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
        m |= 1u << (it - g.vertices.begin());
    }
    return m;
}

} // namespace

std::vector<CycleSetElement> enumerate_gamma_n(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_gamma_n: n must be >= 1");
    auto cycles = enumerate_cycles(g);
    std::vector<uint32_t> masks;
    masks.reserve(cycles.size());
    for (auto& c : cycles) masks.push_back(vertex_mask(g, c));

    std::vector<CycleSetElement> out;
    std::vector<Cycle> chosen;

    std::function<void(size_t, uint32_t, int)> rec = [&](size_t from, uint32_t used, int left) {
        if (left == 0) {
            out.push_back(CycleSetElement::make(chosen));
            return;
        }
        // Not enough vertices left for `left` more cycles: prune.
        int avail = (int)g.vertices.size() - __builtin_popcount(used);
        if (avail < 3 * left) return;
        for (size_t i = from; i < cycles.size(); ++i) {
            if (masks[i] & used) continue;
            chosen.push_back(cycles[i]);
            rec(i + 1, used | masks[i], left - 1);
            chosen.pop_back();
        }
    };
    rec(0, 0, n);
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

std::vector<CycleSetElement> enumerate_gamma_bar(const Graph& g) {
    std::vector<CycleSetElement> out;
    for (auto& c : enumerate_cycles(g)) out.push_back(CycleSetElement::knot(c));
    for (auto& p : enumerate_disjoint_pairs(g)) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// The rerouting map and its preimages.

namespace {

struct SiteInfo {
    int u, v, w, x;
    Graph g_y;
};

SiteInfo site_info(const Graph& g_delta, const TriangleSite& site) {
    SiteInfo s;
    auto t = site.normalized();
    s.u = t.u;
    s.v = t.v;
    s.w = t.w;
    s.g_y = delta_y(g_delta, site, &s.x);
    return s;
}

bool is_triangle_edge(const SiteInfo& s, int a, int b) {
    auto in = [&](int p) { return p == s.u || p == s.v || p == s.w; };
    return in(a) && in(b);
}

// Reroute one component through x. Returns the rewritten cycle.
Cycle map_component(const SiteInfo& s, const Cycle& c) {
    size_t n = c.verts.size();
    // Count triangle edges used by the cycle.
    int tri_edges = 0;
    for (size_t i = 0; i < n; ++i)
        if (is_triangle_edge(s, c.verts[i], c.verts[(i + 1) % n])) ++tri_edges;
    if (tri_edges == 0) return c;
    if (tri_edges >= 3)
        throw std::invalid_argument("phi_map: element contains the exchange triangle");
    if (tri_edges == 1) {
        // Insert x between the two triangle vertices.
        std::vector<int> seq;
        for (size_t i = 0; i < n; ++i) {
            seq.push_back(c.verts[i]);
            if (is_triangle_edge(s, c.verts[i], c.verts[(i + 1) % n])) seq.push_back(s.x);
        }
        return Cycle::from_sequence(seq);
    }
    // Two triangle edges meet at a shared vertex; replace it by x.
    // The shared vertex is the one whose both cycle edges are triangle edges.
    std::vector<int> seq = c.verts;
    for (size_t i = 0; i < n; ++i) {
        int prev = seq[(i + n - 1) % n], cur = seq[i], nxt = seq[(i + 1) % n];
        if (is_triangle_edge(s, prev, cur) && is_triangle_edge(s, cur, nxt)) {
            seq[i] = s.x;
            return Cycle::from_sequence(seq);
        }
    }
    throw std::logic_error("phi_map: inconsistent triangle usage");
}

} // namespace

CycleSetElement phi_map(const Graph& g_delta, const TriangleSite& site,
                        const CycleSetElement& elem) {
    auto s = site_info(g_delta, site);
    if (!is_element_of(g_delta, elem))
        throw std::invalid_argument("phi_map: element is not a cycle set of the host");
    for (auto& c : elem.components)
        if (c.length() == 3 && c.contains(s.u) && c.contains(s.v) && c.contains(s.w))
            throw std::invalid_argument("phi_map: element contains the exchange triangle");
    std::vector<Cycle> comps;
    for (auto& c : elem.components) comps.push_back(map_component(s, c));
    auto out = CycleSetElement::make(std::move(comps));
    if (!is_element_of(s.g_y, out)) throw std::logic_error("phi_map: image invalid");
    return out;
}

std::vector<CycleSetElement> phi_preimage(const Graph& g_delta, const TriangleSite& site,
                                          const CycleSetElement& elem) {
    auto s = site_info(g_delta, site);
    if (!is_element_of(s.g_y, elem))
        throw std::invalid_argument("phi_preimage: element is not a cycle set of the exchanged graph");

    // Locate the component through x, if any.
    int xc = -1;
    for (size_t i = 0; i < elem.components.size(); ++i)
        if (elem.components[i].contains(s.x)) xc = (int)i;

    if (xc < 0) return {elem}; // identity preimage only

    const Cycle& c = elem.components[xc];
    size_t n = c.verts.size();
    size_t xi = 0;
    while (c.verts[xi] != s.x) ++xi;
    int a = c.verts[(xi + n - 1) % n];
    int b = c.verts[(xi + 1) % n];
    // x's neighbors on the cycle are two of u,v,w; t is the third.
    int t = s.u ^ s.v ^ s.w ^ a ^ b;

    std::vector<CycleSetElement> out;

    // Candidate 1: shortcut a-x-b to the triangle edge ab.
    {
        std::vector<int> seq;
        for (size_t i = 0; i < n; ++i)
            if (c.verts[i] != s.x) seq.push_back(c.verts[i]);
        if (seq.size() >= 3) {
            Cycle c1 = Cycle::from_sequence(seq);
            bool is_tri = c1.length() == 3 && c1.contains(s.u) && c1.contains(s.v) && c1.contains(s.w);
            if (!is_tri) {
                auto comps = elem.components;
                comps[xc] = c1;
                auto cand = CycleSetElement::make(comps);
                if (is_element_of(g_delta, cand)) out.push_back(cand);
            }
        }
    }

    // Candidate 2: replace x by the third triangle vertex t, when free.
    if (!elem.contains_vertex(t)) {
        std::vector<int> seq = c.verts;
        seq[xi] = t;
        Cycle c2 = Cycle::from_sequence(seq);
        auto comps = elem.components;
        comps[xc] = c2;
        auto cand = CycleSetElement::make(comps);
        if (is_element_of(g_delta, cand)) out.push_back(cand);
    }

    std::sort(out.begin(), out.end(), element_less);
    return out;
}

// ---------------------------------------------------------------------------
// Text format.

std::string write_cycles_text(const std::vector<CycleSetElement>& elems) {
    std::ostringstream os;
    for (auto& e : elems) os << e.key() << "\n";
    return os.str();
}

CycleSetElement parse_element_key(const std::string& key) {
    std::vector<Cycle> comps;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, '|')) {
        std::vector<int> seq;
        std::istringstream ps(part);
        std::string tok;
        while (std::getline(ps, tok, '-')) seq.push_back(std::stoi(tok));
        comps.push_back(Cycle::from_sequence(seq));
    }
    if (comps.empty()) throw std::invalid_argument("empty cycle key");
    return CycleSetElement::make(std::move(comps));
}

std::vector<CycleSetElement> parse_cycles_text(const std::string& text) {
    std::vector<CycleSetElement> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_element_key(line));
    }
    return out;
}

} // namespace deltay
