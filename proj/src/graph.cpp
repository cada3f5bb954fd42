#include "deltay/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deltay {

static std::pair<int, int> norm_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges.begin(), edges.end(), norm_edge(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::max_label() const {
    return vertices.empty() ? -1 : vertices.back();
}

void Graph::add_vertex(int v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v) throw std::invalid_argument("duplicate vertex");
    vertices.insert(it, v);
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("edge endpoint is not a vertex");
    auto e = norm_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) throw std::invalid_argument("duplicate edge");
    edges.insert(it, e);
}

void Graph::remove_edge(int u, int v) {
    auto e = norm_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw std::invalid_argument("no such edge");
    edges.erase(it);
}

void Graph::remove_vertex(int v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw std::invalid_argument("no such vertex");
    vertices.erase(it);
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [v](auto& e) { return e.first == v || e.second == v; }),
                edges.end());
}

void Graph::check_invariants() const {
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i - 1] >= vertices[i]) throw std::invalid_argument("vertices not sorted/unique");
    for (size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (e.first >= e.second) throw std::invalid_argument("edge not normalized");
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw std::invalid_argument("edge endpoint is not a vertex");
        if (i > 0 && !(edges[i - 1] < e)) throw std::invalid_argument("edges not sorted/unique");
    }
}

Graph make_graph(const std::vector<int>& vertices,
                 const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.vertices = vertices;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    for (auto& e : edges) {
        auto ne = norm_edge(e.first, e.second);
        g.edges.push_back(ne);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.check_invariants();
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    Graph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

TriangleSite TriangleSite::normalized() const {
    int a[3] = {u, v, w};
    std::sort(a, a + 3);
    return {a[0], a[1], a[2]};
}

Graph delta_y(const Graph& g, const TriangleSite& site, int* created_vertex) {
    auto s = site.normalized();
    if (s.u == s.v || s.v == s.w)
        throw std::invalid_argument("delta_y: degenerate site");
    if (!g.has_edge(s.u, s.v) || !g.has_edge(s.v, s.w) || !g.has_edge(s.w, s.u))
        throw std::invalid_argument("delta_y: not a triangle");
    Graph out = g;
    out.remove_edge(s.u, s.v);
    out.remove_edge(s.v, s.w);
    out.remove_edge(s.w, s.u);
    int x = out.max_label() + 1;
    out.add_vertex(x);
    out.add_edge(s.u, x);
    out.add_edge(s.v, x);
    out.add_edge(s.w, x);
    if (created_vertex) *created_vertex = x;
    return out;
}

Graph y_delta(const Graph& g, const WyeSite& site) {
    if (!g.has_vertex(site.x)) throw std::invalid_argument("y_delta: no such vertex");
    auto nbrs = g.neighbors(site.x);
    if (nbrs.size() != 3) throw std::invalid_argument("y_delta: vertex degree is not 3");
    std::vector<int> want = {site.u, site.v, site.w};
    std::sort(want.begin(), want.end());
    if (nbrs != want) throw std::invalid_argument("y_delta: site neighbors do not match");
    if (g.has_edge(site.u, site.v) || g.has_edge(site.v, site.w) || g.has_edge(site.w, site.u))
        throw std::invalid_argument("y_delta: would create multi-edge");
    Graph out = g;
    out.remove_vertex(site.x);
    out.add_edge(site.u, site.v);
    out.add_edge(site.v, site.w);
    out.add_edge(site.w, site.u);
    return out;
}

std::vector<TriangleSite> triangle_sites(const Graph& g) {
    std::vector<TriangleSite> out;
    int n = (int)g.vertices.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(g.vertices[i], g.vertices[j])) continue;
            for (int k = j + 1; k < n; ++k) {
                if (g.has_edge(g.vertices[j], g.vertices[k]) &&
                    g.has_edge(g.vertices[i], g.vertices[k]))
                    out.push_back({g.vertices[i], g.vertices[j], g.vertices[k]});
            }
        }
    return out;
}

std::vector<WyeSite> wye_sites(const Graph& g) {
    std::vector<WyeSite> out;
    for (int v : g.vertices) {
        auto nbrs = g.neighbors(v);
        if (nbrs.size() == 3) out.push_back({v, nbrs[0], nbrs[1], nbrs[2]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling: equitable refinement + backtracking over the first
// smallest non-singleton cell. Leaves reaching the minimal edge encoding are
// exactly the automorphisms, which we can collect on request.

namespace {

struct CanonSearch {
    int n;
    std::vector<uint32_t> adj; // adjacency bitmask per vertex index

    std::vector<std::pair<int, int>> best_edges;
    bool have_best = false;
    std::vector<int> best_perm;             // position of vertex i in best labeling
    std::vector<std::vector<int>>* auts = nullptr;

    // partition: ordered list of cells, each a vector of vertex indices.
    using Partition = std::vector<std::vector<int>>;

    // Split every cell by neighbor counts into splitter cells until stable.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t si = 0; si < p.size(); ++si) {
                uint32_t splitter = 0;
                for (int v : p[si]) splitter |= (1u << v);
                for (size_t ci = 0; ci < p.size(); ++ci) {
                    if (p[ci].size() <= 1) continue;
                    std::map<int, std::vector<int>> buckets;
                    for (int v : p[ci])
                        buckets[__builtin_popcount(adj[v] & splitter)].push_back(v);
                    if (buckets.size() > 1) {
                        Partition repl;
                        for (auto& [cnt, vs] : buckets) repl.push_back(vs);
                        p.erase(p.begin() + ci);
                        p.insert(p.begin() + ci, repl.begin(), repl.end());
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }

    std::vector<std::pair<int, int>> encode(const std::vector<int>& pos) const {
        std::vector<std::pair<int, int>> enc;
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (adj[v] & (1u << w)) {
                    int a = pos[v], b = pos[w];
                    enc.emplace_back(std::min(a, b), std::max(a, b));
                }
        std::sort(enc.begin(), enc.end());
        return enc;
    }

    void search(Partition p) {
        refine(p);
        size_t target = p.size();
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) { target = i; break; }
        if (target == p.size()) {
            std::vector<int> pos(n);
            int idx = 0;
            for (auto& cell : p) pos[cell[0]] = idx++;
            auto enc = encode(pos);
            if (!have_best || enc < best_edges) {
                best_edges = enc;
                best_perm = pos;
                have_best = true;
                if (auts) { auts->clear(); auts->push_back(pos); }
            } else if (auts && enc == best_edges) {
                auts->push_back(pos);
            }
            return;
        }
        for (int v : p[target]) {
            Partition q;
            q.reserve(p.size() + 1);
            for (size_t i = 0; i < target; ++i) q.push_back(p[i]);
            q.push_back({v});
            std::vector<int> rest;
            for (int w : p[target])
                if (w != v) rest.push_back(w);
            q.push_back(rest);
            for (size_t i = target + 1; i < p.size(); ++i) q.push_back(p[i]);
            search(std::move(q));
        }
    }

    void run(const Graph& g, std::vector<std::vector<int>>* collect_auts) {
        n = (int)g.vertices.size();
        if (n > 31) throw std::invalid_argument("canonical_form: too many vertices");
        adj.assign(n, 0);
        std::map<int, int> index;
        for (int i = 0; i < n; ++i) index[g.vertices[i]] = i;
        for (auto& e : g.edges) {
            int a = index[e.first], b = index[e.second];
            adj[a] |= (1u << b);
            adj[b] |= (1u << a);
        }
        auts = collect_auts;
        Partition p;
        if (n > 0) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            p.push_back(all);
        }
        have_best = false;
        if (n > 0) search(p);
        else { best_edges.clear(); best_perm.clear(); have_best = true; }
    }
};

} // namespace

CanonicalCertificate canonical_form(const Graph& g) {
    CanonSearch cs;
    cs.run(g, nullptr);
    CanonicalCertificate cert;
    cert.n = (int)g.vertices.size();
    cert.edges = cs.best_edges;
    return cert;
}

std::vector<int> canonical_labeling(const Graph& g) {
    CanonSearch cs;
    cs.run(g, nullptr);
    return cs.best_perm;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    CanonSearch cs;
    std::vector<std::vector<int>> auts;
    cs.run(g, &auts);
    // Collected perms all map onto the same canonical labeling; compose the
    // first with the inverse of each to get automorphisms in position space.
    std::vector<std::vector<int>> out;
    if (auts.empty()) return out;
    int n = (int)auts[0].size();
    const auto& base = auts[0];
    std::vector<int> inv_base(n);
    for (int i = 0; i < n; ++i) inv_base[base[i]] = i;
    for (auto& a : auts) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = inv_base[a[i]];
        out.push_back(perm);
    }
    return out;
}

std::string CanonicalCertificate::to_string() const {
    std::ostringstream os;
    os << n << ":";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ",";
        os << edges[i].first << "-" << edges[i].second;
    }
    return os.str();
}

CanonicalCertificate CanonicalCertificate::parse(const std::string& s) {
    CanonicalCertificate c;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad certificate");
    c.n = std::stoi(s.substr(0, colon));
    std::string rest = s.substr(colon + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad certificate edge");
        c.edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Family closure.

namespace {

std::string family_prefix(const std::string& root_name, int depth, bool delta_only) {
    if (depth == 0) return "";
    if (!delta_only) return "X";
    if (depth == 1) return root_name == "K6" ? "Q" : "H";
    return root_name == "K6" ? "P" : "F";
}

} // namespace

std::vector<FamilyMember> family_closure(const Graph& root, bool allow_ydelta,
                                         const std::string& root_name) {
    root.check_invariants();
    std::vector<FamilyMember> members;
    std::set<CanonicalCertificate> seen;
    std::vector<int> depth_of; // delta-y depth used for naming

    auto push = [&](Graph g, std::vector<ExchangeStep> witness, bool delta_only,
                    int depth) -> bool {
        auto cert = canonical_form(g);
        if (seen.count(cert)) return false;
        seen.insert(cert);
        FamilyMember m;
        m.graph = std::move(g);
        m.cert = cert;
        m.witness = std::move(witness);
        m.delta_only = delta_only;
        members.push_back(std::move(m));
        depth_of.push_back(depth);
        return true;
    };

    push(root, {}, true, 0);

    // Phase 1: delta-y only, breadth first. Witnesses stay pure delta-y.
    for (size_t i = 0; i < members.size(); ++i) {
        const Graph g = members[i].graph; // copy: members may reallocate
        auto wit = members[i].witness;
        int d = depth_of[i];
        for (auto& site : triangle_sites(g)) {
            auto next = delta_y(g, site);
            auto w = wit;
            w.push_back(ExchangeStep{true, site, {}});
            push(std::move(next), std::move(w), true, d + 1);
        }
    }

    if (allow_ydelta) {
        // Phase 2: both operations from everything found so far.
        for (size_t i = 0; i < members.size(); ++i) {
            const Graph g = members[i].graph;
            auto wit = members[i].witness;
            int d = depth_of[i];
            for (auto& site : triangle_sites(g)) {
                auto next = delta_y(g, site);
                auto w = wit;
                w.push_back(ExchangeStep{true, site, {}});
                push(std::move(next), std::move(w), false, d + 1);
            }
            for (auto& site : wye_sites(g)) {
                if (g.has_edge(site.u, site.v) || g.has_edge(site.v, site.w) ||
                    g.has_edge(site.w, site.u))
                    continue;
                auto next = y_delta(g, site);
                auto w = wit;
                w.push_back(ExchangeStep{false, {}, site});
                push(std::move(next), std::move(w), false, d);
            }
        }
    }

    // Names: root keeps its name; one-step members get Q7/H8; deeper delta-y
    // members P<n>/F<n>; members needing y-delta get X<n>. Letter suffixes
    // disambiguate members sharing a prefix and order, by discovery order.
    std::map<std::string, int> used;
    for (size_t i = 0; i < members.size(); ++i) {
        auto& m = members[i];
        int nv = (int)m.graph.vertices.size();
        std::string base;
        if (i == 0) {
            base = root_name;
        } else {
            base = family_prefix(root_name, depth_of[i], m.delta_only) + std::to_string(nv);
        }
        int k = used[base]++;
        m.name = base;
        if (k > 0) m.name += (char)('a' + k);
    }
    return members;
}

// ---------------------------------------------------------------------------
// Text format.

std::string write_graph_text(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " " << g.vertices.size() << "\n";
    for (auto& e : g.edges) os << e.first << " " << e.second << "\n";
    return os.str();
}

Graph parse_graph_text(const std::string& text, std::string* name) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "graph") throw std::invalid_argument("graph file: bad header");
    std::string gname;
    size_t nv;
    if (!(is >> gname >> nv)) throw std::invalid_argument("graph file: bad header");
    if (name) *name = gname;
    std::vector<std::pair<int, int>> edges;
    std::set<int> verts;
    int u, v;
    while (is >> u >> v) {
        edges.emplace_back(u, v);
        verts.insert(u);
        verts.insert(v);
    }
    // Isolated vertices are permitted by padding labels 0..nv-1 when the edge
    // list does not mention them all.
    std::vector<int> vlist(verts.begin(), verts.end());
    if (vlist.size() < nv) {
        int next = 0;
        while (vlist.size() < nv) {
            if (!verts.count(next)) {
                vlist.push_back(next);
                verts.insert(next);
            }
            ++next;
        }
    }
    auto g = make_graph(vlist, edges);
    if (g.vertices.size() != nv) throw std::invalid_argument("graph file: vertex count mismatch");
    return g;
}

} // namespace deltay
