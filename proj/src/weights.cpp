#include "deltay/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deltay {

const char* kind_name(IdentityKind k) {
    return k == IdentityKind::K6 ? "K6" : "K7";
}

IdentityKind parse_kind(const std::string& s) {
    if (s == "K6") return IdentityKind::K6;
    if (s == "K7") return IdentityKind::K7;
    throw std::invalid_argument("unknown identity kind: " + s);
}

long long WeightMap::at(const CycleSetElement& e) const { return at_key(e.key()); }

long long WeightMap::at_key(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? 0 : it->second;
}

void WeightMap::set(const CycleSetElement& e, long long w) {
    if (w == 0) values.erase(e.key());
    else values[e.key()] = w;
}

WeightMap base_weights_k6() {
    WeightMap w;
    w.host = complete_graph(6);
    w.host_name = "K6";
    w.kind = IdentityKind::K6;
    w.constant = -1;
    for (auto& c : enumerate_cycles(w.host)) {
        if (c.length() == 6) w.set(CycleSetElement::knot(c), 1);
        else if (c.length() == 5) w.set(CycleSetElement::knot(c), -1);
    }
    for (auto& p : enumerate_disjoint_pairs(w.host)) w.set(p, 1);
    return w;
}

WeightMap base_weights_k7() {
    WeightMap w;
    w.host = complete_graph(7);
    w.host_name = "K7";
    w.kind = IdentityKind::K7;
    w.constant = -21;
    for (auto& c : enumerate_cycles(w.host)) {
        if (c.length() == 7) w.set(CycleSetElement::knot(c), 7);
        else if (c.length() == 6) w.set(CycleSetElement::knot(c), -6);
        else if (c.length() == 5) w.set(CycleSetElement::knot(c), -2);
    }
    for (auto& p : enumerate_disjoint_pairs(w.host)) {
        int a = (int)p.components[0].length(), b = (int)p.components[1].length();
        if ((a == 3 && b == 4) || (a == 4 && b == 3)) w.set(p, 1);
    }
    return w;
}

WeightMap pushforward(const WeightMap& w, const TriangleSite& site,
                      const std::string& new_host_name) {
    auto s = site.normalized();
    if (!w.host.has_edge(s.u, s.v) || !w.host.has_edge(s.v, s.w) || !w.host.has_edge(s.w, s.u))
        throw std::invalid_argument("pushforward: site is not a triangle of the host");
    WeightMap out;
    out.host = delta_y(w.host, site);
    out.host_name = new_host_name.empty() ? w.host_name + "+dy" : new_host_name;
    out.kind = w.kind;
    out.constant = w.constant;
    for (auto& gamma : enumerate_gamma_bar(out.host)) {
        long long sum = 0;
        for (auto& pre : phi_preimage(w.host, site, gamma)) sum += w.at(pre);
        out.set(gamma, sum);
    }
    return out;
}

WeightMap derive_weights(IdentityKind root, const std::vector<TriangleSite>& sequence,
                         const std::string& host_name) {
    WeightMap w = root == IdentityKind::K6 ? base_weights_k6() : base_weights_k7();
    for (size_t i = 0; i < sequence.size(); ++i) {
        auto s = sequence[i].normalized();
        if (!w.host.has_edge(s.u, s.v) || !w.host.has_edge(s.v, s.w) ||
            !w.host.has_edge(s.w, s.u)) {
            std::ostringstream os;
            os << "derive_weights: step " << i + 1 << " (" << s.u << "-" << s.v << "-" << s.w
               << ") is not a triangle of the current graph";
            throw std::invalid_argument(os.str());
        }
        w = pushforward(w, sequence[i]);
    }
    if (!host_name.empty()) w.host_name = host_name;
    return w;
}

std::vector<Cycle> arf_support(const WeightMap& w) {
    if (w.kind != IdentityKind::K7)
        throw std::invalid_argument("arf_support: requires a K7-kind weight map");
    std::vector<Cycle> out;
    for (auto& c : enumerate_cycles(w.host))
        if (w.at(CycleSetElement::knot(c)) % 2 != 0) out.push_back(c);
    return out;
}

namespace {

// Apply a vertex relabeling (by position) to an element key.
CycleSetElement relabel(const CycleSetElement& e, const Graph& from, const Graph& to,
                        const std::vector<int>& pos_map) {
    std::vector<Cycle> comps;
    for (auto& c : e.components) {
        std::vector<int> seq;
        for (int v : c.verts) {
            auto it = std::lower_bound(from.vertices.begin(), from.vertices.end(), v);
            int pos = (int)(it - from.vertices.begin());
            seq.push_back(to.vertices[pos_map[pos]]);
        }
        comps.push_back(Cycle::from_sequence(seq));
    }
    return CycleSetElement::make(std::move(comps));
}

} // namespace

bool tables_agree_up_to_isomorphism(const WeightMap& a, const WeightMap& b) {
    if (a.kind != b.kind || a.constant != b.constant) return false;
    auto ca = canonical_form(a.host), cb = canonical_form(b.host);
    if (!(ca == cb)) return false;
    // Isomorphisms a.host -> b.host: sigma_b^{-1} . alpha . sigma_a over
    // automorphisms alpha collected in canonical position space.
    auto pa = canonical_labeling(a.host);
    auto pb = canonical_labeling(b.host);
    int n = (int)pa.size();
    std::vector<int> inv_pb(n);
    for (int i = 0; i < n; ++i) inv_pb[pb[i]] = i;

    auto elems = enumerate_gamma_bar(a.host);
    for (auto& aut : automorphisms(a.host)) {
        // map position i of a.host to position of b.host
        std::vector<int> pos_map(n);
        for (int i = 0; i < n; ++i) pos_map[i] = inv_pb[pa[aut[i]]];
        bool ok = true;
        for (auto& e : elems) {
            if (a.at(e) != b.at(relabel(e, a.host, b.host, pos_map))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::string write_weights_text(const WeightMap& w) {
    std::ostringstream os;
    os << "weights " << w.host_name << " kind=" << kind_name(w.kind) << " c=" << w.constant
       << "\n";
    os << "hostgraph " << w.host.vertices.size();
    for (auto& e : w.host.edges) os << " " << e.first << "-" << e.second;
    os << "\n";
    for (auto& [key, val] : w.values) os << key << "\t" << val << "\n";
    return os.str();
}

WeightMap parse_weights_text(const std::string& text, const Graph* host_hint) {
    WeightMap w;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("weights file: empty");
    {
        std::istringstream hs(line);
        std::string word, kind, c;
        if (!(hs >> word >> w.host_name >> kind >> c) || word != "weights")
            throw std::invalid_argument("weights file: bad header");
        if (kind.rfind("kind=", 0) != 0 || c.rfind("c=", 0) != 0)
            throw std::invalid_argument("weights file: bad header fields");
        w.kind = parse_kind(kind.substr(5));
        w.constant = std::stoll(c.substr(2));
    }
    if (!std::getline(is, line)) throw std::invalid_argument("weights file: missing host graph");
    {
        std::istringstream hs(line);
        std::string word;
        size_t nv;
        if (!(hs >> word >> nv) || word != "hostgraph")
            throw std::invalid_argument("weights file: bad host graph line");
        std::vector<std::pair<int, int>> edges;
        std::set<int> verts;
        std::string tok;
        while (hs >> tok) {
            auto dash = tok.find('-');
            int u = std::stoi(tok.substr(0, dash)), v = std::stoi(tok.substr(dash + 1));
            edges.emplace_back(u, v);
            verts.insert(u);
            verts.insert(v);
        }
        std::vector<int> vlist(verts.begin(), verts.end());
        w.host = make_graph(vlist, edges);
        if (w.host.vertices.size() != nv)
            throw std::invalid_argument("weights file: vertex count mismatch");
    }
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::invalid_argument("weights file: bad entry line");
        auto elem = parse_element_key(line.substr(0, tab));
        long long val = std::stoll(line.substr(tab + 1));
        if (!is_element_of(w.host, elem))
            throw std::invalid_argument("weights file: key is not a cycle set of the host");
        w.set(elem, val);
    }
    if (host_hint && !(w.host == *host_hint))
        throw std::invalid_argument("weights file: host mismatch");
    return w;
}

} // namespace deltay
