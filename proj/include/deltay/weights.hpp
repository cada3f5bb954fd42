#ifndef DELTAY_WEIGHTS_HPP
#define DELTAY_WEIGHTS_HPP

#include <map>
#include <string>
#include <vector>

#include "deltay/cycles.hpp"
#include "deltay/graph.hpp"

namespace deltay {

// Which sum identity a weight map belongs to. K6-kind tables satisfy
//   2 * sum w(c) a2  =  sum lk^2 - 1       (and w == 1 on all 2-links),
// K7-kind tables satisfy
//   sum w(c) a2      =  2 * sum w(c) lk^2 - 21.
enum class IdentityKind { K6, K7 };

const char* kind_name(IdentityKind k);
IdentityKind parse_kind(const std::string& s);

// Sparse integer weights on the cycle set of a host graph; absent keys are 0.
struct WeightMap {
    Graph host;
    std::string host_name;
    IdentityKind kind = IdentityKind::K6;
    long long constant = 0; // -1 for K6-kind, -21 for K7-kind
    std::map<std::string, long long> values; // canonical element key -> weight

    long long at(const CycleSetElement& e) const;
    long long at_key(const std::string& key) const;
    void set(const CycleSetElement& e, long long w); // drops zeros
};

WeightMap base_weights_k6();
WeightMap base_weights_k7();

// Pushforward through one delta-y exchange: the weight of every element of
// the exchanged graph is the sum of the weights of its preimages.
WeightMap pushforward(const WeightMap& w, const TriangleSite& site,
                      const std::string& new_host_name = "");

// Replay a delta-y sequence from K6 or K7 and push the base table through it.
WeightMap derive_weights(IdentityKind root, const std::vector<TriangleSite>& sequence,
                         const std::string& host_name = "");

// Cycles of the host whose weight is odd. Only defined for K7-kind tables.
std::vector<Cycle> arf_support(const WeightMap& w);

// True when some isomorphism of the hosts carries one table onto the other.
bool tables_agree_up_to_isomorphism(const WeightMap& a, const WeightMap& b);

// Weight-table file: header lines carrying host name, identity kind and
// constant, then "element-key <TAB> weight" lines.
std::string write_weights_text(const WeightMap& w);
WeightMap parse_weights_text(const std::string& text, const Graph* host_hint = nullptr);

} // namespace deltay

#endif
