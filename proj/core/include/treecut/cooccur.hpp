#pragma once

// Co-occurrence ingestion: (head, slot, value) triples and the per-(head,
// slot) frequency tables derived from them, mapped onto thesaurus nodes.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecut/thesaurus.hpp"

namespace treecut {

struct Triple {
    std::string head;
    std::string slot;
    std::string value;
    double count = 1.0;  // > 0
};

// Triples file: TSV `head<TAB>slot<TAB>value[<TAB>count]`, `#` comments,
// blank lines ignored. Count defaults to 1; a zero count is treated like an
// absent line; negative or non-numeric counts are rejected.
std::vector<Triple> parse_triples(std::string_view text);

// Frequency data for one (head, slot) pair: the sample S and f(.) over the
// observed slot values.
struct SlotSample {
    std::string head;
    std::string slot;
    std::map<std::string, double> freq;  // value word -> summed count
    double total = 0.0;                  // |S|
};

SlotSample slot_sample(std::span<const Triple> triples, std::string_view head,
                       std::string_view slot);

// Frequencies spread over thesaurus nodes. by_node is aggregated: an internal
// node's entry equals its directly assigned mass plus the sum over its
// children, so by_node[c] is f(C) for every class C.
struct NodeFrequencies {
    std::vector<double> by_node;  // indexed by node id
    double total = 0.0;           // = by_node[root] = sample total - dropped
    double dropped = 0.0;         // sample mass on words absent from the thesaurus
};

// Splits each word's frequency equally among all nodes carrying it, then
// aggregates bottom-up. Words not in the thesaurus contribute to `dropped`.
NodeFrequencies assign_frequencies(const SlotSample& s, const Thesaurus& t);

}  // namespace treecut
