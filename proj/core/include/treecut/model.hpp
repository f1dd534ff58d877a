#pragma once

// Tree cut models and MDL model selection.
//
// A tree cut model is a cut paired with a probability parameter vector; each
// class's probability is spread uniformly over the member-word attachments it
// dominates, which smoothes unseen words. Model selection minimizes the
// two-part code length L = L_mod + L_par + L_dat in bits (base-2 logs
// throughout). Two parameter-length conventions coexist: reports use the
// free-parameter form (K-1 parameters for a K-node cut) while the recursive
// search uses the node-count form; they differ by the constant log2(|S|)/2,
// so both select the same cut.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecut/cooccur.hpp"
#include "treecut/thesaurus.hpp"

namespace treecut {

struct TreeCutModel {
    Cut cut;
    std::vector<double> params;  // aligned with cut.nodes, each in [0,1]
    double sample_total = 0.0;   // |S| used for parameter description lengths
};

struct LengthReport {
    double model_len = 0.0;  // L_mod, bits
    double param_len = 0.0;  // L_par, bits (free-parameter convention)
    double data_len = 0.0;   // L_dat, bits
    double l_prime = 0.0;    // L' = L_par + L_dat
    double total = 0.0;      // L = L_mod + L_par + L_dat
};

struct ModelLength {
    double bits = 0.0;
    bool approximate = false;  // cut count overflowed; bits from log-space sums
};

// Maximum-likelihood parameters for a fixed cut: params[i] =
// nf.by_node[cut.nodes[i]] / nf.total. Throws EmptySampleError on zero-total
// frequencies, std::invalid_argument when the cut nodes overlap.
TreeCutModel mle_estimate(const Thesaurus& t, const Cut& cut, const NodeFrequencies& nf);

// P(word) under the model: each attachment of the word that lies under a cut
// class C contributes params[C] / |C|, where |C| counts the member-word
// attachments dominated by C. Throws std::invalid_argument when no attachment
// of the word is covered by the cut.
double word_prob(const TreeCutModel& m, const Thesaurus& t, std::string_view word);

// Like word_prob but returns 0 for uncovered or unknown words.
double word_prob_or_zero(const TreeCutModel& m, const Thesaurus& t, std::string_view word);

// L_dat = -sum over sample words of f(n) * log2 P(n). Words with f(n) = 0
// contribute nothing; a positive-frequency word with zero model probability
// makes the whole length +infinity.
double data_len(const TreeCutModel& m, const SlotSample& s, const Thesaurus& t);

// (K/2) * log2 |S| with K = |cut| - 1 free parameters (reporting convention).
double param_len_free(const Cut& cut, double sample_total);

// (|cut|/2) * log2 |S|, the node-count convention used inside the search.
double param_len_nodes(const Cut& cut, double sample_total);

// L_mod = log2 of the number of cuts of the tree; identical for every cut.
ModelLength model_len(const Thesaurus& t);

// Assembles all description lengths for `cut` on the (head, slot) sample.
// l_prime uses the free-parameter convention.
LengthReport describe(const Thesaurus& t, const Cut& cut, const SlotSample& s);

// The minimum-L' cut of the subtree rooted at `id`, found bottom-up: a
// node's collapsed cut [node] replaces its children's combined optimal cuts
// only when strictly shorter, so ties keep the finer cut. sample_total is
// the |S| entering the parameter cost; probabilities are normalized by
// nf.total. Runs in one postorder pass, O(nodes) after frequency assignment.
Cut find_mdl(const Thesaurus& t, NodeId id, const NodeFrequencies& nf, double sample_total);

// Exhaustive oracle: minimizes param_len_nodes + data_len over
// enumerate_cuts. Ties prefer the cut with more nodes, then enumeration
// order, mirroring find_mdl. Independent of the find_mdl code path.
Cut find_mdl_brute(const Thesaurus& t, const SlotSample& s, std::uint64_t enum_limit);

struct GeneralizationEntry {
    NodeId node = kNoNode;
    std::string label;
    double probability = 0.0;
    std::vector<std::string> examples;  // observed words, highest frequency first
};

struct GeneralizationResult {
    std::vector<GeneralizationEntry> entries;  // descending probability
    double threshold = 0.0;
    double sample_total = 0.0;
    double dropped_mass = 0.0;
};

// Full generalization pipeline for one (head, slot): slot_sample ->
// assign_frequencies -> find_mdl -> mle_estimate, discarding classes below
// `threshold` and attaching up to `max_examples` observed example words per
// class. Throws EmptySampleError when nothing usable was observed.
GeneralizationResult generalize(const Thesaurus& t, std::span<const Triple> triples,
                                std::string_view head, std::string_view slot,
                                double threshold = 0.05, std::size_t max_examples = 3);

}  // namespace treecut
