#pragma once

// Baseline association measures: selectional association over thesaurus
// classes (argmax over a noun's ancestor classes) and plain lexical
// association P(prep|head), both gated by a two-proportion t-score.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "treecut/cooccur.hpp"
#include "treecut/thesaurus.hpp"

namespace treecut {

// A(v,s,C) = P(C|v,s) * log2(P(C|v,s) / P(C)); 0 when P(C|v,s) = 0.
// Throws std::invalid_argument when P(C) = 0 with P(C|v,s) > 0.
double selectional_association(double p_c_given_vs, double p_c);

// Two-proportion t statistic with per-sample binomial variance. Returns 0
// when either sample is empty or the proportions are equal; +-infinity when
// the variance vanishes with distinct proportions.
double t_score(double p1, double n1, double p2, double n2);

// Scope of the marginal P(C) in the association ratio.
enum class MarginalScope {
    SlotPooled,  // all triples sharing the slot name, pooled over heads
    Global,      // all triples regardless of slot
};

struct AssociationScore {
    std::string class_or_word;
    double score = 0.0;
    double support = 0.0;  // size of the (head, slot) sample behind the score
};

// The maximizing ancestor class of one noun for one (head, slot) sample.
struct SaBest {
    NodeId node = kNoNode;
    std::string label;
    double score = 0.0;
    double proportion = 0.0;  // P(C|head, slot) of the winning class
    double trials = 0.0;      // (head, slot) sample total
};

// Precomputed count tables for selectional association over a triple corpus.
class SaTable {
public:
    SaTable(const Thesaurus& t, std::span<const Triple> triples,
            MarginalScope scope = MarginalScope::SlotPooled);

    // Maximizes A(head, slot, C) over the ancestor classes of `noun` (its own
    // nodes included). Equal scores resolve to the most specific class,
    // deepest first then leftmost. nullopt when `noun` is not in the
    // thesaurus; a missing (head, slot) sample yields a zero-score result
    // with trials = 0.
    std::optional<SaBest> best(std::string_view head, std::string_view slot,
                               std::string_view noun) const;

    const Thesaurus& thesaurus() const { return t_; }

private:
    const NodeFrequencies* marginal_for(std::string_view slot) const;

    const Thesaurus& t_;
    MarginalScope scope_;
    std::unordered_map<std::string, NodeFrequencies> conditional_;  // "head\tslot"
    std::unordered_map<std::string, NodeFrequencies> marginal_;     // slot (or "" global)
};

// One-shot wrapper over SaTable::best. Throws std::invalid_argument when the
// noun is not in the thesaurus.
AssociationScore sa_generalize(const Thesaurus& t, std::span<const Triple> triples,
                               std::string_view noun, std::string_view head,
                               std::string_view slot,
                               MarginalScope scope = MarginalScope::SlotPooled);

struct LexicalAssociation {
    double probability = 0.0;  // P(prep | head)
    double support = 0.0;      // total count of the head
};

// Head/preposition count tables for lexical association.
class LexicalCounts {
public:
    explicit LexicalCounts(std::span<const Triple> triples);

    LexicalAssociation prep_given_head(std::string_view head, std::string_view prep) const;

private:
    std::unordered_map<std::string, double> head_total_;
    std::unordered_map<std::string, double> head_prep_;  // "head\tprep"
};

// P(prep|head) = count(head with prep slot) / count(head), support =
// count(head). An unseen head yields (0, 0).
LexicalAssociation lexical_association(std::span<const Triple> triples,
                                       std::string_view prep, std::string_view head);

}  // namespace treecut
