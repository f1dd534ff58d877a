#pragma once

// PP-attachment disambiguation: decision strategies over trained models,
// strategy chaining, and coverage/accuracy evaluation.
//
// Training triples tag their head column with `verb:` / `noun:` so each
// training PP contributes exactly one (head, prep, noun2) observation to the
// correct attachment site.

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treecut/assoc.hpp"
#include "treecut/cooccur.hpp"
#include "treecut/model.hpp"
#include "treecut/thesaurus.hpp"

namespace treecut {

inline constexpr std::string_view kVerbTag = "verb:";
inline constexpr std::string_view kNounTag = "noun:";

inline std::string tag_verb(std::string_view w) { return std::string(kVerbTag) + std::string(w); }
inline std::string tag_noun(std::string_view w) { return std::string(kNounTag) + std::string(w); }

enum class Attachment { Verb, Noun, Unknown };
enum class Verdict { Verb, Noun, Undecided };

struct PPInstance {
    std::string verb;
    std::string noun1;
    std::string prep;
    std::string noun2;
    Attachment gold = Attachment::Unknown;
};

// PP test file: TSV `verb<TAB>noun1<TAB>prep<TAB>noun2<TAB>gold(v|n)`.
std::vector<PPInstance> parse_pp_instances(std::string_view text);

struct Decision {
    Verdict verdict = Verdict::Undecided;
    std::string strategy;     // strategy that produced the verdict
    double verb_score = 0.0;  // evidence pair, kept for audit (also when undecided)
    double noun_score = 0.0;
};

// Tree cut models per (tagged head, prep), trained from attachment-tagged
// triples. Pairs whose sample carries less than unit mass get no model.
class AttachmentModels {
public:
    AttachmentModels(const Thesaurus& t, std::span<const Triple> training);

    // P(noun2 | head, prep) under the trained model; 0 when no model exists
    // or the word is outside the model's coverage.
    double probability(std::string_view head, std::string_view prep,
                       std::string_view noun2) const;

    bool has_model(std::string_view head, std::string_view prep) const;
    const Thesaurus& thesaurus() const { return t_; }

private:
    friend class Mdl2Models;

    const Thesaurus& t_;
    std::unordered_map<std::string, TreeCutModel> models_;      // "head\tprep"
    std::unordered_map<std::string, SlotSample> samples_;       // "head\tprep"
    std::unordered_map<std::string, std::vector<std::string>> noun_heads_;  // prep -> untagged heads
};

// Head-generalized variant: when a noun head has no sample of its own, its
// counts are pooled from all trained noun heads under each of its ancestor
// classes, and the most specific ancestor with a non-empty pool supplies the
// model. A noun head that was seen keeps its own model, so this degrades to
// the per-head behavior exactly. Verb heads are never generalized.
class Mdl2Models {
public:
    Mdl2Models(const Thesaurus& t, std::span<const Triple> training);

    double verb_probability(std::string_view verb, std::string_view prep,
                            std::string_view noun2) const;
    double noun_probability(std::string_view noun1, std::string_view prep,
                            std::string_view noun2) const;

private:
    const TreeCutModel* pooled_model(NodeId cls, std::string_view prep) const;

    AttachmentModels base_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, std::unique_ptr<TreeCutModel>> cache_;  // "node\tprep"
};

enum class Strategy { Default, LA, SA, MDL, MDL2, Combined, Combined2 };

// nullopt for unknown names; accepts the CLI spellings
// default|la|sa|mdl|mdl2|combined|combined2.
std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

// Everything the decision functions need, built once per corpus.
struct StrategyContext {
    StrategyContext(const Thesaurus& t, std::span<const Triple> training,
                    double t_threshold = 1.645,
                    MarginalScope scope = MarginalScope::SlotPooled);

    const Thesaurus& thesaurus;
    AttachmentModels mdl;
    Mdl2Models mdl2;
    SaTable sa;
    LexicalCounts la;
    double t_threshold;
};

// Always attaches to noun1.
Decision decide_default(const PPInstance& q);

// Compares P(noun2 | verb, prep) with P(noun2 | noun1, prep); equal values
// (in particular both zero) leave the instance undecided.
Decision decide_mdl(const PPInstance& q, const AttachmentModels& models);

// MDL with head generalization on the noun side.
Decision decide_mdl2(const PPInstance& q, const Mdl2Models& models);

// t-score over the winning-class proportions of the two sides' selectional
// associations; undecided below the significance threshold.
Decision decide_sa(const PPInstance& q, const SaTable& sa, double t_threshold);

// t-score over P(prep|verb) vs P(prep|noun1).
Decision decide_la(const PPInstance& q, const LexicalCounts& la, double t_threshold);

Decision decide(const StrategyContext& ctx, const PPInstance& q, Strategy s);

// First non-undecided verdict wins, labeled with the deciding strategy.
// Throws std::invalid_argument on an empty chain.
Decision decide_chain(const StrategyContext& ctx, const PPInstance& q,
                      std::span<const Strategy> chain);

// The strategy itself for the simple ones, or the documented chain:
// combined = [mdl, la, default], combined2 = [mdl2, la, default].
std::vector<Strategy> strategy_chain(Strategy s);

struct EvalReport {
    std::size_t n_total = 0;
    std::size_t n_decided = 0;
    std::size_t n_correct = 0;
    double coverage = 0.0;  // percent decided
    double accuracy = 0.0;  // percent correct among decided (0 when none decided)
};

// Throws std::invalid_argument when the sequences disagree in length.
EvalReport evaluate(std::span<const Decision> decisions, std::span<const Attachment> gold);

}  // namespace treecut
