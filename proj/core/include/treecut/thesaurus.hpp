#pragma once

// Thesaurus trees: immutable word taxonomies used as prior knowledge for
// class-based generalization.
//
// A thesaurus is a rooted tree whose internal nodes are word classes and
// whose leaves carry member words. The sense-annotated form also allows
// internal nodes to carry direct member words; a word string may be attached
// to several nodes (the tree stand-in for DAG-shaped taxonomies). A *cut* is
// any set of nodes whose dominated leaves partition the leaf set of the
// subtree it belongs to; cuts are the discrete part of a tree cut model.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "treecut/errors.hpp"

namespace treecut {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct ThesaurusNode {
    NodeId id = kNoNode;
    std::string label;
    std::vector<std::string> members;  // direct member words, file order, deduped
    std::vector<NodeId> children;      // left-to-right
    NodeId parent = kNoNode;

    // derived, filled in by Thesaurus construction
    std::uint32_t depth = 0;
    std::uint32_t preorder = 0;      // left-to-right DFS position
    std::uint32_t subtree_size = 0;  // nodes in subtree, including self
    std::uint32_t word_count = 0;    // member attachments in subtree (|C|)
    std::uint32_t leaf_count = 0;    // leaves in subtree

    bool is_leaf() const { return children.empty(); }
};

// Tree description used to construct a Thesaurus programmatically. Ids are
// arbitrary handles here; construction validates them and renumbers nodes
// into dense preorder ids.
struct NodeSpec {
    NodeId id = kNoNode;
    std::string label;
    std::vector<std::string> members;
    std::vector<NodeId> children;
};

class Thesaurus {
public:
    // Validates the description (unique ids, single root, exactly one parent
    // per non-root node, acyclic, every leaf carries at least one member) and
    // builds the canonical arena. Throws ParseError on violations.
    static Thesaurus build(const std::vector<NodeSpec>& specs);

    const ThesaurusNode& node(NodeId id) const { return nodes_[id]; }
    const ThesaurusNode& root() const { return nodes_[0]; }
    std::size_t size() const { return nodes_.size(); }

    // Nodes carrying `word` as a direct member (ascending id order); empty
    // when the word is not in the thesaurus.
    const std::vector<NodeId>& nodes_with_word(std::string_view word) const;
    bool contains_word(std::string_view word) const;

    const std::unordered_map<std::string, std::vector<NodeId>>& word_index() const {
        return word_index_;
    }

    // True when `n` lies in the subtree rooted at `ancestor` (self counts).
    bool in_subtree(NodeId ancestor, NodeId n) const {
        const ThesaurusNode& a = nodes_[ancestor];
        std::uint32_t p = nodes_[n].preorder;
        return p >= a.preorder && p < a.preorder + a.subtree_size;
    }

    // Node ids of the subtree rooted at `id`, children before parents.
    std::vector<NodeId> postorder(NodeId id) const;

private:
    Thesaurus() = default;

    std::vector<ThesaurusNode> nodes_;  // index == id, preorder-dense, root at 0
    std::unordered_map<std::string, std::vector<NodeId>> word_index_;
};

// A cut: node ids in left-to-right tree order. The dominated leaf sets of the
// nodes are pairwise disjoint and cover the leaves of the owning subtree.
struct Cut {
    std::vector<NodeId> nodes;

    bool operator==(const Cut&) const = default;
};

// Checks the partition invariant of `cut` against the subtree rooted at
// `subtree_root`: containment, pairwise disjointness, exact leaf cover.
bool cut_partitions(const Thesaurus& t, NodeId subtree_root, const Cut& cut);

// Renders a cut as "[label,label,...]" for reports.
std::string cut_to_string(const Thesaurus& t, const Cut& cut);

// Number of cuts of a subtree. Exceeds any machine word for bushy trees, so
// the exact value saturates with a flag while log2 is always maintained.
struct CutCount {
    std::uint64_t value = 0;  // saturated at uint64 max once overflowed
    bool overflowed = false;
    double log2_count = 0.0;

    bool exceeds(std::uint64_t limit) const { return overflowed || value > limit; }
};

// Signals that a subtree has more cuts than the caller's enumeration limit.
class EnumLimitError : public std::runtime_error {
public:
    EnumLimitError(const std::string& what, CutCount count)
        : std::runtime_error(what), count(count) {}
    CutCount count;
};

// Thesaurus file format (UTF-8, line oriented): depth by leading tab count,
// each line `label[: w1,w2,...]`. A childless line is a leaf whose member
// list defaults to its label. Blank lines and `#` comments are ignored.
Thesaurus parse_thesaurus(std::string_view text);

// Inverse of parse_thesaurus; parse(to_text(t)) reproduces t.
std::string to_text(const Thesaurus& t);

// Leaves count as 1; an internal node counts 1 plus the product over its
// children's counts.
CutCount count_cuts(const Thesaurus& t, NodeId id);

// Every cut of the subtree at `id`, each exactly once: the collapsed cut
// [id] first, then the child-cut combinations with the rightmost child
// varying fastest. Throws EnumLimitError when count_cuts exceeds `limit`.
std::vector<Cut> enumerate_cuts(const Thesaurus& t, NodeId id, std::uint64_t limit);

// Removes the children of every node that directly carries a word in
// `observed` (the node itself stays and becomes a leaf). Top-down: a
// qualifying ancestor discards qualifying descendants along with the rest
// of its subtree. Idempotent.
Thesaurus prune_observed_subtrees(const Thesaurus& t,
                                  const std::unordered_set<std::string>& observed);

}  // namespace treecut
