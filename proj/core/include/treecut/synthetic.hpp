#pragma once

// Deterministic synthetic corpora with planted tree cut distributions, used
// to exercise the disambiguation strategies end to end without external
// resources.

#include <cstdint>
#include <vector>

#include "treecut/cooccur.hpp"
#include "treecut/disambig.hpp"
#include "treecut/thesaurus.hpp"

namespace treecut {

struct SynthSpec {
    std::uint32_t branching = 4;  // children per internal node (>= 2)
    std::uint32_t depth = 2;      // levels below the root (>= 1)
    std::uint32_t n_verbs = 8;
    std::uint32_t n_preps = 2;
    std::uint32_t train_size = 2000;
    std::uint32_t test_size = 200;
    double verb_attach_prob = 0.5;
    // Fraction of leaves withheld from the training noun1 pool; test noun1
    // draws from all leaves, so some test heads are unseen in training.
    double unseen_noun1_fraction = 0.2;
    std::uint64_t seed = 1;
};

struct SynthCorpus {
    Thesaurus thesaurus;
    std::vector<Triple> training;    // heads tagged verb:/noun:
    std::vector<PPInstance> test;
};

// Builds a complete `branching`-ary thesaurus of the given depth, plants a
// sparse tree cut distribution per (verb, prep) and per (top-level class,
// prep), and samples attachment-labeled training triples and test instances
// from them. Byte-identical output for identical specs. Throws
// std::invalid_argument on invalid shape or probability parameters.
SynthCorpus generate_synthetic(const SynthSpec& spec);

}  // namespace treecut
