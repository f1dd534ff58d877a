#pragma once

#include <stdexcept>

namespace treecut {

// Malformed input: bad TSV rows, bad thesaurus indentation, invalid tree
// descriptions (duplicate ids, multiple roots, memberless leaves).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A (head, slot) sample with no usable frequency mass.
class EmptySampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace treecut
