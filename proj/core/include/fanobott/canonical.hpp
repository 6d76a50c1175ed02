#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fanobott/forest.hpp"

namespace fanobott {

// Canonical encoding of a signed rooted forest under a relation.
//
// The word is an AHU-style bracket sequence: a vertex encodes to
//   [ kOpen, (sign child-word)..., kClose ]
// with the child segments sorted lexicographically, and the forest encodes to
//   [ n, sorted tree words... ].
// Signs are kSignPlus / kSignMinus; edges whose sign the relation ignores
// (root-incident edges under approx) carry kSignErased. Under sim and approx
// each vertex's child list is replaced by the lexicographic minimum of the
// list as-is and the list with every child sign flipped, which quotients by
// the r_i operations.
//
// Two forests have equal codes under a relation iff they are equivalent under
// that relation.
struct CanonicalCode {
    static constexpr std::int32_t kOpen = -1;
    static constexpr std::int32_t kClose = -2;
    static constexpr std::int32_t kSignErased = 0;
    static constexpr std::int32_t kSignPlus = 1;
    static constexpr std::int32_t kSignMinus = 2;

    Relation relation = Relation::iso;
    std::vector<std::int32_t> word;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    // Total order: by word, then relation tag.
    friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.relation <=> b.relation;
    }
};

CanonicalCode canonical_code(const SignedForest& f, Relation rel);

// True iff the two forests are rel-equivalent. Throws SizeMismatch when the
// vertex counts differ.
bool are_equivalent(const SignedForest& f1, const SignedForest& f2, Relation rel);

// Reconstructs the canonical representative from a code: trees in code order,
// vertices labeled by preorder DFS, erased signs materialized as plus. The
// result's canonical code equals the input.
SignedForest decode_forest(const CanonicalCode& code);

}  // namespace fanobott
