#pragma once

#include <cstdint>
#include <vector>

#include "fanobott/errors.hpp"

namespace fanobott {

enum class Sign : std::uint8_t { plus, minus };

inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Relations on signed rooted forests, from coarsest distinction to finest:
//   iso    — plain isomorphism (relabeling only);
//   sim    — orbit of the sign-flip operations r_i (one per vertex);
//   approx — sim, additionally ignoring the signs of root-incident edges.
// sim-equivalent forests classify Fano Bott manifolds up to isomorphism,
// approx-equivalent ones up to diffeomorphism.
enum class Relation { iso, sim, approx };

const char* relation_name(Relation rel);

// A rooted forest on vertices 0..n-1 with a sign on every non-root edge.
//
// parent[v] == kNoParent marks v as a root. sign[v] is the sign of the edge
// {v, parent[v]}; entries at roots are meaningless and kept normalized to
// Sign::plus so that value equality of forests behaves.
struct SignedForest {
    static constexpr int kNoParent = -1;

    std::vector<int> parent;
    std::vector<Sign> sign;

    int size() const { return static_cast<int>(parent.size()); }
    bool is_root(int v) const { return parent[v] == kNoParent; }

    std::vector<int> roots() const;
    std::vector<std::vector<int>> children() const;

    friend bool operator==(const SignedForest&, const SignedForest&) = default;
};

// Validates the parent/sign arrays (acyclicity, index ranges), normalizes
// root sign entries and returns the forest. Throws InvalidForest.
SignedForest make_forest(std::vector<int> parent, std::vector<Sign> sign);

// Convenience for tests and literals: signs given as '+'/'-' characters,
// root entries as '.') e.g. make_forest({-1, 0, 0}, ".+-").
SignedForest make_forest(std::vector<int> parent, const char* signs);

// Flips the signs of all edges between `vertex` and its children; everything
// else is untouched. Involution; flips at distinct vertices commute.
SignedForest apply_r(const SignedForest& f, int vertex);

// Relabels vertex v to new_label_of[v]; new_label_of must be a permutation.
SignedForest relabel(const SignedForest& f, const std::vector<int>& new_label_of);

// Splits the forest into its trees, each re-labeled to a standalone forest
// (vertex order within a component follows the original labels). Returned in
// order of the smallest original label of each component.
std::vector<SignedForest> components(const SignedForest& f);

}  // namespace fanobott
