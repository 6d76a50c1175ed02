#pragma once

#include <vector>

#include "fanobott/canonical.hpp"
#include "fanobott/forest.hpp"

namespace fanobott {

// Hard cap on the vertex count accepted by the enumeration routines, read
// once from the environment variable FANOBOTT_MAX_ENUM_N (default 12).
int enumeration_limit();

// One canonical representative per rel-class of signed rooted trees (single
// root) on n vertices, sorted by canonical code. n >= 1. Under sim the list
// length is t_n. Throws ResourceBoundExceeded when n exceeds the cap.
std::vector<SignedForest> enumerate_tree_classes(int n, Relation rel, int max_n = 0);

// One canonical representative per rel-class of signed rooted forests on n
// vertices, sorted by canonical code. n = 0 yields the single empty forest.
// Under sim the list length is f_n.
std::vector<SignedForest> enumerate_forest_classes(int n, Relation rel, int max_n = 0);

// Count-only variants (no representative construction).
long long count_tree_classes(int n, Relation rel, int max_n = 0);
long long count_forest_classes(int n, Relation rel, int max_n = 0);

// Number of diffeomorphism classes of indecomposable Fano Bott manifolds of
// complex dimension n: equals |SF_{n-1}/~| = f_{n-1}, realized by erasing the
// root of a single-root class under approx.
long long count_indecomposable_diffeo_classes(int n, int max_n = 0);

}  // namespace fanobott
