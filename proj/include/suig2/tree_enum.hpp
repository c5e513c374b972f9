#pragma once

#include <string>
#include <vector>

#include "suig2/tree.hpp"

namespace suig2 {

// Canonical string encoding of an unrooted tree (rooted at its centroid
// center(s), children sorted recursively). Equal strings <=> isomorphic.
std::string canonical_form(const Tree& t);

// All pairwise non-isomorphic trees with exactly n vertices, in canonical
// string order. Grown by leaf addition with canonical-form deduplication.
std::vector<Tree> enumerate_trees(int n);

}  // namespace suig2
