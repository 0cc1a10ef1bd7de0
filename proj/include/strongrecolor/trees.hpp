#pragma once

#include <string>
#include <vector>

#include "strongrecolor/graph.hpp"

namespace strongrecolor {

// Labelled tree on n >= 2 vertices from a Prüfer sequence of length n-2
// (entries in 0..n-1).
Graph prufer_decode(const std::vector<int>& seq, int n);

// Canonical string for unrooted tree isomorphism: AHU encoding rooted at the
// centre, or at both centres with the halves combined in sorted order.
std::string ahu_canonical_form(const Graph& t);

// One representative per isomorphism class of trees on n vertices, obtained by
// decoding all n^(n-2) Prüfer sequences and deduplicating by canonical form.
// Ordered by first appearance in Prüfer order, so the list is deterministic.
std::vector<Graph> tree_isomorphism_classes(int n);

} // namespace strongrecolor
