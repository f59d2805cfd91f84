#pragma once

#include <vector>

#include "linkwidth/combinatorial_map.hpp"
#include "linkwidth/graph.hpp"
#include "linkwidth/rational.hpp"
#include "linkwidth/twist.hpp"

namespace linkwidth {

// phi[i] is the vertex placed at position i.
using VertexOrdering = std::vector<int>;

struct WidthProfile {
  std::vector<int> profile;  // p_i = boundary size of the first i vertices
  int width = 0;             // max p_i
  long long sumWidth = 0;
  std::vector<int> lexWidth;  // profile as a descending multiset
};

// Exact boundary profile of an ordering. Loops never cross a cut; parallel
// edges count individually. Throws NotABijection on a bad phi.
WidthProfile ordering_width(const Graph& g, const VertexOrdering& phi);

// Recursive separator ordering: the separator first (ascending), then part1,
// then part2. Width is at most (6*sqrt(2)+4*sqrt(3)) * maxdeg * sqrt(v).
VertexOrdering separator_ordering(const CombinatorialMap& m);

// Expand an ordering of twist blocks to one of the crossings: each block's
// crossings appear consecutively in chain order, the chain direction chosen
// to keep mid-block cuts low. Adds at most 2 to the block-graph width when
// every region is a linear chain, at most 4 otherwise.
VertexOrdering lift_ordering(const VertexOrdering& phiT, const TwistDecomposition& td);

// Level sweep of an embedded graph along an ordering: the arc count between
// consecutive vertex passages. max_arcs always equals the ordering width.
struct SweepProfile {
  std::vector<int> vertices;
  std::vector<int> arc_counts;  // one entry between consecutive passages
  int max_arcs = 0;
};
SweepProfile sweep_profile(const CombinatorialMap& m, const VertexOrdering& phi);

// Lexicographic comparison of the descending profile multisets:
// negative, zero, or positive as a < b, a == b, a > b.
int compare_lex(const WidthProfile& a, const WidthProfile& b);

struct ExactWidth {
  int width = 0;
  VertexOrdering ordering;
};
// Minimum width over all orderings via a subset DP; v <= 20 (TooLarge).
ExactWidth exact_width(const Graph& g);

struct CheegerResult {
  Rational h;
  std::vector<int> witness;
};
// h(g) = min over nonempty A with |A| <= v/2 of |boundary(A)| / |A|,
// exhaustively; v <= 24 (TooLarge), v >= 2 (DomainError).
CheegerResult graph_cheeger(const Graph& g);

}  // namespace linkwidth
