#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heckeb/partition.hpp"

namespace heckeb {

// A cell position (row, column, component), all 1-based with
// component in 1..r.
struct Node {
    int row;
    int col;
    int comp;

    friend bool operator==(const Node&, const Node&) = default;
};

// One integer charge per component; shifts residues and orders nodes.
using ChargeVector = std::vector<int>;

// The two node orders driving the good-node combinatorics:
//  - flotw: by shifted content, refined across components (see node_above);
//  - ariki: by component, then by row, ignoring charges.
enum class NodeOrder { flotw, ariki };

// (col - row + u_comp) mod e, normalized to 0..e-1.
int residue(const Node& g, const ChargeVector& u, int e);

// Strict "above" comparison.
//
// ariki: g1 is above g2 iff g2 has a smaller component, or the same
// component and a smaller row.
//
// flotw: primarily by shifted content c(g) = col - row + u_comp, smaller
// content above.  Content ties across components with distinct charges
// put the larger component above; ties between components of equal
// charge put the smaller component above.  (The equal-charge reversal is
// forced: with it the good-node recursion matches the non-recursive
// membership test on every charge configuration, including u = (0,0);
// without it one-box words already disagree.)
bool node_above(const Node& g1, const Node& g2, const ChargeVector& u, NodeOrder order);

std::vector<Node> addable_nodes(const Multipartition& lam);
std::vector<Node> removable_nodes(const Multipartition& lam);

Multipartition add_node(const Multipartition& lam, const Node& g);
Multipartition remove_node(const Multipartition& lam, const Node& g);

// The good removable node of residue res, if any: list the addable and
// removable res-nodes from highest to lowest, repeatedly delete adjacent
// pairs of a removable immediately above an addable; the survivors read
// A...AR...R and the good node is the highest surviving R.
std::optional<Node> good_node(const Multipartition& lam, int res, const ChargeVector& u,
                              int e, NodeOrder order);

// Recursive crystal membership: the empty multipartition is a member, and
// lam is a member iff removing a good node of some residue yields a
// member.  Memoized per thread across calls.
bool in_uglov(const Multipartition& lam, const ChargeVector& u, int e, NodeOrder order);

// All size-n members, in enumeration order.
std::vector<Multipartition> uglov_set(int n, const ChargeVector& u, int e, NodeOrder order);

// Non-recursive membership test for sorted charges 0 <= u_1 <= ... <=
// u_r <= e-1: the cylindrical row conditions
//   lambda^(j+1)_i >= lambda^(j)_{i + u_{j+1} - u_j}   (1 <= j < r)
//   lambda^(1)_i   >= lambda^(r)_{i + e + u_1 - u_r}
// plus, for every row length k > 0, the requirement that the residues at
// the right ends of the length-k rows miss at least one class mod e.
// Throws std::invalid_argument if the charges are not sorted in range.
bool flotw_test(const Multipartition& lam, const ChargeVector& u, int e);

// Membership under the ariki order (depends on the charges mod e only).
std::vector<Multipartition> kleshchev_set(int n, int r, int e, const ChargeVector& u);

struct CrystalEdge {
    Multipartition from;
    Multipartition to;
    int res;
};

// levels[n] lists the size-n vertices; every edge adds one good node.
struct CrystalGraph {
    std::vector<std::vector<Multipartition>> levels;
    std::vector<CrystalEdge> edges;
};

CrystalGraph crystal_graph(int n_max, const ChargeVector& u, int e, NodeOrder order);

void write_dot(const CrystalGraph& g, std::ostream& os);
std::string crystal_json(const CrystalGraph& g);

}  // namespace heckeb
