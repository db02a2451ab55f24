#pragma once

#include <vector>

#include "heckeb/a_function.hpp"
#include "heckeb/partition.hpp"

namespace heckeb {

// The shifted two-row symbol driving truncated induction: the initial
// state for weights (a, b = a*r + b') is
//   top    = (a + b', 2a + b', ..., (N+r)a + b')
//   bottom = (a, 2a, ..., Na).
// With b' > 0 the rows never collide, so "the k largest entries" is
// always unambiguous.
struct ShiftedSymbol {
    std::vector<long long> top;
    std::vector<long long> bottom;
    int padding;  // N
};

ShiftedSymbol initial_shifted_symbol(const WeightParams& w, int padding);

// Truncated induction J: partitions of n -> bipartitions of n.  Defined by
// repeatedly increasing the conjugate-part-many largest symbol entries by
// a, then reading the bipartition back from the shifted encoding.
//
// Cases: a = 0 gives (nu | empty); for a > 0 with quotient >= n-1 the
// procedure only ever touches the top row, giving (nu | empty) as well.
// For a > 0, remainder 0 and quotient < n-1 the symbol develops ties and
// the map is refused (std::domain_error) rather than tie-broken.
Multipartition j_induce(const Partition& nu, const WeightParams& w);

// Same, with an explicit padding (the result is padding-independent).
// Requires padding >= max(|nu|, 1).
Multipartition j_induce(const Partition& nu, const WeightParams& w, int padding);

}  // namespace heckeb
