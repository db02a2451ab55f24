#pragma once

#include <vector>

#include "heckeb/partition.hpp"

namespace heckeb {

// Weights of the two generator classes of the type-B Weyl group: b for the
// special generator t, a for the braid generators s_1,...,s_{n-1}.  When
// a > 0 the decomposition b = a*quotient + remainder with
// 0 <= remainder < a drives the symbol combinatorics.
struct WeightParams {
    int a;
    int b;

    WeightParams(int a_, int b_) : a(a_), b(b_) {
        if (a < 0 || b < 0)
            throw std::invalid_argument("WeightParams: weights must be >= 0");
    }

    bool has_quotient() const { return a > 0; }

    int quotient() const {  // r in b = a*r + b'
        require_positive_a();
        return b / a;
    }

    int remainder() const {  // b' in b = a*r + b'
        require_positive_a();
        return b % a;
    }

private:
    void require_positive_a() const {
        if (a == 0)
            throw std::domain_error("WeightParams: quotient/remainder undefined for a = 0");
    }
};

// The two-row symbol attached to a bipartition: alpha has padding+quotient
// strictly increasing entries, beta has padding entries.
struct SymbolPair {
    std::vector<long long> alpha;
    std::vector<long long> beta;
    int padding;  // N
};

// Builds the symbol of a level-2 multipartition for a > 0.  The padding N
// must satisfy N >= len(lambda^(2)), N >= len(lambda^(1)) - quotient and
// N >= 1; throws otherwise.
SymbolPair build_symbol(const Multipartition& lam, const WeightParams& w, int padding);

// A_N - B_N evaluated on an explicit symbol (requires a > 0).  The value
// is independent of the padding; see a_value for the default choice.
long long a_value_from_symbol(const SymbolPair& sym, const WeightParams& w);

// The a-invariant of a bipartition.  For a > 0 this is A_N - B_N with the
// minimal valid padding; for a = 0 it is b * |lambda^(2)|.
long long a_value(const Multipartition& lam, const WeightParams& w);

// Closed form b|lambda^(2)| + a(n(lambda^(1)) + 2n(lambda^(2)) -
// n(conjugate(lambda^(2)))).  Agrees with a_value whenever b > (n-1)a > 0;
// computable for any inputs.
long long a_value_closed(const Multipartition& lam, const WeightParams& w);

// a-invariant for the symmetric group with constant weight a: a * n(nu).
long long a_value_symmetric(const Partition& nu, int a);

// Whether a field of the given characteristic (0 or a prime) keeps every
// Schur-element leading coefficient nonzero for the weights (a, b) at rank n.
bool is_L_good(int char_p, const WeightParams& w, int n);

}  // namespace heckeb
