#pragma once

#include <map>
#include <optional>
#include <vector>

#include "heckeb/a_function.hpp"
#include "heckeb/crystal.hpp"
#include "heckeb/order.hpp"
#include "heckeb/partition.hpp"

namespace heckeb {

// Specialization data: rank n, weights (a, b), the multiplicative order l
// of the base element xi, and the field characteristic (0 or a prime).
struct SpecializationParams {
    int n;
    WeightParams weights;
    Order xi_order;
    int char_p;
};

enum class CaseKind { A, B, C };

// The resolved case split:
//   A: f_n(Q, q) != 0               (both components e-regular)
//   B: f_n(Q, q) == 0 and q == 1    (then Q = -1)
//   C: f_n(Q, q) == 0 and q != 1    (Q = -q^d)
// In case C, d_mod_e is the residue class of the exponents d and s is the
// unique member of that class with s < b/a < s + e.
struct CaseDescriptor {
    CaseKind kind;
    Order e;
    bool q_is_one;
    bool f_n_zero;
    bool l_good;
    std::optional<int> d_mod_e;  // case C only
    std::optional<int> s;        // case C only
    int n;
    WeightParams weights;
    int char_p;
};

// Determines the case from the specialization parameters.  Cases B and C
// are rejected in characteristic 2 (std::domain_error); an infinite
// xi_order requires characteristic 0.
CaseDescriptor resolve_case(const SpecializationParams& p);

// The labels of the simple modules:
//   A: both components e-regular;
//   B: (nu | empty) with nu e-regular;
//   C: the Kleshchev bipartitions for (d_mod_e, 0).
std::vector<Multipartition> lambda_set(const CaseDescriptor& c);

enum class BetaStatus {
    identity,                             // beta is the identity on lambda_set
    explicit_map,                         // beta listed explicitly
    unavailable_requires_canonical_basis  // set known, bijection not determined
};

struct BasicSetResult {
    std::vector<Multipartition> lambda;  // the simple-module labels
    std::vector<Multipartition> basic;   // the canonical basic set B
    std::optional<std::map<Multipartition, Multipartition>> beta;
    BetaStatus beta_status;
};

// The canonical basic set for a resolved case.  Requires the field to be
// L-good (std::domain_error otherwise).
//   A: B = lambda, beta identity.
//   B: B = { J(nu) : (nu | empty) in lambda }, beta explicit.
//   C: B is the crystal membership set for charges (s, 0); beta is the
//      identity when b > (n-1)a > 0 or s > n-1 and is otherwise not
//      combinatorially determined (it would require canonical-basis data).
BasicSetResult basic_set(const CaseDescriptor& c);

// The equal-parameter shortcut (a = 1, e even): charges (b - e/2, 0),
// equal by shift invariance to (b, e/2).  Throws on odd e.
ChargeVector equal_parameter_shortcut(int n, int b, int e);

}  // namespace heckeb
