#include "heckeb/basic_sets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "heckeb/j_induction.hpp"

namespace heckeb {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

long long floor_div(long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0)))
        --q;
    return q;
}

// Searches d with |d| <= n-1 and xi^{b - a d} = -1 (= 1 in char 2).
std::optional<int> find_exponent(const SpecializationParams& p) {
    if (!p.xi_order.is_finite())
        return std::nullopt;
    const long long l = p.xi_order.value();
    long long target;  // b - a d == target (mod l)
    if (p.char_p == 2) {
        target = 0;
    } else {
        if (l % 2 != 0)
            return std::nullopt;
        target = l / 2;
    }
    for (int d = -(p.n - 1); d <= p.n - 1; ++d) {
        const long long lhs = static_cast<long long>(p.weights.b) -
                              static_cast<long long>(p.weights.a) * d;
        if (((lhs - target) % l + l) % l == 0)
            return d;
    }
    return std::nullopt;
}

}  // namespace

CaseDescriptor resolve_case(const SpecializationParams& p) {
    if (p.n < 1)
        throw std::invalid_argument("resolve_case: n must be >= 1");
    if (p.char_p != 0 && !is_prime(p.char_p))
        throw std::invalid_argument("resolve_case: characteristic must be 0 or a prime");
    if (!p.xi_order.is_finite() && p.char_p != 0)
        throw std::invalid_argument("resolve_case: infinite xi order requires characteristic 0");
    if (p.xi_order.is_finite() && p.char_p > 0 &&
        std::gcd(p.xi_order.value(), static_cast<long long>(p.char_p)) != 1)
        throw std::invalid_argument("resolve_case: xi order must be prime to the characteristic");

    const bool q_is_one = p.weights.a == 0 || p.xi_order.divides(p.weights.a);

    Order e = Order::infinity();
    if (!q_is_one) {
        if (p.xi_order.is_finite())
            e = Order(p.xi_order.value() /
                      std::gcd(p.xi_order.value(), static_cast<long long>(p.weights.a)));
    } else if (p.char_p > 0) {
        e = Order(p.char_p);
    }

    const std::optional<int> d = find_exponent(p);

    CaseDescriptor c{d ? (q_is_one ? CaseKind::B : CaseKind::C) : CaseKind::A,
                     e,
                     q_is_one,
                     d.has_value(),
                     is_L_good(p.char_p, p.weights, p.n),
                     std::nullopt,
                     std::nullopt,
                     p.n,
                     p.weights,
                     p.char_p};

    if (c.kind != CaseKind::A && p.char_p == 2)
        throw std::domain_error("resolve_case: cases B and C are rejected in characteristic 2");

    if (c.kind == CaseKind::C) {
        if (!e.is_finite() || e.value() < 2)
            throw std::logic_error("resolve_case: case C requires finite e >= 2");
        const long long ev = e.value();
        c.d_mod_e = static_cast<int>(((*d % ev) + ev) % ev);
        // The unique s = d (mod e) with s < b/a < s + e, i.e. the largest
        // class member with a*s <= b - 1.
        const long long m = floor_div(p.weights.b - 1, p.weights.a);
        const long long s = *c.d_mod_e + ev * floor_div(m - *c.d_mod_e, ev);
        if (!(static_cast<long long>(p.weights.a) * s < p.weights.b &&
              p.weights.b < static_cast<long long>(p.weights.a) * (s + ev)))
            throw std::domain_error("resolve_case: b/a lies on the case-C interval boundary");
        c.s = static_cast<int>(s);
    }
    return c;
}

std::vector<Multipartition> lambda_set(const CaseDescriptor& c) {
    std::vector<Multipartition> out;
    switch (c.kind) {
        case CaseKind::A:
            for (const auto& lam : enumerate_multipartitions(c.n, 2))
                if (is_e_regular(lam.component(1), c.e) && is_e_regular(lam.component(2), c.e))
                    out.push_back(lam);
            return out;
        case CaseKind::B:
            for (const auto& nu : enumerate_partitions(c.n))
                if (is_e_regular(nu, c.e))
                    out.push_back(Multipartition({nu, Partition()}));
            return out;
        case CaseKind::C:
            return kleshchev_set(c.n, 2, static_cast<int>(c.e.value()), {*c.d_mod_e, 0});
    }
    throw std::logic_error("lambda_set: unreachable");
}

BasicSetResult basic_set(const CaseDescriptor& c) {
    if (!c.l_good)
        throw std::domain_error("basic_set: the field is not L-good for these weights");

    BasicSetResult result;
    result.lambda = lambda_set(c);

    switch (c.kind) {
        case CaseKind::A: {
            result.basic = result.lambda;
            std::map<Multipartition, Multipartition> beta;
            for (const auto& lam : result.lambda)
                beta.emplace(lam, lam);
            result.beta = std::move(beta);
            result.beta_status = BetaStatus::identity;
            return result;
        }
        case CaseKind::B: {
            std::map<Multipartition, Multipartition> beta;
            for (const auto& lam : result.lambda) {
                Multipartition image = j_induce(lam.component(1), c.weights);
                result.basic.push_back(image);
                beta.emplace(lam, std::move(image));
            }
            result.beta = std::move(beta);
            result.beta_status = BetaStatus::explicit_map;
            return result;
        }
        case CaseKind::C: {
            const int e = static_cast<int>(c.e.value());
            result.basic = uglov_set(c.n, {*c.s, 0}, e, NodeOrder::flotw);
            const bool asymptotic = static_cast<long long>(c.n - 1) * c.weights.a > 0 &&
                                    c.weights.b > static_cast<long long>(c.n - 1) * c.weights.a;
            const bool same_set =
                std::set<Multipartition>(result.basic.begin(), result.basic.end()) ==
                std::set<Multipartition>(result.lambda.begin(), result.lambda.end());
            if (*c.s > c.n - 1 && !same_set)
                throw std::logic_error(
                    "basic_set: crystal set differs from the label set at a spread charge");
            // The identity bijection is reported only where it is forced and
            // coherent.  With equal charges (s = 0) the two labellings can
            // be genuinely different sets of the same size even in the
            // b > (n-1)a regime; the bijection then needs canonical-basis
            // data like any other case-C instance.
            if ((asymptotic || *c.s > c.n - 1) && same_set) {
                std::map<Multipartition, Multipartition> beta;
                for (const auto& lam : result.lambda)
                    beta.emplace(lam, lam);
                result.beta = std::move(beta);
                result.beta_status = BetaStatus::identity;
            } else {
                result.beta_status = BetaStatus::unavailable_requires_canonical_basis;
            }
            return result;
        }
    }
    throw std::logic_error("basic_set: unreachable");
}

ChargeVector equal_parameter_shortcut(int n, int b, int e) {
    if (n < 0)
        throw std::invalid_argument("equal_parameter_shortcut: n must be >= 0");
    if (e < 2 || e % 2 != 0)
        throw std::domain_error("equal_parameter_shortcut: e must be even and >= 2");
    return {b - e / 2, 0};
}

}  // namespace heckeb
