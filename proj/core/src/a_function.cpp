#include "heckeb/a_function.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heckeb {

namespace {

// sum over i < j of min(v_i, v_j) for a strictly increasing sequence.
long long pair_min_sum(const std::vector<long long>& v) {
    long long acc = 0;
    const long long len = static_cast<long long>(v.size());
    for (long long i = 0; i < len; ++i)
        acc += v[static_cast<size_t>(i)] * (len - 1 - i);
    return acc;
}

long long cross_min_sum(const std::vector<long long>& u, const std::vector<long long>& v) {
    long long acc = 0;
    for (long long x : u)
        for (long long y : v)
            acc += std::min(x, y);
    return acc;
}

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_char(int char_p) {
    if (char_p != 0 && !is_prime(char_p))
        throw std::invalid_argument("characteristic must be 0 or a prime");
}

int minimal_padding(const Multipartition& lam, const WeightParams& w) {
    const int r = w.quotient();
    return std::max({lam.component(2).length(), lam.component(1).length() - r, 1});
}

}  // namespace

SymbolPair build_symbol(const Multipartition& lam, const WeightParams& w, int padding) {
    if (w.a == 0)
        throw std::domain_error("build_symbol: requires a > 0");
    if (lam.level() != 2)
        throw std::invalid_argument("build_symbol: level-2 multipartition required");
    const int r = w.quotient();
    const int bp = w.remainder();
    const int N = padding;
    if (N < minimal_padding(lam, w))
        throw std::invalid_argument("build_symbol: padding too small");

    SymbolPair sym;
    sym.padding = N;
    sym.alpha.reserve(static_cast<size_t>(N + r));
    sym.beta.reserve(static_cast<size_t>(N));
    for (int i = 1; i <= N + r; ++i)
        sym.alpha.push_back(static_cast<long long>(w.a) * (lam.row(1, N + r - i + 1) + i - 1) + bp);
    for (int j = 1; j <= N; ++j)
        sym.beta.push_back(static_cast<long long>(w.a) * (lam.row(2, N - j + 1) + j - 1));

    assert(std::is_sorted(sym.alpha.begin(), sym.alpha.end()));
    assert(std::is_sorted(sym.beta.begin(), sym.beta.end()));
    return sym;
}

long long a_value_from_symbol(const SymbolPair& sym, const WeightParams& w) {
    if (w.a == 0)
        throw std::domain_error("a_value_from_symbol: requires a > 0");
    const int r = w.quotient();
    const int bp = w.remainder();
    const int N = sym.padding;

    const long long A = cross_min_sum(sym.alpha, sym.beta) + pair_min_sum(sym.alpha) +
                        pair_min_sum(sym.beta);

    // B_N is A_N of the empty bipartition; it depends on (a, b, N) only.
    std::vector<long long> alpha0, beta0;
    alpha0.reserve(static_cast<size_t>(N + r));
    beta0.reserve(static_cast<size_t>(N));
    for (int i = 1; i <= N + r; ++i)
        alpha0.push_back(static_cast<long long>(w.a) * (i - 1) + bp);
    for (int j = 1; j <= N; ++j)
        beta0.push_back(static_cast<long long>(w.a) * (j - 1));
    const long long B = cross_min_sum(alpha0, beta0) + pair_min_sum(alpha0) +
                        pair_min_sum(beta0);

    return A - B;
}

long long a_value(const Multipartition& lam, const WeightParams& w) {
    if (lam.level() != 2)
        throw std::invalid_argument("a_value: level-2 multipartition required");
    if (w.a == 0)
        return static_cast<long long>(w.b) * lam.component(2).size();
    return a_value_from_symbol(build_symbol(lam, w, minimal_padding(lam, w)), w);
}

long long a_value_closed(const Multipartition& lam, const WeightParams& w) {
    if (lam.level() != 2)
        throw std::invalid_argument("a_value_closed: level-2 multipartition required");
    const Partition& l1 = lam.component(1);
    const Partition& l2 = lam.component(2);
    return static_cast<long long>(w.b) * l2.size() +
           static_cast<long long>(w.a) *
               (n_statistic(l1) + 2 * n_statistic(l2) - n_statistic(conjugate(l2)));
}

long long a_value_symmetric(const Partition& nu, int a) {
    if (a < 0)
        throw std::invalid_argument("a_value_symmetric: weight must be >= 0");
    return static_cast<long long>(a) * n_statistic(nu);
}

bool is_L_good(int char_p, const WeightParams& w, int n) {
    require_char(char_p);
    if (n < 1)
        throw std::invalid_argument("is_L_good: n must be >= 1");
    if (w.a == 0)
        return char_p == 0 || char_p > n;
    const bool small_ratio = (w.b % w.a == 0) && (w.b / w.a <= n - 1);
    if (!small_ratio)
        return true;
    return char_p != 2;
}

}  // namespace heckeb
