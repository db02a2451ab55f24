#include "heckeb/j_induction.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heckeb {

namespace {

Multipartition pair_with_empty(const Partition& nu) {
    return Multipartition({nu, Partition()});
}

// Increases the m largest entries (across both sorted rows) by a.  The m
// largest always form a suffix of each row, so sortedness is preserved.
void bump_largest(ShiftedSymbol& sym, int m, int a) {
    int ti = static_cast<int>(sym.top.size());
    int bi = static_cast<int>(sym.bottom.size());
    for (int taken = 0; taken < m; ++taken) {
        const long long tv = ti > 0 ? sym.top[static_cast<size_t>(ti) - 1] : -1;
        const long long bv = bi > 0 ? sym.bottom[static_cast<size_t>(bi) - 1] : -1;
        assert(tv != bv);
        if (tv > bv)
            --ti;
        else
            --bi;
    }
    for (size_t i = static_cast<size_t>(ti); i < sym.top.size(); ++i)
        sym.top[i] += a;
    for (size_t j = static_cast<size_t>(bi); j < sym.bottom.size(); ++j)
        sym.bottom[j] += a;
}

Partition read_row(const std::vector<long long>& row, int a, int shift_b) {
    // row_i = a * (part_{len-i+1} + i) + shift_b, read back largest-last.
    std::vector<int> parts;
    parts.reserve(row.size());
    for (size_t i = row.size(); i-- > 0;) {
        const long long raw = row[i] - shift_b;
        assert(raw % a == 0);
        const long long part = raw / a - static_cast<long long>(i) - 1;
        assert(part >= 0);
        if (part > 0)
            parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

}  // namespace

ShiftedSymbol initial_shifted_symbol(const WeightParams& w, int padding) {
    if (w.a == 0)
        throw std::domain_error("initial_shifted_symbol: requires a > 0");
    if (padding < 1)
        throw std::invalid_argument("initial_shifted_symbol: padding must be >= 1");
    const int r = w.quotient();
    const int bp = w.remainder();
    ShiftedSymbol sym;
    sym.padding = padding;
    for (int i = 1; i <= padding + r; ++i)
        sym.top.push_back(static_cast<long long>(w.a) * i + bp);
    for (int j = 1; j <= padding; ++j)
        sym.bottom.push_back(static_cast<long long>(w.a) * j);
    return sym;
}

Multipartition j_induce(const Partition& nu, const WeightParams& w) {
    return j_induce(nu, w, std::max(nu.size(), 1));
}

Multipartition j_induce(const Partition& nu, const WeightParams& w, int padding) {
    const int n = nu.size();
    if (w.a == 0)
        return pair_with_empty(nu);
    if (w.remainder() == 0) {
        if (w.quotient() >= n - 1)
            return pair_with_empty(nu);
        throw std::domain_error(
            "j_induce: undefined for a | b with b/a < n-1 (ambiguous symbol ties)");
    }
    if (padding < std::max(n, 1))
        throw std::invalid_argument("j_induce: padding must be >= max(|nu|, 1)");

    ShiftedSymbol sym = initial_shifted_symbol(w, padding);
    const Partition dual = conjugate(nu);
    for (int part : dual.parts())
        bump_largest(sym, part, w.a);

    Multipartition image({read_row(sym.top, w.a, w.remainder()),
                          read_row(sym.bottom, w.a, 0)});
    assert(image.size() == n);
    return image;
}

}  // namespace heckeb
