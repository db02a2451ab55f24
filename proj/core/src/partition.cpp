#include "heckeb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heckeb {

Partition::Partition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Multipartition::Multipartition(std::vector<Partition> components) {
    if (components.empty())
        throw std::invalid_argument("Multipartition: level must be >= 1");
    components_ = std::move(components);
    size_ = 0;
    for (const auto& p : components_)
        size_ += p.size();
}

const Partition& Multipartition::component(int c) const {
    if (c < 1 || c > level())
        throw std::invalid_argument("Multipartition: component index out of range");
    return components_[static_cast<size_t>(c) - 1];
}

Multipartition empty_multipartition(int r) {
    return Multipartition(std::vector<Partition>(static_cast<size_t>(r)));
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.resize(static_cast<size_t>(p.parts()[0]));
        for (int part : p.parts())
            for (int j = 0; j < part; ++j)
                ++cols[static_cast<size_t>(j)];
    }
    return Partition(std::move(cols));
}

bool is_e_regular(const Partition& p, const Order& e) {
    if (!e.is_finite())
        return true;
    const long long bound = e.value();
    const auto& parts = p.parts();
    long long run = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        if (run >= bound)
            return false;
    }
    return true;
}

long long n_statistic(const Partition& p) {
    long long acc = 0;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        acc += static_cast<long long>(i) * parts[i];
    return acc;
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominates: partitions must have equal size");
    const int rows = std::max(lam.length(), mu.length());
    long long sl = 0, sm = 0;
    for (int i = 1; i <= rows; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl > sm)
            return false;
    }
    return true;
}

bool dominates(const Multipartition& lam, const Multipartition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominates: multipartitions must have equal size");
    if (lam.level() != mu.level())
        throw std::invalid_argument("dominates: multipartitions must have equal level");
    long long off_l = 0, off_m = 0;
    for (int c = 1; c <= lam.level(); ++c) {
        const Partition& pl = lam.component(c);
        const Partition& pm = mu.component(c);
        const int rows = std::max({pl.length(), pm.length(), 1});
        long long sl = off_l, sm = off_m;
        for (int j = 1; j <= rows; ++j) {
            sl += pl.part(j);
            sm += pm.part(j);
            if (sl > sm)
                return false;
        }
        off_l += pl.size();
        off_m += pm.size();
    }
    return true;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, stack, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
    if (n < 0)
        throw std::invalid_argument("enumerate_multipartitions: n must be >= 0");
    if (r < 1)
        throw std::invalid_argument("enumerate_multipartitions: r must be >= 1");
    if (r == 1) {
        std::vector<Multipartition> out;
        for (auto& p : enumerate_partitions(n))
            out.emplace_back(std::vector<Partition>{std::move(p)});
        return out;
    }
    std::vector<Multipartition> out;
    for (int k = n; k >= 0; --k) {
        const auto heads = enumerate_partitions(k);
        const auto tails = enumerate_multipartitions(n - k, r - 1);
        for (const auto& head : heads) {
            for (const auto& tail : tails) {
                std::vector<Partition> comps;
                comps.reserve(static_cast<size_t>(r));
                comps.push_back(head);
                for (const auto& t : tail.components())
                    comps.push_back(t);
                out.emplace_back(std::move(comps));
            }
        }
    }
    return out;
}

}  // namespace heckeb
