#pragma once

#include <compare>
#include <vector>

#include "heckeb/order.hpp"

namespace heckeb {

// An integer partition: a weakly decreasing sequence of positive parts.
// Trailing zeros are stripped on construction, so each mathematical
// partition has exactly one representation.
class Partition {
public:
    Partition() = default;

    // Accepts a weakly decreasing sequence; zeros are dropped.
    // Throws std::invalid_argument on negative or increasing input.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }              // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows beyond length() are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i) - 1] : 0;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// An r-tuple of partitions of total size n.  For r = 2 this is a
// bipartition (lambda^(1) | lambda^(2)).
class Multipartition {
public:
    explicit Multipartition(std::vector<Partition> components);

    int level() const { return static_cast<int>(components_.size()); }  // r
    int size() const { return size_; }                                  // n
    const std::vector<Partition>& components() const { return components_; }

    // 1-based component access, matching the usual indexing lambda^(c).
    const Partition& component(int c) const;

    // Row length lambda^(c)_a with 1-based c and a; 0 beyond the diagram.
    int row(int c, int a) const { return component(c).part(a); }

    bool is_empty() const { return size_ == 0; }

    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

Multipartition empty_multipartition(int r);

// Conjugate (transposed) partition; an involution.
Partition conjugate(const Partition& p);

// True iff no part value occurs e or more times; always true for e = infinity.
bool is_e_regular(const Partition& p, const Order& e);

// n(nu) = sum_i (i-1) nu_i with 1-based i.
long long n_statistic(const Partition& p);

// Dominance order on partitions of equal size: lam <= mu iff every prefix
// sum of lam is bounded by the corresponding prefix sum of mu.
// Throws std::invalid_argument on size mismatch.
bool dominates(const Partition& lam, const Partition& mu);

// Dominance order on multipartitions of equal size and level: compares
// cumulative sums across components, each component offset by the total
// size of the preceding ones.
bool dominates(const Multipartition& lam, const Multipartition& mu);

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

// All r-multipartitions of n, each exactly once.  Ordered by first
// component size descending, then recursively; within a fixed size
// profile components run in reverse-lexicographic order.
std::vector<Multipartition> enumerate_multipartitions(int n, int r);

}  // namespace heckeb
