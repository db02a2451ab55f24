#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace heckeb {

// A multiplicative order: a positive integer or infinity.  Used for the
// order l of the base element xi and for the quantum characteristic e
// (e = infinity in the semisimple regime).
class Order {
public:
    static constexpr Order infinity() { return Order{}; }

    constexpr explicit Order(long long v) : value_(v) {
        if (v < 1)
            throw std::invalid_argument("Order: value must be >= 1");
    }

    constexpr bool is_finite() const { return value_ > 0; }

    constexpr long long value() const {
        if (!is_finite())
            throw std::logic_error("Order: value() on infinite order");
        return value_;
    }

    // xi^x == 1 iff the order divides x (infinite order: only x == 0).
    constexpr bool divides(long long x) const {
        if (!is_finite())
            return x == 0;
        return x % value_ == 0;
    }

    friend constexpr bool operator==(const Order&, const Order&) = default;

private:
    constexpr Order() = default;
    long long value_ = 0;  // 0 encodes infinity
};

inline std::string to_string(const Order& o) {
    return o.is_finite() ? std::to_string(o.value()) : "inf";
}

}  // namespace heckeb
