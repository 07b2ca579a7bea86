#ifndef GPW_QUADRATIC_HPP
#define GPW_QUADRATIC_HPP

#include <cmath>
#include <cstdint>

namespace gpw {

/// Exact arithmetic in Z[sqrt(3)]: a + b*sqrt(3). Holds the roots
/// tau = 7 + 4*sqrt(3) and tau' = 7 - 4*sqrt(3) of x^2 - 14x + 1 = 0 that
/// govern the length growth of the counterexample chain.
struct QuadraticInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr QuadraticInt conjugate() const { return {a, -b}; }

    friend constexpr QuadraticInt operator+(QuadraticInt x, QuadraticInt y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend constexpr QuadraticInt operator-(QuadraticInt x, QuadraticInt y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend constexpr QuadraticInt operator*(QuadraticInt x, QuadraticInt y) {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend constexpr QuadraticInt operator*(std::int64_t s, QuadraticInt x) {
        return {s * x.a, s * x.b};
    }

    constexpr bool operator==(const QuadraticInt&) const = default;

    constexpr QuadraticInt pow(unsigned k) const {
        QuadraticInt out{1, 0};
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    double to_double() const { return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(3.0); }

    static constexpr QuadraticInt tau() { return {7, 4}; }
    static constexpr QuadraticInt tau_conj() { return {7, -4}; }
};

}  // namespace gpw

#endif  // GPW_QUADRATIC_HPP
