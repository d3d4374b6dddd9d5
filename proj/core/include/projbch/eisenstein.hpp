#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace projbch {

// Exact element of Z[w], w = exp(2*pi*i/3), stored as a + b*w.
// Uses w^2 = -1 - w. Note sqrt(-3) = 1 + 2w, so every value of the form
// r + s*sqrt(-3) with integer r, s is representable exactly.
struct Eisenstein {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr Eisenstein() = default;
    constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) {
        return {x.a - y.a, x.b - y.b};
    }
    constexpr Eisenstein operator-() const { return {-a, -b}; }
    friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend constexpr Eisenstein operator*(std::int64_t c, Eisenstein y) {
        return {c * y.a, c * y.b};
    }
    friend constexpr bool operator==(Eisenstein x, Eisenstein y) {
        return x.a == y.a && x.b == y.b;
    }
    friend constexpr bool operator!=(Eisenstein x, Eisenstein y) { return !(x == y); }
    // Total order for use as a map key (no algebraic meaning).
    friend constexpr bool operator<(Eisenstein x, Eisenstein y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }

    constexpr Eisenstein conj() const { return {a - b, -b}; }
    constexpr bool is_real() const { return b == 0; }
    // True when the value lies on the imaginary axis, i.e. equals s*sqrt(-3).
    constexpr bool is_imaginary() const { return b == 2 * a; }

    std::complex<double> to_complex() const {
        static const std::complex<double> w{-0.5, std::sqrt(3.0) / 2.0};
        return std::complex<double>(double(a)) + double(b) * w;
    }

    std::string to_string() const {
        if (b == 0) return std::to_string(a);
        if (b == 2 * a) return std::to_string(a) + "*sqrt(-3)";
        return std::to_string(a) + (b < 0 ? "" : "+") + std::to_string(b) + "*w";
    }
};

} // namespace projbch
