#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quivar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Largest integer <= r.
BigInt rational_floor(const Rational& r);

/// Parse "p" or "p/q" (optional leading sign, q > 0 after normalization).
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rational_str(const Rational& r);

/// A complex number with exact rational real and imaginary parts.
///
/// Comparisons use the lexicographic order on ℂ: z <= w iff Re z < Re w, or
/// Re z = Re w and Im z <= Im w. This order is total and additive, which is
/// what makes dominance reduction of parameters well defined.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long r) : re(r) {}
    GaussianRational(long long r, long long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    // lexicographic: real part first
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.im != b.im) return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// Parse the text form "a/b", "a/b+c/di", "c/di" (signs allowed, bare "i" ok).
GaussianRational parse_gaussian(std::string_view text);

/// Canonical text form, e.g. "0", "1/2", "-2i", "1/2+1/3i".
std::string gaussian_str(const GaussianRational& z);

} // namespace quivar
