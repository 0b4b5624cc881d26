#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "eigenhodge/exactla/rational.hpp"

namespace eigenhodge {

/// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Accepts "a", "bi", "a+bi", "a-bi" with a, b in the Rational grammar;
    /// a bare "i" / "-i" stands for a unit coefficient.
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    /// |z|^2, always a nonnegative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational reciprocal() const;

    std::string to_string() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs) { return *this *= rhs.reciprocal(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.reciprocal();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace eigenhodge
