#include "eigenhodge/exactla/gaussian.hpp"

#include <ostream>

#include "eigenhodge/errors.hpp"

namespace eigenhodge {

GaussianRational GaussianRational::parse(std::string_view text) {
    auto bad = [&]() {
        return Error(ErrorKind::ParseError, "malformed Gaussian rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    if (text.back() != 'i') {
        return {Rational::parse(text), Rational(0)};
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not leading; everything after it is the imaginary coefficient.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+") {
        im = Rational(1);
    } else if (im_part == "-") {
        im = Rational(-1);
    } else {
        im = Rational::parse(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
    return {std::move(re), std::move(im)};
}

GaussianRational GaussianRational::reciprocal() const {
    if (im_.is_zero()) return {re_.reciprocal(), Rational(0)};
    Rational n = norm_sq();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_ == Rational(1)) {
        imag = "i";
    } else if (im_ == Rational(-1)) {
        imag = "-i";
    } else {
        imag = im_.to_string() + "i";
    }
    if (re_.is_zero()) return imag;
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return re_.to_string() + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) { return *this = *this * rhs; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero()) {
        if (b.im_.is_zero()) return {a.re_ * b.re_, Rational(0)};
        return {a.re_ * b.re_, a.re_ * b.im_};
    }
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace eigenhodge
