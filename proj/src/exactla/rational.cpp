#include "eigenhodge/exactla/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "eigenhodge/errors.hpp"

namespace eigenhodge {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

u128 gcd_u128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        auto x = static_cast<std::uint64_t>(a);
        auto y = static_cast<std::uint64_t>(b);
        while (y != 0) {
            auto t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
                 : static_cast<std::uint64_t>(v);
}

bool fits_small(i128 v) {
    return v > static_cast<i128>(kMin) && v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

mpz_class wide_to_mpz(i128 v) {
    bool neg = v < 0;
    u128 mag = neg ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t n) {
    if (n == kMin) {
        big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(n)));
        return;
    }
    num_ = n;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator");
    }
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 mag = n < 0 ? static_cast<u128>(0) - static_cast<u128>(n) : static_cast<u128>(n);
    if (mag == 0) {
        return Rational();
    }
    u128 g = gcd_u128(mag, static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    Rational out;
    if (fits_small(n) && fits_small(d)) {
        out.num_ = static_cast<std::int64_t>(n);
        out.den_ = static_cast<std::int64_t>(d);
        return out;
    }
    mpq_class q(wide_to_mpz(n), wide_to_mpz(d));
    out.big_ = std::make_unique<mpq_class>(std::move(q));
    return out;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational out;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
        out.num_ = n.get_si();
        out.den_ = d.get_si();
        return out;
    }
    out.big_ = std::make_unique<mpq_class>(std::move(q));
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'"); };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto all_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    if (!all_digits(num) || !all_digits(den)) {
        throw bad();
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw bad();
    }
    if (neg) n = -n;
    return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const {
    if (!big_) {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw Error(ErrorKind::DimensionMismatch, "floor does not fit in 64 bits");
    }
    return q.get_si();
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    if (big_) return from_mpq(1 / *big_);
    Rational out;
    if (num_ < 0) {
        out.num_ = -den_;
        out.den_ = -num_;
    } else {
        out.num_ = den_;
        out.den_ = num_;
    }
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s = 0;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
                return Rational(s);
            }
        }
        if (a.den_ == b.den_) {
            return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
        }
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t p = 0;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
                return Rational(p);
            }
        }
        auto g1 = static_cast<std::int64_t>(gcd_u64(abs_u64(a.num_), static_cast<std::uint64_t>(b.den_)));
        auto g2 = static_cast<std::int64_t>(gcd_u64(abs_u64(b.num_), static_cast<std::uint64_t>(a.den_)));
        i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        if (fits_small(n) && fits_small(d)) {
            Rational out;
            out.num_ = static_cast<std::int64_t>(n);
            out.den_ = static_cast<std::int64_t>(d);
            return out;
        }
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace eigenhodge
