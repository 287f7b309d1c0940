#ifndef DEGENLOCUS_RATIONAL_HPP
#define DEGENLOCUS_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace degenlocus {

// Exact rational number, always stored canonically: gcd(|num|, den) = 1, den > 0.
// Backed by GMP; no operation ever rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Text form "a/b", with "/b" omitted when b = 1.
    static Rational parse(std::string_view text);
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    static Rational factorial(unsigned n);
    static Rational binomial(unsigned n, unsigned k);

private:
    mpq_class v_;
};

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    // Text form "a/b+c/di"; either the real or the imaginary part may be omitted,
    // and a bare "i" / "-i" stands for unit imaginary part.
    static GaussianRational parse(std::string_view text);
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }  // |q|^2, a nonnegative rational
    GaussianRational inv() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

private:
    Rational re_, im_;
};

}  // namespace degenlocus

#endif
