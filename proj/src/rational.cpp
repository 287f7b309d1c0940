#include "degenlocus/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace degenlocus {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("Rational: bad character in '" + s + "'");
    }
    try {
        mpq_class v(s);
        if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

Rational Rational::binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b, mpz_class(1));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inv() const {
    Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    *this *= o.inv();
    return *this;
}

namespace {

// One signed term of the form [num][/den] with an optional trailing 'i'.
struct Term {
    Rational value;
    bool imaginary = false;
};

Term parse_term(std::string_view s, size_t& pos) {
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    std::string digits(s.substr(start, pos - start));
    bool imag = false;
    if (pos < s.size() && s[pos] == 'i') {
        imag = true;
        ++pos;
    }
    Rational mag;
    if (digits.empty()) {
        if (!imag) throw std::invalid_argument("GaussianRational: bad term in '" + std::string(s) + "'");
        mag = Rational(1);  // bare "i"
    } else {
        mag = Rational::parse(digits);
    }
    if (sign < 0) mag = -mag;
    return Term{std::move(mag), imag};
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("GaussianRational: empty string");
    size_t pos = 0;
    Term first = parse_term(text, pos);
    Rational re, im;
    (first.imaginary ? im : re) = first.value;
    if (pos < text.size()) {
        Term second = parse_term(text, pos);
        if (second.imaginary == first.imaginary)
            throw std::invalid_argument("GaussianRational: duplicate part in '" + std::string(text) + "'");
        (second.imaginary ? im : re) = second.value;
    }
    if (pos != text.size())
        throw std::invalid_argument("GaussianRational: trailing characters in '" + std::string(text) + "'");
    return GaussianRational(std::move(re), std::move(im));
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == Rational(1))
        imag = "i";
    else if (im_ == Rational(-1))
        imag = "-i";
    else
        imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
    return os << q.str();
}

}  // namespace degenlocus
