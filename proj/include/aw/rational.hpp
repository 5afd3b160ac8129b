#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aw {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Backed by GMP's mpq_t.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    static Rational parse(std::string_view text);

    const mpq_class &mpq() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const;
    Rational pow(long exponent) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "a/b" with the sign on the numerator; integers print as "a/1".
    std::string str() const;

    Rational &operator+=(const Rational &o) {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace aw
