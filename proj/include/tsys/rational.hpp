#pragma once

// Exact rationals backed by GMP. Canonical text form is "p" or "p/q" with q > 1.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tsys {

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(std::string_view s);

    std::string str() const;
    bool is_integer() const { return q_.get_den() == 1; }
    const mpq_class& raw() const { return q_; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }

    int compare(const Rational& o) const { return cmp(q_, o.q_); }
    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = compare(o);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    int sign() const { return sgn(q_); }

private:
    mpq_class q_;
};

}  // namespace tsys
