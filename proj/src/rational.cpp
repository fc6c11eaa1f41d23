#include "tsys/rational.hpp"

#include "tsys/errors.hpp"

#include <cctype>

namespace tsys {

Rational::Rational(long n, long d) {
    if (d == 0) throw InvalidInput("zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.sign() == 0) throw InvalidInput("division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::parse(std::string_view s) {
    auto digits = [](std::string_view t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw InvalidInput("malformed rational \"" + std::string(s) + "\"");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpq_class q;
    q.get_num() = mpz_class(n);
    q.get_den() = mpz_class(std::string(den));
    if (q.get_den() == 0) throw InvalidInput("zero denominator");
    return Rational(q);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace tsys
