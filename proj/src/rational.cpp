#include "qmlines/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qmlines {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

bool Rational::parse(std::string_view token, Rational* out) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return false;
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    *out = Rational(std::move(q));
    return true;
}

}  // namespace qmlines
