#include "commord/exact/rational.hpp"

#include <cctype>

#include "commord/errors.hpp"

namespace commord {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw DomainError("malformed rational: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class long constructors assume LP64");

Rational::Rational(std::int64_t n) : v_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (is_zero()) throw NotAUnit("Q");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NotAUnit("Q");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace commord
