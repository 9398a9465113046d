#include "orbit_duality/rational.hpp"

#include <charconv>

#include "orbit_duality/errors.hpp"

namespace orbit_duality {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("bad rational '" + whole + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string_view s(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    auto den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash), text), den);
}

Rational frac(const Rational& q) {
    // boost::rational keeps the denominator positive.
    auto num = q.numerator() % q.denominator();
    if (num < 0) num += q.denominator();
    return Rational(num, q.denominator());
}

}  // namespace orbit_duality
