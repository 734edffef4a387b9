#include "derivspace/rational.hpp"

#include <cctype>

#include "derivspace/error.hpp"

namespace derivspace {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw DomainError(ErrorKind::FormatError, "bad rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
        throw DomainError(ErrorKind::FormatError, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace derivspace
