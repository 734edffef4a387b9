#ifndef DERIVSPACE_RATIONAL_HPP
#define DERIVSPACE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace derivspace {

/// GMP rationals are kept canonical (lowest terms, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, and GMP arithmetic requires canonical operands.
inline Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws DomainError(FormatError) on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace derivspace

#endif // DERIVSPACE_RATIONAL_HPP
