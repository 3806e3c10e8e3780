#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

/// Exact rational scalar used throughout: weights, kernels, measures,
/// curvatures. Canonical form (gcd-reduced, positive denominator) is
/// maintained by the backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string fraction_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p" or "p/q" with optional signs; q must be nonzero.
inline Rational parse_rational(const std::string& s) {
    const auto msg = "not a rational number: '" + s + "'";
    const auto is_integer = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num_s =
        slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_s =
        slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer(num_s) || !is_integer(den_s))
        throw BadParamsError(msg);
    const BigInt num(num_s);
    const BigInt den(den_s);
    if (den == 0) throw BadParamsError(msg);
    return Rational(num, den);
}

}  // namespace ricci
