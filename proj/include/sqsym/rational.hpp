#pragma once

#include <gmpxx.h>

#include <string>

namespace sqsym {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// (-1)^k as a rational.
inline Rational sign_of(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace sqsym
