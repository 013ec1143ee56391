#pragma once

#include <gmpxx.h>

#include <string>

namespace gda {

/// Exact coefficient type. Arbitrary precision, always canonicalized.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(long num, long den = 1)
{
	Rational q(num, den);
	q.canonicalize();
	return q;
}

}  // namespace gda
