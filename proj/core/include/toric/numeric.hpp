#pragma once

// Exact arbitrary-precision scalars. Every quantity in this library is an
// Int or a Rat; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "toric/errors.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& i) { return i.sign(); }

Int floor_of(const Rat& r);
Int ceil_of(const Rat& r);

// Canonical text form: "p" for integers, "p/q" otherwise, lowest terms.
std::string rat_to_string(const Rat& r);

// Strict inverse of rat_to_string. Accepts optional sign, digits and a single
// '/'. Decimal notation is rejected.
Rat rat_from_string(const std::string& s);

std::string int_to_string(const Int& i);

}  // namespace toric
