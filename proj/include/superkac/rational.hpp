#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superkac {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer part of a rational that is known to be integral and small.
long to_long(const Rational& q);

}  // namespace superkac
