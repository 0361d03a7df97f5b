#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coex/errors.hpp"

namespace coex {

/// Exact rational carrier for every coordinate in the library. No floating
/// point arithmetic appears anywhere; equality is decidable exact equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or "-p/q". The denominator must be positive.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise, always in lowest terms.
std::string format_rational(const Rational& value);

/// An element of the ambient partially ordered abelian group Q^n with
/// componentwise order. Interval effect algebras embed into these.
using GroupVector = std::vector<Rational>;

GroupVector gv_add(const GroupVector& a, const GroupVector& b);
GroupVector gv_sub(const GroupVector& a, const GroupVector& b);
bool gv_nonnegative(const GroupVector& a);
std::string format_group_vector(const GroupVector& a);

}  // namespace coex
