#include "coex/rational.hpp"

#include <sstream>

namespace coex {

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return input_error("invalid rational literal: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    const std::string num(text.substr(0, slash));
    const std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) throw bad();
    const Integer d{den};
    if (d <= 0) throw input_error("denominator must be positive in \"" + std::string(text) + "\"");
    return Rational(Integer(num), d);
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

GroupVector gv_add(const GroupVector& a, const GroupVector& b) {
  if (a.size() != b.size()) throw input_error("group vector dimensions differ");
  GroupVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

GroupVector gv_sub(const GroupVector& a, const GroupVector& b) {
  if (a.size() != b.size()) throw input_error("group vector dimensions differ");
  GroupVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool gv_nonnegative(const GroupVector& a) {
  for (const auto& x : a)
    if (x < 0) return false;
  return true;
}

std::string format_group_vector(const GroupVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += format_rational(a[i]);
  }
  out += ")";
  return out;
}

}  // namespace coex
