#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "coex/interval_algebra.hpp"
#include "coex/rational.hpp"

namespace coex::testutil {

inline Rational rat(const std::string& text) { return parse_rational(text); }

inline GroupVector vec(std::initializer_list<const char*> parts) {
  GroupVector out;
  for (const char* p : parts) out.push_back(parse_rational(p));
  return out;
}

inline Element tup(const std::shared_ptr<TupleEffectAlgebra>& alg,
                   std::initializer_list<const char*> parts) {
  return alg->element(vec(parts));
}

inline Element grid(const std::shared_ptr<MVChainProduct>& alg,
                    std::initializer_list<const char*> parts) {
  return alg->element(vec(parts));
}

}  // namespace coex::testutil
