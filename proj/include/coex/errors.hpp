#pragma once

#include <stdexcept>

namespace coex {

/// Malformed input: unreadable files, dangling identifiers, elements handed
/// to an algebra that does not own them. Distinct from axiom violations,
/// which are reported as values, never thrown.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic precondition that a verified structure guarantees failed at
/// evaluation time (for example an undefined difference inside D). Carries
/// the axiom whose breach explains the failure.
class axiom_breach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// API misuse: the caller skipped a documented verification step.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coex
