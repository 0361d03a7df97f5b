#include "coex/observable.hpp"

#include <random>
#include <sstream>

namespace coex {

namespace {

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 22;

}  // namespace

Observable::Observable(std::vector<Element> atom_values) : atoms_(std::move(atom_values)) {
  if (atoms_.empty()) throw input_error("an observable needs at least one atom");
  if (atoms_.size() > 32) throw input_error("observables support at most 32 atoms");
  codomain_ = atoms_.front().algebra_ptr();
  for (const Element& a : atoms_)
    if (a.algebra_ptr().get() != codomain_.get())
      throw input_error("atom values of an observable must share one algebra");
}

std::optional<Element> Observable::eval(std::uint64_t x) const {
  if (x > top_mask()) throw input_error("domain mask out of range");
  Element acc = codomain_->zero();
  for (unsigned i = 0; i < atom_count(); ++i) {
    if (!(x >> i & 1u)) continue;
    auto next = codomain_->oplus(acc, atoms_[i]);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

Element Observable::eval_checked(std::uint64_t x) const {
  auto v = eval(x);
  if (!v)
    throw axiom_breach("additive extension undefined on domain element " + std::to_string(x) +
                       ": the atom values do not sum inside the algebra");
  return *v;
}

ObservableCheck verify_observable(const Observable& alpha, VerifyMode mode, std::uint64_t samples,
                                  std::uint64_t seed) {
  ObservableCheck out;
  const auto fail = [&](std::string detail) {
    out.ok = false;
    out.detail = std::move(detail);
    return out;
  };

  const auto bottom = alpha.eval(0);
  if (!bottom || !(*bottom == alpha.codomain().zero())) return fail("α(⊥) != 0");
  const auto top = alpha.eval(alpha.top_mask());
  if (!top) return fail("α(⊤) undefined: the atom values are not a decomposition of unit");
  if (!(*top == alpha.codomain().unit())) return fail("α(⊤) = " + top->str() + " != 1");

  const bool exhaustive = mode == VerifyMode::Exhaustive ||
                          (mode == VerifyMode::Auto && alpha.domain_size() <= kExhaustiveDomainLimit);
  out.exhaustive = exhaustive;

  const auto check_pair = [&](std::uint64_t x, std::uint64_t y,
                              const std::optional<Element>& vx,
                              const std::optional<Element>& vy,
                              const std::optional<Element>& vxy) -> bool {
    if (!vx || !vy || !vxy) {
      fail("additive extension undefined near the pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      return false;
    }
    const auto sum = oplus(*vx, *vy);
    if (!sum) {
      fail("α(x) ⊕ α(y) undefined for disjoint x=" + std::to_string(x) + ", y=" + std::to_string(y));
      return false;
    }
    if (!(*sum == *vxy)) {
      fail("additivity fails at x=" + std::to_string(x) + ", y=" + std::to_string(y) + ": α(x∨y)=" +
           vxy->str() + " but α(x)⊕α(y)=" + sum->str());
      return false;
    }
    return true;
  };

  if (exhaustive) {
    const std::uint64_t size = alpha.domain_size();
    std::vector<std::optional<Element>> cache(size);
    for (std::uint64_t x = 0; x < size; ++x) cache[x] = alpha.eval(x);
    for (std::uint64_t x = 0; x < size; ++x) {
      const std::uint64_t rest = alpha.top_mask() & ~x;
      // submask walk over the complement enumerates every disjoint partner
      std::uint64_t y = 0;
      while (true) {
        ++out.pairs_checked;
        if (!check_pair(x, y, cache[x], cache[y], cache[x | y])) return out;
        if (y == rest) break;
        y = (y - rest) & rest;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::uint64_t x = rng() & alpha.top_mask();
      const std::uint64_t y = rng() & alpha.top_mask() & ~x;
      ++out.pairs_checked;
      if (!check_pair(x, y, alpha.eval(x), alpha.eval(y), alpha.eval(x | y))) return out;
    }
  }

  out.ok = true;
  std::ostringstream detail;
  detail << "bounds and additivity hold on " << out.pairs_checked << (exhaustive ? " (all)" : " sampled")
         << " disjoint pairs";
  out.detail = detail.str();
  return out;
}

std::vector<std::uint64_t> preimages_of(const Observable& alpha, const Element& target) {
  if (alpha.domain_size() > kScanLimit)
    throw input_error("observable domain too large for an exhaustive preimage scan");
  if (target.algebra_ptr().get() != alpha.codomain_ptr().get())
    throw input_error("target element does not live in the observable codomain");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < alpha.domain_size(); ++x) {
    const auto v = alpha.eval(x);
    if (v && *v == target) out.push_back(x);
  }
  return out;
}

std::vector<RangeWitness> range_contains(const Observable& alpha, const std::vector<Element>& targets) {
  if (alpha.domain_size() > kScanLimit)
    throw input_error("observable domain too large for an exhaustive range scan");
  std::vector<RangeWitness> out;
  out.reserve(targets.size());
  for (const Element& t : targets) {
    if (t.algebra_ptr().get() != alpha.codomain_ptr().get())
      throw input_error("target element does not live in the observable codomain");
    RangeWitness w{t, std::nullopt};
    for (std::uint64_t x = 0; x < alpha.domain_size(); ++x) {
      const auto v = alpha.eval(x);
      if (v && *v == t) {
        w.preimage = x;
        break;
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace coex
