#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coex/csm_verify.hpp"
#include "coex/interval_algebra.hpp"
#include "coex/table_algebra.hpp"
#include "coex/witness.hpp"
#include "test_util.hpp"

using namespace coex;
using namespace coex::testutil;

namespace {

CsmPtr product_halves_thirds() {
  auto alg = TupleEffectAlgebra::create(1);
  return csm_product(CsmDomain::make(alg, {tup(alg, {"1/2"}), tup(alg, {"1/3"}), alg->unit()}));
}

}  // namespace

TEST_CASE("witness extraction from a mapping") {
  auto csm = product_halves_thirds();
  const WitnessMapping beta = witness_from_csm(*csm);
  const auto& dom = beta.domain();

  CHECK(beta.value(0) == dom.algebra().unit());      // β(∅) = 1
  CHECK(beta.value(0b001) == dom.at(0));             // β({1/2}) = 1/2
  CHECK(beta.value(0b010) == dom.at(1));             // β({1/3}) = 1/3
  CHECK(verify_witness(beta).ok());
}

TEST_CASE("witness extraction needs an ambient group") {
  auto alg = mo2();
  // a trivially valid mapping over MO2 via S = {1}; the algebra still has no
  // interval embedding, so witness extraction must refuse
  auto search_free = csm_table(
      CsmDomain::make(alg, {alg->unit()}),
      {alg->element("0"), alg->element("0"), alg->element("0"), alg->element("1")});
  CHECK_THROWS_AS(witness_from_csm(*search_free), input_error);
}

TEST_CASE("inclusion-exclusion differences, hand-derived values") {
  auto csm = product_halves_thirds();
  const WitnessMapping beta = witness_from_csm(*csm);

  // identity case: D_β(X, X) = β(X)
  for (SMask x = 0; x <= beta.domain().full_mask(); ++x)
    CHECK(D_beta(beta, x, x) == beta.group().to_group(beta.value(x)));

  // two-term alternating sum: 1 - 1/2
  CHECK(D_beta(beta, 0, 0b001) == vec({"1/2"}));
  // four-term alternating sum over {1/2, 1/3}: 1 - 1/2 - 1/3 + 1/6 = 1/3
  CHECK(D_beta(beta, 0, 0b011) == vec({"1/3"}));
}

TEST_CASE("closed form equals the recursion for any mapping") {
  auto csm = product_halves_thirds();
  const WitnessMapping beta = witness_from_csm(*csm);
  const SMask full = beta.domain().full_mask();
  for (SMask a = 0; a <= full; ++a)
    for_each_submask(a, [&](SMask x) { CHECK(D_beta(beta, x, a) == D_beta_recursive(beta, x, a)); });

  // also for a mapping that is not a witness at all: the recursion is an
  // identity of the alternating sum, not a consequence of the axioms
  auto alg = std::dynamic_pointer_cast<const TupleEffectAlgebra>(csm->domain().algebra_ptr());
  std::vector<Element> arbitrary;
  for (SMask x = 0; x <= full; ++x)
    arbitrary.push_back(alg->element(vec({x % 3 == 0 ? "1/5" : "4/5"})));
  const WitnessMapping fake(csm->domain(), arbitrary);
  for (SMask a = 0; a <= full; ++a)
    for_each_submask(a, [&](SMask x) { CHECK(D_beta(fake, x, a) == D_beta_recursive(fake, x, a)); });
}

TEST_CASE("witness verification catches injected defects") {
  auto csm = product_halves_thirds();
  const WitnessMapping good = witness_from_csm(*csm);
  auto alg = std::dynamic_pointer_cast<const TupleEffectAlgebra>(csm->domain().algebra_ptr());

  std::vector<Element> values = good.values();
  values[0] = alg->element(vec({"9/10"}));  // β(∅) != 1
  const auto r1 = verify_witness(WitnessMapping(good.domain(), values));
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations.front().axiom == "(A1)");

  values = good.values();
  values[0b001] = alg->element(vec({"1/3"}));  // β({1/2}) != 1/2
  const auto r2 = verify_witness(WitnessMapping(good.domain(), values));
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations.front().axiom == "(A2)");

  values = good.values();
  // β of the pair above a singleton makes D_β({1/2},{1/2,1/3}) = 1/2 - 9/10 < 0
  values[0b011] = alg->element(vec({"9/10"}));
  const auto r3 = verify_witness(WitnessMapping(good.domain(), values));
  REQUIRE_FALSE(r3.ok());
  bool has_a3 = false;
  for (const auto& v : r3.violations) has_a3 = has_a3 || v.axiom == "(A3)";
  CHECK(has_a3);
}

TEST_CASE("meet witness over a Boolean algebra") {
  // β(X) = ⋀X over the powerset algebra via its join-meet mapping
  auto alg = powerset_algebra(3);
  auto csm = csm_joinmeet(
      CsmDomain::make(alg, {alg->element("a"), alg->element("b"), alg->element("c")}));
  const WitnessMapping beta = witness_from_csm(*csm);
  CHECK(verify_witness(beta).ok());
  CHECK(check_D_equality(*csm, beta).ok);
}

TEST_CASE("D equality between the mapping and its witness") {
  auto csm = product_halves_thirds();
  const WitnessMapping beta = witness_from_csm(*csm);
  const auto check = check_D_equality(*csm, beta);
  CHECK(check.ok);
  CHECK(check.pairs_checked == 27);  // 3^3 comparable pairs at |S| = 3

  // identity case reduces to β(A) = D(A,A)
  for (SMask a = 0; a <= beta.domain().full_mask(); ++a)
    CHECK(beta.group().to_group(D(*csm, a, a)) == D_beta(beta, a, a));
}

TEST_CASE("a perturbed witness fails the D equality with a named pair") {
  auto csm = product_halves_thirds();
  const WitnessMapping good = witness_from_csm(*csm);
  auto alg = std::dynamic_pointer_cast<const TupleEffectAlgebra>(csm->domain().algebra_ptr());
  std::vector<Element> values = good.values();
  values[0b011] = alg->element(vec({"1/7"}));
  const WitnessMapping bad(good.domain(), values);
  const auto check = check_D_equality(*csm, bad);
  CHECK_FALSE(check.ok);
  REQUIRE(check.mismatch);
  CHECK_FALSE(check.detail.empty());
}

TEST_CASE("witness mappings over chain products") {
  auto alg = MVChainProduct::create({2, 2});
  auto csm = csm_joinmeet(CsmDomain::make(
      alg, {grid(alg, {"1/2", "0"}), grid(alg, {"0", "1/2"}), grid(alg, {"1/2", "1/2"}),
            alg->unit()}));
  const WitnessMapping beta = witness_from_csm(*csm);
  CHECK(verify_witness(beta).ok());
  CHECK(check_D_equality(*csm, beta).ok);
  CHECK(check_D_equality(*csm, beta).pairs_checked == 81);
}

TEST_CASE("witness value tables must be total and well-typed") {
  auto csm = product_halves_thirds();
  CHECK_THROWS_AS(WitnessMapping(csm->domain(), std::vector<Element>{}), input_error);
}
