#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coex/interval_algebra.hpp"
#include "coex/mv_check.hpp"
#include "coex/table_algebra.hpp"
#include "test_util.hpp"

using namespace coex;
using namespace coex::testutil;

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(rat("2/4")) == "1/2");
  CHECK(format_rational(rat("-1/6")) == "-1/6");
  CHECK(format_rational(rat("3")) == "3");
  CHECK(rat("1/2") + rat("1/3") == rat("5/6"));
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
  CHECK_THROWS_AS(parse_rational("x"), input_error);
  CHECK_THROWS_AS(parse_rational(""), input_error);
}

TEST_CASE("tuple partial sum and difference") {
  auto alg = TupleEffectAlgebra::create(2);
  const Element a = tup(alg, {"1/2", "1/3"});
  const auto sum = oplus(a, a);
  REQUIRE(sum);
  CHECK(*sum == tup(alg, {"1", "2/3"}));

  auto scalar = TupleEffectAlgebra::create(1);
  CHECK_FALSE(oplus(tup(scalar, {"3/4"}), tup(scalar, {"1/2"})));

  const Element comp = orthocomplement(a);
  const auto unit_sum = oplus(a, comp);
  REQUIRE(unit_sum);
  CHECK(*unit_sum == alg->unit());

  CHECK(ominus(alg->unit(), a) == comp);
  CHECK(*ominus(tup(scalar, {"1/2"}), tup(scalar, {"1/2"})) == scalar->zero());
  CHECK_FALSE(ominus(tup(scalar, {"1/4"}), tup(scalar, {"1/2"})));
}

TEST_CASE("elements of distinct algebras do not mix") {
  auto a1 = TupleEffectAlgebra::create(1);
  auto a2 = TupleEffectAlgebra::create(1);
  CHECK_THROWS_AS((void)oplus(a1->unit(), a2->unit()), input_error);
  CHECK_THROWS_AS((void)(a1->unit() == a2->unit()), input_error);
}

TEST_CASE("big_oplus basics") {
  auto alg = TupleEffectAlgebra::create(1);
  CHECK(*big_oplus(*alg, std::vector<Element>{}) == alg->zero());

  const Element a = tup(alg, {"2/7"});
  CHECK(*big_oplus(*alg, std::vector<Element>{a, orthocomplement(a)}) == alg->unit());

  const std::vector<Element> over = {tup(alg, {"1/3"}), tup(alg, {"1/3"}), tup(alg, {"1/2"})};
  CHECK_FALSE(big_oplus(*alg, over));
}

TEST_CASE("big_oplus is order independent") {
  auto alg = TupleEffectAlgebra::create(2);
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::vector<Element> family;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      GroupVector v = {Rational(rng() % 4, 6), Rational(rng() % 4, 6)};
      family.push_back(alg->element(std::move(v)));
    }
    const auto direct = big_oplus(*alg, family);
    std::vector<Element> shuffled = family;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto permuted = big_oplus(*alg, shuffled);
    CHECK(direct.has_value() == permuted.has_value());
    if (direct && permuted) CHECK(*direct == *permuted);
  }
}

TEST_CASE("two-element algebra validates") {
  TableAlgebraSpec spec;
  spec.elements = {"0", "1"};
  spec.zero = "0";
  spec.unit = "1";
  spec.sums = {{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}};
  auto alg = TableEffectAlgebra::create(spec);
  CHECK(validate_effect_algebra(*alg).valid());
}

TEST_CASE("three-chain validates and matches the hand oracle") {
  auto alg = chain_algebra(2);  // {0, 1/2, 1} with h + h = 1
  CHECK(validate_effect_algebra(*alg).valid());

  // hand oracle: entry (i, j) defined iff i + j <= 2, value i + j
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; j <= 2; ++j) {
      const auto cell = alg->sum_entry(*alg->index_of(format_rational(Rational(i, 2))),
                                       *alg->index_of(format_rational(Rational(j, 2))));
      if (i + j <= 2) {
        REQUIRE(cell.has_value());
        CHECK(alg->id_of(*cell) == format_rational(Rational(i + j, 2)));
      } else {
        CHECK_FALSE(cell.has_value());
      }
    }
}

TEST_CASE("duplicate complements are an E3 violation") {
  TableAlgebraSpec spec;
  spec.elements = {"0", "a", "b", "1"};
  spec.zero = "0";
  spec.unit = "1";
  spec.sums = {{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"0", "a", "a"},
               {"a", "0", "a"}, {"0", "b", "b"}, {"b", "0", "b"}, {"a", "b", "1"},
               {"b", "a", "1"}, {"a", "a", "1"}};
  auto alg = TableEffectAlgebra::create(spec);
  const auto report = validate_effect_algebra(*alg);
  CHECK_FALSE(report.valid());
  const bool has_e3 = std::any_of(report.violations.begin(), report.violations.end(),
                                  [](const TableViolation& v) { return v.axiom == "E3"; });
  CHECK(has_e3);
}

TEST_CASE("dangling identifiers are input errors, not violations") {
  TableAlgebraSpec spec;
  spec.elements = {"0", "1"};
  spec.zero = "0";
  spec.unit = "1";
  spec.sums = {{"0", "ghost", "1"}};
  CHECK_THROWS_AS(TableEffectAlgebra::create(spec), input_error);
}

TEST_CASE("missing symmetric entry is an E1 violation") {
  TableAlgebraSpec spec;
  spec.elements = {"0", "1"};
  spec.zero = "0";
  spec.unit = "1";
  spec.sums = {{"0", "0", "0"}, {"0", "1", "1"}};
  const auto report = validate_effect_algebra(*TableEffectAlgebra::create(spec));
  CHECK_FALSE(report.valid());
  CHECK(report.violations.front().axiom == "E1");
}

TEST_CASE("factories produce valid algebras") {
  CHECK(validate_effect_algebra(*powerset_algebra(2)).valid());
  CHECK(validate_effect_algebra(*powerset_algebra(3)).valid());
  CHECK(validate_effect_algebra(*chain_algebra(4)).valid());
  CHECK(validate_effect_algebra(*mo2()).valid());
}

TEST_CASE("MV check: chain products sweep clean") {
  auto alg = MVChainProduct::create({3, 4});
  const auto check = is_mv_effect_algebra(alg);
  CHECK(check.is_mv);
}

TEST_CASE("MV check: Boolean powerset is MV") {
  CHECK(is_mv_effect_algebra(powerset_algebra(2)).is_mv);
}

TEST_CASE("MV check: MO2 fails with a cross-block witness") {
  auto alg = mo2();
  CHECK(alg->lattice_ordered());
  const auto check = is_mv_effect_algebra(alg);
  CHECK_FALSE(check.is_mv);
  CHECK(check.failed_clause == "(b)");
  REQUIRE(check.counterexample);
  const auto& [x, y] = *check.counterexample;
  // the witness pair comes from distinct blocks
  const std::string xs = x.str(), ys = y.str();
  CHECK(xs.front() != ys.front());
  CHECK(alg->meet(x, y) == alg->zero());
}

TEST_CASE("MV identity (a∨b)⊖a = b⊖(a∧b) over small chain products") {
  for (auto alg : {MVChainProduct::create({3, 4}), MVChainProduct::create({5, 6, 2})}) {
    REQUIRE(alg->size() <= 200);
    for (std::size_t i = 0; i < alg->size(); ++i)
      for (std::size_t j = 0; j < alg->size(); ++j) {
        const Element a = alg->element_at(i), b = alg->element_at(j);
        const auto lhs = ominus(alg->join(a, b), a);
        const auto rhs = ominus(b, alg->meet(a, b));
        REQUIRE(lhs);
        REQUIRE(rhs);
        CHECK(*lhs == *rhs);
      }
  }
}

TEST_CASE("effect algebra laws across carriers") {
  auto chains = MVChainProduct::create({2, 3});
  auto table = powerset_algebra(3);

  const auto sweep = [](const auto& alg) {
    for (std::size_t i = 0; i < alg->size(); ++i) {
      const Element a = alg->element_at(i);
      CHECK(*oplus(a, alg->zero()) == a);
      CHECK(orthocomplement(orthocomplement(a)) == a);
      if (oplus(a, alg->unit())) CHECK(a == alg->zero());
      for (std::size_t j = 0; j < alg->size(); ++j) {
        const Element b = alg->element_at(j);
        if (!leq(a, b)) continue;
        const auto diff = ominus(b, a);
        REQUIRE(diff);
        CHECK(*oplus(a, *diff) == b);
      }
    }
  };
  sweep(chains);
  sweep(table);
}

TEST_CASE("tuple difference round trip on sampled pairs") {
  auto alg = TupleEffectAlgebra::create(3);
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    GroupVector av(3), bv(3);
    for (int i = 0; i < 3; ++i) {
      av[i] = Rational(rng() % 7, 6);
      bv[i] = Rational(rng() % 7, 6);
    }
    const Element a = alg->element(av), b = alg->element(bv);
    if (!leq(a, b)) continue;
    CHECK(*oplus(a, *ominus(b, a)) == b);
  }
}

TEST_CASE("interval embeddings expose the ambient group") {
  auto chains = MVChainProduct::create({2, 2});
  REQUIRE(chains->interval());
  CHECK(chains->interval()->to_group(grid(chains, {"1/2", "1"})) == vec({"1/2", "1"}));
  CHECK(chains->interval()->from_group(vec({"1/2", "0"})).has_value());
  CHECK_FALSE(chains->interval()->from_group(vec({"1/3", "0"})).has_value());

  auto table = chain_algebra(2);
  REQUIRE(table->interval());
  CHECK(table->interval()->to_group(table->element("1/2")) == vec({"1/2"}));

  CHECK(mo2()->interval() == nullptr);
}

TEST_CASE("non-lattice input to the MV check is an input error") {
  // derived order where {x, y} has the two maximal lower bounds p and q,
  // so no meet exists; the MV check must refuse rather than sweep
  TableAlgebraSpec spec;
  spec.elements = {"0", "p", "q", "x", "y", "1"};
  spec.zero = "0";
  spec.unit = "1";
  auto add = [&](const char* a, const char* b, const char* c) {
    spec.sums.push_back({a, b, c});
    if (std::string(a) != b) spec.sums.push_back({b, a, c});
  };
  for (const char* e : {"0", "p", "q", "x", "y", "1"}) add("0", e, e);
  add("p", "p", "x");
  add("q", "q", "x");
  add("p", "q", "y");
  auto alg = TableEffectAlgebra::create(spec);
  CHECK_FALSE(alg->lattice_ordered());
  CHECK_THROWS_AS(is_mv_effect_algebra(alg), input_error);
}
