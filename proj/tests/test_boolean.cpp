#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coex/subset_family.hpp"

using namespace coex;

namespace {

// positions: a=0, b=1, c=2, d=3
constexpr SMask A = 0b0001;
constexpr SMask AB = 0b0011;

SubsetFamily fam(SMask ground, std::initializer_list<SMask> subsets) {
  return make_family(ground, std::vector<SMask>(subsets));
}

}  // namespace

TEST_CASE("local and global subset indexing") {
  const SMask ground = 0b1010;  // {b, d}
  CHECK(subset_count(ground) == 4);
  CHECK(local_to_global(0b01, ground) == 0b0010);
  CHECK(local_to_global(0b10, ground) == 0b1000);
  CHECK(global_to_local(0b1010, ground) == 0b11);
  CHECK_THROWS_AS(global_to_local(0b0100, ground), input_error);
}

TEST_CASE("embedding matches the direct expansion") {
  // A={a}, B={a,b}, family {{a}} expands to {{a},{a,b}}
  const SubsetFamily x = fam(A, {0b0001});
  const SubsetFamily embedded = g_embed(x, AB);
  CHECK(embedded == fam(AB, {0b0001, 0b0011}));

  CHECK(g_embed(family_empty(A), AB) == family_empty(AB));
  CHECK(g_embed(family_full(A), AB) == family_full(AB));
  CHECK_THROWS_AS(g_embed(fam(AB, {0b0001}), A), input_error);
}

TEST_CASE("embeddings compose: g^B_C ∘ g^A_B = g^A_C, exhaustive for |S| = 4") {
  const SMask full = 0b1111;
  for (SMask a = 0; a <= full; ++a) {
    const std::uint64_t families = std::uint64_t{1} << subset_count(a);
    for (SMask b = a;; b = (b + 1) | a) {  // supersets of a
      for (SMask c = b;; c = (c + 1) | b) {  // supersets of b
        for (std::uint64_t m = 0; m < families; ++m) {
          const SubsetFamily x{a, m};
          CHECK(g_embed(x, c) == g_embed(g_embed(x, b), c));
        }
        if (c == full) break;
      }
      if (b == full) break;
    }
  }
}

TEST_CASE("embedding homomorphism properties, exhaustive on small grounds") {
  for (SMask a : {SMask{0b001}, SMask{0b011}, SMask{0b101}, SMask{0b111}}) {
    const SMask b = 0b1111;
    const unsigned count = subset_count(a);
    const std::uint64_t families = std::uint64_t{1} << count;
    // injectivity
    std::vector<std::uint64_t> images;
    for (std::uint64_t m = 0; m < families; ++m) images.push_back(g_embed({a, m}, b).members);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j) CHECK(images[i] != images[j]);
    // union, intersection, complement
    for (std::uint64_t m1 = 0; m1 < families; ++m1)
      for (std::uint64_t m2 = 0; m2 < families; ++m2) {
        const SubsetFamily f1{a, m1}, f2{a, m2};
        CHECK(g_embed({a, m1 | m2}, b).members == (images[m1] | images[m2]));
        CHECK(g_embed({a, m1 & m2}, b).members == (images[m1] & images[m2]));
      }
    const std::uint64_t full_a = families - 1;
    const std::uint64_t full_b = (std::uint64_t{1} << subset_count(b)) - 1;
    for (std::uint64_t m = 0; m < families; ++m)
      CHECK(g_embed({a, full_a & ~m}, b).members == (full_b & ~images[m]));
  }
}

TEST_CASE("equivalence of pairs under the directed system") {
  const SubsetFamily x = fam(A, {0b0001});
  CHECK(equiv(x, g_embed(x, AB)));
  CHECK(equiv(family_empty(A), family_empty(0b0010)));
  CHECK_FALSE(equiv(fam(0b0001, {0b0001}), fam(0b0010, {0b0010})));
}

TEST_CASE("equiv is an equivalence relation on sampled pairs") {
  std::mt19937 rng(17);
  const SMask full = 0b1111;
  auto random_pair = [&]() {
    const SMask ground = static_cast<SMask>(rng()) & full;
    return SubsetFamily{ground, rng() & ((std::uint64_t{1} << subset_count(ground)) - 1)};
  };
  for (int round = 0; round < 500; ++round) {
    const SubsetFamily p = random_pair(), q = random_pair(), r = random_pair();
    CHECK(equiv(p, p));
    CHECK(equiv(p, q) == equiv(q, p));
    if (equiv(p, q) && equiv(q, r)) CHECK(equiv(p, r));
    // canonicalization respects equivalence
    CHECK(equiv(p, q) == (canonicalize(p, full) == canonicalize(q, full)));
  }
}

TEST_CASE("limit operations on canonical representatives") {
  const SMask full = 0b0011;
  const SubsetFamily xa = canonicalize(fam(0b0001, {0b0001}), full);
  const SubsetFamily xb = canonicalize(fam(0b0010, {0b0010}), full);
  const SubsetFamily joined = limit_join(xa, xb, full);
  // {{a},{a,b}} ∪ {{b},{a,b}} = {{a},{b},{a,b}}
  CHECK(joined == fam(full, {0b0001, 0b0010, 0b0011}));

  CHECK(limit_join(xa, limit_complement(xa, full), full) == family_full(full));
  CHECK(limit_meet(xa, family_full(full), full) == xa);

  // the pairwise join at index A ∪ B agrees with the canonical join
  const SubsetFamily pj = pair_join(fam(0b0001, {0b0001}), fam(0b0010, {0b0010}));
  CHECK(equiv(pj, joined));
}

TEST_CASE("canonical forms satisfy Boolean axioms over three generators") {
  const SMask full = 0b0111;
  const std::uint64_t all = (std::uint64_t{1} << subset_count(full)) - 1;
  std::mt19937_64 rng(23);
  for (int round = 0; round < 2000; ++round) {
    const SubsetFamily x{full, rng() & all}, y{full, rng() & all}, z{full, rng() & all};
    CHECK(limit_join(x, y, full) == limit_join(y, x, full));
    CHECK(limit_meet(x, limit_join(y, z, full), full) ==
          limit_join(limit_meet(x, y, full), limit_meet(x, z, full), full));
    CHECK(limit_meet(x, limit_complement(x, full), full) == family_empty(full));
  }
}
