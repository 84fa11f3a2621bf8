#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bootlab/arithmetic.hpp"
#include "bootlab/util.hpp"

using namespace bootlab;

TEST_CASE("verify_solution_free examples") {
  // {1} at p=11, c=4: the oracle finds the aggregated relation 4+4+3 = 11
  DilationSet s1{11, {1}, 4, false};
  auto r1 = verify_solution_free(s1);
  CHECK_FALSE(r1.solution_free);
  REQUIRE(r1.violation.has_value());
  CHECK(relation_is_violation(11, r1.violation->alpha, r1.violation->elems));

  // {1,2} at p=7, c=4: violated; (4,-2,0) on (1,2,*) is a confirmed witness
  DilationSet s2{7, {1, 2}, 4, false};
  CHECK_FALSE(verify_solution_free(s2).solution_free);
  CHECK(relation_is_violation(7, {4, -2, 0}, {1, 2, 1}));

  // empty set is trivially solution-free
  DilationSet s3{101, {}, 4, false};
  CHECK(verify_solution_free(s3).solution_free);

  // the trivial relation x - x = 0 is not a violation
  CHECK_FALSE(relation_is_violation(11, {1, -1, 0}, {5, 5, 1}));
  // 2*3 - 1*6 = 0 with distinct elements on the support is one
  CHECK(relation_is_violation(11, {2, -1, 0}, {3, 6, 1}));
  // non-relations are never violations
  CHECK_FALSE(relation_is_violation(11, {1, -1, 0}, {5, 3, 1}));
}

TEST_CASE("verify is symmetric under permuting coefficient slots") {
  SplitMix64 rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    long long p = 11 + 2 * rng.next_below(40);
    std::array<long long, 3> alpha, elems;
    for (int i = 0; i < 3; ++i) {
      alpha[i] = static_cast<long long>(rng.next_below(9)) - 4;
      elems[i] = 1 + static_cast<long long>(rng.next_below(p - 1));
    }
    bool base = relation_is_violation(p, alpha, elems);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& pi : perms) {
      std::array<long long, 3> a2{alpha[pi[0]], alpha[pi[1]], alpha[pi[2]]};
      std::array<long long, 3> e2{elems[pi[0]], elems[pi[1]], elems[pi[2]]};
      CHECK(relation_is_violation(p, a2, e2) == base);
    }
  }
}

TEST_CASE("exhaustive best sets") {
  // p <= 3c: every non-empty set has a same-element violation
  CHECK(exhaustive_best_set(7, 4).elements.empty());
  // p=31, c=4: every pair is killed by an aggregated two-slot relation, so
  // the maximum verified set is a singleton
  auto b31 = exhaustive_best_set(31, 4);
  CHECK(b31.elements == std::vector<long long>{1});
  CHECK(b31.verified);
  // p=61 admits a verified pair
  auto b61 = exhaustive_best_set(61, 4);
  CHECK(b61.elements.size() == 2);
  CHECK(verify_solution_free(b61).solution_free);
  // determinism
  CHECK(exhaustive_best_set(61, 4).elements == b61.elements);
}

TEST_CASE("subset closure of verified sets") {
  auto base = exhaustive_best_set(199, 4);
  REQUIRE(base.elements.size() >= 2);
  CHECK(base.verified);
  for (std::size_t drop = 0; drop < base.elements.size(); ++drop) {
    DilationSet sub{base.p, {}, base.coeff_bound, false};
    for (std::size_t i = 0; i < base.elements.size(); ++i)
      if (i != drop) sub.elements.push_back(base.elements[i]);
    CHECK(verify_solution_free(sub).solution_free);
  }
}

TEST_CASE("verified sets contain no 3-term progression") {
  // x + y - 2z = 0 with distinct elements is an instance of the checked
  // relations whenever c >= 2
  for (long long p : {61LL, 101LL, 199LL}) {
    auto s = exhaustive_best_set(p, 4);
    for (long long x : s.elements)
      for (long long y : s.elements)
        for (long long z : s.elements) {
          if (x == z || y == z || x == y) continue;
          CHECK((x + y - 2 * z) % p != 0);
        }
  }
}

TEST_CASE("behrend sphere sets") {
  for (long long p : {997LL, 4999LL, 10007LL}) {
    auto s = behrend_sphere_set(p, 4);
    CHECK(s.verified);
    CHECK(verify_solution_free(s).solution_free);
    for (long long e : s.elements) {
      CHECK(e >= 1);
      CHECK(e < p);
    }
  }
  // beats the exhaustive sizes seen at desk-feasible moduli (<= 3 there)
  CHECK(behrend_sphere_set(4999, 4).elements.size() > exhaustive_best_set(199, 4).elements.size());
}

TEST_CASE("dilation set serialization") {
  auto s = exhaustive_best_set(61, 4);
  std::ostringstream os;
  write_dilation_set(os, s);
  std::istringstream is(os.str());
  auto back = read_dilation_set(is);
  CHECK(back.p == s.p);
  CHECK(back.coeff_bound == s.coeff_bound);
  CHECK(back.elements == s.elements);
  CHECK(back.verified);

  std::istringstream bad("11 4\n0\n");
  CHECK_THROWS_AS(read_dilation_set(bad), InputError);
}
