#include "doctest.h"
#include "sgd/cayley.hpp"
#include "sgd/error.hpp"
#include "sgd/psl.hpp"
#include "sgd/structure.hpp"

using namespace sgd;

TEST_CASE("finite fields satisfy the field axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const FiniteField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("PSL orders") {
  CHECK(psl_order(2, 5) == 60);
  CHECK(psl_order(2, 7) == 168);
  CHECK(psl_order(3, 2) == 168);
  CHECK(psl_order(2, 4) == 60);
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 7u}, {3u, 2u}}) {
    const ProjectiveGroup g = psl(n, q);
    CHECK(g.group.order() == psl_order(n, q));
  }
  CHECK(is_simple(psl(2, 7).group.table()));
  CHECK_THROWS_AS(psl(3, 5, 1000), Error);
}

TEST_CASE("row reduction bound") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const RowReductionReport r = psl_row_reduction_check(2, q);
    CHECK(r.bound == 4);
    CHECK(r.holds);
    CHECK(r.max_length <= 4);
  }
  CHECK(psl_row_reduction_check(3, 2).max_length == 6);
}
