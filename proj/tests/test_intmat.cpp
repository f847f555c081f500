#include <doctest.h>

#include "ggs/intmat.hpp"

using namespace ggs;

TEST_CASE("smith normal form invariant factors") {
  CHECK(smith(IntMat{{1, 0}, {0, 1}}).factors == std::vector<long long>{1, 1});
  CHECK(smith(IntMat{{2, 0}, {0, 3}}).factors == std::vector<long long>{1, 6});
  CHECK(smith(IntMat{{2, 4}, {4, 8}}).factors == std::vector<long long>{2});
  CHECK(smith(IntMat{{1, 2}, {3, 4}}).factors == std::vector<long long>{1, 2});
  CHECK(smith(IntMat(3, 3)).factors.empty());
  // boundary matrix of a triangle: rank 2, torsion-free
  IntMat d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  SmithForm s = smith(d1);
  CHECK(s.rank() == 2);
  CHECK(s.torsion().empty());
}

TEST_CASE("kernel basis spans the kernel") {
  IntMat a{{1, 2, 3}, {2, 4, 6}};
  IntMat k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  CHECK(rank(a) == 1);

  IntMat empty_rows(0, 4);
  CHECK(kernel_basis(empty_rows).cols() == 4);
  CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);
}

TEST_CASE("kernel of an integer matrix is saturated") {
  // kernel of (2 -1) is generated by the primitive (1,2)
  IntMat a{{2, -1}};
  IntMat k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(std::abs(k.at(0, 0)) == 1);
}

TEST_CASE("integer solve") {
  IntMat a{{2, 0}, {0, 3}};
  auto x = solve_integer(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!solve_integer(a, {1, 0}).has_value());
  CHECK(!solve_integer(IntMat{{1}, {1}}, {1, 2}).has_value());

  IntMat b{{1, 1, 1}};
  auto y = solve_integer(b, {5});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] + (*y)[2] == 5);
}

TEST_CASE("quotient shapes") {
  IntMat d{{2, 0}, {0, 3}};
  QuotientShape q = quotient_shape(IntMat::identity(2), d);
  CHECK(q.free_rank == 0);
  CHECK(q.torsion == std::vector<long long>{6});

  IntMat d2(3, 1);
  d2.at(0, 0) = 1;
  d2.at(1, 0) = -1;
  QuotientShape q2 = quotient_shape(IntMat::identity(3), d2);
  CHECK(q2.free_rank == 2);
  CHECK(q2.torsion.empty());

  IntMat narrow(2, 1);
  narrow.at(0, 0) = 1;
  IntMat outside(2, 1);
  outside.at(1, 0) = 1;
  CHECK_THROWS(quotient_shape(narrow, outside));
}

TEST_CASE("matrix product and blocks") {
  IntMat a{{1, 2}, {3, 4}};
  IntMat b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMat{{2, 1}, {4, 3}});
  CHECK(a.block(0, 1, 0, 2) == IntMat{{1, 2}});
  CHECK(hcat(a, b).cols() == 4);
  CHECK(a.without_row_col(0, 1) == IntMat{{3}});
}
