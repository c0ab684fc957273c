#include <doctest.h>

#include <random>

#include "cubicones/linalg.hpp"

using namespace cubicones;

namespace {

QVector qv(std::initializer_list<long long> xs) {
  QVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("solve_linear identity and elimination") {
  QMatrix id = QMatrix::identity(2);
  auto x = solve_linear(id, {Rational(3), Rational(5, 2)});
  REQUIRE(x.has_value());
  CHECK(*x == QVector{Rational(3), Rational(5, 2)});

  // rank-deficient inconsistent system
  QMatrix a({qv({1, 1}), qv({2, 2})});
  CHECK_FALSE(solve_linear(a, {Rational(1), Rational(3)}).has_value());

  // consistent rank-deficient system has a solution
  auto y = solve_linear(a, {Rational(1), Rational(2)});
  REQUIRE(y.has_value());
  CHECK((a * *y) == QVector{Rational(1), Rational(2)});

  // hand elimination: 2x - y = 0, y = 2 gives (1, 2)
  QMatrix b({qv({2, -1}), qv({0, 1})});
  auto z = solve_linear(b, {Rational(0), Rational(2)});
  REQUIRE(z.has_value());
  CHECK(*z == QVector{Rational(1), Rational(2)});

  CHECK_THROWS_AS(solve_linear(b, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("solutions satisfy the system exactly") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    QMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = Rational(d(rng));
    QVector b(rows);
    for (auto& x : b) x = Rational(d(rng));
    if (auto x = solve_linear(a, b)) CHECK(a * *x == b);
  }
}

TEST_CASE("kernel_basis dimensions and canonical form") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  CHECK(kernel_basis(QMatrix(2, 2)).size() == 2);

  // one-row matrix: kernel dimension is columns minus one
  QMatrix rel({qv({20, 24, 12, 2, -8, -12})});
  const auto basis = kernel_basis(rel);
  CHECK(basis.size() == 5);
  for (const auto& v : basis) {
    CHECK(is_zero_vector(rel * v));
    for (const auto& x : v) CHECK(x.is_integer());
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      CHECK(x.sign() > 0);  // positive leading entry
      break;
    }
  }
}

TEST_CASE("kernel vectors span the null space") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> d(-5, 5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + t % 3, cols = 2 + t % 4;
    QMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = Rational(d(rng));
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == cols - rank(a));
    for (const auto& v : basis) CHECK(is_zero_vector(a * v));
  }
}

TEST_CASE("primitive scaling") {
  CHECK(primitive(qv({2, 4, 6})) == qv({1, 2, 3}));
  CHECK(primitive({Rational(1, 2), Rational(1, 3)}) == qv({3, 2}));
  CHECK(primitive(qv({-2, 4})) == qv({-1, 2}));           // sign preserved
  CHECK(primitive_signed(qv({-2, 4})) == qv({1, -2}));    // leading made positive
  CHECK(positively_proportional(qv({10, 12, 6, 1}), qv({20, 24, 12, 2})));
  CHECK_FALSE(positively_proportional(qv({1, 2}), qv({-1, -2})));
  CHECK_FALSE(positively_proportional(qv({1, 2}), qv({1, 3})));
}
