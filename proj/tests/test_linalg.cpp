#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "su3sb/linalg.hpp"

using namespace su3sb;
using boost::multiprecision::cpp_rational;

namespace {

// Plain Gaussian elimination over boost rationals with partial pivoting by row order.
std::size_t reference_rank(const std::vector<std::vector<long>>& in) {
  if (in.empty()) return 0;
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& row : in) {
    m.emplace_back(row.begin(), row.end());
  }
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      cpp_rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// rows×cols matrix of rank ≤ inner: a product of two random integer factors.
std::vector<std::vector<long>> low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::vector<std::vector<long>> u(rows, std::vector<long>(inner)), v(inner, std::vector<long>(cols));
  for (auto& row : u) for (auto& x : row) x = d(rng);
  for (auto& row : v) for (auto& x : row) x = d(rng);
  std::vector<std::vector<long>> out(rows, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += u[i][k] * v[k][j];
  return out;
}

IntegerMatrix to_mpz(const std::vector<std::vector<long>>& m) {
  IntegerMatrix out;
  for (const auto& row : m) {
    std::vector<mpz_class> r;
    for (long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("fraction-free rank on fixed matrices") {
  CHECK(fraction_free_rank({}) == 0);
  CHECK(fraction_free_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(fraction_free_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(fraction_free_rank({{0, 1}, {1, 0}}) == 2);
  CHECK(fraction_free_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(rational_rank({{Rational::normalize(1, 2), Rational::normalize(1, 3)},
                       {Rational::normalize(3, 2), Rational(1)}}) == 1);
}

TEST_CASE("fraction-free rank agrees with plain elimination on random low-rank matrices") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8, inner = 1 + rng() % 6;
    auto m = low_rank(rng, rows, cols, inner);
    REQUIRE(fraction_free_rank(to_mpz(m)) == reference_rank(m));
  }
}

TEST_CASE("gram rank and span solving") {
  using RState = StateVector<Rational>;
  auto x = RState::monomial(FockMonomial({1, 0, 0}, {0, 0, 0}));
  auto y = RState::monomial(FockMonomial({0, 1, 0}, {0, 0, 0}));
  auto z = RState::monomial(FockMonomial({2, 0, 0}, {0, 0, 0}));
  CHECK(gram_rank_of({x, y, x + y, z}) == 3);
  CHECK(gram_rank_of({}) == 0);

  auto coords = solve_in_span<Rational>({x, y}, Rational(3) * x - Rational::normalize(1, 2) * y);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Rational(3));
  CHECK((*coords)[1] == Rational::normalize(-1, 2));
  CHECK_FALSE(solve_in_span<Rational>({x, y}, z).has_value());

  CHECK(independent_subset<Rational>({x, RState(), y, x + y, z}) == std::vector<std::size_t>{0, 2, 4});
}
