#include "su3sb/linalg.hpp"

#include <utility>

namespace su3sb {

std::size_t fraction_free_rank(IntegerMatrix m) {
  if (m.empty()) {
    return 0;
  }
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[p], m[rank]);
    const mpz_class& pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = pivot * m[i][j] - m[i][col] * m[rank][j];
        // Sylvester's identity: the division is exact.
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const RationalMatrix& m) {
  IntegerMatrix ints;
  ints.reserve(m.size());
  for (const auto& row : m) {
    mpz_class scale = 1;
    for (const auto& x : row) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator().get_mpz_t());
    }
    std::vector<mpz_class> irow;
    irow.reserve(row.size());
    for (const auto& x : row) {
      irow.push_back(x.numerator() * (scale / x.denominator()));
    }
    ints.push_back(std::move(irow));
  }
  return fraction_free_rank(std::move(ints));
}

std::size_t gram_rank_of(const std::vector<StateVector<Rational>>& states) {
  return rational_rank(gram_matrix(states));
}

}  // namespace su3sb
