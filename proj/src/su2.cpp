#include "su3sb/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3sb {

Rational SU2State::m() const {
  auto up = std::count(indices.begin(), indices.end(), 1);
  auto down = static_cast<long>(indices.size()) - up;
  return Rational::normalize(up - down, 2);
}

SU2State su2_irrep_state(const std::vector<int>& indices) {
  auto s = StateVector<Rational>::vacuum();
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    if (*it != 1 && *it != 2) {
      throw std::domain_error("SU(2) index must be 1 or 2");
    }
    s = apply_creation({Species::A, *it}, s);
  }
  return {indices, std::move(s)};
}

SU2Generators su2_generators() {
  auto half = Rational::normalize(1, 2);
  // J^a = a† (σ^a/2) a with σ± = σ¹ ± iσ² giving J₊ = a†¹a₂, J₋ = a†²a₁.
  auto j_plus = a_dag<Rational>(1) * a_ann<Rational>(2);
  auto j_minus = a_dag<Rational>(2) * a_ann<Rational>(1);
  auto j_3 = half * (a_dag<Rational>(1) * a_ann<Rational>(1) - a_dag<Rational>(2) * a_ann<Rational>(2));
  auto j_squared = number_multiplier<Rational>([](int n_a, int) {
    auto j = Rational::normalize(n_a, 2);
    return j * (j + 1);
  });
  return {std::move(j_plus), std::move(j_minus), std::move(j_3), std::move(j_squared)};
}

Operator<Rational> su2_casimir_bilinear() {
  auto g = su2_generators();
  return g.j_3 * g.j_3 + Rational::normalize(1, 2) * (g.j_plus * g.j_minus + g.j_minus * g.j_plus);
}

std::vector<StateVector<Rational>> su2_monomial_testset(int max_n) {
  std::vector<StateVector<Rational>> out;
  for (int n = 0; n <= max_n; ++n) {
    for (int n1 = n; n1 >= 0; --n1) {
      out.push_back(StateVector<Rational>::monomial(FockMonomial({n1, n - n1, 0}, {0, 0, 0})));
    }
  }
  return out;
}

}  // namespace su3sb
