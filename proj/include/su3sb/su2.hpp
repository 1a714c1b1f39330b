#pragma once

#include <vector>

#include "su3sb/operator.hpp"

namespace su3sb {

/// a†^{α₁}…a†^{αₙ}|0⟩ over the two modes a¹, a² (b-modes and a³ stay empty).
struct SU2State {
  std::vector<int> indices;
  StateVector<Rational> vector;

  /// j = n/2
  Rational j() const { return Rational::normalize(static_cast<long>(indices.size()), 2); }
  /// m = (n₁ − n₂)/2
  Rational m() const;
};

/// Each index must be 1 or 2 (std::domain_error otherwise); the empty tuple gives |0⟩.
SU2State su2_irrep_state(const std::vector<int>& indices);

struct SU2Generators {
  Operator<Rational> j_plus;
  Operator<Rational> j_minus;
  Operator<Rational> j_3;
  /// Closed form (N/2)(N/2 + 1) as a number multiplier.
  Operator<Rational> j_squared;
};

SU2Generators su2_generators();

/// J² assembled from the Pauli bilinears: J₃² + ½(J₊J₋ + J₋J₊).
Operator<Rational> su2_casimir_bilinear();

/// Monomials in a¹, a² only with n₁ + n₂ ≤ max_n.
std::vector<StateVector<Rational>> su2_monomial_testset(int max_n);

}  // namespace su3sb
