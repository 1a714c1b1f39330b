#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "su3sb/fock.hpp"
#include "su3sb/report.hpp"

namespace su3sb {

/// Multiplier f(N_a, N_b) acting diagonally on monomials.
using NumberFunction = std::function<Rational(int n_a, int n_b)>;

/// Linear map on StateVectors. Composition `p * q` applies q first.
template <Scalar S>
class Operator {
public:
  using Map = std::function<StateVector<S>(const StateVector<S>&)>;

  /// The zero operator.
  Operator() : map_([](const StateVector<S>&) { return StateVector<S>(); }) {}
  explicit Operator(Map map) : map_(std::move(map)) {}

  StateVector<S> operator()(const StateVector<S>& s) const { return map_(s); }

  static Operator identity() {
    return Operator([](const StateVector<S>& s) { return s; });
  }

  static Operator scalar(S c) {
    return Operator([c = std::move(c)](const StateVector<S>& s) { return c * s; });
  }

  friend Operator operator*(Operator p, Operator q) {
    return Operator([p = std::move(p), q = std::move(q)](const StateVector<S>& s) { return p(q(s)); });
  }

  friend Operator operator+(Operator p, Operator q) {
    return Operator([p = std::move(p), q = std::move(q)](const StateVector<S>& s) { return p(s) + q(s); });
  }

  friend Operator operator-(Operator p, Operator q) {
    return Operator([p = std::move(p), q = std::move(q)](const StateVector<S>& s) { return p(s) - q(s); });
  }

  friend Operator operator*(S c, Operator p) {
    return Operator([c = std::move(c), p = std::move(p)](const StateVector<S>& s) { return c * p(s); });
  }

  friend Operator operator-(Operator p) { return S(Rational(-1)) * std::move(p); }

private:
  Map map_;
};

template <Scalar S>
Operator<S> creation(Mode mode) {
  return Operator<S>([mode](const StateVector<S>& s) { return apply_creation(mode, s); });
}

template <Scalar S>
Operator<S> annihilation(Mode mode) {
  return Operator<S>([mode](const StateVector<S>& s) { return apply_annihilation(mode, s); });
}

/// a†^i, a_i, b†_i, b^i.
template <Scalar S>
Operator<S> a_dag(int i) {
  return creation<S>({Species::A, i});
}
template <Scalar S>
Operator<S> a_ann(int i) {
  return annihilation<S>({Species::A, i});
}
template <Scalar S>
Operator<S> b_dag(int i) {
  return creation<S>({Species::B, i});
}
template <Scalar S>
Operator<S> b_ann(int i) {
  return annihilation<S>({Species::B, i});
}

/// Multiplies each monomial M by f(N_a(M), N_b(M)), evaluated on the state it receives.
template <Scalar S>
Operator<S> number_multiplier(NumberFunction f) {
  return Operator<S>([f = std::move(f)](const StateVector<S>& s) {
    StateVector<S> out;
    for (const auto& [m, c] : s.terms()) {
      out.add_term(m, c * S(f(m.n_a(), m.n_b())));
    }
    return out;
  });
}

template <Scalar S>
Operator<S> number_a() {
  return number_multiplier<S>([](int n_a, int) { return Rational(n_a); });
}

template <Scalar S>
Operator<S> number_b() {
  return number_multiplier<S>([](int, int n_b) { return Rational(n_b); });
}

/// s ↦ p(q(s)) − q(p(s)).
template <Scalar S>
Operator<S> op_commutator(const Operator<S>& p, const Operator<S>& q) {
  return p * q - q * p;
}

template <Scalar S>
Operator<S> power(const Operator<S>& p, int exponent) {
  return Operator<S>([p, exponent](const StateVector<S>& s) {
    StateVector<S> out = s;
    for (int k = 0; k < exponent && !out.is_zero(); ++k) {
      out = p(out);
    }
    return out;
  });
}

/// SU(3)-invariant Sp(2,R) generators: k₊ = a†·b†, k₋ = a·b, k₀ = ½(N_a + N_b + 3).
template <Scalar S>
struct Sp2rTriple {
  Operator<S> k_plus;
  Operator<S> k_minus;
  Operator<S> k_zero;
};

template <Scalar S>
Sp2rTriple<S> sp2r_triple() {
  Operator<S> k_plus;
  Operator<S> k_minus;
  for (int g = 1; g <= 3; ++g) {
    k_plus = k_plus + a_dag<S>(g) * b_dag<S>(g);
    k_minus = k_minus + a_ann<S>(g) * b_ann<S>(g);
  }
  auto k_zero = number_multiplier<S>([](int n_a, int n_b) { return Rational::normalize(n_a + n_b + 3, 2); });
  return {std::move(k_plus), std::move(k_minus), std::move(k_zero)};
}

/// Weyl-basis generator E^α_β = a†^α a_β − b†_β b^α.
template <Scalar S>
Operator<S> su3_generator_weyl(int alpha, int beta) {
  return a_dag<S>(alpha) * a_ann<S>(beta) - b_dag<S>(beta) * b_ann<S>(alpha);
}

using Matrix3 = std::array<std::array<ExtScalar, 3>, 3>;
using GellMannTable = std::array<Matrix3, 8>;

/// λ¹..λ⁸ in the standard basis; entry [row][col], 0-based.
const GellMannTable& gellmann_matrices();

/// Q^a = a† (λ^a/2) a − b† (λ̃^a/2) b built from `table`; a ∈ 1..8, else std::domain_error.
Operator<ExtScalar> su3_generator_gellmann(int a, const GellMannTable& table = gellmann_matrices());

/// Totally antisymmetric f^{abc}, a, b, c ∈ 1..8.
class StructureConstantTable {
public:
  static const StructureConstantTable& standard();

  /// Builds the antisymmetric closure of the listed entries f^{abc} (a < b < c).
  static StructureConstantTable from_entries(const std::vector<std::pair<std::array<int, 3>, ExtScalar>>& entries);

  const ExtScalar& operator()(int a, int b, int c) const;

private:
  std::array<std::array<std::array<ExtScalar, 8>, 8>, 8> f_{};
};

/// First vector in `testset` on which lhs and rhs disagree.
template <Scalar S>
std::optional<StateVector<S>> first_disagreement(const Operator<S>& lhs, const Operator<S>& rhs,
                                                 const std::vector<StateVector<S>>& testset) {
  for (const auto& s : testset) {
    if (lhs(s) != rhs(s)) {
      return s;
    }
  }
  return std::nullopt;
}

/// Records a pass, or a failure with the offending input and both sides.
template <Scalar S>
void record_identity(VerificationReport& report, std::string id, Json params, const Operator<S>& lhs,
                     const Operator<S>& rhs, const std::vector<StateVector<S>>& testset) {
  if (auto bad = first_disagreement(lhs, rhs, testset)) {
    Json ce;
    ce["input"] = state_json(*bad);
    ce["lhs"] = state_json(lhs(*bad));
    ce["rhs"] = state_json(rhs(*bad));
    report.add_fail(std::move(id), std::move(params), std::move(ce));
  } else {
    report.add_pass(std::move(id), std::move(params));
  }
}

/// Monomial basis states with total occupation ≤ max_total.
template <Scalar S>
std::vector<StateVector<S>> monomial_testset(int max_total) {
  std::vector<StateVector<S>> out;
  for (const auto& m : monomials_up_to(max_total)) {
    out.push_back(StateVector<S>::monomial(m));
  }
  return out;
}

/// [Q^a, a†^α] = ½ a†^β λ^a_{βα} and [Q^a, b†_α] = −½ λ^a_{αβ} b†_β for all a, α (48 cases).
/// Generators are built from `generator_table`; the right-hand sides always use the
/// standard λ matrices, so a corrupted table is reported as a failure.
VerificationReport verify_covariance(const std::vector<StateVector<ExtScalar>>& testset,
                                     const GellMannTable& generator_table = gellmann_matrices());

/// [Q^a, Q^b] = i f^{abc} Q^c for the 28 pairs a < b on `ext_testset`, and
/// [E^α_β, E^γ_δ] = δ^γ_β E^α_δ − δ^α_δ E^γ_β on `rational_testset`.
VerificationReport verify_lie_closure(const std::vector<StateVector<ExtScalar>>& ext_testset,
                                      const std::vector<StateVector<Rational>>& rational_testset,
                                      const GellMannTable& generator_table = gellmann_matrices(),
                                      const StructureConstantTable& f = StructureConstantTable::standard());

}  // namespace su3sb
