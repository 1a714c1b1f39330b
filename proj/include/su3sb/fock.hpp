#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "su3sb/scalar.hpp"

namespace su3sb {

/// The triplet a† (upper index, rep 3) or the anti-triplet b† (lower index, rep 3*).
enum class Species { A, B };

/// One of the six oscillator modes; `index` runs over 1..3.
struct Mode {
  Species species;
  int index;

  /// Position 0..5 in a monomial exponent vector.
  std::size_t slot() const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// All six modes in slot order.
const std::array<Mode, 6>& all_modes();

/// Exponent vector of a product of creation operators acting on |0⟩.
/// Slots 0..2 hold a†¹, a†², a†³; slots 3..5 hold b†₁, b†₂, b†₃.
class FockMonomial {
public:
  FockMonomial() = default;
  FockMonomial(std::array<int, 3> a_exp, std::array<int, 3> b_exp);

  static FockMonomial vacuum() { return {}; }

  int exponent(Mode mode) const { return exps_[mode.slot()]; }
  int a(int index) const { return exps_[static_cast<std::size_t>(index - 1)]; }
  int b(int index) const { return exps_[static_cast<std::size_t>(index + 2)]; }
  std::array<int, 3> a_exponents() const { return {exps_[0], exps_[1], exps_[2]}; }
  std::array<int, 3> b_exponents() const { return {exps_[3], exps_[4], exps_[5]}; }

  int n_a() const { return exps_[0] + exps_[1] + exps_[2]; }
  int n_b() const { return exps_[3] + exps_[4] + exps_[5]; }
  int total() const { return n_a() + n_b(); }

  FockMonomial raised(Mode mode) const;
  /// Requires exponent(mode) > 0.
  FockMonomial lowered(Mode mode) const;

  /// Product of exponent factorials: ⟨M|M⟩ in the unnormalized basis.
  mpz_class norm_weight() const;

  /// "na1 na2 na3 | nb1 nb2 nb3"
  std::string to_string() const;

  /// Lexicographic on the concatenated 6-tuple.
  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;

private:
  std::array<int, 6> exps_{};
};

/// Every monomial with total occupation ≤ max_total, in monomial order.
std::vector<FockMonomial> monomials_up_to(int max_total);

/// Every monomial with exactly (n_a, n_b) occupation, in monomial order.
std::vector<FockMonomial> monomials_in_sector(int n_a, int n_b);

/// Finite sparse combination of Fock monomials. Zero coefficients are never stored.
template <Scalar S>
class StateVector {
public:
  using Terms = std::map<FockMonomial, S>;

  StateVector() = default;

  static StateVector vacuum() { return monomial(FockMonomial::vacuum()); }

  static StateVector monomial(const FockMonomial& m, S coeff = S(Rational(1))) {
    StateVector s;
    s.add_term(m, coeff);
    return s;
  }

  void add_term(const FockMonomial& m, const S& coeff) {
    if (coeff.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S() : it->second;
  }

  StateVector& operator+=(const StateVector& other) {
    for (const auto& [m, c] : other.terms_) {
      add_term(m, c);
    }
    return *this;
  }

  StateVector& operator-=(const StateVector& other) {
    for (const auto& [m, c] : other.terms_) {
      add_term(m, -c);
    }
    return *this;
  }

  StateVector& operator*=(const S& factor) {
    if (factor.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) {
      c *= factor;
    }
    return *this;
  }

  friend StateVector operator+(StateVector lhs, const StateVector& rhs) { return lhs += rhs; }
  friend StateVector operator-(StateVector lhs, const StateVector& rhs) { return lhs -= rhs; }
  friend StateVector operator-(StateVector s) { return s *= S(Rational(-1)); }
  friend StateVector operator*(const S& factor, StateVector s) { return s *= factor; }
  friend StateVector operator*(StateVector s, const S& factor) { return s *= factor; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

  /// Lift to a larger coefficient field (e.g. Rational → ExtScalar).
  template <Scalar T>
  StateVector<T> cast() const {
    StateVector<T> out;
    for (const auto& [m, c] : terms_) {
      out.add_term(m, T(c));
    }
    return out;
  }

private:
  Terms terms_;
};

/// a†^i or b†_i: multiplies each monomial by the mode generator.
template <Scalar S>
StateVector<S> apply_creation(Mode mode, const StateVector<S>& s) {
  StateVector<S> out;
  for (const auto& [m, c] : s.terms()) {
    out.add_term(m.raised(mode), c);
  }
  return out;
}

/// a_i or b^i: formal derivative with respect to the mode generator.
template <Scalar S>
StateVector<S> apply_annihilation(Mode mode, const StateVector<S>& s) {
  StateVector<S> out;
  for (const auto& [m, c] : s.terms()) {
    int e = m.exponent(mode);
    if (e > 0) {
      out.add_term(m.lowered(mode), c * S(Rational(e)));
    }
  }
  return out;
}

/// ⟨s1|s2⟩ with ⟨M|M'⟩ = δ_{MM'} ∏ e!, antilinear in the first argument.
template <Scalar S>
S inner_product(const StateVector<S>& s1, const StateVector<S>& s2) {
  S total;
  for (const auto& [m, c1] : s1.terms()) {
    auto it = s2.terms().find(m);
    if (it != s2.terms().end()) {
      total += conj(c1) * it->second * S(Rational(m.norm_weight()));
    }
  }
  return total;
}

template <Scalar S>
struct OccupationSector {
  int n_a;
  int n_b;
  StateVector<S> part;
};

/// Partition by (N_a, N_b); sectors come out in increasing (N_a, N_b) order.
template <Scalar S>
std::vector<OccupationSector<S>> occupation_split(const StateVector<S>& s) {
  std::map<std::pair<int, int>, StateVector<S>> parts;
  for (const auto& [m, c] : s.terms()) {
    parts[{m.n_a(), m.n_b()}].add_term(m, c);
  }
  std::vector<OccupationSector<S>> out;
  out.reserve(parts.size());
  for (auto& [key, part] : parts) {
    out.push_back({key.first, key.second, std::move(part)});
  }
  return out;
}

/// Total occupation shared by every term, or -1 if the vector is zero or mixed.
template <Scalar S>
int homogeneous_total(const StateVector<S>& s) {
  if (s.is_zero()) {
    return -1;
  }
  int total = s.terms().begin()->first.total();
  for (const auto& [m, c] : s.terms()) {
    if (m.total() != total) {
      return -1;
    }
  }
  return total;
}

}  // namespace su3sb
