#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "su3sb/operator.hpp"
#include "su3sb/report.hpp"

namespace su3sb {

/// A computation would exceed a configured size bound.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Which of the three independent constructions produced a state.
enum class Method { Explicit, Projection, Isb };

std::string_view method_name(Method method);
/// Accepts "explicit", "projection", "isb"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// (n,m) label with n upper (triplet) and m lower (anti-triplet) indices in 1..3.
struct IrrepRequest {
  int n = 0;
  int m = 0;
  std::vector<int> upper;
  std::vector<int> lower;

  /// Sets n, m from the tuple lengths and validates.
  static IrrepRequest make(std::vector<int> upper, std::vector<int> lower);

  /// Throws std::invalid_argument on length mismatch or an index outside 1..3.
  void validate() const;

  int q() const { return n < m ? n : m; }

  friend bool operator==(const IrrepRequest&, const IrrepRequest&) = default;
};

struct IrrepState {
  IrrepRequest request;
  StateVector<Rational> vector;
  Method method = Method::Explicit;
};

/// Every request with the given (n,m): 3^n · 3^m index tuples, lexicographic.
std::vector<IrrepRequest> all_requests(int n, int m);

/// r disjoint contractions (l, k), 1-based; l's strictly increasing, k's distinct.
using PairingPattern = std::vector<std::pair<int, int>>;

/// Each unordered set of r disjoint pairs appears exactly once.
std::vector<PairingPattern> pairing_patterns(int n, int m, int r);

/// O^{α…}_{β…}|0⟩ as a single monomial with coefficient 1.
StateVector<Rational> tensor_monomial(const IrrepRequest& req);

/// (−1)^r / [(n+m+1)(n+m)···(n+m+2−r)] for 1 ≤ r ≤ min(n,m); std::domain_error otherwise.
Rational coefficient_L(int r, int n, int m);

/// (−1)^r/r! · (n+m+1−r)!/(n+m+1)! for 0 ≤ r ≤ n+m+1; std::domain_error otherwise.
Rational coefficient_l(int r, int n, int m);

/// Traceless tensor expansion: Σ_r L_r k₊^r Σ_{patterns} δ-product × reduced monomial.
IrrepState irrep_explicit(const IrrepRequest& req);

/// Σ_{r ≤ min(n,m)} l_r(n,m) k₊^r k₋^r.
Operator<Rational> projector(int n, int m);

/// projector(n, m) applied to tensor_monomial(req).
IrrepState projection_apply(const IrrepRequest& req);

/// A†^α = a†^α − (N_a+N_b+1)⁻¹ k₊ b^α; the multiplier sees the state produced by k₊ b^α.
Operator<Rational> isb_A_dagger(int alpha);
/// B†_β = b†_β − (N_a+N_b+1)⁻¹ k₊ a_β.
Operator<Rational> isb_B_dagger(int beta);
/// A_α = a_α − b†_α k₋ (N_a+N_b+1)⁻¹; the multiplier acts first.
Operator<Rational> isb_A(int alpha);
/// B^β = b^β − a†^β k₋ (N_a+N_b+1)⁻¹.
Operator<Rational> isb_B(int beta);

/// A†^{α₁}…A†^{αₙ} B†_{β₁}…B†_{βₘ}|0⟩.
IrrepState irrep_isb(const IrrepRequest& req);

IrrepState build_irrep(const IrrepRequest& req, Method method);

/// Σ_γ of the states with α_l = β_k = γ, built by `build`. l ∈ 1..n, k ∈ 1..m.
StateVector<Rational> trace_contract(const IrrepRequest& req, int l, int k,
                                     const std::function<StateVector<Rational>(const IrrepRequest&)>& build);

/// Rebuilds the contracted family with the state's own method.
StateVector<Rational> trace_contract(const IrrepState& state, int l, int k);

struct Sp2rWeight {
  Rational k;
  Rational m_prime;
};

/// m′ is the k₀ eigenvalue; k = m′ − ρ where ρ is the largest power with k₋^ρ s ≠ 0.
/// std::domain_error for zero or mixed-occupation input.
Sp2rWeight sp2r_weight(const StateVector<Rational>& s);

/// k₊^ρ applied to irrep_isb(req).
StateVector<Rational> tower_state(const IrrepRequest& req, int rho);

/// (n+1)(m+1)(n+m+2)/2
long irrep_dimension(int n, int m);

/// Exact Gram rank of {irrep_isb(req)} over all index tuples. ResourceError if n+m > max_total.
std::size_t gram_rank(int n, int m, int max_total = 5);

/// A†^α ψ(n,m) = ψ(n+1,m) with α prepended, and B†_β ψ(n,m) = ψ(n,m+1) with β prepended,
/// for every index tuple, all built by the explicit method.
VerificationReport ladder_check(int n, int m);

/// Every Q^a maps the span of the (n,m) states into itself: exact solves over Q(i,√3) in an independent basis.
VerificationReport generator_closure_check(int n, int m);

/// {"label":[n,m],"upper":[…],"lower":[…],"terms":[…]}. The method is deliberately omitted:
/// all three constructions give the same vector, so their output is byte-identical.
Json irrep_state_json(const IrrepState& state);
std::string irrep_state_text(const IrrepState& state);

}  // namespace su3sb
