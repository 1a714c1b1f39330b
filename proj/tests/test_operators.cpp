#include <doctest.h>

#include "su3sb/operator.hpp"

using namespace su3sb;

namespace {

using RState = StateVector<Rational>;
using EState = StateVector<ExtScalar>;
using ROp = Operator<Rational>;

RState mono(std::array<int, 3> a, std::array<int, 3> b) { return RState::monomial(FockMonomial(a, b)); }
EState emono(std::array<int, 3> a, std::array<int, 3> b, ExtScalar c = ExtScalar(1)) {
  return EState::monomial(FockMonomial(a, b), std::move(c));
}

std::array<int, 3> unit(int k) {
  std::array<int, 3> e{0, 0, 0};
  e[static_cast<std::size_t>(k - 1)] = 1;
  return e;
}

// Textbook Gell-Mann matrices, written out entry by entry, as an oracle for the library table.
ExtScalar reference_lambda(int a, int row, int col) {
  const ExtScalar i = ExtScalar::i();
  const ExtScalar inv_sqrt3 = ExtScalar(0, 0, Rational::normalize(1, 3), 0);
  auto at = [&](int r, int c) { return row == r && col == c; };
  switch (a) {
    case 1: return (at(1, 2) || at(2, 1)) ? ExtScalar(1) : ExtScalar(0);
    case 2: return at(1, 2) ? -i : at(2, 1) ? i : ExtScalar(0);
    case 3: return at(1, 1) ? ExtScalar(1) : at(2, 2) ? ExtScalar(-1) : ExtScalar(0);
    case 4: return (at(1, 3) || at(3, 1)) ? ExtScalar(1) : ExtScalar(0);
    case 5: return at(1, 3) ? -i : at(3, 1) ? i : ExtScalar(0);
    case 6: return (at(2, 3) || at(3, 2)) ? ExtScalar(1) : ExtScalar(0);
    case 7: return at(2, 3) ? -i : at(3, 2) ? i : ExtScalar(0);
    case 8:
      if (at(1, 1) || at(2, 2)) return inv_sqrt3;
      if (at(3, 3)) return ExtScalar(-2) * inv_sqrt3;
      return ExtScalar(0);
    default: return ExtScalar(0);
  }
}

}  // namespace

TEST_CASE("oscillator commutators on the vacuum") {
  auto sp = sp2r_triple<Rational>();
  auto vac = RState::vacuum();
  CHECK(op_commutator(sp.k_minus, sp.k_plus)(vac) == Rational(3) * vac);
  CHECK(op_commutator(number_a<Rational>(), a_dag<Rational>(1))(vac) == mono({1, 0, 0}, {0, 0, 0}));
  CHECK(op_commutator(sp.k_zero, sp.k_plus)(vac) == sp.k_plus(vac));
}

TEST_CASE("Sp(2,R) generators") {
  auto sp = sp2r_triple<Rational>();
  auto vac = RState::vacuum();
  CHECK(sp.k_plus(vac) == mono({1, 0, 0}, {1, 0, 0}) + mono({0, 1, 0}, {0, 1, 0}) + mono({0, 0, 1}, {0, 0, 1}));
  CHECK(sp.k_minus(vac).is_zero());
  auto s = mono({1, 0, 0}, {0, 1, 0});
  CHECK(sp.k_zero(s) == Rational::normalize(5, 2) * s);
}

TEST_CASE("composition applies the right factor first") {
  // a_1 a†^1 |0> = |0>, a†^1 a_1 |0> = 0.
  auto vac = RState::vacuum();
  CHECK((a_ann<Rational>(1) * a_dag<Rational>(1))(vac) == vac);
  CHECK((a_dag<Rational>(1) * a_ann<Rational>(1))(vac).is_zero());
  // Number multipliers see the state produced by the operator to their right.
  auto nf = number_multiplier<Rational>([](int n_a, int) { return Rational(n_a + 10); });
  CHECK((nf * a_dag<Rational>(1))(vac) == Rational(11) * mono({1, 0, 0}, {0, 0, 0}));
  CHECK((a_dag<Rational>(1) * nf)(vac) == Rational(10) * mono({1, 0, 0}, {0, 0, 0}));
  CHECK(power(a_dag<Rational>(2), 3)(vac) == mono({0, 3, 0}, {0, 0, 0}));
  CHECK(power(a_dag<Rational>(2), 0)(vac) == vac);
}

TEST_CASE("Gell-Mann generators on single quanta") {
  CHECK(su3_generator_gellmann(3)(emono(unit(1), {0, 0, 0})) == emono(unit(1), {0, 0, 0}, Rational::normalize(1, 2)));
  CHECK(su3_generator_gellmann(3)(emono({0, 0, 0}, unit(1))) ==
        emono({0, 0, 0}, unit(1), Rational::normalize(-1, 2)));
  CHECK(su3_generator_gellmann(8)(emono(unit(3), {0, 0, 0})) ==
        emono(unit(3), {0, 0, 0}, ExtScalar(0, 0, Rational::normalize(-1, 3), 0)));
  CHECK_THROWS_AS(su3_generator_gellmann(0), std::domain_error);
  CHECK_THROWS_AS(su3_generator_gellmann(9), std::domain_error);
}

TEST_CASE("library lambda table matches the textbook matrices") {
  const auto& table = gellmann_matrices();
  for (int a = 1; a <= 8; ++a) {
    for (int r = 1; r <= 3; ++r) {
      for (int c = 1; c <= 3; ++c) {
        CHECK(table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] ==
              reference_lambda(a, r, c));
      }
    }
  }
}

TEST_CASE("brute-force matrix action on 3 and 3*") {
  const ExtScalar half = Rational::normalize(1, 2);
  for (int a = 1; a <= 8; ++a) {
    auto q = su3_generator_gellmann(a);
    for (int alpha = 1; alpha <= 3; ++alpha) {
      EState expect_a, expect_b;
      for (int beta = 1; beta <= 3; ++beta) {
        expect_a += emono(unit(beta), {0, 0, 0}, half * reference_lambda(a, beta, alpha));
        expect_b += emono({0, 0, 0}, unit(beta), -half * reference_lambda(a, alpha, beta));
      }
      CHECK(q(emono(unit(alpha), {0, 0, 0})) == expect_a);
      CHECK(q(emono({0, 0, 0}, unit(alpha))) == expect_b);
    }
  }
}

TEST_CASE("Gell-Mann generators are Hermitian under the factorial inner product") {
  auto basis = monomial_testset<ExtScalar>(3);
  for (int a = 1; a <= 8; ++a) {
    auto q = su3_generator_gellmann(a);
    for (const auto& s : basis) {
      auto qs = q(s);
      for (const auto& t : basis) {
        REQUIRE(inner_product(s, q(t)) == inner_product(qs, t));
      }
    }
  }
}

TEST_CASE("Weyl generators") {
  auto e12 = su3_generator_weyl<Rational>(1, 2);
  CHECK(e12(mono(unit(2), {0, 0, 0})) == mono(unit(1), {0, 0, 0}));
  CHECK(e12(mono({0, 0, 0}, unit(1))) == -mono({0, 0, 0}, unit(2)));
  CHECK(e12(RState::vacuum()).is_zero());
}

TEST_CASE("Lie brackets on a single quantum") {
  auto s = emono(unit(1), {0, 0, 0});
  auto comm = op_commutator(su3_generator_gellmann(1), su3_generator_gellmann(2));
  CHECK(comm(s) == ExtScalar::i() * su3_generator_gellmann(3)(s));

  auto r = mono(unit(1), {0, 0, 0});
  auto weyl = op_commutator(su3_generator_weyl<Rational>(1, 2), su3_generator_weyl<Rational>(2, 1));
  CHECK(weyl(r) == (su3_generator_weyl<Rational>(1, 1) - su3_generator_weyl<Rational>(2, 2))(r));

  for (int a = 1; a <= 8; ++a) {
    auto total = number_a<ExtScalar>() + number_b<ExtScalar>();
    for (const auto& m : monomial_testset<ExtScalar>(3)) {
      CHECK(op_commutator(su3_generator_gellmann(a), total)(m).is_zero());
    }
  }
}

TEST_CASE("structure constants") {
  const auto& f = StructureConstantTable::standard();
  CHECK(f(1, 2, 3) == ExtScalar(1));
  CHECK(f(2, 1, 3) == ExtScalar(-1));
  CHECK(f(3, 1, 2) == ExtScalar(1));
  CHECK(f(1, 4, 7) == ExtScalar(Rational::normalize(1, 2)));
  CHECK(f(4, 5, 8) == ExtScalar(0, 0, Rational::normalize(1, 2), 0));
  CHECK(f(1, 1, 3) == ExtScalar(0));
}

TEST_CASE("covariance on small test sets") {
  std::vector<EState> vac{EState::vacuum()};
  auto r0 = verify_covariance(vac);
  CHECK(r0.passed());
  CHECK(r0.to_json()["summary"]["checks"] == 48);
  CHECK(verify_covariance(monomial_testset<ExtScalar>(1)).passed());
}

TEST_CASE("covariance flags a corrupted lambda table") {
  auto table = gellmann_matrices();
  table[4][0][2] = -table[4][0][2];
  table[4][2][0] = -table[4][2][0];
  auto report = verify_covariance(monomial_testset<ExtScalar>(1), table);
  CHECK_FALSE(report.passed());
  CHECK(report.failure_count() > 0);
  auto j = report.to_json();
  bool has_counterexample = false;
  for (const auto& c : j["checks"]) {
    if (!c["pass"].get<bool>()) {
      has_counterexample = has_counterexample || c.contains("counterexample");
    }
  }
  CHECK(has_counterexample);
}

TEST_CASE("Lie closure flags a corrupted structure constant") {
  auto f = StructureConstantTable::from_entries({{{1, 2, 3}, ExtScalar(-1)}});
  auto report = verify_lie_closure(monomial_testset<ExtScalar>(1), monomial_testset<Rational>(1), gellmann_matrices(), f);
  CHECK_FALSE(report.passed());
}
