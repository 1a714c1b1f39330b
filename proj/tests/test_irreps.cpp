#include <doctest.h>

#include "su3sb/irreps.hpp"

using namespace su3sb;

namespace {

using RState = StateVector<Rational>;

RState mono(std::array<int, 3> a, std::array<int, 3> b) { return RState::monomial(FockMonomial(a, b)); }

Rational q(long p, long d) { return Rational::normalize(p, d); }

RState octet_11() {
  return q(2, 3) * mono({1, 0, 0}, {1, 0, 0}) - q(1, 3) * mono({0, 1, 0}, {0, 1, 0}) -
         q(1, 3) * mono({0, 0, 1}, {0, 0, 1});
}

}  // namespace

TEST_CASE("requests and tensor monomials") {
  CHECK(tensor_monomial(IrrepRequest::make({2}, {})) == mono({0, 1, 0}, {0, 0, 0}));
  CHECK(tensor_monomial(IrrepRequest::make({1}, {1})) == mono({1, 0, 0}, {1, 0, 0}));
  CHECK(tensor_monomial(IrrepRequest::make({1, 1}, {})) == mono({2, 0, 0}, {0, 0, 0}));
  CHECK_THROWS_AS(IrrepRequest::make({4}, {}), std::invalid_argument);
  CHECK_THROWS_AS((IrrepRequest{2, 0, {1}, {}}.validate()), std::invalid_argument);
  CHECK(all_requests(2, 1).size() == 27);
  CHECK(all_requests(0, 0).size() == 1);
}

TEST_CASE("pairing pattern counts") {
  // r pairs out of (n, m): C(n,r)·m!/(m−r)!.
  CHECK(pairing_patterns(2, 2, 1).size() == 4);
  CHECK(pairing_patterns(2, 2, 2).size() == 2);
  CHECK(pairing_patterns(3, 2, 2).size() == 6);
  CHECK(pairing_patterns(2, 1, 0).size() == 1);
}

TEST_CASE("contraction coefficients") {
  CHECK(coefficient_L(1, 1, 1) == q(-1, 3));
  CHECK(coefficient_L(1, 2, 1) == q(-1, 4));
  CHECK(coefficient_L(2, 2, 2) == q(1, 20));
  CHECK_THROWS_AS(coefficient_L(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(coefficient_L(2, 1, 1), std::domain_error);
  CHECK(coefficient_l(0, 3, 2) == Rational(1));
  CHECK(coefficient_l(1, 1, 1) == q(-1, 3));
  CHECK(coefficient_l(2, 2, 2) == q(1, 40));
  CHECK_THROWS_AS(coefficient_l(-1, 1, 1), std::domain_error);
}

TEST_CASE("coefficient identities") {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; n + m <= 8; ++m) {
      const int rmax = std::min(n, m);
      for (int r = 1; r <= rmax; ++r) {
        // Derived from k₋ annihilating the projected state.
        CHECK(Rational(r * (n + m + 2 - r)) * coefficient_l(r, n, m) == -coefficient_l(r - 1, n, m));
        CHECK(coefficient_l(r, n, m) * Rational(factorial(static_cast<unsigned>(r))) == coefficient_L(r, n, m));
      }
    }
  }
}

TEST_CASE("explicit construction examples") {
  CHECK(irrep_explicit(IrrepRequest::make({1}, {})).vector == mono({1, 0, 0}, {0, 0, 0}));
  CHECK(irrep_explicit(IrrepRequest::make({1}, {1})).vector == octet_11());
  CHECK(irrep_explicit(IrrepRequest::make({1}, {2})).vector == mono({1, 0, 0}, {0, 1, 0}));
}

TEST_CASE("projection and ISB constructions") {
  CHECK(projection_apply(IrrepRequest::make({2}, {})).vector == mono({0, 1, 0}, {0, 0, 0}));
  CHECK(projection_apply(IrrepRequest::make({1}, {1})).vector == octet_11());
  CHECK(irrep_isb(IrrepRequest::make({3}, {})).vector == mono({0, 0, 1}, {0, 0, 0}));
  CHECK(irrep_isb(IrrepRequest::make({1}, {1})).vector == octet_11());
  for (const auto& req : {IrrepRequest::make({1, 2}, {3}), IrrepRequest::make({1, 1}, {2}), IrrepRequest::make({1, 1}, {1})}) {
    auto e = irrep_explicit(req).vector;
    CHECK(projection_apply(req).vector == e);
    CHECK(irrep_isb(req).vector == e);
  }
}

TEST_CASE("three paths agree on every request up to n + m = 3") {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; n + m <= 3; ++m) {
      for (const auto& req : all_requests(n, m)) {
        auto e = irrep_explicit(req).vector;
        REQUIRE(projection_apply(req).vector == e);
        REQUIRE(irrep_isb(req).vector == e);
      }
    }
  }
}

TEST_CASE("ISB operators on small states") {
  auto vac = RState::vacuum();
  CHECK(isb_A_dagger(1)(vac) == mono({1, 0, 0}, {0, 0, 0}));
  CHECK(isb_B_dagger(2)(vac) == mono({0, 0, 0}, {0, 1, 0}));
  CHECK(isb_A_dagger(1)(mono({0, 0, 0}, {1, 0, 0})) == octet_11());
  CHECK(isb_A(1)(vac).is_zero());
  CHECK(isb_B(2)(mono({1, 0, 0}, {0, 1, 0})) == mono({1, 0, 0}, {0, 0, 0}));
  CHECK(isb_B(2)(mono({0, 1, 0}, {0, 1, 0})) == q(2, 3) * mono({0, 1, 0}, {0, 0, 0}));
}

TEST_CASE("A·B annihilates irrep states") {
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; n + m <= 3; ++m) {
      for (const auto& req : all_requests(n, m)) {
        auto s = irrep_isb(req).vector;
        RState total;
        for (int g = 1; g <= 3; ++g) {
          total += isb_A(g)(isb_B(g)(s));
        }
        REQUIRE(total.is_zero());
      }
    }
  }
}

TEST_CASE("traces vanish, bare monomials do not") {
  auto oct = irrep_explicit(IrrepRequest::make({1}, {1}));
  CHECK(trace_contract(oct, 1, 1).is_zero());
  for (int l = 1; l <= 2; ++l) {
    CHECK(trace_contract(irrep_isb(IrrepRequest::make({1, 3}, {2})), l, 1).is_zero());
  }
  auto bare = trace_contract(IrrepRequest::make({1}, {1}), 1, 1,
                             [](const IrrepRequest& r) { return tensor_monomial(r); });
  CHECK(bare == mono({1, 0, 0}, {1, 0, 0}) + mono({0, 1, 0}, {0, 1, 0}) + mono({0, 0, 1}, {0, 0, 1}));
  CHECK_THROWS_AS(trace_contract(oct, 2, 1), std::domain_error);
  CHECK_THROWS_AS(trace_contract(oct, 1, 0), std::domain_error);
}

TEST_CASE("Sp(2,R) weights and towers") {
  auto vac_w = sp2r_weight(RState::vacuum());
  CHECK(vac_w.k == q(3, 2));
  CHECK(vac_w.m_prime == q(3, 2));
  auto oct = IrrepRequest::make({1}, {1});
  auto w0 = sp2r_weight(tower_state(oct, 0));
  CHECK(w0.k == q(5, 2));
  CHECK(w0.m_prime == q(5, 2));
  auto w1 = sp2r_weight(tower_state(oct, 1));
  CHECK(w1.k == q(5, 2));
  CHECK(w1.m_prime == q(7, 2));
  auto w2 = sp2r_weight(tower_state(oct, 2));
  CHECK(w2.k == q(5, 2));
  CHECK(w2.m_prime == q(9, 2));
  CHECK(tower_state(oct, 0) == octet_11());
  CHECK(tower_state(IrrepRequest::make({}, {}), 1) ==
        mono({1, 0, 0}, {1, 0, 0}) + mono({0, 1, 0}, {0, 1, 0}) + mono({0, 0, 1}, {0, 0, 1}));
  CHECK_THROWS_AS(sp2r_weight(RState()), std::domain_error);
  CHECK_THROWS_AS(sp2r_weight(RState::vacuum() + mono({1, 0, 0}, {0, 0, 0})), std::domain_error);
}

TEST_CASE("dimensions") {
  CHECK(gram_rank(1, 0) == 3);
  CHECK(gram_rank(0, 1) == 3);
  CHECK(gram_rank(1, 1) == 8);
  CHECK(gram_rank(2, 1) == 15);
  CHECK(irrep_dimension(2, 2) == 27);
  CHECK_THROWS_AS(gram_rank(3, 3, 5), ResourceError);
}

TEST_CASE("ladder and closure reports") {
  CHECK(ladder_check(1, 1).passed());
  CHECK(generator_closure_check(1, 1).passed());
}

TEST_CASE("state serialization omits the construction method") {
  auto req = IrrepRequest::make({1, 2}, {3});
  auto e = irrep_state_json(build_irrep(req, Method::Explicit)).dump(2);
  CHECK(e == irrep_state_json(build_irrep(req, Method::Isb)).dump(2));
  CHECK(e == irrep_state_json(build_irrep(req, Method::Projection)).dump(2));
  CHECK(parse_method("projection") == Method::Projection);
  CHECK_THROWS_AS(parse_method("bogus"), std::invalid_argument);
}
