#include <doctest.h>

#include <random>

#include "su3sb/fock.hpp"
#include "su3sb/serialize.hpp"

using namespace su3sb;

namespace {

using RState = StateVector<Rational>;

RState mono(std::array<int, 3> a, std::array<int, 3> b) { return RState::monomial(FockMonomial(a, b)); }

constexpr Mode a1{Species::A, 1};
constexpr Mode a2{Species::A, 2};
constexpr Mode b2{Species::B, 2};
constexpr Mode b3{Species::B, 3};

RState random_state(std::mt19937& rng, int max_total) {
  auto basis = monomials_up_to(max_total);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  RState s;
  int terms = static_cast<int>(rng() % 5);
  for (int k = 0; k < terms; ++k) {
    s.add_term(basis[pick(rng)], Rational::normalize(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("creation in the unnormalized basis") {
  CHECK(apply_creation(a1, RState::vacuum()) == mono({1, 0, 0}, {0, 0, 0}));
  CHECK(apply_creation(b2, mono({1, 0, 0}, {0, 0, 0})) == mono({1, 0, 0}, {0, 1, 0}));
  CHECK(apply_creation(a1, mono({2, 0, 0}, {0, 0, 0})) == mono({3, 0, 0}, {0, 0, 0}));
}

TEST_CASE("annihilation is the formal derivative") {
  CHECK(apply_annihilation(a1, RState::vacuum()).is_zero());
  CHECK(apply_annihilation(a1, mono({2, 0, 0}, {0, 0, 0})) == Rational(2) * mono({1, 0, 0}, {0, 0, 0}));
  CHECK(apply_annihilation(b3, mono({1, 0, 0}, {0, 0, 1})) == mono({1, 0, 0}, {0, 0, 0}));
}

TEST_CASE("factorial-weighted inner product") {
  CHECK(inner_product(RState::vacuum(), RState::vacuum()) == Rational(1));
  CHECK(inner_product(mono({2, 0, 0}, {0, 0, 0}), mono({2, 0, 0}, {0, 0, 0})) == Rational(2));
  CHECK(inner_product(mono({1, 0, 0}, {0, 1, 0}), mono({1, 0, 0}, {0, 1, 0})) == Rational(1));
  CHECK(inner_product(mono({1, 0, 0}, {0, 0, 0}), mono({0, 1, 0}, {0, 0, 0})) == Rational(0));
  CHECK(inner_product(mono({3, 1, 0}, {0, 2, 0}), mono({3, 1, 0}, {0, 2, 0})) == Rational(12));
}

TEST_CASE("inner product is antilinear in the first slot over the extension field") {
  auto s = StateVector<ExtScalar>::monomial(FockMonomial({1, 0, 0}, {0, 0, 0}), ExtScalar::i());
  CHECK(inner_product(s, s) == ExtScalar(1));
  auto t = StateVector<ExtScalar>::monomial(FockMonomial({1, 0, 0}, {0, 0, 0}));
  CHECK(inner_product(s, t) == -ExtScalar::i());
}

TEST_CASE("positivity on random rational states") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_state(rng, 4);
    auto norm = inner_product(s, s);
    if (s.is_zero()) {
      CHECK(norm == Rational(0));
    } else {
      CHECK(norm > Rational(0));
    }
  }
}

TEST_CASE("adjointness and canonical commutators on every monomial up to total 6") {
  auto basis = monomials_up_to(6);
  for (const auto& mu : all_modes()) {
    for (const auto& nu : all_modes()) {
      for (const auto& m : basis) {
        auto s = RState::monomial(m);
        auto comm = apply_annihilation(mu, apply_creation(nu, s)) - apply_creation(nu, apply_annihilation(mu, s));
        REQUIRE(comm == (mu == nu ? s : RState()));
        REQUIRE(apply_creation(mu, apply_creation(nu, s)) == apply_creation(nu, apply_creation(mu, s)));
        REQUIRE(apply_annihilation(mu, apply_annihilation(nu, s)) ==
                apply_annihilation(nu, apply_annihilation(mu, s)));
      }
    }
  }
  auto low = monomials_up_to(3);
  for (const auto& mu : all_modes()) {
    for (const auto& m : low) {
      for (const auto& mp : low) {
        auto s = RState::monomial(m), t = RState::monomial(mp);
        REQUIRE(inner_product(apply_creation(mu, s), t) == inner_product(s, apply_annihilation(mu, t)));
      }
    }
  }
}

TEST_CASE("linearity of the ladder action on random states") {
  std::mt19937 rng(161803);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_state(rng, 4), t = random_state(rng, 4);
    Rational c = Rational::normalize(static_cast<long>(rng() % 11) - 5, 3);
    for (const auto& mu : all_modes()) {
      CHECK(apply_annihilation(mu, c * s + t) == c * apply_annihilation(mu, s) + apply_annihilation(mu, t));
      CHECK(apply_creation(mu, c * s + t) == c * apply_creation(mu, s) + apply_creation(mu, t));
    }
  }
}

TEST_CASE("occupation split") {
  auto vac = occupation_split(RState::vacuum());
  REQUIRE(vac.size() == 1);
  CHECK(vac[0].n_a == 0);
  CHECK(vac[0].n_b == 0);

  auto s = mono({1, 0, 0}, {0, 1, 0});
  auto one = occupation_split(s);
  REQUIRE(one.size() == 1);
  CHECK(one[0].n_a == 1);
  CHECK(one[0].n_b == 1);
  CHECK(one[0].part == s);

  auto mixed = mono({1, 0, 0}, {0, 0, 0}) + mono({1, 1, 0}, {0, 0, 0});
  auto two = occupation_split(mixed);
  REQUIRE(two.size() == 2);
  CHECK(two[0].n_a == 1);
  CHECK(two[1].n_a == 2);
  CHECK(homogeneous_total(mixed) == -1);
  CHECK(homogeneous_total(s) == 2);
}

TEST_CASE("monomial enumeration counts") {
  // C(k+5, 5) monomials of total k in six modes.
  CHECK(monomials_in_sector(0, 0).size() == 1);
  CHECK(monomials_in_sector(1, 1).size() == 9);
  CHECK(monomials_in_sector(2, 1).size() == 18);
  CHECK(monomials_up_to(2).size() == 1 + 6 + 21);
  CHECK(monomials_up_to(6).size() == 924);
  auto all = monomials_up_to(4);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("mode and monomial validation") {
  CHECK_THROWS_AS((Mode{Species::A, 0}.slot()), std::domain_error);
  CHECK_THROWS_AS((Mode{Species::B, 4}.slot()), std::domain_error);
  CHECK_THROWS(FockMonomial({-1, 0, 0}, {0, 0, 0}));
}

TEST_CASE("state serialization round-trips") {
  auto s = Rational::normalize(2, 3) * mono({1, 0, 0}, {1, 0, 0}) - Rational::normalize(1, 3) * mono({0, 1, 0}, {0, 1, 0});
  auto j = state_json(s);
  CHECK(rational_state_from_json(j) == s);
  CHECK(j.dump() == Json::parse(j.dump()).dump());
  CHECK(FockMonomial({1, 2, 0}, {0, 0, 3}).to_string() == "1 2 0 | 0 0 3");
}
