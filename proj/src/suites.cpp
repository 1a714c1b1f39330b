#include "su3sb/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "su3sb/irreps.hpp"
#include "su3sb/linalg.hpp"
#include "su3sb/su2.hpp"

namespace su3sb {

namespace {

std::string nm_tag(int n, int m) { return "/n=" + std::to_string(n) + "/m=" + std::to_string(m); }

std::string mode_name(Mode mode) {
  return std::string(mode.species == Species::A ? "a" : "b") + std::to_string(mode.index);
}

void record(VerificationReport& report, std::string id, Json params, const std::optional<Json>& failure) {
  if (failure) {
    report.add_fail(std::move(id), std::move(params), *failure);
  } else {
    report.add_pass(std::move(id), std::move(params));
  }
}

GellMannTable faulty_table() {
  GellMannTable t = gellmann_matrices();
  for (auto& row : t[4]) {
    for (auto& entry : row) {
      entry = -entry;
    }
  }
  return t;
}

// Irrep states of one (n,m) sector, keyed by (upper, lower).
using Sector = std::map<std::pair<std::vector<int>, std::vector<int>>, StateVector<Rational>>;

Sector build_sector(int n, int m, Method method) {
  Sector out;
  for (const auto& req : all_requests(n, m)) {
    out.emplace(std::make_pair(req.upper, req.lower), build_irrep(req, method).vector);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oscillator", "su2", "algebra", "sp2r", "irreps", "isb", "ladder"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport oscillator_suite(int max_total) {
  VerificationReport report("oscillator");
  const auto testset = monomial_testset<Rational>(max_total);
  const Json bound = {{"max_total", max_total}};

  for (const auto& mu : all_modes()) {
    // Adjointness: only pairs with total(M') = total(M) + 1 can be nonzero on either side.
    std::optional<Json> failure;
    for (int t = 0; t < max_total && !failure; ++t) {
      for (int na = 0; na <= t && !failure; ++na) {
        for (const auto& m1 : monomials_in_sector(na, t - na)) {
          auto left = apply_creation(mu, StateVector<Rational>::monomial(m1));
          for (int na2 = 0; na2 <= t + 1 && !failure; ++na2) {
            for (const auto& m2 : monomials_in_sector(na2, t + 1 - na2)) {
              auto right_state = StateVector<Rational>::monomial(m2);
              auto lhs = inner_product(left, right_state);
              auto rhs = inner_product(StateVector<Rational>::monomial(m1), apply_annihilation(mu, right_state));
              if (lhs != rhs) {
                failure = Json{{"bra", m1.to_string()}, {"ket", m2.to_string()}, {"lhs", lhs.to_string()},
                               {"rhs", rhs.to_string()}};
                break;
              }
            }
          }
          if (failure) {
            break;
          }
        }
      }
    }
    Json params = bound;
    params["mode"] = mode_name(mu);
    record(report, "oscillator.adjoint/" + mode_name(mu), params, failure);
  }

  for (const auto& mu : all_modes()) {
    for (const auto& nu : all_modes()) {
      Json params = bound;
      params["mu"] = mode_name(mu);
      params["nu"] = mode_name(nu);
      const std::string pair = mode_name(mu) + "," + mode_name(nu);
      auto ccr_rhs = mu == nu ? Operator<Rational>::identity() : Operator<Rational>();
      record_identity(report, "oscillator.ccr/" + pair, params,
                      op_commutator(annihilation<Rational>(mu), creation<Rational>(nu)), ccr_rhs, testset);
      record_identity(report, "oscillator.creation_commute/" + pair, params,
                      op_commutator(creation<Rational>(mu), creation<Rational>(nu)), Operator<Rational>(), testset);
      record_identity(report, "oscillator.annihilation_commute/" + pair, params,
                      op_commutator(annihilation<Rational>(mu), annihilation<Rational>(nu)), Operator<Rational>(),
                      testset);
    }
  }
  return report;
}

VerificationReport su2_suite(int max_total) {
  VerificationReport report("su2");
  const auto testset = su2_monomial_testset(max_total);
  const auto g = su2_generators();
  const Json bound = {{"max_n", max_total}};

  record_identity(report, "su2.bracket_3_plus", bound, op_commutator(g.j_3, g.j_plus), g.j_plus, testset);
  record_identity(report, "su2.bracket_3_minus", bound, op_commutator(g.j_3, g.j_minus), -g.j_minus, testset);
  record_identity(report, "su2.bracket_plus_minus", bound, op_commutator(g.j_plus, g.j_minus),
                  Rational(2) * g.j_3, testset);
  record_identity(report, "su2.casimir_forms_agree", bound, su2_casimir_bilinear(), g.j_squared, testset);

  for (int n = 0; n <= max_total; ++n) {
    std::vector<StateVector<Rational>> states;
    std::optional<Json> eigen_failure;
    const Rational j = Rational::normalize(n, 2);
    const Rational eigenvalue = j * (j + 1);
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> indices;
      for (int bit = 0; bit < n; ++bit) {
        indices.push_back((mask >> bit) & 1 ? 2 : 1);
      }
      auto state = su2_irrep_state(indices);
      if (!eigen_failure && g.j_squared(state.vector) != eigenvalue * state.vector) {
        eigen_failure = Json{{"indices", indices}, {"state", state_json(state.vector)}};
      }
      states.push_back(std::move(state.vector));
    }
    const Json params = {{"n", n}};
    record(report, "su2.casimir_eigen/n=" + std::to_string(n), params, eigen_failure);
    auto rank = gram_rank_of(states);
    std::optional<Json> rank_failure;
    if (rank != static_cast<std::size_t>(n + 1)) {
      rank_failure = Json{{"gram_rank", rank}, {"expected", n + 1}};
    }
    record(report, "su2.gram_rank/n=" + std::to_string(n), params, rank_failure);
  }
  return report;
}

VerificationReport algebra_suite(int max_total, bool inject_fault) {
  VerificationReport report("algebra");
  const GellMannTable table = inject_fault ? faulty_table() : gellmann_matrices();
  const auto ext_testset = monomial_testset<ExtScalar>(max_total);
  const auto rational_testset = monomial_testset<Rational>(max_total);

  report.merge(verify_covariance(ext_testset, table));
  report.merge(verify_lie_closure(ext_testset, rational_testset, table));

  const ExtScalar half = Rational::normalize(1, 2);
  const auto& reference = gellmann_matrices();
  for (int a = 1; a <= 8; ++a) {
    auto q = su3_generator_gellmann(a, table);
    Operator<ExtScalar> from_weyl;
    for (int alpha = 1; alpha <= 3; ++alpha) {
      for (int beta = 1; beta <= 3; ++beta) {
        const auto& entry = reference[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(alpha - 1)]
                                     [static_cast<std::size_t>(beta - 1)];
        if (!entry.is_zero()) {
          from_weyl = from_weyl + (half * entry) * su3_generator_weyl<ExtScalar>(alpha, beta);
        }
      }
    }
    const Json params = {{"a", a}, {"max_total", max_total}};
    const std::string suffix = "/a=" + std::to_string(a);
    record_identity(report, "algebra.weyl_agreement" + suffix, params, q, from_weyl, ext_testset);
    record_identity(report, "algebra.casimir_na" + suffix, params, op_commutator(q, number_a<ExtScalar>()),
                    Operator<ExtScalar>(), ext_testset);
    record_identity(report, "algebra.casimir_nb" + suffix, params, op_commutator(q, number_b<ExtScalar>()),
                    Operator<ExtScalar>(), ext_testset);
  }
  return report;
}

VerificationReport sp2r_suite(int max_total) {
  VerificationReport report("sp2r");
  const auto testset = monomial_testset<Rational>(max_total);
  const auto k = sp2r_triple<Rational>();
  const Json bound = {{"max_total", max_total}};
  record_identity(report, "sp2r.minus_plus", bound, op_commutator(k.k_minus, k.k_plus), Rational(2) * k.k_zero,
                  testset);
  record_identity(report, "sp2r.zero_plus", bound, op_commutator(k.k_zero, k.k_plus), k.k_plus, testset);
  record_identity(report, "sp2r.zero_minus", bound, op_commutator(k.k_zero, k.k_minus), -k.k_minus, testset);

  const auto ext_testset = monomial_testset<ExtScalar>(max_total);
  const auto kx = sp2r_triple<ExtScalar>();
  for (int a = 1; a <= 8; ++a) {
    auto q = su3_generator_gellmann(a);
    Json params = bound;
    params["a"] = a;
    record_identity(report, "sp2r.invariant_plus/a=" + std::to_string(a), params, op_commutator(q, kx.k_plus),
                    Operator<ExtScalar>(), ext_testset);
    record_identity(report, "sp2r.invariant_minus/a=" + std::to_string(a), params, op_commutator(q, kx.k_minus),
                    Operator<ExtScalar>(), ext_testset);
  }
  return report;
}

VerificationReport irreps_suite(int max_total) {
  VerificationReport report("irreps");
  const auto k_minus = sp2r_triple<Rational>().k_minus;

  for (int total = 0; total <= max_total; ++total) {
    for (int n = total; n >= 0; --n) {
      const int m = total - n;
      const Json params = {{"n", n}, {"m", m}};
      const std::string tag = nm_tag(n, m);

      Sector explicit_states = build_sector(n, m, Method::Explicit);
      Sector projected = build_sector(n, m, Method::Projection);
      Sector isb_states = build_sector(n, m, Method::Isb);

      std::optional<Json> path_failure;
      for (const auto& [key, vec] : explicit_states) {
        if (vec != projected.at(key) || vec != isb_states.at(key)) {
          path_failure = Json{{"upper", key.first},
                              {"lower", key.second},
                              {"explicit", state_json(vec)},
                              {"projection", state_json(projected.at(key))},
                              {"isb", state_json(isb_states.at(key))}};
          break;
        }
      }
      record(report, "irreps.three_path" + tag, params, path_failure);

      // C1/C2: every permutation of a tuple is itself enumerated, so comparing
      // against the sorted representative covers all permutations.
      std::optional<Json> symmetry_failure;
      for (const auto* sector : {&explicit_states, &projected, &isb_states}) {
        for (const auto& [key, vec] : *sector) {
          auto upper = key.first;
          auto lower = key.second;
          std::sort(upper.begin(), upper.end());
          std::sort(lower.begin(), lower.end());
          if (sector->at({upper, lower}) != vec) {
            symmetry_failure = Json{{"upper", key.first}, {"lower", key.second}};
            break;
          }
        }
        if (symmetry_failure) {
          break;
        }
      }
      record(report, "irreps.symmetry" + tag, params, symmetry_failure);

      std::optional<Json> trace_failure;
      std::optional<Json> annihilation_failure;
      std::optional<Json> idempotence_failure;
      const auto p = projector(n, m);
      for (const auto* sector : {&explicit_states, &projected, &isb_states}) {
        auto lookup = [sector](const IrrepRequest& r) { return sector->at({r.upper, r.lower}); };
        for (const auto& [key, vec] : *sector) {
          IrrepRequest req{n, m, key.first, key.second};
          for (int l = 1; l <= n && !trace_failure; ++l) {
            for (int k = 1; k <= m && !trace_failure; ++k) {
              auto contracted = trace_contract(req, l, k, lookup);
              if (!contracted.is_zero()) {
                trace_failure = Json{{"upper", key.first}, {"lower", key.second}, {"l", l}, {"k", k},
                                     {"contraction", state_json(contracted)}};
              }
            }
          }
          if (!annihilation_failure) {
            auto image = k_minus(vec);
            if (!image.is_zero()) {
              annihilation_failure = Json{{"upper", key.first}, {"lower", key.second}, {"image", state_json(image)}};
            }
          }
          if (!idempotence_failure && p(vec) != vec) {
            idempotence_failure = Json{{"upper", key.first}, {"lower", key.second}};
          }
        }
      }
      record(report, "irreps.traceless" + tag, params, trace_failure);
      record(report, "irreps.k_minus_annihilates" + tag, params, annihilation_failure);
      record(report, "irreps.idempotent" + tag, params, idempotence_failure);

      std::optional<Json> rank_failure;
      auto rank = gram_rank(n, m, max_total);
      if (static_cast<long>(rank) != irrep_dimension(n, m)) {
        rank_failure = Json{{"gram_rank", rank}, {"dimension", irrep_dimension(n, m)}};
      }
      record(report, "irreps.gram_rank" + tag, params, rank_failure);
      report.merge(generator_closure_check(n, m));
    }
  }

  // Coefficient identities over a wider range; they cost nothing.
  const int coeff_bound = 2 * max_total;
  std::optional<Json> recurrence_failure;
  std::optional<Json> l_vs_L_failure;
  std::optional<Json> shift_failure;
  for (int n = 0; n <= coeff_bound; ++n) {
    for (int m = 0; n + m <= coeff_bound; ++m) {
      for (int r = 1; r <= std::min(n, m); ++r) {
        const int s = n + m;
        if (!recurrence_failure &&
            Rational(r * (s + 2 - r)) * coefficient_l(r, n, m) != -coefficient_l(r - 1, n, m)) {
          recurrence_failure = Json{{"n", n}, {"m", m}, {"r", r}};
        }
        if (!l_vs_L_failure && Rational(factorial(static_cast<unsigned>(r))) * coefficient_l(r, n, m) !=
                                   coefficient_L(r, n, m)) {
          l_vs_L_failure = Json{{"n", n}, {"m", m}, {"r", r}};
        }
        if (!shift_failure &&
            coefficient_l(r, n + 1, m) != Rational::normalize(s + 2 - r, s + 2) * coefficient_l(r, n, m)) {
          shift_failure = Json{{"n", n}, {"m", m}, {"r", r}};
        }
      }
    }
  }
  const Json coeff_params = {{"max_n_plus_m", coeff_bound}};
  record(report, "irreps.coefficient_recurrence", coeff_params, recurrence_failure);
  record(report, "irreps.coefficient_l_times_factorial", coeff_params, l_vs_L_failure);
  record(report, "irreps.coefficient_shift", coeff_params, shift_failure);
  return report;
}

VerificationReport isb_suite(int max_total) {
  VerificationReport report("isb");
  const auto testset = monomial_testset<Rational>(max_total);
  const Json bound = {{"max_total", max_total}};

  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int beta = 1; beta <= 3; ++beta) {
      Json params = bound;
      params["alpha"] = alpha;
      params["beta"] = beta;
      const std::string pair = "/" + std::to_string(alpha) + std::to_string(beta);
      record_identity(report, "isb.commute_AA" + pair, params, op_commutator(isb_A_dagger(alpha), isb_A_dagger(beta)),
                      Operator<Rational>(), testset);
      record_identity(report, "isb.commute_BB" + pair, params, op_commutator(isb_B_dagger(alpha), isb_B_dagger(beta)),
                      Operator<Rational>(), testset);
      record_identity(report, "isb.commute_AB" + pair, params, op_commutator(isb_A_dagger(alpha), isb_B_dagger(beta)),
                      Operator<Rational>(), testset);
    }
  }

  const auto inverse_plus_two =
      number_multiplier<Rational>([](int n_a, int n_b) { return Rational(n_a + n_b + 2).inverse(); });
  for (int total = 0; total <= max_total; ++total) {
    for (int n = total; n >= 0; --n) {
      const int m = total - n;
      std::vector<StateVector<Rational>> irreps;
      for (const auto& req : all_requests(n, m)) {
        irreps.push_back(irrep_isb(req).vector);
      }
      const Json params = {{"n", n}, {"m", m}};
      const std::string tag = nm_tag(n, m);

      Operator<Rational> a_dot_b;
      Operator<Rational> a_dag_dot_b_dag;
      for (int g = 1; g <= 3; ++g) {
        a_dot_b = a_dot_b + isb_A(g) * isb_B(g);
        a_dag_dot_b_dag = a_dag_dot_b_dag + isb_A_dagger(g) * isb_B_dagger(g);
      }
      record_identity(report, "isb.AB_annihilates" + tag, params, a_dot_b, Operator<Rational>(), irreps);
      record_identity(report, "isb.AdagBdag_annihilates" + tag, params, a_dag_dot_b_dag, Operator<Rational>(), irreps);

      for (int alpha = 1; alpha <= 3; ++alpha) {
        for (int beta = 1; beta <= 3; ++beta) {
          const auto delta = alpha == beta ? Operator<Rational>::identity() : Operator<Rational>();
          Json p = params;
          p["alpha"] = alpha;
          p["beta"] = beta;
          const std::string suffix = tag + "/" + std::to_string(alpha) + std::to_string(beta);
          record_identity(report, "isb.relation_A_Adag" + suffix, p, op_commutator(isb_A(alpha), isb_A_dagger(beta)),
                          delta - inverse_plus_two * isb_B_dagger(alpha) * isb_B(beta), irreps);
          record_identity(report, "isb.relation_A_Bdag" + suffix, p, op_commutator(isb_A(alpha), isb_B_dagger(beta)),
                          -(inverse_plus_two * isb_B_dagger(alpha) * isb_A(beta)), irreps);
          record_identity(report, "isb.relation_B_Bdag" + suffix, p, op_commutator(isb_B(alpha), isb_B_dagger(beta)),
                          delta - inverse_plus_two * isb_A_dagger(alpha) * isb_A(beta), irreps);
        }
      }
    }
  }
  return report;
}

VerificationReport ladder_suite(int max_total) {
  VerificationReport report("ladder");
  for (int total = 0; total <= max_total; ++total) {
    for (int n = total; n >= 0; --n) {
      report.merge(ladder_check(n, total - n));
    }
  }
  return report;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (options.max_total < 0) {
    throw std::invalid_argument("max-total must be non-negative");
  }
  const auto start = std::chrono::steady_clock::now();
  const int t = options.max_total;
  VerificationReport report{std::string(name)};
  auto wanted = [&](std::string_view suite) { return name == "all" || name == suite; };
  if (!is_suite_name(name)) {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  if (wanted("oscillator")) report.merge(oscillator_suite(t));
  if (wanted("su2")) report.merge(su2_suite(t));
  if (wanted("algebra")) report.merge(algebra_suite(t, options.inject_fault));
  if (wanted("sp2r")) report.merge(sp2r_suite(t));
  if (wanted("irreps")) report.merge(irreps_suite(t));
  if (wanted("isb")) report.merge(isb_suite(t));
  if (wanted("ladder")) report.merge(ladder_suite(t));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.set_wall_time_seconds(std::chrono::duration<double>(elapsed).count());
  return report;
}

}  // namespace su3sb
