#include <stdexcept>
#include <string>

#include "su3sb/operator.hpp"

namespace su3sb {

namespace {

ExtScalar q(long num, long den = 1) { return Rational::normalize(num, den); }

const ExtScalar kI = ExtScalar::i();

}  // namespace

const GellMannTable& gellmann_matrices() {
  static const GellMannTable table = [] {
    GellMannTable t{};
    // λ1
    t[0][0][1] = q(1);
    t[0][1][0] = q(1);
    // λ2
    t[1][0][1] = -kI;
    t[1][1][0] = kI;
    // λ3
    t[2][0][0] = q(1);
    t[2][1][1] = q(-1);
    // λ4
    t[3][0][2] = q(1);
    t[3][2][0] = q(1);
    // λ5
    t[4][0][2] = -kI;
    t[4][2][0] = kI;
    // λ6
    t[5][1][2] = q(1);
    t[5][2][1] = q(1);
    // λ7
    t[6][1][2] = -kI;
    t[6][2][1] = kI;
    // λ8 = diag(1, 1, −2)/√3 = diag(1, 1, −2)·√3/3
    t[7][0][0] = ExtScalar(0, 0, Rational::normalize(1, 3), 0);
    t[7][1][1] = ExtScalar(0, 0, Rational::normalize(1, 3), 0);
    t[7][2][2] = ExtScalar(0, 0, Rational::normalize(-2, 3), 0);
    return t;
  }();
  return table;
}

Operator<ExtScalar> su3_generator_gellmann(int a, const GellMannTable& table) {
  if (a < 1 || a > 8) {
    throw std::domain_error("Gell-Mann index must lie in 1..8");
  }
  const Matrix3& lambda = table[static_cast<std::size_t>(a - 1)];
  const ExtScalar half = q(1, 2);
  Operator<ExtScalar> out;
  for (int row = 1; row <= 3; ++row) {
    for (int col = 1; col <= 3; ++col) {
      const ExtScalar& entry = lambda[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
      if (entry.is_zero()) {
        continue;
      }
      // a†^row λ_{row,col} a_col, and the transposed anti-triplet term −b†_col λ_{row,col} b^row.
      out = out + (half * entry) * (a_dag<ExtScalar>(row) * a_ann<ExtScalar>(col));
      out = out - (half * entry) * (b_dag<ExtScalar>(col) * b_ann<ExtScalar>(row));
    }
  }
  return out;
}

StructureConstantTable StructureConstantTable::from_entries(
    const std::vector<std::pair<std::array<int, 3>, ExtScalar>>& entries) {
  StructureConstantTable t;
  for (const auto& [idx, value] : entries) {
    auto [a, b, c] = idx;
    auto i = static_cast<std::size_t>(a - 1);
    auto j = static_cast<std::size_t>(b - 1);
    auto k = static_cast<std::size_t>(c - 1);
    t.f_[i][j][k] = value;
    t.f_[j][k][i] = value;
    t.f_[k][i][j] = value;
    t.f_[j][i][k] = -value;
    t.f_[i][k][j] = -value;
    t.f_[k][j][i] = -value;
  }
  return t;
}

const StructureConstantTable& StructureConstantTable::standard() {
  static const StructureConstantTable table = from_entries({
      {{1, 2, 3}, q(1)},
      {{1, 4, 7}, q(1, 2)},
      {{1, 5, 6}, q(-1, 2)},
      {{2, 4, 6}, q(1, 2)},
      {{2, 5, 7}, q(1, 2)},
      {{3, 4, 5}, q(1, 2)},
      {{3, 6, 7}, q(-1, 2)},
      {{4, 5, 8}, ExtScalar(0, 0, Rational::normalize(1, 2), 0)},
      {{6, 7, 8}, ExtScalar(0, 0, Rational::normalize(1, 2), 0)},
  });
  return table;
}

const ExtScalar& StructureConstantTable::operator()(int a, int b, int c) const {
  if (a < 1 || a > 8 || b < 1 || b > 8 || c < 1 || c > 8) {
    throw std::domain_error("structure constant index must lie in 1..8");
  }
  return f_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(c - 1)];
}

VerificationReport verify_covariance(const std::vector<StateVector<ExtScalar>>& testset,
                                     const GellMannTable& generator_table) {
  VerificationReport report("covariance");
  const GellMannTable& reference = gellmann_matrices();
  const ExtScalar half = q(1, 2);
  for (int a = 1; a <= 8; ++a) {
    auto generator = su3_generator_gellmann(a, generator_table);
    const Matrix3& lambda = reference[static_cast<std::size_t>(a - 1)];
    for (int alpha = 1; alpha <= 3; ++alpha) {
      auto ua = static_cast<std::size_t>(alpha - 1);

      Operator<ExtScalar> triplet_rhs;
      Operator<ExtScalar> antitriplet_rhs;
      for (int beta = 1; beta <= 3; ++beta) {
        auto ub = static_cast<std::size_t>(beta - 1);
        if (!lambda[ub][ua].is_zero()) {
          triplet_rhs = triplet_rhs + (half * lambda[ub][ua]) * a_dag<ExtScalar>(beta);
        }
        if (!lambda[ua][ub].is_zero()) {
          antitriplet_rhs = antitriplet_rhs - (half * lambda[ua][ub]) * b_dag<ExtScalar>(beta);
        }
      }

      Json params = {{"a", a}, {"index", alpha}};
      record_identity(report, "covariance.triplet/a=" + std::to_string(a) + "/alpha=" + std::to_string(alpha),
                      params, op_commutator(generator, a_dag<ExtScalar>(alpha)), triplet_rhs, testset);
      record_identity(report,
                      "covariance.antitriplet/a=" + std::to_string(a) + "/alpha=" + std::to_string(alpha),
                      params, op_commutator(generator, b_dag<ExtScalar>(alpha)), antitriplet_rhs, testset);
    }
  }
  return report;
}

VerificationReport verify_lie_closure(const std::vector<StateVector<ExtScalar>>& ext_testset,
                                      const std::vector<StateVector<Rational>>& rational_testset,
                                      const GellMannTable& generator_table, const StructureConstantTable& f) {
  VerificationReport report("lie-closure");

  std::vector<Operator<ExtScalar>> generators;
  for (int a = 1; a <= 8; ++a) {
    generators.push_back(su3_generator_gellmann(a, generator_table));
  }
  for (int a = 1; a <= 8; ++a) {
    for (int b = a + 1; b <= 8; ++b) {
      Operator<ExtScalar> rhs;
      for (int c = 1; c <= 8; ++c) {
        if (!f(a, b, c).is_zero()) {
          rhs = rhs + (ExtScalar::i() * f(a, b, c)) * generators[static_cast<std::size_t>(c - 1)];
        }
      }
      auto lhs = op_commutator(generators[static_cast<std::size_t>(a - 1)], generators[static_cast<std::size_t>(b - 1)]);
      std::string id = "lie.gellmann/a=" + std::to_string(a) + "/b=" + std::to_string(b);
      record_identity(report, id, {{"a", a}, {"b", b}}, lhs, rhs, ext_testset);
    }
  }

  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int beta = 1; beta <= 3; ++beta) {
      for (int gamma = 1; gamma <= 3; ++gamma) {
        for (int delta = 1; delta <= 3; ++delta) {
          auto lhs = op_commutator(su3_generator_weyl<Rational>(alpha, beta), su3_generator_weyl<Rational>(gamma, delta));
          Operator<Rational> rhs;
          if (gamma == beta) {
            rhs = rhs + su3_generator_weyl<Rational>(alpha, delta);
          }
          if (alpha == delta) {
            rhs = rhs - su3_generator_weyl<Rational>(gamma, beta);
          }
          std::string id = "lie.weyl/" + std::to_string(alpha) + std::to_string(beta) + std::to_string(gamma) +
                           std::to_string(delta);
          record_identity(report, id, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}}, lhs,
                          rhs, rational_testset);
        }
      }
    }
  }
  return report;
}

}  // namespace su3sb
