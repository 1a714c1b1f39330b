#include "su3sb/fock.hpp"

#include <algorithm>
#include <sstream>

namespace su3sb {

std::size_t Mode::slot() const {
  if (index < 1 || index > 3) {
    throw std::domain_error("mode index must lie in 1..3");
  }
  return static_cast<std::size_t>(index - 1) + (species == Species::A ? 0 : 3);
}

const std::array<Mode, 6>& all_modes() {
  static const std::array<Mode, 6> modes = {
      Mode{Species::A, 1}, Mode{Species::A, 2}, Mode{Species::A, 3},
      Mode{Species::B, 1}, Mode{Species::B, 2}, Mode{Species::B, 3},
  };
  return modes;
}

FockMonomial::FockMonomial(std::array<int, 3> a_exp, std::array<int, 3> b_exp)
    : exps_{a_exp[0], a_exp[1], a_exp[2], b_exp[0], b_exp[1], b_exp[2]} {
  for (int e : exps_) {
    if (e < 0) {
      throw std::domain_error("negative monomial exponent");
    }
  }
}

FockMonomial FockMonomial::raised(Mode mode) const {
  FockMonomial out = *this;
  ++out.exps_[mode.slot()];
  return out;
}

FockMonomial FockMonomial::lowered(Mode mode) const {
  FockMonomial out = *this;
  auto& e = out.exps_[mode.slot()];
  if (e == 0) {
    throw std::domain_error("lowering an empty mode");
  }
  --e;
  return out;
}

mpz_class FockMonomial::norm_weight() const {
  mpz_class w = 1;
  for (int e : exps_) {
    if (e > 1) {
      w *= factorial(static_cast<unsigned>(e));
    }
  }
  return w;
}

std::string FockMonomial::to_string() const {
  std::ostringstream os;
  os << exps_[0] << ' ' << exps_[1] << ' ' << exps_[2] << " | " << exps_[3] << ' ' << exps_[4] << ' '
     << exps_[5];
  return os.str();
}

namespace {

// Compositions of `total` into three non-negative parts, lexicographic.
std::vector<std::array<int, 3>> compositions3(int total) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= total; ++i) {
    for (int j = 0; i + j <= total; ++j) {
      out.push_back({i, j, total - i - j});
    }
  }
  return out;
}

}  // namespace

std::vector<FockMonomial> monomials_in_sector(int n_a, int n_b) {
  std::vector<FockMonomial> out;
  if (n_a < 0 || n_b < 0) {
    return out;
  }
  for (const auto& a : compositions3(n_a)) {
    for (const auto& b : compositions3(n_b)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<FockMonomial> monomials_up_to(int max_total) {
  std::vector<FockMonomial> out;
  for (int total = 0; total <= max_total; ++total) {
    for (int n_a = 0; n_a <= total; ++n_a) {
      auto sector = monomials_in_sector(n_a, total - n_a);
      out.insert(out.end(), sector.begin(), sector.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace su3sb
