#include "su3sb/irreps.hpp"

#include <algorithm>
#include <sstream>

#include "su3sb/linalg.hpp"

namespace su3sb {

namespace {

const Sp2rTriple<Rational>& sp2r() {
  static const Sp2rTriple<Rational> triple = sp2r_triple<Rational>();
  return triple;
}

// 1/(N_a + N_b + 1)
Operator<Rational> inverse_shifted_total() {
  return number_multiplier<Rational>([](int n_a, int n_b) { return Rational(n_a + n_b + 1).inverse(); });
}

StateVector<Rational> raise_k_plus(StateVector<Rational> s, int times) {
  for (int k = 0; k < times && !s.is_zero(); ++k) {
    s = sp2r().k_plus(s);
  }
  return s;
}

void check_index(int value) {
  if (value < 1 || value > 3) {
    throw std::invalid_argument("SU(3) index must lie in 1..3");
  }
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    out += (k ? "," : "") + std::to_string(xs[k]);
  }
  return out;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Explicit:
      return "explicit";
    case Method::Projection:
      return "projection";
    case Method::Isb:
      return "isb";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "explicit") {
    return Method::Explicit;
  }
  if (name == "projection") {
    return Method::Projection;
  }
  if (name == "isb") {
    return Method::Isb;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

IrrepRequest IrrepRequest::make(std::vector<int> upper, std::vector<int> lower) {
  IrrepRequest req{static_cast<int>(upper.size()), static_cast<int>(lower.size()), std::move(upper),
                   std::move(lower)};
  req.validate();
  return req;
}

void IrrepRequest::validate() const {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("n and m must be non-negative");
  }
  if (static_cast<int>(upper.size()) != n || static_cast<int>(lower.size()) != m) {
    throw std::invalid_argument("index tuple lengths must match (n, m)");
  }
  std::for_each(upper.begin(), upper.end(), check_index);
  std::for_each(lower.begin(), lower.end(), check_index);
}

std::vector<IrrepRequest> all_requests(int n, int m) {
  auto tuples = [](int len) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& t : out) {
        for (int v = 1; v <= 3; ++v) {
          auto u = t;
          u.push_back(v);
          next.push_back(std::move(u));
        }
      }
      out = std::move(next);
    }
    return out;
  };
  std::vector<IrrepRequest> out;
  auto uppers = tuples(n);
  auto lowers = tuples(m);
  out.reserve(uppers.size() * lowers.size());
  for (const auto& u : uppers) {
    for (const auto& l : lowers) {
      out.push_back({n, m, u, l});
    }
  }
  return out;
}

std::vector<PairingPattern> pairing_patterns(int n, int m, int r) {
  std::vector<PairingPattern> out;
  if (r < 0 || r > std::min(n, m)) {
    return out;
  }
  PairingPattern current;
  std::vector<bool> k_used(static_cast<std::size_t>(m) + 1, false);
  std::function<void(int)> extend = [&](int next_l) {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    int remaining = r - static_cast<int>(current.size());
    for (int l = next_l; l <= n - remaining + 1; ++l) {
      for (int k = 1; k <= m; ++k) {
        if (k_used[static_cast<std::size_t>(k)]) {
          continue;
        }
        k_used[static_cast<std::size_t>(k)] = true;
        current.emplace_back(l, k);
        extend(l + 1);
        current.pop_back();
        k_used[static_cast<std::size_t>(k)] = false;
      }
    }
  };
  extend(1);
  return out;
}

StateVector<Rational> tensor_monomial(const IrrepRequest& req) {
  req.validate();
  std::array<int, 3> a{};
  std::array<int, 3> b{};
  for (int alpha : req.upper) {
    ++a[static_cast<std::size_t>(alpha - 1)];
  }
  for (int beta : req.lower) {
    ++b[static_cast<std::size_t>(beta - 1)];
  }
  return StateVector<Rational>::monomial(FockMonomial(a, b));
}

Rational coefficient_L(int r, int n, int m) {
  if (r < 1 || r > std::min(n, m)) {
    throw std::domain_error("coefficient_L requires 1 <= r <= min(n, m)");
  }
  mpz_class denom = 1;
  for (int j = 0; j < r; ++j) {
    denom *= n + m + 1 - j;
  }
  return Rational::normalize(mpz_class(r % 2 == 0 ? 1 : -1), denom);
}

Rational coefficient_l(int r, int n, int m) {
  if (r < 0 || n < 0 || m < 0 || r > n + m + 1) {
    throw std::domain_error("coefficient_l requires 0 <= r <= n + m + 1");
  }
  auto top = static_cast<unsigned>(n + m + 1);
  mpz_class num = factorial(top - static_cast<unsigned>(r));
  mpz_class den = factorial(static_cast<unsigned>(r)) * factorial(top);
  if (r % 2 == 1) {
    num = -num;
  }
  return Rational::normalize(num, den);
}

IrrepState irrep_explicit(const IrrepRequest& req) {
  req.validate();
  StateVector<Rational> result = tensor_monomial(req);
  for (int r = 1; r <= req.q(); ++r) {
    StateVector<Rational> contracted;
    for (const auto& pattern : pairing_patterns(req.n, req.m, r)) {
      bool matched = std::all_of(pattern.begin(), pattern.end(), [&](const auto& lk) {
        return req.upper[static_cast<std::size_t>(lk.first - 1)] == req.lower[static_cast<std::size_t>(lk.second - 1)];
      });
      if (!matched) {
        continue;
      }
      IrrepRequest reduced{req.n - r, req.m - r, {}, {}};
      for (int l = 1; l <= req.n; ++l) {
        if (std::none_of(pattern.begin(), pattern.end(), [l](const auto& lk) { return lk.first == l; })) {
          reduced.upper.push_back(req.upper[static_cast<std::size_t>(l - 1)]);
        }
      }
      for (int k = 1; k <= req.m; ++k) {
        if (std::none_of(pattern.begin(), pattern.end(), [k](const auto& lk) { return lk.second == k; })) {
          reduced.lower.push_back(req.lower[static_cast<std::size_t>(k - 1)]);
        }
      }
      contracted += tensor_monomial(reduced);
    }
    result += coefficient_L(r, req.n, req.m) * raise_k_plus(std::move(contracted), r);
  }
  return {req, std::move(result), Method::Explicit};
}

Operator<Rational> projector(int n, int m) {
  Operator<Rational> out = Operator<Rational>::identity();
  for (int r = 1; r <= std::min(n, m); ++r) {
    out = out + coefficient_l(r, n, m) * (power(sp2r().k_plus, r) * power(sp2r().k_minus, r));
  }
  return out;
}

IrrepState projection_apply(const IrrepRequest& req) {
  req.validate();
  return {req, projector(req.n, req.m)(tensor_monomial(req)), Method::Projection};
}

Operator<Rational> isb_A_dagger(int alpha) {
  check_index(alpha);
  return a_dag<Rational>(alpha) - inverse_shifted_total() * sp2r().k_plus * b_ann<Rational>(alpha);
}

Operator<Rational> isb_B_dagger(int beta) {
  check_index(beta);
  return b_dag<Rational>(beta) - inverse_shifted_total() * sp2r().k_plus * a_ann<Rational>(beta);
}

Operator<Rational> isb_A(int alpha) {
  check_index(alpha);
  return a_ann<Rational>(alpha) - b_dag<Rational>(alpha) * sp2r().k_minus * inverse_shifted_total();
}

Operator<Rational> isb_B(int beta) {
  check_index(beta);
  return b_ann<Rational>(beta) - a_dag<Rational>(beta) * sp2r().k_minus * inverse_shifted_total();
}

IrrepState irrep_isb(const IrrepRequest& req) {
  req.validate();
  auto s = StateVector<Rational>::vacuum();
  for (auto it = req.lower.rbegin(); it != req.lower.rend(); ++it) {
    s = isb_B_dagger(*it)(s);
  }
  for (auto it = req.upper.rbegin(); it != req.upper.rend(); ++it) {
    s = isb_A_dagger(*it)(s);
  }
  return {req, std::move(s), Method::Isb};
}

IrrepState build_irrep(const IrrepRequest& req, Method method) {
  switch (method) {
    case Method::Explicit:
      return irrep_explicit(req);
    case Method::Projection:
      return projection_apply(req);
    case Method::Isb:
      return irrep_isb(req);
  }
  throw std::invalid_argument("unknown method");
}

StateVector<Rational> trace_contract(const IrrepRequest& req, int l, int k,
                                     const std::function<StateVector<Rational>(const IrrepRequest&)>& build) {
  req.validate();
  if (l < 1 || l > req.n || k < 1 || k > req.m) {
    throw std::domain_error("trace_contract requires 1 <= l <= n and 1 <= k <= m");
  }
  StateVector<Rational> sum;
  for (int gamma = 1; gamma <= 3; ++gamma) {
    IrrepRequest r = req;
    r.upper[static_cast<std::size_t>(l - 1)] = gamma;
    r.lower[static_cast<std::size_t>(k - 1)] = gamma;
    sum += build(r);
  }
  return sum;
}

StateVector<Rational> trace_contract(const IrrepState& state, int l, int k) {
  return trace_contract(state.request, l, k,
                        [method = state.method](const IrrepRequest& r) { return build_irrep(r, method).vector; });
}

Sp2rWeight sp2r_weight(const StateVector<Rational>& s) {
  int total = homogeneous_total(s);
  if (total < 0) {
    throw std::domain_error("sp2r_weight requires a nonzero state of homogeneous total occupation");
  }
  Rational m_prime = Rational::normalize(total + 3, 2);
  int rho = 0;
  for (auto t = sp2r().k_minus(s); !t.is_zero(); t = sp2r().k_minus(t)) {
    ++rho;
  }
  return {m_prime - rho, m_prime};
}

StateVector<Rational> tower_state(const IrrepRequest& req, int rho) {
  if (rho < 0) {
    throw std::domain_error("tower power must be non-negative");
  }
  return raise_k_plus(irrep_isb(req).vector, rho);
}

long irrep_dimension(int n, int m) { return static_cast<long>(n + 1) * (m + 1) * (n + m + 2) / 2; }

std::size_t gram_rank(int n, int m, int max_total) {
  if (n < 0 || m < 0) {
    throw std::domain_error("n and m must be non-negative");
  }
  if (n + m > max_total) {
    throw ResourceError("gram_rank: n + m = " + std::to_string(n + m) + " exceeds bound " + std::to_string(max_total));
  }
  std::vector<StateVector<Rational>> states;
  for (const auto& req : all_requests(n, m)) {
    states.push_back(irrep_isb(req).vector);
  }
  return gram_rank_of(states);
}

VerificationReport ladder_check(int n, int m) {
  VerificationReport report("ladder");
  const std::string tag = "/n=" + std::to_string(n) + "/m=" + std::to_string(m);
  const Json params = {{"n", n}, {"m", m}};

  std::optional<Json> a_failure;
  std::optional<Json> b_failure;
  for (const auto& req : all_requests(n, m)) {
    auto base = irrep_explicit(req).vector;
    for (int index = 1; index <= 3 && !(a_failure && b_failure); ++index) {
      if (!a_failure) {
        IrrepRequest up = req;
        up.upper.insert(up.upper.begin(), index);
        up.n += 1;
        auto lhs = isb_A_dagger(index)(base);
        auto rhs = irrep_explicit(up).vector;
        if (lhs != rhs) {
          a_failure = Json{{"upper", req.upper}, {"lower", req.lower}, {"alpha", index},
                           {"lhs", state_json(lhs)}, {"rhs", state_json(rhs)}};
        }
      }
      if (!b_failure) {
        IrrepRequest down = req;
        down.lower.insert(down.lower.begin(), index);
        down.m += 1;
        auto lhs = isb_B_dagger(index)(base);
        auto rhs = irrep_explicit(down).vector;
        if (lhs != rhs) {
          b_failure = Json{{"upper", req.upper}, {"lower", req.lower}, {"beta", index},
                           {"lhs", state_json(lhs)}, {"rhs", state_json(rhs)}};
        }
      }
    }
  }
  a_failure ? report.add_fail("ladder.A_dagger" + tag, params, *a_failure) : report.add_pass("ladder.A_dagger" + tag, params);
  b_failure ? report.add_fail("ladder.B_dagger" + tag, params, *b_failure) : report.add_pass("ladder.B_dagger" + tag, params);
  return report;
}

VerificationReport generator_closure_check(int n, int m) {
  VerificationReport report("generator-closure");
  std::vector<StateVector<Rational>> states;
  for (const auto& req : all_requests(n, m)) {
    states.push_back(irrep_isb(req).vector);
  }
  std::vector<StateVector<ExtScalar>> basis;
  for (std::size_t k : independent_subset(states)) {
    basis.push_back(states[k].cast<ExtScalar>());
  }
  const std::string tag = "/n=" + std::to_string(n) + "/m=" + std::to_string(m);
  for (int a = 1; a <= 8; ++a) {
    auto generator = su3_generator_gellmann(a);
    Json params = {{"n", n}, {"m", m}, {"a", a}, {"basis_size", basis.size()}};
    std::optional<Json> failure;
    for (const auto& v : basis) {
      auto image = generator(v);
      if (!solve_in_span(basis, image)) {
        failure = Json{{"input", state_json(v)}, {"image", state_json(image)}};
        break;
      }
    }
    std::string id = "closure" + tag + "/a=" + std::to_string(a);
    failure ? report.add_fail(id, params, *failure) : report.add_pass(id, params);
  }
  return report;
}

Json irrep_state_json(const IrrepState& state) {
  Json out;
  out["label"] = Json::array({state.request.n, state.request.m});
  out["upper"] = state.request.upper;
  out["lower"] = state.request.lower;
  out["terms"] = state_json(state.vector);
  return out;
}

std::string irrep_state_text(const IrrepState& state) {
  std::ostringstream os;
  os << "irrep (" << state.request.n << "," << state.request.m << ")  upper=[" << join(state.request.upper)
     << "]  lower=[" << join(state.request.lower) << "]\n";
  os << state_text(state.vector);
  return os.str();
}

}  // namespace su3sb
