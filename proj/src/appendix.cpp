#include "skewo/appendix.hpp"

#include "skewo/linalg.hpp"

#include <set>
#include <stdexcept>

namespace skewo {

namespace {

using AE = AlgebraElement;

Poly parameter(const DeformationSpec& spec, const std::string& name) {
  auto it = spec.fixed.find(name);
  return it == spec.fixed.end() ? Poly::var(name) : Poly(it->second);
}

std::vector<std::vector<FactorExp>> monomials_up_to(int n, int d_max) {
  std::vector<std::vector<FactorExp>> out;
  const int vars = 3 * n;
  std::vector<int> k(static_cast<std::size_t>(vars), 0);
  while (true) {
    int sum = 0;
    for (int v : k) sum += v;
    if (sum <= d_max) {
      std::vector<FactorExp> fx(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        fx[static_cast<std::size_t>(i)] = {static_cast<std::uint16_t>(k[3 * i]), static_cast<std::uint16_t>(k[3 * i + 1]),
                                           static_cast<std::uint16_t>(k[3 * i + 2])};
      out.push_back(std::move(fx));
    }
    int i = 0;
    while (i < vars && ++k[static_cast<std::size_t>(i)] > d_max) k[static_cast<std::size_t>(i++)] = 0;
    if (i == vars) break;
  }
  return out;
}

std::string w_name(int i, int j, std::size_t idx) {
  return "w" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(idx);
}

AE f_of_casimir(const DeformationSpec& spec, const GammaSpec& gamma, int i) {
  AE out(gamma);
  const AE omega = casimir(gamma, i);
  AE power = AE::scalar(gamma, Poly(1));
  for (std::size_t k = 0; k < spec.f.size(); ++k) {
    if (k) power = power * omega;
    out += spec.f[k] * power;
  }
  return out;
}

void check_spec(const DeformationSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("deformation: n must be at least 2");
  if (spec.w_degree < 0) throw std::invalid_argument("deformation: w degree must be nonnegative");
}

class LinearSystem {
 public:
  explicit LinearSystem(std::vector<std::string> unknowns) : names_(std::move(unknowns)) {
    for (std::size_t k = 0; k < names_.size(); ++k) index_.emplace(names_[k], k);
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t column(const std::string& name) const { return index_.at(name); }
  bool has(const std::string& name) const { return index_.count(name) > 0; }

  /// Adds one equation "coefficient = 0" per monomial of `a`.
  void add_all(const AE& a, SparseEliminator<Rational>& elim) {
    for (const auto& [m, c] : a.terms()) add(c, elim);
  }

  void add(const Poly& p, SparseEliminator<Rational>& elim) {
    SparseEliminator<Rational>::Row row;
    for (const auto& [mono, coef] : p.terms()) {
      std::size_t unknown_vars = 0;
      std::optional<std::size_t> col;
      for (const auto& [v, e] : mono.powers) {
        auto it = index_.find(var_name(v));
        if (it == index_.end()) continue;
        unknown_vars += e;
        col = it->second;
      }
      if (unknown_vars == 0) {
        consistent_ = false;  // a nonzero term free of unknowns can never cancel
        continue;
      }
      if (unknown_vars > 1 || mono.powers.size() != 1)
        throw ConsistencyError("deformation constraint is not linear in the unknowns: " + p.to_string());
      row[*col] += coef;
    }
    elim.add_row(std::move(row));
  }

  bool consistent() const { return consistent_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  bool consistent_ = true;
};

}  // namespace

DeformationSpec make_deformation(int n, const std::vector<Rational>& f) {
  DeformationSpec spec;
  spec.n = n;
  for (const auto& q : f) spec.f.emplace_back(q);
  return spec;
}

std::vector<std::string> w_unknowns(const DeformationSpec& spec, int i, int j) {
  if (spec.fixed.count("w")) return {};
  std::vector<std::string> out;
  const auto monos = monomials_up_to(spec.n, spec.w_degree);
  for (std::size_t k = 0; k < monos.size(); ++k) out.push_back(w_name(i, j, k));
  return out;
}

RhsMap build_deformed_rhs(const DeformationSpec& spec) {
  check_spec(spec);
  const GammaSpec gamma = GammaSpec::symmetric(spec.n);
  const GammaSpec one = GammaSpec::trivial(1);
  const AE omega1 = casimir(one, 0);
  const Poly c = parameter(spec, "c"), d = parameter(spec, "d"), u = parameter(spec, "u"), v = parameter(spec, "v");
  const auto monos = spec.fixed.count("w") ? std::vector<std::vector<FactorExp>>{} : monomials_up_to(spec.n, spec.w_degree);

  RhsMap rhs;
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      AE r(gamma);
      if (i == j) {
        r = f_of_casimir(spec, gamma, i);
        for (int l = 0; l < spec.n; ++l) {
          if (l == i) continue;
          const AE s = AE::group(gamma, Permutation::transposition(spec.n, i, l));
          r += (c * s + AE::scalar(gamma, d)) * m_one_S_delta(omega1, gamma, i, l);
        }
      } else {
        const AE s = AE::group(gamma, Permutation::transposition(spec.n, i, j));
        r = u * s + v * (s * m_one_S_delta(omega1, gamma, i, j));
        for (std::size_t k = 0; k < monos.size(); ++k)
          r.add(PbwMonomial{monos[k], Permutation::identity(spec.n)}, Poly::var(w_name(i, j, k)));
      }
      rhs.emplace(std::make_pair(i, j), std::move(r));
    }
  }
  return rhs;
}

AlgebraElement obstruction_ek(const RhsMap& rhs, int n, int k) {
  const GammaSpec gamma = GammaSpec::symmetric(n);
  AE total(gamma);
  for (int i = 0; i < n; ++i) total += rhs.at({i, i});
  return commutator(AE::e(gamma, k), total);
}

AlgebraElement obstruction_ek(const DeformationSpec& spec, int k) {
  if (k < 0 || k >= spec.n) throw std::invalid_argument("obstruction_ek: k out of range");
  return obstruction_ek(build_deformed_rhs(spec), spec.n, k);
}

bool weight_vector_check(const AlgebraElement& a, const Weight& eta) {
  if (eta.size() != a.rank()) throw std::invalid_argument("weight_vector_check: rank mismatch");
  for (int i = 0; i < a.rank(); ++i) {
    const AE lhs = commutator(AE::h(a.gamma(), i), a);
    if (!(lhs == Poly(eta(i)) * a)) return false;
  }
  return true;
}

NoGoReport verify_no_go(const DeformationSpec& spec) {
  check_spec(spec);
  if (spec.n > 3) throw std::invalid_argument("verify_no_go: n must be 2 or 3");
  const int n = spec.n;
  const GammaSpec gamma = GammaSpec::symmetric(n);
  NoGoReport rep;
  rep.n = n;

  // sign and scale of the mixed term
  {
    const AE omega1 = casimir(GammaSpec::trivial(1), 0);
    const AE diff = m_one_S_delta(omega1, gamma, 0, 1) - casimir(gamma, 0) - casimir(gamma, 1);
    const AE m01 = mixed_term(gamma, 0, 1);
    const auto& [mono, coef] = *m01.terms().begin();
    const Rational scale = diff.coefficient(mono).constant_term() / coef.constant_term();
    if (!(diff == Poly(scale) * m01) || scale == 0)
      throw ConsistencyError("verify_no_go: m(1 (x) S) Delta(Omega) - Omega_i - Omega_j is not a multiple of m_ij");
    rep.mij_scale = scale;
    rep.sign_of_mij = scale > 0 ? "+" : "-";
  }

  const RhsMap rhs = build_deformed_rhs(spec);

  std::vector<std::string> unknowns;
  for (const char* p : {"c", "d", "u", "v"}) {
    if (!spec.fixed.count(p)) {
      unknowns.emplace_back(p);
      rep.unknowns_summary.emplace_back(p);
    }
  }
  std::vector<std::string> w_cols;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (auto& name : w_unknowns(spec, i, j)) w_cols.push_back(std::move(name));
  if (!w_cols.empty()) rep.unknowns_summary.emplace_back("w");
  unknowns.insert(unknowns.end(), w_cols.begin(), w_cols.end());
  rep.unknown_count = unknowns.size();

  LinearSystem sys(unknowns);
  SparseEliminator<Rational> all(unknowns.size());
  SparseEliminator<Rational> weights_only(unknowns.size());

  std::vector<AE> obstructions;
  for (int k = 0; k < n; ++k) {
    obstructions.push_back(obstruction_ek(rhs, n, k));
    sys.add_all(obstructions.back(), all);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const AE& r = rhs.at({i, j});
      for (int k = 0; k < n; ++k) {
        const int eta = (j == k ? 1 : 0) - (i == k ? 1 : 0);
        const AE defect = commutator(AE::h(gamma, k), r) - Poly(eta) * r;
        sys.add_all(defect, all);
        sys.add_all(defect, weights_only);
      }
    }
  }
  rep.consistent = sys.consistent();
  rep.solution_space_dim = all.nullity();

  auto forced = [&](SparseEliminator<Rational>& e, const std::string& name) {
    return !sys.has(name) || e.forced_zero(sys.column(name));
  };
  auto all_w_forced = [&](SparseEliminator<Rational>& e) {
    for (const auto& name : w_cols)
      if (!e.forced_zero(sys.column(name))) return false;
    return true;
  };
  for (const char* p : {"c", "d", "u", "v"})
    if (sys.has(p) && all.forced_zero(sys.column(p))) rep.forced_zero.emplace_back(p);
  if (!w_cols.empty() && all_w_forced(all)) rep.forced_zero.emplace_back("w");

  // c from the single monomial s_ik f_i e_i^2 (k = 1, i = 2 in 1-based terms)
  {
    const int k = 0, i = 1;
    const AE target = AE::group(gamma, Permutation::transposition(n, i, k)) * AE::f(gamma, i) * AE::e(gamma, i).pow(2);
    const PbwMonomial mono = target.terms().begin()->first;
    rep.c_monomial = target.to_string();
    const Poly coef = obstructions[static_cast<std::size_t>(k)].coefficient(mono);
    rep.c_coefficient = coef.to_string();
    if (sys.has("c")) {
      const auto [lin, constant] = coef.linear_form();
      rep.c_forced_by_monomial = constant == 0 && lin.size() == 1 && lin.count("c") && lin.at("c") != 0;
    } else {
      rep.c_forced_by_monomial = coef.is_zero();
    }
  }
  // d once c = 0
  {
    SparseEliminator<Rational> given_c(unknowns.size());
    const std::map<std::string, Poly> c_zero{{"c", Poly(0)}};
    for (const auto& ob : obstructions)
      for (const auto& [m, c] : ob.terms()) sys.add(c.substitute(c_zero), given_c);
    rep.d_forced_given_c = forced(given_c, "d");
  }
  rep.uvw_forced_by_weights = forced(weights_only, "u") && forced(weights_only, "v") && all_w_forced(weights_only);

  // f(Omega_i) commutes with every e_k
  rep.f_independent = true;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!commutator(AE::e(gamma, k), f_of_casimir(spec, gamma, i)).is_zero()) rep.f_independent = false;

  // every U-weight lies in 2Z^n while eta_j - eta_i has odd coordinates
  rep.weight_parity = true;
  for (const auto& fx : monomials_up_to(n, spec.w_degree)) {
    const AE mono = AE::monomial(gamma, {fx, Permutation::identity(n)});
    for (int k = 0; k < n; ++k) {
      const AE ad = commutator(AE::h(gamma, k), mono);
      const Rational wt = ad.coefficient(mono.terms().begin()->first).constant_term();
      if (!(ad == Poly(wt) * mono) || !is_integer(wt) || to_int64(wt) % 2 != 0) rep.weight_parity = false;
    }
  }
  Weight eta = Weight::Zero(n);
  eta(1) = 1;
  eta(0) = -1;
  bool odd = false;
  for (Eigen::Index i = 0; i < eta.size(); ++i)
    if (to_int64(eta(i)) % 2 != 0) odd = true;
  rep.weight_parity = rep.weight_parity && odd;
  rep.parity_witness = "eta_2 - eta_1 = " + format_weight(eta) + " has odd coordinates; U-weights lie in 2Z^" +
                       std::to_string(n);
  return rep;
}

}  // namespace skewo
