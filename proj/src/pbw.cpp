#include "skewo/pbw.hpp"

#include "skewo/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace skewo {

namespace {

// ---------------------------------------------------------------------------
// Rank-1 structure constants

using HPoly = std::vector<Rational>;  // coefficient of h^k at index k
using Rank1 = std::map<FactorExp, Rational>;

HPoly hmul(const HPoly& a, const HPoly& b) {
  HPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (h + shift)^p
HPoly shifted_power(const Rational& shift, int p) {
  HPoly out{Rational(1)};
  const HPoly lin{shift, Rational(1)};
  for (int k = 0; k < p; ++k) out = hmul(out, lin);
  return out;
}

void add_to(Rank1& r, const FactorExp& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = r.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) r.erase(it);
  }
}

FactorExp fexp(int a, int b, int c) {
  return {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
}

class Rank1Table {
 public:
  // e^c f^a in normal form
  Rank1 e_pow_f_pow(int c, int a) {
    {
      std::lock_guard lock(mutex_);
      auto it = ef_.find({c, a});
      if (it != ef_.end()) return it->second;
    }
    Rank1 out;
    if (c == 0) {
      out[fexp(a, 0, 0)] = 1;
    } else {
      // e (f^m h^p e^q) = f^m (h-2)^p e^{q+1} + m f^{m-1} (h-m+1) h^p e^q
      for (const auto& [mono, coef] : e_pow_f_pow(c - 1, a)) {
        const int m = mono[0], p = mono[1], q = mono[2];
        const HPoly shifted = shifted_power(Rational(-2), p);
        for (std::size_t k = 0; k < shifted.size(); ++k) add_to(out, fexp(m, static_cast<int>(k), q + 1), coef * shifted[k]);
        if (m > 0) {
          add_to(out, fexp(m - 1, p + 1, q), coef * m);
          add_to(out, fexp(m - 1, p, q), coef * m * (1 - m));
        }
      }
    }
    std::lock_guard lock(mutex_);
    ef_.emplace(std::make_pair(c, a), out);
    return out;
  }

  std::vector<std::pair<FactorExp, Rational>> product(const FactorExp& x, const FactorExp& y) {
    const std::array<std::uint16_t, 6> key{x[0], x[1], x[2], y[0], y[1], y[2]};
    {
      std::lock_guard lock(mutex_);
      auto it = products_.find(key);
      if (it != products_.end()) return it->second;
    }
    Rank1 acc;
    // f^a h^b (e^c f^a2) h^b2 e^c2 with h^b f^m = f^m (h-2m)^b and e^q h^b2 = (h-2q)^b2 e^q
    for (const auto& [mono, coef] : e_pow_f_pow(x[2], y[0])) {
      const int m = mono[0], p = mono[1], q = mono[2];
      HPoly poly = shifted_power(Rational(-2 * m), x[1]);
      poly = hmul(poly, shifted_power(Rational(0), p));
      poly = hmul(poly, shifted_power(Rational(-2 * q), y[1]));
      for (std::size_t k = 0; k < poly.size(); ++k)
        add_to(acc, fexp(x[0] + m, static_cast<int>(k), q + y[2]), coef * poly[k]);
    }
    std::vector<std::pair<FactorExp, Rational>> out(acc.begin(), acc.end());
    std::lock_guard lock(mutex_);
    products_.emplace(key, out);
    return out;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, Rank1> ef_;
  std::map<std::array<std::uint16_t, 6>, std::vector<std::pair<FactorExp, Rational>>> products_;
};

Rank1Table& rank1_table() {
  static Rank1Table t;
  return t;
}

void check_factor(const GammaSpec& gamma, int i) {
  if (i < 0 || i >= gamma.rank())
    throw std::invalid_argument("factor index " + std::to_string(i + 1) + " out of range 1.." +
                                std::to_string(gamma.rank()));
}

bool same_spec(const GammaSpec& a, const GammaSpec& b) {
  if (a.rank() != b.rank() || a.blocks().size() != b.blocks().size()) return false;
  for (std::size_t j = 0; j < a.blocks().size(); ++j) {
    const auto &x = a.blocks()[j], &y = b.blocks()[j];
    if (x.kind != y.kind || x.sizes != y.sizes || x.width != y.width) return false;
  }
  return true;
}

std::string format_coef(const Poly& c, bool bare) {
  // `bare` means no monomial follows
  if (c.is_constant()) {
    const Rational q = c.constant_term();
    if (bare) return skewo::to_string(q);
    if (q == 1) return "";
    if (q == -1) return "-";
    return skewo::to_string(q) + "*";
  }
  return "(" + c.to_string() + ")" + (bare ? "" : "*");
}

std::string format_monomial(const PbwMonomial& m) {
  std::string out;
  auto put = [&](char g, std::size_t i, int k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += g + std::to_string(i + 1);
    if (k > 1) out += '^' + std::to_string(k);
  };
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    put('f', i, m.factors[i][0]);
    put('h', i, m.factors[i][1]);
    put('e', i, m.factors[i][2]);
  }
  const auto g = group_atoms(m.group);
  if (!g.empty()) out += (out.empty() ? "" : "*") + g;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PbwMonomial PbwMonomial::identity(int n) {
  return {std::vector<FactorExp>(static_cast<std::size_t>(n), FactorExp{0, 0, 0}), Permutation::identity(n)};
}

int PbwMonomial::degree() const {
  int d = 0;
  for (const auto& x : factors) d += x[0] + x[1] + x[2];
  return d;
}

bool PbwMonomial::pure_h() const {
  for (const auto& x : factors)
    if (x[0] || x[2]) return false;
  return true;
}

AlgebraElement AlgebraElement::scalar(const GammaSpec& gamma, const Poly& c) {
  return monomial(gamma, PbwMonomial::identity(gamma.rank()), c);
}

AlgebraElement AlgebraElement::e(const GammaSpec& gamma, int i) {
  check_factor(gamma, i);
  auto m = PbwMonomial::identity(gamma.rank());
  m.factors[static_cast<std::size_t>(i)][2] = 1;
  return monomial(gamma, m);
}

AlgebraElement AlgebraElement::f(const GammaSpec& gamma, int i) {
  check_factor(gamma, i);
  auto m = PbwMonomial::identity(gamma.rank());
  m.factors[static_cast<std::size_t>(i)][0] = 1;
  return monomial(gamma, m);
}

AlgebraElement AlgebraElement::h(const GammaSpec& gamma, int i) {
  check_factor(gamma, i);
  auto m = PbwMonomial::identity(gamma.rank());
  m.factors[static_cast<std::size_t>(i)][1] = 1;
  return monomial(gamma, m);
}

AlgebraElement AlgebraElement::group(const GammaSpec& gamma, const Permutation& g) {
  if (!gamma.contains(g))
    throw std::invalid_argument("group element " + g.to_cycle_string() + " is not in Gamma = " + gamma.to_string());
  auto m = PbwMonomial::identity(gamma.rank());
  m.group = g;
  return monomial(gamma, m);
}

AlgebraElement AlgebraElement::monomial(const GammaSpec& gamma, const PbwMonomial& m, const Poly& c) {
  if (static_cast<int>(m.factors.size()) != gamma.rank() || m.group.size() != gamma.rank())
    throw std::invalid_argument("AlgebraElement: monomial rank mismatch");
  AlgebraElement out(gamma);
  out.add(m, c);
  return out;
}

Poly AlgebraElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

void AlgebraElement::add(const PbwMonomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!same_spec(gamma_, o.gamma_)) throw std::invalid_argument("AlgebraElement: Gamma mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!same_spec(gamma_, o.gamma_)) throw std::invalid_argument("AlgebraElement: Gamma mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgebraElement operator*(const Poly& k, const AlgebraElement& a) {
  AlgebraElement out(a.gamma_);
  if (k.is_zero()) return out;
  for (const auto& [m, c] : a.terms_) out.add(m, k * c);
  return out;
}

AlgebraElement AlgebraElement::operator-() const { return Poly(-1) * *this; }

AlgebraElement AlgebraElement::pow(unsigned k) const {
  AlgebraElement out = scalar(gamma_, Poly(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return same_spec(gamma_, o.gamma_) && terms_ == o.terms_;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_spec(a.gamma_, b.gamma_)) throw std::invalid_argument("multiply: Gamma mismatch");
  const auto n = static_cast<std::size_t>(a.rank());
  auto& table = rank1_table();
  AlgebraElement out(a.gamma_);
  std::vector<std::vector<std::pair<FactorExp, Rational>>> per_factor(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // gamma y = gamma(y) gamma: factor i of y moves to factor gamma(i)
      std::vector<FactorExp> moved(n);
      for (std::size_t i = 0; i < n; ++i) moved[static_cast<std::size_t>(ma.group(static_cast<int>(i)))] = mb.factors[i];
      for (std::size_t i = 0; i < n; ++i) per_factor[i] = table.product(ma.factors[i], moved[i]);
      const Poly coef = ca * cb;
      PbwMonomial m{std::vector<FactorExp>(n), ma.group * mb.group};
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        Rational r = 1;
        for (std::size_t i = 0; i < n; ++i) {
          m.factors[i] = per_factor[i][idx[i]].first;
          r *= per_factor[i][idx[i]].second;
        }
        out.add(m, coef * r);
        std::size_t i = 0;
        while (i < n && ++idx[i] == per_factor[i].size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const auto mono = format_monomial(m);
    std::string term = format_coef(c, mono.empty()) + mono;
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement conjugate(const Permutation& g, const AlgebraElement& a) {
  return AlgebraElement::group(a.gamma(), g) * a * AlgebraElement::group(a.gamma(), g.inverse());
}

AlgebraElement anti_involution(const AlgebraElement& a) {
  AlgebraElement out(a.gamma());
  for (const auto& [m, c] : a.terms()) {
    PbwMonomial swapped = m;
    swapped.group = Permutation::identity(a.rank());
    for (auto& x : swapped.factors) std::swap(x[0], x[2]);
    out += c * (AlgebraElement::group(a.gamma(), m.group.inverse()) * AlgebraElement::monomial(a.gamma(), swapped));
  }
  return out;
}

AlgebraElement hc_projection(const AlgebraElement& a) {
  AlgebraElement out(a.gamma());
  for (const auto& [m, c] : a.terms())
    if (m.pure_h()) out.add(m, c);
  return out;
}

std::string group_atoms(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  for (int start = 0; start < g.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || g(start) == start) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = g(p)) {
      seen[static_cast<std::size_t>(p)] = true;
      cycle.push_back(p);
    }
    // (a1 a2 ... ak) = s(a1,a2) s(a2,a3) ... s(a_{k-1},a_k)
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      if (!out.empty()) out += '*';
      out += "s(" + std::to_string(cycle[k] + 1) + "," + std::to_string(cycle[k + 1] + 1) + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly GroupAlgebraElement::coefficient(const Permutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Poly() : it->second;
}

void GroupAlgebraElement::add(const Permutation& g, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out(a.gamma_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) out.add(ga * gb, ca * cb);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    const auto atoms = group_atoms(g);
    std::string term = format_coef(c, atoms.empty()) + atoms;
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

GroupAlgebraElement central_character(const Weight& lambda, const AlgebraElement& r,
                                      const std::map<std::string, Rational>& values) {
  if (lambda.size() != r.rank()) throw std::invalid_argument("central_character: rank mismatch");
  GroupAlgebraElement out(r.gamma());
  for (const auto& [m, c] : r.terms()) {
    if (!m.pure_h()) continue;
    if (!same_weight(permute(m.group, lambda), lambda)) continue;
    Rational coef;
    if (c.is_constant()) {
      coef = c.constant_term();
    } else {
      std::map<std::string, Rational> needed;
      for (const auto& v : c.variables()) {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("central_character: parameter '" + v + "' has no value");
        needed.emplace(v, it->second);
      }
      coef = c.evaluate(needed);
    }
    for (std::size_t i = 0; i < m.factors.size(); ++i)
      for (int k = 0; k < m.factors[i][1]; ++k) coef *= lambda(static_cast<Eigen::Index>(i));
    out.add(m.group, Poly(coef));
  }
  return out;
}

AlgebraElement casimir(const GammaSpec& gamma, int i) {
  check_factor(gamma, i);
  AlgebraElement out(gamma);
  auto m = PbwMonomial::identity(gamma.rank());
  auto& x = m.factors[static_cast<std::size_t>(i)];
  x = fexp(1, 0, 1);
  out.add(m, Poly(2));
  x = fexp(0, 1, 0);
  out.add(m, Poly(1));
  x = fexp(0, 2, 0);
  out.add(m, Poly(Rational(1, 2)));
  return out;
}

AlgebraElement symmetric_center_gen(const GammaSpec& gamma, int k) {
  if (k < 1) throw std::invalid_argument("symmetric_center_gen: k must be >= 1");
  AlgebraElement out(gamma);
  for (int i = 0; i < gamma.rank(); ++i) out += casimir(gamma, i).pow(static_cast<unsigned>(k));
  return out;
}

AlgebraElement mixed_term(const GammaSpec& gamma, int i, int j) {
  using AE = AlgebraElement;
  return AE::e(gamma, i) * AE::f(gamma, j) + AE::f(gamma, i) * AE::e(gamma, j) +
         Poly(Rational(1, 2)) * (AE::h(gamma, i) * AE::h(gamma, j));
}

namespace {

void require_plain(const AlgebraElement& a, const char* who) {
  for (const auto& [m, c] : a.terms())
    if (!m.group.is_identity()) throw std::invalid_argument(std::string(who) + ": group part present");
}

}  // namespace

AlgebraElement embed_factor(const AlgebraElement& a, const GammaSpec& gamma, int i) {
  if (a.rank() != 1) throw std::invalid_argument("embed_factor: expected a rank-1 element");
  require_plain(a, "embed_factor");
  check_factor(gamma, i);
  AlgebraElement out(gamma);
  for (const auto& [m, c] : a.terms()) {
    auto mm = PbwMonomial::identity(gamma.rank());
    mm.factors[static_cast<std::size_t>(i)] = m.factors[0];
    out.add(mm, c);
  }
  return out;
}

AlgebraElement coproduct_pair(const AlgebraElement& a) {
  if (a.rank() != 1) throw std::invalid_argument("coproduct_pair: expected a rank-1 element");
  require_plain(a, "coproduct_pair");
  using AE = AlgebraElement;
  const GammaSpec two = GammaSpec::trivial(2);
  const AE f = AE::f(two, 0) + AE::f(two, 1);
  const AE h = AE::h(two, 0) + AE::h(two, 1);
  const AE e = AE::e(two, 0) + AE::e(two, 1);
  AE out(two);
  for (const auto& [m, c] : a.terms()) {
    const auto& x = m.factors[0];
    out += c * (f.pow(x[0]) * h.pow(x[1]) * e.pow(x[2]));
  }
  return out;
}

AlgebraElement antipode(const AlgebraElement& a) {
  require_plain(a, "antipode");
  using AE = AlgebraElement;
  const auto& g = a.gamma();
  AE out(g);
  for (const auto& [m, c] : a.terms()) {
    AE term = AE::scalar(g, c);
    for (int i = 0; i < a.rank(); ++i) {
      const auto& x = m.factors[static_cast<std::size_t>(i)];
      const int sign = ((x[0] + x[1] + x[2]) % 2) ? -1 : 1;
      term = term * (Poly(sign) * (AE::e(g, i).pow(x[2]) * AE::h(g, i).pow(x[1]) * AE::f(g, i).pow(x[0])));
    }
    out += term;
  }
  return out;
}

AlgebraElement m_one_S_delta(const AlgebraElement& a, const GammaSpec& gamma, int i, int j) {
  if (i == j) throw std::invalid_argument("m_one_S_delta: i and j must differ");
  check_factor(gamma, i);
  check_factor(gamma, j);
  const GammaSpec one = GammaSpec::trivial(1);
  AlgebraElement out(gamma);
  const AlgebraElement delta = coproduct_pair(a);
  for (const auto& [m, c] : delta.terms()) {
    const auto left = AlgebraElement::monomial(one, {{m.factors[0]}, Permutation::identity(1)});
    const auto right = antipode(AlgebraElement::monomial(one, {{m.factors[1]}, Permutation::identity(1)}));
    out += c * (embed_factor(left, gamma, i) * embed_factor(right, gamma, j));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<AlgebraElement> center_basis_up_to_degree(const GammaSpec& gamma, int d_max) {
  const int n = gamma.rank();
  if (n > 2 || d_max > 4 || d_max < 0)
    throw std::invalid_argument("center_basis_up_to_degree: size cap exceeded (rank <= 2, degree <= 4)");
  // PBW monomials of total degree <= d_max
  std::vector<std::vector<FactorExp>> a_parts;
  const int vars = 3 * n;
  std::vector<int> k(static_cast<std::size_t>(vars), 0);
  while (true) {
    int sum = 0;
    for (int v : k) sum += v;
    if (sum <= d_max) {
      std::vector<FactorExp> fx(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) fx[static_cast<std::size_t>(i)] = fexp(k[3 * i], k[3 * i + 1], k[3 * i + 2]);
      a_parts.push_back(std::move(fx));
    }
    int i = 0;
    while (i < vars && ++k[static_cast<std::size_t>(i)] > d_max) k[static_cast<std::size_t>(i++)] = 0;
    if (i == vars) break;
  }
  std::vector<PbwMonomial> basis;
  for (const auto& g : gamma.elements())
    for (const auto& fx : a_parts) basis.push_back({fx, g});

  std::vector<AlgebraElement> tests;
  std::vector<bool> is_group;
  for (int i = 0; i < n; ++i) {
    for (auto gen : {AlgebraElement::e(gamma, i), AlgebraElement::f(gamma, i), AlgebraElement::h(gamma, i)}) {
      tests.push_back(gen);
      is_group.push_back(false);
    }
  }
  const auto group_gens = gamma.generators();
  for (const auto& g : group_gens) {
    tests.push_back(AlgebraElement::group(gamma, g));
    is_group.push_back(true);
  }

  std::map<std::pair<std::size_t, PbwMonomial>, SparseEliminator<Rational>::Row> rows;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto b = AlgebraElement::monomial(gamma, basis[col]);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      const AlgebraElement image = commutator(tests[t], b);
      for (const auto& [m, c] : image.terms()) rows[{t, m}][col] = c.constant_term();
    }
  }
  SparseEliminator<Rational> elim(basis.size());
  for (auto& [key, row] : rows) elim.add_row(std::move(row));

  std::vector<AlgebraElement> out;
  for (const auto& v : elim.null_vectors()) {
    AlgebraElement z(gamma);
    for (const auto& [col, coef] : v) z.add(basis[col], Poly(coef));
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

std::vector<AlgebraElement> build_invariant_gens(const GammaSpec& gamma) {
  std::vector<AlgebraElement> gens;
  for (const auto& b : gamma.blocks()) {
    if (b.kind == GammaBlock::Kind::cyclic) {
      const int m = b.width;
      std::set<std::vector<int>> done;
      std::vector<int> k(static_cast<std::size_t>(m), 0);
      while (true) {
        int i = 0;
        while (i < m && ++k[static_cast<std::size_t>(i)] > m) k[static_cast<std::size_t>(i++)] = 0;
        if (i == m) break;
        int sum = 0;
        for (int v : k) sum += v;
        if (sum > m || done.count(k)) continue;
        AlgebraElement z(gamma);
        std::set<std::vector<int>> orbit_set;
        auto r = k;
        for (int s = 0; s < m; ++s) {
          std::rotate(r.begin(), r.begin() + 1, r.end());
          orbit_set.insert(r);
        }
        for (const auto& e : orbit_set) {
          done.insert(e);
          AlgebraElement term = AlgebraElement::scalar(gamma, Poly(1));
          for (int p = 0; p < m; ++p)
            if (e[static_cast<std::size_t>(p)])
              term = term * casimir(gamma, b.offset + p).pow(static_cast<unsigned>(e[static_cast<std::size_t>(p)]));
          z += term;
        }
        gens.push_back(std::move(z));
      }
    } else {
      int start = b.offset;
      for (int size : b.sizes) {
        for (int power = 1; power <= size; ++power) {
          AlgebraElement z(gamma);
          for (int p = start; p < start + size; ++p) z += casimir(gamma, p).pow(static_cast<unsigned>(power));
          gens.push_back(std::move(z));
        }
        start += size;
      }
    }
  }
  return gens;
}

}  // namespace

const std::vector<AlgebraElement>& invariant_center_gens(const GammaSpec& gamma) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<AlgebraElement>> cache;
  const auto key = gamma.to_string();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto gens = build_invariant_gens(gamma);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(gens)).first->second;
}

CcResult cc_equal(const Weight& lambda, const Weight& mu, const GammaSpec& gamma) {
  if (lambda.size() != gamma.rank() || mu.size() != gamma.rank())
    throw std::invalid_argument("cc_equal: rank mismatch");
  CcResult r;
  for (const auto& g : gamma.elements()) {
    bool ok = true;
    for (int i = 0; i < gamma.rank() && ok; ++i) {
      const Rational& target = mu(g(i));
      ok = target == lambda(i) || target == dot_reflect(lambda(i));
    }
    if (ok) {
      r.orbit_test = true;
      r.witness = g;
      break;
    }
  }
  r.generator_test = true;
  const auto id = Permutation::identity(gamma.rank());
  for (const auto& z : invariant_center_gens(gamma)) {
    const auto a = central_character(lambda, z).coefficient(id).constant_term();
    const auto b = central_character(mu, z).coefficient(id).constant_term();
    r.generator_values.emplace_back(a, b);
    if (a != b) r.generator_test = false;
  }
  if (r.orbit_test != r.generator_test)
    throw ConsistencyError("cc_equal: orbit test and central-character test disagree for " + format_weight(lambda) +
                           " vs " + format_weight(mu));
  r.equal = r.orbit_test;
  return r;
}

}  // namespace skewo
