#include "skewo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace skewo {

namespace {

struct VarRegistry {
  std::mutex mutex;
  std::deque<std::string> names;  // deque keeps references stable
  std::unordered_map<std::string, VarId> ids;
};

VarRegistry& registry() {
  static VarRegistry r;
  return r;
}

PolyMonomial multiply(const PolyMonomial& a, const PolyMonomial& b) {
  PolyMonomial out;
  auto i = a.powers.begin(), j = b.powers.begin();
  while (i != a.powers.end() || j != b.powers.end()) {
    if (j == b.powers.end() || (i != a.powers.end() && i->first < j->first)) {
      out.powers.push_back(*i++);
    } else if (i == a.powers.end() || j->first < i->first) {
      out.powers.push_back(*j++);
    } else {
      out.powers.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

using NamedMonomial = std::vector<std::pair<std::string, std::uint32_t>>;

NamedMonomial named(const PolyMonomial& m) {
  NamedMonomial out;
  for (const auto& [v, e] : m.powers) out.emplace_back(var_name(v), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VarId intern_var(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.ids.find(std::string(name));
  if (it != r.ids.end()) return it->second;
  const auto id = static_cast<VarId>(r.names.size());
  r.names.emplace_back(name);
  r.ids.emplace(std::string(name), id);
  return id;
}

const std::string& var_name(VarId id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.at(id);
}

int PolyMonomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : powers) d += static_cast<int>(e);
  return d;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(PolyMonomial{}, c);
}

Poly Poly::var(std::string_view name) {
  Poly p;
  p.terms_.emplace(PolyMonomial{{{intern_var(name), 1u}}}, Rational(1));
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.powers.empty()); }

Rational Poly::constant_term() const {
  auto it = terms_.find(PolyMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.powers) out.insert(var_name(v));
  return out;
}

void Poly::add_term(const PolyMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly out(1), base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    PolyMonomial rest;
    for (const auto& [v, e] : m.powers) {
      auto it = values.find(var_name(v));
      if (it == values.end()) rest.powers.emplace_back(v, e);
      else term = term * it->second.pow(e);
    }
    Poly r;
    r.terms_.emplace(std::move(rest), Rational(1));
    out += term * r;
  }
  return out;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.powers) {
      auto it = values.find(var_name(v));
      if (it == values.end()) throw std::invalid_argument("Poly::evaluate: no value for '" + var_name(v) + "'");
      for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::pair<std::map<std::string, Rational>, Rational> Poly::linear_form() const {
  std::map<std::string, Rational> coeffs;
  Rational constant = 0;
  for (const auto& [m, c] : terms_) {
    if (m.powers.empty()) constant = c;
    else if (m.powers.size() == 1 && m.powers[0].second == 1) coeffs[var_name(m.powers[0].first)] = c;
    else throw ConsistencyError("Poly::linear_form: nonlinear term in " + to_string());
  }
  return {coeffs, constant};
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NamedMonomial, Rational>> sorted;
  for (const auto& [m, c] : terms_) sorted.emplace_back(named(m), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    // constants last, otherwise by name
    if (a.first.empty() != b.first.empty()) return b.first.empty();
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    for (const auto& [name, e] : m) {
      if (!body.empty()) body += '*';
      body += name;
      if (e > 1) body += '^' + std::to_string(e);
    }
    if (body.empty()) out += skewo::to_string(mag);
    else if (mag == 1) out += body;
    else out += skewo::to_string(mag) + '*' + body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character", "operator or end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw ParseError("polynomial: " + what + " at position " + std::to_string(pos_), pos_, expected);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expr() {
    Poly p;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    }
    p = term();
    if (negate) p = -p;
    while (true) {
      if (peek('+')) {
        ++pos_;
        p += term();
      } else if (peek('-')) {
        ++pos_;
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = power();
    while (peek('*')) {
      ++pos_;
      p = p * power();
    }
    return p;
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent", "nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", "number, variable or '('");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("unbalanced parenthesis", "')'");
      ++pos_;
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("bad denominator", "digits");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return Poly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Poly::var(s_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected '") + ch + "'", "number, variable or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).run(); }

}  // namespace skewo
