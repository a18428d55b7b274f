#include "skewo/symgrp.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace skewo {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::erase(parts, 0);
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("partition with a negative part");
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t s = 0;
  while (true) {
    auto comma = text.find(',', s);
    auto tok = text.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
    try {
      parts.push_back(std::stoi(std::string(tok)));
    } catch (...) {
      throw ParseError("bad partition part", s, "positive integer");
    }
    if (comma == std::string_view::npos) break;
    s = comma + 1;
  }
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  // reverse lexicographic: larger first parts come first
  return other.parts <=> parts;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // next partition in reverse-lex order
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++rem;
    }
    if (cur.empty()) break;
    int k = cur.back() - 1;
    cur.back() = k;
    ++rem;
    while (rem > 0) {
      int part = std::min(k, rem);
      cur.push_back(part);
      rem -= part;
    }
  }
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t centralizer_order(const CycleType& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  std::int64_t z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::int64_t dim_irrep(const Partition& lambda) {
  const int n = lambda.size();
  // n!/prod hooks, accumulated as an exact rational to avoid overflow order issues
  Integer num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  Integer den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda.parts[static_cast<std::size_t>(i)] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < lambda.length() && lambda.parts[static_cast<std::size_t>(k)] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  }
  return Integer(num / den).convert_to<std::int64_t>();
}

namespace {

std::vector<int> to_beta(const Partition& p) {
  const int len = p.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = p.parts[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (len - 1 - i));
  return Partition(std::move(parts));
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> mn_memo;

std::int64_t murnaghan_nakayama(const Partition& lambda, std::span<const int> mu) {
  if (mu.empty()) return lambda.size() == 0 ? 1 : 0;
  std::pair<std::vector<int>, std::vector<int>> key{lambda.parts, std::vector<int>(mu.begin(), mu.end())};
  {
    std::lock_guard lock(mn_mutex);
    auto it = mn_memo.find(key);
    if (it != mn_memo.end()) return it->second;
  }
  const int r = mu.front();
  const auto rest = mu.subspan(1);
  const auto beta = to_beta(lambda);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    auto next = beta;
    next[i] = target;
    const std::int64_t sub = murnaghan_nakayama(from_beta(next), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  std::lock_guard lock(mn_mutex);
  mn_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t char_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("char_value: |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.size()));
  return murnaghan_nakayama(lambda, mu.parts);
}

// ---------------------------------------------------------------------------
// Character tables

bool CharTable::valid() const {
  const std::size_t k = partitions.size();
  if (classes.size() != k || values.size() != k) return false;
  const auto expected_rows = partitions_of(n);
  if (partitions != expected_rows) return false;
  auto expected_cols = expected_rows;
  std::reverse(expected_cols.begin(), expected_cols.end());
  if (classes != expected_cols) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (values[i].size() != k) return false;
    if (values[i][0] != dim_irrep(partitions[i])) return false;
  }
  const std::int64_t order = factorial(n);
  // rows: sum_c |c| chi_i(c) chi_j(c) = n! delta_ij
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < k; ++c)
        s += Integer(order / centralizer_order(classes[c])) * values[i][c] * values[j][c];
      if (s != (i == j ? Integer(order) : Integer(0))) return false;
    }
  }
  // columns: sum_i chi_i(c) chi_i(d) = z_c delta_cd
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      Integer s = 0;
      for (std::size_t i = 0; i < k; ++i) s += Integer(values[i][c]) * values[i][d];
      if (s != (c == d ? Integer(centralizer_order(classes[c])) : Integer(0))) return false;
    }
  }
  return true;
}

CharTable char_table(int n, int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("char_table: n = " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  CharTable t;
  t.n = n;
  t.partitions = partitions_of(n);
  t.classes = t.partitions;
  std::reverse(t.classes.begin(), t.classes.end());
  for (const auto& lam : t.partitions) {
    std::vector<std::int64_t> row;
    for (const auto& mu : t.classes) row.push_back(char_value(lam, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

namespace {

nlohmann::json table_to_json(const CharTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["partitions"] = nlohmann::json::array();
  for (const auto& p : t.partitions) j["partitions"].push_back(p.parts);
  j["classes"] = nlohmann::json::array();
  for (const auto& c : t.classes) j["classes"].push_back(c.parts);
  j["values"] = t.values;
  return j;
}

CharTable table_from_json(const nlohmann::json& j) {
  CharTable t;
  t.n = j.at("n").get<int>();
  for (const auto& p : j.at("partitions")) t.partitions.emplace_back(p.get<std::vector<int>>());
  for (const auto& c : j.at("classes")) t.classes.emplace_back(c.get<std::vector<int>>());
  t.values = j.at("values").get<std::vector<std::vector<std::int64_t>>>();
  return t;
}

}  // namespace

CharTable char_table_cached(int n, const std::filesystem::path& cache_dir, int cap) {
  namespace fs = std::filesystem;
  const fs::path file = cache_dir / ("chartable_s" + std::to_string(n) + ".json");
  {
    std::ifstream in(file);
    if (in) {
      try {
        auto j = nlohmann::json::parse(in);
        CharTable t = table_from_json(j);
        if (t.n == n && t.valid()) return t;
      } catch (const std::exception&) {
        // corrupt cache: fall through and rebuild
      }
    }
  }
  CharTable t = char_table(n, cap);
  fs::create_directories(cache_dir);
  std::random_device rd;
  const fs::path tmp = cache_dir / (file.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << table_to_json(t).dump() << '\n';
  }
  fs::rename(tmp, file);
  return t;
}

// ---------------------------------------------------------------------------
// Stabilizer irreps

bool is_label_for(const StabIrrep& irrep, const Stabilizer& stab) {
  if (irrep.sym.size() != stab.sym.size() || irrep.cyc.size() != stab.cyc.size()) return false;
  for (std::size_t k = 0; k < stab.sym.size(); ++k)
    if (irrep.sym[k].size() != static_cast<int>(stab.sym[k].positions.size())) return false;
  for (std::size_t k = 0; k < stab.cyc.size(); ++k)
    if (irrep.cyc[k] < 0 || irrep.cyc[k] >= stab.cyc[k].order) return false;
  return true;
}

std::vector<StabIrrep> irreps_of(const Stabilizer& stab) {
  std::vector<StabIrrep> out{StabIrrep{}};
  for (const auto& s : stab.sym) {
    std::vector<StabIrrep> next;
    for (const auto& base : out) {
      for (const auto& p : partitions_of(static_cast<int>(s.positions.size()))) {
        auto e = base;
        e.sym.push_back(p);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  for (const auto& c : stab.cyc) {
    std::vector<StabIrrep> next;
    for (const auto& base : out) {
      for (int j = 0; j < c.order; ++j) {
        auto e = base;
        e.cyc.push_back(j);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t dim_irrep(const StabIrrep& irrep) {
  std::int64_t d = 1;
  for (const auto& p : irrep.sym) d *= dim_irrep(p);
  return d;
}

StabIrrep dual_irrep(const StabIrrep& irrep, const Stabilizer& stab) {
  StabIrrep out = irrep;
  for (std::size_t k = 0; k < out.cyc.size(); ++k) {
    const int d = stab.cyc.at(k).order;
    out.cyc[k] = (d - out.cyc[k] % d) % d;
  }
  return out;
}

std::vector<std::string> irrep_labels(const StabIrrep& irrep) {
  std::vector<std::string> out;
  for (const auto& p : irrep.sym) out.push_back(p.to_string());
  for (int j : irrep.cyc) out.push_back("j=" + std::to_string(j));
  return out;
}

StabIrrep parse_irrep_labels(const std::vector<std::string>& labels, const Stabilizer& stab) {
  StabIrrep out;
  if (labels.size() != stab.sym.size() + stab.cyc.size())
    throw std::invalid_argument("irrep label count does not match the stabilizer");
  std::size_t k = 0;
  for (; k < stab.sym.size(); ++k) out.sym.push_back(Partition::parse(labels[k]));
  for (; k < labels.size(); ++k) {
    const auto& l = labels[k];
    if (l.rfind("j=", 0) != 0) throw ParseError("cyclic irrep label must look like j=<r>", 0, "j=");
    out.cyc.push_back(std::stoi(l.substr(2)));
  }
  if (!is_label_for(out, stab)) throw std::invalid_argument("irrep labels do not fit the stabilizer");
  return out;
}

namespace {

/// Index of the factor of `g` containing K's symmetric factor `b`.
int containing_sym_factor(const Stabilizer& g, const SymFactor& b) {
  for (std::size_t a = 0; a < g.sym.size(); ++a)
    if (std::includes(g.sym[a].positions.begin(), g.sym[a].positions.end(), b.positions.begin(), b.positions.end()))
      return static_cast<int>(a);
  return -1;
}

int cyc_residue_on(const Stabilizer& g, const StabIrrep& n, int offset) {
  for (std::size_t c = 0; c < g.cyc.size(); ++c)
    if (g.cyc[c].offset == offset) return n.cyc[c];
  return 0;
}

/// Character of a symmetric-factor irrep of g at an element of K whose
/// symmetric factors carry the given cycle types.
std::int64_t sym_character(const Stabilizer& g, const StabIrrep& n, const std::vector<int>& owner,
                           const Stabilizer& k, const std::vector<const Partition*>& types) {
  std::int64_t value = 1;
  for (std::size_t a = 0; a < g.sym.size(); ++a) {
    std::vector<int> parts;
    int covered = 0;
    for (std::size_t b = 0; b < k.sym.size(); ++b) {
      if (owner[b] != static_cast<int>(a)) continue;
      parts.insert(parts.end(), types[b]->parts.begin(), types[b]->parts.end());
      covered += static_cast<int>(k.sym[b].positions.size());
    }
    for (int f = covered; f < static_cast<int>(g.sym[a].positions.size()); ++f) parts.push_back(1);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    value *= char_value(n.sym[a], CycleType(std::move(parts)));
    if (value == 0) return 0;
  }
  return value;
}

}  // namespace

std::int64_t restriction_inner_product(const Stabilizer& k, const Stabilizer& g1, const StabIrrep& n1,
                                       const Stabilizer& g2, const StabIrrep& n2) {
  if (!k.is_subgroup_of(g1) || !k.is_subgroup_of(g2))
    throw std::invalid_argument("restriction_inner_product: subgroup is not contained in both groups");
  if (!is_label_for(n1, g1) || !is_label_for(n2, g2))
    throw std::invalid_argument("restriction_inner_product: irrep label does not fit its group");

  // Cyclic part: characters of C_d restricted to C_{d'} match iff residues agree mod d'.
  for (const auto& c : k.cyc) {
    const int j1 = cyc_residue_on(g1, n1, c.offset);
    const int j2 = cyc_residue_on(g2, n2, c.offset);
    if ((j1 - j2) % c.order != 0) return 0;
  }

  std::vector<int> owner1, owner2;
  for (const auto& b : k.sym) {
    owner1.push_back(containing_sym_factor(g1, b));
    owner2.push_back(containing_sym_factor(g2, b));
  }
  std::vector<std::vector<Partition>> choices;
  for (const auto& b : k.sym) choices.push_back(partitions_of(static_cast<int>(b.positions.size())));

  Rational total = 0;
  std::vector<std::size_t> idx(k.sym.size(), 0);
  std::vector<const Partition*> types(k.sym.size());
  while (true) {
    Integer z = 1;
    for (std::size_t b = 0; b < k.sym.size(); ++b) {
      types[b] = &choices[b][idx[b]];
      z *= centralizer_order(*types[b]);
    }
    const std::int64_t c1 = sym_character(g1, n1, owner1, k, types);
    if (c1 != 0) {
      const std::int64_t c2 = sym_character(g2, n2, owner2, k, types);
      total += Rational(Integer(c1) * c2, z);
    }
    std::size_t b = 0;
    while (b < idx.size() && ++idx[b] == choices[b].size()) idx[b++] = 0;
    if (b == idx.size()) break;
  }
  return to_int64(total);
}

std::int64_t induce_restrict_mult(const Stabilizer& sub, const StabIrrep& sub_irrep, const Stabilizer& sup,
                                  const StabIrrep& sup_irrep) {
  if (!sub.is_subgroup_of(sup)) throw std::invalid_argument("induce_restrict_mult: not a subgroup");
  return restriction_inner_product(sub, sub, sub_irrep, sup, sup_irrep);
}

std::vector<std::pair<StabIrrep, std::int64_t>> restrict_irrep(const Stabilizer& g, const StabIrrep& n,
                                                               const Stabilizer& k) {
  std::vector<std::pair<StabIrrep, std::int64_t>> out;
  for (const auto& m : irreps_of(k)) {
    const auto mult = restriction_inner_product(k, k, m, g, n);
    if (mult) out.emplace_back(m, mult);
  }
  return out;
}

}  // namespace skewo
