#include "skewo/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewo {

bool SimpleX::operator==(const SimpleX& other) const {
  return same_weight(orbit_rep, other.orbit_rep) && stab == other.stab && irrep == other.irrep;
}

bool SimpleX::operator<(const SimpleX& other) const {
  LexLess lex;
  if (lex(orbit_rep, other.orbit_rep)) return true;
  if (lex(other.orbit_rep, orbit_rep)) return false;
  const auto a = stab.to_string(), b = other.stab.to_string();
  if (a != b) return a < b;
  if (stab.sym != other.stab.sym) return stab.sym < other.stab.sym;
  return irrep < other.irrep;
}

std::int64_t orbit_size(const SimpleX& x, const GammaSpec& gamma) { return gamma.order() / x.stab.order(); }

std::int64_t dim_m(const SimpleX& x, const GammaSpec& gamma) { return orbit_size(x, gamma) * dim_irrep(x.irrep); }

std::string describe(const SimpleX& x) {
  std::string out = "[" + format_weight(x.orbit_rep) + "]";
  out += " stab=" + x.stab.to_string();
  const auto labels = irrep_labels(x.irrep);
  if (!labels.empty()) {
    out += " irrep=";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ';';
      out += labels[i];
    }
  }
  return out;
}

std::vector<SimpleX> classify_X_over(const Weight& lambda, const GammaSpec& gamma) {
  const Weight rep = orbit_rep(lambda, gamma);
  const Stabilizer stab = stabilizer(rep, gamma);
  std::vector<SimpleX> out;
  for (auto& irrep : irreps_of(stab)) out.push_back({rep, stab, std::move(irrep)});
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t weight_mult(const SimpleX& x, const Weight& mu, const GammaSpec& gamma) {
  if (mu.size() != gamma.rank()) throw std::invalid_argument("weight_mult: rank mismatch");
  return same_weight(orbit_rep(mu, gamma), x.orbit_rep) ? dim_irrep(x.irrep) : 0;
}

SimpleX duality_F(const SimpleX& x) { return {x.orbit_rep, x.stab, dual_irrep(x.irrep, x.stab)}; }

SimpleX canonical_simple(const Weight& nu, const Stabilizer& stab_nu, const StabIrrep& irrep,
                         const GammaSpec& gamma) {
  const Weight rep = orbit_rep(nu, gamma);
  const Permutation g = transporter(nu, rep, gamma);
  const Stabilizer moved = stab_nu.conjugated(g);
  const Stabilizer canon = stabilizer(rep, gamma);
  if (moved.sym.size() != canon.sym.size() || moved.cyc != canon.cyc)
    throw ConsistencyError("canonical_simple: stabilizer does not belong to the given weight");
  SimpleX out{rep, canon, {}};
  out.irrep.cyc = irrep.cyc;
  // conjugation maps factor on A to factor on g(A); match against the canonical list
  for (const auto& f : canon.sym) {
    bool found = false;
    for (std::size_t k = 0; k < stab_nu.sym.size(); ++k) {
      auto positions = stab_nu.sym[k].positions;
      for (int& p : positions) p = g(p);
      std::sort(positions.begin(), positions.end());
      if (positions == f.positions) {
        out.irrep.sym.push_back(irrep.sym.at(k));
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("canonical_simple: unmatched stabilizer factor");
  }
  return out;
}

CObject decompose_induced(const Weight& lambda, const Stabilizer& from, const StabIrrep& carried,
                          const GammaSpec& gamma) {
  const Stabilizer full = stabilizer(lambda, gamma);
  if (!from.is_subgroup_of(full))
    throw std::invalid_argument("decompose_induced: subgroup not contained in the stabilizer of " +
                                format_weight(lambda));
  CObject out;
  for (const auto& target : irreps_of(full)) {
    const auto mult = induce_restrict_mult(from, carried, full, target);
    if (mult > 0) out[canonical_simple(lambda, full, target, gamma)] += mult;
  }
  return out;
}

std::vector<SimpleX> split_by_blocks(const SimpleX& x, const GammaSpec& gamma) {
  std::vector<SimpleX> parts;
  std::size_t sym_cursor = 0, cyc_cursor = 0;
  for (std::size_t j = 0; j < gamma.blocks().size(); ++j) {
    const auto& b = gamma.blocks()[j];
    SimpleX part;
    part.orbit_rep = x.orbit_rep.segment(b.offset, b.width);
    part.stab.rank = b.width;
    for (std::size_t k = 0; k < x.stab.sym.size(); ++k) {
      const auto& f = x.stab.sym[k];
      if (f.positions.front() < b.offset || f.positions.front() >= b.offset + b.width) continue;
      SymFactor local = f;
      for (int& p : local.positions) p -= b.offset;
      part.stab.sym.push_back(std::move(local));
      part.irrep.sym.push_back(x.irrep.sym[k]);
      ++sym_cursor;
    }
    for (std::size_t k = 0; k < x.stab.cyc.size(); ++k) {
      const auto& c = x.stab.cyc[k];
      if (c.offset != b.offset) continue;
      part.stab.cyc.push_back({0, c.width, c.order});
      part.irrep.cyc.push_back(x.irrep.cyc[k]);
      ++cyc_cursor;
    }
    parts.push_back(std::move(part));
  }
  if (sym_cursor != x.stab.sym.size() || cyc_cursor != x.stab.cyc.size())
    throw ConsistencyError("split_by_blocks: stabilizer factor straddles blocks");
  return parts;
}

SimpleX join_blocks(const std::vector<SimpleX>& parts, const GammaSpec& gamma) {
  if (parts.size() != gamma.blocks().size()) throw std::invalid_argument("join_blocks: block count mismatch");
  SimpleX x;
  x.orbit_rep = Weight(gamma.rank());
  x.stab.rank = gamma.rank();
  std::vector<std::pair<SymFactor, Partition>> sym;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& b = gamma.blocks()[j];
    x.orbit_rep.segment(b.offset, b.width) = parts[j].orbit_rep;
    for (std::size_t k = 0; k < parts[j].stab.sym.size(); ++k) {
      SymFactor f = parts[j].stab.sym[k];
      for (int& p : f.positions) p += b.offset;
      sym.emplace_back(std::move(f), parts[j].irrep.sym[k]);
    }
    for (std::size_t k = 0; k < parts[j].stab.cyc.size(); ++k) {
      auto c = parts[j].stab.cyc[k];
      c.offset = b.offset;
      x.stab.cyc.push_back(c);
      x.irrep.cyc.push_back(parts[j].irrep.cyc[k]);
    }
  }
  std::sort(sym.begin(), sym.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [f, p] : sym) {
    x.stab.sym.push_back(f);
    x.irrep.sym.push_back(p);
  }
  return x;
}

}  // namespace skewo
