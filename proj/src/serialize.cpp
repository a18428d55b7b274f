#include "skewo/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace skewo {

namespace {

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from(const json& j, Eigen::Index size) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size)
    throw std::invalid_argument("block JSON: matrix has the wrong number of rows");
  IntMatrix m(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size)
      throw std::invalid_argument("block JSON: matrix row has the wrong length");
    for (Eigen::Index k = 0; k < size; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<std::int64_t>();
  }
  return m;
}

json simple_set_json(const SimpleSet& s, const GammaSpec& gamma) {
  json out = json::array();
  for (const auto& x : s) out.push_back(to_json(x, gamma));
  return out;
}

}  // namespace

json to_json(const SimpleX& x, const GammaSpec& gamma) {
  return {{"orbit_rep", format_weight(x.orbit_rep)},
          {"stab", x.stab.to_string()},
          {"irrep", irrep_labels(x.irrep)},
          {"orbit_size", orbit_size(x, gamma)},
          {"dimM", dim_m(x, gamma)}};
}

SimpleX simple_from_json(const json& j, const GammaSpec& gamma) {
  SimpleX x;
  x.orbit_rep = parse_weight(j.at("orbit_rep").get<std::string>());
  if (x.orbit_rep.size() != gamma.rank()) throw std::invalid_argument("simple JSON: weight rank does not match Gamma");
  if (!same_weight(orbit_rep(x.orbit_rep, gamma), x.orbit_rep))
    throw std::invalid_argument("simple JSON: orbit_rep is not the canonical orbit representative");
  x.stab = stabilizer(x.orbit_rep, gamma);
  if (x.stab.to_string() != j.at("stab").get<std::string>())
    throw std::invalid_argument("simple JSON: stabilizer does not match the weight");
  x.irrep = parse_irrep_labels(j.at("irrep").get<std::vector<std::string>>(), x.stab);
  return x;
}

json to_json(const BlockData& b, const GammaSpec& gamma) {
  json order = json::array();
  for (const auto& x : b.order) order.push_back(to_json(x, gamma));
  return {{"gamma", gamma.to_string()}, {"order", order},           {"D", matrix_json(b.D)},
          {"F", matrix_json(b.F)},      {"C", matrix_json(b.C)},    {"Cprime", matrix_json(b.Cprime)},
          {"symmetric_Cprime", b.Cprime == b.Cprime.transpose()}};
}

BlockData block_from_json(const json& j, const GammaSpec& gamma) {
  if (j.contains("gamma") && j.at("gamma").get<std::string>() != gamma.to_string())
    throw std::invalid_argument("block JSON: Gamma does not match");
  BlockData b;
  for (const auto& x : j.at("order")) b.order.push_back(simple_from_json(x, gamma));
  const auto m = static_cast<Eigen::Index>(b.order.size());
  b.D = matrix_from(j.at("D"), m);
  b.F = matrix_from(j.at("F"), m);
  b.C = matrix_from(j.at("C"), m);
  b.Cprime = matrix_from(j.at("Cprime"), m);
  return b;
}

json to_json(const CharacterVB& ch) {
  json terms = json::array();
  for (const auto& [w, c] : ch.terms()) terms.push_back({{"weight", format_weight(w)}, {"coef", c}});
  return {{"rank", ch.rank()}, {"terms", terms}};
}

CharacterVB character_from_json(const json& j) {
  CharacterVB ch(j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) ch.add(parse_weight(t.at("weight").get<std::string>()), t.at("coef").get<std::int64_t>());
  return ch;
}

json to_json(const AlgebraElement& a) {
  json out = json::array();
  for (const auto& [m, c] : a.terms()) {
    json factors = json::array();
    for (const auto& x : m.factors) factors.push_back({x[0], x[1], x[2]});
    out.push_back({{"monomial", {{"factors", factors}, {"group", m.group.to_cycle_string()}}}, {"coef", c.to_string()}});
  }
  return out;
}

AlgebraElement algebra_from_json(const json& j, const GammaSpec& gamma) {
  AlgebraElement a(gamma);
  for (const auto& t : j) {
    const auto& mj = t.at("monomial");
    PbwMonomial m;
    for (const auto& x : mj.at("factors")) {
      FactorExp e{};
      for (std::size_t k = 0; k < 3; ++k) e[k] = x.at(k).get<std::uint16_t>();
      m.factors.push_back(e);
    }
    m.group = Permutation::parse_cycles(gamma.rank(), mj.at("group").get<std::string>());
    if (!gamma.contains(m.group)) throw std::invalid_argument("algebra JSON: group part not in Gamma");
    a += AlgebraElement::monomial(gamma, m, Poly::parse(t.at("coef").get<std::string>()));
  }
  return a;
}

json to_json(const GroupAlgebraElement& g) {
  json out = json::array();
  for (const auto& [p, c] : g.terms()) out.push_back({{"group", p.to_cycle_string()}, {"coef", c.to_string()}});
  return out;
}

json to_json(const CcResult& r) {
  json values = json::array();
  for (const auto& [a, b] : r.generator_values) values.push_back({to_string(a), to_string(b)});
  json out{{"equal", r.equal}, {"orbit_test", r.orbit_test}, {"generator_test", r.generator_test},
           {"generator_values", values}};
  out["witness"] = r.witness ? json(r.witness->to_cycle_string()) : json(nullptr);
  return out;
}

json to_json(const NoGoReport& r) {
  return {{"n", r.n},
          {"sign_of_mij", r.sign_of_mij},
          {"mij_scale", to_string(r.mij_scale)},
          {"unknowns", r.unknowns_summary},
          {"unknown_count", r.unknown_count},
          {"forced_zero", r.forced_zero},
          {"solution_space_dim", r.solution_space_dim},
          {"consistent", r.consistent},
          {"witnesses",
           {{"c_monomial", r.c_monomial},
            {"c_coefficient", r.c_coefficient},
            {"c_forced_by_monomial", r.c_forced_by_monomial},
            {"d_forced_given_c", r.d_forced_given_c},
            {"uvw_forced_by_weights", r.uvw_forced_by_weights},
            {"f_independent", r.f_independent},
            {"weight_parity", r.weight_parity},
            {"parity_witness", r.parity_witness}}}};
}

json to_json(const CoverReport& r, const GammaSpec& gamma) {
  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"eps", t.eps}, {"twisted", to_json(t.twisted, gamma)}, {"s3", simple_set_json(t.s3, gamma)}});
  return {{"hypothesis_satisfied", r.hypothesis_satisfied},
          {"cover_equal", r.cover_equal},
          {"needs_nonzero_eps", r.needs_nonzero_eps},
          {"chain_holds", r.chain_holds},
          {"s3", simple_set_json(r.s3, gamma)},
          {"s_prime", simple_set_json(r.s_prime, gamma)},
          {"product_s3", simple_set_json(r.product_s3, gamma)},
          {"product_s_prime", simple_set_json(r.product_s_prime, gamma)},
          {"terms", terms}};
}

json to_json(const FourSetups& s, const GammaSpec& gamma) {
  json blocks = json::array();
  for (std::size_t j = 0; j < s.block_weights.size(); ++j) {
    const GammaSpec local = gamma.block_spec(j);
    json simples = json::array();
    for (const auto& x : s.block_simples[j]) simples.push_back(to_json(x, local));
    blocks.push_back({{"gamma", local.to_string()}, {"weight", format_weight(s.block_weights[j])}, {"simples", simples}});
  }
  json simples = json::array();
  for (const auto& x : s.simples) simples.push_back(to_json(x, gamma));
  return {{"blocks", blocks}, {"weight", format_weight(s.weight)}, {"simples", simples}};
}

std::string block_to_dot(const BlockData& b) {
  std::ostringstream out;
  out << "digraph block {\n";
  for (std::size_t i = 0; i < b.order.size(); ++i) out << "  n" << i << " [label=\"" << describe(b.order[i]) << "\"];\n";
  for (Eigen::Index i = 0; i < b.D.rows(); ++i)
    for (Eigen::Index j = 0; j < b.D.cols(); ++j)
      if (i != j && b.D(i, j) > 0) out << "  n" << i << " -> n" << j << " [label=\"" << b.D(i, j) << "\"];\n";
  for (Eigen::Index i = 0; i < b.F.rows(); ++i)
    for (Eigen::Index j = i + 1; j < b.F.cols(); ++j)
      if (b.F(i, j) != 0) out << "  n" << i << " -> n" << j << " [style=dashed, dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace skewo
