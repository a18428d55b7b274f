#include "skewo/weightlat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewo {

Weight make_weight(std::initializer_list<Rational> coords) {
  Weight w(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) w(i++) = c;
  return w;
}

Weight parse_weight(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    try {
      coords.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string("weight: ") + e.what(), start + e.position(), e.expected());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Weight w(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w(static_cast<Eigen::Index>(i)) = coords[i];
  return w;
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w(i));
  }
  return out;
}

RootVector simple_root(int n, int i) {
  RootVector r = RootVector::Zero(n);
  r(i) = 2;
  return r;
}

std::vector<RootVector> simple_roots(int n) {
  std::vector<RootVector> out;
  for (int i = 0; i < n; ++i) out.push_back(simple_root(n, i));
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.image[static_cast<std::size_t>(i)], p.image[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::cycle(int n, int i, int j) {
  if (i < 0 || j >= n || i > j) throw std::invalid_argument("cycle: bad range");
  auto p = identity(n);
  for (int k = i; k < j; ++k) p.image[static_cast<std::size_t>(k)] = k + 1;
  p.image[static_cast<std::size_t>(j)] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) p.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  Permutation p;
  p.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) p.image[i] = (*this)(other.image[i]);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i] || image[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(image[j]);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  auto p = identity(n);
  if (text == "id" || text.empty()) return p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos, "(");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle", pos, ")");
    std::vector<int> pts;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t s = 0;
    while (s <= body.size()) {
      auto comma = body.find(',', s);
      auto tok = body.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
      int v = 0;
      try {
        v = std::stoi(std::string(tok));
      } catch (...) {
        throw ParseError("bad point in cycle", pos + 1 + s, "integer");
      }
      if (v < 1 || v > n) throw ParseError("cycle point out of range", pos + 1 + s, "1.." + std::to_string(n));
      pts.push_back(v - 1);
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    Permutation c = identity(n);
    for (std::size_t k = 0; k < pts.size(); ++k)
      c.image[static_cast<std::size_t>(pts[k])] = pts[(k + 1) % pts.size()];
    p = p * c;
    pos = close + 1;
  }
  return p;
}

// ---------------------------------------------------------------------------
// GammaSpec

namespace {

void permutations_of_segment(const std::vector<int>& base, int offset, int width,
                             std::vector<Permutation>& out) {
  std::vector<int> seg(static_cast<std::size_t>(width));
  std::iota(seg.begin(), seg.end(), offset);
  std::vector<int> perm = seg;
  do {
    Permutation p;
    p.image = base;
    for (int k = 0; k < width; ++k) p.image[static_cast<std::size_t>(offset + k)] = perm[static_cast<std::size_t>(k)];
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Permutation> enumerate_elements(const std::vector<GammaBlock>& blocks, int n) {
  std::vector<Permutation> current{Permutation::identity(n)};
  for (const auto& b : blocks) {
    if (b.kind == GammaBlock::Kind::cyclic) {
      std::vector<Permutation> next;
      Permutation c = b.width > 1 ? Permutation::cycle(n, b.offset, b.offset + b.width - 1)
                                  : Permutation::identity(n);
      for (const auto& g : current) {
        Permutation power = Permutation::identity(n);
        for (int k = 0; k < b.width; ++k) {
          next.push_back(power * g);
          power = c * power;
        }
      }
      current = std::move(next);
    } else {
      int seg_off = b.offset;
      for (int size : b.sizes) {
        if (size > 1) {
          std::vector<Permutation> next;
          for (const auto& g : current) {
            std::vector<Permutation> local;
            permutations_of_segment(g.image, seg_off, size, local);
            // local elements only rewrite the segment's images, which g fixes
            for (auto& p : local) next.push_back(std::move(p));
          }
          current = std::move(next);
        }
        seg_off += size;
      }
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::vector<int> parse_int_list(std::string_view text, std::size_t base_pos) {
  std::vector<int> out;
  std::size_t s = 0;
  while (true) {
    auto comma = text.find(',', s);
    auto tok = text.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected positive integer in gamma spec", base_pos + s, "positive integer");
    int v = std::stoi(std::string(tok));
    if (v <= 0) throw ParseError("block sizes must be positive", base_pos + s, "positive integer");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s = comma + 1;
  }
  return out;
}

}  // namespace

GammaSpec::GammaSpec(std::vector<GammaBlock> blocks) : blocks_(std::move(blocks)) {
  int offset = 0;
  for (auto& b : blocks_) {
    b.offset = offset;
    if (b.kind == GammaBlock::Kind::trivial) b.sizes.assign(static_cast<std::size_t>(b.width), 1);
    if (b.kind == GammaBlock::Kind::young) {
      b.width = std::accumulate(b.sizes.begin(), b.sizes.end(), 0);
    }
    if (b.width <= 0) throw std::invalid_argument("gamma block of zero width");
    offset += b.width;
  }
  rank_ = offset;
  if (rank_ < 1) throw std::invalid_argument("gamma spec must act on at least one coordinate");
  elements_ = std::make_shared<const std::vector<Permutation>>(enumerate_elements(blocks_, rank_));
}

GammaSpec GammaSpec::parse(std::string_view text) {
  std::vector<GammaBlock> blocks;
  std::size_t start = 0;
  if (text.empty()) throw ParseError("empty gamma spec", 0, "S:, C: or 1:");
  while (true) {
    auto semi = text.find(';', start);
    auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (piece.size() < 3 || piece[1] != ':')
      throw ParseError("malformed gamma block '" + std::string(piece) + "'", start, "S:a,b | C:m | 1:m");
    GammaBlock b;
    auto args = parse_int_list(piece.substr(2), start + 2);
    switch (piece[0]) {
      case 'S':
        b.kind = GammaBlock::Kind::young;
        b.sizes = args;
        break;
      case 'C':
        if (args.size() != 1) throw ParseError("cyclic block takes one size", start + 2, "C:m");
        b.kind = GammaBlock::Kind::cyclic;
        b.width = args[0];
        break;
      case '1':
        if (args.size() != 1) throw ParseError("trivial block takes one size", start + 2, "1:m");
        b.kind = GammaBlock::Kind::trivial;
        b.width = args[0];
        break;
      default:
        throw ParseError("unknown gamma block kind", start, "S, C or 1");
    }
    blocks.push_back(std::move(b));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return GammaSpec(std::move(blocks));
}

GammaSpec GammaSpec::trivial(int n) {
  GammaBlock b;
  b.kind = GammaBlock::Kind::trivial;
  b.width = n;
  return GammaSpec({b});
}

GammaSpec GammaSpec::symmetric(int n) {
  GammaBlock b;
  b.kind = GammaBlock::Kind::young;
  b.sizes = {n};
  return GammaSpec({b});
}

GammaSpec GammaSpec::cyclic(int m) {
  GammaBlock b;
  b.kind = GammaBlock::Kind::cyclic;
  b.width = m;
  return GammaSpec({b});
}

std::string GammaSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += ';';
    const auto& b = blocks_[j];
    switch (b.kind) {
      case GammaBlock::Kind::trivial:
        out += "1:" + std::to_string(b.width);
        break;
      case GammaBlock::Kind::cyclic:
        out += "C:" + std::to_string(b.width);
        break;
      case GammaBlock::Kind::young:
        out += "S:";
        for (std::size_t k = 0; k < b.sizes.size(); ++k) {
          if (k) out += ',';
          out += std::to_string(b.sizes[k]);
        }
        break;
    }
  }
  return out;
}

std::int64_t GammaSpec::order() const { return static_cast<std::int64_t>(elements_->size()); }

const std::vector<Permutation>& GammaSpec::elements() const { return *elements_; }

std::vector<Permutation> GammaSpec::generators() const {
  std::vector<Permutation> gens;
  for (const auto& b : blocks_) {
    if (b.kind == GammaBlock::Kind::cyclic) {
      if (b.width > 1) gens.push_back(Permutation::cycle(rank_, b.offset, b.offset + b.width - 1));
      continue;
    }
    int off = b.offset;
    for (int size : b.sizes) {
      for (int k = 0; k + 1 < size; ++k) gens.push_back(Permutation::transposition(rank_, off + k, off + k + 1));
      off += size;
    }
  }
  return gens;
}

bool GammaSpec::contains(const Permutation& g) const {
  return g.size() == rank_ && std::binary_search(elements_->begin(), elements_->end(), g);
}

GammaSpec GammaSpec::block_spec(std::size_t j) const {
  GammaBlock b = blocks_.at(j);
  b.offset = 0;
  return GammaSpec({b});
}

// ---------------------------------------------------------------------------
// Signed permutations

SignedPermutation SignedPermutation::identity(int n) {
  return {Permutation::identity(n), std::vector<bool>(static_cast<std::size_t>(n), false)};
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const {
  SignedPermutation out;
  out.perm = perm * other.perm;
  out.flips.assign(flips.size(), false);
  // sigma'^{-1}(w): flip set {sigma'^{-1}(i) : i in w}
  const Permutation inv = other.perm.inverse();
  for (std::size_t i = 0; i < flips.size(); ++i)
    if (flips[i]) out.flips[static_cast<std::size_t>(inv(static_cast<int>(i)))] = true;
  for (std::size_t i = 0; i < flips.size(); ++i) out.flips[i] = out.flips[i] != other.flips[i];
  return out;
}

Weight dot_act(const SignedPermutation& sw, const Weight& lambda) {
  if (sw.perm.size() != lambda.size() || sw.flips.size() != static_cast<std::size_t>(lambda.size()))
    throw std::invalid_argument("dot_act: rank mismatch");
  Weight flipped = lambda;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (sw.flips[static_cast<std::size_t>(i)]) flipped(i) = dot_reflect(lambda(i));
  return permute(sw.perm, flipped);
}

Weight dot_flip(const Weight& lambda, std::span<const int> flip_set) {
  Weight out = lambda;
  for (int i : flip_set) out(i) = dot_reflect(lambda(i));
  return out;
}

std::vector<int> dominant_integral_coords(const Weight& lambda) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (is_nonneg_integer(lambda(i))) out.push_back(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------
// Stabilizers

namespace {

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::int64_t Stabilizer::order() const {
  std::int64_t o = 1;
  for (const auto& s : sym) o *= factorial(static_cast<int>(s.positions.size()));
  for (const auto& c : cyc) o *= c.order;
  return o;
}

bool Stabilizer::contains(const Permutation& g) const {
  std::vector<int> owner(static_cast<std::size_t>(rank), -1);
  for (std::size_t k = 0; k < sym.size(); ++k)
    for (int p : sym[k].positions) owner[static_cast<std::size_t>(p)] = static_cast<int>(k);
  std::vector<bool> in_cyc(static_cast<std::size_t>(rank), false);
  for (const auto& c : cyc) {
    // g restricted to the block must be a power of c^{width/order}
    const int step = c.width / c.order;
    const int shift = (g(c.offset) - c.offset + c.width) % c.width;
    if (g(c.offset) < c.offset || g(c.offset) >= c.offset + c.width) return false;
    if (shift % step != 0) return false;
    for (int k = 0; k < c.width; ++k) {
      if (g(c.offset + k) != c.offset + (k + shift) % c.width) return false;
      in_cyc[static_cast<std::size_t>(c.offset + k)] = true;
    }
  }
  for (int i = 0; i < rank; ++i) {
    if (in_cyc[static_cast<std::size_t>(i)]) continue;
    const int o = owner[static_cast<std::size_t>(i)];
    if (o < 0) {
      if (g(i) != i) return false;
    } else if (owner[static_cast<std::size_t>(g(i))] != o) {
      return false;
    }
  }
  return true;
}

bool Stabilizer::is_subgroup_of(const Stabilizer& other) const {
  if (rank != other.rank) return false;
  for (const auto& s : sym) {
    bool found = false;
    for (const auto& t : other.sym) {
      if (std::includes(t.positions.begin(), t.positions.end(), s.positions.begin(), s.positions.end())) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (const auto& c : cyc) {
    bool found = false;
    for (const auto& d : other.cyc)
      if (d.offset == c.offset && d.width == c.width && d.order % c.order == 0) found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<Permutation> Stabilizer::elements() const {
  std::vector<Permutation> current{Permutation::identity(rank)};
  for (const auto& s : sym) {
    std::vector<Permutation> next;
    std::vector<int> perm = s.positions;
    do {
      for (const auto& g : current) {
        Permutation h = g;
        for (std::size_t k = 0; k < perm.size(); ++k)
          h.image[static_cast<std::size_t>(s.positions[k])] = perm[k];
        next.push_back(std::move(h));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    current = std::move(next);
  }
  for (const auto& c : cyc) {
    std::vector<Permutation> next;
    const int step = c.width / c.order;
    for (const auto& g : current) {
      for (int k = 0; k < c.order; ++k) {
        Permutation h = g;
        for (int p = 0; p < c.width; ++p)
          h.image[static_cast<std::size_t>(c.offset + p)] = c.offset + (p + k * step) % c.width;
        next.push_back(std::move(h));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::string Stabilizer::to_string() const {
  if (is_trivial()) return "1";
  std::string out;
  for (const auto& s : sym) {
    if (!out.empty()) out += '|';
    out += "S:" + std::to_string(s.positions.size());
  }
  for (const auto& c : cyc) {
    if (!out.empty()) out += '|';
    out += "C:" + std::to_string(c.order);
  }
  return out;
}

Stabilizer Stabilizer::conjugated(const Permutation& g) const {
  Stabilizer out = *this;
  for (auto& s : out.sym) {
    for (int& p : s.positions) p = g(p);
    std::sort(s.positions.begin(), s.positions.end());
  }
  std::sort(out.sym.begin(), out.sym.end());
  return out;
}

template <typename Key>
Stabilizer stabilizer_of_keys(const std::vector<Key>& keys, const GammaSpec& gamma) {
  Stabilizer st;
  st.rank = gamma.rank();
  if (static_cast<int>(keys.size()) != gamma.rank()) throw std::invalid_argument("stabilizer: rank mismatch");
  for (const auto& b : gamma.blocks()) {
    if (b.kind == GammaBlock::Kind::cyclic) {
      int period = b.width;
      for (int p = 1; p <= b.width; ++p) {
        if (b.width % p != 0) continue;
        bool ok = true;
        for (int k = 0; k < b.width && ok; ++k)
          ok = keys[static_cast<std::size_t>(b.offset + k)] == keys[static_cast<std::size_t>(b.offset + (k + p) % b.width)];
        if (ok) {
          period = p;
          break;
        }
      }
      const int order = b.width / period;
      if (order > 1) st.cyc.push_back({b.offset, b.width, order});
      continue;
    }
    int off = b.offset;
    for (int size : b.sizes) {
      std::vector<std::vector<int>> groups;
      std::vector<const Key*> reps;
      for (int k = off; k < off + size; ++k) {
        bool placed = false;
        for (std::size_t g = 0; g < reps.size(); ++g) {
          if (*reps[g] == keys[static_cast<std::size_t>(k)]) {
            groups[g].push_back(k);
            placed = true;
            break;
          }
        }
        if (!placed) {
          reps.push_back(&keys[static_cast<std::size_t>(k)]);
          groups.push_back({k});
        }
      }
      for (auto& g : groups)
        if (g.size() > 1) st.sym.push_back({std::move(g)});
      off += size;
    }
  }
  std::sort(st.sym.begin(), st.sym.end());
  return st;
}

template Stabilizer stabilizer_of_keys<Rational>(const std::vector<Rational>&, const GammaSpec&);
template Stabilizer stabilizer_of_keys<std::pair<Rational, bool>>(const std::vector<std::pair<Rational, bool>>&,
                                                                   const GammaSpec&);
template Stabilizer stabilizer_of_keys<int>(const std::vector<int>&, const GammaSpec&);

Stabilizer stabilizer(const Weight& lambda, const GammaSpec& gamma) {
  std::vector<Rational> keys(lambda.data(), lambda.data() + lambda.size());
  return stabilizer_of_keys(keys, gamma);
}

std::vector<Weight> orbit(const Weight& lambda, const GammaSpec& gamma) {
  if (lambda.size() != gamma.rank()) throw std::invalid_argument("orbit: rank mismatch");
  std::set<Weight, LexLess> seen;
  for (const auto& g : gamma.elements()) seen.insert(permute(g, lambda));
  return {seen.begin(), seen.end()};
}

OrbitInfo orbit_and_stabilizer(const Weight& lambda, const GammaSpec& gamma) {
  return {orbit(lambda, gamma), stabilizer(lambda, gamma)};
}

Weight orbit_rep(const Weight& lambda, const GammaSpec& gamma) {
  if (lambda.size() != gamma.rank()) throw std::invalid_argument("orbit_rep: rank mismatch");
  // Lex-minimal: sort each Young segment ascending, pick the least rotation of
  // each cyclic block.
  Weight out = lambda;
  for (const auto& b : gamma.blocks()) {
    if (b.kind == GammaBlock::Kind::cyclic) {
      std::vector<Rational> best;
      for (int r = 0; r < b.width; ++r) {
        std::vector<Rational> cand;
        for (int k = 0; k < b.width; ++k) cand.push_back(lambda(b.offset + (k + r) % b.width));
        if (best.empty() || cand < best) best = std::move(cand);
      }
      for (int k = 0; k < b.width; ++k) out(b.offset + k) = best[static_cast<std::size_t>(k)];
      continue;
    }
    int off = b.offset;
    for (int size : b.sizes) {
      std::sort(out.data() + off, out.data() + off + size);
      off += size;
    }
  }
  return out;
}

Permutation transporter(const Weight& from, const Weight& to, const GammaSpec& gamma) {
  for (const auto& g : gamma.elements())
    if (same_weight(permute(g, from), to)) return g;
  throw std::invalid_argument("transporter: weights are not in the same Gamma-orbit");
}

// ---------------------------------------------------------------------------
// Kostant partition function

bool separating_functional(std::span<const RootVector> roots, Weight& phi) {
  if (roots.empty()) {
    phi = Weight();
    return true;
  }
  const Eigen::Index n = roots.front().size();
  struct Ineq {  // a . x >= b
    std::vector<Rational> a;
    Rational b;
  };
  std::vector<std::vector<Ineq>> stages;
  std::vector<Ineq> sys;
  for (const auto& r : roots) {
    if (r.size() != n) throw std::invalid_argument("roots of mixed rank");
    if (r.isZero()) return false;
    sys.push_back({std::vector<Rational>(r.data(), r.data() + n), Rational(1)});
  }
  // Fourier-Motzkin: eliminate x_{n-1}, ..., x_0.
  for (Eigen::Index v = n - 1; v >= 0; --v) {
    stages.push_back(sys);
    std::vector<Ineq> lower, upper, keep;
    for (auto& q : sys) {
      const Rational& c = q.a[static_cast<std::size_t>(v)];
      if (c > 0) lower.push_back(q);
      else if (c < 0) upper.push_back(q);
      else keep.push_back(q);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rational cl = lo.a[static_cast<std::size_t>(v)];
        const Rational cu = -up.a[static_cast<std::size_t>(v)];
        Ineq comb;
        comb.a.resize(static_cast<std::size_t>(n));
        for (Eigen::Index k = 0; k < n; ++k)
          comb.a[static_cast<std::size_t>(k)] = cu * lo.a[static_cast<std::size_t>(k)] + cl * up.a[static_cast<std::size_t>(k)];
        comb.b = cu * lo.b + cl * up.b;
        keep.push_back(std::move(comb));
      }
    }
    sys = std::move(keep);
  }
  for (const auto& q : sys)
    if (q.b > 0) return false;
  // Back-substitute from x_0 upwards.
  phi = Weight::Zero(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto& stage = stages[static_cast<std::size_t>(n - 1 - v)];
    bool has_lo = false, has_up = false;
    Rational lo_bound, up_bound;
    for (const auto& q : stage) {
      const Rational& c = q.a[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      Rational rest = q.b;
      for (Eigen::Index k = 0; k < v; ++k) rest -= q.a[static_cast<std::size_t>(k)] * phi(k);
      const Rational bound = rest / c;
      if (c > 0) {
        if (!has_lo || bound > lo_bound) lo_bound = bound;
        has_lo = true;
      } else {
        if (!has_up || bound < up_bound) up_bound = bound;
        has_up = true;
      }
    }
    if (has_lo) phi(v) = lo_bound;
    else if (has_up) phi(v) = up_bound;
    else phi(v) = 0;
  }
  return true;
}

KostantCounter::KostantCounter(std::vector<RootVector> roots) : roots_(std::move(roots)) {
  if (!separating_functional(roots_, phi_))
    throw std::invalid_argument("kostant_p: roots do not lie in a common open half-space");
  for (const auto& r : roots_) root_heights_.push_back(phi_.dot(r));
}

std::uint64_t KostantCounter::operator()(const Weight& theta) const {
  if (!roots_.empty() && theta.size() != roots_.front().size())
    throw std::invalid_argument("kostant_p: rank mismatch");
  return count(theta, 0);
}

std::uint64_t KostantCounter::count(const Weight& theta, std::size_t from) const {
  if (from == roots_.size()) return theta.isZero() ? 1 : 0;
  const Rational height = phi_.size() ? Rational(phi_.dot(theta)) : Rational(0);
  if (height < 0) return 0;
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find({from, theta});
    if (it != memo_.end()) return it->second;
  }
  std::uint64_t total = 0;
  Weight rest = theta;
  Rational h = height;
  while (h >= 0) {
    const std::uint64_t add = count(rest, from + 1);
    if (total > UINT64_MAX - add) throw std::overflow_error("kostant_p overflow");
    total += add;
    rest -= roots_[from];
    h -= root_heights_[from];
  }
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::make_pair(from, theta), total);
  return total;
}

std::uint64_t kostant_p(const Weight& theta, std::span<const RootVector> roots) {
  KostantCounter counter(std::vector<RootVector>(roots.begin(), roots.end()));
  return counter(theta);
}

}  // namespace skewo
