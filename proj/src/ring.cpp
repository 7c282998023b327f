// Copyright 2026 The gcdgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcdgraph/ring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ring_impl.hpp"

namespace gcdgraph {

namespace {

Coeff mod(Coeff a, Coeff m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, std::size_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const std::uint64_t p = smallest_prime_factor(q);
  std::size_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, e};
}

// Dense polynomials over Z/p, low degree first, used only to find
// irreducible moduli.
using PolyP = std::vector<Coeff>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_rem(PolyP a, const PolyP& monic, Coeff p) {
  const std::size_t d = monic.size() - 1;
  trim(a);
  while (a.size() > d) {
    const Coeff c = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t j = 0; j <= d; ++j) {
      a[shift + j] = mod(a[shift + j] - c * monic[j], p);
    }
    trim(a);
  }
  return a;
}

PolyP monic_from_rank(std::uint64_t rank, std::size_t degree, Coeff p) {
  PolyP f(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    f[i] = static_cast<Coeff>(rank % static_cast<std::uint64_t>(p));
    rank /= static_cast<std::uint64_t>(p);
  }
  f[degree] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_irreducible(const PolyP& f, Coeff p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), k);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      if (poly_rem(f, monic_from_rank(rank, k, p), p).empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over Z/p, ranking coefficient vectors with the highest
/// non-leading coefficient most significant.
PolyP smallest_irreducible(Coeff p, std::size_t degree) {
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), degree);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    PolyP f = monic_from_rank(rank, degree, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantError("no irreducible polynomial found");
}

std::atomic<std::uint32_t> next_tag{1};

}  // namespace

// ---------------------------------------------------------------------------
// Tower

Tower::Tower(Coeff base_modulus) : modulus_(base_modulus) {
  if (base_modulus < 1) throw ArgumentError("base modulus must be positive");
}

Tower Tower::finite_field(std::uint64_t q, const std::string& variable) {
  const auto pp = prime_power(q);
  if (!pp) throw ArgumentError("F" + std::to_string(q) + ": order is not a prime power");
  const auto [p, d] = *pp;
  Tower t(static_cast<Coeff>(p));
  if (d > 1) {
    const PolyP f = smallest_irreducible(static_cast<Coeff>(p), d);
    std::vector<std::vector<Coeff>> coeffs;
    for (Coeff c : f) coeffs.push_back({c});
    t.extend(variable, std::move(coeffs));
  }
  return t;
}

Tower Tower::galois_ring(std::uint64_t prime_power_modulus, std::size_t degree,
                         const std::string& variable) {
  const auto pp = prime_power(prime_power_modulus);
  if (!pp) {
    throw ArgumentError("GR(" + std::to_string(prime_power_modulus) +
                        ", ...): modulus is not a prime power");
  }
  if (degree < 1) throw ArgumentError("GR: degree must be at least 1");
  Tower t(static_cast<Coeff>(prime_power_modulus));
  if (degree > 1) {
    const PolyP f = smallest_irreducible(static_cast<Coeff>(pp->first), degree);
    std::vector<std::vector<Coeff>> coeffs;
    for (Coeff c : f) coeffs.push_back({c});
    t.extend(variable, std::move(coeffs));
  }
  return t;
}

void Tower::extend(std::string variable, std::vector<std::vector<Coeff>> coeffs) {
  const std::size_t k = depth();
  if (coeffs.size() < 2) throw ArgumentError("extension polynomial must have degree >= 1");
  for (auto& c : coeffs) {
    if (c.size() != degree_at(k)) {
      throw ArgumentError("extension coefficient has wrong length");
    }
    c = normalize(c);
  }
  if (!is_one(k, coeffs.back())) throw ArgumentError("extension polynomial is not monic");
  for (const auto& e : extensions_) {
    if (e.variable == variable) throw ArgumentError("variable '" + variable + "' already bound");
  }
  flat_len_.push_back(degree_at(k) * (coeffs.size() - 1));
  extensions_.push_back(Extension{std::move(variable), std::move(coeffs)});
}

std::optional<std::uint64_t> Tower::cardinality() const {
  std::uint64_t r = 1;
  const auto m = static_cast<std::uint64_t>(modulus_);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (r > UINT64_MAX / m) return std::nullopt;
    r *= m;
  }
  return r;
}

void Tower::add(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
                std::span<Coeff> out) const {
  const std::size_t n = degree_at(depth);
  for (std::size_t i = 0; i < n; ++i) {
    Coeff s = a[i] + b[i];
    out[i] = s >= modulus_ ? s - modulus_ : s;
  }
}

void Tower::sub(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
                std::span<Coeff> out) const {
  const std::size_t n = degree_at(depth);
  for (std::size_t i = 0; i < n; ++i) {
    Coeff s = a[i] - b[i];
    out[i] = s < 0 ? s + modulus_ : s;
  }
}

void Tower::mul(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
                std::span<Coeff> out) const {
  if (depth == 0) {
    out[0] = (a[0] * b[0]) % modulus_;
    return;
  }
  const Extension& ext = extensions_[depth - 1];
  const std::size_t d = ext.degree();
  const std::size_t blk = degree_at(depth - 1);
  // Schoolbook product in x_depth, coefficients at depth - 1.
  std::vector<Coeff> prod((2 * d - 1) * blk, 0);
  std::vector<Coeff> tmp(blk);
  for (std::size_t i = 0; i < d; ++i) {
    auto ai = a.subspan(i * blk, blk);
    if (std::all_of(ai.begin(), ai.end(), [](Coeff c) { return c == 0; })) continue;
    for (std::size_t j = 0; j < d; ++j) {
      auto bj = b.subspan(j * blk, blk);
      mul(depth - 1, ai, bj, tmp);
      auto dst = std::span<Coeff>(prod).subspan((i + j) * blk, blk);
      add(depth - 1, dst, tmp, dst);
    }
  }
  // Reduce top-down by the monic modulus.
  for (std::size_t deg = 2 * d - 2; deg >= d; --deg) {
    auto top = std::span<Coeff>(prod).subspan(deg * blk, blk);
    if (std::all_of(top.begin(), top.end(), [](Coeff c) { return c == 0; })) continue;
    const std::vector<Coeff> c(top.begin(), top.end());
    for (std::size_t j = 0; j < d; ++j) {
      mul(depth - 1, c, ext.coeffs[j], tmp);
      auto dst = std::span<Coeff>(prod).subspan((deg - d + j) * blk, blk);
      sub(depth - 1, dst, tmp, dst);
    }
    std::fill(top.begin(), top.end(), 0);
  }
  std::copy_n(prod.begin(), d * blk, out.begin());
}

std::vector<Coeff> Tower::one(std::size_t depth) const {
  std::vector<Coeff> r(degree_at(depth), 0);
  r[0] = 1 % modulus_;
  return r;
}

bool Tower::is_one(std::size_t depth, std::span<const Coeff> a) const {
  if (a.size() != degree_at(depth) || a[0] != 1 % modulus_) return false;
  return std::all_of(a.begin() + 1, a.end(), [](Coeff c) { return c == 0; });
}

std::vector<Coeff> Tower::normalize(std::span<const Coeff> a) const {
  std::vector<Coeff> r(a.begin(), a.end());
  for (auto& c : r) c = mod(c, modulus_);
  return r;
}

bool operator==(const Tower& a, const Tower& b) {
  if (a.modulus_ != b.modulus_ || a.extensions_.size() != b.extensions_.size()) return false;
  for (std::size_t i = 0; i < a.extensions_.size(); ++i) {
    if (a.extensions_[i].variable != b.extensions_[i].variable ||
        a.extensions_[i].coeffs != b.extensions_[i].coeffs) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ring implementations

namespace detail {

RingImpl::RingImpl() : tag(next_tag.fetch_add(1)) {}
RingImpl::~RingImpl() = default;

const std::vector<Tower>* RingImpl::towers() const { return nullptr; }

namespace {

std::string format_monomial(const Tower& t, std::size_t depth, std::size_t flat) {
  std::string s;
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::size_t d = t.extensions()[k - 1].degree();
    const std::size_t e = flat % d;
    flat /= d;
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += t.extensions()[k - 1].variable;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string format_tower_element(const Tower& t, std::size_t depth,
                                 std::span<const Coeff> flat) {
  std::vector<std::string> terms;
  for (std::size_t j = flat.size(); j-- > 0;) {
    if (flat[j] == 0) continue;
    const std::string mono = format_monomial(t, depth, j);
    if (mono.empty()) {
      terms.push_back(std::to_string(flat[j]));
    } else if (flat[j] == 1) {
      terms.push_back(mono);
    } else {
      terms.push_back(std::to_string(flat[j]) + "*" + mono);
    }
  }
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) s += " + " + terms[i];
  return s;
}

std::string format_tower(const Tower& t) {
  std::string s = "Z/" + std::to_string(t.modulus());
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    const Extension& ext = t.extensions()[k - 1];
    std::vector<std::string> terms;
    for (std::size_t j = ext.degree() + 1; j-- > 0;) {
      const std::string c = format_tower_element(t, k - 1, ext.coeffs[j]);
      if (c == "0") continue;
      std::string var;
      if (j >= 1) var = ext.variable;
      if (j > 1) var += "^" + std::to_string(j);
      if (var.empty()) {
        terms.push_back(c);
      } else if (c == "1") {
        terms.push_back(var);
      } else if (c.find(' ') == std::string::npos) {
        terms.push_back(c + "*" + var);
      } else {
        terms.push_back("(" + c + ")*" + var);
      }
    }
    std::string poly = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) poly += " + " + terms[i];
    s += "[" + ext.variable + "]/(" + poly + ")";
  }
  return s;
}

namespace {

constexpr std::size_t kTableLimit = 1024;

class TowerProductImpl final : public RingImpl {
 public:
  explicit TowerProductImpl(std::vector<Tower> towers) : towers_(std::move(towers)) {
    std::size_t n = 1;
    std::uint64_t ch = 1;
    for (const Tower& t : towers_) {
      factor_sizes_.push_back(static_cast<std::size_t>(*t.cardinality()));
      n *= factor_sizes_.back();
      ch = std::lcm(ch, static_cast<std::uint64_t>(t.modulus()));
    }
    size = n;
    characteristic = ch;
    std::vector<std::vector<Coeff>> unit;
    for (const Tower& t : towers_) unit.push_back(t.one(t.depth()));
    one = encode(unit);
    if (size <= kTableLimit) build_tables();
  }

  Index add(Index a, Index b) const override {
    if (!add_table_.empty()) return add_table_[a * size + b];
    return binary(a, b, [](const Tower& t, auto x, auto y, auto out) {
      t.add(t.depth(), x, y, out);
    });
  }

  Index neg(Index a) const override {
    if (!neg_table_.empty()) return neg_table_[a];
    auto c = decode(a);
    for (std::size_t f = 0; f < towers_.size(); ++f) {
      for (auto& x : c[f]) x = x == 0 ? 0 : towers_[f].modulus() - x;
    }
    return encode(c);
  }

  Index mul(Index a, Index b) const override {
    if (!mul_table_.empty()) return mul_table_[a * size + b];
    return binary(a, b, [](const Tower& t, auto x, auto y, auto out) {
      t.mul(t.depth(), x, y, out);
    });
  }

  std::vector<std::vector<Coeff>> coefficients(Index a) const override { return decode(a); }

  std::string name() const override {
    std::string s;
    for (std::size_t f = 0; f < towers_.size(); ++f) {
      if (f > 0) s += " x ";
      s += format_tower(towers_[f]);
    }
    return s;
  }

  const std::vector<Tower>* towers() const override { return &towers_; }

  Index encode(const std::vector<std::vector<Coeff>>& c) const {
    std::uint64_t idx = 0;
    for (std::size_t f = 0; f < towers_.size(); ++f) {
      const auto m = static_cast<std::uint64_t>(towers_[f].modulus());
      for (Coeff x : c[f]) idx = idx * m + static_cast<std::uint64_t>(x);
    }
    return static_cast<Index>(idx);
  }

  std::vector<std::vector<Coeff>> decode(Index idx) const {
    std::vector<std::vector<Coeff>> c(towers_.size());
    std::uint64_t rest = idx;
    for (std::size_t f = towers_.size(); f-- > 0;) {
      const Tower& t = towers_[f];
      c[f].resize(t.degree());
      const auto m = static_cast<std::uint64_t>(t.modulus());
      for (std::size_t j = t.degree(); j-- > 0;) {
        c[f][j] = static_cast<Coeff>(rest % m);
        rest /= m;
      }
    }
    return c;
  }

 private:
  template <class Op>
  Index binary(Index a, Index b, Op op) const {
    auto x = decode(a);
    auto y = decode(b);
    auto z = x;
    for (std::size_t f = 0; f < towers_.size(); ++f) {
      op(towers_[f], std::span<const Coeff>(x[f]), std::span<const Coeff>(y[f]),
         std::span<Coeff>(z[f]));
    }
    return encode(z);
  }

  void build_tables() {
    std::vector<Index> add_t(size * size), mul_t(size * size), neg_t(size);
    std::vector<std::vector<std::vector<Coeff>>> dec(size);
    for (Index a = 0; a < size; ++a) dec[a] = decode(a);
    auto z = dec[0];
    for (Index a = 0; a < size; ++a) {
      for (Index b = a; b < size; ++b) {
        for (std::size_t f = 0; f < towers_.size(); ++f) {
          const Tower& t = towers_[f];
          t.add(t.depth(), dec[a][f], dec[b][f], z[f]);
        }
        add_t[a * size + b] = add_t[b * size + a] = encode(z);
        for (std::size_t f = 0; f < towers_.size(); ++f) {
          const Tower& t = towers_[f];
          t.mul(t.depth(), dec[a][f], dec[b][f], z[f]);
        }
        mul_t[a * size + b] = mul_t[b * size + a] = encode(z);
      }
      for (Index b = 0; b < size; ++b) {
        if (add_t[a * size + b] == 0) {
          neg_t[a] = b;
          break;
        }
      }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
  }

  std::vector<Tower> towers_;
  std::vector<std::size_t> factor_sizes_;
  std::vector<Index> add_table_;
  std::vector<Index> mul_table_;
  std::vector<Index> neg_table_;
};

class QuotientImpl final : public RingImpl {
 public:
  QuotientImpl(Ring ambient, std::vector<Index> reps, std::vector<Index> reduce,
               std::string modulus_name)
      : ambient_(std::move(ambient)),
        reps_(std::move(reps)),
        reduce_(std::move(reduce)),
        modulus_name_(std::move(modulus_name)) {
    size = reps_.size();
    one = reduce_[ambient_.one().index()];
    // Additive order of 1.
    std::uint64_t ch = 1;
    for (Index x = one; x != 0; x = add(x, one)) ++ch;
    characteristic = ch;
  }

  Index add(Index a, Index b) const override {
    return reduce_[ambient_.add_index(reps_[a], reps_[b])];
  }
  Index neg(Index a) const override { return reduce_[ambient_.neg_index(reps_[a])]; }
  Index mul(Index a, Index b) const override {
    return reduce_[ambient_.mul_index(reps_[a], reps_[b])];
  }
  std::vector<std::vector<Coeff>> coefficients(Index a) const override {
    return ambient_.coefficients(ambient_.element(reps_[a]));
  }
  std::string name() const override { return "(" + ambient_.name() + ")/" + modulus_name_; }

  const std::vector<Index>& reps() const { return reps_; }
  const std::vector<Index>& reduce_map() const { return reduce_; }

 private:
  Ring ambient_;
  std::vector<Index> reps_;
  std::vector<Index> reduce_;
  std::string modulus_name_;
};

bool is_prime_power(std::size_t q) { return prime_power(q).has_value(); }

/// Smallest k with 2^k >= bit length of n; x^(2^k) = 0 for every nilpotent x
/// of a ring with n elements.
std::size_t nilpotent_squarings(std::size_t n) {
  const std::size_t len = std::bit_width(n);
  std::size_t k = 0;
  while ((std::size_t{1} << k) < len) ++k;
  return k;
}

}  // namespace

const Structure& RingImpl::structure_data(const Ring& ring) const {
  std::call_once(structure_once_, [&] { structure_ = compute_structure(ring); });
  return structure_;
}

Structure compute_structure(const Ring& ring) {
  Structure st;
  const std::size_t n = ring.size();
  if (n == 1) {
    st.idempotents = {ring.zero()};
    st.unit_mask = {1};
    return st;
  }
  for (Index a = 0; a < n; ++a) {
    if (ring.mul_index(a, a) == a) st.idempotents.push_back(ring.element(a));
  }
  std::vector<Element> primitive;
  for (Element e : st.idempotents) {
    if (e.index() == 0) continue;
    bool minimal = true;
    for (Element f : st.idempotents) {
      if (f.index() == 0 || f == e) continue;
      if (ring.mul_index(e.index(), f.index()) == f.index()) {
        minimal = false;
        break;
      }
    }
    if (minimal) primitive.push_back(e);
  }

  std::vector<std::vector<std::uint8_t>> max_masks;
  Index total = 0;
  for (Element e : primitive) {
    LocalFactor lf;
    lf.idempotent = e;
    std::vector<std::uint8_t> in_carrier(n, 0);
    for (Index a = 0; a < n; ++a) in_carrier[ring.mul_index(e.index(), a)] = 1;
    for (Index a = 0; a < n; ++a) {
      if (in_carrier[a]) lf.carrier.push_back(ring.element(a));
    }
    const std::size_t squarings = nilpotent_squarings(lf.carrier.size());
    std::vector<std::uint8_t> in_max(n, 0);
    for (Element x : lf.carrier) {
      Index y = x.index();
      for (std::size_t s = 0; s < squarings; ++s) y = ring.mul_index(y, y);
      if (y == 0) {
        in_max[x.index()] = 1;
        lf.maximal_ideal.push_back(x);
      }
    }
    if (in_max[e.index()]) throw InvariantError("local factor idempotent is nilpotent");
    for (Element x : lf.maximal_ideal) {
      for (Element y : lf.maximal_ideal) {
        if (!in_max[ring.add_index(x.index(), y.index())]) {
          throw InvariantError("non-units of a local factor are not closed under addition");
        }
      }
    }
    if (lf.carrier.size() % lf.maximal_ideal.size() != 0) {
      throw InvariantError("maximal ideal size does not divide local factor size");
    }
    lf.residue_field_size = lf.carrier.size() / lf.maximal_ideal.size();
    if (!is_prime_power(lf.residue_field_size)) {
      throw InvariantError("residue field size is not a prime power");
    }
    total = ring.add_index(total, e.index());
    st.factors.push_back(std::move(lf));
    max_masks.push_back(std::move(in_max));
  }
  for (std::size_t i = 0; i < primitive.size(); ++i) {
    for (std::size_t j = i + 1; j < primitive.size(); ++j) {
      if (ring.mul_index(primitive[i].index(), primitive[j].index()) != 0) {
        throw InvariantError("primitive idempotents are not orthogonal");
      }
    }
  }
  if (total != ring.one().index()) {
    throw InvariantError("primitive idempotents do not sum to 1");
  }

  st.unit_mask.assign(n, 1);
  for (Index a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < st.factors.size(); ++i) {
      const Index ae = ring.mul_index(a, st.factors[i].idempotent.index());
      if (max_masks[i][ae]) {
        st.unit_mask[a] = 0;
        break;
      }
    }
  }
  return st;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

Ring Ring::product(std::vector<Tower> factors, std::size_t max_cardinality) {
  if (factors.empty()) throw ArgumentError("a ring needs at least one factor");
  std::uint64_t total = 1;
  for (const Tower& t : factors) {
    const auto c = t.cardinality();
    if (!c || *c > max_cardinality || total * *c > max_cardinality) {
      throw ArgumentError("ring cardinality exceeds the cap of " +
                          std::to_string(max_cardinality));
    }
    total *= *c;
  }
  return Ring(std::make_shared<detail::TowerProductImpl>(std::move(factors)));
}

Ring Ring::integers_mod(Coeff n) {
  return product({Tower(n)}, std::max<std::size_t>(kDefaultMaxCardinality,
                                                   static_cast<std::size_t>(n)));
}

std::size_t Ring::size() const { return impl_->size; }
std::uint64_t Ring::characteristic() const { return impl_->characteristic; }
std::uint32_t Ring::tag() const { return impl_->tag; }

Element Ring::element(Index i) const {
  if (i >= size()) throw ArgumentError("element index out of range");
  return Element(tag(), i);
}
Element Ring::zero() const { return Element(tag(), 0); }
Element Ring::one() const { return Element(tag(), impl_->one); }

Element Ring::from_integer(std::int64_t k) const { return scale(k, one()); }

bool Ring::owns(Element a) const { return a.ring_tag() == tag() && a.index() < size(); }

void Ring::check(Element a) const {
  if (!owns(a)) throw StructuralError("element does not belong to ring " + name());
}

Element Ring::add(Element a, Element b) const {
  check(a);
  check(b);
  return Element(tag(), impl_->add(a.index(), b.index()));
}
Element Ring::sub(Element a, Element b) const { return add(a, neg(b)); }
Element Ring::neg(Element a) const {
  check(a);
  return Element(tag(), impl_->neg(a.index()));
}
Element Ring::mul(Element a, Element b) const {
  check(a);
  check(b);
  return Element(tag(), impl_->mul(a.index(), b.index()));
}

Element Ring::scale(std::int64_t k, Element a) const {
  check(a);
  if (k < 0) return neg(scale(-k, a));
  Index acc = 0;
  Index base = a.index();
  auto u = static_cast<std::uint64_t>(k);
  while (u > 0) {
    if (u & 1) acc = impl_->add(acc, base);
    base = impl_->add(base, base);
    u >>= 1;
  }
  return Element(tag(), acc);
}

Index Ring::add_index(Index a, Index b) const { return impl_->add(a, b); }
Index Ring::neg_index(Index a) const { return impl_->neg(a); }
Index Ring::mul_index(Index a, Index b) const { return impl_->mul(a, b); }

std::vector<std::vector<Coeff>> Ring::coefficients(Element a) const {
  check(a);
  return impl_->coefficients(a.index());
}

Element Ring::from_coefficients(const std::vector<std::vector<Coeff>>& coeffs) const {
  const auto* towers = impl_->towers();
  if (towers == nullptr) throw StructuralError("ring is not a tower product");
  if (coeffs.size() != towers->size()) throw ArgumentError("factor count mismatch");
  std::vector<std::vector<Coeff>> c;
  for (std::size_t f = 0; f < towers->size(); ++f) {
    if (coeffs[f].size() != (*towers)[f].degree()) {
      throw ArgumentError("coefficient vector has wrong length");
    }
    c.push_back((*towers)[f].normalize(coeffs[f]));
  }
  const auto& impl = static_cast<const detail::TowerProductImpl&>(*impl_);
  return Element(tag(), impl.encode(c));
}

bool Ring::is_tower_product() const { return impl_->towers() != nullptr; }

const std::vector<Tower>& Ring::factors() const {
  static const std::vector<Tower> kEmpty;
  const auto* t = impl_->towers();
  return t ? *t : kEmpty;
}

std::string Ring::name() const { return impl_->name(); }

bool Ring::is_unit(Element a) const {
  check(a);
  return is_unit_index(a.index());
}

bool Ring::is_unit_index(Index a) const {
  return impl_->structure_data(*this).unit_mask[a] != 0;
}

std::vector<Element> Ring::units() const {
  const auto& mask = impl_->structure_data(*this).unit_mask;
  std::vector<Element> r;
  for (Index a = 0; a < size(); ++a) {
    if (mask[a]) r.push_back(Element(tag(), a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ideals and quotients

Ideal::Ideal(Ring ring, std::vector<Element> generators, std::vector<Element> elements)
    : ring_(std::move(ring)), generators_(std::move(generators)), elements_(std::move(elements)) {}

Ideal Ideal::from_elements(const Ring& ring, std::vector<Element> generators,
                           std::vector<Element> elements) {
  for (Element g : generators) ring.check(g);
  for (Element a : elements) ring.check(a);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<std::uint8_t> in(ring.size(), 0);
  for (Element a : elements) in[a.index()] = 1;
  if (elements.empty() || !in[0]) throw StructuralError("ideal must contain 0");
  for (Element g : generators) {
    if (!in[g.index()]) throw StructuralError("generator is not in the ideal");
  }
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[ring.add_index(a.index(), b.index())]) {
        throw StructuralError("set is not closed under addition");
      }
    }
    for (Index r = 0; r < ring.size(); ++r) {
      if (!in[ring.mul_index(r, a.index())]) {
        throw StructuralError("set is not closed under multiplication by the ring");
      }
    }
  }
  return Ideal(ring, std::move(generators), std::move(elements));
}

bool Ideal::contains(Element a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

namespace {

std::vector<Element> from_mask(const Ring& ring, const std::vector<std::uint8_t>& mask) {
  std::vector<Element> r;
  for (Index a = 0; a < mask.size(); ++a) {
    if (mask[a]) r.push_back(ring.element(a));
  }
  return r;
}

/// A short generating list for an ideal given by its sorted elements: scan
/// ascending and keep every element not yet in the ideal generated so far.
std::vector<Element> greedy_generators(const Ring& ring, const std::vector<Element>& elements) {
  if (elements.size() == 1) return {ring.zero()};
  if (elements.size() == ring.size()) return {ring.one()};
  std::vector<Element> gens;
  std::vector<std::uint8_t> mask(ring.size(), 0);
  mask[0] = 1;
  for (Element x : elements) {
    if (mask[x.index()]) continue;
    gens.push_back(x);
    std::vector<std::uint8_t> principal(ring.size(), 0);
    for (Index a = 0; a < ring.size(); ++a) principal[ring.mul_index(a, x.index())] = 1;
    std::vector<std::uint8_t> next(ring.size(), 0);
    for (Index c = 0; c < ring.size(); ++c) {
      if (!mask[c]) continue;
      for (Index b = 0; b < ring.size(); ++b) {
        if (principal[b]) next[ring.add_index(c, b)] = 1;
      }
    }
    mask = std::move(next);
  }
  return gens;
}

}  // namespace

Ideal principal_ideal(const Ring& ring, Element x) {
  ring.check(x);
  std::vector<std::uint8_t> mask(ring.size(), 0);
  for (Index a = 0; a < ring.size(); ++a) mask[ring.mul_index(a, x.index())] = 1;
  return Ideal(ring, {x}, from_mask(ring, mask));
}

Ideal ideal_sum(const Ring& ring, std::span<const Ideal> ideals) {
  if (ideals.empty()) throw ArgumentError("ideal_sum needs at least one ideal");
  std::vector<std::uint8_t> mask(ring.size(), 0);
  std::vector<Element> gens;
  for (const Ideal& I : ideals) {
    if (!(I.ring() == ring)) throw StructuralError("ideal belongs to a different ring");
  }
  for (Element a : ideals.front().elements()) mask[a.index()] = 1;
  gens = ideals.front().generators();
  for (const Ideal& I : ideals.subspan(1)) {
    gens.insert(gens.end(), I.generators().begin(), I.generators().end());
    if (std::all_of(I.elements().begin(), I.elements().end(),
                    [&](Element a) { return mask[a.index()] != 0; })) {
      continue;
    }
    std::vector<std::uint8_t> next(ring.size(), 0);
    for (Index c = 0; c < ring.size(); ++c) {
      if (!mask[c]) continue;
      for (Element b : I.elements()) next[ring.add_index(c, b.index())] = 1;
    }
    mask = std::move(next);
  }
  return Ideal(ring, std::move(gens), from_mask(ring, mask));
}

Ideal annihilator(const Ring& ring, Element x) {
  ring.check(x);
  std::vector<Element> r;
  for (Index a = 0; a < ring.size(); ++a) {
    if (ring.mul_index(a, x.index()) == 0) r.push_back(ring.element(a));
  }
  auto gens = greedy_generators(ring, r);
  return Ideal(ring, std::move(gens), std::move(r));
}

QuotientRing::QuotientRing(const Ring& ambient, const Ideal& modulus)
    : ambient_(ambient), modulus_(modulus), ring_(ambient) {
  if (!(modulus.ring() == ambient)) {
    throw StructuralError("ideal belongs to a different ring");
  }
  const std::size_t n = ambient.size();
  constexpr Index kUnassigned = ~Index{0};
  std::vector<Index> reduce(n, kUnassigned);
  std::vector<Index> reps;
  for (Index a = 0; a < n; ++a) {
    if (reduce[a] != kUnassigned) continue;
    const auto q = static_cast<Index>(reps.size());
    reps.push_back(a);
    for (Element i : modulus.elements()) {
      const Index b = ambient.add_index(a, i.index());
      if (reduce[b] != kUnassigned) throw StructuralError("ideal is not an additive subgroup");
      reduce[b] = q;
    }
  }
  if (reps.size() * modulus.size() != n) throw StructuralError("cosets do not partition the ring");
  std::string mod_name = "(";
  for (std::size_t i = 0; i < modulus.generators().size(); ++i) {
    if (i > 0) mod_name += ", ";
    mod_name += to_string(ambient, modulus.generators()[i]);
  }
  mod_name += ")";
  for (Index r : reps) reps_.push_back(ambient.element(r));
  ring_ = Ring(std::make_shared<detail::QuotientImpl>(ambient, std::move(reps), std::move(reduce),
                                                      mod_name));
}

std::span<const Element> QuotientRing::reps() const { return reps_; }

Element QuotientRing::reduce(Element a) const {
  ambient_.check(a);
  const auto& impl = static_cast<const detail::QuotientImpl&>(ring_.impl());
  return ring_.element(impl.reduce_map()[a.index()]);
}

Element QuotientRing::lift(Element a) const {
  ring_.check(a);
  const auto& impl = static_cast<const detail::QuotientImpl&>(ring_.impl());
  return ambient_.element(impl.reps()[a.index()]);
}

QuotientRing quotient(const Ring& ring, const Ideal& ideal) { return QuotientRing(ring, ideal); }

// ---------------------------------------------------------------------------
// Structure

std::vector<Element> idempotents(const Ring& ring) {
  return ring.impl().structure_data(ring).idempotents;
}

const std::vector<LocalFactor>& local_decomposition(const Ring& ring) {
  return ring.impl().structure_data(ring).factors;
}

bool LocalFactor::in_maximal_ideal(Element a) const {
  return std::binary_search(maximal_ideal.begin(), maximal_ideal.end(), a);
}

std::uint64_t euler_phi(const Ring& ring) {
  const auto& mask = ring.impl().structure_data(ring).unit_mask;
  return static_cast<std::uint64_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

std::uint64_t euler_phi(const QuotientRing& ring) { return euler_phi(ring.ring()); }

std::uint64_t euler_phi(const LocalFactor& factor) {
  return factor.carrier.size() - factor.maximal_ideal.size();
}

int moebius(const Ring& ring) {
  if (ring.size() == 1) return 1;
  const auto& factors = local_decomposition(ring);
  for (const LocalFactor& f : factors) {
    if (!f.is_field()) return 0;
  }
  return factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(const QuotientRing& ring) { return moebius(ring.ring()); }

F2Reduction f2_reduction(const Ring& ring) {
  F2Reduction red;
  const auto& factors = local_decomposition(ring);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].residue_field_size == 2) red.factor_indices.push_back(i);
  }
  red.r = red.factor_indices.size();
  red.image.assign(ring.size(), 0);
  for (std::size_t bit = 0; bit < red.r; ++bit) {
    const LocalFactor& f = factors[red.factor_indices[bit]];
    std::vector<std::uint8_t> in_max(ring.size(), 0);
    for (Element m : f.maximal_ideal) in_max[m.index()] = 1;
    for (Index a = 0; a < ring.size(); ++a) {
      if (!in_max[ring.mul_index(a, f.idempotent.index())]) red.image[a] |= 1u << bit;
    }
  }
  return red;
}

std::string to_string(const Ring& ring, Element a) {
  std::ostringstream os;
  os << '[';
  const auto c = ring.coefficients(a);
  for (std::size_t f = 0; f < c.size(); ++f) {
    if (f > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < c[f].size(); ++j) {
      if (j > 0) os << ',';
      os << c[f][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace gcdgraph
