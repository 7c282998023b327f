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

// Finite commutative rings presented as products of polynomial towers over
// Z/m, together with ideals, quotients and the structural invariants the
// rest of the library is built on (units, idempotents, local factors).
//
// Every ring element is identified with an index in [0, |R|). For tower
// products the index is the mixed-radix value of the concatenated coefficient
// vectors, first coefficient most significant, so index order coincides with
// the lexicographic order on coefficient vectors.

#ifndef GCDGRAPH_RING_HPP
#define GCDGRAPH_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcdgraph {

/// Raised when an operation mixes objects from different rings or an input
/// violates a structural requirement (e.g. a set that is not an ideal).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for invalid user-supplied arguments (caps, empty lists, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant that should hold by construction fails.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Index = std::uint32_t;
using Coeff = std::int64_t;

inline constexpr std::size_t kDefaultMaxCardinality = 4096;

class Element {
 public:
  constexpr Element() = default;
  constexpr Element(std::uint32_t ring_tag, Index index)
      : tag_(ring_tag), index_(index) {}

  constexpr Index index() const { return index_; }
  constexpr std::uint32_t ring_tag() const { return tag_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t tag_ = 0;
  Index index_ = 0;
};

/// One monic extension layer of a tower: R_k = R_{k-1}[var]/(f).
struct Extension {
  std::string variable;
  /// Coefficients c_0..c_d of f, low degree first; each is a flat coefficient
  /// vector of the tower truncated below this layer. c_d is the identity.
  std::vector<std::vector<Coeff>> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

/// Iterated monic quotient (Z/m)[x_1]/(f_1)[x_2]/(f_2)...
///
/// Elements at depth k are flat coefficient vectors of length
/// degree_at(k); a depth-k element is the concatenation of its coefficients
/// (each a depth-(k-1) element) in increasing powers of x_k.
class Tower {
 public:
  explicit Tower(Coeff base_modulus);

  /// Smallest monic irreducible degree-d extension of Z/p, q = p^d.
  static Tower finite_field(std::uint64_t q, const std::string& variable = "a");
  /// Z/p^a with a degree-d extension that is irreducible modulo p.
  static Tower galois_ring(std::uint64_t prime_power, std::size_t degree,
                           const std::string& variable = "a");

  /// Adds a layer. `coeffs` holds f's coefficients low degree first, each a
  /// flat vector at the current depth; the leading one must be the identity.
  void extend(std::string variable, std::vector<std::vector<Coeff>> coeffs);

  Coeff modulus() const { return modulus_; }
  std::size_t depth() const { return extensions_.size(); }
  std::size_t degree() const { return degree_at(depth()); }
  std::size_t degree_at(std::size_t depth) const { return flat_len_[depth]; }
  const std::vector<Extension>& extensions() const { return extensions_; }
  /// m^degree, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> cardinality() const;

  void add(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
           std::span<Coeff> out) const;
  void sub(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
           std::span<Coeff> out) const;
  void mul(std::size_t depth, std::span<const Coeff> a, std::span<const Coeff> b,
           std::span<Coeff> out) const;

  std::vector<Coeff> one(std::size_t depth) const;
  bool is_one(std::size_t depth, std::span<const Coeff> a) const;
  /// Reduces arbitrary integers into [0, m).
  std::vector<Coeff> normalize(std::span<const Coeff> a) const;

  friend bool operator==(const Tower&, const Tower&);

 private:
  Coeff modulus_;
  std::vector<Extension> extensions_;
  std::vector<std::size_t> flat_len_{1};
};

namespace detail {
struct RingImpl;
}

/// A finite commutative ring with identity. Cheap to copy (shared, immutable
/// state); structural data is computed lazily and cached thread-safely.
class Ring {
 public:
  /// Product of towers. Throws ArgumentError above `max_cardinality`.
  static Ring product(std::vector<Tower> factors,
                      std::size_t max_cardinality = kDefaultMaxCardinality);
  static Ring integers_mod(Coeff n);

  std::size_t size() const;
  /// Additive order of 1.
  std::uint64_t characteristic() const;
  std::uint32_t tag() const;

  Element element(Index i) const;
  Element zero() const;
  Element one() const;
  Element from_integer(std::int64_t k) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element scale(std::int64_t k, Element a) const;

  /// Throws StructuralError if `a` is not an element of this ring.
  void check(Element a) const;
  bool owns(Element a) const;

  /// Index-level arithmetic without ownership checks, for hot loops.
  Index add_index(Index a, Index b) const;
  Index neg_index(Index a) const;
  Index mul_index(Index a, Index b) const;

  /// Per-factor coefficient lists. Quotient elements report their minimal
  /// representative in the ambient ring.
  std::vector<std::vector<Coeff>> coefficients(Element a) const;
  /// Only for tower products; coefficients are reduced.
  Element from_coefficients(const std::vector<std::vector<Coeff>>& coeffs) const;

  bool is_tower_product() const;
  /// Empty unless is_tower_product().
  const std::vector<Tower>& factors() const;
  /// Human readable description, e.g. "Z/3[x]/(x^2) x Z/2".
  std::string name() const;

  bool is_unit(Element a) const;
  bool is_unit_index(Index a) const;
  std::vector<Element> units() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.impl_ == b.impl_; }

  const detail::RingImpl& impl() const { return *impl_; }

 private:
  friend class QuotientRing;
  explicit Ring(std::shared_ptr<const detail::RingImpl> impl);
  std::shared_ptr<const detail::RingImpl> impl_;
};

class Ideal {
 public:
  /// Validating constructor for arbitrary element sets: throws
  /// StructuralError unless `elements` is an ideal of `ring`.
  static Ideal from_elements(const Ring& ring, std::vector<Element> generators,
                             std::vector<Element> elements);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  /// Sorted canonically.
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element a) const;
  bool is_zero() const { return elements_.size() == 1; }
  bool is_whole_ring() const { return elements_.size() == ring_.size(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  friend Ideal principal_ideal(const Ring&, Element);
  friend Ideal ideal_sum(const Ring&, std::span<const Ideal>);
  friend Ideal annihilator(const Ring&, Element);
  Ideal(Ring ring, std::vector<Element> generators, std::vector<Element> elements);

  Ring ring_;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
};

/// R/I with canonical minimal coset representatives. The quotient is itself
/// a Ring whose element i corresponds to representative reps()[i].
class QuotientRing {
 public:
  QuotientRing(const Ring& ambient, const Ideal& modulus);

  const Ring& ambient() const { return ambient_; }
  const Ideal& modulus() const { return modulus_; }
  const Ring& ring() const { return ring_; }
  /// Ambient elements, ascending; reps()[i] is the minimum of its coset.
  std::span<const Element> reps() const;
  Element reduce(Element a) const;
  Element lift(Element a) const;

 private:
  Ring ambient_;
  Ideal modulus_;
  Ring ring_;
  std::vector<Element> reps_;
};

struct LocalFactor {
  Element idempotent;
  /// e·R, sorted.
  std::vector<Element> carrier;
  /// Non-units of e·R, sorted.
  std::vector<Element> maximal_ideal;
  std::size_t residue_field_size = 0;

  bool is_field() const { return maximal_ideal.size() == 1; }
  bool in_maximal_ideal(Element a) const;
};

Ideal principal_ideal(const Ring& ring, Element x);
/// Smallest ideal containing all inputs. Throws ArgumentError when empty.
Ideal ideal_sum(const Ring& ring, std::span<const Ideal> ideals);
Ideal annihilator(const Ring& ring, Element x);
QuotientRing quotient(const Ring& ring, const Ideal& ideal);

/// All e with e^2 = e, sorted.
std::vector<Element> idempotents(const Ring& ring);
/// Local factors e_i·R for the primitive idempotents e_i, ordered by e_i.
/// Empty for the trivial ring.
const std::vector<LocalFactor>& local_decomposition(const Ring& ring);

/// |T^x|.
std::uint64_t euler_phi(const Ring& ring);
std::uint64_t euler_phi(const QuotientRing& ring);
std::uint64_t euler_phi(const LocalFactor& factor);

/// 1 for the trivial ring, 0 when a local factor is not a field, else
/// (-1)^(number of factors).
int moebius(const Ring& ring);
int moebius(const QuotientRing& ring);

/// Reduction onto F_2^r, r = number of local factors with residue field F_2.
struct F2Reduction {
  std::size_t r = 0;
  /// Indices into local_decomposition() of the F_2-residue factors.
  std::vector<std::size_t> factor_indices;
  /// Bit i set iff a·e_i is a unit of the i-th such factor.
  std::vector<std::uint32_t> image;  // indexed by element index

  std::uint32_t operator()(Element a) const { return image[a.index()]; }
};

F2Reduction f2_reduction(const Ring& ring);

/// Canonical serialization, e.g. [[1,2],[1]].
std::string to_string(const Ring& ring, Element a);

}  // namespace gcdgraph

#endif  // GCDGRAPH_RING_HPP
