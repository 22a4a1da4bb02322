#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idealmv {

/// One factor Z_{p^a} of a finite ring.
struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  std::uint64_t modulus() const;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Cardinality guard for any ring spec. Paths that only manipulate exponent
/// vectors never enumerate elements, so this is an overflow bound only.
inline constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 62;

/// Bound for every computation that touches individual ring elements.
inline constexpr std::size_t kMaxElements = 256;

namespace detail {
struct ElementTables;
}

/// A finite commutative unitary ring Z_{p1^a1} x ... x Z_{pr^ar}.
///
/// The factor list is kept in canonical form (sorted by (p, a)), so two specs
/// describe the same ring exactly when they compare equal. Copies share the
/// immutable factor storage.
class RingSpec {
 public:
  explicit RingSpec(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const;
  std::size_t rank() const;
  std::uint64_t modulus(std::size_t factor) const;

  /// |A| = prod p_i^a_i.
  std::uint64_t cardinality() const;
  /// N_A = prod (a_i + 1).
  std::uint64_t ideal_count() const;

  /// Every exponent equals 1 (the Boolean case).
  bool is_reduced() const;
  /// Pairwise distinct primes, i.e. the ring is isomorphic to Z_n.
  bool is_cyclic() const;

  /// "Z2 x Z4"
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;

  friend const detail::ElementTables& element_tables(const RingSpec& spec);
};

std::ostream& operator<<(std::ostream& os, const RingSpec& spec);

/// Parses `Z<k> (x Z<k>)*` or `<p>^<a> (x <p>^<a>)*`. Composite moduli are
/// split into their prime-power factors.
RingSpec parse_ring_spec(std::string_view text);

/// An element of a RingSpec as a residue vector.
class RingElement {
 public:
  RingElement(RingSpec spec, std::vector<std::uint64_t> residues);

  const RingSpec& spec() const { return spec_; }
  std::span<const std::uint64_t> residues() const { return residues_; }

  /// Position in the canonical enumeration (mixed radix, last factor fastest).
  std::uint64_t index() const;

  /// "(1,2)"
  std::string to_string() const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingSpec spec_;
  std::vector<std::uint64_t> residues_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

RingElement zero_element(const RingSpec& spec);
RingElement one_element(const RingSpec& spec);
RingElement element_at(const RingSpec& spec, std::uint64_t index);
/// Image of an integer under the canonical map Z -> A.
RingElement element_from_integer(const RingSpec& spec, std::int64_t value);

/// All |A| elements in ascending mixed-radix order. Bounded by kMaxElements.
std::vector<RingElement> enumerate_elements(const RingSpec& spec);

enum class ArithOp { add, mul, neg };

/// Componentwise modular arithmetic. For `neg` the second operand only has to
/// belong to the same ring.
RingElement ring_arith(ArithOp op, const RingElement& x, const RingElement& y);

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);

bool is_prime(std::uint64_t n);

}  // namespace idealmv
