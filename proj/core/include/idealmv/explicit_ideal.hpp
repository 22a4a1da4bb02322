#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealmv/ring.hpp"

namespace idealmv {

/// Membership mask over canonical element indices.
using ElementMask = std::bitset<kMaxElements>;

class IdealIndex;
class ExplicitIdeal;
ExplicitIdeal materialize(const IdealIndex& ideal);

/// An ideal given by its literal element set. This is the brute-force
/// representation used to validate the exponent-vector fast path.
class ExplicitIdeal {
 public:
  /// Validates the ideal axioms (contains 0, closed under +, absorbs A).
  static ExplicitIdeal from_members(const RingSpec& spec, std::span<const RingElement> members);
  static ExplicitIdeal from_mask(const RingSpec& spec, const ElementMask& mask);

  const RingSpec& spec() const { return spec_; }
  const ElementMask& mask() const { return mask_; }
  std::size_t cardinality() const { return mask_.count(); }

  bool contains(const RingElement& x) const;
  bool is_subset_of(const ExplicitIdeal& other) const;
  std::vector<RingElement> members() const;

  /// "{(0),(2)}"
  std::string to_string() const;

  friend bool operator==(const ExplicitIdeal& a, const ExplicitIdeal& b);

 private:
  ExplicitIdeal(RingSpec spec, const ElementMask& mask) : spec_(std::move(spec)), mask_(mask) {}

  RingSpec spec_;
  ElementMask mask_;

  friend ExplicitIdeal materialize(const IdealIndex& ideal);
  friend ExplicitIdeal principal_ideal(const RingSpec& spec, const RingElement& x);
  friend class ExplicitOps;
};

/// Smallest subset containing x that is closed under addition and under
/// multiplication by every ring element, computed as a literal fixpoint.
ExplicitIdeal principal_ideal(const RingSpec& spec, const RingElement& x);

enum class IdealOp { sum, product, quotient, ann, intersect };

std::string_view ideal_op_name(IdealOp op);

/// Set-level ideal operations:
///   sum       {i + j}
///   product   additive closure of {i * j}
///   quotient  (X : Y) = {x : x*Y subset of X}
///   ann       (0 : X); Y is ignored
///   intersect X and Y
ExplicitIdeal explicit_op(IdealOp op, const ExplicitIdeal& x, const ExplicitIdeal& y);

/// Every ideal of the ring: fixpoint closure of the principal ideals under
/// pairwise sums. Sorted by (cardinality, mask) for determinism.
std::vector<ExplicitIdeal> enumerate_ideals_oracle(const RingSpec& spec);

}  // namespace idealmv
