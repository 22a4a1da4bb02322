#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "idealmv/explicit_ideal.hpp"
#include "idealmv/ring.hpp"

namespace idealmv {

/// An ideal of Z_{p1^a1} x ... x Z_{pr^ar} as its exponent vector e: the
/// ideal p1^e1 Z x ... x pr^er Z. e = 0 is the whole ring, e = alpha is the
/// zero ideal.
class IdealIndex {
 public:
  IdealIndex(RingSpec spec, std::vector<std::uint32_t> exponents);

  static IdealIndex zero(const RingSpec& spec);
  static IdealIndex whole(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }

  /// prod p_i^(alpha_i - e_i)
  std::uint64_t cardinality() const;
  bool is_zero() const;
  bool is_whole() const;

  /// Position in enumerate_ideals(spec()).
  std::uint64_t position() const;

  /// "(1,2)"
  std::string to_string() const;

  friend bool operator==(const IdealIndex& a, const IdealIndex& b);

 private:
  RingSpec spec_;
  std::vector<std::uint32_t> exponents_;
};

/// a is contained in b.
bool is_subideal(const IdealIndex& a, const IdealIndex& b);

IdealIndex sum_ideals(const IdealIndex& e, const IdealIndex& f);        // min(e, f)
IdealIndex product_ideals(const IdealIndex& e, const IdealIndex& f);    // min(e + f, alpha)
IdealIndex intersect_ideals(const IdealIndex& e, const IdealIndex& f);  // max(e, f)
IdealIndex quotient_ideals(const IdealIndex& e, const IdealIndex& f);   // (I_e : I_f) = max(e - f, 0)
IdealIndex annihilator(const IdealIndex& e);                            // alpha - e
/// Iterated product, I^0 = A.
IdealIndex ideal_power(const IdealIndex& e, std::uint32_t n);
/// I + J = A.
bool is_coprime(const IdealIndex& e, const IdealIndex& f);

/// Exponent-vector counterpart of explicit_op; `ann` ignores f.
IdealIndex fast_op(IdealOp op, const IdealIndex& e, const IdealIndex& f);

/// Upper bound on N_A for enumerate_ideals.
inline constexpr std::uint64_t kMaxIdealCount = std::uint64_t{1} << 20;

/// Canonical ideal order: descending lexicographic on exponent vectors, i.e.
/// ascending mixed radix on alpha - e. It is a linear extension of inclusion
/// that starts at the zero ideal and ends at A.
bool canonical_before(const IdealIndex& a, const IdealIndex& b);

/// All N_A = prod (alpha_i + 1) ideals in canonical order.
std::vector<IdealIndex> enumerate_ideals(const RingSpec& spec);

IdealIndex ideal_at(const RingSpec& spec, std::uint64_t position);

/// {x : x_i = 0 mod p_i^e_i}. Bounded by kMaxElements.
ExplicitIdeal materialize(const IdealIndex& ideal);

/// Exponent vector of an explicit ideal (minimum valuation per factor).
IdealIndex locate(const ExplicitIdeal& ideal);

/// {"exponents":[...],"cardinality":n[,"members":[[...],...]]}
std::string ideal_to_json(const IdealIndex& ideal, bool with_members);

using FastIdealOp = std::function<IdealIndex(IdealOp, const IdealIndex&, const IdealIndex&)>;

struct OracleReport {
  std::uint64_t checks = 0;
  /// One line per disagreement: operation, operands, fast value, oracle value.
  std::vector<std::string> disagreements;

  bool agrees() const { return disagreements.empty(); }
};

/// Compares every fast ideal operation on all ideal pairs, plus the ideal
/// enumeration itself, against the explicit-set computation.
OracleReport oracle_cross_check(const RingSpec& spec, const FastIdealOp& fast = fast_op);

}  // namespace idealmv
