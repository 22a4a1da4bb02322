#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealmv/algebra_table.hpp"

namespace idealmv {

enum class Suite {
  residuated,
  bck,
  chang,
  wajsberg,
  mv,
  divisible,
  double_negation,
  heyting,
  boolean,
  prop35,
  prop3181,
  prop333,
};

/// Every suite, in declaration order.
std::span<const Suite> all_suites();
/// The suites that every ideal lattice of a finite ring satisfies (all but
/// heyting and boolean).
std::span<const Suite> universal_suites();

std::string_view suite_name(Suite s);
/// Accepts the names produced by suite_name; throws ParseError otherwise.
Suite parse_suite(std::string_view name);

/// Carrier indices that falsify one axiom, first in lexicographic scan order.
struct Witness {
  std::string axiom;
  std::vector<Elem> elements;
};

/// Individual truth of one condition in an agreement suite.
struct ConditionResult {
  std::string id;
  bool holds = false;
  std::optional<Witness> counterexample;
};

struct SuiteReport {
  Suite suite = Suite::residuated;
  bool pass = false;
  /// At most kMaxWitnesses, first failure per axiom.
  std::vector<Witness> witnesses;
  /// Only for prop35, prop3181 and prop333.
  std::vector<ConditionResult> conditions;
};

inline constexpr std::size_t kMaxWitnesses = 10;

/// Exhaustive evaluation of a suite over all tuples of the carrier.
SuiteReport check_suite(const FiniteAlgebraTable& t, Suite suite);

enum class LatticeClass { boolean, mv_not_boolean, heyting_not_mv, other };

std::string_view lattice_class_name(LatticeClass c);

/// Boolean if the boolean suite passes; MV_not_Boolean if chang passes;
/// Heyting_not_MV if heyting passes; other otherwise.
LatticeClass classify_lattice(const FiniteAlgebraTable& t);

enum class DerivedOp { oplus, star, imp };

/// star(x) = x -> bottom, oplus(x, y) = star(x) -> y, imp(x, y). For star, y
/// is ignored. Throws std::out_of_range for indices outside the carrier.
Elem derived_op(const FiniteAlgebraTable& t, DerivedOp kind, std::size_t x, std::size_t y = 0);

/// "R: R+Ann(R) ≠ A" — the witness labels and the violated instance in the
/// table's notation.
std::string describe_witness(const FiniteAlgebraTable& t, const Witness& w);

}  // namespace idealmv
