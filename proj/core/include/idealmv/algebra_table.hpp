#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealmv/ring.hpp"

namespace idealmv {

/// Carrier index of a finite algebra.
using Elem = std::uint16_t;

/// Upper bound on the carrier of a FiniteAlgebraTable.
inline constexpr std::size_t kMaxCarrier = 4096;

/// How witnesses are phrased: abstract lattice symbols or ring-ideal symbols.
enum class Notation { lattice, ideal };

/// Cayley tables for (meet, join, times, imp) plus constants bottom, top and
/// the order relation, over the carrier {0, ..., size-1}.
///
/// Construction checks shapes and index ranges only; the algebraic axioms are
/// what the suites in suites.hpp verify.
class FiniteAlgebraTable {
 public:
  using BinaryFn = std::function<Elem(Elem, Elem)>;
  using RelationFn = std::function<bool(Elem, Elem)>;

  struct Parts {
    std::size_t size = 0;
    std::vector<Elem> meet, join, times, imp;  // row-major, size*size
    std::vector<std::uint8_t> leq;             // row-major, size*size
    Elem bottom = 0;
    Elem top = 0;
    std::vector<std::string> labels;  // empty: canonical_labels(size)
    Notation notation = Notation::lattice;
  };

  explicit FiniteAlgebraTable(Parts parts);

  /// Tabulates the given operations over {0, ..., size-1}.
  static FiniteAlgebraTable tabulate(std::size_t size, Elem bottom, Elem top, const BinaryFn& meet,
                                     const BinaryFn& join, const BinaryFn& times,
                                     const BinaryFn& imp, const RelationFn& leq,
                                     std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Notation notation() const { return notation_; }

  Elem meet(Elem x, Elem y) const { return meet_[at(x, y)]; }
  Elem join(Elem x, Elem y) const { return join_[at(x, y)]; }
  Elem times(Elem x, Elem y) const { return times_[at(x, y)]; }
  Elem imp(Elem x, Elem y) const { return imp_[at(x, y)]; }
  bool leq(Elem x, Elem y) const { return leq_[at(x, y)] != 0; }

  /// x* = x -> bottom
  Elem star(Elem x) const { return imp(x, bottom_); }
  /// x (+) y = x* -> y
  Elem oplus(Elem x, Elem y) const { return imp(star(x), y); }

  const std::string& label(Elem x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(std::string_view name) const;

  /// Copy with a single implication entry replaced.
  FiniteAlgebraTable with_imp(Elem x, Elem y, Elem value) const;
  /// Copy with different carrier names.
  FiniteAlgebraTable with_labels(std::vector<std::string> labels) const;

  /// Throws std::out_of_range for an index outside the carrier.
  void require_index(std::size_t x) const;

  friend bool operator==(const FiniteAlgebraTable& a, const FiniteAlgebraTable& b);

 private:
  std::size_t at(Elem x, Elem y) const { return std::size_t{x} * size_ + y; }

  std::size_t size_;
  std::vector<Elem> meet_, join_, times_, imp_;
  std::vector<std::uint8_t> leq_;
  Elem bottom_;
  Elem top_;
  std::vector<std::string> labels_;
  Notation notation_;
};

/// O (bottom), R, B, C, D, F, G, ..., E (top). Beyond 24 carriers every
/// element is named I0 ... I{n-1}.
std::vector<std::string> canonical_labels(std::size_t n);

/// (Id(A), intersection, +, product, quotient, {0}, A) with carrier in
/// canonical ideal order; imp(I, J) = (J : I) and leq is inclusion.
/// Requires N_A <= kMaxCarrier.
FiniteAlgebraTable from_ideal_lattice(const RingSpec& spec);

}  // namespace idealmv
