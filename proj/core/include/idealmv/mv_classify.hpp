#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealmv/algebra_table.hpp"
#include "idealmv/ring.hpp"
#include "idealmv/suites.hpp"

namespace idealmv {

/// An unordered factorization of n into factors >= 2, stored ascending.
struct MultiplicativePartition {
  std::vector<std::uint64_t> factors;

  std::uint64_t product() const;
  bool is_singleton() const { return factors.size() == 1; }
  bool all_twos() const;
  /// "[2,4]"
  std::string to_string() const;

  friend bool operator==(const MultiplicativePartition&, const MultiplicativePartition&) = default;
};

inline constexpr std::uint64_t kMaxPartitionTarget = 1'000'000;

/// Every multiplicative partition of n including [n], ordered by number of
/// factors, then lexicographically. 2 <= n <= kMaxPartitionTarget.
std::vector<MultiplicativePartition> multiplicative_partitions(std::uint64_t n);

/// A finite algebra verified to pass the mv suite, with a note on where it
/// came from.
class MvAlgebra {
 public:
  /// Throws PreconditionFailed if the mv suite fails.
  MvAlgebra(FiniteAlgebraTable table, std::string provenance);

  const FiniteAlgebraTable& table() const { return table_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t size() const { return table_.size(); }

 private:
  FiniteAlgebraTable table_;
  std::string provenance_;
};

/// The m-element chain I_0 < ... < I_k (k = m - 1): imp(i, j) = top if i <= j
/// else k - i + j; star(i) = k - i; oplus(i, j) = min(i + j, k).
MvAlgebra chain_mv(std::size_t m);

/// Id(spec) as an MV-algebra.
MvAlgebra ideal_mv(const RingSpec& spec);

/// One factor Z_{p^(m-1)} per partition factor m.
RingSpec ring_for_partition(const MultiplicativePartition& part, std::uint64_t p = 2);

/// The leq relation of t is total.
bool is_chain(const FiniteAlgebraTable& t);

inline constexpr std::size_t kMaxIsomorphismSize = 12;

/// A bijection phi (phi[x] = image of x) preserving oplus and star, if one
/// exists. Sizes above kMaxIsomorphismSize throw BoundExceeded.
std::optional<std::vector<Elem>> find_isomorphism(const MvAlgebra& a, const MvAlgebra& b);
bool is_isomorphic(const MvAlgebra& a, const MvAlgebra& b);

struct Representative {
  MultiplicativePartition partition;
  RingSpec spec;
  MvAlgebra algebra;
  bool chain = false;
  bool boolean = false;
};

struct Classification {
  std::uint64_t n = 0;
  std::vector<Representative> representatives;
  bool pairwise_non_isomorphic = false;

  std::size_t total() const { return representatives.size(); }
  std::size_t chains() const;
  std::size_t booleans() const;
};

inline constexpr std::uint64_t kMaxClassifySize = 12;

/// One representative per multiplicative partition of n (rings over p = 2),
/// checked pairwise non-isomorphic. 2 <= n <= kMaxClassifySize.
Classification classify_all(std::uint64_t n);

std::string render_classification_text(const Classification& c);
/// Includes each representative's oplus, star and imp tables.
std::string render_classification_json(const Classification& c);

// Regenerated summary tables.

struct CountRow {
  std::uint64_t n = 0;
  std::size_t mv = 0;
  std::size_t boolean = 0;
};

struct RingRow {
  std::uint64_t n = 0;
  RingSpec spec;
  /// "Z6" for a cyclic ring with several factors, empty otherwise.
  std::string cyclic_alias;
  LatticeClass verdict = LatticeClass::other;
};

struct GeneratorRow {
  std::uint64_t n = 0;
  std::vector<MultiplicativePartition> partitions;
  /// "Zp^2 x Zp^3 (MV)" style descriptions, one per partition.
  std::vector<std::string> generators;
};

/// MV and Boolean counts for 2 <= n <= n_max (n_max <= kMaxClassifySize).
std::vector<CountRow> count_table(std::uint64_t n_max);
/// Every ring with 2 <= |A| <= n_max (n_max <= 16) and its lattice class.
std::vector<RingRow> ring_table(std::uint64_t n_max);
/// Generating rings per n for 2 <= n <= n_max (n_max <= kMaxClassifySize).
std::vector<GeneratorRow> generator_table(std::uint64_t n_max);

/// Every ring Z_{p1^a1} x ... with exactly n elements, ordered by number of
/// factors, then by factor list.
std::vector<RingSpec> rings_of_order(std::uint64_t n);

/// "Zp", "Zp^3", "Zp x Zp^2"
std::string generic_ring_name(const MultiplicativePartition& part);

enum class ReportKind { table1, table2, table3 };

std::string_view report_name(ReportKind k);
ReportKind parse_report(std::string_view name);

std::string render_report_text(ReportKind kind, std::uint64_t n_max);
std::string render_report_json(ReportKind kind, std::uint64_t n_max);
std::string render_report_csv(ReportKind kind, std::uint64_t n_max);

}  // namespace idealmv
