#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idealmv/ring.hpp"

namespace idealmv::detail {

/// Dense addition/multiplication tables over canonical element indices.
/// Built lazily, once per spec storage, and only for |A| <= kMaxElements.
struct ElementTables {
  std::size_t size = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
  std::vector<std::uint8_t> neg;

  std::size_t sum(std::size_t i, std::size_t j) const { return add[i * size + j]; }
  std::size_t product(std::size_t i, std::size_t j) const { return mul[i * size + j]; }
};

}  // namespace idealmv::detail

namespace idealmv {
/// Throws BoundExceeded when |A| > kMaxElements.
const detail::ElementTables& element_tables(const RingSpec& spec);
}  // namespace idealmv
