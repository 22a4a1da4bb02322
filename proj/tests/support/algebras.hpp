#pragma once

// Small residuated lattices outside the ideal-lattice family, used to show
// that the suites separate the classes they are meant to separate.

#include <algorithm>
#include <cstddef>

#include "idealmv/algebra_table.hpp"

namespace algebras {

using idealmv::Elem;
using idealmv::FiniteAlgebraTable;

/// Goedel chain 0 < 1 < ... < m-1: times = min, x -> y = top if x <= y else y.
/// Heyting, not MV for m >= 3.
inline FiniteAlgebraTable godel_chain(std::size_t m) {
  const auto k = static_cast<Elem>(m - 1);
  return FiniteAlgebraTable::tabulate(
      m, 0, k, [](Elem x, Elem y) { return std::min(x, y); },
      [](Elem x, Elem y) { return std::max(x, y); }, [](Elem x, Elem y) { return std::min(x, y); },
      [k](Elem x, Elem y) { return x <= y ? k : y; }, [](Elem x, Elem y) { return x <= y; });
}

/// Nilpotent-minimum chain: x * y = min(x, y) if x + y > k else 0, and
/// x -> y = top if x <= y else max(k - x, y). Involutive, not divisible for
/// m >= 4.
inline FiniteAlgebraTable nilpotent_minimum_chain(std::size_t m) {
  const auto k = static_cast<Elem>(m - 1);
  return FiniteAlgebraTable::tabulate(
      m, 0, k, [](Elem x, Elem y) { return std::min(x, y); },
      [](Elem x, Elem y) { return std::max(x, y); },
      [k](Elem x, Elem y) { return x + y > k ? std::min(x, y) : Elem{0}; },
      [k](Elem x, Elem y) { return x <= y ? k : std::max(static_cast<Elem>(k - x), y); },
      [](Elem x, Elem y) { return x <= y; });
}

/// Direct product with carrier index a * |b| + b.
inline FiniteAlgebraTable product(const FiniteAlgebraTable& a, const FiniteAlgebraTable& b) {
  const std::size_t n = b.size();
  auto split = [n](Elem x) { return std::pair<Elem, Elem>(x / n, x % n); };
  auto join_idx = [n](Elem x, Elem y) { return static_cast<Elem>(x * n + y); };
  auto lift = [&](auto fa, auto fb) {
    return [=](Elem x, Elem y) {
      const auto [x1, x2] = split(x);
      const auto [y1, y2] = split(y);
      return join_idx(fa(x1, y1), fb(x2, y2));
    };
  };
  return FiniteAlgebraTable::tabulate(
      a.size() * n, join_idx(a.bottom(), b.bottom()), join_idx(a.top(), b.top()),
      lift([&a](Elem x, Elem y) { return a.meet(x, y); }, [&b](Elem x, Elem y) { return b.meet(x, y); }),
      lift([&a](Elem x, Elem y) { return a.join(x, y); }, [&b](Elem x, Elem y) { return b.join(x, y); }),
      lift([&a](Elem x, Elem y) { return a.times(x, y); }, [&b](Elem x, Elem y) { return b.times(x, y); }),
      lift([&a](Elem x, Elem y) { return a.imp(x, y); }, [&b](Elem x, Elem y) { return b.imp(x, y); }),
      [&](Elem x, Elem y) {
        const auto [x1, x2] = split(x);
        const auto [y1, y2] = split(y);
        return a.leq(x1, y1) && b.leq(x2, y2);
      });
}

}  // namespace algebras
