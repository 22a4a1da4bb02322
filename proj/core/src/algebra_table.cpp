#include "idealmv/algebra_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealmv/error.hpp"
#include "idealmv/ideal.hpp"

namespace idealmv {

namespace {

void require_shape(const std::vector<Elem>& table, std::size_t n, const char* name) {
  if (table.size() != n * n) {
    throw std::invalid_argument(std::string(name) + " table must have " + std::to_string(n * n) +
                                " entries");
  }
  for (Elem v : table) {
    if (v >= n) {
      throw std::out_of_range(std::string(name) + " table entry " + std::to_string(v) +
                              " outside the carrier");
    }
  }
}

}  // namespace

std::vector<std::string> canonical_labels(std::size_t n) {
  static constexpr const char* kInner[] = {"R", "B", "C", "D", "F", "G", "H", "J",
                                           "K", "L", "M", "N", "P", "Q", "S", "T",
                                           "U", "V", "W", "X", "Y", "Z"};
  constexpr std::size_t kInnerCount = sizeof(kInner) / sizeof(kInner[0]);
  std::vector<std::string> out;
  if (n > kInnerCount + 2) {
    for (std::size_t i = 0; i < n; ++i) out.push_back("I" + std::to_string(i));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out.emplace_back("O");
    } else if (i + 1 == n) {
      out.emplace_back("E");
    } else {
      out.emplace_back(kInner[i - 1]);
    }
  }
  return out;
}

FiniteAlgebraTable::FiniteAlgebraTable(Parts parts)
    : size_(parts.size),
      meet_(std::move(parts.meet)),
      join_(std::move(parts.join)),
      times_(std::move(parts.times)),
      imp_(std::move(parts.imp)),
      leq_(std::move(parts.leq)),
      bottom_(parts.bottom),
      top_(parts.top),
      labels_(std::move(parts.labels)),
      notation_(parts.notation) {
  if (size_ == 0) throw std::invalid_argument("algebra carrier is empty");
  if (size_ > kMaxCarrier) {
    throw BoundExceeded("algebra carrier of " + std::to_string(size_) + " exceeds " +
                        std::to_string(kMaxCarrier));
  }
  require_shape(meet_, size_, "meet");
  require_shape(join_, size_, "join");
  require_shape(times_, size_, "times");
  require_shape(imp_, size_, "imp");
  if (leq_.size() != size_ * size_) throw std::invalid_argument("leq relation has wrong shape");
  require_index(bottom_);
  require_index(top_);
  if (labels_.empty()) labels_ = canonical_labels(size_);
  if (labels_.size() != size_) throw std::invalid_argument("label count differs from carrier");
}

FiniteAlgebraTable FiniteAlgebraTable::tabulate(std::size_t size, Elem bottom, Elem top,
                                                const BinaryFn& meet, const BinaryFn& join,
                                                const BinaryFn& times, const BinaryFn& imp,
                                                const RelationFn& leq,
                                                std::vector<std::string> labels) {
  if (size > kMaxCarrier) {
    throw BoundExceeded("algebra carrier of " + std::to_string(size) + " exceeds " +
                        std::to_string(kMaxCarrier));
  }
  Parts p;
  p.size = size;
  p.bottom = bottom;
  p.top = top;
  p.labels = std::move(labels);
  const std::size_t cells = size * size;
  p.meet.resize(cells);
  p.join.resize(cells);
  p.times.resize(cells);
  p.imp.resize(cells);
  p.leq.resize(cells);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const auto a = static_cast<Elem>(x);
      const auto b = static_cast<Elem>(y);
      const std::size_t k = x * size + y;
      p.meet[k] = meet(a, b);
      p.join[k] = join(a, b);
      p.times[k] = times(a, b);
      p.imp[k] = imp(a, b);
      p.leq[k] = leq(a, b) ? 1 : 0;
    }
  }
  return FiniteAlgebraTable(std::move(p));
}

std::optional<Elem> FiniteAlgebraTable::find_label(std::string_view name) const {
  const auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

void FiniteAlgebraTable::require_index(std::size_t x) const {
  if (x >= size_) {
    throw std::out_of_range("carrier index " + std::to_string(x) + " outside [0," +
                            std::to_string(size_) + ")");
  }
}

FiniteAlgebraTable FiniteAlgebraTable::with_imp(Elem x, Elem y, Elem value) const {
  require_index(x);
  require_index(y);
  require_index(value);
  FiniteAlgebraTable copy = *this;
  copy.imp_[at(x, y)] = value;
  return copy;
}

FiniteAlgebraTable FiniteAlgebraTable::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size_) throw std::invalid_argument("label count differs from carrier");
  FiniteAlgebraTable copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

bool operator==(const FiniteAlgebraTable& a, const FiniteAlgebraTable& b) {
  return a.size_ == b.size_ && a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.meet_ == b.meet_ &&
         a.join_ == b.join_ && a.times_ == b.times_ && a.imp_ == b.imp_ && a.leq_ == b.leq_;
}

FiniteAlgebraTable from_ideal_lattice(const RingSpec& spec) {
  const std::uint64_t n = spec.ideal_count();
  if (n > kMaxCarrier) {
    throw BoundExceeded(spec.to_string() + " has " + std::to_string(n) +
                        " ideals; the lattice table is limited to " +
                        std::to_string(kMaxCarrier));
  }
  const auto factors = spec.factors();
  const std::size_t r = factors.size();
  const std::size_t m = n;

  // Exponent vectors in canonical order, flattened.
  std::vector<std::uint32_t> alpha(r);
  for (std::size_t i = 0; i < r; ++i) alpha[i] = factors[i].exponent;
  std::vector<std::uint32_t> ex(m * r);
  for (std::size_t k = 0; k < m; ++k) {
    const IdealIndex I = ideal_at(spec, k);
    std::copy(I.exponents().begin(), I.exponents().end(), ex.begin() + k * r);
  }
  auto encode = [&](const std::vector<std::uint32_t>& e) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < r; ++i) pos = pos * (alpha[i] + 1) + (alpha[i] - e[i]);
    return static_cast<Elem>(pos);
  };

  FiniteAlgebraTable::Parts p;
  p.size = m;
  p.bottom = 0;
  p.top = static_cast<Elem>(m - 1);
  p.notation = Notation::ideal;
  p.meet.resize(m * m);
  p.join.resize(m * m);
  p.times.resize(m * m);
  p.imp.resize(m * m);
  p.leq.resize(m * m);
  std::vector<std::uint32_t> v_meet(r), v_join(r), v_times(r), v_imp(r);
  for (std::size_t a = 0; a < m; ++a) {
    const std::uint32_t* e = &ex[a * r];
    for (std::size_t b = 0; b < m; ++b) {
      const std::uint32_t* f = &ex[b * r];
      bool sub = true;
      for (std::size_t i = 0; i < r; ++i) {
        v_meet[i] = std::max(e[i], f[i]);
        v_join[i] = std::min(e[i], f[i]);
        v_times[i] = std::min(e[i] + f[i], alpha[i]);
        v_imp[i] = f[i] > e[i] ? f[i] - e[i] : 0;  // (I_f : I_e)
        sub = sub && e[i] >= f[i];
      }
      const std::size_t k = a * m + b;
      p.meet[k] = encode(v_meet);
      p.join[k] = encode(v_join);
      p.times[k] = encode(v_times);
      p.imp[k] = encode(v_imp);
      p.leq[k] = sub ? 1 : 0;
    }
  }
  return FiniteAlgebraTable(std::move(p));
}

}  // namespace idealmv
