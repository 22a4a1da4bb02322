#include "idealmv/explicit_ideal.hpp"

#include <algorithm>
#include <deque>

#include "element_tables.hpp"
#include "idealmv/error.hpp"

namespace idealmv {

class ExplicitOps {
 public:
  static ExplicitIdeal make(const RingSpec& spec, const ElementMask& mask) {
    return ExplicitIdeal(spec, mask);
  }
};

namespace {

void require_same_ring(const ExplicitIdeal& x, const ExplicitIdeal& y) {
  if (!(x.spec() == y.spec())) {
    throw SpecMismatch("ideals belong to " + x.spec().to_string() + " and " +
                       y.spec().to_string());
  }
}

std::vector<std::size_t> indices_of(const ElementMask& mask, std::size_t size) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (mask.test(i)) out.push_back(i);
  }
  return out;
}

// Additive closure of `seed` together with 0; optionally also absorbs every
// ring element.
ElementMask close(const detail::ElementTables& t, const ElementMask& seed, bool absorb) {
  ElementMask members;
  members.set(0);
  std::deque<std::size_t> pending;
  pending.push_back(0);
  for (std::size_t i = 0; i < t.size; ++i) {
    if (seed.test(i) && !members.test(i)) {
      members.set(i);
      pending.push_back(i);
    }
  }
  auto admit = [&](std::size_t v) {
    if (!members.test(v)) {
      members.set(v);
      pending.push_back(v);
    }
  };
  while (!pending.empty()) {
    const std::size_t x = pending.front();
    pending.pop_front();
    for (std::size_t y = 0; y < t.size; ++y) {
      if (members.test(y)) admit(t.sum(x, y));
      if (absorb) admit(t.product(x, y));
    }
  }
  return members;
}

bool is_ideal(const detail::ElementTables& t, const ElementMask& m) {
  if (!m.test(0)) return false;
  for (std::size_t x = 0; x < t.size; ++x) {
    if (!m.test(x)) continue;
    for (std::size_t y = 0; y < t.size; ++y) {
      if (m.test(y) && !m.test(t.sum(x, y))) return false;
      if (!m.test(t.product(x, y))) return false;
    }
  }
  return true;
}

bool mask_less(const ElementMask& a, const ElementMask& b, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    if (a.test(i) != b.test(i)) return a.test(i);
  }
  return false;
}

}  // namespace

ExplicitIdeal ExplicitIdeal::from_members(const RingSpec& spec,
                                          std::span<const RingElement> members) {
  const auto& t = element_tables(spec);
  ElementMask mask;
  for (const auto& x : members) {
    if (!(x.spec() == spec)) throw SpecMismatch("member " + x.to_string() + " is from another ring");
    mask.set(x.index());
  }
  if (!is_ideal(t, mask)) throw PreconditionFailed("element set is not an ideal");
  return ExplicitIdeal(spec, mask);
}

ExplicitIdeal ExplicitIdeal::from_mask(const RingSpec& spec, const ElementMask& mask) {
  const auto& t = element_tables(spec);
  for (std::size_t i = t.size; i < kMaxElements; ++i) {
    if (mask.test(i)) throw SpecMismatch("mask has members beyond |A|");
  }
  if (!is_ideal(t, mask)) throw PreconditionFailed("element set is not an ideal");
  return ExplicitIdeal(spec, mask);
}

bool ExplicitIdeal::contains(const RingElement& x) const {
  if (!(x.spec() == spec_)) throw SpecMismatch("element is from another ring");
  return mask_.test(x.index());
}

bool ExplicitIdeal::is_subset_of(const ExplicitIdeal& other) const {
  require_same_ring(*this, other);
  return (mask_ & ~other.mask_).none();
}

std::vector<RingElement> ExplicitIdeal::members() const {
  std::vector<RingElement> out;
  for (std::size_t i : indices_of(mask_, spec_.cardinality())) out.push_back(element_at(spec_, i));
  return out;
}

std::string ExplicitIdeal::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& x : members()) {
    if (!first) out += ",";
    first = false;
    out += x.to_string();
  }
  return out + "}";
}

bool operator==(const ExplicitIdeal& a, const ExplicitIdeal& b) {
  return a.spec_ == b.spec_ && a.mask_ == b.mask_;
}

ExplicitIdeal principal_ideal(const RingSpec& spec, const RingElement& x) {
  if (!(x.spec() == spec)) throw SpecMismatch("generator is from another ring");
  const auto& t = element_tables(spec);
  ElementMask seed;
  seed.set(x.index());
  return ExplicitIdeal(spec, close(t, seed, true));
}

std::string_view ideal_op_name(IdealOp op) {
  switch (op) {
    case IdealOp::sum: return "sum";
    case IdealOp::product: return "product";
    case IdealOp::quotient: return "quotient";
    case IdealOp::ann: return "ann";
    case IdealOp::intersect: return "intersect";
  }
  return "?";
}

ExplicitIdeal explicit_op(IdealOp op, const ExplicitIdeal& x, const ExplicitIdeal& y) {
  require_same_ring(x, y);
  const RingSpec& spec = x.spec();
  const auto& t = element_tables(spec);
  const auto xs = indices_of(x.mask(), t.size);
  const auto ys = indices_of(y.mask(), t.size);
  ElementMask out;

  auto quotient = [&](const ElementMask& num, const std::vector<std::size_t>& den) {
    ElementMask q;
    for (std::size_t a = 0; a < t.size; ++a) {
      const bool inside = std::all_of(den.begin(), den.end(),
                                      [&](std::size_t d) { return num.test(t.product(a, d)); });
      if (inside) q.set(a);
    }
    return q;
  };

  switch (op) {
    case IdealOp::sum:
      for (std::size_t i : xs) {
        for (std::size_t j : ys) out.set(t.sum(i, j));
      }
      break;
    case IdealOp::product: {
      ElementMask products;
      for (std::size_t i : xs) {
        for (std::size_t j : ys) products.set(t.product(i, j));
      }
      out = close(t, products, false);
      break;
    }
    case IdealOp::quotient:
      out = quotient(x.mask(), ys);
      break;
    case IdealOp::ann: {
      ElementMask zero;
      zero.set(0);
      out = quotient(zero, xs);
      break;
    }
    case IdealOp::intersect:
      out = x.mask() & y.mask();
      break;
  }
  return ExplicitOps::make(spec, out);
}

std::vector<ExplicitIdeal> enumerate_ideals_oracle(const RingSpec& spec) {
  const auto& t = element_tables(spec);
  std::vector<ElementMask> found;
  auto known = [&](const ElementMask& m) {
    return std::find(found.begin(), found.end(), m) != found.end();
  };
  for (std::size_t i = 0; i < t.size; ++i) {
    const ElementMask m = principal_ideal(spec, element_at(spec, i)).mask();
    if (!known(m)) found.push_back(m);
  }
  // Fixpoint under pairwise sums; newly found ideals are paired with all others.
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const ElementMask s = explicit_op(IdealOp::sum, ExplicitOps::make(spec, found[a]),
                                        ExplicitOps::make(spec, found[b]))
                                .mask();
      if (!known(s)) found.push_back(s);
    }
  }
  std::sort(found.begin(), found.end(), [&](const ElementMask& a, const ElementMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return mask_less(a, b, t.size);
  });
  std::vector<ExplicitIdeal> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(ExplicitOps::make(spec, m));
  return out;
}

}  // namespace idealmv
