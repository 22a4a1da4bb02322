#include "idealmv/ideal.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "element_tables.hpp"
#include "idealmv/error.hpp"

namespace idealmv {

namespace {

void require_same_ring(const IdealIndex& a, const IdealIndex& b) {
  if (!(a.spec() == b.spec())) {
    throw SpecMismatch("ideals belong to " + a.spec().to_string() + " and " +
                       b.spec().to_string());
  }
}

template <class F>
IdealIndex componentwise(const IdealIndex& e, const IdealIndex& f, F&& combine) {
  require_same_ring(e, f);
  const auto factors = e.spec().factors();
  std::vector<std::uint32_t> out(factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = combine(e.exponents()[i], f.exponents()[i], factors[i].exponent);
  }
  return IdealIndex(e.spec(), std::move(out));
}

std::uint32_t valuation(std::uint64_t residue, const PrimePower& f) {
  if (residue == 0) return f.exponent;
  std::uint32_t v = 0;
  while (residue % f.prime == 0) {
    residue /= f.prime;
    ++v;
  }
  return v;
}

}  // namespace

IdealIndex::IdealIndex(RingSpec spec, std::vector<std::uint32_t> exponents)
    : spec_(std::move(spec)), exponents_(std::move(exponents)) {
  const auto factors = spec_.factors();
  if (exponents_.size() != factors.size()) {
    throw SpecMismatch("exponent vector has " + std::to_string(exponents_.size()) +
                       " entries but the ring has " + std::to_string(factors.size()) +
                       " factors");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (exponents_[i] > factors[i].exponent) {
      throw std::out_of_range("exponent " + std::to_string(exponents_[i]) + " exceeds " +
                              std::to_string(factors[i].exponent) + " in factor " +
                              std::to_string(i));
    }
  }
}

IdealIndex IdealIndex::zero(const RingSpec& spec) {
  std::vector<std::uint32_t> e;
  for (const auto& f : spec.factors()) e.push_back(f.exponent);
  return IdealIndex(spec, std::move(e));
}

IdealIndex IdealIndex::whole(const RingSpec& spec) {
  return IdealIndex(spec, std::vector<std::uint32_t>(spec.rank(), 0));
}

std::uint64_t IdealIndex::cardinality() const {
  std::uint64_t n = 1;
  const auto factors = spec_.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::uint32_t k = exponents_[i]; k < factors[i].exponent; ++k) n *= factors[i].prime;
  }
  return n;
}

bool IdealIndex::is_zero() const {
  const auto factors = spec_.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (exponents_[i] != factors[i].exponent) return false;
  }
  return true;
}

bool IdealIndex::is_whole() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t IdealIndex::position() const {
  std::uint64_t pos = 0;
  const auto factors = spec_.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    pos = pos * (factors[i].exponent + 1) + (factors[i].exponent - exponents_[i]);
  }
  return pos;
}

std::string IdealIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out + ")";
}

bool operator==(const IdealIndex& a, const IdealIndex& b) {
  return a.spec_ == b.spec_ && a.exponents_ == b.exponents_;
}

bool is_subideal(const IdealIndex& a, const IdealIndex& b) {
  require_same_ring(a, b);
  for (std::size_t i = 0; i < a.exponents().size(); ++i) {
    if (a.exponents()[i] < b.exponents()[i]) return false;
  }
  return true;
}

IdealIndex sum_ideals(const IdealIndex& e, const IdealIndex& f) {
  return componentwise(e, f, [](std::uint32_t a, std::uint32_t b, std::uint32_t) {
    return std::min(a, b);
  });
}

IdealIndex product_ideals(const IdealIndex& e, const IdealIndex& f) {
  return componentwise(e, f, [](std::uint32_t a, std::uint32_t b, std::uint32_t alpha) {
    return std::min(a + b, alpha);
  });
}

IdealIndex intersect_ideals(const IdealIndex& e, const IdealIndex& f) {
  return componentwise(e, f, [](std::uint32_t a, std::uint32_t b, std::uint32_t) {
    return std::max(a, b);
  });
}

IdealIndex quotient_ideals(const IdealIndex& e, const IdealIndex& f) {
  return componentwise(e, f, [](std::uint32_t a, std::uint32_t b, std::uint32_t) {
    return a > b ? a - b : 0u;
  });
}

IdealIndex annihilator(const IdealIndex& e) {
  return componentwise(e, e, [](std::uint32_t a, std::uint32_t, std::uint32_t alpha) {
    return alpha - a;
  });
}

IdealIndex ideal_power(const IdealIndex& e, std::uint32_t n) {
  IdealIndex out = IdealIndex::whole(e.spec());
  for (std::uint32_t k = 0; k < n; ++k) {
    out = product_ideals(out, e);
    if (out.is_zero()) break;
  }
  return out;
}

bool is_coprime(const IdealIndex& e, const IdealIndex& f) { return sum_ideals(e, f).is_whole(); }

IdealIndex fast_op(IdealOp op, const IdealIndex& e, const IdealIndex& f) {
  switch (op) {
    case IdealOp::sum: return sum_ideals(e, f);
    case IdealOp::product: return product_ideals(e, f);
    case IdealOp::quotient: return quotient_ideals(e, f);
    case IdealOp::ann: return annihilator(e);
    case IdealOp::intersect: return intersect_ideals(e, f);
  }
  throw std::invalid_argument("unknown ideal operation");
}

bool canonical_before(const IdealIndex& a, const IdealIndex& b) {
  require_same_ring(a, b);
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

IdealIndex ideal_at(const RingSpec& spec, std::uint64_t position) {
  if (position >= spec.ideal_count()) {
    throw std::out_of_range("ideal position " + std::to_string(position) + " out of range");
  }
  const auto factors = spec.factors();
  std::vector<std::uint32_t> e(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    const std::uint64_t radix = factors[i].exponent + 1;
    e[i] = factors[i].exponent - static_cast<std::uint32_t>(position % radix);
    position /= radix;
  }
  return IdealIndex(spec, std::move(e));
}

std::vector<IdealIndex> enumerate_ideals(const RingSpec& spec) {
  const std::uint64_t n = spec.ideal_count();
  if (n > kMaxIdealCount) {
    throw BoundExceeded(spec.to_string() + " has " + std::to_string(n) + " ideals; limit is " +
                        std::to_string(kMaxIdealCount));
  }
  std::vector<IdealIndex> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(ideal_at(spec, k));
  return out;
}

ExplicitIdeal materialize(const IdealIndex& ideal) {
  const RingSpec& spec = ideal.spec();
  const auto& t = element_tables(spec);
  const auto factors = spec.factors();
  std::vector<std::uint64_t> divisors;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    divisors.push_back(PrimePower{factors[i].prime, ideal.exponents()[i]}.modulus());
  }
  ElementMask mask;
  for (std::size_t k = 0; k < t.size; ++k) {
    const RingElement x = element_at(spec, k);
    bool inside = true;
    for (std::size_t i = 0; i < factors.size() && inside; ++i) {
      inside = x.residues()[i] % divisors[i] == 0;
    }
    if (inside) mask.set(k);
  }
  return ExplicitIdeal(spec, mask);
}

IdealIndex locate(const ExplicitIdeal& ideal) {
  const RingSpec& spec = ideal.spec();
  const auto factors = spec.factors();
  std::vector<std::uint32_t> e;
  for (const auto& f : factors) e.push_back(f.exponent);
  for (const RingElement& x : ideal.members()) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      e[i] = std::min(e[i], valuation(x.residues()[i], factors[i]));
    }
  }
  return IdealIndex(spec, std::move(e));
}

std::string ideal_to_json(const IdealIndex& ideal, bool with_members) {
  nlohmann::ordered_json j;
  j["exponents"] = std::vector<std::uint32_t>(ideal.exponents().begin(), ideal.exponents().end());
  j["cardinality"] = ideal.cardinality();
  if (with_members) {
    auto members = nlohmann::ordered_json::array();
    for (const RingElement& x : materialize(ideal).members()) {
      members.push_back(std::vector<std::uint64_t>(x.residues().begin(), x.residues().end()));
    }
    j["members"] = std::move(members);
  }
  return j.dump();
}

OracleReport oracle_cross_check(const RingSpec& spec, const FastIdealOp& fast) {
  OracleReport report;
  const auto ideals = enumerate_ideals(spec);
  const auto oracle = enumerate_ideals_oracle(spec);

  ++report.checks;
  if (ideals.size() != oracle.size() || ideals.size() != spec.ideal_count()) {
    std::ostringstream os;
    os << spec << ": enumerate_ideals gives " << ideals.size() << " ideals, oracle gives "
       << oracle.size() << ", prod(alpha+1) = " << spec.ideal_count();
    report.disagreements.push_back(os.str());
  }

  std::vector<ExplicitIdeal> sets;
  sets.reserve(ideals.size());
  for (const auto& I : ideals) sets.push_back(materialize(I));
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    ++report.checks;
    if (sets[k].cardinality() != ideals[k].cardinality()) {
      report.disagreements.push_back(spec.to_string() + ": ideal " + ideals[k].to_string() +
                                     " has " + std::to_string(sets[k].cardinality()) +
                                     " members, expected " +
                                     std::to_string(ideals[k].cardinality()));
    }
    ++report.checks;
    if (std::find(oracle.begin(), oracle.end(), sets[k]) == oracle.end()) {
      report.disagreements.push_back(spec.to_string() + ": ideal " + ideals[k].to_string() +
                                     " is not found by the oracle enumeration");
    }
  }

  constexpr IdealOp kOps[] = {IdealOp::sum, IdealOp::product, IdealOp::quotient, IdealOp::ann,
                              IdealOp::intersect};
  for (IdealOp op : kOps) {
    for (std::size_t a = 0; a < ideals.size(); ++a) {
      const std::size_t b_end = op == IdealOp::ann ? 1 : ideals.size();
      for (std::size_t b = 0; b < b_end; ++b) {
        ++report.checks;
        const IdealIndex got = fast(op, ideals[a], ideals[b]);
        const ExplicitIdeal expect = explicit_op(op, sets[a], sets[b]);
        const ExplicitIdeal got_set = materialize(got);
        if (!(got_set == expect)) {
          std::ostringstream os;
          os << spec << ": " << ideal_op_name(op) << ideals[a].to_string();
          if (op != IdealOp::ann) os << "," << ideals[b].to_string();
          os << ": fast " << got.to_string() << " = " << got_set.to_string() << ", oracle "
             << locate(expect).to_string() << " = " << expect.to_string();
          report.disagreements.push_back(os.str());
        }
      }
    }
  }
  return report;
}

}  // namespace idealmv
