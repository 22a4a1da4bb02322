#include "idealmv/ring.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "element_tables.hpp"
#include "idealmv/error.hpp"

namespace idealmv {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kMaxParsedModulus = std::uint64_t{1} << 32;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  if (a != 0 && b > limit / a) {
    throw BoundExceeded("ring cardinality exceeds 2^62");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) r = checked_mul(r, base, kMaxCardinality);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_integer(std::string_view token, std::string_view whole) {
  token = trim(token);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("ring spec '" + std::string(whole) + "': '" + std::string(token) +
                     "' is not an integer");
  }
  return value;
}

// Splits on 'x', 'X', '*' and the UTF-8 multiplication sign.
std::vector<std::string_view> split_factors(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t width = 0;
    if (text[i] == 'x' || text[i] == 'X' || text[i] == '*') {
      width = 1;
    } else if (text.compare(i, 2, "\xC3\x97") == 0) {
      width = 2;
    }
    if (width != 0) {
      out.push_back(text.substr(start, i - start));
      i += width;
      start = i;
    } else {
      ++i;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

void append_factorization(std::uint64_t n, std::vector<PrimePower>& out) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.push_back({p, a});
  }
  if (n > 1) out.push_back({n, 1});
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t PrimePower::modulus() const { return checked_pow(prime, exponent); }

struct RingSpec::Data {
  std::vector<PrimePower> factors;
  std::vector<std::uint64_t> moduli;
  std::uint64_t cardinality = 1;
  std::uint64_t ideal_count = 1;

  mutable std::once_flag tables_once;
  mutable std::unique_ptr<detail::ElementTables> tables;
};

RingSpec::RingSpec(std::vector<PrimePower> factors) {
  if (factors.empty()) throw ParseError("ring spec has no factors");
  auto data = std::make_shared<Data>();
  for (const auto& f : factors) {
    if (!is_prime(f.prime)) {
      throw ParseError("factor base " + std::to_string(f.prime) + " is not prime");
    }
    if (f.exponent < 1) throw ParseError("factor exponent must be at least 1");
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    const std::uint64_t k = f.modulus();
    data->moduli.push_back(k);
    data->cardinality = checked_mul(data->cardinality, k, kMaxCardinality);
    data->ideal_count *= f.exponent + 1;
  }
  data->factors = std::move(factors);
  data_ = std::move(data);
}

std::span<const PrimePower> RingSpec::factors() const { return data_->factors; }
std::size_t RingSpec::rank() const { return data_->factors.size(); }
std::uint64_t RingSpec::modulus(std::size_t factor) const { return data_->moduli.at(factor); }
std::uint64_t RingSpec::cardinality() const { return data_->cardinality; }
std::uint64_t RingSpec::ideal_count() const { return data_->ideal_count; }

bool RingSpec::is_reduced() const {
  return std::all_of(data_->factors.begin(), data_->factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

bool RingSpec::is_cyclic() const {
  const auto& f = data_->factors;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i].prime == f[i - 1].prime) return false;
  }
  return true;
}

std::string RingSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < data_->moduli.size(); ++i) {
    if (i != 0) out += " x ";
    out += "Z" + std::to_string(data_->moduli[i]);
  }
  return out;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  return a.data_ == b.data_ || a.data_->factors == b.data_->factors;
}

std::ostream& operator<<(std::ostream& os, const RingSpec& spec) { return os << spec.to_string(); }

const detail::ElementTables& element_tables(const RingSpec& spec) {
  const auto n = spec.cardinality();
  if (n > kMaxElements) {
    throw BoundExceeded("ring " + spec.to_string() + " has " + std::to_string(n) +
                        " elements; element-level computations are limited to " +
                        std::to_string(kMaxElements));
  }
  const RingSpec::Data& d = *spec.data_;
  std::call_once(d.tables_once, [&] {
    auto t = std::make_unique<detail::ElementTables>();
    const std::size_t size = n;
    t->size = size;
    t->add.resize(size * size);
    t->mul.resize(size * size);
    t->neg.resize(size);
    std::vector<std::vector<std::uint64_t>> digits(size);
    for (std::size_t i = 0; i < size; ++i) {
      const RingElement x = element_at(spec, i);
      digits[i].assign(x.residues().begin(), x.residues().end());
    }
    auto encode = [&](const std::vector<std::uint64_t>& r) {
      std::uint64_t idx = 0;
      for (std::size_t f = 0; f < r.size(); ++f) idx = idx * d.moduli[f] + r[f];
      return static_cast<std::uint8_t>(idx);
    };
    std::vector<std::uint64_t> s(d.moduli.size());
    std::vector<std::uint64_t> p(d.moduli.size());
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t f = 0; f < s.size(); ++f) s[f] = (d.moduli[f] - digits[i][f]) % d.moduli[f];
      t->neg[i] = encode(s);
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t f = 0; f < s.size(); ++f) {
          s[f] = (digits[i][f] + digits[j][f]) % d.moduli[f];
          p[f] = (digits[i][f] * digits[j][f]) % d.moduli[f];
        }
        t->add[i * size + j] = encode(s);
        t->mul[i * size + j] = encode(p);
      }
    }
    d.tables = std::move(t);
  });
  return *d.tables;
}

RingSpec parse_ring_spec(std::string_view text) {
  const std::string_view whole = text;
  if (trim(text).empty()) throw ParseError("empty ring spec");
  std::vector<PrimePower> factors;
  for (std::string_view token : split_factors(text)) {
    token = trim(token);
    if (token.empty()) {
      throw ParseError("ring spec '" + std::string(whole) + "' has an empty factor");
    }
    if (token.front() == 'Z' || token.front() == 'z') {
      token.remove_prefix(1);
      if (!token.empty() && token.front() == '_') token.remove_prefix(1);
      const std::uint64_t k = parse_integer(token, whole);
      if (k < 2) {
        throw ParseError("ring spec '" + std::string(whole) + "': modulus must be at least 2");
      }
      if (k > kMaxParsedModulus) {
        throw BoundExceeded("ring spec '" + std::string(whole) + "': modulus too large");
      }
      append_factorization(k, factors);
      continue;
    }
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      throw ParseError("ring spec '" + std::string(whole) + "': cannot read factor '" +
                       std::string(token) + "'");
    }
    const std::uint64_t p = parse_integer(token.substr(0, caret), whole);
    const std::uint64_t a = parse_integer(token.substr(caret + 1), whole);
    if (p < 2) {
      throw ParseError("ring spec '" + std::string(whole) + "': base must be at least 2");
    }
    if (p > kMaxParsedModulus) {
      throw BoundExceeded("ring spec '" + std::string(whole) + "': base too large");
    }
    if (!is_prime(p)) {
      throw ParseError("ring spec '" + std::string(whole) + "': " + std::to_string(p) +
                       " is not prime");
    }
    if (a < 1 || a > 62) {
      throw ParseError("ring spec '" + std::string(whole) + "': exponent out of range");
    }
    factors.push_back({p, static_cast<std::uint32_t>(a)});
  }
  return RingSpec(std::move(factors));
}

RingElement::RingElement(RingSpec spec, std::vector<std::uint64_t> residues)
    : spec_(std::move(spec)), residues_(std::move(residues)) {
  if (residues_.size() != spec_.rank()) {
    throw SpecMismatch("element has " + std::to_string(residues_.size()) +
                       " residues but the ring has " + std::to_string(spec_.rank()) + " factors");
  }
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] >= spec_.modulus(i)) {
      throw SpecMismatch("residue " + std::to_string(residues_[i]) + " out of range for Z" +
                         std::to_string(spec_.modulus(i)));
    }
  }
}

std::uint64_t RingElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < residues_.size(); ++i) idx = idx * spec_.modulus(i) + residues_[i];
  return idx;
}

std::string RingElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(residues_[i]);
  }
  return out + ")";
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.spec_ == b.spec_ && a.residues_ == b.residues_;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement zero_element(const RingSpec& spec) {
  return RingElement(spec, std::vector<std::uint64_t>(spec.rank(), 0));
}

RingElement one_element(const RingSpec& spec) {
  return RingElement(spec, std::vector<std::uint64_t>(spec.rank(), 1));
}

RingElement element_at(const RingSpec& spec, std::uint64_t index) {
  if (index >= spec.cardinality()) {
    throw std::out_of_range("element index " + std::to_string(index) + " out of range");
  }
  std::vector<std::uint64_t> r(spec.rank());
  for (std::size_t i = spec.rank(); i-- > 0;) {
    r[i] = index % spec.modulus(i);
    index /= spec.modulus(i);
  }
  return RingElement(spec, std::move(r));
}

RingElement element_from_integer(const RingSpec& spec, std::int64_t value) {
  std::vector<std::uint64_t> r(spec.rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto k = static_cast<std::int64_t>(spec.modulus(i));
    r[i] = static_cast<std::uint64_t>(((value % k) + k) % k);
  }
  return RingElement(spec, std::move(r));
}

std::vector<RingElement> enumerate_elements(const RingSpec& spec) {
  if (spec.cardinality() > kMaxElements) {
    throw BoundExceeded("cannot enumerate " + std::to_string(spec.cardinality()) +
                        " elements of " + spec.to_string());
  }
  std::vector<RingElement> out;
  out.reserve(spec.cardinality());
  for (std::uint64_t i = 0; i < spec.cardinality(); ++i) out.push_back(element_at(spec, i));
  return out;
}

RingElement ring_arith(ArithOp op, const RingElement& x, const RingElement& y) {
  if (!(x.spec() == y.spec())) {
    throw SpecMismatch("operands belong to " + x.spec().to_string() + " and " +
                       y.spec().to_string());
  }
  const RingSpec& spec = x.spec();
  std::vector<std::uint64_t> r(spec.rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t k = spec.modulus(i);
    const std::uint64_t a = x.residues()[i];
    const std::uint64_t b = y.residues()[i];
    switch (op) {
      case ArithOp::add:
        r[i] = (a + b) % k;
        break;
      case ArithOp::mul:
        r[i] = static_cast<std::uint64_t>((static_cast<u128>(a) * b) % k);
        break;
      case ArithOp::neg:
        r[i] = (k - a) % k;
        break;
    }
  }
  return RingElement(spec, std::move(r));
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  return ring_arith(ArithOp::add, x, y);
}
RingElement operator*(const RingElement& x, const RingElement& y) {
  return ring_arith(ArithOp::mul, x, y);
}
RingElement operator-(const RingElement& x) { return ring_arith(ArithOp::neg, x, x); }

}  // namespace idealmv
