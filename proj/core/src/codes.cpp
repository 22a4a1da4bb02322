#include "idealmv/codes.hpp"

#include <algorithm>
#include <bit>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "idealmv/error.hpp"
#include "idealmv/explicit_ideal.hpp"
#include "idealmv/ideal.hpp"
#include "idealmv/suites.hpp"

namespace idealmv {

BitVector::BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may only contain 0 and 1");
    }
  }
  return v;
}

bool BitVector::test(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

BitVector BitVector::operator&(const BitVector& other) const {
  if (length_ != other.length_) throw std::invalid_argument("bit vectors differ in length");
  BitVector out(length_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
  return out;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.length_ != b.length_) throw std::invalid_argument("bit vectors differ in length");
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    d += static_cast<std::size_t>(std::popcount(a.words_[k] ^ b.words_[k]));
  }
  return d;
}

BlockCode::BlockCode(std::size_t length, std::vector<Codeword> words, std::string coordinate_order)
    : length_(length), words_(std::move(words)), coordinate_order_(std::move(coordinate_order)) {
  std::set<std::string> seen;
  for (const auto& w : words_) {
    if (w.bits.length() != length_) {
      throw std::invalid_argument("codeword '" + w.label + "' has length " +
                                  std::to_string(w.bits.length()) + ", expected " +
                                  std::to_string(length_));
    }
    if (!seen.insert(w.bits.to_string()).second) {
      throw std::invalid_argument("codeword " + w.bits.to_string() + " appears twice");
    }
  }
}

BlockCode membership_code(const RingSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.cardinality());
  if (n > kMaxElements) {
    throw BoundExceeded("membership code of " + spec.to_string() + " needs " + std::to_string(n) +
                        " coordinates; limit is " + std::to_string(kMaxElements));
  }
  const auto ideals = enumerate_ideals(spec);
  const auto labels = canonical_labels(ideals.size());
  std::vector<Codeword> words;
  words.reserve(ideals.size());
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const ExplicitIdeal set = materialize(ideals[k]);
    BitVector bits(n);
    for (std::size_t i = 0; i < n; ++i) bits.set(i, set.mask().test(i));
    words.push_back({std::move(bits), labels[k]});
  }
  return BlockCode(n, std::move(words),
                   "elements of " + spec.to_string() + " in ascending mixed-radix order");
}

BlockCode reduced_code(const FiniteAlgebraTable& t) {
  const SuiteReport bck = check_suite(t, Suite::bck);
  if (!bck.pass) {
    throw PreconditionFailed("reduced code needs a BCK table; " +
                             describe_witness(t, bck.witnesses.front()));
  }
  const std::size_t m = t.size();
  std::vector<Codeword> words;
  words.reserve(m);
  for (std::size_t x = 0; x < m; ++x) {
    BitVector bits(m);
    for (std::size_t y = 0; y < m; ++y) {
      bits.set(y, t.imp(static_cast<Elem>(x), static_cast<Elem>(y)) == t.top());
    }
    words.push_back({std::move(bits), t.label(static_cast<Elem>(x))});
  }
  std::string order = "carrier";
  for (std::size_t x = 0; x < m; ++x) order += (x == 0 ? " " : ",") + t.label(static_cast<Elem>(x));
  return BlockCode(m, std::move(words), order);
}

std::vector<std::size_t> cut_subset(const FiniteAlgebraTable& t, Elem w, std::span<const Elem> f) {
  t.require_index(w);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    t.require_index(f[x]);
    if (t.imp(w, f[x]) == t.top()) out.push_back(x);
  }
  return out;
}

std::size_t min_distance(const BlockCode& code) {
  const auto& w = code.words();
  if (w.size() < 2) throw PreconditionFailed("minimum distance needs at least two codewords");
  std::size_t best = code.length();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      best = std::min(best, hamming_distance(w[i].bits, w[j].bits));
    }
  }
  return best;
}

std::string_view code_class_name(CodeClass c) {
  switch (c) {
    case CodeClass::none: return "none";
    case CodeClass::detecting: return "detecting";
    case CodeClass::correcting: return "correcting";
  }
  return "none";
}

CodeClass classify_code(const BlockCode& code) {
  const std::size_t d = min_distance(code);
  if (d >= 3) return CodeClass::correcting;
  if (d >= 2) return CodeClass::detecting;
  return CodeClass::none;
}

std::string render_code_text(const BlockCode& code) {
  std::ostringstream os;
  os << "# coordinates: " << code.coordinate_order() << '\n';
  os << "# length " << code.length() << ", words " << code.size() << '\n';
  for (const auto& w : code.words()) os << w.bits.to_string() << '\n';
  return os.str();
}

std::string render_code_csv(const BlockCode& code) {
  std::ostringstream os;
  os << "label,bits\n";
  for (const auto& w : code.words()) os << w.label << ',' << w.bits.to_string() << '\n';
  return os.str();
}

std::string render_code_json(const BlockCode& code) {
  nlohmann::ordered_json j;
  j["length"] = code.length();
  auto words = nlohmann::ordered_json::array();
  for (const auto& w : code.words()) {
    words.push_back({{"label", w.label}, {"bits", w.bits.to_string()}});
  }
  j["words"] = std::move(words);
  j["coordinate_order"] = code.coordinate_order();
  return j.dump();
}

}  // namespace idealmv
