#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealmv/algebra_table.hpp"
#include "idealmv/ring.hpp"

namespace idealmv {

/// Fixed-length bit vector packed into 64-bit words. Bit 0 is printed first
/// (leftmost).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);
  /// Parses a string of '0' and '1'.
  static BitVector from_string(std::string_view bits);

  std::size_t length() const { return length_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  std::size_t count() const;
  std::string to_string() const;

  BitVector operator&(const BitVector& other) const;
  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  friend bool operator<(const BitVector& a, const BitVector& b) {
    return a.to_string() < b.to_string();
  }

  friend std::size_t hamming_distance(const BitVector& a, const BitVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

struct Codeword {
  BitVector bits;
  std::string label;
};

/// Equal-length, pairwise distinct codewords plus a note on what each
/// coordinate stands for.
class BlockCode {
 public:
  BlockCode(std::size_t length, std::vector<Codeword> words, std::string coordinate_order);

  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Codeword>& words() const { return words_; }
  const std::string& coordinate_order() const { return coordinate_order_; }

 private:
  std::size_t length_;
  std::vector<Codeword> words_;
  std::string coordinate_order_;
};

/// One word per ideal (canonical order); bit i is set iff the i-th element in
/// ascending mixed-radix order lies in the ideal. Bounded by kMaxElements.
BlockCode membership_code(const RingSpec& spec);

/// One word per carrier element I; bit j is set iff I -> J_j = top. Requires
/// the bck suite to pass (PreconditionFailed otherwise).
BlockCode reduced_code(const FiniteAlgebraTable& t);

/// {x in S : w -> f(x) = top} for S = {0, ..., f.size()-1}.
std::vector<std::size_t> cut_subset(const FiniteAlgebraTable& t, Elem w, std::span<const Elem> f);

/// Minimum Hamming distance over unordered word pairs. Requires >= 2 words.
std::size_t min_distance(const BlockCode& code);

enum class CodeClass { none, detecting, correcting };

std::string_view code_class_name(CodeClass c);

/// d >= 3 correcting, d >= 2 detecting, none otherwise.
CodeClass classify_code(const BlockCode& code);

/// "# ..." header lines, then one word per line.
std::string render_code_text(const BlockCode& code);
/// "label,bits" rows after a header row.
std::string render_code_csv(const BlockCode& code);
/// {"length":n,"words":[{"label":..,"bits":".."}],"coordinate_order":..}
std::string render_code_json(const BlockCode& code);

}  // namespace idealmv
