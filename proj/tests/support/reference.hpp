#pragma once

// Published reference values for small rings, transcribed verbatim. Each
// table is given in its own labelling; position k of `labels` corresponds to
// carrier index k of the canonical ideal order.

#include <string>
#include <vector>

namespace reference {

struct ImplicationTable {
  std::string ring;
  std::vector<std::string> labels;  // carrier order
  std::vector<std::string> rows;    // row r: labels of labels[r] -> labels[c]
};

inline const std::vector<ImplicationTable>& implication_tables() {
  static const std::vector<ImplicationTable> t = {
      {"Z4", {"O", "R", "E"}, {"EEE", "REE", "ORE"}},
      {"Z2xZ2", {"O", "R", "B", "E"}, {"EEEE", "BEBE", "RREE", "ORBE"}},
      {"Z6", {"O", "R", "B", "E"}, {"EEEE", "BEBE", "RREE", "ORBE"}},
      {"Z8", {"O", "R", "B", "E"}, {"EEEE", "BEEE", "RBEE", "ORBE"}},
      {"Z2xZ4",
       {"O", "R", "B", "C", "D", "E"},
       {"EEEEEE", "DEEDEE", "CDECDE", "BBBEEE", "RBBDEE", "ORBCDE"}},
      {"Z2xZ2xZ2",
       {"O", "X", "Y", "Z", "T", "U", "V", "E"},
       {"EEEEEEEE", "VEVEVEVE", "UUEEUUEE", "TUVETUVE", "ZZZZEEEE", "YZYZVEVE", "XXZZUUEE",
        "OXYZTUVE"}},
  };
  return t;
}

struct CodeSets {
  std::string ring;
  std::vector<std::string> membership;  // C_A, in its own coordinate order
  std::vector<std::string> reduced;     // C_2
};

inline const std::vector<CodeSets>& code_sets() {
  static const std::vector<CodeSets> c = {
      {"Z4", {"0001", "0101", "1111"}, {"111", "011", "001"}},
      {"Z2xZ2", {"1000", "1100", "1010", "1111"}, {"1111", "0101", "0011", "0001"}},
      {"Z6", {"000001", "001001", "010101", "111111"}, {"1111", "0101", "0011", "0001"}},
      {"Z8", {"00000001", "00010001", "01010101", "11111111"}, {"1111", "0111", "0011", "0001"}},
      // The last reduced word is printed with eight digits in the source; the
      // six-digit word is the only one consistent with the other five.
      {"Z2xZ4",
       {"00000001", "00000101", "00001111", "00010001", "01010101", "11111111"},
       {"111111", "011011", "001001", "000111", "000011", "000001"}},
      // No separate reduced code is listed for this ring; it coincides with
      // its membership code.
      {"Z2xZ2xZ2",
       {"00000001", "00000011", "00000101", "00010001", "00001111", "00110011", "01010101",
        "11111111"},
       {"00000001", "00000011", "00000101", "00010001", "00001111", "00110011", "01010101",
        "11111111"}},
  };
  return c;
}

/// Addition tables of the two 6-element MV-algebras. Columns and rows are in
/// the order O R B C D E of the printed table; `chain_index` maps those
/// labels to positions of the chain O < B < D < R < C < E.
struct OplusTable {
  std::string ring;
  std::vector<std::string> header;  // row/column label order as printed
  std::vector<std::string> rows;
};

inline const OplusTable& chain6_oplus() {
  static const OplusTable t = {
      "Z32",
      {"O", "R", "B", "C", "D", "E"},
      {"ORBCDE", "RECEEE", "BCDERE", "CEEEEE", "DERECE", "EEEEEE"}};
  return t;
}

/// Label -> carrier index of the 6-element chain.
inline int chain6_index(char label) {
  switch (label) {
    case 'O': return 0;
    case 'B': return 1;
    case 'D': return 2;
    case 'R': return 3;
    case 'C': return 4;
    case 'E': return 5;
  }
  return -1;
}

inline const OplusTable& product6_oplus() {
  static const OplusTable t = {
      "Z2xZ4",
      {"O", "R", "B", "C", "D", "E"},
      {"ORBCDE", "RBBDEE", "BBBEEE", "CDECDE", "DEEDEE", "EEEEEE"}};
  return t;
}

/// MV-algebra and Boolean-algebra counts for n = 2..8 (0 printed as '-').
inline const std::vector<std::pair<int, int>>& counts() {
  static const std::vector<std::pair<int, int>> c = {{1, 1}, {1, 0}, {2, 1}, {1, 0},
                                                     {2, 0}, {1, 0}, {3, 1}};
  return c;
}

/// Generating rings per n = 2..8.
inline const std::vector<std::vector<std::string>>& generators() {
  static const std::vector<std::vector<std::string>> g = {
      {"Zp (Boole chain)"},
      {"Zp^2 (MV chain)"},
      {"Zp^3 (MV chain)", "Zp x Zp (Boole)"},
      {"Zp^4 (MV chain)"},
      {"Zp^5 (MV chain)", "Zp x Zp^2 (MV)"},
      {"Zp^6 (MV chain)"},
      {"Zp^7 (MV chain)", "Zp x Zp^3 (MV)", "Zp x Zp x Zp (Boole)"},
  };
  return g;
}

/// Lattice class of every ring with 2 <= |A| <= 10: true = Boolean.
struct RingClass {
  std::string ring;
  bool boolean;
};

inline const std::vector<RingClass>& ring_classes() {
  static const std::vector<RingClass> r = {
      {"Z2", true},  {"Z3", true},       {"Z4", false},    {"Z2xZ2", true},
      {"Z5", true},  {"Z6", true},       {"Z7", true},     {"Z8", false},
      {"Z4xZ2", false}, {"Z2xZ2xZ2", true}, {"Z9", false}, {"Z3xZ3", true},
      {"Z10", true},
  };
  return r;
}

}  // namespace reference
