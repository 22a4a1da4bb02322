#include "idealmv/suites.hpp"

#include <algorithm>
#include <array>

#include "idealmv/error.hpp"

namespace idealmv {

namespace {

using T = FiniteAlgebraTable;
using Predicate = bool (*)(const T&, Elem, Elem, Elem);

/// One universally quantified law over `arity` carrier variables x, y, z.
/// Templates use {x}, {y}, {z} for the witness labels.
struct Axiom {
  std::string_view id;
  int arity;
  Predicate holds;
  std::string_view lattice_text;
  std::string_view ideal_text;
};

bool iff(bool a, bool b) { return a == b; }
bool implies(bool a, bool b) { return !a || b; }

// clang-format off
constexpr Axiom kResiduated[] = {
  {"LR1.reflexive", 1, [](const T& t, Elem x, Elem, Elem) { return t.leq(x, x); },
   "{x} ≤ {x} fails", "{x} ⊆ {x} fails"},
  {"LR1.antisymmetric", 2,
   [](const T& t, Elem x, Elem y, Elem) { return implies(t.leq(x, y) && t.leq(y, x), x == y); },
   "{x} ≤ {y} and {y} ≤ {x} but {x} ≠ {y}", "{x} ⊆ {y} and {y} ⊆ {x} but {x} ≠ {y}"},
  {"LR1.transitive", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(x, y) && t.leq(y, z), t.leq(x, z)); },
   "{x} ≤ {y} ≤ {z} but {x} ≰ {z}", "{x} ⊆ {y} ⊆ {z} but {x} ⊄ {z}"},
  {"LR1.bottom", 1, [](const T& t, Elem x, Elem, Elem) { return t.leq(t.bottom(), x); },
   "0 ≰ {x}", "0 ⊄ {x}"},
  {"LR1.top", 1, [](const T& t, Elem x, Elem, Elem) { return t.leq(x, t.top()); },
   "{x} ≰ 1", "{x} ⊄ A"},
  {"LR1.meet_lower", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.leq(t.meet(x, y), x) && t.leq(t.meet(x, y), y); },
   "{x}∧{y} is not below both {x} and {y}", "{x}∩{y} is not inside both {x} and {y}"},
  {"LR1.meet_greatest", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(z, x) && t.leq(z, y), t.leq(z, t.meet(x, y))); },
   "{z} ≤ {x} and {z} ≤ {y} but {z} ≰ {x}∧{y}", "{z} ⊆ {x} and {z} ⊆ {y} but {z} ⊄ {x}∩{y}"},
  {"LR1.join_upper", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.leq(x, t.join(x, y)) && t.leq(y, t.join(x, y)); },
   "{x}∨{y} is not above both {x} and {y}", "{x}+{y} does not contain both {x} and {y}"},
  {"LR1.join_least", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(x, z) && t.leq(y, z), t.leq(t.join(x, y), z)); },
   "{x} ≤ {z} and {y} ≤ {z} but {x}∨{y} ≰ {z}", "{x} ⊆ {z} and {y} ⊆ {z} but {x}+{y} ⊄ {z}"},
  {"LR2.commutative", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.times(x, y) == t.times(y, x); },
   "{x}⊙{y} ≠ {y}⊙{x}", "{x}⊗{y} ≠ {y}⊗{x}"},
  {"LR2.associative", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return t.times(t.times(x, y), z) == t.times(x, t.times(y, z)); },
   "({x}⊙{y})⊙{z} ≠ {x}⊙({y}⊙{z})", "({x}⊗{y})⊗{z} ≠ {x}⊗({y}⊗{z})"},
  {"LR2.identity", 1,
   [](const T& t, Elem x, Elem, Elem) { return t.times(x, t.top()) == x && t.times(t.top(), x) == x; },
   "{x}⊙1 ≠ {x}", "{x}⊗A ≠ {x}"},
  {"LR2.monotone", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(x, y), t.leq(t.times(x, z), t.times(y, z))); },
   "{x} ≤ {y} but {x}⊙{z} ≰ {y}⊙{z}", "{x} ⊆ {y} but {x}⊗{z} ⊄ {y}⊗{z}"},
  {"LR3", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return iff(t.leq(z, t.imp(x, y)), t.leq(t.times(x, z), y)); },
   "{z} ≤ {x}→{y} and {x}⊙{z} ≤ {y} disagree", "{z} ⊆ ({y}:{x}) and {x}⊗{z} ⊆ {y} disagree"},
};

constexpr Axiom kBck[] = {
  {"BCK.bounded", 1,
   [](const T& t, Elem x, Elem, Elem) { return t.leq(t.bottom(), x) && t.leq(x, t.top()); },
   "0 ≤ {x} ≤ 1 fails", "0 ⊆ {x} ⊆ A fails"},
  {"BCK1", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return t.leq(t.imp(x, y), t.imp(t.imp(y, z), t.imp(x, z))); },
   "{x}→{y} ≰ ({y}→{z})→({x}→{z})", "({y}:{x}) ⊄ (({z}:{x}):({z}:{y}))"},
  {"BCK2", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.leq(x, t.imp(t.imp(x, y), y)); },
   "{x} ≰ ({x}→{y})→{y}", "{x} ⊄ ({y}:({y}:{x}))"},
  {"BCK3", 2,
   [](const T& t, Elem x, Elem y, Elem) { return iff(t.leq(x, y), t.imp(x, y) == t.top()); },
   "{x} ≤ {y} and {x}→{y} = 1 disagree", "{x} ⊆ {y} and ({y}:{x}) = A disagree"},
};

constexpr Axiom kChang[] = {
  {"C", 2, [](const T& t, Elem x, Elem y, Elem) { return t.join(x, y) == t.imp(t.imp(x, y), y); },
   "{x}∨{y} ≠ ({x}→{y})→{y}", "{x}+{y} ≠ ({y}:({y}:{x}))"},
};

constexpr Axiom kWajsberg[] = {
  {"W1", 1, [](const T& t, Elem x, Elem, Elem) { return t.imp(t.top(), x) == x; },
   "1→{x} ≠ {x}", "({x}:A) ≠ {x}"},
  {"W2", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return t.imp(t.imp(x, y), t.imp(t.imp(y, z), t.imp(x, z))) == t.top(); },
   "({x}→{y})→(({y}→{z})→({x}→{z})) ≠ 1", "((({z}:{x}):({z}:{y})):({y}:{x})) ≠ A"},
  {"W3", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.imp(t.imp(x, y), y) == t.imp(t.imp(y, x), x); },
   "({x}→{y})→{y} ≠ ({y}→{x})→{x}", "({y}:({y}:{x})) ≠ ({x}:({x}:{y}))"},
  {"W4", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.imp(t.imp(t.star(x), t.star(y)), t.imp(y, x)) == t.top(); },
   "({x}*→{y}*)→({y}→{x}) ≠ 1", "(({x}:{y}):(Ann({y}):Ann({x}))) ≠ A"},
};

constexpr Axiom kMv[] = {
  {"M.associative", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return t.oplus(t.oplus(x, y), z) == t.oplus(x, t.oplus(y, z)); },
   "({x}⊕{y})⊕{z} ≠ {x}⊕({y}⊕{z})", "({x}⊕{y})⊕{z} ≠ {x}⊕({y}⊕{z})"},
  {"M.commutative", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.oplus(x, y) == t.oplus(y, x); },
   "{x}⊕{y} ≠ {y}⊕{x}", "{x}⊕{y} ≠ {y}⊕{x}"},
  {"M.identity", 1, [](const T& t, Elem x, Elem, Elem) { return t.oplus(x, t.bottom()) == x; },
   "{x}⊕0 ≠ {x}", "{x}⊕0 ≠ {x}"},
  {"MV1", 1, [](const T& t, Elem x, Elem, Elem) { return t.star(t.star(x)) == x; },
   "{x}** ≠ {x}", "Ann(Ann({x})) ≠ {x}"},
  {"MV2", 1,
   [](const T& t, Elem x, Elem, Elem) { return t.oplus(x, t.star(t.bottom())) == t.star(t.bottom()); },
   "{x}⊕0* ≠ 0*", "{x}⊕Ann(0) ≠ Ann(0)"},
  {"MV3", 2,
   [](const T& t, Elem x, Elem y, Elem) {
     return t.oplus(t.star(t.oplus(t.star(x), y)), y) == t.oplus(t.star(t.oplus(t.star(y), x)), x);
   },
   "({x}*⊕{y})*⊕{y} ≠ ({y}*⊕{x})*⊕{x}", "Ann(Ann({x})⊕{y})⊕{y} ≠ Ann(Ann({y})⊕{x})⊕{x}"},
};

constexpr Axiom kDivisible[] = {
  {"div", 2, [](const T& t, Elem x, Elem y, Elem) { return t.times(x, t.imp(x, y)) == t.meet(x, y); },
   "{x}⊙({x}→{y}) ≠ {x}∧{y}", "{x}⊗({y}:{x}) ≠ {x}∩{y}"},
};

constexpr Axiom kDoubleNegation[] = {
  {"DN", 1, [](const T& t, Elem x, Elem, Elem) { return t.star(t.star(x)) == x; },
   "{x}** ≠ {x}", "Ann(Ann({x})) ≠ {x}"},
};

constexpr Axiom kHeyting[] = {
  {"idempotent", 1, [](const T& t, Elem x, Elem, Elem) { return t.times(x, x) == x; },
   "{x}⊙{x} ≠ {x}", "{x}⊗{x} ≠ {x}"},
};

constexpr Axiom kBoolean[] = {
  {"complement", 1, [](const T& t, Elem x, Elem, Elem) { return t.join(x, t.star(x)) == t.top(); },
   "{x}∨{x}* ≠ 1", "{x}+Ann({x}) ≠ A"},
};

constexpr Axiom kProp35[] = {
  {"prop35.i", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.imp(t.imp(x, y), y) == t.imp(t.imp(y, x), x); },
   "({x}→{y})→{y} ≠ ({y}→{x})→{x}", "({y}:({y}:{x})) ≠ ({x}:({x}:{y}))"},
  {"prop35.ii", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.join(x, y) == t.imp(t.imp(x, y), y); },
   "{x}∨{y} ≠ ({x}→{y})→{y}", "{x}+{y} ≠ ({y}:({y}:{x}))"},
  {"prop35.iii", 2,
   [](const T& t, Elem x, Elem y, Elem) {
     return t.star(t.star(x)) == x && t.meet(x, y) == t.times(x, t.imp(x, y)) &&
            t.join(t.imp(x, y), t.imp(y, x)) == t.top();
   },
   "{x}** ≠ {x}, {x}∧{y} ≠ {x}⊙({x}→{y}) or ({x}→{y})∨({y}→{x}) ≠ 1",
   "Ann(Ann({x})) ≠ {x}, {x}∩{y} ≠ {x}⊗({y}:{x}) or ({y}:{x})+({x}:{y}) ≠ A"},
  {"prop35.iv", 2,
   [](const T& t, Elem x, Elem y, Elem) { return t.imp(t.imp(t.imp(x, y), y), x) == t.imp(y, x); },
   "(({x}→{y})→{y})→{x} ≠ {y}→{x}", "({x}:({y}:({y}:{x}))) ≠ ({x}:{y})"},
  {"prop35.v", 2,
   [](const T& t, Elem x, Elem y, Elem) { return implies(t.leq(x, y), t.leq(t.imp(t.imp(y, x), x), y)); },
   "{x} ≤ {y} but ({y}→{x})→{x} ≰ {y}", "{x} ⊆ {y} but ({x}:({x}:{y})) ⊄ {y}"},
};

constexpr Axiom kProp3181[] = {
  {"prop3181.i", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(t.times(x, y), z) && t.leq(x, y), t.leq(x, z)); },
   "{x}⊙{y} ≤ {z} and {x} ≤ {y} but {x} ≰ {z}", "{x}⊗{y} ⊆ {z} and {x} ⊆ {y} but {x} ⊄ {z}"},
  {"prop3181.ii", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(z, x) && t.leq(z, t.imp(x, y)), t.leq(z, y)); },
   "D_{z} is not a deductive system: {x} and {x}→{y} lie in D_{z} but {y} does not",
   "D_{z} is not a deductive system: {z} ⊆ {x} and {z} ⊆ ({y}:{x}) but {z} ⊄ {y}"},
  {"prop3181.iii", 2,
   [](const T& t, Elem x, Elem y, Elem) { return implies(t.leq(t.times(x, x), y), t.leq(x, y)); },
   "{x}⊙{x} ≤ {y} but {x} ≰ {y}", "{x}⊗{x} ⊆ {y} but {x} ⊄ {y}"},
  {"prop3181.iv", 3,
   [](const T& t, Elem x, Elem y, Elem z) { return implies(t.leq(t.times(x, y), z), t.leq(t.times(x, t.imp(x, y)), z)); },
   "{x}⊙{y} ≤ {z} but {x}⊙({x}→{y}) ≰ {z}", "{x}⊗{y} ⊆ {z} but {x}⊗({y}:{x}) ⊄ {z}"},
  {"prop3181.v", 1, [](const T& t, Elem x, Elem, Elem) { return t.times(x, x) == x; },
   "{x}⊙{x} ≠ {x}", "{x}⊗{x} ≠ {x}"},
};

constexpr Axiom kProp333[] = {
  {"prop333.i", 1,
   [](const T& t, Elem x, Elem, Elem) { return t.times(x, x) == x && t.star(t.star(x)) == x; },
   "{x}⊙{x} ≠ {x} or {x}** ≠ {x}", "{x}⊗{x} ≠ {x} or Ann(Ann({x})) ≠ {x}"},
  {"prop333.ii", 1,
   [](const T& t, Elem x, Elem, Elem) {
     return t.times(x, x) == x && implies(t.star(x) == t.bottom(), x == t.top());
   },
   "{x}⊙{x} ≠ {x}, or {x}* = 0 with {x} ≠ 1", "{x}⊗{x} ≠ {x}, or Ann({x}) = 0 with {x} ≠ A"},
  {"prop333.iii", 1,
   [](const T& t, Elem x, Elem, Elem) { return t.join(x, t.star(x)) == t.top(); },
   "{x}∨{x}* ≠ 1", "{x}+Ann({x}) ≠ A"},
};
// clang-format on

struct SuiteEntry {
  Suite suite;
  std::string_view name;
  std::span<const Axiom> axioms;
  bool agreement;
};

const std::array<SuiteEntry, 12> kSuites = {{
    {Suite::residuated, "residuated", kResiduated, false},
    {Suite::bck, "bck", kBck, false},
    {Suite::chang, "chang", kChang, false},
    {Suite::wajsberg, "wajsberg", kWajsberg, false},
    {Suite::mv, "mv", kMv, false},
    {Suite::divisible, "divisible", kDivisible, false},
    {Suite::double_negation, "double_negation", kDoubleNegation, false},
    {Suite::heyting, "heyting", kHeyting, false},
    {Suite::boolean, "boolean", kBoolean, false},
    {Suite::prop35, "prop35", kProp35, true},
    {Suite::prop3181, "prop3181", kProp3181, true},
    {Suite::prop333, "prop333", kProp333, true},
}};

constexpr Suite kAll[] = {Suite::residuated, Suite::bck,      Suite::chang,    Suite::wajsberg,
                          Suite::mv,         Suite::divisible, Suite::double_negation,
                          Suite::heyting,    Suite::boolean,  Suite::prop35,   Suite::prop3181,
                          Suite::prop333};
constexpr Suite kUniversal[] = {Suite::residuated, Suite::bck,       Suite::chang,
                                Suite::wajsberg,   Suite::mv,        Suite::divisible,
                                Suite::double_negation, Suite::prop35, Suite::prop3181,
                                Suite::prop333};

const SuiteEntry& entry(Suite s) {
  for (const auto& e : kSuites) {
    if (e.suite == s) return e;
  }
  throw std::invalid_argument("unknown suite");
}

const Axiom* find_axiom(std::string_view id) {
  for (const auto& e : kSuites) {
    for (const auto& a : e.axioms) {
      if (a.id == id) return &a;
    }
  }
  return nullptr;
}

/// First tuple (lexicographic over carrier indices) falsifying the axiom.
std::optional<Witness> first_failure(const T& t, const Axiom& a) {
  const auto m = static_cast<std::uint32_t>(t.size());
  const std::uint32_t ny = a.arity >= 2 ? m : 1;
  const std::uint32_t nz = a.arity >= 3 ? m : 1;
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < ny; ++y) {
      for (std::uint32_t z = 0; z < nz; ++z) {
        if (!a.holds(t, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z))) {
          std::vector<Elem> elems{static_cast<Elem>(x), static_cast<Elem>(y),
                                  static_cast<Elem>(z)};
          elems.resize(static_cast<std::size_t>(a.arity));
          return Witness{std::string(a.id), std::move(elems)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::span<const Suite> all_suites() { return kAll; }
std::span<const Suite> universal_suites() { return kUniversal; }

std::string_view suite_name(Suite s) { return entry(s).name; }

Suite parse_suite(std::string_view name) {
  for (const auto& e : kSuites) {
    if (e.name == name) return e.suite;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

SuiteReport check_suite(const FiniteAlgebraTable& t, Suite suite) {
  const SuiteEntry& e = entry(suite);
  SuiteReport report;
  report.suite = suite;
  if (!e.agreement) {
    for (const Axiom& a : e.axioms) {
      if (report.witnesses.size() >= kMaxWitnesses) break;
      if (auto w = first_failure(t, a)) report.witnesses.push_back(std::move(*w));
    }
    report.pass = report.witnesses.empty();
    return report;
  }
  for (const Axiom& a : e.axioms) {
    ConditionResult c;
    c.id = std::string(a.id);
    c.counterexample = first_failure(t, a);
    c.holds = !c.counterexample.has_value();
    report.conditions.push_back(std::move(c));
  }
  const bool first = report.conditions.front().holds;
  const bool agree = std::all_of(report.conditions.begin(), report.conditions.end(),
                                 [&](const ConditionResult& c) { return c.holds == first; });
  if (!agree) {
    for (const auto& c : report.conditions) {
      if (c.counterexample && report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back(*c.counterexample);
      }
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

std::string_view lattice_class_name(LatticeClass c) {
  switch (c) {
    case LatticeClass::boolean: return "Boolean";
    case LatticeClass::mv_not_boolean: return "MV_not_Boolean";
    case LatticeClass::heyting_not_mv: return "Heyting_not_MV";
    case LatticeClass::other: return "other";
  }
  return "other";
}

LatticeClass classify_lattice(const FiniteAlgebraTable& t) {
  if (check_suite(t, Suite::boolean).pass) return LatticeClass::boolean;
  const bool chang = check_suite(t, Suite::chang).pass;
  if (chang) return LatticeClass::mv_not_boolean;
  if (check_suite(t, Suite::heyting).pass) return LatticeClass::heyting_not_mv;
  return LatticeClass::other;
}

Elem derived_op(const FiniteAlgebraTable& t, DerivedOp kind, std::size_t x, std::size_t y) {
  t.require_index(x);
  const auto a = static_cast<Elem>(x);
  if (kind == DerivedOp::star) return t.star(a);
  t.require_index(y);
  const auto b = static_cast<Elem>(y);
  return kind == DerivedOp::oplus ? t.oplus(a, b) : t.imp(a, b);
}

std::string describe_witness(const FiniteAlgebraTable& t, const Witness& w) {
  std::string names;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (i != 0) names += ",";
    names += t.label(w.elements[i]);
  }
  const Axiom* a = find_axiom(w.axiom);
  if (a == nullptr) return names + ": " + w.axiom + " fails";
  const std::string_view text = t.notation() == Notation::ideal ? a->ideal_text : a->lattice_text;
  std::string out;
  static constexpr std::string_view kVars[] = {"{x}", "{y}", "{z}"};
  for (std::size_t i = 0; i < text.size();) {
    bool replaced = false;
    for (std::size_t v = 0; v < 3 && v < w.elements.size(); ++v) {
      if (text.compare(i, kVars[v].size(), kVars[v]) == 0) {
        out += t.label(w.elements[v]);
        i += kVars[v].size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += text[i++];
  }
  return names + ": " + out;
}

}  // namespace idealmv
