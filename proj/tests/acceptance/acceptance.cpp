// Acceptance checks AC1-AC9. Prints one PASS/FAIL line per criterion with its
// runtime and exits non-zero if any criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "idealmv/algebra_table.hpp"
#include "idealmv/codes.hpp"
#include "idealmv/error.hpp"
#include "idealmv/ideal.hpp"
#include "idealmv/mv_classify.hpp"
#include "idealmv/suites.hpp"
#include "../support/identities.hpp"
#include "../support/reference.hpp"

using namespace idealmv;

namespace {

/// Collects failure notes for one criterion; keeps the first few.
struct Check {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string cli_output(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::set<std::string> word_set(const BlockCode& c) {
  std::set<std::string> out;
  for (const auto& w : c.words()) out.insert(w.bits.to_string());
  return out;
}

bool equal_up_to_permutation(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.size() != b.size() || a.empty()) return a == b;
  const std::size_t n = a.begin()->size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::set<std::string> moved;
    for (const auto& w : a) {
      std::string v(n, '0');
      for (std::size_t i = 0; i < n; ++i) v[p[i]] = w[i];
      moved.insert(v);
    }
    if (moved == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every spec whose primes lie in {2, 3, 5} and whose ideal count is at most
/// `max_ideals`; factors are listed in canonical (nondecreasing) order.
/// Specs whose cardinality would exceed the 2^62 guard (e.g. 5^35) cannot be
/// constructed and are left out.
std::vector<RingSpec> small_prime_corpus(std::uint64_t max_ideals) {
  std::vector<PrimePower> atoms;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t a = 1; a + 1 <= max_ideals; ++a) atoms.push_back({p, a});
  }
  std::vector<RingSpec> out;
  std::vector<PrimePower> cur;
  std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t from, std::uint64_t n) {
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const std::uint64_t next = n * (atoms[i].exponent + 1);
      if (next > max_ideals) continue;
      cur.push_back(atoms[i]);
      try {
        out.emplace_back(cur);
        grow(i, next);
      } catch (const BoundExceeded&) {
        // too large to represent; so is every extension of it
      }
      cur.pop_back();
    }
  };
  grow(0, 1);
  return out;
}

std::vector<RingSpec> rings_up_to(std::uint64_t max_order) {
  std::vector<RingSpec> out;
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    for (auto& s : rings_of_order(n)) out.push_back(std::move(s));
  }
  return out;
}

bool all_exponents_one(const RingSpec& s) {
  return std::all_of(s.factors().begin(), s.factors().end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint64_t least_prime(const RingSpec& s) {
  std::uint64_t p = s.factors().front().prime;
  for (const auto& f : s.factors()) p = std::min(p, f.prime);
  return p;
}

// AC1: `table` output equals the reference implication tables under the
// positional label bijection.
Check ac1() {
  Check c;
  for (const auto& ref : reference::implication_tables()) {
    int code = 0;
    const std::string text = cli_output({"table", ref.ring, "--op", "imp"}, code);
    c.expect(code == 0, ref.ring + ": exit " + std::to_string(code));
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    const auto header = split_ws(line);  // "->", "|", labels...
    c.expect(header.size() == ref.labels.size() + 2, ref.ring + ": header width");
    if (header.size() != ref.labels.size() + 2) continue;
    std::map<std::string, std::string> to_ref;
    for (std::size_t k = 0; k < ref.labels.size(); ++k) to_ref[header[k + 2]] = ref.labels[k];
    std::getline(in, line);  // rule
    for (std::size_t r = 0; r < ref.labels.size(); ++r) {
      std::getline(in, line);
      const auto cells = split_ws(line);
      bool row_ok = cells.size() == ref.labels.size() + 2 && to_ref[cells[0]] == ref.labels[r];
      for (std::size_t k = 0; row_ok && k < ref.labels.size(); ++k) {
        row_ok = to_ref[cells[k + 2]] == std::string(1, ref.rows[r][k]);
      }
      c.expect(row_ok, ref.ring + ": row " + ref.labels[r] + " is '" + line + "'");
    }
    c.expect(!std::getline(in, line), ref.ring + ": trailing output");
  }
  return c;
}

// AC2: reduced codes equal the reference sets; membership codes equal them up
// to one coordinate permutation per ring.
Check ac2() {
  Check c;
  for (const auto& ref : reference::code_sets()) {
    const RingSpec s = parse_ring_spec(ref.ring);
    const auto reduced = word_set(reduced_code(from_ideal_lattice(s)));
    c.expect(reduced == std::set<std::string>(ref.reduced.begin(), ref.reduced.end()),
             ref.ring + ": reduced code differs");
    const auto membership = word_set(membership_code(s));
    c.expect(equal_up_to_permutation(membership,
                                     std::set<std::string>(ref.membership.begin(), ref.membership.end())),
             ref.ring + ": membership code differs under every permutation");
  }
  return c;
}

// AC3: the MV-type suites pass with zero witnesses over the small-prime corpus.
Check ac3() {
  Check c;
  const Suite suites[] = {Suite::chang,     Suite::mv,        Suite::wajsberg,       Suite::bck,
                          Suite::residuated, Suite::divisible, Suite::double_negation};
  for (const auto& s : small_prime_corpus(36)) {
    const FiniteAlgebraTable t = from_ideal_lattice(s);
    for (Suite suite : suites) {
      const SuiteReport r = check_suite(t, suite);
      c.expect(r.pass && r.witnesses.empty(), s.to_string() + ": " + std::string(suite_name(suite)));
    }
  }
  return c;
}

// AC4: boolean <=> heyting <=> all exponents 1, and the lattice class is never
// outside {Boolean, MV_not_Boolean}.
Check ac4() {
  Check c;
  for (const auto& s : small_prime_corpus(36)) {
    const FiniteAlgebraTable t = from_ideal_lattice(s);
    const bool boolean = check_suite(t, Suite::boolean).pass;
    const bool heyting = check_suite(t, Suite::heyting).pass;
    const bool reduced = all_exponents_one(s);
    c.expect(boolean == reduced && heyting == reduced, s.to_string() + ": boolean/heyting");
    const LatticeClass k = classify_lattice(t);
    c.expect(k == (reduced ? LatticeClass::boolean : LatticeClass::mv_not_boolean),
             s.to_string() + ": class " + std::string(lattice_class_name(k)));
  }
  return c;
}

// AC5: exponent-vector operations agree with explicit sets for every ring of
// order <= 64, and the ideal count equals the oracle count and the product.
Check ac5() {
  Check c;
  for (const auto& s : rings_up_to(64)) {
    const OracleReport r = oracle_cross_check(s);
    c.expect(r.agrees(), s.to_string() + ": " + (r.agrees() ? "" : r.disagreements.front()));
    std::uint64_t product = 1;
    for (const auto& f : s.factors()) product *= f.exponent + 1;
    const std::size_t fast = enumerate_ideals(s).size();
    const std::size_t slow = enumerate_ideals_oracle(s).size();
    c.expect(fast == product && slow == product && s.ideal_count() == product,
             s.to_string() + ": ideal counts " + std::to_string(fast) + "/" + std::to_string(slow));
  }
  return c;
}

// AC6: the identity suite holds exhaustively for every ring of order <= 64.
Check ac6() {
  Check c;
  for (const auto& s : rings_up_to(64)) {
    const auto r = identities::check_all(s);
    c.expect(r.failures.empty() && r.checks > 0, r.failures.empty() ? s.to_string() : r.failures.front());
    const auto b = identities::boolean_conditions(s);
    const bool reduced = s.is_reduced();
    c.expect(b.all_coprime == reduced && b.self_quotient == reduced && b.ann_inside == reduced &&
                 b.quotient_inside == reduced,
             s.to_string() + ": boolean characterisation " + b.witness);
  }
  return c;
}

// AC7: membership-code distances and classes, reduced-code distance one.
Check ac7() {
  Check c;
  const std::pair<const char*, std::size_t> fixed[] = {{"Z4", 1}, {"Z9", 2}, {"Z25", 4}};
  for (const auto& [ring, d] : fixed) {
    c.expect(min_distance(membership_code(parse_ring_spec(ring))) == d, std::string(ring) + ": distance");
  }
  for (std::uint64_t n = 2; n <= 256; ++n) {
    for (const auto& s : rings_of_order(n)) {
      if (s.ideal_count() < 2) continue;
      const BlockCode m = membership_code(s);
      const std::uint64_t p = least_prime(s);
      const std::size_t d = min_distance(m);
      c.expect(d == p - 1, s.to_string() + ": membership distance " + std::to_string(d));
      const CodeClass k = classify_code(m);
      if (p >= 3) c.expect(k != CodeClass::none, s.to_string() + ": not detecting");
      if (p >= 5) c.expect(k == CodeClass::correcting, s.to_string() + ": not correcting");
      if (p == 3) c.expect(k == CodeClass::detecting, s.to_string() + ": class");
      const BlockCode r = reduced_code(from_ideal_lattice(s));
      c.expect(min_distance(r) == 1 && classify_code(r) == CodeClass::none,
               s.to_string() + ": reduced code distance");
    }
  }
  return c;
}

// AC8: classification counts, generator list, pairwise non-isomorphism and
// chain_mv(m) ~ Id(Z_{p^(m-1)}).
Check ac8() {
  Check c;
  const auto& counts = reference::counts();
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const Classification k = classify_all(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(k.total() == static_cast<std::size_t>(counts[n - 2].first), tag + ": MV count");
    c.expect(k.booleans() == static_cast<std::size_t>(counts[n - 2].second), tag + ": Boolean count");
    c.expect(k.pairwise_non_isomorphic, tag + ": isomorphic representatives");
  }
  const auto rows = generator_table(8);
  c.expect(rows.size() == reference::generators().size(), "generator rows");
  for (std::size_t i = 0; i < rows.size() && i < reference::generators().size(); ++i) {
    c.expect(rows[i].generators == reference::generators()[i], "generators n=" + std::to_string(i + 2));
  }
  for (std::size_t m = 2; m <= 8; ++m) {
    for (std::uint64_t p : {2, 3, 5}) {
      const RingSpec s({PrimePower{p, static_cast<std::uint32_t>(m - 1)}});
      c.expect(is_isomorphic(chain_mv(m), ideal_mv(s)),
               "chain_mv(" + std::to_string(m) + ") vs " + s.to_string());
    }
  }
  return c;
}

// AC9: every single-entry corruption of the implication table is caught by
// bck, chang or mv.
Check ac9() {
  Check c;
  for (const char* ring : {"Z4", "Z2xZ2"}) {
    const FiniteAlgebraTable t = from_ideal_lattice(parse_ring_spec(ring));
    const bool base = check_suite(t, Suite::bck).pass && check_suite(t, Suite::chang).pass &&
                      check_suite(t, Suite::mv).pass;
    c.expect(base, std::string(ring) + ": unmutated table fails");
    for (Elem x = 0; x < t.size(); ++x) {
      for (Elem y = 0; y < t.size(); ++y) {
        for (Elem v = 0; v < t.size(); ++v) {
          if (v == t.imp(x, y)) continue;
          const FiniteAlgebraTable u = t.with_imp(x, y, v);
          const bool caught = !check_suite(u, Suite::bck).pass || !check_suite(u, Suite::chang).pass ||
                              !check_suite(u, Suite::mv).pass;
          c.expect(caught, std::string(ring) + ": imp(" + t.label(x) + "," + t.label(y) + ") := " +
                               t.label(v) + " undetected");
        }
      }
    }
  }
  return c;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0: no time limit
  Check (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "implication tables", 1.0, ac1},
      {"AC2", "block codes", 1.0, ac2},
      {"AC3", "MV suites over the small-prime corpus", 30.0, ac3},
      {"AC4", "Boolean dichotomy", 0.0, ac4},
      {"AC5", "oracle equivalence, |A| <= 64", 60.0, ac5},
      {"AC6", "identity suite, |A| <= 64", 0.0, ac6},
      {"AC7", "code distances", 0.0, ac7},
      {"AC8", "classification", 60.0, ac8},
      {"AC9", "mutation sensitivity", 0.0, ac9},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    std::string error;
    try {
      result = k.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = k.budget_seconds == 0.0 || secs < k.budget_seconds;
    const bool ok = error.empty() && result.failures == 0 && in_time;
    std::printf("%s %s  %8.3fs  %-40s %zu cases", k.id, ok ? "PASS" : "FAIL", secs, k.title, result.cases);
    if (k.budget_seconds > 0.0) std::printf(" (budget %.0fs)", k.budget_seconds);
    std::printf("\n");
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!in_time) std::printf("    over time budget\n");
    for (const auto& n : result.notes) std::printf("    %s\n", n.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
