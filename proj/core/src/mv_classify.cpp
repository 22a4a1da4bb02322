#include "idealmv/mv_classify.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "idealmv/error.hpp"
#include "idealmv/render.hpp"

namespace idealmv {

namespace {

void collect_partitions(std::uint64_t rest, std::uint64_t min_factor,
                        std::vector<std::uint64_t>& prefix,
                        std::vector<MultiplicativePartition>& out) {
  // Non-final factors f need a cofactor >= f, so f <= sqrt(rest).
  for (std::uint64_t f = min_factor; f <= rest / f; ++f) {
    if (rest % f != 0) continue;
    prefix.push_back(f);
    collect_partitions(rest / f, f, prefix, out);
    prefix.pop_back();
  }
  prefix.push_back(rest);
  out.push_back({prefix});
  prefix.pop_back();
}

struct Fingerprint {
  std::size_t down_set = 0;
  bool idempotent = false;
  bool self_dual = false;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

// Natural MV order: x <= y iff x* (+) y = 1.
std::vector<Fingerprint> fingerprints(const FiniteAlgebraTable& t) {
  const std::size_t m = t.size();
  std::vector<Fingerprint> out(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto a = static_cast<Elem>(x);
    for (std::size_t y = 0; y < m; ++y) {
      const auto b = static_cast<Elem>(y);
      if (t.oplus(t.star(b), a) == t.top()) ++out[x].down_set;
    }
    out[x].idempotent = t.oplus(a, a) == a;
    out[x].self_dual = t.star(a) == a;
  }
  return out;
}

// Partitions of the integer a into nonincreasing parts.
void integer_partitions(std::uint32_t rest, std::uint32_t max_part, std::vector<std::uint32_t>& prefix,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (rest == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t part = std::min(rest, max_part); part >= 1; --part) {
    prefix.push_back(part);
    integer_partitions(rest - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::string verdict_text(LatticeClass c) {
  switch (c) {
    case LatticeClass::boolean: return "Boolean algebra";
    case LatticeClass::mv_not_boolean: return "MV-algebra (not Boolean)";
    case LatticeClass::heyting_not_mv: return "Heyting algebra (not MV)";
    case LatticeClass::other: return "other";
  }
  return "other";
}

std::string generator_tag(const Representative& r) {
  if (r.chain && r.boolean) return "Boole chain";
  if (r.chain) return "MV chain";
  if (r.boolean) return "Boole";
  return "MV";
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

void require_range(std::uint64_t n_max, std::uint64_t limit, const char* what) {
  if (n_max < 2) throw std::invalid_argument(std::string(what) + " needs n_max >= 2");
  if (n_max > limit) {
    throw BoundExceeded(std::string(what) + " is limited to n <= " + std::to_string(limit));
  }
}

}  // namespace

std::uint64_t MultiplicativePartition::product() const {
  std::uint64_t p = 1;
  for (auto f : factors) p *= f;
  return p;
}

bool MultiplicativePartition::all_twos() const {
  return std::all_of(factors.begin(), factors.end(), [](std::uint64_t f) { return f == 2; });
}

std::string MultiplicativePartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(factors[i]);
  }
  return out + "]";
}

std::vector<MultiplicativePartition> multiplicative_partitions(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("multiplicative partitions need n >= 2");
  if (n > kMaxPartitionTarget) {
    throw BoundExceeded("multiplicative partitions are limited to n <= " +
                        std::to_string(kMaxPartitionTarget));
  }
  std::vector<MultiplicativePartition> out;
  std::vector<std::uint64_t> prefix;
  collect_partitions(n, 2, prefix, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  });
  return out;
}

MvAlgebra::MvAlgebra(FiniteAlgebraTable table, std::string provenance)
    : table_(std::move(table)), provenance_(std::move(provenance)) {
  const SuiteReport r = check_suite(table_, Suite::mv);
  if (!r.pass) {
    throw PreconditionFailed(provenance_ + " is not an MV-algebra: " +
                             describe_witness(table_, r.witnesses.front()));
  }
  if (table_.size() >= 2 && table_.bottom() == table_.top()) {
    throw PreconditionFailed(provenance_ + ": 0 and 1 coincide");
  }
}

MvAlgebra chain_mv(std::size_t m) {
  if (m < 2) throw std::invalid_argument("an MV-chain needs at least 2 elements");
  if (m > kMaxCarrier) throw BoundExceeded("MV-chain larger than the table bound");
  const auto k = static_cast<Elem>(m - 1);
  auto t = FiniteAlgebraTable::tabulate(
      m, 0, k, [](Elem i, Elem j) { return std::min(i, j); },
      [](Elem i, Elem j) { return std::max(i, j); },
      [k](Elem i, Elem j) { return static_cast<Elem>(i + j > k ? i + j - k : 0); },
      [k](Elem i, Elem j) { return i <= j ? k : static_cast<Elem>(k - i + j); },
      [](Elem i, Elem j) { return i <= j; });
  return MvAlgebra(std::move(t), "chain of " + std::to_string(m) + " elements");
}

MvAlgebra ideal_mv(const RingSpec& spec) {
  return MvAlgebra(from_ideal_lattice(spec), "Id(" + spec.to_string() + ")");
}

RingSpec ring_for_partition(const MultiplicativePartition& part, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (part.factors.empty()) throw std::invalid_argument("empty partition");
  std::vector<PrimePower> factors;
  for (auto m : part.factors) {
    if (m < 2) throw std::invalid_argument("partition factors must be at least 2");
    factors.push_back({p, static_cast<std::uint32_t>(m - 1)});
  }
  return RingSpec(std::move(factors));
}

bool is_chain(const FiniteAlgebraTable& t) {
  const std::size_t m = t.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      if (!t.leq(static_cast<Elem>(x), static_cast<Elem>(y)) &&
          !t.leq(static_cast<Elem>(y), static_cast<Elem>(x))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const MvAlgebra& a, const MvAlgebra& b) {
  const FiniteAlgebraTable& ta = a.table();
  const FiniteAlgebraTable& tb = b.table();
  if (ta.size() > kMaxIsomorphismSize || tb.size() > kMaxIsomorphismSize) {
    throw BoundExceeded("isomorphism search is limited to " +
                        std::to_string(kMaxIsomorphismSize) + " elements");
  }
  if (ta.size() != tb.size()) return std::nullopt;
  const std::size_t m = ta.size();
  const auto fa = fingerprints(ta);
  const auto fb = fingerprints(tb);
  {
    auto sa = fa;
    auto sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  constexpr Elem kUnset = 0xFFFF;
  std::vector<Elem> phi(m, kUnset);
  std::vector<bool> used(m, false);

  // Assignment order: bottom, top, then the rest in index order.
  std::vector<Elem> order{ta.bottom()};
  if (ta.top() != ta.bottom()) order.push_back(ta.top());
  for (std::size_t x = 0; x < m; ++x) {
    const auto e = static_cast<Elem>(x);
    if (e != ta.bottom() && e != ta.top()) order.push_back(e);
  }

  auto consistent = [&]() {
    for (std::size_t u = 0; u < m; ++u) {
      if (phi[u] == kUnset) continue;
      const Elem su = ta.star(static_cast<Elem>(u));
      if (phi[su] != kUnset && phi[su] != tb.star(phi[u])) return false;
      for (std::size_t v = 0; v < m; ++v) {
        if (phi[v] == kUnset) continue;
        const Elem s = ta.oplus(static_cast<Elem>(u), static_cast<Elem>(v));
        if (phi[s] != kUnset && phi[s] != tb.oplus(phi[u], phi[v])) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const Elem x = order[depth];
    std::vector<Elem> candidates;
    if (x == ta.bottom()) {
      candidates.push_back(tb.bottom());
    } else if (x == ta.top()) {
      candidates.push_back(tb.top());
    } else {
      for (std::size_t y = 0; y < m; ++y) {
        if (!used[y] && fb[y] == fa[x]) candidates.push_back(static_cast<Elem>(y));
      }
    }
    for (Elem y : candidates) {
      if (used[y]) continue;
      phi[x] = y;
      used[y] = true;
      if (consistent() && extend(depth + 1)) return true;
      phi[x] = kUnset;
      used[y] = false;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return phi;
}

bool is_isomorphic(const MvAlgebra& a, const MvAlgebra& b) {
  return find_isomorphism(a, b).has_value();
}

std::size_t Classification::chains() const {
  return static_cast<std::size_t>(std::count_if(representatives.begin(), representatives.end(),
                                                 [](const Representative& r) { return r.chain; }));
}

std::size_t Classification::booleans() const {
  return static_cast<std::size_t>(std::count_if(representatives.begin(), representatives.end(),
                                                 [](const Representative& r) { return r.boolean; }));
}

Classification classify_all(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("classification needs n >= 2");
  if (n > kMaxClassifySize) {
    throw BoundExceeded("classification is limited to n <= " + std::to_string(kMaxClassifySize));
  }
  Classification c;
  c.n = n;
  for (const auto& part : multiplicative_partitions(n)) {
    RingSpec spec = ring_for_partition(part, 2);
    MvAlgebra algebra = ideal_mv(spec);
    const bool chain = is_chain(algebra.table());
    const bool boolean = check_suite(algebra.table(), Suite::boolean).pass;
    c.representatives.push_back({part, std::move(spec), std::move(algebra), chain, boolean});
  }
  c.pairwise_non_isomorphic = true;
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < c.representatives.size(); ++j) {
      if (is_isomorphic(c.representatives[i].algebra, c.representatives[j].algebra)) {
        c.pairwise_non_isomorphic = false;
      }
    }
  }
  return c;
}

std::string render_classification_text(const Classification& c) {
  std::ostringstream os;
  os << "n = " << c.n << ": " << c.total() << " MV-algebras, " << c.chains() << " chain, "
     << c.booleans() << " Boolean; pairwise non-isomorphic: "
     << (c.pairwise_non_isomorphic ? "yes" : "NO") << '\n';
  for (const auto& r : c.representatives) {
    os << '\n'
       << r.partition.to_string() << "  Id(" << r.spec.to_string() << ")  "
       << generator_tag(r) << '\n';
    os << render_cayley_text(r.algebra.table(), TableOp::oplus);
    os << render_cayley_text(r.algebra.table(), TableOp::ann);
    os << render_cayley_text(r.algebra.table(), TableOp::imp);
  }
  return os.str();
}

std::string render_classification_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["total"] = c.total();
  j["chains"] = c.chains();
  j["boolean"] = c.booleans();
  j["pairwise_non_isomorphic"] = c.pairwise_non_isomorphic;
  auto reps = nlohmann::ordered_json::array();
  constexpr TableOp kOps[] = {TableOp::oplus, TableOp::ann, TableOp::imp};
  for (const auto& r : c.representatives) {
    nlohmann::ordered_json e;
    e["partition"] = r.partition.factors;
    e["ring"] = r.spec.to_string();
    e["chain"] = r.chain;
    e["boolean"] = r.boolean;
    e["tables"] = nlohmann::ordered_json::parse(
        render_cayley_json(r.algebra.table(), kOps, r.spec));
    reps.push_back(std::move(e));
  }
  j["representatives"] = std::move(reps);
  return j.dump();
}

std::vector<RingSpec> rings_of_order(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("ring order must be at least 2");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    std::uint32_t a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    if (a > 0) primes.emplace_back(p, a);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  std::vector<std::vector<PrimePower>> specs{{}};
  for (const auto& [p, a] : primes) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> prefix;
    integer_partitions(a, a, prefix, parts);
    std::vector<std::vector<PrimePower>> next;
    for (const auto& base : specs) {
      for (const auto& part : parts) {
        auto f = base;
        for (auto e : part) f.push_back({p, e});
        next.push_back(std::move(f));
      }
    }
    specs = std::move(next);
  }
  std::vector<RingSpec> out;
  for (auto& f : specs) out.emplace_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const RingSpec& a, const RingSpec& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return std::lexicographical_compare(a.factors().begin(), a.factors().end(),
                                        b.factors().begin(), b.factors().end());
  });
  return out;
}

std::string generic_ring_name(const MultiplicativePartition& part) {
  std::string out;
  for (std::size_t i = 0; i < part.factors.size(); ++i) {
    if (i != 0) out += " x ";
    out += "Zp";
    if (part.factors[i] > 2) out += "^" + std::to_string(part.factors[i] - 1);
  }
  return out;
}

std::vector<CountRow> count_table(std::uint64_t n_max) {
  require_range(n_max, kMaxClassifySize, "table1");
  std::vector<CountRow> rows;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const Classification c = classify_all(n);
    rows.push_back({n, c.total(), c.booleans()});
  }
  return rows;
}

std::vector<RingRow> ring_table(std::uint64_t n_max) {
  require_range(n_max, 16, "table2");
  std::vector<RingRow> rows;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    for (const RingSpec& spec : rings_of_order(n)) {
      std::string alias;
      if (spec.rank() > 1 && spec.is_cyclic()) alias = "Z" + std::to_string(n);
      rows.push_back({n, spec, alias, classify_lattice(from_ideal_lattice(spec))});
    }
  }
  return rows;
}

std::vector<GeneratorRow> generator_table(std::uint64_t n_max) {
  require_range(n_max, kMaxClassifySize, "table3");
  std::vector<GeneratorRow> rows;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const Classification c = classify_all(n);
    GeneratorRow row;
    row.n = n;
    for (const auto& r : c.representatives) {
      row.partitions.push_back(r.partition);
      row.generators.push_back(generic_ring_name(r.partition) + " (" + generator_tag(r) + ")");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view report_name(ReportKind k) {
  switch (k) {
    case ReportKind::table1: return "table1";
    case ReportKind::table2: return "table2";
    case ReportKind::table3: return "table3";
  }
  return "?";
}

ReportKind parse_report(std::string_view name) {
  for (ReportKind k : {ReportKind::table1, ReportKind::table2, ReportKind::table3}) {
    if (report_name(k) == name) return k;
  }
  throw ParseError("unknown report '" + std::string(name) + "'");
}

std::string render_report_text(ReportKind kind, std::uint64_t n_max) {
  std::ostringstream os;
  switch (kind) {
    case ReportKind::table1: {
      const auto rows = count_table(n_max);
      std::string header = "n          ", mv = "MV-alg     ", boole = "Boole alg  ";
      for (const auto& r : rows) {
        header += pad_right(std::to_string(r.n), 4);
        mv += pad_right(std::to_string(r.mv), 4);
        boole += pad_right(r.boolean == 0 ? "-" : std::to_string(r.boolean), 4);
      }
      for (auto* line : {&header, &mv, &boole}) {
        while (!line->empty() && line->back() == ' ') line->pop_back();
        os << *line << '\n';
      }
      break;
    }
    case ReportKind::table2: {
      const auto rows = ring_table(n_max);
      os << pad_right("|A|=n", 8) << pad_right("ring", 24) << "Id(A) is\n";
      std::uint64_t last = 0;
      for (const auto& r : rows) {
        const std::string n = r.n == last ? "" : "n=" + std::to_string(r.n);
        last = r.n;
        std::string ring = r.cyclic_alias.empty() ? r.spec.to_string()
                                                  : r.cyclic_alias + " = " + r.spec.to_string();
        os << pad_right(n, 8) << pad_right(ring, 24) << verdict_text(r.verdict) << '\n';
      }
      break;
    }
    case ReportKind::table3: {
      const auto rows = generator_table(n_max);
      os << pad_right("|M|=n", 8) << pad_right("MV", 4) << "rings generating the MV-algebras\n";
      for (const auto& r : rows) {
        std::string gens;
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
          if (i != 0) gens += " and ";
          gens += r.generators[i];
        }
        os << pad_right("n=" + std::to_string(r.n), 8)
           << pad_right(std::to_string(r.generators.size()), 4) << gens << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string render_report_json(ReportKind kind, std::uint64_t n_max) {
  nlohmann::ordered_json j;
  j["report"] = report_name(kind);
  auto rows = nlohmann::ordered_json::array();
  switch (kind) {
    case ReportKind::table1:
      for (const auto& r : count_table(n_max)) {
        rows.push_back({{"n", r.n}, {"mv", r.mv}, {"boolean", r.boolean}});
      }
      break;
    case ReportKind::table2:
      for (const auto& r : ring_table(n_max)) {
        nlohmann::ordered_json e;
        e["n"] = r.n;
        e["ring"] = r.spec.to_string();
        e["cyclic_alias"] = r.cyclic_alias;
        e["verdict"] = lattice_class_name(r.verdict);
        rows.push_back(std::move(e));
      }
      break;
    case ReportKind::table3:
      for (const auto& r : generator_table(n_max)) {
        nlohmann::ordered_json e;
        e["n"] = r.n;
        auto parts = nlohmann::ordered_json::array();
        for (const auto& p : r.partitions) parts.push_back(p.factors);
        e["partitions"] = std::move(parts);
        e["generators"] = r.generators;
        rows.push_back(std::move(e));
      }
      break;
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string render_report_csv(ReportKind kind, std::uint64_t n_max) {
  std::ostringstream os;
  switch (kind) {
    case ReportKind::table1:
      os << "n,mv,boolean\n";
      for (const auto& r : count_table(n_max)) os << r.n << ',' << r.mv << ',' << r.boolean << '\n';
      break;
    case ReportKind::table2:
      os << "n,ring,cyclic_alias,verdict\n";
      for (const auto& r : ring_table(n_max)) {
        os << r.n << ',' << r.spec.to_string() << ',' << r.cyclic_alias << ','
           << lattice_class_name(r.verdict) << '\n';
      }
      break;
    case ReportKind::table3:
      os << "n,partition,generator\n";
      for (const auto& r : generator_table(n_max)) {
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
          std::string part = r.partitions[i].to_string();
          std::replace(part.begin(), part.end(), ',', ' ');
          os << r.n << ',' << part << ',' << r.generators[i] << '\n';
        }
      }
      break;
  }
  return os.str();
}

}  // namespace idealmv
