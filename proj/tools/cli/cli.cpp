#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "idealmv/algebra_table.hpp"
#include "idealmv/codes.hpp"
#include "idealmv/error.hpp"
#include "idealmv/ideal.hpp"
#include "idealmv/mv_classify.hpp"
#include "idealmv/render.hpp"
#include "idealmv/ring.hpp"
#include "idealmv/suites.hpp"

namespace idealmv::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Request {
  Format format = Format::text;
  bool oracle = false;
  std::string out_path;

  std::string spec_text;
  std::string op = "imp";
  std::vector<std::string> suites;
  std::string kind = "membership";
  std::uint64_t n = 0;
  std::string report;
  std::uint64_t max = 0;
  bool members = false;
};

std::size_t cell_width_from_env() {
  const char* v = std::getenv("IDEALMV_CELL_WIDTH");
  if (v == nullptr) return 1;
  try {
    const long w = std::stol(v);
    return w > 0 && w < 64 ? static_cast<std::size_t>(w) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

/// Cross-checks the fast ideal path when --oracle is given. Disagreements
/// abort the run with both values on the diagnostic stream.
bool run_oracle(const Request& req, const RingSpec& spec, const Hooks& hooks, std::ostream& err) {
  if (!req.oracle) return true;
  if (spec.cardinality() > kMaxElements) {
    err << "oracle: skipped, " << spec << " has more than " << kMaxElements << " elements\n";
    return true;
  }
  const OracleReport r = oracle_cross_check(spec, hooks.fast);
  if (r.agrees()) {
    err << "oracle: " << r.checks << " checks agree for " << spec << '\n';
    return true;
  }
  err << "oracle: " << r.disagreements.size() << " disagreements out of " << r.checks
      << " checks for " << spec << '\n';
  for (const auto& d : r.disagreements) err << "  " << d << '\n';
  return false;
}

std::string cmd_ideals(const Request& req, const RingSpec& spec) {
  const auto ideals = enumerate_ideals(spec);
  const auto labels = canonical_labels(ideals.size());
  const bool with_members = req.members && spec.cardinality() <= kMaxElements;
  if (req.members && !with_members) {
    throw BoundExceeded("--members needs |A| <= " + std::to_string(kMaxElements));
  }
  std::ostringstream os;
  switch (req.format) {
    case Format::text: {
      os << "Id(" << spec << "): " << ideals.size() << " ideals, |A| = " << spec.cardinality()
         << '\n';
      std::size_t lw = 5, ew = 9;
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        lw = std::max(lw, labels[k].size());
        ew = std::max(ew, ideals[k].to_string().size());
      }
      auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
      };
      std::string head = pad("label", lw) + "  " + pad("exponents", ew) + "  |I|";
      if (with_members) head += "  members";
      os << head << '\n';
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        std::string line = pad(labels[k], lw) + "  " + pad(ideals[k].to_string(), ew) + "  " +
                           std::to_string(ideals[k].cardinality());
        if (with_members) {
          line = pad(line, lw + ew + 9) + "  " + materialize(ideals[k]).to_string();
        }
        os << line << '\n';
      }
      break;
    }
    case Format::json: {
      json j;
      j["ring"] = spec.to_string();
      j["cardinality"] = spec.cardinality();
      j["ideal_count"] = ideals.size();
      auto arr = json::array();
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        json e = json::parse(ideal_to_json(ideals[k], with_members));
        e["label"] = labels[k];
        arr.push_back(std::move(e));
      }
      j["ideals"] = std::move(arr);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "label,exponents,cardinality\n";
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        std::string e = ideals[k].to_string();
        std::replace(e.begin(), e.end(), ',', ' ');
        os << labels[k] << ',' << e << ',' << ideals[k].cardinality() << '\n';
      }
      break;
  }
  return os.str();
}

std::string cmd_table(const Request& req, const RingSpec& spec) {
  const TableOp op = parse_table_op(req.op);
  const FiniteAlgebraTable t = from_ideal_lattice(spec);
  switch (req.format) {
    case Format::text:
      return render_cayley_text(t, op, cell_width_from_env());
    case Format::csv:
      return render_cayley_csv(t, op);
    case Format::json: {
      const TableOp ops[] = {op};
      return render_cayley_json(t, ops, spec) + "\n";
    }
  }
  return {};
}

std::vector<Suite> selected_suites(const Request& req) {
  if (req.suites.empty()) {
    const auto u = universal_suites();
    return {u.begin(), u.end()};
  }
  std::vector<Suite> out;
  for (const auto& name : req.suites) {
    if (name == "all") {
      const auto a = all_suites();
      out.assign(a.begin(), a.end());
      return out;
    }
    const Suite s = parse_suite(name);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::string cmd_check(const Request& req, const RingSpec& spec, bool& failed) {
  const auto suites = selected_suites(req);
  const FiniteAlgebraTable t = from_ideal_lattice(spec);
  std::vector<SuiteReport> reports;
  for (Suite s : suites) reports.push_back(check_suite(t, s));
  failed = std::any_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return !r.pass; });

  std::ostringstream os;
  switch (req.format) {
    case Format::text: {
      os << "Id(" << spec << "): " << t.size() << " ideals, class "
         << lattice_class_name(classify_lattice(t)) << '\n';
      for (const auto& r : reports) {
        std::string name(suite_name(r.suite));
        name.resize(std::max<std::size_t>(name.size(), 16), ' ');
        os << name << (r.pass ? "pass" : "FAIL");
        if (!r.conditions.empty()) {
          os << "  (";
          for (std::size_t i = 0; i < r.conditions.size(); ++i) {
            const auto& c = r.conditions[i];
            os << (i == 0 ? "" : " ") << c.id.substr(c.id.find('.') + 1) << '='
               << (c.holds ? "holds" : "fails");
          }
          os << ')';
        }
        os << '\n';
        for (const auto& w : r.witnesses) os << "  " << w.axiom << "  " << describe_witness(t, w) << '\n';
      }
      break;
    }
    case Format::json: {
      json j;
      j["ring"] = spec.to_string();
      j["class"] = lattice_class_name(classify_lattice(t));
      auto arr = json::array();
      auto witness_json = [&](const Witness& w) {
        std::vector<std::string> names;
        for (Elem e : w.elements) names.push_back(t.label(e));
        return json{{"axiom", w.axiom}, {"elements", names}, {"text", describe_witness(t, w)}};
      };
      for (const auto& r : reports) {
        json e;
        e["suite"] = suite_name(r.suite);
        e["pass"] = r.pass;
        auto ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
        e["witnesses"] = std::move(ws);
        if (!r.conditions.empty()) {
          auto cs = json::array();
          for (const auto& c : r.conditions) {
            json ce{{"id", c.id}, {"holds", c.holds}};
            if (c.counterexample) ce["counterexample"] = witness_json(*c.counterexample);
            cs.push_back(std::move(ce));
          }
          e["conditions"] = std::move(cs);
        }
        arr.push_back(std::move(e));
      }
      j["suites"] = std::move(arr);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "suite,pass,axiom,witness\n";
      for (const auto& r : reports) {
        if (r.witnesses.empty()) {
          os << suite_name(r.suite) << ',' << (r.pass ? "pass" : "fail") << ",,\n";
        }
        for (const auto& w : r.witnesses) {
          std::string text = describe_witness(t, w);
          std::replace(text.begin(), text.end(), ',', ' ');
          os << suite_name(r.suite) << ',' << (r.pass ? "pass" : "fail") << ',' << w.axiom << ','
             << text << '\n';
        }
      }
      break;
  }
  return os.str();
}

std::string cmd_code(const Request& req, const RingSpec& spec) {
  BlockCode code = [&] {
    if (req.kind == "membership") return membership_code(spec);
    if (req.kind == "reduced") return reduced_code(from_ideal_lattice(spec));
    throw ParseError("unknown code kind '" + req.kind + "'");
  }();
  const bool enough = code.size() >= 2;
  const std::string d = enough ? std::to_string(min_distance(code)) : "n/a";
  const std::string cls = enough ? std::string(code_class_name(classify_code(code))) : "n/a";
  std::ostringstream os;
  switch (req.format) {
    case Format::text:
      os << "# " << req.kind << " code of Id(" << spec << ")\n"
         << render_code_text(code) << "# min_distance " << d << "\n# classification " << cls
         << '\n';
      break;
    case Format::csv:
      os << render_code_csv(code) << "# min_distance," << d << "\n# classification," << cls << '\n';
      break;
    case Format::json: {
      json j = json::parse(render_code_json(code));
      j["kind"] = req.kind;
      j["ring"] = spec.to_string();
      if (enough) {
        j["min_distance"] = min_distance(code);
      } else {
        j["min_distance"] = nullptr;
      }
      j["classification"] = cls;
      os << j.dump() << '\n';
      break;
    }
  }
  return os.str();
}

std::string cmd_classify(const Request& req, bool& failed) {
  const Classification c = classify_all(req.n);
  failed = !c.pairwise_non_isomorphic;
  switch (req.format) {
    case Format::json:
      return render_classification_json(c) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "partition,ring,chain,boolean\n";
      for (const auto& r : c.representatives) {
        std::string part = r.partition.to_string();
        std::replace(part.begin(), part.end(), ',', ' ');
        os << part << ',' << r.spec.to_string() << ',' << (r.chain ? "yes" : "no") << ','
           << (r.boolean ? "yes" : "no") << '\n';
      }
      return os.str();
    }
    case Format::text:
      break;
  }
  return render_classification_text(c);
}

std::string cmd_report(const Request& req) {
  const ReportKind kind = parse_report(req.report);
  std::uint64_t n_max = req.max;
  if (n_max == 0) n_max = kind == ReportKind::table2 ? 10 : 8;
  switch (req.format) {
    case Format::json: return render_report_json(kind, n_max) + "\n";
    case Format::csv: return render_report_csv(kind, n_max);
    case Format::text: break;
  }
  return render_report_text(kind, n_max);
}

void add_common(CLI::App* sub, Request& req) {
  sub->add_option("--format", req.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case));
  sub->add_option("--out", req.out_path, "Write the output to this file");
}

void add_oracle(CLI::App* sub, Request& req) {
  sub->add_flag("--oracle", req.oracle,
                "Cross-check the exponent-vector ideal operations against explicit sets");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  Request req;
  CLI::App app{"Ideal lattices of finite commutative rings as MV-algebras", "idealmv"};
  app.require_subcommand(1);

  auto* ideals = app.add_subcommand("ideals", "List the ideals of a ring");
  ideals->add_option("spec", req.spec_text, "Ring, e.g. Z2xZ4 or 2^1x2^2")->required();
  ideals->add_flag("--members", req.members, "Also list the elements of every ideal");
  add_common(ideals, req);
  add_oracle(ideals, req);

  auto* table = app.add_subcommand("table", "Print a Cayley table of the ideal lattice");
  table->add_option("spec", req.spec_text, "Ring")->required();
  table->add_option("--op", req.op, "imp, oplus, sum, product, meet or ann")
      ->check(CLI::IsMember({"imp", "oplus", "sum", "product", "meet", "ann"}));
  add_common(table, req);
  add_oracle(table, req);

  auto* check = app.add_subcommand("check", "Run axiom suites on the ideal lattice");
  check->add_option("spec", req.spec_text, "Ring")->required();
  check->add_option("--suite", req.suites, "Suite name (repeatable, comma separated, or 'all')")
      ->delimiter(',');
  add_common(check, req);
  add_oracle(check, req);

  auto* code = app.add_subcommand("code", "Print the membership or reduced block code");
  code->add_option("spec", req.spec_text, "Ring")->required();
  code->add_option("--kind", req.kind, "membership or reduced")
      ->check(CLI::IsMember({"membership", "reduced"}));
  add_common(code, req);
  add_oracle(code, req);

  auto* classify = app.add_subcommand("classify", "List all MV-algebras with n elements");
  classify->add_option("n", req.n, "Number of elements")->required()->check(CLI::Range(2, 12));
  add_common(classify, req);

  auto* report = app.add_subcommand("report", "Regenerate a summary table");
  report->add_option("kind", req.report, "table1, table2 or table3")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3"}));
  report->add_option("--max", req.max, "Largest n");
  add_common(report, req);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::string output;
  bool failed = false;
  try {
    if (*classify) {
      output = cmd_classify(req, failed);
    } else if (*report) {
      output = cmd_report(req);
    } else {
      const RingSpec spec = parse_ring_spec(req.spec_text);
      if (!run_oracle(req, spec, hooks, err)) return kCheckFailed;
      if (*ideals) output = cmd_ideals(req, spec);
      if (*table) output = cmd_table(req, spec);
      if (*check) output = cmd_check(req, spec, failed);
      if (*code) output = cmd_code(req, spec);
    }
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (req.out_path.empty()) {
    out << output;
  } else {
    std::ofstream file(req.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << req.out_path << '\n';
      return kUsage;
    }
    file << output;
  }
  return failed ? kCheckFailed : kOk;
}

}  // namespace idealmv::cli
