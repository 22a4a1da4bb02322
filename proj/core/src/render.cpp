#include "idealmv/render.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "idealmv/error.hpp"
#include "idealmv/ideal.hpp"

namespace idealmv {

namespace {

constexpr TableOp kOps[] = {TableOp::imp, TableOp::oplus, TableOp::sum,
                            TableOp::product, TableOp::meet, TableOp::ann};

Elem evaluate(const FiniteAlgebraTable& t, TableOp op, Elem x, Elem y) {
  switch (op) {
    case TableOp::imp: return t.imp(x, y);
    case TableOp::oplus: return t.oplus(x, y);
    case TableOp::sum: return t.join(x, y);
    case TableOp::product: return t.times(x, y);
    case TableOp::meet: return t.meet(x, y);
    case TableOp::ann: return t.star(x);
  }
  return x;
}

// Display width in terminal columns; every non-ASCII code point counts as one.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  const std::size_t w = display_width(s);
  if (w < width) out.append(width - w, ' ');
  return out;
}

}  // namespace

std::string_view table_op_name(TableOp op) {
  switch (op) {
    case TableOp::imp: return "imp";
    case TableOp::oplus: return "oplus";
    case TableOp::sum: return "sum";
    case TableOp::product: return "product";
    case TableOp::meet: return "meet";
    case TableOp::ann: return "ann";
  }
  return "?";
}

TableOp parse_table_op(std::string_view name) {
  for (TableOp op : kOps) {
    if (table_op_name(op) == name) return op;
  }
  throw ParseError("unknown table operation '" + std::string(name) + "'");
}

std::string_view table_op_symbol(TableOp op) {
  switch (op) {
    case TableOp::imp: return "->";
    case TableOp::oplus: return "(+)";
    case TableOp::sum: return "+";
    case TableOp::product: return "(x)";
    case TableOp::meet: return "cap";
    case TableOp::ann: return "I";
  }
  return "?";
}

std::string render_cayley_text(const FiniteAlgebraTable& t, TableOp op, std::size_t min_cell_width) {
  const std::size_t m = t.size();
  std::size_t cell = std::max<std::size_t>(min_cell_width, 1);
  for (const auto& l : t.labels()) cell = std::max(cell, display_width(l));
  const std::string_view corner = table_op_symbol(op);
  const std::size_t first = std::max(cell, display_width(corner));

  std::ostringstream os;
  if (op == TableOp::ann) {
    const std::string head = "Ann(I)";
    os << pad(corner, first) << " | " << head << '\n';
    os << std::string(first + 1, '-') << '+' << std::string(head.size() + 1, '-') << '\n';
    for (std::size_t x = 0; x < m; ++x) {
      os << pad(t.label(static_cast<Elem>(x)), first) << " | "
         << t.label(t.star(static_cast<Elem>(x))) << '\n';
    }
    return os.str();
  }

  auto row = [&](std::string_view head, const std::vector<std::string>& cells) {
    std::string line = pad(head, first) + " |";
    for (const auto& c : cells) line += " " + pad(c, cell);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  row(corner, t.labels());
  os << std::string(first + 1, '-') << '+' << std::string(m * (cell + 1), '-') << '\n';
  std::vector<std::string> cells(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      cells[y] = t.label(evaluate(t, op, static_cast<Elem>(x), static_cast<Elem>(y)));
    }
    row(t.label(static_cast<Elem>(x)), cells);
  }
  return os.str();
}

std::string render_cayley_csv(const FiniteAlgebraTable& t, TableOp op) {
  std::ostringstream os;
  const std::size_t m = t.size();
  os << table_op_name(op);
  if (op == TableOp::ann) {
    os << ",ann\n";
    for (std::size_t x = 0; x < m; ++x) {
      os << t.label(static_cast<Elem>(x)) << ',' << t.label(t.star(static_cast<Elem>(x))) << '\n';
    }
    return os.str();
  }
  for (const auto& l : t.labels()) os << ',' << l;
  os << '\n';
  for (std::size_t x = 0; x < m; ++x) {
    os << t.label(static_cast<Elem>(x));
    for (std::size_t y = 0; y < m; ++y) {
      os << ',' << t.label(evaluate(t, op, static_cast<Elem>(x), static_cast<Elem>(y)));
    }
    os << '\n';
  }
  return os.str();
}

std::string render_cayley_json(const FiniteAlgebraTable& t, std::span<const TableOp> ops,
                               const std::optional<RingSpec>& spec) {
  nlohmann::ordered_json j;
  j["carrier"] = t.labels();
  if (spec) {
    if (spec->ideal_count() != t.size()) {
      throw SpecMismatch("table does not have one carrier element per ideal of " +
                         spec->to_string());
    }
    auto ex = nlohmann::ordered_json::array();
    for (const auto& I : enumerate_ideals(*spec)) {
      ex.push_back(std::vector<std::uint32_t>(I.exponents().begin(), I.exponents().end()));
    }
    j["exponents"] = std::move(ex);
  }
  j["bottom"] = t.bottom();
  j["top"] = t.top();
  const std::size_t m = t.size();
  for (TableOp op : ops) {
    if (op == TableOp::ann) {
      std::vector<Elem> col(m);
      for (std::size_t x = 0; x < m; ++x) col[x] = t.star(static_cast<Elem>(x));
      j["ann"] = col;
      continue;
    }
    std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        rows[x][y] = evaluate(t, op, static_cast<Elem>(x), static_cast<Elem>(y));
      }
    }
    j[std::string(table_op_name(op))] = rows;
  }
  return j.dump();
}

}  // namespace idealmv
