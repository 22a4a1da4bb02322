#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "idealmv/algebra_table.hpp"
#include "idealmv/ring.hpp"

namespace idealmv {

/// Operations that can be printed as a Cayley table. `sum` is the join,
/// `product` the monoid operation, `ann` the unary star.
enum class TableOp { imp, oplus, sum, product, meet, ann };

std::string_view table_op_name(TableOp op);
/// Accepts imp, oplus, sum, product, meet, ann; throws ParseError otherwise.
TableOp parse_table_op(std::string_view name);
/// Symbol printed in the table corner.
std::string_view table_op_symbol(TableOp op);

/// Row operand first, columns in carrier order:
///
///   -> | O R E
///   ---+------
///   O  | E E E
///
/// Cells are padded to at least `min_cell_width` characters.
std::string render_cayley_text(const FiniteAlgebraTable& t, TableOp op,
                               std::size_t min_cell_width = 1);

/// First row is the header ("op,O,R,E"), then one row per carrier element.
std::string render_cayley_csv(const FiniteAlgebraTable& t, TableOp op);

/// {"carrier":[names],"exponents":[[..]] (ideal lattices only),
///  "<op>":[[indices]],...}
std::string render_cayley_json(const FiniteAlgebraTable& t, std::span<const TableOp> ops,
                               const std::optional<RingSpec>& spec = std::nullopt);

}  // namespace idealmv
