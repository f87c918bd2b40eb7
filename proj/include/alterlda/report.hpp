#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alterlda/foldin.hpp"
#include "alterlda/metrics.hpp"
#include "alterlda/synthetic.hpp"

namespace alterlda {

enum class ReportFormat { Csv, Json, Text };

std::string_view to_string(ReportFormat format) noexcept;
ReportFormat report_format_from_string(std::string_view name);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const Table&) const = default;
};

Table to_table(const EvalReport& report);  // TOTAL row last
Table to_table(const std::vector<SuggestionRow>& rows);
Table to_table(const std::vector<GridCell>& cells);

void emit_report(const EvalReport& report, ReportFormat format, std::ostream& out);
void emit_report(const std::vector<SuggestionRow>& rows, ReportFormat format, std::ostream& out);
void emit_report(const std::vector<GridCell>& cells, ReportFormat format, std::ostream& out);

/// Writes any table; text mode appends a heat map when the table has the
/// grid columns.
void emit_table(const Table& table, ReportFormat format, std::ostream& out);

/// Reads a CSV produced by emit_table. Numeric-looking cells come back as
/// numbers and empty cells as monostate.
Table read_csv(std::istream& in);

/// Recovers grid cells from a grid table (as read back from CSV).
std::vector<GridCell> grid_cells_from_table(const Table& table);

/// Character heat map of mean accuracy: one block per token count, alpha
/// down the side and (eta, xi) across.
void render_heat_map(const std::vector<GridCell>& cells, std::ostream& out);

}  // namespace alterlda
