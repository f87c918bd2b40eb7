#include "alterlda/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "alterlda/error.hpp"
#include "json.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "cli-reporting";

const std::vector<std::string> kGridHeader{"alpha", "eta", "xi", "tokens", "run", "accuracy",
                                           "majority_baseline"};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

// Display width in code points, which is good enough for aligned text.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << csv_escape(table.header[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i)
      obj[table.header[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_text(const Table& table, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(table.header.size(), 0);
  for (std::size_t i = 0; i < table.header.size(); ++i) width[i] = display_width(table.header[i]);
  for (const auto& row : table.rows) {
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      std::string t = std::holds_alternative<double>(row[i])
                          ? [&] {
                              char buf[32];
                              std::snprintf(buf, sizeof buf, "%.4f", std::get<double>(row[i]));
                              return std::string(buf);
                            }()
                          : cell_text(row[i]);
      if (std::holds_alternative<std::monostate>(row[i])) t = "-";
      width[i] = std::max(width[i], display_width(t));
      texts.push_back(std::move(t));
    }
    cells.push_back(std::move(texts));
  }
  auto emit_line = [&](const std::vector<std::string>& texts, const std::vector<bool>& right) {
    std::string line;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      const std::string pad(width[i] - display_width(texts[i]), ' ');
      if (i) line += "  ";
      line += right[i] ? pad + texts[i] : texts[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  std::vector<bool> right(width.size(), false);
  if (!table.rows.empty())
    for (std::size_t i = 0; i < width.size() && i < table.rows.front().size(); ++i)
      right[i] = std::holds_alternative<double>(table.rows.front()[i]) ||
                 std::holds_alternative<std::int64_t>(table.rows.front()[i]);
  emit_line(table.header, right);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit_line(rule, right);
  for (const auto& texts : cells) emit_line(texts, right);
}

double as_double(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  throw Error(ErrorKind::FormatError, kModule, "expected a number, got '" + cell_text(cell) + "'");
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return std::monostate{};
  const char* first = text.data();
  const char* last = first + text.size();
  std::int64_t i = 0;
  if (auto [p, ec] = std::from_chars(first, last, i); ec == std::errc() && p == last) return i;
  double d = 0.0;
  if (auto [p, ec] = std::from_chars(first, last, d); ec == std::errc() && p == last) return d;
  return text;
}

}  // namespace

std::string_view to_string(ReportFormat format) noexcept {
  switch (format) {
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    case ReportFormat::Text: return "text";
  }
  return "csv";
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorKind::InvalidArgument, kModule, "unknown report format '" + std::string(name) + "'");
}

std::string format_double(double value) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, p);
}

Table to_table(const EvalReport& report) {
  Table t{{"group", "balanced_accuracy", "auroc", "support"}, {}};
  auto add = [&t](const EvalRow& r) {
    t.rows.push_back({r.group, r.balanced_accuracy, r.auroc ? Cell(*r.auroc) : Cell(std::monostate{}),
                      static_cast<std::int64_t>(r.support)});
  };
  for (const auto& r : report.rows) add(r);
  if (!report.rows.empty()) add(report.total);
  return t;
}

Table to_table(const std::vector<SuggestionRow>& rows) {
  Table t{{"group", "suggested_count", "top_words"}, {}};
  for (const auto& r : rows) {
    std::string words;
    for (const auto& [w, n] : r.top_words) {
      if (!words.empty()) words += ';';
      words += w + ":" + std::to_string(n);
    }
    t.rows.push_back({r.group, static_cast<std::int64_t>(r.suggested_count), words});
  }
  return t;
}

Table to_table(const std::vector<GridCell>& cells) {
  Table t{kGridHeader, {}};
  for (const auto& c : cells)
    t.rows.push_back({c.alpha, c.eta, c.xi, static_cast<std::int64_t>(c.tokens),
                      static_cast<std::int64_t>(c.run), c.accuracy, c.majority_baseline});
  return t;
}

void emit_table(const Table& table, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::Csv: write_csv(table, out); break;
    case ReportFormat::Json: write_json(table, out); break;
    case ReportFormat::Text:
      write_text(table, out);
      if (table.header == kGridHeader && !table.rows.empty()) {
        out << '\n';
        render_heat_map(grid_cells_from_table(table), out);
      }
      break;
  }
}

void emit_report(const EvalReport& report, ReportFormat format, std::ostream& out) {
  emit_table(to_table(report), format, out);
}

void emit_report(const std::vector<SuggestionRow>& rows, ReportFormat format, std::ostream& out) {
  emit_table(to_table(rows), format, out);
}

void emit_report(const std::vector<GridCell>& cells, ReportFormat format, std::ostream& out) {
  emit_table(to_table(cells), format, out);
}

Table read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, in_record = false;
  char ch;
  while (in.get(ch)) {
    in_record = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      in_record = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::FormatError, kModule, "unterminated quote in CSV");
  if (in_record) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw Error(ErrorKind::FormatError, kModule, "CSV has no header");

  Table t;
  t.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size())
      throw Error(ErrorKind::FormatError, kModule,
                  "CSV row " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                      " fields, header has " + std::to_string(t.header.size()));
    std::vector<Cell> row;
    // Group names stay text even when they look numeric.
    for (std::size_t i = 0; i < records[r].size(); ++i)
      row.push_back(t.header[i] == "group" ? Cell(records[r][i]) : parse_cell(records[r][i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<GridCell> grid_cells_from_table(const Table& table) {
  if (table.header != kGridHeader)
    throw Error(ErrorKind::FormatError, kModule, "table does not have the grid columns");
  std::vector<GridCell> cells;
  for (const auto& row : table.rows) {
    GridCell c;
    c.alpha = as_double(row[0]);
    c.eta = as_double(row[1]);
    c.xi = as_double(row[2]);
    c.tokens = static_cast<std::size_t>(as_double(row[3]));
    c.run = static_cast<int>(as_double(row[4]));
    c.accuracy = as_double(row[5]);
    c.majority_baseline = as_double(row[6]);
    cells.push_back(c);
  }
  return cells;
}

void render_heat_map(const std::vector<GridCell>& cells, std::ostream& out) {
  static constexpr std::string_view kRamp = " .:-=+*#%@";
  const auto means = grid_means(cells);
  if (means.empty()) return;
  double lo = means.front().mean_accuracy, hi = lo;
  for (const auto& m : means) {
    lo = std::min(lo, m.mean_accuracy);
    hi = std::max(hi, m.mean_accuracy);
  }
  std::set<double> alphas;
  std::set<std::pair<double, double>> columns;
  std::set<std::size_t> sizes;
  std::map<std::tuple<double, double, double, std::size_t>, double> value;
  for (const auto& m : means) {
    alphas.insert(m.alpha);
    columns.insert({m.eta, m.xi});
    sizes.insert(m.tokens);
    value[{m.alpha, m.eta, m.xi, m.tokens}] = m.mean_accuracy;
  }

  char buf[64];
  for (std::size_t size : sizes) {
    out << "mean accuracy, " << size << " tokens (rows alpha, columns eta/xi)\n";
    out << "        ";
    for (const auto& [eta, xi] : columns) {
      std::snprintf(buf, sizeof buf, "%9s", (format_double(eta) + "/" + format_double(xi)).c_str());
      out << ' ' << buf;
    }
    out << '\n';
    for (double alpha : alphas) {
      std::snprintf(buf, sizeof buf, "%8s", format_double(alpha).c_str());
      out << buf;
      for (const auto& [eta, xi] : columns) {
        auto it = value.find({alpha, eta, xi, size});
        if (it == value.end()) {
          out << ' ' << std::string(9, ' ');
          continue;
        }
        const double frac = hi > lo ? (it->second - lo) / (hi - lo) : 1.0;
        const auto idx = std::min(kRamp.size() - 1,
                                  static_cast<std::size_t>(frac * static_cast<double>(kRamp.size() - 1) + 0.5));
        std::snprintf(buf, sizeof buf, "%c%c %6.4f", kRamp[idx], kRamp[idx], it->second);
        out << ' ' << buf;
      }
      out << '\n';
    }
    out << '\n';
  }
  out << "scale: '" << kRamp << "' from " << format_double(lo) << " to " << format_double(hi) << '\n';
}

}  // namespace alterlda
