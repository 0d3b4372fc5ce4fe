#include <cekr/table.hpp>

#include <cekr/counting.hpp>
#include <cekr/error.hpp>
#include <cekr/parallel.hpp>

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace cekr {

TableFormat table_format_from_name(const std::string& name) {
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  if (name == "text") return TableFormat::text;
  fail(errc::invalid_argument, "unknown output format: " + name);
}

namespace {

constexpr const char* kColumns[] = {"n",          "t",       "ell_star", "r_star", "m",
                                    "nu_shallow", "nu_deep", "m_tilde",  "regime"};

std::string nu_at(const ExtremalReport& rep, int i) {
  for (const auto& [index, value] : rep.nu_values)
    if (index == i) return to_decimal(value);
  return "";
}

std::vector<std::string> row_cells(const ExtremalReport& rep) {
  return {std::to_string(rep.n),
          std::to_string(rep.t),
          std::to_string(rep.ell_star),
          std::to_string(rep.r_star),
          to_decimal(rep.m_value),
          nu_at(rep, 2),
          nu_at(rep, rep.n - rep.t - 1),
          to_decimal(rep.m_tilde),
          regime_name(rep.regime)};
}

}  // namespace

std::string render_table(const TableOptions& options) {
  require(options.n_lo <= options.n_hi && options.t_lo <= options.t_hi, errc::invalid_argument,
          "table ranges must be non-empty");
  require(options.t_lo >= 1, errc::out_of_range, "t must be at least 1");

  std::vector<std::pair<int, int>> instances;
  for (int n = options.n_lo; n <= options.n_hi; ++n)
    for (int t = options.t_lo; t <= options.t_hi; ++t)
      if (n >= t + 2) instances.emplace_back(n, t);
  require(!instances.empty(), errc::invalid_argument,
          "table range contains no (n, t) with n >= t + 2");

  std::vector<ExtremalReport> reports(instances.size());
  parallel_for(instances.size(), options.threads, [&](std::size_t k) {
    reports[k] = m_tilde(instances[k].first, instances[k].second);
  });

  if (options.format == TableFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ExtremalReport& rep : reports) {
      nlohmann::ordered_json row;
      row["n"] = rep.n;
      row["t"] = rep.t;
      row["ell_star"] = rep.ell_star;
      row["r_star"] = rep.r_star;
      row["m"] = to_decimal(rep.m_value);
      row["nu_shallow"] = nu_at(rep, 2);
      row["nu_deep"] = nu_at(rep, rep.n - rep.t - 1);
      row["m_tilde"] = to_decimal(rep.m_tilde);
      row["regime"] = regime_name(rep.regime);
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> cells;
  cells.reserve(reports.size());
  for (const ExtremalReport& rep : reports) cells.push_back(row_cells(rep));

  std::ostringstream out;
  if (options.format == TableFormat::csv) {
    for (std::size_t c = 0; c < std::size(kColumns); ++c)
      out << (c ? "," : "") << kColumns[c];
    out << "\n";
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << "\n";
    }
    return out.str();
  }

  std::vector<std::size_t> width(std::size(kColumns));
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = std::string(kColumns[c]).size();
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (std::size_t c = 0; c < width.size(); ++c)
    out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << kColumns[c];
  out << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
          << (row[c].empty() ? "-" : row[c]);
    out << "\n";
  }
  return out.str();
}

}  // namespace cekr
