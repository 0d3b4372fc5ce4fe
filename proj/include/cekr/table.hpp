#pragma once

#include <string>

namespace cekr {

enum class TableFormat { json, csv, text };

// Accepts "json", "csv" or "text"; anything else is an error.
TableFormat table_format_from_name(const std::string& name);

struct TableOptions {
  int n_lo = 0;
  int n_hi = 0;
  int t_lo = 1;
  int t_hi = 1;
  TableFormat format = TableFormat::csv;
  int threads = 1;
};

// One row per (n, t) in the requested ranges with n >= t + 2 (an empty row
// set is an error): n, t, ell_star, r_star, m, nu_shallow (i = 2), nu_deep
// (i = n-t-1), m_tilde, regime.  Counts render as decimal strings; json and
// csv output is byte-stable across runs and thread counts.
std::string render_table(const TableOptions& options);

}  // namespace cekr
