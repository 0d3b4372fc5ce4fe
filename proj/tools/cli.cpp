// cycle-ekr: exact extremal sizes of t-cycle-intersecting permutation
// families — single values, tables, verification suites, the search oracles,
// and compression traces.

#include <cekr/compress.hpp>
#include <cekr/counting.hpp>
#include <cekr/error.hpp>
#include <cekr/oracle.hpp>
#include <cekr/perm.hpp>
#include <cekr/table.hpp>
#include <cekr/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cekr::BigCount;
using cekr::ExactRatio;
using ordered_json = nlohmann::ordered_json;

enum class OutFormat { json, csv, text };

// --output if given, otherwise the command's default.  CSV only makes sense
// for tables.
OutFormat pick_format(const std::string& flag, OutFormat fallback, bool csv_ok) {
  if (flag.empty()) return fallback;
  if (flag == "json") return OutFormat::json;
  if (flag == "text") return OutFormat::text;
  cekr::require(csv_ok, cekr::errc::invalid_argument,
                "csv output is only available for the table command");
  return OutFormat::csv;
}

// --threads if given, else CYCLE_EKR_THREADS, else 1.  A malformed or
// nonpositive environment value is ignored rather than fatal: the variable is
// ambient and should never break an otherwise valid invocation.
int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CYCLE_EKR_THREADS")) {
    int v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v > 0) return v;
  }
  return 1;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  cekr::require(ec == std::errc() && ptr == text.data() + text.size(),
                cekr::errc::invalid_argument, what + " is not an integer: " + text);
  return v;
}

// "A..B" with A <= B.
std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
  auto pos = text.find("..");
  cekr::require(pos != std::string::npos, cekr::errc::invalid_argument,
                what + " must have the form A..B, got: " + text);
  int lo = parse_int(text.substr(0, pos), what);
  int hi = parse_int(text.substr(pos + 2), what);
  cekr::require(lo <= hi, cekr::errc::invalid_argument,
                what + " is empty: " + text);
  return {lo, hi};
}

std::string ratio_str(const ExactRatio& v) {
  BigCount num = cekr::ratio_num(v), den = cekr::ratio_den(v);
  if (den == 1) return cekr::to_decimal(num);
  return cekr::to_decimal(num) + "/" + cekr::to_decimal(den);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_error(const std::string& kind, const std::string& message) {
  ordered_json e;
  e["error"] = ordered_json{{"kind", kind}, {"message", message}};
  std::cerr << e.dump() << "\n";
}

ordered_json witness_json(const cekr::PermFamily& fam) {
  ordered_json arr = ordered_json::array();
  for (const cekr::Permutation& p : fam) arr.push_back(p.str());
  return arr;
}

// ------------------------------------------------------------- commands --

int cmd_compute_f(int n, OutFormat fmt) {
  BigCount value = cekr::derangements(n);
  if (fmt == OutFormat::text) {
    std::cout << "f(" << n << ") = " << cekr::to_decimal(value) << "\n";
  } else {
    emit(ordered_json{{"n", n}, {"value", cekr::to_decimal(value)}});
  }
  return 0;
}

int cmd_compute_gamma(int n, int t, int r, OutFormat fmt) {
  int ell = t + 2 * r;
  ExactRatio value = cekr::gamma_ratio(ell, n, t);
  if (fmt == OutFormat::text) {
    std::cout << "gamma(ell=" << ell << ") at n=" << n << ", t=" << t << " = "
              << ratio_str(value) << "\n";
  } else {
    emit(ordered_json{{"n", n},
                      {"t", t},
                      {"r", r},
                      {"ell", ell},
                      {"value", ratio_str(value)},
                      {"numerator", cekr::to_decimal(cekr::ratio_num(value))},
                      {"denominator", cekr::to_decimal(cekr::ratio_den(value))}});
  }
  return 0;
}

int cmd_compute_m(int n, int t, OutFormat fmt) {
  auto [value, r_star] = cekr::m_max(n, t);
  if (fmt == OutFormat::text) {
    std::cout << "M(" << n << ", " << t << ") = " << cekr::to_decimal(value)
              << "  (attained at r = " << r_star << ")\n";
  } else {
    emit(ordered_json{{"n", n}, {"t", t}, {"value", cekr::to_decimal(value)},
                      {"r_star", r_star}});
  }
  return 0;
}

int cmd_compute_mtilde(int n, int t, OutFormat fmt) {
  cekr::ExtremalReport rep = cekr::m_tilde(n, t);
  if (fmt == OutFormat::text) {
    std::cout << "M~(" << n << ", " << t << ") = " << cekr::to_decimal(rep.m_tilde) << "  ["
              << cekr::regime_name(rep.regime) << " regime, ell* = " << rep.ell_star
              << ", r* = " << rep.r_star << ", M = " << cekr::to_decimal(rep.m_value) << "]\n";
    for (const auto& [i, v] : rep.nu_values)
      std::cout << "  nu(i=" << i << ") = " << cekr::to_decimal(v) << "\n";
  } else {
    ordered_json nus = ordered_json::array();
    for (const auto& [i, v] : rep.nu_values)
      nus.push_back(ordered_json{{"i", i}, {"value", cekr::to_decimal(v)}});
    emit(ordered_json{{"n", rep.n},
                      {"t", rep.t},
                      {"ell_star", rep.ell_star},
                      {"r_star", rep.r_star},
                      {"m", cekr::to_decimal(rep.m_value)},
                      {"regime", cekr::regime_name(rep.regime)},
                      {"nu_values", nus},
                      {"m_tilde", cekr::to_decimal(rep.m_tilde)}});
  }
  return 0;
}

int cmd_compute_nu(int n, int t, int i, bool closed_form, OutFormat fmt) {
  BigCount value = closed_form ? cekr::s_closed(n, t, i) : cekr::nu(n, t, i);
  const char* label = closed_form ? "S" : "nu";
  if (fmt == OutFormat::text) {
    std::cout << label << "(n=" << n << ", t=" << t << ", i=" << i << ") = "
              << cekr::to_decimal(value) << "\n";
  } else {
    emit(ordered_json{{"n", n}, {"t", t}, {"i", i}, {"value", cekr::to_decimal(value)}});
  }
  return 0;
}

int cmd_table(const std::string& n_range, const std::string& t_range, OutFormat fmt,
              int threads) {
  auto [n_lo, n_hi] = parse_range(n_range, "--n-range");
  auto [t_lo, t_hi] = parse_range(t_range, "--t-range");
  cekr::TableOptions opts;
  opts.n_lo = n_lo;
  opts.n_hi = n_hi;
  opts.t_lo = t_lo;
  opts.t_hi = t_hi;
  opts.format = fmt == OutFormat::json   ? cekr::TableFormat::json
                : fmt == OutFormat::text ? cekr::TableFormat::text
                                         : cekr::TableFormat::csv;
  opts.threads = threads;
  std::cout << cekr::render_table(opts);
  return 0;
}

int cmd_verify(const std::string& suite, const cekr::VerifyOptions& opts, OutFormat fmt) {
  std::vector<cekr::CheckResult> results = cekr::run_suite(suite, opts);
  int failures = 0, skips = 0;
  for (const cekr::CheckResult& r : results)
    if (r.status == cekr::CheckStatus::fail)
      ++failures;
    else if (r.status == cekr::CheckStatus::skip)
      ++skips;
  if (fmt == OutFormat::text) {
    for (const cekr::CheckResult& r : results) {
      std::cout << "[" << cekr::check_status_name(r.status) << "] " << r.suite << ": "
                << r.name;
      if (!r.detail.empty()) std::cout << " — " << r.detail;
      std::cout << "\n";
    }
    std::cout << results.size() << " checks, " << failures << " failed, " << skips
              << " skipped\n";
  } else {
    ordered_json arr = ordered_json::array();
    for (const cekr::CheckResult& r : results)
      arr.push_back(ordered_json{{"suite", r.suite},
                                 {"name", r.name},
                                 {"status", cekr::check_status_name(r.status)},
                                 {"detail", r.detail}});
    emit(ordered_json{{"suite", suite},
                      {"checks", results.size()},
                      {"failures", failures},
                      {"skips", skips},
                      {"passed", failures == 0},
                      {"results", arr}});
  }
  return failures == 0 ? 0 : 1;
}

int cmd_oracle(int n, int t, const std::string& mode_name, const std::string& engine,
               const cekr::OracleOptions& opts, OutFormat fmt) {
  cekr::OracleMode mode = (mode_name == "trivial") ? cekr::OracleMode::trivial_allowed
                                                   : cekr::OracleMode::nontrivial_only;
  cekr::OracleResult res = engine == "structured"
                               ? cekr::structured_max(n, t, mode, opts)
                               : cekr::max_clique_exact(n, t, mode, opts);
  if (fmt == OutFormat::text) {
    std::cout << "maximum = " << cekr::to_decimal(res.maximum) << "  (" << engine
              << " search, " << cekr::oracle_mode_name(res.mode) << ", " << res.node_count
              << " nodes)\n";
    for (const cekr::Permutation& p : res.witness) std::cout << "  " << p.str() << "\n";
  } else {
    emit(ordered_json{{"n", res.n},
                      {"t", res.t},
                      {"mode", cekr::oracle_mode_name(res.mode)},
                      {"engine", engine},
                      {"maximum", cekr::to_decimal(res.maximum)},
                      {"witness", witness_json(res.witness)},
                      {"exhaustive", res.exhaustive},
                      {"node_count", res.node_count}});
  }
  return 0;
}

int cmd_compress(const std::string& input, int t, bool trace, OutFormat fmt) {
  std::vector<std::string> lines;
  std::string line;
  if (input == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
  } else {
    std::ifstream in(input);
    cekr::require(in.good(), cekr::errc::invalid_argument, "cannot open " + input);
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::vector<cekr::Permutation> perms;
  for (const std::string& raw : lines) {
    std::string trimmed = raw;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    perms.push_back(cekr::Permutation::parse(trimmed));
  }
  cekr::require(!perms.empty(), cekr::errc::undefined_on_empty,
                "the input family is empty");
  cekr::PermFamily fam(perms.front().n());
  for (const cekr::Permutation& p : perms) fam.insert(p);
  cekr::CompressionResult res = cekr::compress_to_fixpoint(fam, t);
  if (fmt == OutFormat::text) {
    std::cout << "compressed " << res.trace.initial_size << " permutations in "
              << res.trace.steps.size() << " effective passes\n";
    if (trace)
      for (const cekr::CompressionStep& s : res.trace.steps)
        std::cout << "  " << cekr::compression_op_name(s.op) << "(" << s.first << ", "
                  << s.second << ") moved " << s.moved << "\n";
    for (const cekr::Permutation& p : res.family) std::cout << p.str() << "\n";
  } else {
    ordered_json out{{"n", fam.n()},
                     {"t", t},
                     {"initial_size", res.trace.initial_size},
                     {"final_size", res.trace.final_size},
                     {"passes", res.trace.steps.size()},
                     {"family", witness_json(res.family)}};
    if (trace) {
      ordered_json steps = ordered_json::array();
      for (const cekr::CompressionStep& s : res.trace.steps)
        steps.push_back(ordered_json{{"op", cekr::compression_op_name(s.op)},
                                     {"first", s.first},
                                     {"second", s.second},
                                     {"moved", s.moved}});
      out["trace"] = steps;
    }
    emit(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts for t-cycle-intersecting permutation families"};
  app.require_subcommand(1);

  std::string output;
  int threads_flag = 0;
  std::uint64_t budget = cekr::OracleOptions{}.node_budget;
  bool allow_n6 = false;
  app.add_option("--output", output, "json, csv (tables only) or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads_flag,
                 "worker threads (default: CYCLE_EKR_THREADS or 1)");
  app.add_option("--budget-nodes", budget, "search-node budget for the oracles");
  app.add_flag("--allow-n6", allow_n6, "permit the n = 6 permutation search");

  std::function<int()> action;
  int n = 0, t = 1, i = 2, r = 0;

  CLI::App* compute = app.add_subcommand("compute", "evaluate one quantity");
  compute->fallthrough();
  compute->require_subcommand(1);
  {
    CLI::App* f = compute->add_subcommand("f", "fixed-point-free permutation count f(n)");
    f->fallthrough();
    f->add_option("--n", n)->required();
    f->callback([&] {
      action = [&] { return cmd_compute_f(n, pick_format(output, OutFormat::json, false)); };
    });

    CLI::App* gamma = compute->add_subcommand("gamma", "level ratio at ell = t + 2r");
    gamma->fallthrough();
    gamma->add_option("--n", n)->required();
    gamma->add_option("--t", t)->required();
    gamma->add_option("--r", r)->required();
    gamma->callback([&] {
      action = [&] {
        return cmd_compute_gamma(n, t, r, pick_format(output, OutFormat::json, false));
      };
    });

    CLI::App* m = compute->add_subcommand("m", "maximum over all t-cycle-intersecting families");
    m->fallthrough();
    m->add_option("--n", n)->required();
    m->add_option("--t", t)->required();
    m->callback([&] {
      action = [&] { return cmd_compute_m(n, t, pick_format(output, OutFormat::json, false)); };
    });

    CLI::App* mtilde =
        compute->add_subcommand("mtilde", "maximum over nontrivial families, with report");
    mtilde->fallthrough();
    mtilde->add_option("--n", n)->required();
    mtilde->add_option("--t", t)->required();
    mtilde->callback([&] {
      action = [&] {
        return cmd_compute_mtilde(n, t, pick_format(output, OutFormat::json, false));
      };
    });

    CLI::App* nu_cmd = compute->add_subcommand("nu", "two-block family size nu(n, t, i)");
    nu_cmd->fallthrough();
    nu_cmd->add_option("--n", n)->required();
    nu_cmd->add_option("--t", t)->required();
    nu_cmd->add_option("--i", i)->required();
    nu_cmd->callback([&] {
      action = [&] {
        return cmd_compute_nu(n, t, i, false, pick_format(output, OutFormat::json, false));
      };
    });

    CLI::App* s = compute->add_subcommand("s", "closed form for nu(n, t, i)");
    s->fallthrough();
    s->add_option("--n", n)->required();
    s->add_option("--t", t)->required();
    s->add_option("--i", i)->required();
    s->callback([&] {
      action = [&] {
        return cmd_compute_nu(n, t, i, true, pick_format(output, OutFormat::json, false));
      };
    });
  }

  std::string n_range, t_range;
  CLI::App* table = app.add_subcommand("table", "emit (n, t) rows over a range");
  table->fallthrough();
  table->add_option("--n-range", n_range, "A..B inclusive")->required();
  table->add_option("--t-range", t_range, "A..B inclusive")->required();
  table->callback([&] {
    action = [&] {
      return cmd_table(n_range, t_range, pick_format(output, OutFormat::csv, true),
                       resolve_threads(threads_flag));
    };
  });

  std::string suite = "all";
  cekr::VerifyOptions vopts;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  {
    std::ostringstream names;
    names << "suite to run: all";
    for (const std::string& name : cekr::verify_suite_names()) names << ", " << name;
    verify->add_option("suite", suite, names.str());
  }
  verify->add_option("--max-n,--n", vopts.max_n, "cap on oracle-facing grids (default 5)");
  verify->add_option("--max-m", vopts.max_m, "cap on identity grids (default 12)");
  verify->add_option("--trials", vopts.trials, "randomized trials (default 500)");
  verify->add_option("--t", vopts.max_t, "cap on t for randomized compression trials");
  verify->callback([&] {
    action = [&] {
      vopts.threads = resolve_threads(threads_flag);
      vopts.allow_n6 = allow_n6;
      vopts.node_budget = budget;
      return cmd_verify(suite, vopts, pick_format(output, OutFormat::json, false));
    };
  });

  std::string mode = "nontrivial", engine = "clique";
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search ground truth");
  oracle->fallthrough();
  oracle->add_option("--n", n)->required();
  oracle->add_option("--t", t)->required();
  oracle->add_option("--mode", mode, "trivial (allow trivial families) or nontrivial")
      ->check(CLI::IsMember({"trivial", "nontrivial"}));
  oracle->add_option("--engine", engine, "clique (over S_n) or structured (generator sets)")
      ->check(CLI::IsMember({"clique", "structured"}));
  oracle->callback([&] {
    action = [&] {
      cekr::OracleOptions oopts;
      oopts.clique_bound = allow_n6 ? 6 : 5;
      oopts.node_budget = budget;
      return cmd_oracle(n, t, mode, engine, oopts,
                        pick_format(output, OutFormat::json, false));
    };
  });

  std::string input;
  bool trace = false;
  CLI::App* compress = app.add_subcommand("compress", "run a family to its compression fixpoint");
  compress->fallthrough();
  compress->add_option("--input", input, "file of permutations in cycle notation, - for stdin")
      ->required();
  compress->add_option("--t", t, "required pairwise common cycle count")->required();
  compress->add_flag("--trace", trace, "include the pass-by-pass trace");
  compress->callback([&] {
    action = [&] {
      return cmd_compress(input, t, trace, pick_format(output, OutFormat::json, false));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }

  try {
    return action();
  } catch (const cekr::error& e) {
    emit_error(cekr::errc_name(e.kind()), e.what());
    return e.kind() == cekr::errc::resource_guard ? 3 : 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 2;
  }
}
