#include "specpoly/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "specpoly/chebylucas.hpp"
#include "specpoly/cyclotomic.hpp"
#include "specpoly/cycloring.hpp"
#include "specpoly/format.hpp"
#include "specpoly/minpoly.hpp"
#include "specpoly/numtheory.hpp"
#include "specpoly/theorems.hpp"

namespace specpoly::cli {

namespace {

using format::OutputFormat;

const std::map<std::string, std::function<IntPoly(std::uint64_t)>>& poly_families() {
  static const std::map<std::string, std::function<IntPoly(std::uint64_t)>> kFamilies{
      {"lucas", [](std::uint64_t n) { return lucas(n); }},
      {"spread", [](std::uint64_t n) { return spread(n); }},
      {"cyclo", [](std::uint64_t n) { return cyclotomic(n); }},
      {"psi", [](std::uint64_t n) { return psi(n); }},
      {"phi", [](std::uint64_t n) { return phi_min(n); }},
      {"Phi", [](std::uint64_t n) { return phi_big(n); }},
  };
  return kFamilies;
}

void print_poly(std::ostream& out, OutputFormat fmt, std::uint64_t n, const IntPoly& p) {
  switch (fmt) {
    case OutputFormat::Pretty:
      out << format::to_pretty(p) << '\n';
      break;
    case OutputFormat::Json:
      out << format::poly_document(n, p).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << "degree,coefficient\n";
      for (std::size_t k = 0; k < p.size(); ++k) out << k << ',' << p.coeffs()[k] << '\n';
      break;
  }
}

int cmd_verify(std::ostream& out, const std::string& which, std::uint64_t max_n, unsigned jobs, bool expanded) {
  std::vector<int> theorems;
  if (which == "all") {
    theorems = {1, 2, 3, 4, 5};
  } else {
    const int t = std::stoi(which);
    if (t < 1 || t > 5 || std::to_string(t) != which) throw std::invalid_argument("--theorem must be 1..5 or all");
    theorems = {t};
  }
  if (max_n < 3) throw std::invalid_argument("--max must be >= 3");
  const auto mode = expanded ? PhiEvaluation::Expanded : PhiEvaluation::Lucas;
  std::size_t total_failures = 0;
  for (int t : theorems) {
    const auto rows = sweep(t, 3, max_n, jobs, mode);
    std::size_t failures = 0;
    for (const auto& r : rows) {
      if (r.pass) continue;
      ++failures;
      out << "  FAIL theorem " << t << " n=" << r.n << " computed=" << r.computed << " predicted=" << r.predicted
          << '\n';
    }
    out << "theorem " << t << ": n=3.." << max_n << " checked=" << rows.size() << " failures=" << failures
        << (failures == 0 ? " PASS" : " FAIL") << '\n';
    total_failures += failures;
  }
  return total_failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_spread_table(std::ostream& out, std::uint64_t max_n) {
  bool ok = true;
  out << "n,Z_n(0),Z_n(1),Z_n(2),Z_n(3),Z_n(4)\n";
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    out << n;
    for (int k = 0; k <= 4; ++k) {
      const long tabled = spread_value(n, k);
      const mpz_class direct = n == 0 ? mpz_class(0) : eval_int(spread(n), k);
      if (direct != tabled) ok = false;
      out << ',' << tabled;
    }
    out << '\n';
  }
  if (!ok) out << "periodic table disagrees with direct evaluation\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_factorcheck(std::ostream& out, std::uint64_t max_n) {
  std::size_t failures = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (auto r = check_spread_factorization(n); !r) {
      ++failures;
      out << "  FAIL " << r.detail << '\n';
    }
  }
  out << "spread factorization: n=1.." << max_n << " failures=" << failures << (failures == 0 ? " PASS" : " FAIL")
      << '\n';
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(std::ostream& out, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("oracle: n must be >= 3");
  const IntPoly exact = phi_min(n);
  const auto approx = phi_float_oracle(n);
  double worst = 0.0;
  out << std::setprecision(17);
  out << "degree,exact,float,relative_error\n";
  for (std::size_t k = 0; k < approx.size(); ++k) {
    const double e = exact.coeff(k).get_d();
    const double rel = std::abs(approx[k] - e) / std::abs(e);
    worst = std::max(worst, rel);
    out << k << ',' << exact.coeff(k) << ',' << approx[k] << ',' << rel << '\n';
  }
  const double sp = sine_product(n);
  const bool ok = worst <= 1e-6 && approx.size() == exact.size() && sine_product_check(n).ok;
  out << "max_relative_error=" << worst << '\n';
  out << "sine_product=" << sp << " v(n)=" << numtheory::nu(n) << '\n';
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal polynomials of 4 sin^2(pi/n): construction and verification", "specpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "pretty";
  app.add_option("--format", format_name, "Output format: pretty, json or csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));

  std::uint64_t n = 0;
  std::string family;
  long x = 0;
  std::string unit;
  std::string which = "all";
  std::uint64_t max_n = 0;
  unsigned jobs = 1;
  bool expanded = false;

  std::map<std::string, CLI::App*> poly_cmds;
  for (const auto& [name, _] : poly_families()) {
    auto* sub = app.add_subcommand(name, "Print the " + name + " polynomial of index N");
    sub->add_option("N", n, "Index")->required();
    poly_cmds[name] = sub;
  }
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial family member at an integer");
  eval_cmd->add_option("family", family, "lucas, spread, cyclo, psi, phi or Phi")
      ->required()
      ->check(CLI::IsMember({"lucas", "spread", "cyclo", "psi", "phi", "Phi"}));
  eval_cmd->add_option("N", n, "Index")->required();
  eval_cmd->add_option("X", x, "Integer point")->required();

  auto* w_cmd = app.add_subcommand("w", "w(N, z) = C_N(z) / z^(phi(N)/2) in Z[zeta_12]");
  w_cmd->add_option("N", n, "Index")->required();
  w_cmd->add_option("z", unit, "sigma, i, omega, -1 or 1")
      ->required()
      ->check(CLI::IsMember({"sigma", "i", "omega", "-1", "1", "one", "minus_one"}));

  auto* verify_cmd = app.add_subcommand("verify", "Sweep-verify the value theorems");
  verify_cmd->add_option("--theorem", which, "1..5 or all")->check(CLI::IsMember({"1", "2", "3", "4", "5", "all"}));
  verify_cmd->add_option("--max", max_n, "Largest n")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--expanded", expanded, "Evaluate fully expanded phi_n instead of the Lucas form");

  auto* factor_cmd = app.add_subcommand("factorcheck", "Check Z_n = prod_{d|n} Phi_d");
  factor_cmd->add_option("--max", max_n, "Largest n")->required();

  auto* spread_table_cmd = app.add_subcommand("spread-table", "Z_n(k) for k = 0..4 from the periodic tables");
  spread_table_cmd->add_option("--max", max_n, "Largest n")->required();

  auto* table_cmd = app.add_subcommand("table", "Values of phi at 0..4 against v(n)");
  table_cmd->add_option("--max", max_n, "Largest n")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare phi_N with its floating-point root product");
  oracle_cmd->add_option("N", n, "Index")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const OutputFormat fmt = *format::parse_output_format(format_name);
  try {
    for (const auto& [name, sub] : poly_cmds) {
      if (sub->parsed()) {
        print_poly(out, fmt, n, poly_families().at(name)(n));
        return kExitOk;
      }
    }
    if (eval_cmd->parsed()) {
      out << eval_int(poly_families().at(family)(n), x) << '\n';
      return kExitOk;
    }
    if (w_cmd->parsed()) {
      const Cyc12 value = w_value(n, *UnitPoint::parse(unit));
      out << value.to_string() << '\n';
      if (auto v = value.as_integer()) out << *v << '\n';
      return kExitOk;
    }
    if (verify_cmd->parsed()) return cmd_verify(out, which, max_n, jobs, expanded);
    if (factor_cmd->parsed()) return cmd_factorcheck(out, max_n);
    if (spread_table_cmd->parsed()) return cmd_spread_table(out, max_n);
    if (table_cmd->parsed()) {
      const auto rows = value_table(max_n);
      switch (fmt) {
        case OutputFormat::Json: out << format::table_to_json(rows).dump(2) << '\n'; break;
        case OutputFormat::Csv: out << format::table_to_csv(rows); break;
        case OutputFormat::Pretty: out << format::table_to_pretty(rows); break;
      }
      return kExitOk;
    }
    if (oracle_cmd->parsed()) return cmd_oracle(out, n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace specpoly::cli
