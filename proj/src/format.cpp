#include "specpoly/format.hpp"

#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace specpoly::format {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::Pretty;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string to_pretty(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const mpz_class& c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const mpz_class magnitude = abs(c);
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
    first = false;
  }
  return out;
}

IntPoly parse_pretty(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("parse_pretty: empty input");
  std::map<std::size_t, mpz_class> terms;
  std::size_t i = 0;
  auto digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("parse_pretty: expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    const std::string coef = digits();
    std::size_t degree = 0;
    bool has_x = false;
    if (i < s.size() && s[i] == 'x') {
      has_x = true;
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::string power = digits();
        if (power.empty()) throw std::invalid_argument("parse_pretty: missing exponent");
        degree = std::stoull(power);
      }
    }
    if (coef.empty() && !has_x) throw std::invalid_argument("parse_pretty: empty term");
    mpz_class value = coef.empty() ? mpz_class(1) : mpz_class(coef, 10);
    terms[degree] += sign * value;
  }
  std::vector<mpz_class> cs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [k, v] : terms) cs[k] = v;
  return IntPoly(std::move(cs));
}

nlohmann::json poly_to_json(const IntPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array");
  std::vector<mpz_class> cs;
  cs.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("poly_from_json: coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(e.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("poly_from_json: bad coefficient '" + e.get<std::string>() + "'");
    }
    cs.push_back(std::move(v));
  }
  return IntPoly(std::move(cs));
}

nlohmann::json poly_document(std::uint64_t n, const IntPoly& p) {
  return {{"n", n}, {"poly", poly_to_json(p)}};
}

std::string table_to_csv(const std::vector<ValueRow>& rows) {
  std::ostringstream out;
  out << kTableCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.phi_n_0 << ',' << r.phi_2n_4 << ',' << r.phi_3n_3 << ',' << r.phi_4n_2 << ','
        << r.phi_6n_1 << ',' << r.v_n << '\n';
  }
  return out.str();
}

std::vector<ValueRow> table_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != kTableCsvHeader) {
    throw std::invalid_argument("table_from_csv: missing or unexpected header");
  }
  std::vector<ValueRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::invalid_argument("table_from_csv: expected 7 fields in '" + line + "'");
    ValueRow r;
    r.n = std::stoull(fields[0]);
    r.phi_n_0 = mpz_class(fields[1], 10);
    r.phi_2n_4 = mpz_class(fields[2], 10);
    r.phi_3n_3 = mpz_class(fields[3], 10);
    r.phi_4n_2 = mpz_class(fields[4], 10);
    r.phi_6n_1 = mpz_class(fields[5], 10);
    r.v_n = std::stoull(fields[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json table_to_json(const std::vector<ValueRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"phi_n_0", r.phi_n_0.get_str()},
                   {"phi_2n_4", r.phi_2n_4.get_str()},
                   {"phi_3n_3", r.phi_3n_3.get_str()},
                   {"phi_4n_2", r.phi_4n_2.get_str()},
                   {"phi_6n_1", r.phi_6n_1.get_str()},
                   {"v_n", r.v_n},
                   {"in_theorem_range", r.in_theorem_range()}});
  }
  return arr;
}

std::string table_to_pretty(const std::vector<ValueRow>& rows) {
  std::ostringstream out;
  const int w = 10;
  out << std::setw(6) << "n" << std::setw(w) << "phi_n(0)" << std::setw(w) << "phi_2n(4)" << std::setw(w)
      << "phi_3n(3)" << std::setw(w) << "phi_4n(2)" << std::setw(w) << "phi_6n(1)" << std::setw(w) << "v(n)" << '\n';
  for (const auto& r : rows) {
    out << std::setw(5) << r.n << (r.in_theorem_range() ? ' ' : '*') << std::setw(w) << r.phi_n_0.get_str()
        << std::setw(w) << r.phi_2n_4.get_str() << std::setw(w) << r.phi_3n_3.get_str() << std::setw(w)
        << r.phi_4n_2.get_str() << std::setw(w) << r.phi_6n_1.get_str() << std::setw(w) << r.v_n << '\n';
  }
  if (!rows.empty() && !rows.front().in_theorem_range()) out << "* outside theorem range (n < 3)\n";
  return out.str();
}

}  // namespace specpoly::format
