#include "qchar/io.hpp"

#include <charconv>
#include <sstream>

#include "qchar/errors.hpp"

namespace qchar::io {

namespace {

// Parses a signed decimal integer from text[pos..end); advances pos.
int parse_int(std::string_view text, std::size_t& pos, std::size_t end) {
  const char* first = text.data() + pos;
  const char* last = text.data() + end;
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", pos);
  if (ec != std::errc{} || ptr == first) throw ParseError("expected an integer", pos);
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int key_to_int(const std::string& key) {
  std::size_t pos = 0;
  const int v = parse_int(key, pos, key.size());
  if (pos != key.size()) throw ParseError("trailing characters in key '" + key + "'", pos);
  return v;
}

}  // namespace

DrinfeldData parse_drinfeld(std::string_view text) {
  DrinfeldData dd;
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) return dd;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t pos = start;
    while (pos < end && text[pos] == ' ') ++pos;
    const int k = parse_int(text, pos, end);
    int m = 1;
    if (pos < end && text[pos] == ':') {
      ++pos;
      const std::size_t mpos = pos;
      m = parse_int(text, pos, end);
      if (m <= 0) throw ParseError("multiplicity must be positive", offset + mpos);
    }
    while (pos < end && text[pos] == ' ') ++pos;
    if (pos != end) throw ParseError("unexpected character", offset + pos);
    dd.add(k, m);
    start = end + 1;
  }
  return dd;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t pos = start;
    while (pos < end && text[pos] == ' ') ++pos;
    out.push_back(parse_int(text, pos, end));
    while (pos < end && text[pos] == ' ') ++pos;
    if (pos != end) throw ParseError("unexpected character", offset + pos);
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

std::string render(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << "Y[" << k << ']';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Coeff mag = c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) mag = -c;
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << render(m);
    }
  }
  return os.str();
}

std::string render(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    Coeff c = p.coeffs()[e];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string render(const AFactorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pos, c] : f) {
    if (!first) os << '*';
    first = false;
    os << "A[" << pos.to_string() << "]^" << -c;
  }
  return os.str();
}

std::string render(const QString& s) {
  return "S(len=" + std::to_string(s.len) + ",base=" + std::to_string(s.base) + ")";
}

std::string render(const StringDecomposition& d) {
  if (d.empty()) return "(empty)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : d.parts()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << '*';
    os << render(s);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Monomial& m) {
  Json j = Json::object();
  for (const auto& [k, e] : m.factors()) j[std::to_string(k)] = e;
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term = Json::object();
    term["monomial"] = to_json(m);
    term["coeff"] = c;
    j.push_back(std::move(term));
  }
  return j;
}

Json to_json(const TPoly& p) {
  Json j = Json::object();
  j["coeffs"] = Json::array();
  for (Coeff c : p.coeffs()) j["coeffs"].push_back(c);
  return j;
}

Json to_json(const DrinfeldData& dd) {
  Json zeros = Json::object();
  for (const auto& [k, m] : dd.mult()) zeros[std::to_string(k)] = m;
  Json j = Json::object();
  j["zeros"] = std::move(zeros);
  return j;
}

Json to_json(const StringDecomposition& d) {
  Json j = Json::array();
  for (const auto& [s, c] : d.parts()) {
    Json part = Json::object();
    part["base"] = s.base;
    part["len"] = s.len;
    part["count"] = c;
    j.push_back(std::move(part));
  }
  return j;
}

Json to_json(const ComplexStratum& s) {
  Json j = Json::object();
  j["w"] = s.w();
  j["r"] = s.r();
  j["h"] = s.h();
  j["omega"] = Json::array();
  for (int i : s.omega()) j["omega"].push_back(i);
  return j;
}

Json to_json(const DecompositionRow& row) {
  Json j = Json::array();
  for (const auto& [dd, mult] : row) {
    Json entry = Json::object();
    entry["simple"] = to_json(dd);
    entry["mult"] = mult;
    j.push_back(std::move(entry));
  }
  return j;
}

Monomial monomial_from_json(const Json& j) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [key, value] : j.items()) {
    factors.emplace_back(key_to_int(key), value.get<int>());
  }
  return Monomial::from_factors(std::move(factors));
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j) {
    p.add_term(monomial_from_json(term.at("monomial")), term.at("coeff").get<Coeff>());
  }
  return p;
}

TPoly tpoly_from_json(const Json& j) { return TPoly(j.at("coeffs").get<std::vector<Coeff>>()); }

DrinfeldData drinfeld_from_json(const Json& j) {
  std::map<int, int> mult;
  for (const auto& [key, value] : j.at("zeros").items()) {
    mult[key_to_int(key)] = value.get<int>();
  }
  return DrinfeldData(std::move(mult));
}

StringDecomposition decomposition_from_json(const Json& j) {
  StringDecomposition d;
  for (const auto& part : j) {
    d.add(QString{part.at("len").get<int>(), part.at("base").get<int>()},
          part.at("count").get<int>());
  }
  return d;
}

ComplexStratum stratum_from_json(const Json& j) {
  ComplexStratum s(j.at("w").get<std::vector<int>>(), j.at("r").get<std::vector<int>>());
  if (j.contains("h") && j.at("h").get<std::vector<int>>() != s.h()) {
    throw DomainError("stratum JSON: h inconsistent with w and r");
  }
  return s;
}

DecompositionRow row_from_json(const Json& j) {
  DecompositionRow row;
  for (const auto& entry : j) {
    row[drinfeld_from_json(entry.at("simple"))] = entry.at("mult").get<Coeff>();
  }
  return row;
}

}  // namespace qchar::io
