#include "toricapolar/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricapolar/error.hpp"

namespace toricapolar {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Non-empty, non-comment lines with their line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t n = 0;
  for (auto line : split(text, '\n')) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (!line.empty()) out.emplace_back(n, line);
  }
  return out;
}

LaurentPoly to_laurent(const std::vector<ParsedTerm>& terms) {
  LaurentPoly p;
  for (const auto& t : terms) {
    auto& slot = p[t.exponents];
    slot += t.coefficient;
    if (slot == 0) p.erase(t.exponents);
  }
  return p;
}

template <class T>
T json_get(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("fan field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxRing parse_fan_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "fan file must hold a JSON object");
  auto rays = json_get<std::vector<Ray>>(j, "rays");
  auto cones = json_get<std::vector<ConeIndices>>(j, "max_cones");
  std::size_t n = j.contains("ambient_rank") ? json_get<std::size_t>(j, "ambient_rank") : (rays.empty() ? 0 : rays[0].size());
  bool complete = j.contains("assert_complete") && json_get<bool>(j, "assert_complete");
  std::vector<std::string> vars, duals;
  if (j.contains("var_names")) vars = json_get<std::vector<std::string>>(j, "var_names");
  if (j.contains("dual_names")) duals = json_get<std::vector<std::string>>(j, "dual_names");
  return CoxRing(FanModel::build(n, std::move(rays), std::move(cones), complete), std::move(vars), std::move(duals));
}

CoxRing load_fan(const std::string& path) { return parse_fan_json(read_text_file(path)); }

Rational parse_rational(std::string_view text) {
  Rational q = 0;
  for (const auto& t : parse_terms(text, {}, false)) q += t.coefficient;
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

std::vector<DecompositionTerm> parse_terms_file(const CoxRing& ring, std::string_view text) {
  std::vector<DecompositionTerm> out;
  for (auto [n, line] : content_lines(text)) {
    auto parts = split(line, '|');
    if (parts.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": expected 'coefficient | point'");
    DecompositionTerm t{parse_rational(parts[0]), parse_rational_list(parts[1])};
    if (t.point.size() != ring.nvars())
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(n) + ": point needs " + std::to_string(ring.nvars()) + " coordinates");
    out.push_back(std::move(t));
  }
  return out;
}

LaurentFamily parse_family_file(const CoxRing& ring, std::string_view text) {
  LaurentFamily fam;
  bool header = false;
  for (auto [n, line] : content_lines(text)) {
    if (!header) {
      constexpr std::string_view tag = "params:";
      if (line.substr(0, tag.size()) != tag)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": expected 'params:' header");
      for (auto p : split(line.substr(tag.size()), ','))
        if (!p.empty()) fam.params.emplace_back(p);
      header = true;
      continue;
    }
    auto parts = split(line, '|');
    if (parts.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": expected 'coefficient | point'");
    LaurentFamily::Term t;
    t.coefficient = to_laurent(parse_terms(parts[0], fam.params, true));
    for (auto c : split(parts[1], ',')) t.point.push_back(to_laurent(parse_terms(c, fam.params, true)));
    if (t.point.size() != ring.nvars())
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(n) + ": point needs " + std::to_string(ring.nvars()) + " coordinates");
    fam.terms.push_back(std::move(t));
  }
  if (!header) throw Error(ErrorKind::ParseError, "family file has no 'params:' header");
  return fam;
}

}  // namespace toricapolar
