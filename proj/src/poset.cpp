#include "slat/poset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "slat/errors.hpp"

namespace slat {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::duplicate_name: return "DuplicateName";
    case Err::unknown_name: return "UnknownName";
    case Err::cycle_detected: return "CycleDetected";
    case Err::parse: return "ParseError";
    case Err::io: return "IoError";
    case Err::too_large: return "TooLarge";
    case Err::not_meet_closed: return "NotMeetClosed";
    case Err::not_lattice: return "NotLattice";
    case Err::not_distributive: return "NotDistributive";
    case Err::not_bounded: return "NotBounded";
    case Err::not_bounded_distributive: return "NotBoundedDistributive";
    case Err::not_zero_dimensional: return "NotZeroDimensional";
    case Err::not_a_base: return "NotABase";
    case Err::not_sup_morphism: return "NotSupMorphism";
    case Err::spec_infeasible: return "SpecInfeasible";
    case Err::unknown_theorem: return "UnknownTheorem";
    case Err::precondition_violated: return "PreconditionViolated";
  }
  return "Error";
}

static void check_name(const std::string& name) {
  if (name.empty()) raise(Err::parse, "empty element name");
  for (char c : name) {
    if (c == '<' || c == '#' || c == '"' || std::isspace(static_cast<unsigned char>(c)))
      raise(Err::parse, "invalid character in element name '" + name + "'");
  }
}

Poset::Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& less)
    : n_(static_cast<int>(names.size())), names_(std::move(names)) {
  if (n_ < 1) raise(Err::parse, "a poset needs at least one element");
  if (n_ > max_elements) raise(Err::too_large, "more than 64 elements");
  std::map<std::string, int> seen;
  for (int i = 0; i < n_; ++i) {
    check_name(names_[i]);
    if (!seen.emplace(names_[i], i).second)
      raise(Err::duplicate_name, "duplicate element name '" + names_[i] + "'");
  }

  up_.assign(n_, 0);
  for (auto [a, b] : less) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) raise(Err::unknown_name, "pair index out of range");
    up_[a] |= bit(b);
  }
  for (int i = 0; i < n_; ++i) up_[i] |= bit(i);
  // Bit-parallel transitive closure.
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (has(up_[i], k)) up_[i] |= up_[k];

  for (int i = 0; i < n_; ++i)
    for (int j : bits(up_[i] & ~bit(i)))
      if (has(up_[j], i))
        raise(Err::cycle_detected,
              "cycle through '" + names_[i] + "' and '" + names_[j] + "'");

  down_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j : bits(up_[i])) down_[j] |= bit(i);
}

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool Poset::is_downset(Mask m) const {
  for (int i : bits(m))
    if (!subset(down_[i], m)) return false;
  return true;
}

bool Poset::is_upset(Mask m) const {
  for (int i : bits(m))
    if (!subset(up_[i], m)) return false;
  return true;
}

Mask Poset::down_closure(Mask m) const {
  Mask r = 0;
  for (int i : bits(m)) r |= down_[i];
  return r;
}

std::optional<int> Poset::bound(Mask s, Dir dir) const {
  const auto& toward = dir == Dir::meet ? down_ : up_;
  Mask common = carrier();
  for (int i : bits(s)) common &= toward[i];
  // Greatest member of the common lower bounds, least of the upper bounds.
  for (int m : bits(common))
    if (subset(common, dir == Dir::meet ? down_[m] : up_[m])) return m;
  return std::nullopt;
}

Mask Poset::minimal_of(Mask s) const {
  Mask r = 0;
  for (int i : bits(s))
    if ((down_[i] & s & ~bit(i)) == 0) r |= bit(i);
  return r;
}

Mask Poset::maximal_of(Mask s) const {
  Mask r = 0;
  for (int i : bits(s))
    if ((up_[i] & s & ~bit(i)) == 0) r |= bit(i);
  return r;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n_; ++a)
    for (int b : bits(up_[a] & ~bit(a)))
      if ((up_[a] & down_[b] & ~bit(a) & ~bit(b)) == 0) covers.emplace_back(a, b);
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return count(down_[a]) < count(down_[b]); });
  return order;
}

Poset Poset::dual() const {
  std::vector<std::pair<int, int>> less;
  for (int a = 0; a < n_; ++a)
    for (int b : bits(up_[a] & ~bit(a))) less.emplace_back(b, a);
  return Poset(names_, less);
}

Poset Poset::restrict(Mask m) const {
  std::vector<int> keep;
  std::vector<int> pos(n_, -1);
  for (int i : bits(m)) {
    pos[i] = static_cast<int>(keep.size());
    keep.push_back(i);
  }
  std::vector<std::string> names;
  for (int i : keep) names.push_back(names_[i]);
  std::vector<std::pair<int, int>> less;
  for (int i : keep)
    for (int j : bits(up_[i] & m & ~bit(i))) less.emplace_back(pos[i], pos[j]);
  return Poset(std::move(names), less);
}

// -- parsing ------------------------------------------------------------

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back({no, raw});
  }
  return lines;
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokens_of(const std::string& s) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) toks.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& msg) {
  raise(Err::parse,
        "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

}  // namespace

Poset Poset::parse_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.size() < 1) raise(Err::parse, "line 1, column 1: missing 'elements:' line");

  auto expect_section = [](const Line& line, const std::string& key) {
    auto toks = tokens_of(line.text);
    if (toks.empty() || toks[0].text != key + ":")
      parse_fail(line.number, toks.empty() ? 1 : toks[0].column, "expected '" + key + ":'");
    toks.erase(toks.begin());
    return toks;
  };

  auto name_toks = expect_section(lines[0], "elements");
  if (name_toks.empty()) parse_fail(lines[0].number, 1, "no elements declared");

  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& tok : name_toks) {
    check_name(tok.text);
    if (!index.emplace(tok.text, static_cast<int>(names.size())).second)
      parse_fail(lines[0].number, tok.column, "duplicate element name '" + tok.text + "'");
    names.push_back(tok.text);
  }

  std::vector<std::pair<int, int>> less;
  if (lines.size() >= 2) {
    auto covers = expect_section(lines[1], "covers");
    for (const auto& tok : covers) {
      auto lt = tok.text.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == tok.text.size())
        parse_fail(lines[1].number, tok.column,
                   "expected '<name><<name>', got '" + tok.text + "'");
      std::string a = tok.text.substr(0, lt), b = tok.text.substr(lt + 1);
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end())
        raise(Err::unknown_name, "line " + std::to_string(lines[1].number) + ", column " +
                                     std::to_string(tok.column) + ": unknown element '" + a + "'");
      if (ib == index.end())
        raise(Err::unknown_name,
              "line " + std::to_string(lines[1].number) + ", column " +
                  std::to_string(tok.column + static_cast<int>(lt) + 1) +
                  ": unknown element '" + b + "'");
      less.emplace_back(ia->second, ib->second);
    }
    if (lines.size() > 2) parse_fail(lines[2].number, 1, "unexpected content after covers");
  }
  return Poset(std::move(names), less);
}

Poset Poset::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Err::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    raise(Err::parse, "JSON poset needs an \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) raise(Err::parse, "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index.emplace(names[i], i);
  std::vector<std::pair<int, int>> less;
  if (doc.contains("covers")) {
    for (const auto& pr : doc["covers"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        raise(Err::parse, "covers must be [\"a\",\"b\"] pairs");
      auto ia = index.find(pr[0].get<std::string>());
      auto ib = index.find(pr[1].get<std::string>());
      if (ia == index.end()) raise(Err::unknown_name, "unknown element '" + pr[0].get<std::string>() + "'");
      if (ib == index.end()) raise(Err::unknown_name, "unknown element '" + pr[1].get<std::string>() + "'");
      less.emplace_back(ia->second, ib->second);
    }
  }
  return Poset(std::move(names), less);
}

Poset Poset::parse(const std::string& input) {
  for (char c : input) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(input) : parse_text(input);
  }
  raise(Err::parse, "line 1: empty input");
}

std::string Poset::to_text() const {
  std::string out = "elements:";
  for (const auto& nm : names_) out += " " + nm;
  out += "\ncovers:";
  for (auto [a, b] : cover_pairs()) out += " " + names_[a] + "<" + names_[b];
  out += "\n";
  return out;
}

std::string Poset::to_json() const {
  nlohmann::ordered_json doc;
  doc["elements"] = names_;
  auto& covers = doc["covers"] = nlohmann::ordered_json::array();
  for (auto [a, b] : cover_pairs()) covers.push_back({names_[a], names_[b]});
  return doc.dump();
}

std::string Poset::to_dot() const {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < n_; ++i) out += "  \"" + names_[i] + "\" [label=\"" + names_[i] + "\"];\n";
  for (auto [a, b] : cover_pairs()) out += "  \"" + names_[a] + "\" -> \"" + names_[b] + "\";\n";
  out += "}\n";
  return out;
}

std::string Poset::set_label(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i : bits(m)) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  }
  return out + "}";
}

}  // namespace slat
