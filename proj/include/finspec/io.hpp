#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "finspec/duality.hpp"
#include "finspec/lattice.hpp"
#include "finspec/poset.hpp"
#include "finspec/sweep.hpp"
#include "finspec/theorems.hpp"
#include "json.hpp"

// Text, JSON and DOT formats.
//
//   poset <n>            lattice <n>
//   <i> < <j>            <i> < <j>
//   ...                  bottom <i>   (optional)
//                        top <j>      (optional)
//
// Blank lines and everything after '#' are ignored. Relation lines may list
// covers or any generating pairs. The JSON forms are
//   {"size": n, "less_than": [[i, j], ...]}
//   {"kind": "lattice", "size": n, "less_than": [...], "bottom": i, "top": j}

namespace finspec::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

using Structure = std::variant<Poset, Lattice>;

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] inline void fail_at(std::size_t line, const std::string& msg) {
  throw MalformedInput("line " + std::to_string(line) + ": " + msg);
}

inline std::size_t parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail_at(line, "expected a non-negative integer, got '" + token + "'");
  }
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    fail_at(line, "integer out of range: '" + token + "'");
  }
}

inline Structure parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::string kind;
  std::size_t size = 0;
  std::vector<Relation> rel;
  std::optional<Element> bottom, top;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream words(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (kind.empty()) {
      if (tok.size() != 2 || (tok[0] != "poset" && tok[0] != "lattice")) {
        fail_at(line_no, "expected header 'poset <n>' or 'lattice <n>'");
      }
      kind = tok[0];
      size = parse_index(tok[1], line_no);
      continue;
    }
    if (tok.size() == 3 && tok[1] == "<") {
      const std::size_t a = parse_index(tok[0], line_no);
      const std::size_t b = parse_index(tok[2], line_no);
      if (a >= size || b >= size) {
        fail_at(line_no, "index out of range for " + std::to_string(size) + " elements");
      }
      rel.emplace_back(a, b);
    } else if (kind == "lattice" && tok.size() == 2 && (tok[0] == "bottom" || tok[0] == "top")) {
      const std::size_t e = parse_index(tok[1], line_no);
      if (e >= size) fail_at(line_no, "index out of range for " + std::to_string(size) + " elements");
      (tok[0] == "bottom" ? bottom : top) = e;
    } else {
      fail_at(line_no, "expected '<i> < <j>'" + std::string(kind == "lattice" ? ", 'bottom <i>' or 'top <j>'" : ""));
    }
  }
  if (kind.empty()) throw MalformedInput("line " + std::to_string(line_no + 1) + ": missing header");
  if (kind == "poset") return Poset(size, rel);
  return Lattice(size, rel, bottom, top);
}

inline Structure parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.value("kind", std::string("poset"));
    const std::size_t size = j.at("size").get<std::size_t>();
    std::vector<Relation> rel;
    for (const auto& pair : j.value("less_than", json::array())) {
      if (!pair.is_array() || pair.size() != 2) throw MalformedInput("less_than entries must be [i, j] pairs");
      rel.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
    if (kind == "poset") return Poset(size, rel);
    if (kind != "lattice") throw MalformedInput("unknown kind '" + kind + "'");
    std::optional<Element> bottom, top;
    if (j.contains("bottom")) bottom = j["bottom"].get<std::size_t>();
    if (j.contains("top")) top = j["top"].get<std::size_t>();
    return Lattice(size, rel, bottom, top);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad JSON structure: ") + e.what());
  }
}

}  // namespace detail

/// Parses either format; JSON is recognized by a leading '{'.
inline Structure parse(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return detail::parse_json(text);
  return detail::parse_text(text);
}

inline Poset parse_poset(const std::string& text) {
  Structure s = parse(text);
  if (auto* p = std::get_if<Poset>(&s)) return std::move(*p);
  throw MalformedInput("expected a poset, got a lattice");
}

inline Lattice parse_lattice(const std::string& text) {
  Structure s = parse(text);
  if (auto* l = std::get_if<Lattice>(&s)) return std::move(*l);
  throw MalformedInput("expected a lattice, got a poset");
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// Two minimal points under one maximal point.
inline Poset v3() { return Poset(3, {{0, 2}, {1, 2}}); }
/// One minimal point under two maximal points.
inline Poset l3() { return Poset(3, {{0, 1}, {0, 2}}); }
inline Poset c2() { return Poset::chain(2); }
inline Poset a2() { return Poset::antichain(2); }
/// Diamond 0 < 1, 2 < 3.
inline Poset d4() { return Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

/// Resolves v3, l3, c2, a2, d4, m3, n5, chain<k> and bool<k> (case-insensitive).
inline std::optional<Structure> fixture(const std::string& name) {
  const std::string n = detail::lower(name);
  if (n == "v3") return v3();
  if (n == "l3") return l3();
  if (n == "c2") return c2();
  if (n == "a2") return a2();
  if (n == "d4") return d4();
  if (n == "m3") return m3_lattice();
  if (n == "n5") return n5_lattice();
  auto numbered = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (n.size() <= prefix.size() || n.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    const std::string digits = n.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) || digits.size() > 4) {
      return std::nullopt;
    }
    return std::stoul(digits);
  };
  if (auto k = numbered("chain")) {
    if (*k == 0) throw MalformedInput("chain0 is not a lattice");
    return chain_lattice(*k);
  }
  if (auto k = numbered("bool")) return boolean_lattice(*k);
  return std::nullopt;
}

/// A built-in fixture name, or else a file path.
inline Structure load(const std::string& source) {
  if (auto f = fixture(source)) return std::move(*f);
  std::ifstream in(source);
  if (!in) throw MalformedInput("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

// ---------------------------------------------------------------------------
// Emitters
// ---------------------------------------------------------------------------

inline std::string to_text(const Poset& p) {
  std::string out = "poset " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

inline std::string to_text(const Lattice& l) {
  std::string out = "lattice " + std::to_string(l.size()) + "\n";
  for (auto [a, b] : l.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  out += "bottom " + std::to_string(l.bottom()) + "\n";
  out += "top " + std::to_string(l.top()) + "\n";
  return out;
}

inline json to_json(const Poset& p) {
  json rel = json::array();
  for (auto [a, b] : p.covers()) rel.push_back({a, b});
  return json{{"size", p.size()}, {"less_than", rel}};
}

inline json to_json(const Lattice& l) {
  json rel = json::array();
  for (auto [a, b] : l.covers()) rel.push_back({a, b});
  return json{{"kind", "lattice"}, {"size", l.size()}, {"less_than", rel}, {"bottom", l.bottom()}, {"top", l.top()}};
}

namespace detail {

inline std::string dot_graph(const std::string& name, std::size_t size, const std::vector<Relation>& covers,
                             const std::vector<std::string>& labels) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < size; ++i) {
    out += "  " + std::to_string(i);
    if (!labels.empty()) out += " [label=\"" + labels[i] + "\"]";
    out += ";\n";
  }
  for (auto [a, b] : covers) out += "  " + std::to_string(a) + " -> " + std::to_string(b) + " [dir=none];\n";
  return out + "}\n";
}

}  // namespace detail

/// Hasse diagram, covers only, maximal points drawn on top.
inline std::string to_dot(const Poset& p) { return detail::dot_graph("poset", p.size(), p.covers(), {}); }
inline std::string to_dot(const Lattice& l) { return detail::dot_graph("lattice", l.size(), l.covers(), {}); }
inline std::string to_dot(const SetLattice& l) {
  std::vector<std::string> labels;
  for (PointSet s : l.members) labels.push_back(to_string(s));
  return detail::dot_graph("lattice", l.lattice.size(), l.lattice.covers(), labels);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const ConditionReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    json verdicts = json::array();
    for (const auto& v : g.verdicts) verdicts.push_back({{"label", v.label}, {"value", v.value}});
    groups.push_back({{"name", g.name},
                      {"hypothesis", g.hypothesis},
                      {"agreement", g.agreement()},
                      {"verdicts", verdicts}});
  }
  json out{{"schema", kSchemaVersion},
           {"kind", "report"},
           {"theorem", r.theorem},
           {"hypothesis_satisfied", r.hypothesis_satisfied()},
           {"agreement", r.agreement()},
           {"groups", groups}};
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return out;
}

inline ConditionReport report_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw MalformedInput("unsupported report schema");
    ConditionReport r;
    r.theorem = j.at("theorem").get<std::string>();
    for (const auto& g : j.at("groups")) {
      ConditionGroup group{g.at("name").get<std::string>(), g.at("hypothesis").get<bool>(), {}};
      for (const auto& v : g.at("verdicts")) {
        group.verdicts.push_back({v.at("label").get<std::string>(), v.at("value").get<bool>()});
      }
      if (group.agreement() != g.at("agreement").get<bool>()) {
        throw MalformedInput("group " + group.name + " carries an inconsistent agreement flag");
      }
      r.groups.push_back(std::move(group));
    }
    if (!j.at("witness").is_null()) r.witness = j["witness"].get<std::string>();
    if (r.agreement() != j.at("agreement").get<bool>()) throw MalformedInput("inconsistent agreement flag");
    return r;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad report JSON: ") + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string to_text(const ConditionReport& r) {
  std::size_t width = 0;
  for (const auto& g : r.groups) {
    for (const auto& v : g.verdicts) width = std::max(width, v.label.size());
  }
  std::ostringstream out;
  out << "report " << r.theorem << "\n";
  for (const auto& g : r.groups) {
    out << "  group " << g.name << " (hypothesis " << yes_no(g.hypothesis) << ")\n";
    for (const auto& v : g.verdicts) {
      out << "    " << v.label << std::string(width - v.label.size() + 2, ' ') << yes_no(v.value) << "\n";
    }
    out << "    agreement" << std::string(width >= 9 ? width - 9 + 2 : 2, ' ') << yes_no(g.agreement())
        << (g.hypothesis ? "" : " (not asserted)") << "\n";
  }
  out << "  agreement: " << yes_no(r.agreement()) << "\n";
  if (r.witness) out << "  witness: " << *r.witness << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

inline std::vector<std::pair<std::string, bool>> profile_entries(const LatticeProfile& p) {
  return {{"distributive", p.distributive},   {"boolean", p.boolean},
          {"heyting", p.heyting},             {"stone", p.stone},
          {"pseudocomplemented", p.pseudocomplemented},
          {"minimal_primes_coprime", p.minimal_primes_coprime}};
}

inline std::vector<std::pair<std::string, bool>> profile_entries(const PosetProfile& p) {
  auto out = profile_entries(p.lattice);
  out.insert(out.end(), {{"root_system", p.root_system},
                         {"forest", p.forest},
                         {"stranded", p.stranded},
                         {"confluent", p.confluent},
                         {"inv_normal", p.inv_normal},
                         {"normal", p.normal}});
  return out;
}

template <typename Profile>
json profile_to_json(const Profile& p, const std::string& subject) {
  json values = json::object();
  for (const auto& [k, v] : profile_entries(p)) values[k] = v;
  const LatticeProfile* lat = nullptr;
  if constexpr (std::is_same_v<Profile, PosetProfile>) lat = &p.lattice;
  else lat = &p;
  json out{{"schema", kSchemaVersion}, {"kind", "profile"}, {"subject", subject}, {"profile", values}};
  if (lat->non_coprime_witness) {
    out["non_coprime_minimal_primes"] = {to_string(lat->non_coprime_witness->first),
                                         to_string(lat->non_coprime_witness->second)};
  }
  return out;
}

template <typename Profile>
std::string profile_to_text(const Profile& p, const std::string& subject) {
  std::ostringstream out;
  out << "profile of " << subject << "\n";
  for (const auto& [k, v] : profile_entries(p)) {
    out << "  " << k << std::string(24 - k.size(), ' ') << yes_no(v) << "\n";
  }
  const LatticeProfile* lat = nullptr;
  if constexpr (std::is_same_v<Profile, PosetProfile>) lat = &p.lattice;
  else lat = &p;
  if (lat->non_coprime_witness) {
    out << "  non-coprime minimal primes: " << to_string(lat->non_coprime_witness->first) << " and "
        << to_string(lat->non_coprime_witness->second) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Sweep summaries
// ---------------------------------------------------------------------------

inline json to_json(const SweepSummary& s) {
  json sizes = json::array();
  for (const auto& row : s.sizes) {
    json dis = json::object();
    for (const auto& c : sweep_checks()) dis[c] = row.disagreements.at(c);
    json cls = json::object();
    for (const auto& c : sweep_classes()) cls[c] = row.class_counts.at(c);
    sizes.push_back({{"size", row.size},
                     {"posets", row.posets},
                     {"disagreements", row.total_disagreements()},
                     {"disagreements_by_check", dis},
                     {"class_counts", cls}});
  }
  json ce = json::array();
  for (const auto& c : s.first_counterexamples) {
    ce.push_back({{"property", c.property}, {"size", c.poset.size()}, {"poset", to_json(c.poset)}, {"detail", c.detail}});
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "sweep"},
              {"mode", s.mode == EnumerationMode::labeled ? "labeled" : "unlabeled"},
              {"n_max", s.n_max},
              {"posets", s.total_posets()},
              {"disagreements", s.total_disagreements()},
              {"sizes", sizes},
              {"first_counterexamples", ce}};
}

inline std::string to_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "sweep up to " << s.n_max << " points ("
      << (s.mode == EnumerationMode::labeled ? "labeled" : "unlabeled") << ")\n";
  for (const auto& row : s.sizes) {
    out << "n=" << row.size << ": " << row.posets << " posets, " << row.total_disagreements() << " disagreements\n";
  }
  out << "total: " << s.total_posets() << " posets, " << s.total_disagreements() << " disagreements\n";

  out << "\nclass counts\n  " << std::string(20, ' ');
  for (const auto& row : s.sizes) out << std::string(8 - std::min<std::size_t>(8, std::to_string(row.size).size() + 2), ' ') << "n=" << row.size;
  out << "\n";
  for (const auto& cls : sweep_classes()) {
    out << "  " << cls << std::string(20 - cls.size(), ' ');
    for (const auto& row : s.sizes) {
      const std::string v = std::to_string(row.class_counts.at(cls));
      out << std::string(8 - std::min<std::size_t>(8, v.size()), ' ') << v;
    }
    out << "\n";
  }

  out << "\ndisagreements by check\n";
  for (const auto& c : sweep_checks()) {
    std::size_t t = 0;
    for (const auto& row : s.sizes) t += row.disagreements.at(c);
    out << "  " << c << std::string(24 - c.size(), ' ') << t << "\n";
  }

  out << "\nfirst counterexamples\n";
  if (s.first_counterexamples.empty()) out << "  none\n";
  for (const auto& c : s.first_counterexamples) {
    out << "  " << c.property << ": " << c.poset.size() << " points, covers";
    const auto covers = c.poset.covers();
    if (covers.empty()) out << " none";
    for (auto [a, b] : covers) out << " " << a << "<" << b;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace finspec::io
