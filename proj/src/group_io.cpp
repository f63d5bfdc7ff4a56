#include "igconn/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "igconn/error.hpp"

namespace igconn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::vector<std::uint32_t>> parse_cycle_lists(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        ++i;
      }
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000) fail("point too large");
        ++i;
      }
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    auto r = g.row(a);
    rows.push_back(std::vector<std::uint32_t>(r.begin(), r.end()));
  }
  return {{"label", g.label()}, {"order", g.order()}, {"table", std::move(rows)}};
}

FiniteGroup group_from_json(const nlohmann::json& j, std::size_t associativity_bound) {
  if (!j.is_object()) throw InputError("group record is not a JSON object");
  if (!j.contains("order") || !j["order"].is_number_unsigned()) {
    throw InputError("group record lacks a positive integer 'order'");
  }
  if (!j.contains("table") || !j["table"].is_array()) {
    throw InputError("group record lacks a 'table' array");
  }
  const auto n = j["order"].get<std::size_t>();
  const auto& rows = j["table"];
  if (rows.size() != n) {
    throw InputError("table has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  }
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw InputError("table row " + std::to_string(r) + " does not have " + std::to_string(n) +
                       " entries");
    }
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) {
        throw InputError("table row " + std::to_string(r) + " has a non-index entry");
      }
      flat.push_back(v.get<std::uint32_t>());
    }
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError("'label' must be a string");
    label = j["label"].get<std::string>();
  }
  return FiniteGroup::from_table(std::move(flat), n, std::move(label), Trust::verify,
                                 associativity_bound);
}

std::vector<FiniteGroup> parse_group_tables(std::string_view text, std::size_t associativity_bound) {
  std::vector<FiniteGroup> out;
  const auto body = trim(text);
  if (body.empty()) throw InputError("group file is empty");
  if (body.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      try {
        out.push_back(group_from_json(doc[i], associativity_bound));
      } catch (const InputError& e) {
        throw InputError("group #" + std::to_string(i) + ": " + e.what());
      }
    }
    return out;
  }
  // One object per line, or a single object spread over several lines.
  std::istringstream in{std::string(body)};
  std::string line;
  std::size_t lineno = 0;
  bool line_mode = true;
  std::vector<std::pair<std::size_t, nlohmann::json>> docs;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      docs.emplace_back(lineno, nlohmann::json::parse(t));
    } catch (const nlohmann::json::parse_error&) {
      line_mode = false;
      break;
    }
  }
  if (!line_mode) {
    docs.clear();
    try {
      docs.emplace_back(1, nlohmann::json::parse(body));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  for (auto& [ln, doc] : docs) {
    try {
      out.push_back(group_from_json(doc, associativity_bound));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<FiniteGroup> read_group_tables(const std::filesystem::path& path,
                                           std::size_t associativity_bound) {
  try {
    return parse_group_tables(read_text_file(path), associativity_bound);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<char> seen(degree, 0);
  for (const auto& cycle : parse_cycle_lists(text)) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = cycle[i];
      if (a >= degree) throw InputError("point " + std::to_string(a) + " exceeds degree");
      if (seen[a]) throw InputError("point " + std::to_string(a) + " repeated in cycle notation");
      seen[a] = 1;
      p[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

PermutationSet parse_permutation_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::optional<std::size_t> declared;
  std::size_t max_point = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    if (t.rfind("degree", 0) == 0) {
      const auto num = trim(t.substr(6));
      std::size_t d = 0;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw InputError("line " + std::to_string(lineno) + ": bad degree");
        }
        d = d * 10 + static_cast<std::size_t>(c - '0');
      }
      if (d == 0) throw InputError("line " + std::to_string(lineno) + ": bad degree");
      declared = d;
      continue;
    }
    try {
      for (const auto& cycle : parse_cycle_lists(t)) {
        for (auto v : cycle) max_point = std::max<std::size_t>(max_point, v);
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    lines.emplace_back(lineno, std::string(t));
  }
  PermutationSet out;
  out.degree = declared.value_or(max_point + 1);
  for (const auto& [ln, line] : lines) {
    try {
      out.generators.push_back(parse_cycles(line, out.degree));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return out;
}

PermutationSet read_permutation_file(const std::filesystem::path& path) {
  try {
    return parse_permutation_file(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace igconn
