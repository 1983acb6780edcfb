#include "coxpath/coxsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxpath {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> names, std::vector<int> entries)
    : names_(std::move(names)), entries_(std::move(entries)) {
  const int n = size();
  if (entries_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("CoxeterMatrix: entry count does not match names");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int m = bond(i, j);
      if (i == j && m != 1)
        throw std::invalid_argument("CoxeterMatrix: diagonal entry must be 1 at " + names_[i]);
      if (i != j && m < 2)
        throw std::invalid_argument("CoxeterMatrix: off-diagonal entry below 2 at (" +
                                    names_[i] + "," + names_[j] + ")");
      if (m != bond(j, i))
        throw std::invalid_argument("CoxeterMatrix: asymmetric at (" + names_[i] + "," +
                                    names_[j] + ") vs (" + names_[j] + "," + names_[i] + ")");
    }
}

int CoxeterMatrix::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool CoxGraph::adjacent(int i, int j) const {
  return edge_index(i, j) >= 0;
}

int CoxGraph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(pos_edges.begin(), pos_edges.end(), std::make_pair(i, j));
  if (it == pos_edges.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - pos_edges.begin());
}

CoxGraph build_graph(const CoxeterMatrix& m) {
  CoxGraph g;
  g.nverts = m.size();
  g.neighbors.resize(g.nverts);
  for (int i = 0; i < g.nverts; ++i)
    for (int j = i + 1; j < g.nverts; ++j)
      if (m.bond(i, j) >= 3) {
        g.pos_edges.emplace_back(i, j);
        g.neighbors[i].push_back(j);
        g.neighbors[j].push_back(i);
      }
  return g;
}

CoxeterMatrix extend_with_apex(const CoxeterMatrix& m) {
  const int n = m.size();
  std::vector<std::string> names = m.names();
  std::string apex = "ap";
  while (std::find(names.begin(), names.end(), apex) != names.end()) apex += "x";
  names.push_back(apex);
  std::vector<int> e((n + 1) * (n + 1), 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i * (n + 1) + j] = m.bond(i, j);
  e[n * (n + 1) + n] = 1;
  return CoxeterMatrix(std::move(names), std::move(e));
}

SystemParseError::SystemParseError(int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + what),
      line(line), col(col) {}

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_bond(const Token& tok, int lineno) {
  if (tok.text == "inf" || tok.text == "oo") return kInfinity;
  int value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw SystemParseError(lineno, tok.col, "bad bond token '" + tok.text + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000)
      throw SystemParseError(lineno, tok.col, "bond out of range '" + tok.text + "'");
  }
  if (tok.text.empty()) throw SystemParseError(lineno, tok.col, "empty bond token");
  return value;
}

} // namespace

CoxeterMatrix parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<Token> names;
  while (std::getline(in, line)) {
    ++lineno;
    names = split_line(line);
    if (!names.empty()) break;
  }
  if (names.empty()) throw SystemParseError(lineno ? lineno : 1, 1, "missing name line");
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i].text == names[j].text)
        throw SystemParseError(lineno, names[j].col, "duplicate name '" + names[j].text + "'");

  std::vector<int> entries;
  std::vector<std::vector<Token>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_line(line);
    if (toks.empty()) continue;
    if (static_cast<int>(toks.size()) != n)
      throw SystemParseError(lineno, toks.back().col,
                             "expected " + std::to_string(n) + " bonds, got " +
                                 std::to_string(toks.size()));
    if (static_cast<int>(rows.size()) == n)
      throw SystemParseError(lineno, toks[0].col, "more than " + std::to_string(n) + " rows");
    rows.push_back(toks);
    for (const auto& t : toks) entries.push_back(parse_bond(t, lineno));
  }
  if (static_cast<int>(rows.size()) != n)
    throw SystemParseError(lineno, 1, "expected " + std::to_string(n) + " rows, got " +
                                          std::to_string(rows.size()));

  // Re-run the structural checks here so the report carries positions.
  for (int i = 0; i < n; ++i) {
    if (entries[i * n + i] != 1)
      throw SystemParseError(i + 2, rows[i][i].col, "diagonal entry must be 1");
    for (int j = 0; j < n; ++j) {
      if (i != j && entries[i * n + j] < 2)
        throw SystemParseError(i + 2, rows[i][j].col, "off-diagonal bond below 2");
      if (entries[i * n + j] != entries[j * n + i])
        throw SystemParseError(i + 2, rows[i][j].col,
                               "asymmetric bond: (" + names[i].text + "," + names[j].text +
                                   ") vs (" + names[j].text + "," + names[i].text + ")");
    }
  }

  std::vector<std::string> name_strs;
  name_strs.reserve(n);
  for (const auto& t : names) name_strs.push_back(t.text);
  return CoxeterMatrix(std::move(name_strs), std::move(entries));
}

std::string render_system(const CoxeterMatrix& m) {
  std::ostringstream out;
  const int n = m.size();
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << m.name(i);
  out << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      if (m.bond(i, j) == kInfinity) out << "inf";
      else out << m.bond(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_dot(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << "graph coxeter {\n";
  for (int i = 0; i < m.size(); ++i) out << "  " << m.name(i) << ";\n";
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.bond(i, j) >= 3) {
        out << "  " << m.name(i) << " -- " << m.name(j) << " [label=\"";
        if (m.bond(i, j) == kInfinity) out << "inf";
        else out << m.bond(i, j);
        out << "\"];\n";
      }
  out << "}\n";
  return out.str();
}

namespace {

std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

CoxeterMatrix chain(int n, int last_bond) {
  if (n < 1) throw std::invalid_argument("preset: rank must be >= 1");
  std::vector<int> e(n * n, 2);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    const int m = (i + 2 == n) ? last_bond : 3;
    e[i * n + (i + 1)] = e[(i + 1) * n + i] = m;
  }
  return CoxeterMatrix(numbered_names(n), std::move(e));
}

} // namespace

CoxeterMatrix preset(const std::string& spec) {
  auto read_suffix = [&](size_t pos, int dflt) {
    if (pos >= spec.size()) return dflt;
    std::string num = spec.substr(pos);
    if (!num.empty() && num.front() == '(' && num.back() == ')')
      num = num.substr(1, num.size() - 2);
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("preset: bad rank in '" + spec + "'");
    if (num.empty()) throw std::invalid_argument("preset: missing rank in '" + spec + "'");
    return std::stoi(num);
  };

  if (spec == "running-example") {
    const std::vector<std::string> names = {"r", "s", "t", "u", "v"};
    const int I = kInfinity;
    std::vector<int> e = {
        1, 3, 2, 4, 2, //
        3, 1, 5, 2, 2, //
        2, 5, 1, 6, 5, //
        4, 2, 6, 1, I, //
        2, 2, 5, I, 1, //
    };
    return CoxeterMatrix(names, std::move(e));
  }
  if (spec == "H3") {
    return CoxeterMatrix({"r", "s", "t"}, {1, 5, 2, //
                                           5, 1, 3, //
                                           2, 3, 1});
  }
  if (spec.rfind("universal", 0) == 0) {
    const int n = read_suffix(9, 3);
    std::vector<int> e(n * n, kInfinity);
    for (int i = 0; i < n; ++i) e[i * n + i] = 1;
    return CoxeterMatrix(numbered_names(n), std::move(e));
  }
  if (spec.rfind("I2", 0) == 0) {
    std::string num = spec.substr(2);
    int m;
    if (num == "(inf)" || num == "inf") m = kInfinity;
    else m = read_suffix(2, -1);
    if (m != kInfinity && m < 3)
      throw std::invalid_argument("preset: I2 bond must be >= 3");
    return CoxeterMatrix({"r", "s"}, {1, m, m, 1});
  }
  if (spec.rfind("A", 0) == 0) return chain(read_suffix(1, -1), 3);
  if (spec.rfind("B", 0) == 0) {
    const int n = read_suffix(1, -1);
    if (n < 2) throw std::invalid_argument("preset: B needs rank >= 2");
    return chain(n, 4);
  }
  throw std::invalid_argument("preset: unknown system '" + spec + "'");
}

} // namespace coxpath
