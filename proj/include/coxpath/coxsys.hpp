#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxpath {

/* Bond label m_{ij}: 1 on the diagonal, >= 2 off it, kInfinity for the
 * unbounded bond.  Using INT_MAX keeps the usual comparisons (m >= 3,
 * m < kInfinity) honest. */
constexpr int kInfinity = std::numeric_limits<int>::max();

class CoxeterMatrix {
public:
  CoxeterMatrix() = default;
  CoxeterMatrix(std::vector<std::string> names, std::vector<int> entries);

  int size() const { return static_cast<int>(names_.size()); }
  int bond(int i, int j) const { return entries_[i * size() + j]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const; // -1 if unknown

  bool operator==(const CoxeterMatrix& o) const = default;

private:
  std::vector<std::string> names_;
  std::vector<int> entries_; // row-major, size() * size()
};

/* The graph has an edge between i and j exactly when m_{ij} >= 3.  Each
 * geometric edge {i,j} appears once in pos_edges as (i,j) with i < j; the
 * reversed copy is implicit. */
struct CoxGraph {
  int nverts = 0;
  std::vector<std::pair<int, int>> pos_edges;  // sorted lexicographically
  std::vector<std::vector<int>> neighbors;     // sorted adjacency lists

  bool adjacent(int i, int j) const;
  int edge_index(int i, int j) const; // index into pos_edges of {i,j}, -1 if none
};

CoxGraph build_graph(const CoxeterMatrix& m);

/* New generator with bond 3 to every existing one; the apex takes the last
 * index. */
CoxeterMatrix extend_with_apex(const CoxeterMatrix& m);

struct SystemParseError : std::runtime_error {
  SystemParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

/* Text format: first line the generator names, then one line per generator
 * with the bond row; "inf" (or "oo") marks the unbounded bond. */
CoxeterMatrix parse_system(const std::string& text);
std::string render_system(const CoxeterMatrix& m);

std::string render_dot(const CoxeterMatrix& m);

/* Built-in families: "A3", "B2", "H3", "I2(5)", "universal" (optionally
 * "universal4"), "running-example". */
CoxeterMatrix preset(const std::string& spec);

} // namespace coxpath
