// Bound-quiver presentations: finite acyclic quivers with quadratic monomial
// relations (each relation is a composable pair of arrows), over Q or F_p.
//
// Text format, one directive per line, '#' starts a comment:
//   vertices: 1 2 3
//   arrow: a 1 2
//   arrow: b 2 3
//   relation: a b
//   field: F5            (optional, default Q)

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hh/linalg.hpp"

namespace hh {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
};

struct Arrow {
  std::string id;
  int source = -1;
  int target = -1;
};

// A path in the quiver: the empty arrow list is the trivial path at `source`.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }

  bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
  bool operator<(const Path& o) const {
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }
};

struct Quiver {
  std::vector<std::string> vertices;  // declaration order
  std::vector<Arrow> arrows;          // declaration order
  std::vector<int> topo_rank;         // vertex -> position in topological order
  std::vector<std::vector<int>> out_by_vertex;  // arrow indices, declaration order
  std::vector<std::vector<int>> in_by_vertex;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& id) const;  // -1 when unknown
  int arrow_index(const std::string& id) const;
  const std::vector<int>& out_arrows(int v) const { return out_by_vertex[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_by_vertex[v]; }

  std::vector<int> vertices_by_topo() const;
};

class Presentation {
 public:
  // Validates everything: unique ids, known endpoints, acyclicity, relation
  // composability, no duplicate relations. Throws ParseError on violation
  // (line/col 0 for non-textual construction).
  static Presentation build(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                            std::vector<std::pair<int, int>> relations,
                            Field field = Field::rationals());

  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }
  const Field& field() const { return field_; }

  bool has_relation(int a, int b) const { return relation_set_.count({a, b}) > 0; }
  // Arrows b with (a, b) a relation, in declaration order.
  const std::vector<int>& rel_successors(int a) const { return rel_succ_[a]; }
  const std::vector<int>& rel_predecessors(int b) const { return rel_pred_[b]; }

  int path_source(const Path& p) const;
  int path_target(const Path& p) const;
  bool valid_path(const Path& p) const;

  std::string label(const Path& p) const;        // "e_v" or "a b c"
  std::string chain_label(const Path& p) const;  // same rendering, for chains

  // Canonical text form; parsing it back yields an equal presentation.
  std::string emit() const;
  // FNV-1a hash of emit(), as 16 hex digits.
  std::string digest() const;

 private:
  Quiver quiver_;
  std::vector<std::pair<int, int>> relations_;
  Field field_;
  std::set<std::pair<int, int>> relation_set_;
  std::vector<std::vector<int>> rel_succ_;
  std::vector<std::vector<int>> rel_pred_;
};

Presentation parse_presentation(const std::string& text);

// Total path composition; nullopt when target(a) != source(b).
std::optional<Path> compose(const Presentation& p, const Path& a, const Path& b);

struct ClassReport {
  bool triangular = false;
  bool s2 = false;      // every vertex has at most 2 arrows in and 2 out
  bool s3 = false;      // each arrow has at most one relation-free continuation
                        // and at most one relation-free predecessor
  bool g1 = false;      // each arrow sits in at most one relation on each side
  bool string_algebra = false;  // s2 && s3 (monomial and quadratic by construction)
  bool gentle = false;          // string && g1
  std::map<std::string, std::string> witnesses;  // flag -> violating tuple
};

ClassReport classify(const Presentation& p);

}  // namespace hh
