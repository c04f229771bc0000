#include "hh/presentation.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace hh {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based column of first character
};

// Splits on blanks, remembering columns; '#' has already been stripped.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

int Quiver::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == id) return static_cast<int>(i);
  }
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> Quiver::vertices_by_topo() const {
  std::vector<int> order(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) order[topo_rank[v]] = static_cast<int>(v);
  return order;
}

Presentation Presentation::build(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                 std::vector<std::pair<int, int>> relations, Field field) {
  Presentation p;
  Quiver& q = p.quiver_;
  if (vertices.empty()) throw ParseError(0, 0, "presentation has no vertices");
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) throw ParseError(0, 0, "duplicate vertex '" + vertices[i] + "'");
    }
  }
  q.vertices = std::move(vertices);
  const int nv = q.vertex_count();
  q.out_by_vertex.assign(nv, {});
  q.in_by_vertex.assign(nv, {});
  for (size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (!valid_id(a.id)) throw ParseError(0, 0, "invalid arrow id '" + a.id + "'");
    if (q.vertex_index(a.id) >= 0)
      throw ParseError(0, 0, "arrow id '" + a.id + "' collides with a vertex");
    for (size_t j = 0; j < i; ++j) {
      if (arrows[j].id == a.id) throw ParseError(0, 0, "duplicate arrow '" + a.id + "'");
    }
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
      throw ParseError(0, 0, "arrow '" + a.id + "' has an unknown endpoint");
    q.out_by_vertex[a.source].push_back(static_cast<int>(i));
    q.in_by_vertex[a.target].push_back(static_cast<int>(i));
  }
  q.arrows = std::move(arrows);

  // Kahn's algorithm; ties broken by declaration index so topo_rank is
  // reproducible. A leftover vertex exposes a cycle.
  {
    std::vector<int> indeg(nv, 0);
    for (const Arrow& a : q.arrows) ++indeg[a.target];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < nv; ++v) {
      if (indeg[v] == 0) ready.push(v);
    }
    q.topo_rank.assign(nv, -1);
    int rank = 0;
    while (!ready.empty()) {
      int v = ready.top();
      ready.pop();
      q.topo_rank[v] = rank++;
      for (int ai : q.out_by_vertex[v]) {
        if (--indeg[q.arrows[ai].target] == 0) ready.push(q.arrows[ai].target);
      }
    }
    if (rank != nv) {
      for (int v = 0; v < nv; ++v) {
        if (q.topo_rank[v] < 0)
          throw ParseError(0, 0, "quiver has a cycle through vertex '" + q.vertices[v] + "'");
      }
    }
  }

  const int na = q.arrow_count();
  p.rel_succ_.assign(na, {});
  p.rel_pred_.assign(na, {});
  for (auto [a, b] : relations) {
    if (a < 0 || a >= na || b < 0 || b >= na)
      throw ParseError(0, 0, "relation names an unknown arrow");
    if (q.arrows[a].target != q.arrows[b].source)
      throw ParseError(0, 0, "relation '" + q.arrows[a].id + " " + q.arrows[b].id +
                                 "' is not a composable pair");
    if (!p.relation_set_.insert({a, b}).second)
      throw ParseError(0, 0, "duplicate relation '" + q.arrows[a].id + " " + q.arrows[b].id + "'");
  }
  p.relations_ = std::move(relations);
  for (auto [a, b] : p.relations_) {
    p.rel_succ_[a].push_back(b);
    p.rel_pred_[b].push_back(a);
  }
  for (auto& v : p.rel_succ_) std::sort(v.begin(), v.end());
  for (auto& v : p.rel_pred_) std::sort(v.begin(), v.end());
  p.field_ = field;
  return p;
}

int Presentation::path_source(const Path& p) const { return p.source; }

int Presentation::path_target(const Path& p) const {
  if (p.trivial()) return p.source;
  return quiver_.arrows[p.arrows.back()].target;
}

bool Presentation::valid_path(const Path& p) const {
  if (p.source < 0 || p.source >= quiver_.vertex_count()) return false;
  int at = p.source;
  for (int ai : p.arrows) {
    if (ai < 0 || ai >= quiver_.arrow_count()) return false;
    if (quiver_.arrows[ai].source != at) return false;
    at = quiver_.arrows[ai].target;
  }
  return true;
}

std::string Presentation::label(const Path& p) const {
  if (p.trivial()) return "e_" + quiver_.vertices[p.source];
  std::string out;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ' ';
    out += quiver_.arrows[p.arrows[i]].id;
  }
  return out;
}

std::string Presentation::chain_label(const Path& p) const { return label(p); }

std::string Presentation::emit() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : quiver_.vertices) out << ' ' << v;
  out << '\n';
  for (const Arrow& a : quiver_.arrows) {
    out << "arrow: " << a.id << ' ' << quiver_.vertices[a.source] << ' '
        << quiver_.vertices[a.target] << '\n';
  }
  std::vector<std::pair<int, int>> rels = relations_;
  std::sort(rels.begin(), rels.end());
  for (auto [a, b] : rels) {
    out << "relation: " << quiver_.arrows[a].id << ' ' << quiver_.arrows[b].id << '\n';
  }
  if (!field_.rational()) out << "field: " << field_.name() << '\n';
  return out.str();
}

std::string Presentation::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : emit()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> relations;
  Field field = Field::rationals();
  bool field_seen = false;

  // Names are resolved during the scan so errors carry the offending token's
  // position; global checks (acyclicity) run in build() afterwards.
  auto vertex_of = [&](const std::string& id) {
    for (size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == id) return static_cast<int>(i);
    }
    return -1;
  };
  auto arrow_of = [&](const std::string& id) {
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].id == id) return static_cast<int>(i);
    }
    return -1;
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;

    const Token& head = toks[0];
    if (head.text.back() != ':')
      throw ParseError(lineno, head.col, "expected a directive ending in ':'");
    std::string directive = head.text.substr(0, head.text.size() - 1);

    if (directive == "vertices") {
      if (toks.size() < 2) throw ParseError(lineno, head.col, "'vertices:' lists no vertices");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_id(toks[i].text))
          throw ParseError(lineno, toks[i].col, "invalid vertex id '" + toks[i].text + "'");
        if (vertex_of(toks[i].text) >= 0)
          throw ParseError(lineno, toks[i].col, "duplicate vertex '" + toks[i].text + "'");
        vertices.push_back(toks[i].text);
      }
    } else if (directive == "arrow") {
      if (toks.size() != 4)
        throw ParseError(lineno, head.col, "'arrow:' needs exactly: id source target");
      if (!valid_id(toks[1].text))
        throw ParseError(lineno, toks[1].col, "invalid arrow id '" + toks[1].text + "'");
      if (arrow_of(toks[1].text) >= 0 || vertex_of(toks[1].text) >= 0)
        throw ParseError(lineno, toks[1].col, "id '" + toks[1].text + "' is already taken");
      int s = vertex_of(toks[2].text);
      if (s < 0) throw ParseError(lineno, toks[2].col, "unknown vertex '" + toks[2].text + "'");
      int t = vertex_of(toks[3].text);
      if (t < 0) throw ParseError(lineno, toks[3].col, "unknown vertex '" + toks[3].text + "'");
      arrows.push_back({toks[1].text, s, t});
    } else if (directive == "relation") {
      if (toks.size() != 3)
        throw ParseError(lineno, head.col, "'relation:' needs exactly two arrow ids");
      int a = arrow_of(toks[1].text);
      if (a < 0) throw ParseError(lineno, toks[1].col, "unknown arrow '" + toks[1].text + "'");
      int b = arrow_of(toks[2].text);
      if (b < 0) throw ParseError(lineno, toks[2].col, "unknown arrow '" + toks[2].text + "'");
      if (arrows[a].target != arrows[b].source)
        throw ParseError(lineno, toks[1].col, "relation '" + toks[1].text + " " + toks[2].text +
                                                  "' is not a composable pair");
      if (std::find(relations.begin(), relations.end(), std::make_pair(a, b)) != relations.end())
        throw ParseError(lineno, toks[1].col,
                         "duplicate relation '" + toks[1].text + " " + toks[2].text + "'");
      relations.emplace_back(a, b);
    } else if (directive == "field") {
      if (toks.size() != 2) throw ParseError(lineno, head.col, "'field:' needs one value");
      if (field_seen) throw ParseError(lineno, head.col, "'field:' given twice");
      try {
        field = Field::parse(toks[1].text);
      } catch (const std::exception& e) {
        throw ParseError(lineno, toks[1].col, e.what());
      }
      field_seen = true;
    } else {
      throw ParseError(lineno, head.col, "unknown directive '" + directive + ":'");
    }
  }
  if (vertices.empty()) throw ParseError(lineno, 1, "presentation has no vertices");
  try {
    return Presentation::build(std::move(vertices), std::move(arrows), std::move(relations), field);
  } catch (const ParseError& e) {
    throw ParseError(lineno, 1, e.what());  // attach end-of-input position to global errors
  }
}

std::optional<Path> compose(const Presentation& p, const Path& a, const Path& b) {
  if (p.path_target(a) != b.source) return std::nullopt;
  Path out;
  out.source = a.source;
  out.arrows = a.arrows;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

ClassReport classify(const Presentation& p) {
  const Quiver& q = p.quiver();
  ClassReport r;
  r.triangular = true;  // acyclicity is enforced at construction

  r.s2 = true;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2 || q.in_arrows(v).size() > 2) {
      r.s2 = false;
      r.witnesses["S2"] = "vertex " + q.vertices[v] + " has " +
                          std::to_string(q.out_arrows(v).size()) + " arrows out and " +
                          std::to_string(q.in_arrows(v).size()) + " in";
      break;
    }
  }

  r.s3 = true;
  for (int a = 0; a < q.arrow_count() && r.s3; ++a) {
    std::vector<std::string> cont, pred;
    for (int b : q.out_arrows(q.arrows[a].target)) {
      if (!p.has_relation(a, b)) cont.push_back(q.arrows[b].id);
    }
    for (int c : q.in_arrows(q.arrows[a].source)) {
      if (!p.has_relation(c, a)) pred.push_back(q.arrows[c].id);
    }
    if (cont.size() > 1) {
      r.s3 = false;
      r.witnesses["S3"] = "arrow " + q.arrows[a].id + " has relation-free continuations " +
                          cont[0] + " and " + cont[1];
    } else if (pred.size() > 1) {
      r.s3 = false;
      r.witnesses["S3"] = "arrow " + q.arrows[a].id + " has relation-free predecessors " +
                          pred[0] + " and " + pred[1];
    }
  }

  r.g1 = true;
  for (int a = 0; a < q.arrow_count() && r.g1; ++a) {
    if (p.rel_successors(a).size() > 1) {
      r.g1 = false;
      r.witnesses["G1"] = "arrow " + q.arrows[a].id + " starts " +
                          std::to_string(p.rel_successors(a).size()) + " relations";
    } else if (p.rel_predecessors(a).size() > 1) {
      r.g1 = false;
      r.witnesses["G1"] = "arrow " + q.arrows[a].id + " ends " +
                          std::to_string(p.rel_predecessors(a).size()) + " relations";
    }
  }

  r.string_algebra = r.s2 && r.s3;
  r.gentle = r.string_algebra && r.g1;
  return r;
}

}  // namespace hh
