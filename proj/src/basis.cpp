#include "hh/basis.hpp"

#include <cassert>

namespace hh {

PathBasis::PathBasis(const Presentation& p) : pres_(&p) {
  const Quiver& q = p.quiver();
  std::vector<Path> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Path t;
    t.source = v;
    paths_.push_back(t);
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    Path one;
    one.source = q.arrows[a].source;
    one.arrows = {a};
    frontier.push_back(one);
  }
  // Extend length by length; a frontier in lexicographic order stays
  // lexicographic because out_arrows() lists arrows in declaration order.
  while (!frontier.empty()) {
    paths_.insert(paths_.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const Path& w : frontier) {
      int last = w.arrows.back();
      for (int b : q.out_arrows(q.arrows[last].target)) {
        if (p.has_relation(last, b)) continue;
        Path ext = w;
        ext.arrows.push_back(b);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  for (size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = static_cast<int>(i);
  bucket_.assign(q.vertex_count(), std::vector<std::vector<int>>(q.vertex_count()));
  for (size_t i = 0; i < paths_.size(); ++i) {
    bucket_[paths_[i].source][p.path_target(paths_[i])].push_back(static_cast<int>(i));
  }
}

int PathBasis::index_of(const Path& q) const {
  auto it = index_.find(q);
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> PathBasis::multiply(int i, int j) const {
  const Path& a = paths_[i];
  const Path& b = paths_[j];
  if (pres_->path_target(a) != b.source) return std::nullopt;
  if (!a.trivial() && !b.trivial() && pres_->has_relation(a.arrows.back(), b.arrows.front()))
    return std::nullopt;
  Path c;
  c.source = a.source;
  c.arrows = a.arrows;
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  int k = index_of(c);
  assert(k >= 0);  // both factors avoid relations, the junction was checked
  return k;
}

const std::vector<int>& PathBasis::from_to(int s, int t) const { return bucket_[s][t]; }

const std::vector<Path> Algebra::empty_{};

Algebra::Algebra(Presentation p) : pres_(std::move(p)), basis_(pres_) {
  const Quiver& q = pres_.quiver();
  std::vector<Path> level;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Path t;
    t.source = v;
    level.push_back(t);
  }
  chains_.push_back(level);
  level.clear();
  for (int a = 0; a < q.arrow_count(); ++a) {
    Path one;
    one.source = q.arrows[a].source;
    one.arrows = {a};
    level.push_back(one);
  }
  while (!level.empty()) {
    chains_.push_back(level);
    std::vector<Path> next;
    for (const Path& c : level) {
      for (int b : pres_.rel_successors(c.arrows.back())) {
        Path ext = c;
        ext.arrows.push_back(b);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  max_chain_ = static_cast<int>(chains_.size()) - 1;
  chain_idx_.resize(chains_.size());
  for (size_t n = 0; n < chains_.size(); ++n) {
    for (size_t i = 0; i < chains_[n].size(); ++i) {
      chain_idx_[n][chains_[n][i]] = static_cast<int>(i);
    }
  }
}

const std::vector<Path>& Algebra::chains(int n) const {
  if (n < 0 || n > max_chain_) return empty_;
  return chains_[n];
}

int Algebra::chain_index(int n, const Path& c) const {
  if (n < 0 || n > max_chain_) return -1;
  auto it = chain_idx_[n].find(c);
  return it == chain_idx_[n].end() ? -1 : it->second;
}

}  // namespace hh
