// Monomial basis of A = kQ/I and the sets of relation chains.
//
// A path is nonzero in A exactly when no two consecutive arrows form a
// relation; those paths are a k-basis. A chain of degree n is the opposite
// extreme: a path whose consecutive pairs are ALL relations (degree 0:
// trivial paths, degree 1: arrows).

#pragma once

#include <optional>
#include <vector>

#include "hh/presentation.hpp"

namespace hh {

class PathBasis {
 public:
  explicit PathBasis(const Presentation& p);

  // All nonzero paths ordered by (length, arrow sequence); trivial paths
  // first, in vertex declaration order.
  const std::vector<Path>& paths() const { return paths_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(int i) const { return paths_[i]; }
  int index_of(const Path& q) const;  // -1 when q is zero in A / not a path

  // Product of basis elements; nullopt means zero in A (endpoint mismatch or
  // a relation at the junction).
  std::optional<int> multiply(int i, int j) const;

  // Indices of nonzero paths from s to t, ascending.
  const std::vector<int>& from_to(int s, int t) const;

 private:
  const Presentation* pres_;
  std::vector<Path> paths_;
  std::map<Path, int> index_;
  std::vector<std::vector<std::vector<int>>> bucket_;
};

// Everything degree computations need, built once per presentation.
class Algebra {
 public:
  explicit Algebra(Presentation p);

  const Presentation& pres() const { return pres_; }
  const PathBasis& basis() const { return basis_; }

  // Chains of degree n in lexicographic order; empty for n past the last
  // nonempty degree (windows of chains are chains, so there are no gaps).
  const std::vector<Path>& chains(int n) const;
  int chain_index(int n, const Path& c) const;  // -1 when absent
  int max_chain_length() const { return max_chain_; }

 private:
  Presentation pres_;
  PathBasis basis_;
  std::vector<std::vector<Path>> chains_;
  std::vector<std::map<Path, int>> chain_idx_;
  int max_chain_ = 0;
  static const std::vector<Path> empty_;
};

}  // namespace hh
