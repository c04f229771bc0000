// The minimal Hochschild cochain complex of A = kQ/I.
//
// C^n has basis B^n = {(c, p)} with c a degree-n chain and p a nonzero path
// parallel to c; degree 0 pairs each trivial path with itself. The
// differential acts by
//   (delta^n f)(a_1...a_{n+1}) = a_1 f(a_2...a_{n+1})
//                              + (-1)^{n+1} f(a_1...a_n) a_{n+1}
// with products taken in A. Each basis element is classed minus/zero/plus by
// whether its value starts with the chain's first arrow (minus wins) or ends
// with its last.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hh/basis.hpp"
#include "hh/linalg.hpp"

namespace hh {

enum class TriType { minus, zero, plus };

struct CochainBasisElement {
  Path chain;
  Path value;  // index into PathBasis kept alongside for product work
  int value_index = -1;
  TriType tri_type = TriType::zero;
};

// Sparse coefficient vector over B^n. No stored zero coefficients.
struct Cochain {
  int degree = 0;
  std::map<int, Scalar> coeffs;

  bool zero() const { return coeffs.empty(); }
};

Cochain cochain_unit(int degree, int index, const Scalar& c);
Cochain cochain_add(const Cochain& a, const Cochain& b, const Field& f);
Cochain cochain_sub(const Cochain& a, const Cochain& b, const Field& f);
Cochain cochain_scale(const Scalar& c, const Cochain& a, const Field& f);
bool cochain_equal(const Cochain& a, const Cochain& b);

// Value of a cochain on one chain: a combination of parallel paths, keyed by
// PathBasis index.
struct PathCombo {
  std::map<int, Scalar> terms;

  bool zero() const { return terms.empty(); }
};

class MinimalComplex {
 public:
  explicit MinimalComplex(const Algebra& alg);

  const Algebra& algebra() const { return *alg_; }
  int top_degree() const { return alg_->max_chain_length(); }

  const std::vector<CochainBasisElement>& basis(int n) const;
  int dim(int n) const { return static_cast<int>(basis(n).size()); }
  // Position of (chain, value) in B^n; -1 when absent.
  int basis_index(int n, const Path& chain, const Path& value) const;
  // First basis position of the block belonging to chain index ci.
  int block_offset(int n, int ci) const;

  // Matrix of delta^n : C^n -> C^{n+1}; all entries 0 or +-1.
  const Matrix& delta(int n) const;

  PathCombo evaluate(const Cochain& f, const Path& chain) const;
  Cochain apply_delta(const Cochain& f) const;

  // f_+ for a single minus-type basis element, computed as f - delta h with
  // h = (tail chain, value minus its leading arrow). Throws
  // std::invalid_argument on any other type.
  Cochain shift_plus(int n, int i) const;
  // Dual map for a plus-type element: g - delta((-1)^n (head chain, value
  // minus its trailing arrow)).
  Cochain shift_minus(int n, int i) const;

  enum class Direction { leq, geq };
  Cochain normalize(const Cochain& phi, Direction dir) const;
  // Same, also returning the degree-(n-1) cochain h with result = phi - delta h.
  std::pair<Cochain, Cochain> normalize_with_witness(const Cochain& phi, Direction dir) const;

 private:
  const Algebra* alg_;
  std::vector<std::vector<CochainBasisElement>> bases_;
  std::vector<std::vector<int>> block_offsets_;  // per degree, per chain index
  mutable std::map<int, Matrix> deltas_;
  static const std::vector<CochainBasisElement> empty_;

  Matrix build_delta(int n) const;
};

// "(a b | c d)" rendering used by dump output and error messages.
std::string element_label(const Presentation& p, const CochainBasisElement& e);

}  // namespace hh
