#include "hh/complex.hpp"

#include <cassert>
#include <stdexcept>

namespace hh {

Cochain cochain_unit(int degree, int index, const Scalar& c) {
  Cochain out;
  out.degree = degree;
  if (c != 0) out.coeffs[index] = c;
  return out;
}

Cochain cochain_add(const Cochain& a, const Cochain& b, const Field& f) {
  Cochain out;
  out.degree = a.degree;
  out.coeffs = a.coeffs;
  for (const auto& [i, c] : b.coeffs) {
    auto it = out.coeffs.find(i);
    if (it == out.coeffs.end()) {
      out.coeffs[i] = c;
    } else {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) out.coeffs.erase(it);
    }
  }
  return out;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b, const Field& f) {
  return cochain_add(a, cochain_scale(f.from_int(-1), b, f), f);
}

Cochain cochain_scale(const Scalar& c, const Cochain& a, const Field& f) {
  Cochain out;
  out.degree = a.degree;
  if (f.is_zero(c)) return out;
  for (const auto& [i, x] : a.coeffs) out.coeffs[i] = f.mul(c, x);
  return out;
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
  return a.degree == b.degree && a.coeffs == b.coeffs;
}

const std::vector<CochainBasisElement> MinimalComplex::empty_{};

MinimalComplex::MinimalComplex(const Algebra& alg) : alg_(&alg) {
  const Presentation& p = alg.pres();
  const PathBasis& pb = alg.basis();
  bases_.resize(alg.max_chain_length() + 1);
  block_offsets_.resize(alg.max_chain_length() + 1);
  for (int n = 0; n <= alg.max_chain_length(); ++n) {
    const std::vector<Path>& chains = alg.chains(n);
    for (const Path& c : chains) {
      block_offsets_[n].push_back(static_cast<int>(bases_[n].size()));
      int s = c.source;
      int t = p.path_target(c);
      for (int pi : pb.from_to(s, t)) {
        CochainBasisElement e;
        e.chain = c;
        e.value = pb.path(pi);
        e.value_index = pi;
        if (n >= 1 && !e.value.trivial() && e.value.arrows.front() == c.arrows.front()) {
          e.tri_type = TriType::minus;
        } else if (n >= 1 && !e.value.trivial() && e.value.arrows.back() == c.arrows.back()) {
          e.tri_type = TriType::plus;
        } else {
          e.tri_type = TriType::zero;
        }
        bases_[n].push_back(std::move(e));
      }
    }
  }
}

const std::vector<CochainBasisElement>& MinimalComplex::basis(int n) const {
  if (n < 0 || n > top_degree()) return empty_;
  return bases_[n];
}

int MinimalComplex::basis_index(int n, const Path& chain, const Path& value) const {
  int ci = alg_->chain_index(n, chain);
  if (ci < 0) return -1;
  int off = block_offsets_[n][ci];
  int end = (ci + 1 < static_cast<int>(block_offsets_[n].size()))
                ? block_offsets_[n][ci + 1]
                : dim(n);
  for (int i = off; i < end; ++i) {
    if (bases_[n][i].value == value) return i;
  }
  return -1;
}

int MinimalComplex::block_offset(int n, int ci) const { return block_offsets_[n][ci]; }

const Matrix& MinimalComplex::delta(int n) const {
  auto it = deltas_.find(n);
  if (it == deltas_.end()) it = deltas_.emplace(n, build_delta(n)).first;
  return it->second;
}

Matrix MinimalComplex::build_delta(int n) const {
  const Presentation& p = alg_->pres();
  const PathBasis& pb = alg_->basis();
  Matrix m(dim(n + 1), dim(n));
  if (m.rows() == 0 || m.cols() == 0) return m;
  const Field& f = p.field();
  const Scalar one = f.from_int(1);
  const Scalar sign = f.from_int((n + 1) % 2 == 0 ? 1 : -1);
  const std::vector<Path>& rows = alg_->chains(n + 1);
  for (int rc = 0; rc < static_cast<int>(rows.size()); ++rc) {
    const Path& c = rows[rc];
    int first = c.arrows.front();
    int last = c.arrows.back();
    Path tail;
    tail.source = p.quiver().arrows[first].target;
    tail.arrows.assign(c.arrows.begin() + 1, c.arrows.end());
    Path head;
    head.source = c.source;
    head.arrows.assign(c.arrows.begin(), c.arrows.end() - 1);

    Path first_path{p.quiver().arrows[first].source, {first}};
    int first_pi = pb.index_of(first_path);
    Path last_path{p.quiver().arrows[last].source, {last}};
    int last_pi = pb.index_of(last_path);

    int tci = alg_->chain_index(n, tail);
    if (tci >= 0) {
      int off = block_offsets_[n][tci];
      int end = (tci + 1 < static_cast<int>(block_offsets_[n].size())) ? block_offsets_[n][tci + 1]
                                                                       : dim(n);
      for (int col = off; col < end; ++col) {
        auto prod = pb.multiply(first_pi, bases_[n][col].value_index);
        if (!prod) continue;
        int row = basis_index(n + 1, c, pb.path(*prod));
        assert(row >= 0);
        m.add_at(row, col, one, f);
      }
    }
    int hci = alg_->chain_index(n, head);
    if (hci >= 0) {
      int off = block_offsets_[n][hci];
      int end = (hci + 1 < static_cast<int>(block_offsets_[n].size())) ? block_offsets_[n][hci + 1]
                                                                       : dim(n);
      for (int col = off; col < end; ++col) {
        auto prod = pb.multiply(bases_[n][col].value_index, last_pi);
        if (!prod) continue;
        int row = basis_index(n + 1, c, pb.path(*prod));
        assert(row >= 0);
        m.add_at(row, col, sign, f);
      }
    }
  }
  return m;
}

PathCombo MinimalComplex::evaluate(const Cochain& f, const Path& chain) const {
  PathCombo out;
  int n = f.degree;
  int ci = alg_->chain_index(n, chain);
  if (ci < 0) return out;
  int off = block_offsets_[n][ci];
  int end =
      (ci + 1 < static_cast<int>(block_offsets_[n].size())) ? block_offsets_[n][ci + 1] : dim(n);
  const Field& fld = alg_->pres().field();
  for (auto it = f.coeffs.lower_bound(off); it != f.coeffs.end() && it->first < end; ++it) {
    if (!fld.is_zero(it->second)) out.terms[bases_[n][it->first].value_index] = it->second;
  }
  return out;
}

Cochain MinimalComplex::apply_delta(const Cochain& f) const {
  const Matrix& m = delta(f.degree);
  const Field& fld = alg_->pres().field();
  Cochain out;
  out.degree = f.degree + 1;
  std::vector<Scalar> x(dim(f.degree), Scalar(0));
  for (const auto& [i, c] : f.coeffs) x[i] = c;
  std::vector<Scalar> y = m.apply(x, fld);
  for (int r = 0; r < static_cast<int>(y.size()); ++r) {
    if (!fld.is_zero(y[r])) out.coeffs[r] = y[r];
  }
  return out;
}

Cochain MinimalComplex::shift_plus(int n, int i) const {
  const CochainBasisElement& e = basis(n)[i];
  if (e.tri_type != TriType::minus)
    throw std::invalid_argument("shift_plus needs a minus-type element, got " +
                                element_label(alg_->pres(), e));
  Cochain f = cochain_unit(n, i, alg_->pres().field().from_int(1));
  return normalize(f, Direction::leq);
}

Cochain MinimalComplex::shift_minus(int n, int i) const {
  const CochainBasisElement& e = basis(n)[i];
  if (e.tri_type != TriType::plus)
    throw std::invalid_argument("shift_minus needs a plus-type element, got " +
                                element_label(alg_->pres(), e));
  Cochain g = cochain_unit(n, i, alg_->pres().field().from_int(1));
  return normalize(g, Direction::geq);
}

Cochain MinimalComplex::normalize(const Cochain& phi, Direction dir) const {
  return normalize_with_witness(phi, dir).first;
}

std::pair<Cochain, Cochain> MinimalComplex::normalize_with_witness(const Cochain& phi,
                                                                   Direction dir) const {
  const Presentation& p = alg_->pres();
  const Field& fld = p.field();
  int n = phi.degree;
  Cochain h;
  h.degree = n - 1;
  if (n >= 1) {
    const TriType wanted = dir == Direction::leq ? TriType::minus : TriType::plus;
    const Scalar hsign = fld.from_int(dir == Direction::leq ? 1 : (n % 2 == 0 ? 1 : -1));
    for (const auto& [i, c] : phi.coeffs) {
      const CochainBasisElement& e = bases_[n][i];
      if (e.tri_type != wanted) continue;
      Path sub_chain, sub_value;
      if (dir == Direction::leq) {
        // value = a_1 p; h picks up (a_2...a_n, p)
        sub_chain.source = p.quiver().arrows[e.chain.arrows.front()].target;
        sub_chain.arrows.assign(e.chain.arrows.begin() + 1, e.chain.arrows.end());
        sub_value.source = p.quiver().arrows[e.value.arrows.front()].target;
        sub_value.arrows.assign(e.value.arrows.begin() + 1, e.value.arrows.end());
      } else {
        // value = q a_n; h picks up (-1)^n (a_1...a_{n-1}, q)
        sub_chain.source = e.chain.source;
        sub_chain.arrows.assign(e.chain.arrows.begin(), e.chain.arrows.end() - 1);
        sub_value.source = e.value.source;
        sub_value.arrows.assign(e.value.arrows.begin(), e.value.arrows.end() - 1);
      }
      int hi = basis_index(n - 1, sub_chain, sub_value);
      assert(hi >= 0);  // a subpath of a nonzero path is nonzero
      h = cochain_add(h, cochain_unit(n - 1, hi, fld.mul(hsign, c)), fld);
    }
  }
  if (h.zero()) return {phi, h};
  return {cochain_sub(phi, apply_delta(h), fld), h};
}

std::string element_label(const Presentation& p, const CochainBasisElement& e) {
  return "(" + p.label(e.chain) + " | " + p.label(e.value) + ")";
}

}  // namespace hh
