#include "hh/cohomology.hpp"

#include <cassert>

namespace hh {

namespace {

Cochain to_cochain(int degree, const std::vector<Scalar>& v, const Field& f) {
  Cochain out;
  out.degree = degree;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!f.is_zero(v[i])) out.coeffs[static_cast<int>(i)] = v[i];
  }
  return out;
}

std::vector<Scalar> to_dense(const Cochain& c, int dim) {
  std::vector<Scalar> v(dim, Scalar(0));
  for (const auto& [i, x] : c.coeffs) v[i] = x;
  return v;
}

}  // namespace

const std::vector<CohomologyClass> Cohomology::no_classes_{};

Cohomology::Cohomology(const MinimalComplex& cx) : cx_(&cx) {}

const Cohomology::DegreeData& Cohomology::degree_data(int n) const {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  const Field& f = cx_->algebra().pres().field();
  DegreeData d;
  const Matrix& image = cx_->delta(n - 1);  // zero-column matrix at n = 0
  d.image_cols = n >= 1 ? image.cols() : 0;

  // Candidate cocycles in the deterministic kernel order; keep those outside
  // the span of the image plus the classes already kept.
  std::vector<std::vector<Scalar>> ker = kernel_basis(cx_->delta(n), f);
  Matrix m(cx_->dim(n), d.image_cols);
  if (n >= 1) m = image;
  for (const auto& k : ker) {
    if (solve_membership(m, k, f)) continue;
    Matrix wider(m.rows(), m.cols() + 1);
    for (const auto& [pos, v] : m.entries()) wider.set(pos.first, pos.second, v);
    for (size_t r = 0; r < k.size(); ++r) wider.set(static_cast<int>(r), m.cols(), k[r]);
    m = std::move(wider);
    CohomologyClass cls;
    cls.degree = n;
    cls.representative = to_cochain(n, k, f);
    d.classes.push_back(std::move(cls));
  }
  for (size_t i = 0; i < d.classes.size(); ++i) {
    std::vector<Scalar> coords(d.classes.size(), Scalar(0));
    coords[i] = f.from_int(1);
    d.classes[i].coordinates = std::move(coords);
    d.classes[i].coboundary_witness.degree = n - 1;
  }
  d.image_and_reps = std::move(m);
  return cache_.emplace(n, std::move(d)).first->second;
}

int Cohomology::dim(int n) const {
  if (n < 0) return 0;
  return static_cast<int>(degree_data(n).classes.size());
}

const std::vector<CohomologyClass>& Cohomology::basis(int n) const {
  if (n < 0) return no_classes_;
  return degree_data(n).classes;
}

bool Cohomology::is_cocycle(const Cochain& c) const { return cx_->apply_delta(c).zero(); }

bool Cohomology::is_coboundary(const Cochain& c, Cochain* witness) const {
  const Field& f = cx_->algebra().pres().field();
  int n = c.degree;
  if (c.zero()) {
    if (witness) *witness = Cochain{n - 1, {}};
    return true;
  }
  if (n == 0) return false;
  auto sol = solve_membership(cx_->delta(n - 1), to_dense(c, cx_->dim(n)), f);
  if (!sol) return false;
  if (witness) *witness = to_cochain(n - 1, *sol, f);
  return true;
}

CohomologyClass Cohomology::class_of(const Cochain& c) const {
  const Field& f = cx_->algebra().pres().field();
  Cochain bd = cx_->apply_delta(c);
  if (!bd.zero()) throw NotACocycle(std::move(bd));

  int n = c.degree;
  const DegreeData& d = degree_data(n);
  CohomologyClass out;
  out.degree = n;
  out.representative = c;
  out.coordinates.assign(d.classes.size(), Scalar(0));
  out.coboundary_witness.degree = n - 1;
  if (c.zero()) return out;

  auto sol = solve_membership(d.image_and_reps, to_dense(c, cx_->dim(n)), f);
  assert(sol);  // image and representatives span the kernel
  bool all_zero = true;
  for (size_t i = 0; i < d.classes.size(); ++i) {
    out.coordinates[i] = (*sol)[d.image_cols + i];
    if (!f.is_zero(out.coordinates[i])) all_zero = false;
  }
  if (all_zero) {
    Cochain w;
    w.degree = n - 1;
    for (int i = 0; i < d.image_cols; ++i) {
      if (!f.is_zero((*sol)[i])) w.coeffs[i] = (*sol)[i];
    }
    out.coboundary_witness = std::move(w);
  }
  return out;
}

HHSummary Cohomology::summary() const {
  HHSummary s;
  int top = top_degree();
  for (int n = 0; n <= top + 1; ++n) {
    s.dims.push_back(dim(n));
    s.bases.push_back(basis(n));
  }
  for (int n = 0; n <= top; ++n) {
    s.euler += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(cx_->dim(n));
  }
  return s;
}

}  // namespace hh
