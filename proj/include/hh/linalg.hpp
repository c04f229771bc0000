// Exact linear algebra over Q or a prime field F_p.
//
// Scalars are arbitrary-precision rationals; F_p elements are canonical
// residues 0..p-1 carried in the same type, with all arithmetic routed
// through a Field context. Elimination is deterministic: columns are
// scanned left to right and the pivot is the smallest eligible row index,
// so ranks, kernel bases and solutions are reproducible bit for bit.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hh {

using Scalar = boost::multiprecision::cpp_rational;

// Arithmetic context: rationals when p == 0, otherwise F_p with p prime.
struct Field {
  std::uint64_t p = 0;

  bool rational() const { return p == 0; }
  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);       // requires p prime, 1 < p < 2^31
  static Field parse(const std::string& s);  // "Q" or "F<p>"
  std::string name() const;

  Scalar from_int(long long v) const;
  Scalar reduce(const Scalar& v) const;  // canonical form (residue mod p)
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws std::domain_error on zero
  bool is_zero(const Scalar& v) const { return v == 0; }

  static std::string str(const Scalar& v);  // "5", "-2/3"

  bool operator==(const Field& o) const { return p == o.p; }
};

// Sparse matrix; zero entries are never stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Scalar& v);
  void add_at(int r, int c, const Scalar& v, const Field& f);
  Scalar at(int r, int c) const;

  const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // y = M * x; x has cols() entries.
  std::vector<Scalar> apply(const std::vector<Scalar>& x, const Field& f) const;
  Matrix transpose() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Scalar> entries_;

  void check_index(int r, int c) const;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);

// Column-stack of vectors, each of length `rows`.
Matrix from_columns(int rows, const std::vector<std::vector<Scalar>>& cols);

// Rank by fraction-free (Bareiss) elimination.
int rank(const Matrix& m, const Field& f);

// Deterministic null-space basis from the reduced echelon form: one vector
// per free column, with a 1 in the free position. Size = cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, const Field& f);

// Solves m * x = target exactly; nullopt means target is not in the column
// span. The returned x is the particular solution with all free variables 0.
std::optional<std::vector<Scalar>> solve_membership(const Matrix& m,
                                                    const std::vector<Scalar>& target,
                                                    const Field& f);

}  // namespace hh
