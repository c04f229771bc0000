#include "hh/linalg.hpp"

#include <stdexcept>

namespace hh {

namespace {

using boost::multiprecision::cpp_int;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const cpp_int& v, std::uint64_t p) {
  cpp_int m = v % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return m.convert_to<std::uint64_t>();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("field modulus out of range");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field modulus is not prime");
  Field f;
  f.p = p;
  return f;
}

Field Field::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    std::uint64_t p = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad field spec: " + s);
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (p >= (1ull << 31)) throw std::invalid_argument("field modulus out of range: " + s);
    }
    return prime(p);
  }
  throw std::invalid_argument("bad field spec: " + s + " (expected Q or F<p>)");
}

std::string Field::name() const { return rational() ? "Q" : "F" + std::to_string(p); }

Scalar Field::from_int(long long v) const {
  if (rational()) return Scalar(v);
  cpp_int n(v);
  return Scalar(cpp_int(residue(n, p)));
}

Scalar Field::reduce(const Scalar& v) const {
  if (rational()) return v;  // cpp_rational is always normalized
  std::uint64_t num = residue(numerator(v), p);
  std::uint64_t den = residue(denominator(v), p);
  if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
  return Scalar(cpp_int(mulmod(num, powmod(den, p - 2, p), p)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
Scalar Field::neg(const Scalar& a) const { return reduce(-a); }

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (rational()) return Scalar(1) / a;
  std::uint64_t r = residue(numerator(reduce(a)), p);
  if (r == 0) throw std::domain_error("division by zero");
  return Scalar(cpp_int(powmod(r, p - 2, p)));
}

std::string Field::str(const Scalar& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

void Matrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
}

void Matrix::set(int r, int c, const Scalar& v) {
  check_index(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void Matrix::add_at(int r, int c, const Scalar& v, const Field& f) {
  check_index(r, c);
  auto it = entries_.find({r, c});
  Scalar s = f.add(it == entries_.end() ? Scalar(0) : it->second, v);
  if (s == 0) {
    if (it != entries_.end()) entries_.erase(it);
  } else {
    entries_[{r, c}] = s;
  }
}

Scalar Matrix::at(int r, int c) const {
  check_index(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(0) : it->second;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x, const Field& f) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Scalar> y(rows_, Scalar(0));
  for (const auto& [rc, v] : entries_) {
    if (x[rc.second] == 0) continue;
    y[rc.first] = f.add(y[rc.first], f.mul(v, x[rc.second]));
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (const auto& [rc, v] : a.entries())
    for (int j = 0; j < b.cols(); ++j) {
      Scalar w = b.at(rc.second, j);
      if (w == 0) continue;
      c.add_at(rc.first, j, f.mul(v, w), f);
    }
  return c;
}

Matrix from_columns(int rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i)
      if (cols[j][i] != 0) m.set(i, static_cast<int>(j), cols[j][i]);
  }
  return m;
}

namespace {

std::vector<std::vector<Scalar>> densify(const Matrix& m) {
  std::vector<std::vector<Scalar>> d(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
  for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
  return d;
}

// Reduced row echelon form in place; returns pivot columns in order.
// Pivoting: columns left to right, smallest eligible row index.
std::vector<int> rref(std::vector<std::vector<Scalar>>& a, const Field& f) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    Scalar piv_inv = f.inv(a[r][c]);
    for (int j = c; j < cols; ++j)
      if (a[r][j] != 0) a[r][j] = f.mul(a[r][j], piv_inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar factor = a[i][c];
      for (int j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int rank(const Matrix& m, const Field& f) {
  auto a = densify(m);
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  Scalar prev(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    // Fraction-free step: divisions by the previous pivot are exact.
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Scalar t = f.sub(f.mul(a[r][c], a[i][j]), f.mul(a[i][c], a[r][j]));
        a[i][j] = f.mul(t, f.inv(prev));
      }
      a[i][c] = Scalar(0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, const Field& f) {
  auto a = densify(m);
  auto pivot_cols = rref(a, f);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> x(cols, Scalar(0));
    x[c] = f.from_int(1);
    for (size_t k = 0; k < pivot_cols.size(); ++k)
      if (a[k][c] != 0) x[pivot_cols[k]] = f.neg(a[k][c]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_membership(const Matrix& m,
                                                    const std::vector<Scalar>& target,
                                                    const Field& f) {
  if (static_cast<int>(target.size()) != m.rows())
    throw std::invalid_argument("solve_membership: target length mismatch");
  auto a = densify(m);
  for (int i = 0; i < m.rows(); ++i) a[i].push_back(target[i]);
  if (m.rows() == 0) return std::vector<Scalar>(m.cols(), Scalar(0));
  auto pivot_cols = rref(a, f);
  for (int c : pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = a[k][m.cols()];
  return x;
}

}  // namespace hh
