#include "conred/exact.hpp"

#include <sstream>

namespace conred {

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw Error("ParseError", "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw Error("ParseError", "bad rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Mat::Mat(int rows, int cols, std::vector<Rational> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw Error("DimensionMismatch", "entry count != rows*cols");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw Error("DimensionMismatch", "ragged rows");
    int j = 0;
    for (int v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix add");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sub");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix mul");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::operator*(const Rational& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> Mat::row(int r) const {
  std::vector<Rational> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void Mat::set_row(int r, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != cols_) throw Error("DimensionMismatch", "set_row");
  for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0) throw Error("DimensionMismatch", "vstack");
  int c = rows_ == 0 ? o.cols_ : cols_;
  Mat r(rows_ + o.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

std::vector<Rational> vec_add(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size()) throw Error("DimensionMismatch", "vec_add");
  std::vector<Rational> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] + w[i];
  return r;
}

std::vector<Rational> vec_sub(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size()) throw Error("DimensionMismatch", "vec_sub");
  std::vector<Rational> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] - w[i];
  return r;
}

std::vector<Rational> vec_scale(const Rational& s, const std::vector<Rational>& v) {
  std::vector<Rational> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational vec_dot(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size()) throw Error("DimensionMismatch", "vec_dot");
  Rational r = 0;
  for (size_t i = 0; i < v.size(); ++i) r += v[i] * w[i];
  return r;
}

std::vector<Rational> vec_kron(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  std::vector<Rational> r(u.size() * v.size());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = u[i] * v[j];
  return r;
}

bool vec_is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> mat_apply(const Mat& m, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw Error("DimensionMismatch", "mat_apply");
  std::vector<Rational> r(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat rref(const Mat& m) {
  Mat a = m;
  int lead = 0;
  for (int r = 0; r < a.rows() && lead < a.cols(); ++r) {
    int pivot = -1;
    while (lead < a.cols()) {
      for (int i = r; i < a.rows(); ++i)
        if (a.at(i, lead) != 0) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Rational inv = a.at(r, lead);
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) /= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Rational f = a.at(i, lead);
      if (f == 0) continue;
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++lead;
  }
  return a;
}

int rank(const Mat& m) {
  Mat r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) ++rk;
  }
  return rk;
}

Subspace Subspace::span(int ambient, const Mat& rows) {
  if (rows.rows() != 0 && rows.cols() != ambient) throw Error("DimensionMismatch", "span");
  Mat r = rref(rows);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) ++rk;
  }
  Mat basis(rk, ambient);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = r.at(i, j);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = basis;
  return s;
}

Subspace Subspace::span_vectors(int ambient, const std::vector<std::vector<Rational>>& vs) {
  Mat rows(static_cast<int>(vs.size()), ambient);
  for (size_t i = 0; i < vs.size(); ++i) rows.set_row(static_cast<int>(i), vs[i]);
  return span(ambient, rows);
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(ambient);
  return s;
}

std::vector<std::vector<Rational>> Subspace::basis_vectors() const {
  std::vector<std::vector<Rational>> vs;
  vs.reserve(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) vs.push_back(basis_.row(i));
  return vs;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("DimensionMismatch", "contains");
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("DimensionMismatch", "coordinates");
  return coordinates_in_rows(basis_, v);
}

std::optional<std::vector<Rational>> coordinates_in_rows(const Mat& basis,
                                                         const std::vector<Rational>& v) {
  // Reduce v against the rows; works for any row basis, exact.
  std::vector<Rational> rem = v;
  std::vector<Rational> coef(basis.rows(), Rational(0));
  Mat work = basis;
  // Gaussian elimination tracking coefficients: bring work to rref simultaneously.
  // Since callers pass canonical (RREF) bases in the common case, do the simple pass:
  // for RREF rows, the coefficient of row i is rem[pivot_i].
  bool rrefish = true;
  std::vector<int> pivots(basis.rows(), -1);
  for (int i = 0; i < basis.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0 || basis.at(i, p) != 1) {
      rrefish = false;
      break;
    }
    for (int k = 0; k < basis.rows(); ++k)
      if (k != i && basis.at(k, p) != 0) {
        rrefish = false;
        break;
      }
    pivots[i] = p;
    if (!rrefish) break;
  }
  if (rrefish) {
    for (int i = 0; i < basis.rows(); ++i) {
      Rational c = rem[pivots[i]];
      if (c == 0) continue;
      coef[i] = c;
      for (int j = 0; j < basis.cols(); ++j) rem[j] -= c * basis.at(i, j);
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coef;
  }
  // General case: solve x·basis = v via augmented elimination on basis^T | v.
  int n = basis.cols(), k = basis.rows();
  Mat aug(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = basis.at(j, i);
    aug.at(i, k) = v[i];
  }
  Mat red = rref(aug);
  std::vector<Rational> x(k, Rational(0));
  for (int i = 0; i < n; ++i) {
    int p = -1;
    for (int j = 0; j <= k; ++j)
      if (red.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == k) return std::nullopt;  // inconsistent row 0..0 | c
    // Free variables are set to zero, so each pivot takes the RHS value.
    if (p >= 0 && p < k) x[p] = red.at(i, k);
  }
  // Verify the candidate solution.
  std::vector<Rational> check(n, Rational(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) check[i] += x[j] * basis.at(j, i);
  if (check != v) return std::nullopt;
  return x;
}

Subspace kernel(const Mat& m) {
  int n = m.cols();
  Mat r = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < n; ++j)
      if (r.at(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<std::vector<Rational>> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[j] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(static_cast<int>(i), j);
    basis.push_back(std::move(v));
  }
  return Subspace::span_vectors(n, basis);
}

Subspace row_space(const Mat& m) { return Subspace::span(m.cols(), m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("DimensionMismatch", "subspace_sum");
  return Subspace::span(a.ambient(), a.basis().vstack(b.basis()));
}

Subspace annihilator(const Subspace& a) { return kernel(a.basis()); }

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("DimensionMismatch", "subspace_intersect");
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

Subspace quotient_complement(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error("DimensionMismatch", "quotient_complement");
  if (!a.contains(b)) throw Error("NotContained", "complement base not inside the space");
  Mat acc = b.basis();
  int need = a.dim() - b.dim();
  std::vector<std::vector<Rational>> chosen;
  for (int i = 0; i < a.basis().rows() && static_cast<int>(chosen.size()) < need; ++i) {
    auto v = a.basis().row(i);
    Mat trial = acc.vstack(Mat(1, a.ambient(), v));
    if (rank(trial) > rank(acc)) {
      acc = trial;
      chosen.push_back(v);
    }
  }
  return Subspace::span_vectors(a.ambient(), chosen);
}

Subspace apply_to_subspace(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw Error("DimensionMismatch", "apply_to_subspace");
  std::vector<std::vector<Rational>> imgs;
  for (const auto& v : s.basis_vectors()) imgs.push_back(mat_apply(m, v));
  return Subspace::span_vectors(m.rows(), imgs);
}

Subspace preimage(const Mat& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw Error("DimensionMismatch", "preimage");
  // v in preimage iff Ann(s)·m·v = 0.
  Subspace ann = annihilator(s);
  return kernel(ann.basis() * m);
}

}  // namespace conred
