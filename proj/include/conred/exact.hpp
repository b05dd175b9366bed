#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conred {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Error with a stable machine-readable code ("DimensionMismatch", ...) plus context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Dense rational matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(int rows, int cols, std::vector<Rational> entries);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rational& s) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  bool is_zero() const;
  std::vector<Rational> row(int r) const;
  void set_row(int r, const std::vector<Rational>& v);

  /// Stacks rows of `this` on top of rows of `o` (same column count).
  Mat vstack(const Mat& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// v (+/-) w, componentwise; dot product; Kronecker product u ⊗ v (index i*dim(v)+j).
std::vector<Rational> vec_add(const std::vector<Rational>& v, const std::vector<Rational>& w);
std::vector<Rational> vec_sub(const std::vector<Rational>& v, const std::vector<Rational>& w);
std::vector<Rational> vec_scale(const Rational& s, const std::vector<Rational>& v);
Rational vec_dot(const std::vector<Rational>& v, const std::vector<Rational>& w);
std::vector<Rational> vec_kron(const std::vector<Rational>& u, const std::vector<Rational>& v);
bool vec_is_zero(const std::vector<Rational>& v);

/// Matrix-vector product m·v.
std::vector<Rational> mat_apply(const Mat& m, const std::vector<Rational>& v);

/// Reduced row-echelon form; same shape, row space preserved.
Mat rref(const Mat& m);
int rank(const Mat& m);

/// Linear subspace of Q^ambient, canonically represented by its RREF row basis
/// (no zero rows), so equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes the row space of `rows` (rows live in Q^ambient).
  static Subspace span(int ambient, const Mat& rows);
  static Subspace span_vectors(int ambient, const std::vector<std::vector<Rational>>& vs);
  static Subspace full(int ambient);
  static Subspace zero(int ambient) { return Subspace(ambient); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<std::vector<Rational>> basis_vectors() const;

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

 private:
  int ambient_ = 0;
  Mat basis_{0, 0};
};

/// {v : m·v = 0}; dim(kernel) + rank(m) = cols(m).
Subspace kernel(const Mat& m);
Subspace row_space(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// {phi in the coordinate dual : phi(a) = 0}.
Subspace annihilator(const Subspace& a);
/// Canonical complement of b inside a, chosen pivot-greedily from a's canonical
/// basis; requires b ⊆ a ("NotContained" otherwise). a = b ⊕ result.
Subspace quotient_complement(const Subspace& a, const Subspace& b);

/// Image {m·v : v in s} of a subspace under a matrix.
Subspace apply_to_subspace(const Mat& m, const Subspace& s);
/// Preimage {v : m·v in s}.
Subspace preimage(const Mat& m, const Subspace& s);

/// Solves x·basis = v for a row basis (used for quotient representatives).
std::optional<std::vector<Rational>> coordinates_in_rows(const Mat& basis,
                                                         const std::vector<Rational>& v);

}  // namespace conred
