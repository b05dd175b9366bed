#pragma once

#include <random>

#include "conred/calg.hpp"
#include "conred/poly.hpp"

namespace conred {

/// Deterministic generators for randomized identity checks (fixed seeds at the
/// call sites keep every run byte-identical).
namespace randgen {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937_64& rng, int span = 3) {
  return Rational(uniform(rng, -span, span));
}

inline Mat matrix(std::mt19937_64& rng, int rows, int cols, int span = 3) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = small_rational(rng, span);
  return m;
}

inline Subspace subspace(std::mt19937_64& rng, int ambient, int max_dim) {
  int k = uniform(rng, 0, max_dim);
  return row_space(matrix(rng, k, ambient));
}

inline Subspace subspace_inside(std::mt19937_64& rng, const Subspace& big, int max_dim) {
  int k = uniform(rng, 0, max_dim);
  Mat combos = matrix(rng, k, big.dim());
  if (big.dim() == 0) return Subspace::zero(big.ambient());
  return row_space(combos * big.basis());
}

inline ConVectorSpace flag(std::mt19937_64& rng, int ambient) {
  Subspace w = subspace(rng, ambient, ambient);
  Subspace n = subspace_inside(rng, w, w.dim());
  return ConVectorSpace(ambient, w, n);
}

/// Random element of a subspace with small rational coefficients.
inline std::vector<Rational> element_of(std::mt19937_64& rng, const Subspace& s, int span = 3) {
  std::vector<Rational> v(s.ambient(), Rational(0));
  for (const auto& b : s.basis_vectors()) v = vec_add(v, vec_scale(small_rational(rng, span), b));
  return v;
}

/// Random constraint map E -> F, drawn from the Hom_W flag.
inline ConLinearMap constraint_map(std::mt19937_64& rng, const ConVectorSpace& e,
                                   const ConVectorSpace& f) {
  ConVectorSpace hom = construct(ConstructKind::Hom, e, &f);
  auto v = element_of(rng, hom.w);
  Mat m(f.ambient, e.ambient);
  for (int r = 0; r < f.ambient; ++r)
    for (int c = 0; c < e.ambient; ++c) m.at(r, c) = v[static_cast<size_t>(r) * e.ambient + c];
  return ConLinearMap(e, f, m);
}

inline Poly poly(std::mt19937_64& rng, int nv, int max_deg, int max_terms = 4, int span = 3) {
  Poly p(nv);
  int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nv, 0);
    int budget = uniform(rng, 0, max_deg);
    for (int d = 0; d < budget && nv > 0; ++d) e[uniform(rng, 0, nv - 1)] += 1;
    p = p + Poly::monomial(nv, e, small_rational(rng, span));
  }
  return p;
}

/// Polynomial in C∞_N of the flat model: a multiple of the vanishing coordinates.
inline Poly poly_null(std::mt19937_64& rng, const ConDim& d, int max_deg) {
  Poly p(d.t);
  for (int j = d.w; j < d.t; ++j)
    if (uniform(rng, 0, 1) || j == d.t - 1)
      p = p + Poly::variable(d.t, j) * poly(rng, d.t, max_deg);
  return p;
}

/// Polynomial in C∞_W: a polynomial in the reduced coordinates plus a null part.
inline Poly poly_wobs(std::mt19937_64& rng, const ConDim& d, int max_deg) {
  Poly core(d.t);
  int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(d.t, 0);
    int budget = uniform(rng, 0, max_deg);
    for (int k = 0; k < budget && d.w > d.n; ++k) e[uniform(rng, d.n, d.w - 1)] += 1;
    core = core + Poly::monomial(d.t, e, small_rational(rng));
  }
  return core + poly_null(rng, d, max_deg);
}

}  // namespace randgen
}  // namespace conred
