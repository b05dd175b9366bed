#include "conred/calg.hpp"

#include <algorithm>

namespace conred {

namespace {

std::vector<Rational> std_basis(int n, int i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

int parity(long long a, long long b) {
  long long pa = ((a % 2) + 2) % 2, pb = ((b % 2) + 2) % 2;
  return static_cast<int>((pa * pb) % 2);
}

/// Membership-condition rows for {M : M·(span vs) ⊆ S} on row-major vec(M).
Mat inclusion_rows(const std::vector<std::vector<Rational>>& vs, const Subspace& target,
                   int rows_dim, int cols_dim) {
  Subspace ann = annihilator(target);
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : ann.basis_vectors())
    for (const auto& v : vs) rows.push_back(vec_kron(a, v));
  Mat m(static_cast<int>(rows.size()), rows_dim * cols_dim);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
  return m;
}

Subspace kron_span(const Subspace& a, const Subspace& b) {
  std::vector<std::vector<Rational>> vs;
  for (const auto& u : a.basis_vectors())
    for (const auto& v : b.basis_vectors()) vs.push_back(vec_kron(u, v));
  return Subspace::span_vectors(a.ambient() * b.ambient(), vs);
}

}  // namespace

ConVectorSpace::ConVectorSpace(int ambient_, Subspace w_, Subspace n_)
    : ambient(ambient_), w(std::move(w_)), n(std::move(n_)) {
  if (w.ambient() != ambient || n.ambient() != ambient)
    throw Error("DimensionMismatch", "flag ambient mismatch");
  if (!w.contains(n)) throw Error("DimensionMismatch", "flag requires V_N ⊆ V_W");
}

ConVectorSpace ConVectorSpace::coordinate_flag(const ConDim& dims) {
  std::vector<std::vector<Rational>> wv, nv;
  for (int i = 0; i < dims.w; ++i) wv.push_back(std_basis(dims.t, i));
  for (int i = 0; i < dims.n; ++i) nv.push_back(std_basis(dims.t, i));
  return ConVectorSpace(dims.t, Subspace::span_vectors(dims.t, wv),
                        Subspace::span_vectors(dims.t, nv));
}

ConLinearMap::ConLinearMap(ConVectorSpace s, ConVectorSpace t, Mat m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.ambient || matrix.cols() != source.ambient)
    throw Error("DimensionMismatch", "map shape");
}

ConLinearMap ConLinearMap::identity(const ConVectorSpace& e) {
  return ConLinearMap(e, e, Mat::identity(e.ambient));
}

bool ConLinearMap::is_constraint() const {
  return target.w.contains(apply_to_subspace(matrix, source.w)) &&
         target.n.contains(apply_to_subspace(matrix, source.n));
}

MorphismClassification classify_morphism(const ConLinearMap& phi) {
  if (!phi.is_constraint()) throw Error("NotConstraintMap", "flags not preserved");
  MorphismClassification c;
  c.mono = kernel(phi.matrix).dim() == 0;
  Subspace image = apply_to_subspace(phi.matrix, Subspace::full(phi.source.ambient));
  Subspace image_w = apply_to_subspace(phi.matrix, phi.source.w);
  c.epi = image.dim() == phi.target.ambient && image_w == phi.target.w;
  Subspace pre_n = subspace_intersect(phi.source.w, preimage(phi.matrix, phi.target.n));
  c.regular_mono = c.mono && pre_n == phi.source.n;
  Subspace image_n = apply_to_subspace(phi.matrix, phi.source.n);
  c.regular_epi = c.epi && image_n == phi.target.n;
  bool via1 = c.mono && c.regular_epi;
  bool via2 = c.regular_mono && c.epi;
  if (via1 != via2) throw Error("InternalInvariant", "iso characterizations disagree");
  c.iso = via1;
  return c;
}

FlagTriple::FlagTriple(Subspace t_, Subspace w_, Subspace n_)
    : t(std::move(t_)), w(std::move(w_)), n(std::move(n_)) {
  if (t.ambient() != w.ambient() || t.ambient() != n.ambient())
    throw Error("DimensionMismatch", "triple ambient mismatch");
  if (!t.contains(w) || !w.contains(n))
    throw Error("DimensionMismatch", "triple requires N ⊆ W ⊆ T");
}

ConVectorSpace FlagTriple::as_space() const {
  auto coords = [&](const Subspace& s) {
    std::vector<std::vector<Rational>> cs;
    for (const auto& v : s.basis_vectors()) cs.push_back(*t.coordinates(v));
    return Subspace::span_vectors(t.dim(), cs);
  };
  return ConVectorSpace(t.dim(), coords(w), coords(n));
}

FlagTriple kernel_image(const ConLinearMap& phi, KernelImageKind which) {
  if (!phi.is_constraint()) throw Error("NotConstraintMap", "flags not preserved");
  switch (which) {
    case KernelImageKind::Kernel: {
      Subspace ker_t = kernel(phi.matrix);
      Subspace ker_w = subspace_intersect(ker_t, phi.source.w);
      Subspace ker_n = subspace_intersect(ker_w, phi.source.n);
      return FlagTriple(ker_t, ker_w, ker_n);
    }
    case KernelImageKind::Image: {
      Subspace im_t = apply_to_subspace(phi.matrix, Subspace::full(phi.source.ambient));
      Subspace im_w = apply_to_subspace(phi.matrix, phi.source.w);
      Subspace im_n = apply_to_subspace(phi.matrix, phi.source.n);
      return FlagTriple(im_t, im_w, im_n);
    }
    case KernelImageKind::RegularImage: {
      Subspace im_t = apply_to_subspace(phi.matrix, Subspace::full(phi.source.ambient));
      Subspace im_w = apply_to_subspace(phi.matrix, phi.source.w);
      Subspace im_n = subspace_intersect(im_w, phi.target.n);
      return FlagTriple(im_t, im_w, im_n);
    }
  }
  throw Error("InternalInvariant", "unreachable");
}

ConVectorSpace construct(ConstructKind kind, const ConVectorSpace& e, const ConVectorSpace* f) {
  bool binary = kind != ConstructKind::Dual;
  if (binary && f == nullptr) throw Error("ArityMismatch", "binary construct needs two flags");
  switch (kind) {
    case ConstructKind::DSum: {
      int n = e.ambient + f->ambient;
      auto embed = [&](const Subspace& s, int offset) {
        std::vector<std::vector<Rational>> vs;
        for (const auto& v : s.basis_vectors()) {
          std::vector<Rational> big(n, Rational(0));
          for (size_t i = 0; i < v.size(); ++i) big[offset + i] = v[i];
          vs.push_back(big);
        }
        return Subspace::span_vectors(n, vs);
      };
      Subspace w = subspace_sum(embed(e.w, 0), embed(f->w, e.ambient));
      Subspace nn = subspace_sum(embed(e.n, 0), embed(f->n, e.ambient));
      return ConVectorSpace(n, w, nn);
    }
    case ConstructKind::Tensor: {
      int n = e.ambient * f->ambient;
      Subspace w = kron_span(e.w, f->w);
      Subspace nn = subspace_sum(kron_span(e.n, f->w), kron_span(e.w, f->n));
      return ConVectorSpace(n, w, nn);
    }
    case ConstructKind::StrongTensor: {
      int n = e.ambient * f->ambient;
      Subspace mixed = subspace_sum(kron_span(e.n, Subspace::full(f->ambient)),
                                    kron_span(Subspace::full(e.ambient), f->n));
      Subspace w = subspace_sum(kron_span(e.w, f->w), mixed);
      return ConVectorSpace(n, w, mixed);
    }
    case ConstructKind::Dual:
      return ConVectorSpace(e.ambient, annihilator(e.n), annihilator(e.w));
    case ConstructKind::Hom: {
      int rows_dim = f->ambient, cols_dim = e.ambient;
      Mat w_rows = inclusion_rows(e.w.basis_vectors(), f->w, rows_dim, cols_dim)
                       .vstack(inclusion_rows(e.n.basis_vectors(), f->n, rows_dim, cols_dim));
      Mat n_rows = inclusion_rows(e.w.basis_vectors(), f->n, rows_dim, cols_dim);
      return ConVectorSpace(rows_dim * cols_dim, kernel(w_rows), kernel(n_rows));
    }
  }
  throw Error("InternalInvariant", "unreachable");
}

std::vector<Rational> ReducedSpace::project(const std::vector<Rational>& v) const {
  Mat stacked = null_part.basis().vstack(rep_rows);
  auto coords = coordinates_in_rows(stacked, v);
  if (!coords) throw Error("NotInWobs", "vector not in the W component");
  std::vector<Rational> out(dim);
  for (int i = 0; i < dim; ++i) out[i] = (*coords)[null_part.dim() + i];
  return out;
}

std::vector<Rational> ReducedSpace::lift(const std::vector<Rational>& q) const {
  if (static_cast<int>(q.size()) != dim) throw Error("DimensionMismatch", "lift");
  std::vector<Rational> v(rep_rows.cols(), Rational(0));
  for (int i = 0; i < dim; ++i) v = vec_add(v, vec_scale(q[i], rep_rows.row(i)));
  return v;
}

ReducedSpace reduce(const ConVectorSpace& e) {
  Subspace comp = quotient_complement(e.w, e.n);
  ReducedSpace r;
  r.dim = comp.dim();
  r.rep_rows = comp.basis();
  r.null_part = e.n;
  return r;
}

Mat reduce(const ConLinearMap& phi) {
  if (!phi.is_constraint()) throw Error("NotConstraintMap", "flags not preserved");
  ReducedSpace rs = reduce(phi.source), rt = reduce(phi.target);
  Mat m(rt.dim, rs.dim);
  for (int j = 0; j < rs.dim; ++j) {
    auto img = mat_apply(phi.matrix, rs.rep_rows.row(j));
    auto q = rt.project(img);
    for (int i = 0; i < rt.dim; ++i) m.at(i, j) = q[i];
  }
  return m;
}

ConAlgebraFD ConAlgebraFD::scalar_field() {
  ConAlgebraFD a;
  a.space = ConVectorSpace::coordinate_flag(ConDim(1, 1, 0));
  a.lmul = {Mat::identity(1)};
  a.unit = {Rational(1)};
  return a;
}

std::vector<Rational> ConAlgebraFD::product(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
  std::vector<Rational> r(dim(), Rational(0));
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    r = vec_add(r, vec_scale(x[i], mat_apply(lmul[i], y)));
  }
  return r;
}

bool ConAlgebraFD::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (product(std_basis(dim(), i), std_basis(dim(), j)) !=
          product(std_basis(dim(), j), std_basis(dim(), i)))
        return false;
  return true;
}

void ConAlgebraFD::check_invariants(bool strong) const {
  int n = dim();
  for (int i = 0; i < n; ++i) {
    auto ei = std_basis(n, i);
    if (product(unit, ei) != ei || product(ei, unit) != ei)
      throw Error("IllDefinedQuotient", "unit law fails");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto ei = std_basis(n, i), ej = std_basis(n, j), ek = std_basis(n, k);
        if (product(product(ei, ej), ek) != product(ei, product(ej, ek)))
          throw Error("IllDefinedQuotient", "associativity fails");
      }
  if (!space.w.contains(unit)) throw Error("IllDefinedQuotient", "unit not in A_W");
  for (const auto& a : space.w.basis_vectors())
    for (const auto& b : space.w.basis_vectors())
      if (!space.w.contains(product(a, b))) throw Error("IllDefinedQuotient", "A_W not closed");
  for (const auto& a : space.w.basis_vectors())
    for (const auto& b : space.n.basis_vectors())
      if (!space.n.contains(product(a, b)) || !space.n.contains(product(b, a)))
        throw Error("IllDefinedQuotient", "A_N not an ideal in A_W");
  if (strong) {
    for (int i = 0; i < n; ++i)
      for (const auto& b : space.n.basis_vectors()) {
        auto ei = std_basis(n, i);
        if (!space.n.contains(product(ei, b)) || !space.n.contains(product(b, ei)))
          throw Error("IllDefinedQuotient", "A_N not an ideal in A_T (strong)");
      }
  }
}

ConModuleFD ConModuleFD::from_flag(const ConVectorSpace& e) {
  ConModuleFD m;
  m.algebra = ConAlgebraFD::scalar_field();
  m.space = e;
  m.act = {Mat::identity(e.ambient)};
  return m;
}

ConModuleFD ConModuleFD::regular(const ConAlgebraFD& a) {
  ConModuleFD m;
  m.algebra = a;
  m.space = a.space;
  m.act.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    // Right multiplication by b_i: x·b_i, column j = b_j · b_i.
    Mat r(a.dim(), a.dim());
    for (int j = 0; j < a.dim(); ++j) {
      auto col = a.product(std_basis(a.dim(), j), std_basis(a.dim(), i));
      for (int k = 0; k < a.dim(); ++k) r.at(k, j) = col[k];
    }
    m.act.push_back(r);
  }
  return m;
}

std::vector<Rational> ConModuleFD::action(const std::vector<Rational>& x,
                                          const std::vector<Rational>& a) const {
  std::vector<Rational> r(dim(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    r = vec_add(r, vec_scale(a[i], mat_apply(act[i], x)));
  }
  return r;
}

void ConModuleFD::check_invariants(bool strong) const {
  int n = dim(), ad = algebra.dim();
  Mat unit_act(n, n);
  for (int i = 0; i < ad; ++i) unit_act = unit_act + act[i] * algebra.unit[i];
  if (unit_act != Mat::identity(n)) throw Error("IllDefinedQuotient", "module unit law fails");
  for (int a = 0; a < ad; ++a)
    for (int b = 0; b < ad; ++b) {
      auto prod = algebra.product(std_basis(ad, a), std_basis(ad, b));
      Mat lhs(n, n);
      for (int m = 0; m < ad; ++m) lhs = lhs + act[m] * prod[m];
      if (lhs != act[b] * act[a]) throw Error("IllDefinedQuotient", "module associativity fails");
    }
  auto check_closed = [&](const Subspace& xs, const Subspace& as, const Subspace& tgt,
                          const char* what) {
    for (const auto& x : xs.basis_vectors())
      for (const auto& a : as.basis_vectors())
        if (!tgt.contains(action(x, a))) throw Error("IllDefinedQuotient", what);
  };
  check_closed(space.w, algebra.space.w, space.w, "E_W not an A_W-submodule");
  check_closed(space.n, algebra.space.w, space.n, "E_N not an A_W-submodule");
  if (strong) {
    check_closed(space.n, Subspace::full(ad), space.n, "E_N not an A_T-submodule (strong)");
    check_closed(Subspace::full(n), algebra.space.n, space.n, "E_T·A_N ⊄ E_N (strong)");
  }
}

ConModuleFD module_dsum(const ConModuleFD& e, const ConModuleFD& f) {
  if (!(e.algebra.space == f.algebra.space) || e.algebra.unit != f.algebra.unit)
    throw Error("BaseMismatch", "direct sum over different bases");
  ConModuleFD m;
  m.algebra = e.algebra;
  m.space = construct(ConstructKind::DSum, e.space, &f.space);
  for (int a = 0; a < e.algebra.dim(); ++a) {
    Mat blk(e.dim() + f.dim(), e.dim() + f.dim());
    for (int i = 0; i < e.dim(); ++i)
      for (int j = 0; j < e.dim(); ++j) blk.at(i, j) = e.act[a].at(i, j);
    for (int i = 0; i < f.dim(); ++i)
      for (int j = 0; j < f.dim(); ++j) blk.at(e.dim() + i, e.dim() + j) = f.act[a].at(i, j);
    m.act.push_back(blk);
  }
  return m;
}

HomModule module_hom(const ConModuleFD& e, const ConModuleFD& f) {
  if (!(e.algebra.space == f.algebra.space) || e.algebra.unit != f.algebra.unit)
    throw Error("BaseMismatch", "hom over different bases");
  if (!e.algebra.is_commutative()) throw Error("NonCommutativeBase", "hom needs commutative base");
  int ed = e.dim(), fd = f.dim(), ad = e.algebra.dim();
  // A-linearity: act_F[a]·M = M·act_E[a] for all a, linear in vec(M).
  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a < ad; ++a)
    for (int r = 0; r < fd; ++r)
      for (int c = 0; c < ed; ++c) {
        std::vector<Rational> row(static_cast<size_t>(fd) * ed, Rational(0));
        for (int s = 0; s < fd; ++s) row[static_cast<size_t>(s) * ed + c] += f.act[a].at(r, s);
        for (int s = 0; s < ed; ++s) row[static_cast<size_t>(r) * ed + s] -= e.act[a].at(s, c);
        rows.push_back(std::move(row));
      }
  Mat sys(static_cast<int>(rows.size()), fd * ed);
  for (size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
  Subspace hom_t = kernel(sys);
  int hd = hom_t.dim();
  Mat embed = hom_t.basis().transpose();  // (fd*ed) x hd

  auto flag_in_hom_coords = [&](const Mat& cond_rows) {
    Subspace cut = subspace_intersect(hom_t, kernel(cond_rows));
    std::vector<std::vector<Rational>> coords;
    for (const auto& v : cut.basis_vectors()) {
      auto c = hom_t.coordinates(v);
      coords.push_back(*c);
    }
    return Subspace::span_vectors(hd, coords);
  };
  Mat w_rows = inclusion_rows(e.space.w.basis_vectors(), f.space.w, fd, ed)
                   .vstack(inclusion_rows(e.space.n.basis_vectors(), f.space.n, fd, ed));
  Mat n_rows = inclusion_rows(e.space.w.basis_vectors(), f.space.n, fd, ed);

  HomModule out;
  out.embed = embed;
  out.hom.algebra = e.algebra;
  out.hom.space = ConVectorSpace(hd, flag_in_hom_coords(w_rows), flag_in_hom_coords(n_rows));
  // (M·a)(x) := M(x)·a, i.e. vec(M) -> vec(act_F[a]·M).
  for (int a = 0; a < ad; ++a) {
    Mat big(fd * ed, fd * ed);
    for (int r = 0; r < fd; ++r)
      for (int c = 0; c < ed; ++c)
        for (int s = 0; s < fd; ++s) big.at(r * ed + c, s * ed + c) = f.act[a].at(r, s);
    Mat on_h(hd, hd);
    for (int j = 0; j < hd; ++j) {
      auto img = mat_apply(big, hom_t.basis().row(j));
      auto c = hom_t.coordinates(img);
      if (!c) throw Error("InternalInvariant", "hom space not action-stable");
      for (int i = 0; i < hd; ++i) on_h.at(i, j) = (*c)[i];
    }
    out.hom.act.push_back(on_h);
  }
  return out;
}

HomModule module_dual(const ConModuleFD& e) {
  return module_hom(e, ConModuleFD::regular(e.algebra));
}

ConModuleFD tensor_over_algebra(const ConModuleFD& e, const ConModuleFD& f, TensorFlavor flavor) {
  if (!(e.algebra.space == f.algebra.space) || e.algebra.unit != f.algebra.unit)
    throw Error("BaseMismatch", "tensor over different bases");
  if (!e.algebra.is_commutative())
    throw Error("NonCommutativeBase", "balanced tensor needs commutative base");
  int ed = e.dim(), fd = f.dim(), ad = e.algebra.dim(), big = ed * fd;
  // Balancing subspace span{xa ⊗ y − x ⊗ ay} (left action on F via commutativity).
  std::vector<std::vector<Rational>> balance;
  for (int x = 0; x < ed; ++x)
    for (int a = 0; a < ad; ++a)
      for (int y = 0; y < fd; ++y) {
        auto xa = mat_apply(e.act[a], std_basis(ed, x));
        auto ay = mat_apply(f.act[a], std_basis(fd, y));
        auto lhs = vec_kron(xa, std_basis(fd, y));
        auto rhs = vec_kron(std_basis(ed, x), ay);
        balance.push_back(vec_sub(lhs, rhs));
      }
  Subspace b = Subspace::span_vectors(big, balance);
  Subspace comp = quotient_complement(Subspace::full(big), b);
  int q = comp.dim();
  Mat stacked = b.basis().vstack(comp.basis());
  auto project = [&](const std::vector<Rational>& v) {
    auto c = coordinates_in_rows(stacked, v);
    std::vector<Rational> out(q);
    for (int i = 0; i < q; ++i) out[i] = (*c)[b.dim() + i];
    return out;
  };
  auto project_subspace = [&](const Subspace& s) {
    std::vector<std::vector<Rational>> vs;
    for (const auto& v : s.basis_vectors()) vs.push_back(project(v));
    return Subspace::span_vectors(q, vs);
  };

  Subspace w0, n0;
  if (flavor == TensorFlavor::Tensor) {
    w0 = kron_span(e.space.w, f.space.w);
    n0 = subspace_sum(kron_span(e.space.n, f.space.w), kron_span(e.space.w, f.space.n));
  } else {
    Subspace mixed = subspace_sum(kron_span(e.space.n, Subspace::full(fd)),
                                  kron_span(Subspace::full(ed), f.space.n));
    w0 = subspace_sum(kron_span(e.space.w, f.space.w), mixed);
    n0 = mixed;
  }

  ConModuleFD out;
  out.algebra = e.algebra;
  out.space = ConVectorSpace(q, project_subspace(w0), project_subspace(n0));
  for (int a = 0; a < ad; ++a) {
    // (x ⊗ y)·a = x ⊗ (y·a).
    Mat on_q(q, q);
    for (int j = 0; j < q; ++j) {
      auto lifted = comp.basis().row(j);
      std::vector<Rational> img(big, Rational(0));
      for (int x = 0; x < ed; ++x)
        for (int y = 0; y < fd; ++y) {
          const Rational& c = lifted[static_cast<size_t>(x) * fd + y];
          if (c == 0) continue;
          img = vec_add(img, vec_scale(c, vec_kron(std_basis(ed, x),
                                                   mat_apply(f.act[a], std_basis(fd, y)))));
        }
      auto pq = project(img);
      for (int i = 0; i < q; ++i) on_q.at(i, j) = pq[i];
    }
    out.act.push_back(on_q);
  }
  return out;
}

PlainAlgebra reduce(const ConAlgebraFD& a) {
  for (const auto& x : a.space.w.basis_vectors())
    for (const auto& y : a.space.n.basis_vectors())
      if (!a.space.n.contains(a.product(x, y)) || !a.space.n.contains(a.product(y, x)))
        throw Error("IllDefinedQuotient", "A_N not an ideal in A_W");
  if (!a.space.w.contains(a.unit)) throw Error("IllDefinedQuotient", "unit not in A_W");
  ReducedSpace rs = reduce(a.space);
  PlainAlgebra out;
  out.dim = rs.dim;
  out.unit = rs.project(a.unit);
  for (int i = 0; i < rs.dim; ++i) {
    Mat l(rs.dim, rs.dim);
    for (int j = 0; j < rs.dim; ++j) {
      auto p = a.product(rs.rep_rows.row(i), rs.rep_rows.row(j));
      auto pq = rs.project(p);
      for (int k = 0; k < rs.dim; ++k) l.at(k, j) = pq[k];
    }
    out.lmul.push_back(l);
  }
  return out;
}

PlainModule reduce(const ConModuleFD& e) {
  for (const auto& x : e.space.n.basis_vectors())
    for (const auto& a : e.algebra.space.w.basis_vectors())
      if (!e.space.n.contains(e.action(x, a)))
        throw Error("IllDefinedQuotient", "E_N not an A_W-submodule");
  for (const auto& x : e.space.w.basis_vectors())
    for (const auto& a : e.algebra.space.n.basis_vectors())
      if (!e.space.n.contains(e.action(x, a)))
        throw Error("IllDefinedQuotient", "A_N does not act by zero on E_red");
  PlainModule out;
  out.algebra = reduce(e.algebra);
  ReducedSpace ralg = reduce(e.algebra.space);
  ReducedSpace rs = reduce(e.space);
  out.dim = rs.dim;
  for (int a = 0; a < out.algebra.dim; ++a) {
    auto lifted_a = ralg.lift(std_basis(out.algebra.dim, a));
    Mat m(rs.dim, rs.dim);
    for (int j = 0; j < rs.dim; ++j) {
      auto img = e.action(rs.rep_rows.row(j), lifted_a);
      auto q = rs.project(img);
      for (int i = 0; i < rs.dim; ++i) m.at(i, j) = q[i];
    }
    out.act.push_back(m);
  }
  return out;
}

PlainModule plain_tensor_over_algebra(const PlainModule& e, const PlainModule& f) {
  int ed = e.dim, fd = f.dim, ad = e.algebra.dim, big = ed * fd;
  std::vector<std::vector<Rational>> balance;
  for (int x = 0; x < ed; ++x)
    for (int a = 0; a < ad; ++a)
      for (int y = 0; y < fd; ++y) {
        auto xa = mat_apply(e.act[a], std_basis(ed, x));
        auto ay = mat_apply(f.act[a], std_basis(fd, y));
        balance.push_back(vec_sub(vec_kron(xa, std_basis(fd, y)), vec_kron(std_basis(ed, x), ay)));
      }
  Subspace b = Subspace::span_vectors(big, balance);
  Subspace comp = quotient_complement(Subspace::full(big), b);
  int q = comp.dim();
  Mat stacked = b.basis().vstack(comp.basis());
  auto project = [&](const std::vector<Rational>& v) {
    auto c = coordinates_in_rows(stacked, v);
    std::vector<Rational> out(q);
    for (int i = 0; i < q; ++i) out[i] = (*c)[b.dim() + i];
    return out;
  };
  PlainModule out;
  out.algebra = e.algebra;
  out.dim = q;
  for (int a = 0; a < ad; ++a) {
    Mat on_q(q, q);
    for (int j = 0; j < q; ++j) {
      auto lifted = comp.basis().row(j);
      std::vector<Rational> img(big, Rational(0));
      for (int x = 0; x < ed; ++x)
        for (int y = 0; y < fd; ++y) {
          const Rational& c = lifted[static_cast<size_t>(x) * fd + y];
          if (c == 0) continue;
          img = vec_add(img, vec_scale(c, vec_kron(std_basis(ed, x),
                                                   mat_apply(f.act[a], std_basis(fd, y)))));
        }
      auto pq = project(img);
      for (int i = 0; i < q; ++i) on_q.at(i, j) = pq[i];
    }
    out.act.push_back(on_q);
  }
  return out;
}

ConLinearMap canonical_iso(CanonicalIso which, const ConVectorSpace& e, const ConVectorSpace& f,
                           const ConVectorSpace* g) {
  ConVectorSpace e_dual = construct(ConstructKind::Dual, e);
  ConVectorSpace f_dual = construct(ConstructKind::Dual, f);
  switch (which) {
    case CanonicalIso::HomAsStrongTensor: {
      // y ⊗ α ↦ (x ↦ y·α(x)); identity in vec coordinates.
      ConVectorSpace src = construct(ConstructKind::StrongTensor, f, &e_dual);
      ConVectorSpace dst = construct(ConstructKind::Hom, e, &f);
      return ConLinearMap(src, dst, Mat::identity(src.ambient));
    }
    case CanonicalIso::DualOfTensor: {
      // α ⊗ β ↦ (x⊗y ↦ α(x)·β(y)) into (E ⊗ F)*.
      ConVectorSpace src = construct(ConstructKind::StrongTensor, e_dual, &f_dual);
      ConVectorSpace tens = construct(ConstructKind::Tensor, e, &f);
      ConVectorSpace dst = construct(ConstructKind::Dual, tens);
      return ConLinearMap(src, dst, Mat::identity(src.ambient));
    }
    case CanonicalIso::DualOfStrongTensor: {
      ConVectorSpace src = construct(ConstructKind::Tensor, e_dual, &f_dual);
      ConVectorSpace tens = construct(ConstructKind::StrongTensor, e, &f);
      ConVectorSpace dst = construct(ConstructKind::Dual, tens);
      return ConLinearMap(src, dst, Mat::identity(src.ambient));
    }
    case CanonicalIso::HomAdjunction: {
      if (g == nullptr) throw Error("ArityMismatch", "adjunction needs a third flag");
      // Λ ↦ (y ↦ Σ_i Λ(e_i ⊗ y) ⊗ e^i); the index shuffle is the identity in
      // the fixed row-major coordinates.
      ConVectorSpace tens = construct(ConstructKind::Tensor, e, &f);
      ConVectorSpace src = construct(ConstructKind::Hom, tens, g);
      ConVectorSpace ge = construct(ConstructKind::StrongTensor, *g, &e_dual);
      ConVectorSpace dst = construct(ConstructKind::Hom, f, &ge);
      return ConLinearMap(src, dst, Mat::identity(src.ambient));
    }
  }
  throw Error("InternalInvariant", "unreachable");
}

DualBasisReport verify_dual_basis(const ConModuleFD& e, const ConDualBasis& db) {
  DualBasisReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.reason = why;
    return rep;
  };
  int n = e.dim();
  int count = db.index.size();
  if (static_cast<int>(db.vectors.size()) != count || static_cast<int>(db.covectors.size()) != count)
    return fail("index/vector/covector counts differ");
  for (const auto& cov : db.covectors)
    if (cov.rows() != e.algebra.dim() || cov.cols() != n) return fail("covector shape");
  // Reconstruction x = Σ e_j · e^j(x) on the Total standard basis.
  for (int k = 0; k < n; ++k) {
    auto x = std_basis(n, k);
    std::vector<Rational> acc(n, Rational(0));
    for (int j = 0; j < count; ++j)
      acc = vec_add(acc, e.action(db.vectors[j], mat_apply(db.covectors[j], x)));
    if (acc != x) return fail("reconstruction fails on basis vector " + std::to_string(k + 1));
  }
  HomModule dual = module_dual(e);
  auto dual_coords = [&](const Mat& cov) -> std::optional<std::vector<Rational>> {
    std::vector<Rational> v(static_cast<size_t>(cov.rows()) * cov.cols());
    for (int r = 0; r < cov.rows(); ++r)
      for (int c = 0; c < cov.cols(); ++c) v[static_cast<size_t>(r) * cov.cols() + c] = cov.at(r, c);
    return coordinates_in_rows(dual.embed.transpose(), v);
  };
  for (int j = 0; j < count; ++j) {
    if (db.index.in_w(j) && !e.space.w.contains(db.vectors[j]))
      return fail("e_" + db.index.labels()[j] + " not in E_W");
    if (db.index.in_n(j) && !e.space.n.contains(db.vectors[j]))
      return fail("e_" + db.index.labels()[j] + " not in E_N");
  }
  for (int j = 0; j < count; ++j) {
    auto hc = dual_coords(db.covectors[j]);
    if (!hc) return fail("covector " + db.index.labels()[j] + " is not A-linear");
    if (!db.index.in_n(j) && !dual.hom.space.w.contains(*hc))
      return fail("e^" + db.index.labels()[j] + " not in (E*)_W");
    if (!db.index.in_w(j) && !dual.hom.space.n.contains(*hc))
      return fail("e^" + db.index.labels()[j] + " not in (E*)_N");
  }
  return rep;
}

ConDualBasis standard_dual_basis(const ConVectorSpace& e) {
  Subspace wn = quotient_complement(e.w, e.n);
  Subspace tw = quotient_complement(Subspace::full(e.ambient), e.w);
  Mat basis = e.n.basis().vstack(wn.basis()).vstack(tw.basis());
  int n = e.ambient;
  // Invert basis^T to get covectors: e^j = row j of (basis^T)^{-1}.
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = basis.at(j, i);
    aug.at(i, n + i) = 1;
  }
  Mat red = rref(aug);
  for (int i = 0; i < n; ++i)
    if (red.at(i, i) != 1) throw Error("InternalInvariant", "adapted basis not invertible");
  ConDualBasis db;
  db.index = ConIndexSet::from_dim(e.dims());
  for (int j = 0; j < n; ++j) {
    db.vectors.push_back(basis.row(j));
    Mat cov(1, n);
    for (int c = 0; c < n; ++c) cov.at(0, c) = red.at(j, n + c);
    db.covectors.push_back(cov);
  }
  return db;
}

DerivationSpace derivations(const ConAlgebraFD& a) {
  int n = a.dim();
  std::vector<Mat> rmul;
  for (int j = 0; j < n; ++j) {
    Mat r(n, n);
    for (int i = 0; i < n; ++i) {
      auto col = a.product(std_basis(n, i), std_basis(n, j));
      for (int k = 0; k < n; ++k) r.at(k, i) = col[k];
    }
    rmul.push_back(r);
  }
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto p = a.product(std_basis(n, i), std_basis(n, j));
      for (int r = 0; r < n; ++r) {
        std::vector<Rational> row(static_cast<size_t>(n) * n, Rational(0));
        for (int c = 0; c < n; ++c) row[static_cast<size_t>(r) * n + c] += p[c];
        for (int s = 0; s < n; ++s) {
          row[static_cast<size_t>(s) * n + i] -= rmul[j].at(r, s);
          row[static_cast<size_t>(s) * n + j] -= a.lmul[i].at(r, s);
        }
        rows.push_back(std::move(row));
      }
    }
  Mat sys(static_cast<int>(rows.size()), n * n);
  for (size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
  Subspace der_t = kernel(sys);
  int dd = der_t.dim();

  auto cut = [&](const Mat& cond_rows) {
    Subspace s = subspace_intersect(der_t, kernel(cond_rows));
    std::vector<std::vector<Rational>> coords;
    for (const auto& v : s.basis_vectors()) coords.push_back(*der_t.coordinates(v));
    return Subspace::span_vectors(dd, coords);
  };
  Mat w_rows = inclusion_rows(a.space.w.basis_vectors(), a.space.w, n, n)
                   .vstack(inclusion_rows(a.space.n.basis_vectors(), a.space.n, n, n));
  Mat n_rows = inclusion_rows(a.space.w.basis_vectors(), a.space.n, n, n);

  DerivationSpace out;
  out.space = ConVectorSpace(dd, cut(w_rows), cut(n_rows));
  out.embed = der_t.basis().transpose();
  return out;
}

std::vector<Rational> ConLieAlgebraFD::apply(const std::vector<Rational>& x,
                                             const std::vector<Rational>& y) const {
  int n = space.ambient;
  std::vector<Rational> r(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      r = vec_add(r, vec_scale(x[i] * y[j], bracket[i][j]));
    }
  }
  return r;
}

void ConLieAlgebraFD::check_invariants() const {
  int n = space.ambient;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sign = parity(degrees[i] + shift_k, degrees[j] + shift_k) ? 1 : -1;
      // [x,y] = -(-1)^{(|x|+k)(|y|+k)} [y,x]
      auto rhs = vec_scale(Rational(sign), bracket[j][i]);
      if (bracket[i][j] != rhs) throw Error("IllDefinedQuotient", "graded antisymmetry fails");
      for (size_t c = 0; c < bracket[i][j].size(); ++c)
        if (bracket[i][j][c] != 0 && degrees[c] != degrees[i] + degrees[j] + shift_k)
          throw Error("IllDefinedQuotient", "bracket not homogeneous of degree k");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        auto lhs = apply(std_basis(n, i), apply(std_basis(n, j), std_basis(n, m)));
        auto t1 = apply(apply(std_basis(n, i), std_basis(n, j)), std_basis(n, m));
        int sign = parity(degrees[i] + shift_k, degrees[j] + shift_k) ? -1 : 1;
        auto t2 = vec_scale(Rational(sign),
                            apply(std_basis(n, j), apply(std_basis(n, i), std_basis(n, m))));
        if (lhs != vec_add(t1, t2)) throw Error("IllDefinedQuotient", "graded Jacobi fails");
      }
  for (const auto& x : space.w.basis_vectors())
    for (const auto& y : space.w.basis_vectors())
      if (!space.w.contains(apply(x, y)))
        throw Error("IllDefinedQuotient", "[W,W] not inside W");
  for (const auto& x : space.w.basis_vectors())
    for (const auto& y : space.n.basis_vectors())
      if (!space.n.contains(apply(x, y)) || !space.n.contains(apply(y, x)))
        throw Error("IllDefinedQuotient", "[W,N] not inside N");
}

PlainLieAlgebra reduce(const ConLieAlgebraFD& g) {
  ReducedSpace rs = reduce(g.space);
  PlainLieAlgebra out;
  out.dim = rs.dim;
  out.shift_k = g.shift_k;
  for (int i = 0; i < rs.dim; ++i) {
    auto rep = rs.rep_rows.row(i);
    int deg = 0;
    bool found = false;
    for (int c = 0; c < g.space.ambient; ++c)
      if (rep[c] != 0) {
        if (found && g.degrees[c] != deg)
          throw Error("IllDefinedQuotient", "inhomogeneous quotient representative");
        deg = g.degrees[c];
        found = true;
      }
    out.degrees.push_back(deg);
  }
  out.bracket.assign(rs.dim, std::vector<std::vector<Rational>>(rs.dim));
  for (int i = 0; i < rs.dim; ++i)
    for (int j = 0; j < rs.dim; ++j)
      out.bracket[i][j] = rs.project(g.apply(rs.rep_rows.row(i), rs.rep_rows.row(j)));
  return out;
}

}  // namespace conred
