#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conred/calg.hpp"
#include "conred/randgen.hpp"

using namespace conred;

namespace {

ConVectorSpace flag(int t, int w, int n) { return ConVectorSpace::coordinate_flag(ConDim(t, w, n)); }

// Q(i) as a constraint algebra over Q, basis {1, i}, flags (Q(i), Q, 0).
ConAlgebraFD gaussian_rationals() {
  ConAlgebraFD a;
  a.space = flag(2, 1, 0);
  a.lmul = {Mat::identity(2), Mat::from_rows({{0, -1}, {1, 0}})};
  a.unit = {Rational(1), Rational(0)};
  return a;
}

// (Q(i), Q(i), 0) as a module over gaussian_rationals().
ConModuleFD gaussian_module() {
  ConModuleFD e = ConModuleFD::regular(gaussian_rationals());
  e.space = flag(2, 2, 0);
  return e;
}

}  // namespace

TEST_CASE("classify_morphism fixed examples") {
  auto all = classify_morphism(ConLinearMap::identity(flag(3, 2, 1)));
  CHECK(all.mono);
  CHECK(all.epi);
  CHECK(all.regular_mono);
  CHECK(all.regular_epi);
  CHECK(all.iso);

  // id : (Q,Q,0) -> (Q,Q,Q)
  ConLinearMap up(flag(1, 1, 0), flag(1, 1, 1), Mat::identity(1));
  auto c = classify_morphism(up);
  CHECK(c.mono);
  CHECK(c.epi);
  CHECK_FALSE(c.regular_mono);
  CHECK_FALSE(c.regular_epi);
  CHECK_FALSE(c.iso);

  ConLinearMap zero(flag(1, 1, 1), flag(1, 1, 1), Mat::zero(1, 1));
  auto z = classify_morphism(zero);
  CHECK_FALSE(z.mono);
  CHECK_FALSE(z.epi);

  ConLinearMap bad(flag(2, 1, 0), flag(2, 1, 0), Mat::from_rows({{0, 0}, {1, 0}}));
  CHECK_THROWS_WITH_AS(classify_morphism(bad), doctest::Contains("NotConstraintMap"), Error);
}

TEST_CASE("kernel and images") {
  auto ker = kernel_image(ConLinearMap::identity(flag(2, 1, 0)), KernelImageKind::Kernel);
  CHECK(ker.dims() == ConDim(0, 0, 0));

  ConLinearMap zero(flag(2, 1, 1), flag(2, 2, 0), Mat::zero(2, 2));
  CHECK(kernel_image(zero, KernelImageKind::Image).dims() == ConDim(0, 0, 0));

  // Phi: (Q^2, span e1, 0) -> (Q^2, Q^2, span e1), matrix = id.
  ConLinearMap phi(flag(2, 1, 0), flag(2, 2, 1), Mat::identity(2));
  auto img = kernel_image(phi, KernelImageKind::Image);
  CHECK(img.t == Subspace::full(2));
  CHECK(img.w == Subspace::span(2, Mat::from_rows({{1, 0}})));
  CHECK(img.n.dim() == 0);
  auto rimg = kernel_image(phi, KernelImageKind::RegularImage);
  CHECK(rimg.w == Subspace::span(2, Mat::from_rows({{1, 0}})));
  CHECK(rimg.n == Subspace::span(2, Mat::from_rows({{1, 0}})));
}

TEST_CASE("construct fixed examples") {
  // dual of (Q^3, span{e1,e2}, span{e1}).
  ConVectorSpace d = construct(ConstructKind::Dual, flag(3, 2, 1));
  CHECK(d.w == Subspace::span(3, Mat::from_rows({{0, 1, 0}, {0, 0, 1}})));
  CHECK(d.n == Subspace::span(3, Mat::from_rows({{0, 0, 1}})));

  ConVectorSpace e = flag(2, 1, 0), f = flag(1, 1, 1);
  ConVectorSpace ds = construct(ConstructKind::DSum, e, &f);
  CHECK(ds.dims() == ConDim(3, 2, 1));

  // tensor of E=(Q,Q,0) and F=(Q,Q,Q): N-part = E_W⊗F_N + E_N⊗F_W = Q.
  ConVectorSpace t = construct(ConstructKind::Tensor, flag(1, 1, 0), &f);
  CHECK(t.dims() == ConDim(1, 1, 1));
}

TEST_CASE("reduce") {
  CHECK(reduce(flag(3, 2, 1)).dim == 1);
  CHECK(reduce(ConLinearMap::identity(flag(3, 2, 1))) == Mat::identity(1));

  ConModuleFD e = gaussian_module();
  e.check_invariants(true);
  CHECK(reduce(e).dim == 2);
}

TEST_CASE("tensor over the algebra: the reduction gap") {
  ConModuleFD e = gaussian_module();
  ConModuleFD prod = tensor_over_algebra(e, e, TensorFlavor::Tensor);
  CHECK(prod.dim() == 2);  // C ⊗_C C = C, two-dimensional over Q
  CHECK(prod.space.w.dim() == 2);
  CHECK(prod.space.n.dim() == 0);
  CHECK(reduce(prod).dim == 2);

  ConModuleFD strong = tensor_over_algebra(e, e, TensorFlavor::Strong);
  CHECK(strong.space.n.dim() == 0);

  // E ⊗_A A ≅ E on Total dimensions.
  ConModuleFD ea = tensor_over_algebra(e, ConModuleFD::regular(gaussian_rationals()),
                                       TensorFlavor::Tensor);
  CHECK(ea.dim() == e.dim());

  // Reducing first and tensoring over the reduced base gives a different
  // dimension: the reduction functor is not monoidal over a general base.
  PlainModule ered = reduce(e);
  CHECK(ered.dim == 2);
  CHECK(ered.algebra.dim == 1);
  PlainModule rhs = plain_tensor_over_algebra(ered, ered);
  CHECK(rhs.dim == 4);
  CHECK(reduce(prod).dim != rhs.dim);
}

TEST_CASE("canonical isos on fixed flags") {
  ConVectorSpace e1 = flag(1, 1, 0);
  auto iso = canonical_iso(CanonicalIso::HomAsStrongTensor, e1, e1);
  CHECK(iso.matrix == Mat::identity(1));
  CHECK(classify_morphism(iso).iso);

  ConVectorSpace e = flag(2, 1, 0), f = flag(1, 1, 1);
  CHECK(classify_morphism(canonical_iso(CanonicalIso::DualOfTensor, e, f)).iso);
  CHECK(classify_morphism(canonical_iso(CanonicalIso::DualOfStrongTensor, e, f)).iso);
  ConVectorSpace g = flag(2, 2, 1);
  CHECK(classify_morphism(canonical_iso(CanonicalIso::HomAdjunction, e, f, &g)).iso);
}

TEST_CASE("randomized §2 laws") {
  std::mt19937_64 rng(2024);
  int iso_trials = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int ne = randgen::uniform(rng, 1, 3), nf = randgen::uniform(rng, 1, 3);
    ConVectorSpace e = randgen::flag(rng, ne), f = randgen::flag(rng, nf);

    // Reduction is additive and monoidal over k.
    ConVectorSpace ds = construct(ConstructKind::DSum, e, &f);
    CHECK(reduce(ds).dim == reduce(e).dim + reduce(f).dim);
    ConVectorSpace tens = construct(ConstructKind::Tensor, e, &f);
    ConVectorSpace strong = construct(ConstructKind::StrongTensor, e, &f);
    CHECK(reduce(tens).dim == reduce(e).dim * reduce(f).dim);
    CHECK(reduce(strong).dim == reduce(e).dim * reduce(f).dim);

    // Natural injection Hom(E,F)_red -> Hom(E_red, F_red): dim comparison.
    ConVectorSpace hom = construct(ConstructKind::Hom, e, &f);
    CHECK(reduce(hom).dim <= reduce(e).dim * reduce(f).dim);

    for (auto which : {CanonicalIso::HomAsStrongTensor, CanonicalIso::DualOfTensor,
                       CanonicalIso::DualOfStrongTensor}) {
      auto c = classify_morphism(canonical_iso(which, e, f));
      CHECK(c.iso);
      ++iso_trials;
    }

    // Mono/epi equivalences on a random constraint map.
    ConLinearMap phi = randgen::constraint_map(rng, e, f);
    auto c = classify_morphism(phi);
    CHECK(c.iso == (c.mono && c.regular_epi));
    CHECK(c.iso == (c.regular_mono && c.epi));
  }
  CHECK(iso_trials >= 100);
}

TEST_CASE("verify_dual_basis") {
  ConModuleFD e = ConModuleFD::from_flag(flag(2, 1, 0));
  ConDualBasis db = standard_dual_basis(e.space);
  CHECK(verify_dual_basis(e, db).ok);

  // Same vectors, wrong index set: W = {2} instead of {1}.
  ConDualBasis wrong = db;
  wrong.index = ConIndexSet({"1", "2"}, {false, true}, {false, false});
  auto rep = verify_dual_basis(e, wrong);
  CHECK_FALSE(rep.ok);
  CHECK(rep.reason.find("E_W") != std::string::npos);

  ConModuleFD zero = ConModuleFD::from_flag(flag(0, 0, 0));
  ConDualBasis empty;
  CHECK(verify_dual_basis(zero, empty).ok);

  // Reduced families form a dual basis of the reduced module.
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    ConVectorSpace v = randgen::flag(rng, randgen::uniform(rng, 1, 4));
    ConDualBasis adapted = standard_dual_basis(v);
    CHECK(verify_dual_basis(ConModuleFD::from_flag(v), adapted).ok);
    ReducedSpace rs = reduce(v);
    auto red_labels = cindex_reduce(adapted.index);
    CHECK(static_cast<int>(red_labels.size()) == rs.dim);
    // Reconstruction on the quotient: sum_j red(e_j)·red(e^j)(x) = x.
    for (int k = 0; k < rs.dim; ++k) {
      auto x = rs.rep_rows.row(k);
      std::vector<Rational> acc(v.ambient, Rational(0));
      for (int j = 0; j < adapted.index.size(); ++j) {
        if (!(adapted.index.in_w(j) && !adapted.index.in_n(j))) continue;
        Rational coeff = mat_apply(adapted.covectors[j], x)[0];
        acc = vec_add(acc, vec_scale(coeff, adapted.vectors[j]));
      }
      std::vector<Rational> q(rs.dim, Rational(0));
      q[k] = 1;
      CHECK(rs.project(acc) == q);
    }
  }
}

TEST_CASE("derivations") {
  auto zero = derivations(ConAlgebraFD::scalar_field());
  CHECK(zero.space.ambient == 0);

  // A = Q[x]/(x^2), flag (A, A, span x): Der_T = span(x d/dx).
  ConAlgebraFD a;
  a.space = ConVectorSpace(2, Subspace::full(2), Subspace::span(2, Mat::from_rows({{0, 1}})));
  a.lmul = {Mat::identity(2), Mat::from_rows({{0, 0}, {1, 0}})};
  a.unit = {Rational(1), Rational(0)};
  a.check_invariants(false);
  auto der = derivations(a);
  CHECK(der.space.ambient == 1);
  CHECK(der.space.w.dim() == 1);  // x d/dx preserves the flag
  // The embedded matrix is x d/dx: kills 1, maps x to x.
  auto v = mat_apply(der.embed, std::vector<Rational>{Rational(1)});
  Mat d(2, 2, v);
  CHECK(mat_apply(d, {Rational(1), Rational(0)}) == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(mat_apply(d, {Rational(0), Rational(1)}) == std::vector<Rational>{Rational(0), Rational(1)});

  // Commutators of W-derivations stay in W (closure of the constraint Lie algebra).
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto d1v = randgen::element_of(rng, der.space.w), d2v = randgen::element_of(rng, der.space.w);
    Mat d1(2, 2, mat_apply(der.embed, d1v)), d2(2, 2, mat_apply(der.embed, d2v));
    Mat comm = d1 * d2 - d2 * d1;
    std::vector<Rational> vec(4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) vec[r * 2 + c] = comm.at(r, c);
    auto coords = coordinates_in_rows(der.embed.transpose(), vec);
    REQUIRE(coords.has_value());
    CHECK(der.space.w.contains(*coords));
  }
}

TEST_CASE("graded constraint Lie algebra") {
  // so(3): [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2, degree 0, flag (g,g,0).
  ConLieAlgebraFD g;
  g.space = flag(3, 3, 0);
  g.degrees = {0, 0, 0};
  g.shift_k = 0;
  auto vec = [](int a, int b, int c) {
    return std::vector<Rational>{Rational(a), Rational(b), Rational(c)};
  };
  g.bracket = {{vec(0, 0, 0), vec(0, 0, 1), vec(0, -1, 0)},
               {vec(0, 0, -1), vec(0, 0, 0), vec(1, 0, 0)},
               {vec(0, 1, 0), vec(-1, 0, 0), vec(0, 0, 0)}};
  g.check_invariants();

  // Heisenberg with flag (g, span{e1,e3}, span{e3}): [e1,e2] = e3.
  ConLieAlgebraFD h;
  h.space = ConVectorSpace(3, Subspace::span(3, Mat::from_rows({{1, 0, 0}, {0, 0, 1}})),
                           Subspace::span(3, Mat::from_rows({{0, 0, 1}})));
  h.degrees = {0, 0, 0};
  h.bracket = {{vec(0, 0, 0), vec(0, 0, 1), vec(0, 0, 0)},
               {vec(0, 0, -1), vec(0, 0, 0), vec(0, 0, 0)},
               {vec(0, 0, 0), vec(0, 0, 0), vec(0, 0, 0)}};
  h.check_invariants();
  PlainLieAlgebra hr = reduce(h);
  CHECK(hr.dim == 1);
  CHECK(vec_is_zero(hr.bracket[0][0]));

  // A diagonal sign flip stays a Lie algebra (so(2,1)); Jacobi still holds.
  ConLieAlgebraFD flipped = g;
  flipped.bracket[0][1] = vec(0, 0, -1);
  flipped.bracket[1][0] = vec(0, 0, 1);
  CHECK_NOTHROW(flipped.check_invariants());

  // Replacing [e3,e1] = e2 by e1 genuinely breaks Jacobi.
  ConLieAlgebraFD bad = g;
  bad.bracket[2][0] = vec(1, 0, 0);
  bad.bracket[0][2] = vec(-1, 0, 0);
  CHECK_THROWS_WITH_AS(bad.check_invariants(), doctest::Contains("Jacobi"), Error);
}
