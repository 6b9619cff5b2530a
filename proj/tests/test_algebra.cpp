#include "corep/algebra.hpp"
#include "corep/cli/catalog.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace corep;
using corep::testing::C;

namespace {

struct Setup {
  GeneratorBasis<double> basis;
  TransportMap<double> map;
};

Setup setup(const std::string &name, ExtractionMode mode = ExtractionMode::exact, double xi = 0.0)
{
  const auto entry = cli::catalog_entry(name);
  const AntilinearExtension<double> ext(entry.extension->N, entry.extension->s, xi);
  auto basis = make_generator_basis(entry.group, std::optional(ext), mode);
  auto map = transport_map(ext, basis.ctype);
  return {std::move(basis), std::move(map)};
}

} // namespace

TEST_CASE("project_onto_span: basis member, real-field orthogonality, empty basis")
{
  std::mt19937_64 rng(41);
  const std::vector<ComplexMatrix> basis{corep::testing::random_matrix(rng, 2, 2),
                                         corep::testing::random_matrix(rng, 2, 2)};
  const auto p = project_onto_span<double>(basis[0], basis);
  CHECK(p.coeffs(0) == doctest::Approx(1).epsilon(1e-12));
  CHECK(std::abs(p.coeffs(1)) < 1e-12);
  CHECK(p.residual < 1e-12);

  const std::vector<ComplexMatrix> real_e{ComplexMatrix::Identity(2, 2)};
  const ComplexMatrix ie = C(0, 1) * ComplexMatrix::Identity(2, 2);
  const auto q = project_onto_span<double>(ie, real_e);
  CHECK(std::abs(q.coeffs(0)) < 1e-15);
  CHECK(q.residual == doctest::Approx(ie.norm()));
  CHECK(complex_span_residual<double>(ie, real_e) < 1e-15);

  CHECK_THROWS_AS(project_onto_span<double>(ie, std::vector<ComplexMatrix>{}), InvalidArgument);
  CHECK_THROWS_AS(project_onto_span<double>(ie, std::vector<ComplexMatrix>{ComplexMatrix::Identity(3, 3)}),
                  DimensionError);
}

TEST_CASE("project_onto_span recovers random real combinations")
{
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ComplexMatrix> basis;
    Eigen::VectorXd c(4);
    ComplexMatrix target = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < 4; ++k) {
      basis.push_back(corep::testing::random_matrix(rng, 3, 3));
      c(k) = normal(rng);
      target += c(k) * basis.back();
    }
    const auto p = project_onto_span<double>(target, basis);
    CHECK((p.coeffs - c).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(p.residual < 1e-10);
  }
}

TEST_CASE("structure constants: abelian SO(2)")
{
  const auto sc = structure_constants_subgroup(cli::catalog_entry("so2-conj").group.generators());
  CHECK(sc.n == 1);
  CHECK(sc(0, 0, 0) == 0);
  CHECK(sc.closed);
}

TEST_CASE("structure constants: su(2) follows -epsilon under the field bracket")
{
  // [X_a, X_b] = eps_abc X_c for X = -(i/2) sigma; the field bracket is the
  // negative matrix commutator, so c^c_{ab} = -eps_abc.
  const auto gens = cli::catalog_entry("su2-tr").group.generators();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const ComplexMatrix comm = gens[a] * gens[b] - gens[b] * gens[a];
      ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
      for (int c = 0; c < 3; ++c)
        expected += double(corep::testing::levi_civita(a, b, c)) * gens[c];
      REQUIRE(max_abs(ComplexMatrix(comm - expected)) < 1e-15);
    }
  const auto sc = structure_constants_subgroup(gens);
  for (int t = 0; t < 3; ++t)
    for (int s = 0; s < 3; ++s)
      for (int r = 0; r < 3; ++r) {
        CHECK(std::abs(sc(t, s, r) + corep::testing::levi_civita(s, r, t)) < 1e-9);
        CHECK(sc(t, s, r) + sc(t, r, s) == 0);
      }
  CHECK(sc.max_residual() < 1e-9);
}

TEST_CASE("structure constants scale with the basis")
{
  auto gens = cli::catalog_entry("su2-tr").group.generators();
  const auto base = structure_constants_subgroup(gens);
  for (auto &g : gens)
    g *= 2.0;
  const auto scaled = structure_constants_subgroup(gens);
  for (std::size_t k = 0; k < base.values.size(); ++k)
    CHECK(scaled.values[k] == doctest::Approx(2 * base.values[k]).epsilon(1e-12));
}

TEST_CASE("structure constants: open subgroup is reported")
{
  auto gens = cli::catalog_entry("su2-tr").group.generators();
  gens[0](0, 0) += 1e-2;
  CHECK_THROWS_AS(structure_constants_subgroup(gens), NotClosed);
  const auto sc = compute_structure_constants(gens, 1e-9);
  CHECK_FALSE(sc.closed);
  CHECK(sc.max_residual() > 1e-4);
}

TEST_CASE("so2-conj: every closure family passes")
{
  const auto [basis, map] = setup("so2-conj");
  const auto sub = verify_subgroup_closure(basis);
  const auto cc = verify_coset_coset_closure(basis, map);
  const auto mixed = verify_mixed_closure(basis, map);
  CHECK(sub.passed);
  CHECK(sub.pairs.empty());
  CHECK(cc.passed);
  CHECK(cc.pairs.size() == 1);  // (0, 1); diagonal pairs are skipped
  CHECK(cc.max_residual() < 1e-9);
  CHECK(mixed.passed);
  CHECK(mixed.pairs.size() == 2);
  CHECK(mixed.max_residual() < 1e-9);
}

TEST_CASE("mixed bracket with X'_0 = iE vanishes")
{
  const auto [basis, map] = setup("so3");
  const auto mixed = verify_mixed_closure(basis, map);
  for (const auto &p : mixed.pairs)
    if (p.second == 0) {
      CHECK(p.coeffs.norm() < 1e-14);
      CHECK(p.residual < 1e-14);
    }
  CHECK(mixed.passed);
  CHECK(verify_coset_coset_closure(basis, map).passed);
}

TEST_CASE("su2-tr: subgroup closes, coset families close only over the complex field")
{
  // Reference residuals from an independent dense computation: brackets
  // involving X'_0 = iN = -sigma_y are Hermitian and fall outside the real
  // span of the anti-Hermitian subgroup/coset bases.
  for (auto mode : {ExtractionMode::exact, ExtractionMode::finite_difference}) {
    const auto [basis, map] = setup("su2-tr", mode);
    CHECK(verify_subgroup_closure(basis).passed);
    const auto cc = verify_coset_coset_closure(basis, map);
    const auto mixed = verify_mixed_closure(basis, map);
    CHECK(cc.pairs.size() == 6);
    CHECK(mixed.pairs.size() == 12);
    CHECK_FALSE(cc.passed);
    CHECK_FALSE(mixed.passed);
    CHECK(cc.max_residual() == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(mixed.max_residual() == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(cc.complex_passed());
    CHECK(mixed.complex_passed());
    // Pairs free of X'_0 in the coset-coset family close over the reals.
    for (const auto &p : cc.pairs)
      if (p.first != 0)
        CHECK(p.residual < 1e-9);
  }
}

TEST_CASE("closure residuals are xi-independent")
{
  for (const std::string name : {"so2-conj", "su2-tr"}) {
    const auto [b0, m0] = setup(name, ExtractionMode::finite_difference, 0.0);
    const auto [b1, m1] = setup(name, ExtractionMode::finite_difference, 2.17);
    const auto cc0 = verify_coset_coset_closure(b0, m0), cc1 = verify_coset_coset_closure(b1, m1);
    const auto mx0 = verify_mixed_closure(b0, m0), mx1 = verify_mixed_closure(b1, m1);
    for (std::size_t k = 0; k < cc0.pairs.size(); ++k)
      CHECK(std::abs(cc0.pairs[k].residual - cc1.pairs[k].residual) < 1e-9);
    for (std::size_t k = 0; k < mx0.pairs.size(); ++k)
      CHECK(std::abs(mx0.pairs[k].residual - mx1.pairs[k].residual) < 1e-9);
  }
}

TEST_CASE("closure checks need a coset and a map between x and x'")
{
  auto [basis, map] = setup("so2-conj");
  TransportMap<double> bad = map;
  bad.to = Frame::x;
  CHECK_THROWS_AS(verify_coset_coset_closure(basis, bad), FrameMismatch);
  // The x' -> x direction is accepted as well.
  CHECK(verify_coset_coset_closure(basis, map.inverse()).passed);
  basis.coset.clear();
  CHECK_THROWS_AS(verify_mixed_closure(basis, map), InvalidArgument);
}

TEST_CASE("jacobi_check")
{
  const auto gens = cli::catalog_entry("su2-tr").group.generators();
  std::vector<LinearVectorField<double>> su2;
  for (const auto &g : gens)
    su2.push_back(make_operator(g, Frame::x));
  CHECK(jacobi_check<double>(su2) < 1e-12);

  const std::vector<LinearVectorField<double>> repeated{su2[0], su2[0], su2[1]};
  CHECK(jacobi_check<double>(std::span(repeated).first(2)) == 0);

  std::mt19937_64 rng(43);
  std::vector<LinearVectorField<double>> random;
  for (int k = 0; k < 4; ++k)
    random.push_back(make_operator(corep::testing::random_matrix(rng, 3, 3), Frame::x_prime));
  CHECK(jacobi_check<double>(random) < 1e-10);

  random.push_back(make_operator(corep::testing::random_matrix(rng, 3, 3), Frame::x));
  CHECK_THROWS_AS(jacobi_check<double>(random), FrameMismatch);
}

TEST_CASE("algebra_dimension: catalog values")
{
  {
    const auto [basis, map] = setup("so2-conj");
    const auto dim = algebra_dimension(basis, map);
    CHECK(dim.computed == 2);
    CHECK(dim.expected == 2);
    CHECK(dim.classification == DimensionClass::a_degenerate);
    // The certificate is the dependency X'_1 - X_1 = 0.
    REQUIRE(dim.rank.dependency.size() == 3);
    CHECK(std::abs(dim.rank.dependency(0) + dim.rank.dependency(2)) < 1e-12);
    CHECK(std::abs(dim.rank.dependency(1)) < 1e-12);
  }
  {
    const auto [basis, map] = setup("su2-tr");
    const auto dim = algebra_dimension(basis, map);
    CHECK(dim.computed == 7);
    CHECK(dim.expected == 7);
    CHECK(dim.classification == DimensionClass::b_full);
    CHECK(dim.rank.margin >= 1e6);
    CHECK(dim.rank.dependency.size() == 0);
  }
  {
    const auto [basis, map] = setup("so3");
    CHECK(algebra_dimension(basis, map).classification == DimensionClass::a_degenerate);
  }
  {
    auto [basis, map] = setup("su2-tr");
    basis.coset.clear();
    const auto dim = algebra_dimension(basis, map);
    CHECK(dim.computed == 3);
    CHECK(dim.classification == DimensionClass::other);
  }
}

TEST_CASE("algebra_dimension is invariant under a real change of subgroup basis")
{
  std::mt19937_64 rng(44);
  std::normal_distribution<double> normal;
  for (const std::string name : {"so3", "su2-tr"}) {
    auto [basis, map] = setup(name);
    const int before = algebra_dimension(basis, map).computed;
    Eigen::MatrixXd mix(basis.n(), basis.n());
    for (int i = 0; i < basis.n(); ++i)
      for (int j = 0; j < basis.n(); ++j)
        mix(i, j) = normal(rng);
    REQUIRE(std::abs(mix.determinant()) > 1e-3);
    std::vector<ComplexMatrix> mixed(basis.subgroup.size(), ComplexMatrix::Zero(basis.subgroup[0].rows(), basis.subgroup[0].cols()));
    for (int i = 0; i < basis.n(); ++i)
      for (int j = 0; j < basis.n(); ++j)
        mixed[i] += mix(i, j) * basis.subgroup[j];
    basis.subgroup = mixed;
    CHECK(algebra_dimension(basis, map).computed == before);
  }
}
