#include "corep/cli/catalog.hpp"
#include "corep/cli/config.hpp"

#include <algorithm>

namespace corep::cli {

namespace {

using C = std::complex<double>;

ComplexMatrix pauli(int k)
{
  ComplexMatrix m(2, 2);
  switch (k) {
  case 0: m << 0, 1, 1, 0; break;
  case 1: m << 0, C(0, -1), C(0, 1), 0; break;
  default: m << 1, 0, 0, -1; break;
  }
  return m;
}

CatalogEntry so2_conj()
{
  ComplexMatrix x(2, 2);
  x << 0, -1, 1, 0;
  return {"so2-conj", "SO(2) real irrep with complex conjugation (N = E, s = +1)",
          LieGroupSpec<double>("so2-conj", {x}),
          AntilinearExtension<double>(ComplexMatrix::Identity(2, 2), 1)};
}

CatalogEntry su2_tr()
{
  // X_sigma = -(i/2) sigma_sigma; time reversal N = i sigma_y.
  std::vector<ComplexMatrix> gens;
  for (int k = 0; k < 3; ++k)
    gens.push_back(C(0, -0.5) * pauli(k));
  return {"su2-tr", "SU(2) spin-1/2 with time reversal (N = i sigma_y, s = +1)",
          LieGroupSpec<double>("su2-tr", std::move(gens)),
          AntilinearExtension<double>(C(0, 1) * pauli(1), 1)};
}

CatalogEntry u1()
{
  ComplexMatrix x(1, 1);
  x << C(0, 1);
  return {"u1", "U(1) on C with complex conjugation (N = 1, s = +1)", LieGroupSpec<double>("u1", {x}),
          AntilinearExtension<double>(ComplexMatrix::Identity(1, 1), 1)};
}

CatalogEntry so3()
{
  // (L_k)_{ij} = -epsilon_{kij}
  std::vector<ComplexMatrix> gens;
  for (int k = 0; k < 3; ++k) {
    ComplexMatrix l = ComplexMatrix::Zero(3, 3);
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    l(i, j) = -1;
    l(j, i) = 1;
    gens.push_back(l);
  }
  return {"so3", "SO(3) vector irrep with complex conjugation (N = E, s = +1)",
          LieGroupSpec<double>("so3", std::move(gens)),
          AntilinearExtension<double>(ComplexMatrix::Identity(3, 3), 1)};
}

} // namespace

const std::vector<std::string> &catalog_names()
{
  static const std::vector<std::string> names{"so2-conj", "su2-tr", "u1", "so3"};
  return names;
}

CatalogEntry catalog_entry(const std::string &name)
{
  if (name == "so2-conj")
    return so2_conj();
  if (name == "su2-tr")
    return su2_tr();
  if (name == "u1")
    return u1();
  if (name == "so3")
    return so3();
  std::string known;
  for (const auto &n : catalog_names())
    known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown catalog group '" + name + "' (known: " + known + ")");
}

} // namespace corep::cli
