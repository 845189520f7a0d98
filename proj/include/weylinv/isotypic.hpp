#pragma once

#include <stdexcept>
#include <vector>

#include "weylinv/characters.hpp"
#include "weylinv/coinvariants.hpp"
#include "weylinv/permutation.hpp"
#include "weylinv/polynomial.hpp"

namespace weylinv::polyring {

// Isotypic projector P_xi = (d_xi / k!) sum_sigma chi_xi(sigma) act(., sigma).
// Idempotent, and the projectors over all xi of k sum to the identity.
inline Polynomial isotypic_projector_apply(const combinat::Partition& xi, const Polynomial& f) {
  const int k = f.vars();
  if (xi.size() != k) throw std::invalid_argument("isotypic_projector_apply: |xi| != variable count");
  Polynomial sum(k);
  for (const auto& sigma : combinat::all_permutations(k)) {
    const long long chi = combinat::character(xi, combinat::cycle_type(sigma));
    if (chi == 0) continue;
    sum += exactla::Rational(chi) * act(f, sigma);
  }
  const exactla::Rational scale(combinat::dimension(xi), exactla::factorial(static_cast<unsigned>(k)));
  return scale * sum;
}

// d_xi times the multiplicity of xi in the degree-s piece of the
// coinvariant algebra: project the canonical coinvariant basis and take
// the rank of the image.
inline int isotypic_dimension(const combinat::Partition& xi, int s) {
  const int k = xi.size();
  const auto table = MonomialTable::get(k, s);
  exactla::ReducedBasis image;
  for (const auto& m : coinvariant_basis_monomials(k, s)) {
    Polynomial u(k);
    u.add_term(m, 1);
    const Polynomial projected = coinvariant_normal_form(isotypic_projector_apply(xi, u));
    if (!projected.is_zero()) image.insert(projected.to_sparse(*table));
  }
  return static_cast<int>(image.rank());
}

}  // namespace weylinv::polyring
