#pragma once

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational_function.hpp"

#include <string>
#include <vector>

namespace hurwitz {

// Curve x = (z-1)^2/z, y = z/(z-1)^3 with deck involution z -> 1/z. All
// functions are in the variable v0, except K, which is K(z1, z) in (v0, v1)
// with the differentials stripped.
struct SpectralData {
  RationalFunction x, y, dx, K;
};
const SpectralData& spectral_data();

// f(1/z) d(1/z)/dz in the variable v
RationalFunction sigma_pullback(const RationalFunction& f, int v);

// omega = F dz1 ... dzn with z_i the variable v_{i-1}.
struct MultiDifferential {
  int g = 0, n = 0;
  RationalFunction F;
};

// omega_{0,1} = y dx and omega_{0,2} = dz1 dz2/(z1 - z2)^2.
MultiDifferential initial_omega(int g, int n);

// omega_{g,n} for 2g-2+n > 0 by the residue recursion at z = -1. Results are
// memoized for the process.
MultiDifferential ceo_omega(int g, int n);

// [s_1^{k_1} ... s_n^{k_n}] G, where s_i = 1/x(z_i) and G is expanded at z_i = oo.
Rational x_coefficient(const RationalFunction& G, const std::vector<int>& k);

// C_{g,n}(mu): coefficient of prod x_i^{-mu_i - 1} dx_i in omega. For (0,2)
// the double pole dx1 dx2/(x1 - x2)^2 is removed first.
Rational extract_C(const MultiDifferential& omega, const Composition& mu);

// Cut-and-join recursion with C_{0,1}(1) = 1; n is the length of mu.
Rational cut_and_join_C(int g, const Composition& mu);

// Closed forms for (g,n) in {(0,1), (0,2), (0,3)}.
Rational closed_form_C(int g, int n, const Composition& mu);

// f_0 = 2 z^2/((z-1)(z+1)^3) and f_a = -(d/dx) x f_{a-1}.
RationalFunction f_a(int a);

// Empty when omega is antisymmetric under z_i -> 1/z_i in every variable and
// has poles only at z_i = +-1 with at most a simple pole at z_i = 1.
std::vector<std::string> invariant_violations(const MultiDifferential& omega);

}  // namespace hurwitz
