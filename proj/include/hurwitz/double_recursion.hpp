#pragma once

#include "hurwitz/hurwitz_spec.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// Refined count N_g(part | rest, nu) with counter l, in the labeling of
// oracle_N: sigma_2 has a distinguished cycle of length `part` containing t_b,
// its other cycles are labeled by `rest`, and t_b = d - nu_last + l. nu is
// positional. b = 2g - 1 + len(rest) + len(nu).
struct NKey {
  Variant variant = Variant::monotone;
  int g = 0;
  int part = 1;
  Composition rest;
  Composition nu;
  int l = 1;

  int branch_count() const;
};

// Upper limit of the counter in the second factor of the essential join for
// strictly monotone factorizations: the last part of nu_J (its largest label)
// or its largest part. Both give the same numbers since N vanishes for
// l > nu_last.
enum class InnerBound { last_label, largest_part };

// Recursion in b, anchored on the brute-force count for b <= 1. Throws
// DomainError when |part| + |rest| != |nu| or l is outside 1..nu_last.
Integer N_value(const NKey& key, InnerBound bound = InnerBound::last_label);
// Same with b in place of g.
Integer N_value_b(Variant variant, int b, int part, const Composition& rest, int l, const Composition& nu,
                  InnerBound bound = InnerBound::last_label);

// Connected double number over P^1 with b = 2g-2+len(mu)+len(nu):
// |C_nu| / (d! |Aut mu|) * sum over i and l of N_g(mu_i | mu[i], nu).
Rational double_hurwitz(Variant variant, int g, const Partition& mu, const Partition& nu);
// Disconnected double number with b simple branch points, by the exponential
// formula over connected ones.
Rational disconnected_double_hurwitz(Variant variant, int b, const Partition& mu, const Partition& nu);

// Disconnected number over a base of genus g >= 1 with one fixed branch point
// of profile mu (padded with 1-parts) and b monotone or strictly monotone
// simple ones: sum over nu of h(mu, nu) A_g(nu) / |C_nu|.
Rational base_g_assembly(Variant variant, int base_genus, int b, const Partition& mu, int d);

// Connected series sum_d H_d q^d through q^qmax from base_g_assembly and the
// potential logarithm.
QSeries base_g_connected_series(Variant variant, int base_genus, int b, const Partition& mu, int qmax);

}  // namespace hurwitz
