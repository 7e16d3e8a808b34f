#pragma once

#include "hurwitz/hurwitz_spec.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

struct OracleOptions {
  int max_degree = 6;
  unsigned jobs = 1;
};

// Transpositions (s t), s < t, of S_d sorted by t then s.
struct Transposition {
  int s, t;
};
std::vector<Transposition> transpositions(int d);

enum class Monotonicity { free, weak, strict };

// Number of tuples (sigma_1..sigma_n, tau_1..tau_b, alpha_1, beta_1, ...) with
// sigma_1 ... sigma_n tau_1 ... tau_b = [alpha_1, beta_1] ... [alpha_g, beta_g],
// sigma_i of padded type mu^i and tau in free / weak / strict blocks of sizes
// k, l, m. Transitivity is imposed iff spec.connected. No labeling factor.
Integer count_triply_mixed_tuples(const HurwitzSpec& spec, const OracleOptions& opts = {});

// Tuple count / d!, times Aut of every padded profile when spec.labeled.
Rational count_triply_mixed(const HurwitzSpec& spec, const OracleOptions& opts = {});

// Sequences tau_1..tau_b of (strictly) monotone transpositions with
// tau_1 ... tau_b equal to the standard permutation of type mu, transitive
// together with it. Raw count, no labeling factor: this is m_{g,n}(mu) with
// b = 2g-2+n+|mu|.
Integer count_monotone_of_fixed_target(const Partition& mu, int b, bool strict, const OracleOptions& opts = {});

// Refined count of tuples (sigma_nu, tau_1..tau_b, sigma_2) with
// sigma_2 = tau_b ... tau_1 sigma_nu of type mu, transitive, monotone
// (or strictly monotone) taus, t_b = d - nu_last + l and t_b in a cycle of
// length mu[i]. Cycles of sigma_2 other than the distinguished one are
// labeled, contributing Aut(mu without mu[i]). Index i is zero based.
// b = 2g-2+len(mu)+len(nu). At b = 0 the count is 1 exactly when
// mu = nu = (d) and l = d.
Integer oracle_N(Variant variant, int g, const Composition& mu, int i, int l, const Composition& nu,
                 const OracleOptions& opts = {});
// Same, with b given directly.
Integer oracle_N_b(Variant variant, int b, const Composition& mu, int i, int l, const Composition& nu,
                   const OracleOptions& opts = {});

// Number of 2g-tuples in S_d whose commutator product has padded type nu.
Integer count_commutator_type(int g, const Partition& nu, int d, const OracleOptions& opts = {});

// Number of length-b transposition sequences in S_d with the given monotonicity.
Integer count_transposition_sequences(int d, int b, Monotonicity mono, const OracleOptions& opts = {});

// Connected (or disconnected) double Hurwitz number over the sphere with
// b = 2g-2+len(mu)+len(nu) monotone or strictly monotone transpositions.
Rational oracle_double_hurwitz(Variant variant, int g, const Partition& mu, const Partition& nu, bool connected,
                               const OracleOptions& opts = {});

}  // namespace hurwitz
