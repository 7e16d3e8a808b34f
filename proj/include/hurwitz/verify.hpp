#pragma once

#include "hurwitz/oracle.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct Counterexample {
  std::string inputs;
  std::string expected;  // independent side (brute force or character sum)
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  long checked = 0;
  long failures = 0;
  std::optional<Counterexample> first_failure;

  bool ok() const { return failures == 0; }
  void record(const std::string& inputs, const Rational& expected, const Rational& actual);
  void record(const std::string& inputs, bool ok, const std::string& expected, const std::string& actual);
};

struct SuiteOptions {
  int dmax = 4;
  int bmax = 3;
  // 2g-2+n bound for the spectral recursion suite
  int euler_max = 4;
  OracleOptions oracle;
};

// count_triply_mixed against the character sum, disconnected and connected
// (via the logarithm of the potential): base genus 0 and 1, source genus at
// most 3, profiles (), (2), (3), (2;2) and every split of b <= bmax.
SuiteReport verify_oracle_vs_characters(const SuiteOptions& opts);
// N_value against oracle_N_b for both variants, every ordering of nu.
SuiteReport verify_n_recursion(const SuiteOptions& opts);
// double_hurwitz and disconnected_double_hurwitz against the brute-force ones.
SuiteReport verify_double(const SuiteOptions& opts);
// extract_C(ceo_omega), cut_and_join_C and the signed brute-force count, plus
// the invariants of every omega.
SuiteReport verify_toprec(const SuiteOptions& opts);
// Elliptic tropical sums for g = 2 against connected character values, and
// line tropical sums against brute-force double numbers.
SuiteReport verify_tropical(const SuiteOptions& opts);
// base_g_assembly against the character route over bases of genus 1 and 2.
SuiteReport verify_assembly(const SuiteOptions& opts);
// Quantum curve residuals for g = 0, 1, 2 on d, b <= dmax.
SuiteReport verify_quantum_curves(const SuiteOptions& opts);

std::vector<std::string> suite_names();
// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace hurwitz
