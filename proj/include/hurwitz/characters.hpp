#pragma once

#include "hurwitz/hurwitz_spec.hpp"

#include <map>
#include <optional>
#include <string>

namespace hurwitz {

// chi^lambda at cycle type nu, by the Murnaghan-Nakayama rule. |lambda| = |nu|.
Integer character(const Partition& lambda, const Partition& nu);

// Full table chi^lambda(nu) for all lambda, nu of d.
class CharacterTable {
 public:
  explicit CharacterTable(int d);
  int degree() const { return d_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  // nu may omit its 1-parts.
  const Integer& at(const Partition& lambda, const Partition& nu) const;

  // {"version":1,"degree":d,"entries":[{"lambda":[..],"nu":[..],"chi":".."},..]}
  std::string to_json() const;
  static CharacterTable from_json(const std::string& text);

 private:
  CharacterTable() = default;
  int d_ = 0;
  std::vector<Partition> parts_;
  std::map<std::pair<Partition, Partition>, Integer> chi_;
};

// Directory for cached tables; defaults to $HURWITZ_CACHE_DIR when set.
void set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> cache_dir();
std::string cache_file(int d);
// Process-wide table for degree d, read from or written to the cache
// directory when one is configured.
const CharacterTable& character_table(int d);

// f_nu(lambda) = class_size(nu, |lambda|) chi^lambda(nu padded) / dim lambda.
// nu must not contain 1-parts. Zero when |nu| > |lambda|.
Rational central_character_f(const Partition& nu, const Partition& lambda);

// binom(|lambda|, |nu|) |C_nu| chi^lambda(nu padded) / dim lambda, for any nu,
// where |C_nu| is the class of nu inside S_|nu|.
Rational shifted_central_character(const Partition& nu, const Partition& lambda);

// Disconnected triply mixed Hurwitz number by the character sum.
Rational hurwitz_by_characters(const HurwitzSpec& spec);

// class_size(nu, d) * sum_lambda (d!/dim lambda)^{2g-1} chi^lambda(nu padded)
Integer commutator_count_by_characters(int g, const Partition& nu, int d);

}  // namespace hurwitz
