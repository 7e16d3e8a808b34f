#pragma once

#include "hurwitz/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  Partition without_ones() const;
  Partition padded(int d) const;  // appends 1-parts up to size d
  bool has_ones() const { return !parts_.empty() && parts_.back() == 1; }
  Partition conjugate() const;
  // part value -> multiplicity
  std::map<int, int> multiplicities() const;

  std::string str() const;  // "3,2,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Ordered sequence of positive integers.
using Composition = std::vector<int>;

// Parses "3,2,1"; whitespace tolerant, empty string gives the empty partition.
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);
// Profiles separated by ';'.
std::vector<Partition> parse_profiles(const std::string& text);

// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> enumerate_partitions(int d);
Integer partition_count(int n);

Integer aut_count(const Partition& mu);
Integer aut_count(const Composition& mu);
// Size of the conjugacy class of S_d of cycle type nu padded with fixed points.
Integer class_size(const Partition& nu, int d);
// z_nu = prod m^{r_m} r_m!
Integer centralizer_order(const Partition& nu);
Integer hook_dim(const Partition& lambda);
std::vector<int> contents(const Partition& lambda);

enum class SymKind { complete_homogeneous, elementary };
Rational sym_eval(SymKind kind, int degree, const std::vector<Rational>& values);
Rational sym_eval(SymKind kind, int degree, const std::vector<int>& values);

enum class StirlingKind { first_unsigned, second };
Integer stirling(StirlingKind kind, int n, int k);

}  // namespace hurwitz
