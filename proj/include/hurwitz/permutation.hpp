#pragma once

#include "hurwitz/partitions.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hurwitz {

inline constexpr int kMaxDegree = 12;

// One-line notation on {0,...,n-1}. Products compose right to left:
// (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation from_one_line(const std::vector<int>& images);
  static Permutation transposition(int n, int s, int t);
  // Canonical permutation with cycle type given by the composition, cycles on
  // consecutive blocks: (0 1 .. c0-1)(c0 .. c0+c1-1)...
  static Permutation standard(const Composition& cycle_lengths);

  int degree() const { return n_; }
  int operator()(int x) const { return img_[x]; }
  Permutation inverse() const;
  Partition cycle_type() const;
  // cycle_of[x] = index of the cycle containing x, cycles numbered by smallest element
  std::vector<int> cycle_index() const;
  std::vector<std::vector<int>> cycles() const;
  std::uint64_t key() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

Permutation commutator(const Permutation& a, const Permutation& b);  // a b a^-1 b^-1

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

// Set partition of {0..n-1} under a union-find, with a canonical key.
class OrbitPartition {
 public:
  explicit OrbitPartition(int n);
  void merge(int a, int b);
  void absorb(const Permutation& p);
  void absorb(const OrbitPartition& o);
  int find(int a) const;
  int count() const;
  bool transitive() const { return count() <= 1; }
  // block labels by first occurrence, packed 4 bits each
  std::uint64_t key() const;
  static OrbitPartition from_key(int n, std::uint64_t key);

 private:
  int n_;
  mutable std::array<std::uint8_t, kMaxDegree> parent_{};
};

}  // namespace hurwitz
