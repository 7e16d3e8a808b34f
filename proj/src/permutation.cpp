#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

Permutation::Permutation(int n) : n_(n) {
  if (n < 0 || n > kMaxDegree) throw ResourceError("permutation degree above " + std::to_string(kMaxDegree));
  for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= p.n_ || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::transposition(int n, int s, int t) {
  Permutation p(n);
  std::swap(p.img_[s], p.img_[t]);
  return p;
}

Permutation Permutation::standard(const Composition& cycle_lengths) {
  int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  Permutation p(n);
  int start = 0;
  for (int len : cycle_lengths) {
    for (int j = 0; j < len; ++j) p.img_[start + j] = static_cast<std::uint8_t>(start + (j + 1) % len);
    start += len;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_index() const {
  std::vector<int> idx(n_, -1);
  int c = 0;
  for (int i = 0; i < n_; ++i) {
    if (idx[i] >= 0) continue;
    for (int j = i; idx[j] < 0; j = img_[j]) idx[j] = c;
    ++c;
  }
  return idx;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lens));
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return k;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) throw DomainError("degree mismatch in permutation product");
  Permutation r(a.n_);
  for (int i = 0; i < a.n_; ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

Permutation commutator(const Permutation& a, const Permutation& b) { return a * b * a.inverse() * b.inverse(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

OrbitPartition::OrbitPartition(int n) : n_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = static_cast<std::uint8_t>(i);
}

int OrbitPartition::find(int a) const {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

void OrbitPartition::merge(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[a] = static_cast<std::uint8_t>(b);
}

void OrbitPartition::absorb(const Permutation& p) {
  for (int i = 0; i < n_; ++i) merge(i, p(i));
}

void OrbitPartition::absorb(const OrbitPartition& o) {
  for (int i = 0; i < n_; ++i) merge(i, o.find(i));
}

int OrbitPartition::count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i)
    if (find(i) == i) ++c;
  return c;
}

std::uint64_t OrbitPartition::key() const {
  std::array<int, kMaxDegree> label;
  label.fill(-1);
  int next = 0;
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) {
    int r = find(i);
    if (label[r] < 0) label[r] = next++;
    k |= static_cast<std::uint64_t>(label[r]) << (4 * i);
  }
  return k;
}

OrbitPartition OrbitPartition::from_key(int n, std::uint64_t key) {
  OrbitPartition o(n);
  std::array<int, kMaxDegree> first;
  first.fill(-1);
  for (int i = 0; i < n; ++i) {
    int lab = static_cast<int>((key >> (4 * i)) & 0xF);
    if (first[lab] < 0)
      first[lab] = i;
    else
      o.merge(i, first[lab]);
  }
  return o;
}

}  // namespace hurwitz
