#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mzv {

/// Permutation of {1..n}, stored by images. Products compose right to left:
/// (s * t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  /// Same permutation acting on {1..m}, fixing m > size().
  Permutation extended(int m) const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

/// Formal integer combination of permutations of a common size.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const Permutation& s, std::int64_t coeff = 1);
  static GroupRingElem one(int n) { return GroupRingElem(Permutation::identity(n)); }

  const std::map<Permutation, std::int64_t>& terms() const { return terms_; }
  void add_term(const Permutation& s, std::int64_t coeff);

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  /// Every permutation extended to act on {1..m}.
  GroupRingElem extended(int m) const;

  bool operator==(const GroupRingElem&) const = default;
  std::string to_string() const;

 private:
  std::map<Permutation, std::int64_t> terms_;
};

/// Permutations s of {1..n} with s(1) < ... < s(i) and s(i+1) < ... < s(n).
std::vector<Permutation> shuffle_permutations(int n, int i);
/// Their sum in the group ring.
GroupRingElem shuffle_operator(int n, int i);

}  // namespace mzv
