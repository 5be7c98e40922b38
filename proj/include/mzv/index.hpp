#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mzv {

/// A finite sequence of positive integers (k_1, ..., k_n). The empty index is
/// allowed and has weight 0.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Empty, or last part at least 2.
  bool admissible() const;
  /// All parts odd (and the index is non-empty).
  bool totally_odd() const;

  /// (k_n, ..., k_1)
  Index reversed() const;
  /// Parts [first, last).
  Index slice(int first, int last) const;
  Index concat(const Index& other) const;

  /// Canonical text form "(1,2,3)"; the empty index is "()".
  std::string to_string() const;
  /// Parses the canonical text form. Whitespace is ignored.
  static Index parse(std::string_view text);

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

 private:
  std::vector<int> parts_;
};

/// A word over the two-letter alphabet {A, B}.
///
/// The index <-> word convention is the reversed one:
///   word(k_1, ..., k_n) = A^{k_n - 1} B A^{k_{n-1} - 1} B ... A^{k_1 - 1} B,
/// so the word of an index always ends in B, and it starts with A exactly when
/// the index is admissible. Under this convention the word of k is also the
/// iterated-integral word of zeta(k) read from the upper endpoint 1 down to 0,
/// with A <-> dt/t and B <-> dt/(1-t).
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  bool ends_with_b() const { return !letters_.empty() && letters_.back() == 'B'; }
  /// Begins with A and ends with B (or is empty).
  bool admissible() const;
  int leading(char letter) const;
  int trailing(char letter) const;

  Word concat(const Word& other) const { return Word(letters_ + other.letters_); }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

template <class T>
using Multiset = std::map<T, std::int64_t>;

/// Adds `count` copies of `value`; entries whose multiplicity reaches zero are
/// removed.
template <class T>
void multiset_add(Multiset<T>& set, const T& value, std::int64_t count = 1) {
  auto [it, inserted] = set.try_emplace(value, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) set.erase(it);
  }
}

template <class T>
std::int64_t multiset_size(const Multiset<T>& set) {
  std::int64_t total = 0;
  for (const auto& [_, m] : set) total += m;
  return total;
}

/// A weakly order-preserving surjection {1..n} -> {1..m}; stored as the sizes of
/// the consecutive fibres phi^{-1}(1), ..., phi^{-1}(m).
class OrderedSurjection {
 public:
  explicit OrderedSurjection(std::vector<int> fibre_sizes);

  int source_size() const { return n_; }
  int target_size() const { return static_cast<int>(fibres_.size()); }
  const std::vector<int>& fibre_sizes() const { return fibres_; }
  /// phi(i) for 1 <= i <= n, values in 1..m.
  int operator()(int i) const;
  std::vector<int> images() const;

  /// Order of the stabiliser G_phi = product of fibre-size factorials.
  mpz_class stabilizer_order() const;

  auto operator<=>(const OrderedSurjection&) const = default;
  bool operator==(const OrderedSurjection&) const = default;

 private:
  std::vector<int> fibres_;
  int n_ = 0;
};

/// All weakly order-preserving surjections {1..n} -> {1..m}, generated as the
/// compositions of n into m positive parts. Throws std::invalid_argument
/// unless 1 <= m <= n.
std::vector<OrderedSurjection> enumerate_surjections(int n, int m);
/// Union over 1 <= m <= n.
std::vector<OrderedSurjection> enumerate_all_surjections(int n);

/// phi_* k: parts summed over each fibre. Throws on depth mismatch.
Index push_index(const OrderedSurjection& phi, const Index& k);

/// Quasi-shuffle (stuffle) product as a multiset of indices.
Multiset<Index> stuffle(const Index& a, const Index& b);

/// All interleavings preserving the internal order of both words.
Multiset<Word> shuffle_words(const Word& u, const Word& v);

Word word_of_index(const Index& k);
/// Inverse of word_of_index. Throws std::invalid_argument unless the word is
/// empty or ends with B.
Index index_of_word(const Word& w);

/// The pairs ((k_1..k_i), (k_n..k_{i+1})) for 0 <= i <= n.
std::vector<std::pair<Index, Index>> split_pairs(const Index& k);

/// Local volume fraction of the region 1/t_1 > ... > 1/t_n at a lattice point
/// with nonzero coordinates. Zero if 1/m_i < 1/m_{i+1} anywhere; otherwise the
/// product of 1/(b!) over maximal runs of b equal coordinates.
mpq_class cone_weight(std::span<const std::int64_t> point);
mpq_class cone_weight(std::initializer_list<std::int64_t> point);

/// All indices of the given weight (compositions), in lexicographic order.
std::vector<Index> indices_of_weight(int weight);
std::vector<Index> indices_of_weight_depth(int weight, int depth);
std::vector<Index> admissible_indices_of_weight(int weight);

mpz_class binomial(int n, int k);
mpz_class factorial(int n);

}  // namespace mzv
