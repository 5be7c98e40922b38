#include "mzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mzv {

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("index parts must be positive");
  }
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Index::admissible() const { return parts_.empty() || parts_.back() >= 2; }

bool Index::totally_odd() const {
  return !parts_.empty() &&
         std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

Index Index::reversed() const { return Index(std::vector<int>(parts_.rbegin(), parts_.rend())); }

Index Index::slice(int first, int last) const {
  return Index(std::vector<int>(parts_.begin() + first, parts_.begin() + last));
}

Index Index::concat(const Index& other) const {
  std::vector<int> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return Index(std::move(out));
}

std::string Index::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Index Index::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
    throw std::invalid_argument("index must look like (k1,...,kn): " + std::string(text));
  }
  std::string_view body(compact.data() + 1, compact.size() - 2);
  std::vector<int> parts;
  if (body.empty()) return Index();
  while (true) {
    auto comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("bad index part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Index(std::move(parts));
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'A' && c != 'B') throw std::invalid_argument("word letters must be A or B");
  }
}

bool Word::admissible() const {
  return letters_.empty() || (letters_.front() == 'A' && letters_.back() == 'B');
}

int Word::leading(char letter) const {
  int count = 0;
  while (count < static_cast<int>(letters_.size()) && letters_[count] == letter) ++count;
  return count;
}

int Word::trailing(char letter) const {
  int count = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend() && *it == letter; ++it) ++count;
  return count;
}

OrderedSurjection::OrderedSurjection(std::vector<int> fibre_sizes) : fibres_(std::move(fibre_sizes)) {
  for (int s : fibres_) {
    if (s < 1) throw std::invalid_argument("surjection fibres must be non-empty");
    n_ += s;
  }
}

int OrderedSurjection::operator()(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("surjection argument out of range");
  int acc = 0;
  for (std::size_t j = 0; j < fibres_.size(); ++j) {
    acc += fibres_[j];
    if (i <= acc) return static_cast<int>(j) + 1;
  }
  return target_size();
}

std::vector<int> OrderedSurjection::images() const {
  std::vector<int> out;
  out.reserve(n_);
  for (std::size_t j = 0; j < fibres_.size(); ++j) out.insert(out.end(), fibres_[j], static_cast<int>(j) + 1);
  return out;
}

mpz_class OrderedSurjection::stabilizer_order() const {
  mpz_class order = 1;
  for (int s : fibres_) order *= factorial(s);
  return order;
}

namespace {

void compositions(int remaining, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int first = 1; first <= remaining - (parts - 1); ++first) {
    current.push_back(first);
    compositions(remaining - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<OrderedSurjection> enumerate_surjections(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("enumerate_surjections requires 1 <= m <= n");
  std::vector<std::vector<int>> comps;
  std::vector<int> current;
  compositions(n, m, current, comps);
  std::vector<OrderedSurjection> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.emplace_back(std::move(c));
  return out;
}

std::vector<OrderedSurjection> enumerate_all_surjections(int n) {
  std::vector<OrderedSurjection> out;
  for (int m = 1; m <= n; ++m) {
    auto part = enumerate_surjections(n, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Index push_index(const OrderedSurjection& phi, const Index& k) {
  if (k.depth() != phi.source_size()) throw std::invalid_argument("push_index: depth mismatch");
  std::vector<int> out;
  int pos = 0;
  for (int size : phi.fibre_sizes()) {
    int sum = 0;
    for (int j = 0; j < size; ++j) sum += k[pos++];
    out.push_back(sum);
  }
  return Index(std::move(out));
}

namespace {

// (a.u) * (b.v) = a (u * b.v) + b (a.u * v) + (a+b) (u * v), on suffixes.
void stuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& prefix,
                 Multiset<Index>& out) {
  if (a.empty() || b.empty()) {
    std::vector<int> word = prefix;
    word.insert(word.end(), a.begin(), a.end());
    word.insert(word.end(), b.begin(), b.end());
    multiset_add(out, Index(std::move(word)));
    return;
  }
  prefix.push_back(a[0]);
  stuffle_rec(a.subspan(1), b, prefix, out);
  prefix.back() = b[0];
  stuffle_rec(a, b.subspan(1), prefix, out);
  prefix.back() = a[0] + b[0];
  stuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
  prefix.pop_back();
}

void shuffle_rec(std::string_view u, std::string_view v, std::string& prefix, Multiset<Word>& out) {
  if (u.empty() || v.empty()) {
    multiset_add(out, Word(prefix + std::string(u) + std::string(v)));
    return;
  }
  prefix.push_back(u[0]);
  shuffle_rec(u.substr(1), v, prefix, out);
  prefix.back() = v[0];
  shuffle_rec(u, v.substr(1), prefix, out);
  prefix.pop_back();
}

}  // namespace

Multiset<Index> stuffle(const Index& a, const Index& b) {
  Multiset<Index> out;
  std::vector<int> prefix;
  stuffle_rec(a.parts(), b.parts(), prefix, out);
  return out;
}

Multiset<Word> shuffle_words(const Word& u, const Word& v) {
  Multiset<Word> out;
  std::string prefix;
  shuffle_rec(u.letters(), v.letters(), prefix, out);
  return out;
}

Word word_of_index(const Index& k) {
  std::string letters;
  for (int i = k.depth() - 1; i >= 0; --i) {
    letters.append(k[i] - 1, 'A');
    letters.push_back('B');
  }
  return Word(std::move(letters));
}

Index index_of_word(const Word& w) {
  if (w.empty()) return Index();
  if (!w.ends_with_b()) throw std::invalid_argument("index_of_word: word must end with B");
  std::vector<int> reversed_parts;
  int run = 0;
  for (char c : w.letters()) {
    if (c == 'A') {
      ++run;
    } else {
      reversed_parts.push_back(run + 1);
      run = 0;
    }
  }
  return Index(std::vector<int>(reversed_parts.rbegin(), reversed_parts.rend()));
}

std::vector<std::pair<Index, Index>> split_pairs(const Index& k) {
  std::vector<std::pair<Index, Index>> out;
  for (int i = 0; i <= k.depth(); ++i) out.emplace_back(k.slice(0, i), k.slice(i, k.depth()).reversed());
  return out;
}

mpq_class cone_weight(std::span<const std::int64_t> point) {
  for (auto m : point) {
    if (m == 0) throw std::invalid_argument("cone_weight: coordinates must be nonzero");
  }
  // Compare 1/a and 1/b exactly: 1/a > 1/b  <=>  (b - a) * a * b > 0 for a != b.
  auto reciprocal_cmp = [](std::int64_t a, std::int64_t b) -> int {
    if (a == b) return 0;
    bool same_sign = (a > 0) == (b > 0);
    if (same_sign) return a < b ? 1 : -1;
    return a > 0 ? 1 : -1;
  };
  mpz_class denominator = 1;
  std::size_t run = 1;
  for (std::size_t i = 0; i + 1 < point.size(); ++i) {
    int c = reciprocal_cmp(point[i], point[i + 1]);
    if (c < 0) return 0;
    if (c == 0) {
      ++run;
    } else {
      denominator *= factorial(static_cast<int>(run));
      run = 1;
    }
  }
  denominator *= factorial(static_cast<int>(run));
  return mpq_class(mpz_class(1), denominator);
}

mpq_class cone_weight(std::initializer_list<std::int64_t> point) {
  return cone_weight(std::span<const std::int64_t>(point.begin(), point.size()));
}

std::vector<Index> indices_of_weight(int weight) {
  std::vector<Index> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  for (int depth = 1; depth <= weight; ++depth) {
    auto part = indices_of_weight_depth(weight, depth);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> indices_of_weight_depth(int weight, int depth) {
  std::vector<Index> out;
  if (depth == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> current;
  compositions(weight, depth, current, comps);
  for (auto& c : comps) out.emplace_back(std::move(c));
  return out;
}

std::vector<Index> admissible_indices_of_weight(int weight) {
  std::vector<Index> out;
  for (auto& k : indices_of_weight(weight)) {
    if (k.admissible()) out.push_back(std::move(k));
  }
  return out;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace mzv
