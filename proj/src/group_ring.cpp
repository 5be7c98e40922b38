#include "mzv/group_ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + 1) % n + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i) v[(*this)(i) - 1] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::extended(int m) const {
  if (m < size()) throw std::invalid_argument("Permutation::extended: target smaller than source");
  std::vector<int> v = images_;
  for (int i = size() + 1; i <= m; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) out += (i ? " " : "") + std::to_string(images_[i]);
  return out + "]";
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> v(s.size());
  for (int i = 1; i <= s.size(); ++i) v[i - 1] = s(t(i));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

GroupRingElem::GroupRingElem(const Permutation& s, std::int64_t coeff) { add_term(s, coeff); }

void GroupRingElem::add_term(const Permutation& s, std::int64_t coeff) {
  if (coeff == 0) return;
  if (!terms_.empty() && terms_.begin()->first.size() != s.size())
    throw std::invalid_argument("GroupRingElem: permutation size mismatch");
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out;
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) out.add_term(s * t, c * d);
  return out;
}

GroupRingElem GroupRingElem::extended(int m) const {
  GroupRingElem out;
  for (const auto& [s, c] : terms_) out.add_term(s.extended(m), c);
  return out;
}

std::string GroupRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += (c == 1 ? "" : std::to_string(c) + "*") + s.to_string();
  }
  return out;
}

std::vector<Permutation> shuffle_permutations(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("shuffle_permutations: need 0 <= i <= n");
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(n)) {
    bool ok = true;
    for (int j = 1; j < n && ok; ++j) {
      if (j == i) continue;
      ok = s(j) < s(j + 1);
    }
    if (ok) out.push_back(s);
  }
  return out;
}

GroupRingElem shuffle_operator(int n, int i) {
  GroupRingElem out;
  for (const auto& s : shuffle_permutations(n, i)) out.add_term(s, 1);
  return out;
}

}  // namespace mzv
