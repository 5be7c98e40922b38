#include "mzv/regularization.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mzv {

MzvCombo::MzvCombo(const Index& k, const mpq_class& coeff) { add_term(k, coeff); }

mpq_class MzvCombo::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MzvCombo::add_term(const Index& k, const mpq_class& coeff) {
  if (!k.admissible()) throw std::invalid_argument("MzvCombo keys must be admissible: " + k.to_string());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MzvCombo& MzvCombo::operator+=(const MzvCombo& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

MzvCombo& MzvCombo::operator-=(const MzvCombo& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

MzvCombo& MzvCombo::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= scalar;
  return *this;
}

int MzvCombo::max_weight() const {
  int w = -1;
  for (const auto& [k, _] : terms_) w = std::max(w, k.weight());
  return w;
}

bool MzvCombo::homogeneous(int weight) const {
  for (const auto& [k, _] : terms_) {
    if (k.weight() != weight) return false;
  }
  return true;
}

std::string MzvCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    mpq_class mag = abs(c);
    if (k.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z" + k.to_string();
  }
  return out;
}

MzvCombo combo_product(const MzvCombo& a, const MzvCombo& b) {
  MzvCombo out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      mpq_class c = ca * cb;
      for (const auto& [k, mult] : stuffle(ka, kb)) out.add_term(k, c * mult);
    }
  }
  return out;
}

RegPoly::RegPoly(MzvCombo constant) { add(0, constant); }

RegPoly RegPoly::t_power(int degree) {
  RegPoly out;
  out.add(degree, MzvCombo::one());
  return out;
}

MzvCombo RegPoly::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? MzvCombo() : it->second;
}

void RegPoly::add(int degree, const MzvCombo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

RegPoly& RegPoly::operator+=(const RegPoly& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, c);
  return *this;
}

RegPoly& RegPoly::operator-=(const RegPoly& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, -c);
  return *this;
}

RegPoly& RegPoly::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [_, c] : coeffs_) c *= scalar;
  return *this;
}

RegPoly operator*(const RegPoly& a, const RegPoly& b) {
  RegPoly out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) out.add(da + db, combo_product(ca, cb));
  }
  return out;
}

RegPoly RegPoly::shifted() const {
  RegPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + 1, c);
  return out;
}

std::string RegPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first > 0) out += "*T^" + std::to_string(it->first);
  }
  return out;
}

namespace {

// Write-once memo tables shared across threads. Values depend only on the key,
// so a racing duplicate computation stores an identical result.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

Memo<Index, RegPoly>& stuffle_memo() {
  static Memo<Index, RegPoly> memo;
  return memo;
}

Memo<Word, RegPoly>& shuffle_memo() {
  static Memo<Word, RegPoly> memo;
  return memo;
}

Memo<Word, MzvCombo>& associator_memo() {
  static Memo<Word, MzvCombo> memo;
  return memo;
}

int trailing_ones(const Index& k) {
  int r = 0;
  for (int i = k.depth() - 1; i >= 0 && k[i] == 1; --i) ++r;
  return r;
}

}  // namespace

// k = (u, 1) with r trailing ones. In stuffle(u, (1)) the index k occurs r
// times and every other term has fewer than r trailing ones, so
//   r * reg(k) = T * reg(u) - sum_{other} reg(other)
// recurses on the number of trailing ones and terminates.
RegPoly stuffle_regularize(const Index& k) {
  if (k.admissible()) return RegPoly(MzvCombo(k));
  return stuffle_memo().get(k, [&] {
    int r = trailing_ones(k);
    Index u = k.slice(0, k.depth() - 1);
    RegPoly acc = stuffle_regularize(u).shifted();
    for (const auto& [term, mult] : stuffle(u, Index{1})) {
      if (term == k) continue;
      acc -= stuffle_regularize(term) * mpq_class(mult);
    }
    return acc * mpq_class(1, r);
  });
}

// w = B u with r leading B's. In B ⧢ u the word w occurs r times and every
// other term has r - 1 leading B's:
//   r * reg(w) = T * reg(u) - sum_{other} reg(other).
RegPoly shuffle_regularize(const Word& w) {
  if (!w.empty() && !w.ends_with_b()) {
    throw std::invalid_argument("shuffle_regularize: word must end with B");
  }
  if (w.admissible()) return RegPoly(MzvCombo(index_of_word(w)));
  return shuffle_memo().get(w, [&] {
    int r = w.leading('B');
    Word u(w.letters().substr(1));
    RegPoly acc = shuffle_regularize(u).shifted();
    for (const auto& [term, mult] : shuffle_words(Word("B"), u)) {
      if (term == w) continue;
      acc -= shuffle_regularize(term) * mpq_class(mult);
    }
    return acc * mpq_class(1, r);
  });
}

// w = u A with s trailing A's. In u ⧢ A the word w occurs s times and the
// other terms have s - 1 trailing A's; Z(A) = 0 kills the product term.
MzvCombo associator_coefficient(const Word& w) {
  if (w.empty() || w.ends_with_b()) return shuffle_regularize(w).constant_term();
  return associator_memo().get(w, [&] {
    int s = w.trailing('A');
    Word u(w.letters().substr(0, w.size() - 1));
    MzvCombo acc;
    for (const auto& [term, mult] : shuffle_words(u, Word("A"))) {
      if (term == w) continue;
      acc -= associator_coefficient(term) * mpq_class(mult);
    }
    return acc * mpq_class(1, s);
  });
}

RegPoly natural_regularize(const Index& k) {
  if (k.empty()) return RegPoly(MzvCombo::one());
  RegPoly out;
  for (const auto& phi : enumerate_all_surjections(k.depth())) {
    out += stuffle_regularize(push_index(phi, k)) * mpq_class(mpz_class(1), phi.stabilizer_order());
  }
  return out;
}

}  // namespace mzv
