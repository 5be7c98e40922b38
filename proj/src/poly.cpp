#include "mzv/poly.hpp"

#include <stdexcept>

namespace mzv {

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const mpq_class& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

mpq_class MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, _] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::homogeneous(int d) const { return homogeneous_part(d) == *this; }

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& s) {
  if (s == 0) terms_.clear();
  for (auto& [_, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly out = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::derivative(int i) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::times_variable(int i) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    ++f[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::divide_by_variable(int i) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) throw std::domain_error("divide_by_variable: not divisible");
    Exponent f = e;
    --f[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& substitutes) const {
  if (static_cast<int>(substitutes.size()) != nvars_) throw std::invalid_argument("compose: need one substitute per variable");
  const int m = substitutes.empty() ? 0 : substitutes[0].nvars();
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(m, 1));
  MultiPoly out(m);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(m, c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * substitutes[i]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::widened(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("widened: cannot drop variables");
  MultiPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(nvars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    mpq_class mag = abs(c);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

MultiPoly diagonal_derivative(const MultiPoly& f) {
  MultiPoly out(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) out += f.derivative(i);
  return out;
}

bool diagonal_translation_invariant(const MultiPoly& f) { return diagonal_derivative(f).is_zero(); }

}  // namespace mzv
