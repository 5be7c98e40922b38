#include "mzv/relations.hpp"

#include <cmath>
#include <stdexcept>

#include "mzv/finite.hpp"
#include "mzv/poly.hpp"
#include "mzv/pslq.hpp"

namespace mzv {

namespace {

bool opposite_parity(const Index& k) { return (k.weight() - k.depth()) % 2 != 0; }

std::string combo_label(const Index& a) { return "z" + a.to_string(); }

MzvCombo reg_constant(const Index& k) { return stuffle_regularize(k).constant_term(); }

// sum over l in N^{r} with |l| = total of prod_i binom(parts_i + l_i - 1, l_i) reg(parts + l).
MzvCombo binomial_shift_sum(const Index& parts, int total) {
  MzvCombo out;
  const int r = parts.depth();
  for (const auto& l : monomials_of_degree(r, total)) {
    mpz_class coeff = 1;
    std::vector<int> shifted(r);
    for (int i = 0; i < r; ++i) {
      coeff *= binomial(parts[i] + l[i] - 1, l[i]);
      shifted[i] = parts[i] + l[i];
    }
    out += reg_constant(Index(std::move(shifted))) * mpq_class(coeff);
  }
  return out;
}

struct ReducedSpan {
  std::vector<std::string> labels;
  std::vector<BigReal> values;
};

ReducedSpan independent_subset(const std::vector<std::string>& labels, const std::vector<BigReal>& values,
                               const RelationConfig& config) {
  ReducedSpan out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j].abs_below_pow10(-(config.digits / 2))) continue;
    bool dependent = false;
    if (!out.values.empty()) {
      std::vector<BigReal> trial = out.values;
      trial.push_back(values[j]);
      auto r = pslq(trial, config.digits, config.height_bound * static_cast<long>(trial.size()));
      dependent = r.found && r.relation.back() != 0;
    }
    if (!dependent) {
      out.labels.push_back(labels[j]);
      out.values.push_back(values[j]);
    }
  }
  return out;
}

}  // namespace

SpanningSet build_spanning_set(int weight, int depth_bound) {
  SpanningSet out{weight, depth_bound, {}};
  for (int w1 = 2; 2 * w1 <= weight; ++w1) {
    const int w2 = weight - w1;
    auto left = admissible_indices_of_weight(w1);
    auto right = admissible_indices_of_weight(w2);
    for (const auto& a : left) {
      for (const auto& b : right) {
        if (w1 == w2 && b < a) continue;
        out.elements.push_back({combo_label(a) + "*" + combo_label(b), combo_product(MzvCombo(a), MzvCombo(b))});
      }
    }
  }
  for (const auto& k : admissible_indices_of_weight(weight)) {
    if (k.depth() <= depth_bound) out.elements.push_back({combo_label(k), MzvCombo(k)});
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kNotConfirmed: return "not_confirmed";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coefficients) coeffs.push_back(c.get_str());
  return {{"label", label},
          {"verdict", verdict_name(verdict)},
          {"evidence", "numeric"},
          {"digits", digits},
          {"lhs", lhs},
          {"rhs", rhs},
          {"basis", basis_labels},
          {"coefficients", coeffs},
          {"height", height.get_str()},
          {"residual_log10", residual_log10},
          {"notes", notes}};
}

RelationReport verify_congruence_values(const BigReal& lhs, const BigReal& rhs, const std::vector<std::string>& labels,
                                        const std::vector<BigReal>& values, const RelationConfig& config) {
  RelationReport report;
  report.digits = config.digits;
  report.lhs = lhs.to_string(30);
  report.rhs = rhs.to_string(30);
  if (config.digits < config.min_digits) {
    report.notes.push_back("precision below " + std::to_string(config.min_digits) + " digits");
    return report;
  }
  const int residual_digits = config.residual_digits > 0 ? config.residual_digits : config.digits / 2;
  BigReal diff = lhs - rhs;
  ReducedSpan span = independent_subset(labels, values, config);
  report.basis_labels = span.labels;

  if (diff.abs_below_pow10(-residual_digits)) {
    report.verdict = Verdict::kConfirmed;
    report.coefficients.assign(span.values.size(), 0);
    report.residual_log10 = std::isfinite(diff.log10_abs()) ? diff.log10_abs() : -config.digits;
    report.notes.push_back("difference vanishes numerically");
    return report;
  }
  if (span.values.empty()) {
    report.verdict = Verdict::kNotConfirmed;
    report.residual_log10 = diff.log10_abs();
    report.notes.push_back("empty span and nonzero difference");
    return report;
  }
  std::vector<BigReal> vec{diff};
  vec.insert(vec.end(), span.values.begin(), span.values.end());
  auto r = pslq(vec, config.digits, config.height_bound * static_cast<long>(vec.size()));
  if (!r.found) {
    report.verdict = Verdict::kNotConfirmed;
    report.residual_log10 = diff.log10_abs();
    report.notes.push_back(std::string("no relation (") + r.stop_reason + ")");
    return report;
  }
  const mpz_class& a0 = r.relation[0];
  for (const auto& c : r.relation) report.height = std::max(report.height, mpz_class(abs(c)));
  if (a0 == 0) {
    report.notes.push_back("relation found among span elements only");
    return report;
  }
  BigReal residual = diff;
  for (std::size_t j = 0; j < span.values.size(); ++j) {
    mpq_class c(-r.relation[j + 1], a0);
    c.canonicalize();
    report.coefficients.push_back(c);
    residual -= span.values[j] * c;
  }
  report.residual_log10 = residual.is_zero() ? -static_cast<double>(config.digits) : residual.log10_abs();
  bool small_residual = residual.abs_below_pow10(-residual_digits);
  bool small_height = report.height < config.height_bound;
  report.verdict = small_residual && small_height ? Verdict::kConfirmed : Verdict::kNotConfirmed;
  if (!small_height) report.notes.push_back("relation height exceeds bound");
  if (!small_residual) report.notes.push_back("residual above threshold");
  return report;
}

RelationReport verify_congruence(const BigReal& lhs, const BigReal& rhs, const std::vector<SpanElement>& span,
                                 Evaluator& ev, const RelationConfig& config) {
  std::vector<std::string> labels;
  std::vector<BigReal> values;
  for (const auto& e : span) {
    labels.push_back(e.label);
    values.push_back(ev.combo(e.combo));
  }
  return verify_congruence_values(lhs, rhs, labels, values, config);
}

MzvCombo rhs_eq31(const Index& k) {
  if (!opposite_parity(k)) throw std::invalid_argument("rhs_eq31: weight and depth must have opposite parity");
  if (k.weight() == 2) throw std::invalid_argument("rhs_eq31: weight 2 excluded");
  const int n = k.depth();
  MzvCombo first = binomial_shift_sum(k.slice(1, n), k[0]);
  MzvCombo second = binomial_shift_sum(k.slice(0, n - 1), k[n - 1]);
  MzvCombo out = k[0] % 2 == 0 ? -first : first;
  out += k[n - 1] % 2 == 0 ? second : -second;
  return out;
}

namespace {

RelationReport run_check(const std::string& label, const MzvCombo& lhs, const MzvCombo& rhs, const Index& k,
                         Evaluator& ev, const RelationConfig& config) {
  RelationConfig cfg = config;
  cfg.digits = ev.digits();
  SpanningSet span = build_spanning_set(k.weight(), k.depth() - 2);
  RelationReport report = verify_congruence(ev.combo(lhs), ev.combo(rhs), span.elements, ev, cfg);
  report.label = label;
  return report;
}

}  // namespace

RelationReport verify_eq31(const Index& k, Evaluator& ev, const RelationConfig& config) {
  return run_check("natural " + k.to_string(), zeta_natural_F(k), rhs_eq31(k), k, ev, config);
}

MzvCombo corollary1_rhs_printed(const Index& k) {
  MzvCombo out;
  const int n = k.depth();
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> parts(k.parts().begin(), k.parts().begin() + (i - 1));
    parts.push_back(k[i - 1] + k[i]);
    parts.insert(parts.end(), k.parts().begin() + i, k.parts().end());
    out -= reg_constant(Index(std::move(parts)));
  }
  return out;
}

MzvCombo corollary1_rhs_merged(const Index& k) {
  MzvCombo out;
  const int n = k.depth();
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> parts(k.parts().begin(), k.parts().begin() + (i - 1));
    parts.push_back(k[i - 1] + k[i]);
    parts.insert(parts.end(), k.parts().begin() + (i + 1), k.parts().end());
    out -= reg_constant(Index(std::move(parts)));
  }
  return out;
}

std::vector<RelationReport> verify_corollary_part1(const Index& k, Evaluator& ev, const RelationConfig& config) {
  if (opposite_parity(k)) throw std::invalid_argument("verify_corollary_part1: weight and depth must share parity");
  MzvCombo lhs = zeta_F(k);
  std::vector<RelationReport> out;
  out.push_back(run_check("finite " + k.to_string() + " printed", lhs, corollary1_rhs_printed(k), k, ev, config));
  if (k.depth() >= 2) out.back().notes.push_back("printed reading raises the weight by k_{i+1}");
  out.push_back(run_check("finite " + k.to_string() + " merged", lhs, corollary1_rhs_merged(k), k, ev, config));
  if (k.weight() == 2) {
    for (auto& r : out) r.notes.push_back("weight 2: informational only");
  }
  return out;
}

MzvCombo corollary2_rhs(const Index& k) {
  if (!opposite_parity(k)) throw std::invalid_argument("corollary2_rhs: weight and depth must have opposite parity");
  if (k.weight() == 2) throw std::invalid_argument("corollary2_rhs: weight 2 excluded");
  const int n = k.depth();
  Word w = word_of_index(k.slice(1, n)).concat(Word(std::string(k[0], 'A')));
  Word w_star = word_of_index(k.slice(0, n - 1).reversed()).concat(Word(std::string(k[n - 1], 'A')));
  MzvCombo out = -associator_coefficient(w);
  MzvCombo z_star = associator_coefficient(w_star);
  out += k.weight() % 2 == 0 ? -z_star : z_star;
  return out;
}

RelationReport verify_corollary_part2(const Index& k, Evaluator& ev, const RelationConfig& config) {
  RelationReport report = run_check("associator " + k.to_string(), zeta_F(k), corollary2_rhs(k), k, ev, config);
  report.notes.push_back("A-terminated words use the shuffle extension with Z(A) = 0");
  return report;
}

std::vector<Index> opposite_parity_indices(int max_weight, int max_depth) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    if (w == 2) continue;
    for (int d = 1; d <= std::min(w, max_depth); ++d) {
      if ((w - d) % 2 == 0) continue;
      for (const auto& k : indices_of_weight_depth(w, d)) out.push_back(k);
    }
  }
  return out;
}

}  // namespace mzv
