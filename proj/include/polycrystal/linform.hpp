#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycrystal/iota.hpp"

namespace polycrystal {

// Finitely supported integer vector keyed by positive integers, stored sorted
// with no explicit zeros so that equality is structural.
class SparseVec {
 public:
  using Term = std::pair<Int, Int>;

  SparseVec() = default;
  SparseVec(std::initializer_list<Term> terms);

  Int get(Int key) const;
  void add(Int key, Int delta);
  SparseVec& add_scaled(const SparseVec& other, Int factor);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int max_key() const { return terms_.empty() ? 0 : terms_.back().first; }
  Int min_key() const { return terms_.empty() ? 0 : terms_.front().first; }
  const std::vector<Term>& terms() const { return terms_; }

  auto operator<=>(const SparseVec&) const = default;
  bool operator==(const SparseVec&) const = default;

 private:
  std::vector<Term> terms_;
};

// Affine-linear form  constant + sum_i lambda_i <h_i, lambda> + sum_k x_k * coeff_k.
//
// The highest weight enters only through the symbolic `lambda` part, so a form
// generated once stays valid for every lambda; instantiate() folds it in.
struct LinForm {
  Int constant = 0;
  SparseVec lambda;
  SparseVec x;

  static LinForm var(Int k, Int coeff = 1);
  static LinForm constant_term(Int c);
  static LinForm lambda_term(int i, Int coeff = 1);

  Int coeff(Int k) const { return x.get(k); }
  Int max_support() const { return x.max_key(); }
  bool is_zero() const { return constant == 0 && lambda.empty() && x.empty(); }
  bool is_symbolic() const { return !lambda.empty(); }

  Int constant_at(const Weight& lam) const;
  LinForm instantiate(const Weight& lam) const;

  // x[0] holds x_1. Throws if the form has a symbolic lambda part.
  Int evaluate(std::span<const Int> point) const;
  Int evaluate(std::span<const Int> point, const Weight& lam) const;

  LinForm& add_scaled(const LinForm& other, Int factor);
  LinForm operator+(const LinForm& o) const { return LinForm(*this).add_scaled(o, 1); }
  LinForm operator-(const LinForm& o) const { return LinForm(*this).add_scaled(o, -1); }
  LinForm operator*(Int f) const { return LinForm().add_scaled(*this, f); }

  // "λ_2 + 3x_4 − x_5"
  std::string to_string() const;
  // "λ_2 + 3x_4 ≥ x_5": positive terms on the left, negated negatives on the right.
  std::string inequality() const;

  auto operator<=>(const LinForm&) const = default;
  bool operator==(const LinForm&) const = default;
};

// beta_k^(+) = x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}
LinForm beta_plus(const IotaSequence& s, Int k);
// beta_k^(-): equals beta_plus(k-) when k- > 0; otherwise carries the symbolic
// constant -<h_{i_k}, lambda>.
LinForm beta_minus(const IotaSequence& s, Int k);
LinForm beta_minus(const IotaSequence& s, const Weight& lam, Int k);
// The lambda-free beta_{k-} used by S_k; zero when k- = 0.
LinForm beta_previous(const IotaSequence& s, Int k);

// S_k: subtracts phi_k * beta_k when phi_k > 0, else phi_k * beta_{k-}.
LinForm s_plain(const IotaSequence& s, const LinForm& phi, Int k);
// hat S_k: subtracts phi_k * beta^(+)_k when phi_k > 0, else phi_k * beta^(-)_k.
LinForm s_hat(const IotaSequence& s, const LinForm& phi, Int k);

// xi^(i) = -sum_{j < iota^(i)} <h_i, alpha_{i_j}> x_j - x_{iota^(i)}
LinForm xi_form(const IotaSequence& s, int i);
// lambda^(i) = <h_i, lambda> + xi^(i), symbolic in lambda.
LinForm lambda_form(const IotaSequence& s, int i);
LinForm lambda_form(const IotaSequence& s, const Weight& lam, int i);

enum class ClosureOperator { Plain, Hat };

struct ClosureBounds {
  Int support_bound = 16;        // operators are applied at positions k <= support_bound
  std::size_t max_forms = 200000;
  int threads = 1;
};

// A deduplicated set of forms read as the inequality system  phi >= 0.
struct FormSet {
  std::vector<LinForm> forms;  // sorted, unique, never the zero form
  bool truncated = false;
  Int support_bound = 0;
  // When set, coordinates at positions beyond this bound are forced to zero.
  std::optional<Int> zero_beyond;
  std::vector<LinForm> generators;

  std::size_t size() const { return forms.size(); }
  bool contains(const LinForm& f) const;
  void insert(LinForm f);
  // Canonicalizes `forms` (sort + unique, drops zero forms).
  void normalize();
  FormSet instantiate(const Weight& lam) const;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, FormSet partial) : Error(what), partial_(std::move(partial)) {}
  const FormSet& partial() const { return partial_; }

 private:
  FormSet partial_;
};

// Worklist closure of `seeds` under the chosen operator at every position k <= N.
// Zero forms are discarded. The result is marked truncated when some generated
// form reaches past N; exceeding max_forms throws BudgetExceeded with the partial set.
FormSet generate_closure(const IotaSequence& s, const std::vector<LinForm>& seeds, ClosureOperator op,
                         const ClosureBounds& bounds);

// x_1, ..., x_window
std::vector<LinForm> unit_seeds(Int window);
// Xi_iota: plain closure of x_1..x_window.
FormSet xi_infinity_set(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds);
// Xi_iota^(i): plain closure of xi^(i).
FormSet xi_i_set(const IotaSequence& s, int i, const ClosureBounds& bounds);
// Xi_iota[lambda]: hat closure of x_1..x_window and every lambda^(i), symbolic in lambda.
FormSet xi_lambda_set(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds);

struct PositivityViolation {
  LinForm form;
  Int position;
};

struct PositivityReport {
  bool pass = true;
  // false when the examined set was truncated and no violation was found
  bool conclusive = true;
  std::vector<PositivityViolation> violations;
};

// Checks phi_k >= 0 at every first-occurrence position k (k- = 0) for every form
// not listed in `excluded` (the strict variant excludes the xi^(i)).
PositivityReport check_positivity(const FormSet& fs, const IotaSequence& s,
                                  const std::vector<LinForm>& excluded = {});

// Strict positivity over Xi_iota and every Xi_iota^(i).
PositivityReport check_strict_positivity(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds);

struct AmpleReport {
  bool ample = true;
  bool conclusive = true;
  std::optional<LinForm> witness;  // a generated form negative at the zero vector
};

// (iota, lambda) is ample iff every form of Xi_iota[lambda] is >= 0 at the zero vector.
// A negative constant is a conclusive "not ample"; otherwise truncation makes the
// verdict hold only for the generated window.
AmpleReport check_ample(const IotaSequence& s, const Weight& lam, Int seed_window, const ClosureBounds& bounds);
AmpleReport check_ample(const FormSet& xi_lambda, const Weight& lam);

}  // namespace polycrystal
