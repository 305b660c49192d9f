#include "polycrystal/linform.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "polycrystal/detail/parallel.hpp"

namespace polycrystal {

// ---------------------------------------------------------------- SparseVec

SparseVec::SparseVec(std::initializer_list<Term> terms) {
  for (const auto& [k, v] : terms) add(k, v);
}

Int SparseVec::get(Int key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, Int k) { return t.first < k; });
  return (it != terms_.end() && it->first == key) ? it->second : 0;
}

void SparseVec::add(Int key, Int delta) {
  if (delta == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, Int k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    it->second = checked_add(it->second, delta);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {key, delta});
  }
}

SparseVec& SparseVec::add_scaled(const SparseVec& other, Int factor) {
  if (factor == 0 || other.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, checked_mul(b->second, factor));
      ++b;
    } else {
      Int v = checked_fma(a->second, b->second, factor);
      if (v != 0) merged.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

// ---------------------------------------------------------------- LinForm

LinForm LinForm::var(Int k, Int coeff) {
  LinForm f;
  f.x.add(k, coeff);
  return f;
}

LinForm LinForm::constant_term(Int c) {
  LinForm f;
  f.constant = c;
  return f;
}

LinForm LinForm::lambda_term(int i, Int coeff) {
  LinForm f;
  f.lambda.add(i, coeff);
  return f;
}

Int LinForm::constant_at(const Weight& lam) const {
  Int c = constant;
  for (const auto& [i, v] : lambda.terms()) c = checked_fma(c, v, lam[static_cast<int>(i)]);
  return c;
}

LinForm LinForm::instantiate(const Weight& lam) const {
  LinForm f;
  f.constant = constant_at(lam);
  f.x = x;
  return f;
}

Int LinForm::evaluate(std::span<const Int> point) const {
  if (is_symbolic()) throw Error("evaluating a lambda-symbolic form needs a weight");
  Int v = constant;
  for (const auto& [k, c] : x.terms()) {
    if (k > static_cast<Int>(point.size())) break;
    v = checked_fma(v, c, point[k - 1]);
  }
  return v;
}

Int LinForm::evaluate(std::span<const Int> point, const Weight& lam) const {
  Int v = constant_at(lam);
  for (const auto& [k, c] : x.terms()) {
    if (k > static_cast<Int>(point.size())) break;
    v = checked_fma(v, c, point[k - 1]);
  }
  return v;
}

LinForm& LinForm::add_scaled(const LinForm& other, Int factor) {
  constant = checked_fma(constant, other.constant, factor);
  lambda.add_scaled(other.lambda, factor);
  x.add_scaled(other.x, factor);
  return *this;
}

namespace {

struct Piece {
  Int coeff;
  std::string symbol;  // empty for the constant
};

std::string render_piece(Int magnitude, const std::string& symbol) {
  if (symbol.empty()) return std::to_string(magnitude);
  return magnitude == 1 ? symbol : std::to_string(magnitude) + symbol;
}

std::vector<Piece> pieces(const LinForm& f) {
  std::vector<Piece> out;
  if (f.constant != 0) out.push_back({f.constant, ""});
  for (const auto& [i, v] : f.lambda.terms()) out.push_back({v, "λ_" + std::to_string(i)});
  for (const auto& [k, v] : f.x.terms()) out.push_back({v, "x_" + std::to_string(k)});
  return out;
}

std::string join_signed(const std::vector<Piece>& ps) {
  if (ps.empty()) return "0";
  std::string out;
  for (const auto& p : ps) {
    Int mag = p.coeff < 0 ? -p.coeff : p.coeff;
    if (out.empty())
      out = (p.coeff < 0 ? "−" : "") + render_piece(mag, p.symbol);
    else
      out += (p.coeff < 0 ? " − " : " + ") + render_piece(mag, p.symbol);
  }
  return out;
}

}  // namespace

std::string LinForm::to_string() const { return join_signed(pieces(*this)); }

std::string LinForm::inequality() const {
  std::vector<Piece> pos, neg;
  for (const auto& p : pieces(*this)) {
    if (p.coeff > 0)
      pos.push_back(p);
    else
      neg.push_back({-p.coeff, p.symbol});
  }
  return join_signed(pos) + " ≥ " + join_signed(neg);
}

// ---------------------------------------------------------------- beta / S

LinForm beta_plus(const IotaSequence& s, Int k) {
  const Int kp = s.k_plus(k);
  const int ik = s.at(k);
  const CartanData& c = s.cartan();
  LinForm f = LinForm::var(k);
  for (Int j = k + 1; j < kp; ++j) f.x.add(j, c.a(ik, s.at(j)));
  f.x.add(kp, 1);
  return f;
}

LinForm beta_previous(const IotaSequence& s, Int k) {
  const Int km = s.k_minus(k);
  return km > 0 ? beta_plus(s, km) : LinForm{};
}

LinForm beta_minus(const IotaSequence& s, Int k) {
  const Int km = s.k_minus(k);
  if (km > 0) return beta_plus(s, km);
  const int ik = s.at(k);
  const CartanData& c = s.cartan();
  LinForm f = LinForm::lambda_term(ik, -1);
  for (Int j = 1; j < k; ++j) f.x.add(j, c.a(ik, s.at(j)));
  f.x.add(k, 1);
  return f;
}

LinForm beta_minus(const IotaSequence& s, const Weight& lam, Int k) { return beta_minus(s, k).instantiate(lam); }

LinForm s_plain(const IotaSequence& s, const LinForm& phi, Int k) {
  const Int ck = phi.coeff(k);
  if (ck == 0) return phi;
  LinForm out = phi;
  out.add_scaled(ck > 0 ? beta_plus(s, k) : beta_previous(s, k), -ck);
  return out;
}

LinForm s_hat(const IotaSequence& s, const LinForm& phi, Int k) {
  const Int ck = phi.coeff(k);
  if (ck == 0) return phi;
  LinForm out = phi;
  out.add_scaled(ck > 0 ? beta_plus(s, k) : beta_minus(s, k), -ck);
  return out;
}

LinForm xi_form(const IotaSequence& s, int i) {
  const Int first = s.first(i);
  const CartanData& c = s.cartan();
  LinForm f;
  for (Int j = 1; j < first; ++j) f.x.add(j, -c.a(i, s.at(j)));
  f.x.add(first, -1);
  return f;
}

LinForm lambda_form(const IotaSequence& s, int i) { return LinForm::lambda_term(i) + xi_form(s, i); }

LinForm lambda_form(const IotaSequence& s, const Weight& lam, int i) { return lambda_form(s, i).instantiate(lam); }

// ---------------------------------------------------------------- FormSet

bool FormSet::contains(const LinForm& f) const { return std::binary_search(forms.begin(), forms.end(), f); }

void FormSet::insert(LinForm f) {
  if (f.is_zero()) return;
  auto it = std::lower_bound(forms.begin(), forms.end(), f);
  if (it == forms.end() || *it != f) forms.insert(it, std::move(f));
}

void FormSet::normalize() {
  std::erase_if(forms, [](const LinForm& f) { return f.is_zero(); });
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

FormSet FormSet::instantiate(const Weight& lam) const {
  FormSet out = *this;
  for (auto& f : out.forms) f = f.instantiate(lam);
  for (auto& f : out.generators) f = f.instantiate(lam);
  out.normalize();
  return out;
}

FormSet generate_closure(const IotaSequence& s, const std::vector<LinForm>& seeds, ClosureOperator op,
                         const ClosureBounds& bounds) {
  const Int n_bound = bounds.support_bound;
  std::set<LinForm> seen;
  std::vector<LinForm> frontier;

  FormSet result;
  result.support_bound = n_bound;
  result.generators = seeds;

  auto finish = [&](bool over_budget) {
    result.forms.assign(seen.begin(), seen.end());
    result.truncated = over_budget;
    for (const auto& f : result.forms)
      if (f.max_support() > n_bound) result.truncated = true;
    return result;
  };

  for (const auto& f : seeds) {
    if (f.is_zero() || !seen.insert(f).second) continue;
    frontier.push_back(f);
  }
  if (seen.size() > bounds.max_forms)
    throw BudgetExceeded("closure exceeded " + std::to_string(bounds.max_forms) + " forms", finish(true));

  auto successors = [&](const LinForm& phi) {
    std::vector<LinForm> out;
    for (const auto& [k, c] : phi.x.terms()) {
      if (k > n_bound) break;
      LinForm next = op == ClosureOperator::Plain ? s_plain(s, phi, k) : s_hat(s, phi, k);
      if (!next.is_zero() && next != phi) out.push_back(std::move(next));
    }
    return out;
  };

  // level-synchronous FIFO: the merged order, and therefore any partial result, is
  // independent of the worker count
  while (!frontier.empty()) {
    auto produced = detail::parallel_map(frontier, bounds.threads, successors);
    std::vector<LinForm> next_frontier;
    for (auto& batch : produced) {
      for (auto& f : batch) {
        if (!seen.insert(f).second) continue;
        if (seen.size() > bounds.max_forms)
          throw BudgetExceeded("closure exceeded " + std::to_string(bounds.max_forms) + " forms", finish(true));
        next_frontier.push_back(std::move(f));
      }
    }
    frontier = std::move(next_frontier);
  }
  return finish(false);
}

std::vector<LinForm> unit_seeds(Int window) {
  std::vector<LinForm> out;
  for (Int k = 1; k <= window; ++k) out.push_back(LinForm::var(k));
  return out;
}

FormSet xi_infinity_set(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds) {
  return generate_closure(s, unit_seeds(seed_window), ClosureOperator::Plain, bounds);
}

FormSet xi_i_set(const IotaSequence& s, int i, const ClosureBounds& bounds) {
  return generate_closure(s, {xi_form(s, i)}, ClosureOperator::Plain, bounds);
}

FormSet xi_lambda_set(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds) {
  auto seeds = unit_seeds(seed_window);
  for (int i = 1; i <= s.rank(); ++i) seeds.push_back(lambda_form(s, i));
  return generate_closure(s, seeds, ClosureOperator::Hat, bounds);
}

// ---------------------------------------------------------------- checks

PositivityReport check_positivity(const FormSet& fs, const IotaSequence& s, const std::vector<LinForm>& excluded) {
  PositivityReport report;
  std::vector<Int> first_positions;
  for (int i = 1; i <= s.rank(); ++i) first_positions.push_back(s.first(i));
  std::sort(first_positions.begin(), first_positions.end());

  for (const auto& f : fs.forms) {
    if (std::find(excluded.begin(), excluded.end(), f) != excluded.end()) continue;
    for (Int k : first_positions)
      if (f.coeff(k) < 0) report.violations.push_back({f, k});
  }
  report.pass = report.violations.empty();
  report.conclusive = !report.pass || !fs.truncated;
  return report;
}

namespace {

FormSet closure_or_partial(const std::function<FormSet()>& build) {
  try {
    return build();
  } catch (const BudgetExceeded& e) {
    return e.partial();
  }
}

}  // namespace

PositivityReport check_strict_positivity(const IotaSequence& s, Int seed_window, const ClosureBounds& bounds) {
  std::vector<LinForm> xis;
  for (int i = 1; i <= s.rank(); ++i) xis.push_back(xi_form(s, i));

  std::vector<FormSet> sets;
  sets.push_back(closure_or_partial([&] { return xi_infinity_set(s, seed_window, bounds); }));
  for (int i = 1; i <= s.rank(); ++i) sets.push_back(closure_or_partial([&] { return xi_i_set(s, i, bounds); }));

  PositivityReport total;
  bool any_truncated = false;
  for (const auto& fs : sets) {
    auto r = check_positivity(fs, s, xis);
    any_truncated = any_truncated || fs.truncated;
    total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
  }
  total.pass = total.violations.empty();
  total.conclusive = !total.pass || !any_truncated;
  return total;
}

AmpleReport check_ample(const FormSet& xi_lambda, const Weight& lam) {
  AmpleReport report;
  for (const auto& f : xi_lambda.forms) {
    if (f.constant_at(lam) < 0) {
      report.ample = false;
      report.witness = f;
      break;
    }
  }
  report.conclusive = !report.ample || !xi_lambda.truncated;
  return report;
}

AmpleReport check_ample(const IotaSequence& s, const Weight& lam, Int seed_window, const ClosureBounds& bounds) {
  FormSet fs = closure_or_partial([&] { return xi_lambda_set(s, seed_window, bounds); });
  return check_ample(fs, lam);
}

}  // namespace polycrystal
