#include "polycrystal/realization.hpp"

#include <algorithm>
#include <unordered_set>

#include "polycrystal/detail/parallel.hpp"

namespace polycrystal {

MemberResult member(const LatticePoint& x, const FormSet& fs, const Weight& lam) {
  MemberResult r;
  r.necessary_only = fs.truncated;
  if (!x.nonnegative()) return r;
  if (fs.zero_beyond && x.size() > *fs.zero_beyond) return r;
  for (const auto& f : fs.forms) {
    if (f.evaluate(x.entries(), lam) < 0) {
      r.violated = f;
      return r;
    }
  }
  r.member = true;
  return r;
}

namespace {

bool depth_order(const LatticePoint& a, const LatticePoint& b) {
  Int da = a.depth(), db = b.depth();
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

RealizationResult enumerate_blambda(const IotaSequence& s, const Weight& lam, const FormSet* fs,
                                    const EnumerateOptions& opts) {
  RealizationResult result;
  result.ctx = LatticeContext::make(s, lam);
  const LatticeContext& ctx = *result.ctx;

  result.ample = fs ? check_ample(*fs, lam) : check_ample(s, lam, opts.seed_window, opts.bounds);
  if (!result.ample.ample)
    throw NotAmple("(iota, lambda) is not ample: " + result.ample.witness->to_string() + " is negative at 0");

  using Set = std::unordered_set<LatticePoint, LatticePointHash>;
  Set seen;
  std::vector<LatticePoint> frontier{LatticePoint{}};
  seen.insert(frontier.front());

  auto successors = [&](const LatticePoint& x) {
    std::vector<LatticePoint> out;
    for (int i = 1; i <= ctx.rank(); ++i)
      if (auto y = lattice_f(ctx, x, i)) out.push_back(std::move(*y));
    return out;
  };

  Int depth = 0;
  result.elements.push_back(LatticePoint{});
  result.complete = true;
  while (!frontier.empty()) {
    auto produced = detail::parallel_map(frontier, opts.threads, successors);
    if (depth == opts.depth_cap) {
      result.complete = std::all_of(produced.begin(), produced.end(), [](const auto& v) { return v.empty(); });
      break;
    }
    std::vector<LatticePoint> next;
    for (auto& batch : produced)
      for (auto& y : batch)
        if (seen.insert(y).second) next.push_back(std::move(y));
    std::sort(next.begin(), next.end());
    result.elements.insert(result.elements.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (!frontier.empty()) ++depth;
  }
  result.depth_used = std::min(depth, opts.depth_cap);
  std::sort(result.elements.begin(), result.elements.end(), depth_order);

  for (const auto& x : result.elements) ++result.by_weight[color_sums(ctx, x)];

  if (fs && opts.cross_validate) {
    for (const auto& x : result.elements) {
      auto m = member(x, *fs, lam);
      if (!m.member)
        throw CrossValidationError("element " + x.label() + " reached by f_i violates " +
                                   (m.violated ? m.violated->inequality() : std::string("the support bound")));
    }
    result.cross_validated = true;
  }
  return result;
}

std::vector<LatticePoint> enumerate_binfinity(const IotaSequence& s, Int depth, int threads) {
  auto ctx = LatticeContext::binfinity(s);
  std::unordered_set<LatticePoint, LatticePointHash> seen{LatticePoint{}};
  std::vector<LatticePoint> out{LatticePoint{}}, frontier{LatticePoint{}};
  for (Int d = 0; d < depth; ++d) {
    auto produced = detail::parallel_map(frontier, threads, [&](const LatticePoint& x) {
      std::vector<LatticePoint> next;
      for (int i = 1; i <= s.rank(); ++i) next.push_back(*lattice_f(*ctx, x, i));
      return next;
    });
    std::vector<LatticePoint> level;
    for (auto& batch : produced)
      for (auto& y : batch)
        if (seen.insert(y).second) level.push_back(std::move(y));
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
    frontier = std::move(level);
  }
  return out;
}

std::size_t weight_multiplicity(const RealizationResult& r, const std::vector<Int>& m) {
  if (static_cast<int>(m.size()) != r.ctx->rank()) throw Error("weight coefficients have the wrong length");
  Int total = 0;
  for (Int v : m) {
    if (v < 0) return 0;
    total = checked_add(total, v);
  }
  if (!r.complete && total > r.depth_used)
    throw IncompleteEnumeration("depth " + std::to_string(total) + " exceeds the enumerated depth " +
                                std::to_string(r.depth_used));
  auto it = r.by_weight.find(m);
  return it == r.by_weight.end() ? 0 : it->second;
}

std::optional<std::vector<Int>> root_depth(const CartanData& c, const Weight& lambda, const Weight& nu) {
  if (c.is_singular()) throw Error("weights do not determine root coefficients for singular Cartan data");
  std::vector<Int> rhs(c.rank());
  for (int i = 1; i <= c.rank(); ++i) rhs[i - 1] = checked_sub(lambda[i], nu[i]);
  auto m = c.solve_root_coefficients(rhs);
  if (!m || std::any_of(m->begin(), m->end(), [](Int v) { return v < 0; })) return std::nullopt;
  return m;
}

std::size_t lr_coefficient(const RealizationResult& b_mu, const Weight& lambda, const std::vector<Int>& m) {
  const LatticeContext& ctx = *b_mu.ctx;
  Int total = 0;
  for (Int v : m) total = checked_add(total, v);
  if (!b_mu.complete && total > b_mu.depth_used)
    throw IncompleteEnumeration("depth " + std::to_string(total) + " exceeds the enumerated depth " +
                                std::to_string(b_mu.depth_used));
  std::size_t count = 0;
  for (const auto& x : b_mu.elements) {
    if (x.depth() != total || color_sums(ctx, x) != m) continue;
    bool ok = true;
    for (int i = 1; i <= ctx.rank() && ok; ++i) ok = lattice_epsilon(ctx, x, i) <= lambda[i];
    if (ok) ++count;
  }
  return count;
}

std::map<Weight, std::size_t> lr_decomposition(const RealizationResult& b_mu, const Weight& lambda) {
  if (!b_mu.complete) throw IncompleteEnumeration("tensor decomposition needs a complete enumeration");
  const LatticeContext& ctx = *b_mu.ctx;
  const CartanData& c = ctx.cartan();
  const int n = ctx.rank();
  std::map<Weight, std::size_t> out;
  for (const auto& x : b_mu.elements) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = lattice_epsilon(ctx, x, i) <= lambda[i];
    if (!ok) continue;
    auto m = color_sums(ctx, x);
    std::vector<Int> nu(n);
    for (int j = 1; j <= n; ++j) {
      Int v = checked_add(lambda[j], ctx.lambda[j]);
      for (int i = 1; i <= n; ++i) v = checked_sub(v, checked_mul(m[i - 1], c.a(j, i)));
      nu[j - 1] = v;
    }
    ++out[Weight(nu)];
  }
  return out;
}

std::size_t lr_coefficient(const IotaSequence& s, const Weight& lambda, const Weight& mu, const std::vector<Int>& m,
                           const EnumerateOptions& opts) {
  if (std::any_of(m.begin(), m.end(), [](Int v) { return v < 0; })) return 0;
  EnumerateOptions o = opts;
  Int total = 0;
  for (Int v : m) total = checked_add(total, v);
  o.depth_cap = total;
  auto b_mu = enumerate_blambda(s, mu, nullptr, o);
  return lr_coefficient(b_mu, lambda, m);
}

std::size_t lr_coefficient(const IotaSequence& s, const Weight& lambda, const Weight& mu, const Weight& nu,
                           const EnumerateOptions& opts) {
  std::vector<Int> top(s.rank());
  for (int i = 1; i <= s.rank(); ++i) top[i - 1] = checked_add(lambda[i], mu[i]);
  auto m = root_depth(s.cartan(), Weight(top), nu);
  if (!m) return 0;
  return lr_coefficient(s, lambda, mu, *m, opts);
}

Int epsilon_star(const IotaSequence& s, const LatticePoint& x, int i, const FormSet& xi_set) {
  const LinForm xi = xi_form(s, i);
  auto report = check_positivity(xi_set, s, {xi});
  if (!report.pass)
    throw StrictPositivityViolated("form " + report.violations.front().form.to_string() +
                                   " has a negative coefficient at position " +
                                   std::to_string(report.violations.front().position));
  Int best = 0;
  bool first = true;
  for (const auto& f : xi_set.forms) {
    Int v = -f.evaluate(x.entries());
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

Int epsilon_star(const IotaSequence& s, const LatticePoint& x, int i, const ClosureBounds& bounds) {
  ClosureBounds b = bounds;
  b.support_bound = std::max(b.support_bound, x.size() + 2 * s.period_length());
  return epsilon_star(s, x, i, xi_i_set(s, i, b));
}

}  // namespace polycrystal
