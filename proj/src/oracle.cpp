#include "polycrystal/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "polycrystal/errors.hpp"

namespace polycrystal::oracle {

namespace {

Int height(const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

// <h_i, lambda - sum m_j alpha_j>
Int pairing_at(const CartanData& c, const Weight& lambda, const std::vector<Int>& m, int i) {
  Int v = lambda[i];
  for (int j = 1; j <= c.rank(); ++j) v = checked_sub(v, checked_mul(c.a(i, j), m[j - 1]));
  return v;
}

// Dominant Weyl conjugate of lambda - sum m alpha, returned as a deficit.
std::vector<Int> dominant_deficit(const CartanData& c, const Weight& lambda, std::vector<Int> m) {
  for (int guard = 0; guard < 100000; ++guard) {
    bool moved = false;
    for (int i = 1; i <= c.rank(); ++i) {
      Int p = pairing_at(c, lambda, m, i);
      if (p < 0) {
        m[i - 1] = checked_add(m[i - 1], p);
        moved = true;
      }
    }
    if (!moved) return m;
  }
  throw NotFiniteType("Weyl orbit did not reach a dominant weight");
}

bool is_weight(const CartanData& c, const Weight& lambda, const std::vector<Int>& m) {
  auto d = dominant_deficit(c, lambda, m);
  return std::all_of(d.begin(), d.end(), [](Int v) { return v >= 0; });
}

void require_dominant(const Weight& w, int rank) {
  if (w.rank() != rank) throw Error("weight rank does not match the root system");
  if (!w.dominant()) throw Error("oracle weights must be dominant");
}

}  // namespace

RootSystem::RootSystem(const CartanData& c, std::size_t max_roots) : cartan_(c) {
  const int r = c.rank();
  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (int i = 1; i <= r; ++i) {
    std::vector<Int> a(r, 0);
    a[i - 1] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= r; ++i) {
      Int p = 0;
      for (int j = 1; j <= r; ++j) p += c.a(i, j) * beta[j - 1];
      auto gamma = beta;
      gamma[i - 1] -= p;
      if (std::any_of(gamma.begin(), gamma.end(), [](Int v) { return v < 0; })) continue;
      if (seen.insert(gamma).second) {
        if (seen.size() > max_roots) throw NotFiniteType("root system is not of finite type");
        queue.push_back(gamma);
      }
    }
  }
  roots_.assign(seen.begin(), seen.end());
  std::sort(roots_.begin(), roots_.end(), [](const auto& x, const auto& y) {
    Int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
}

Int RootSystem::root_inner(const std::vector<Int>& x, const std::vector<Int>& y) const {
  Int v = 0;
  const int r = cartan_.rank();
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      v = checked_add(v, checked_mul(checked_mul(x[i - 1], y[j - 1]), checked_mul(cartan_.symmetrizer(i), cartan_.a(i, j))));
  return v;
}

Int RootSystem::weight_root_inner(const std::vector<Int>& lambda, const std::vector<Int>& y) const {
  Int v = 0;
  for (int j = 1; j <= cartan_.rank(); ++j)
    v = checked_add(v, checked_mul(checked_mul(lambda[j - 1], y[j - 1]), cartan_.symmetrizer(j)));
  return v;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  const int r = rs.cartan().rank();
  require_dominant(lambda, r);
  std::vector<Int> rho(r, 1), shifted(r);
  for (int i = 0; i < r; ++i) shifted[i] = lambda.coeffs[i] + 1;
  Int num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    num = checked_mul(num, rs.weight_root_inner(shifted, alpha));
    den = checked_mul(den, rs.weight_root_inner(rho, alpha));
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw Error("Weyl dimension is not integral");
  return num;
}

std::map<std::vector<Int>, Int> character(const RootSystem& rs, const Weight& lambda) {
  const CartanData& c = rs.cartan();
  const int r = c.rank();
  require_dominant(lambda, r);

  // weights by BFS: every weight below lambda is reached by subtracting simple roots
  std::set<std::vector<Int>> weights;
  std::deque<std::vector<Int>> queue{std::vector<Int>(r, 0)};
  weights.insert(queue.front());
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      auto next = m;
      ++next[i];
      if (!weights.count(next) && is_weight(c, lambda, next)) {
        weights.insert(next);
        queue.push_back(next);
      }
    }
  }
  std::vector<std::vector<Int>> order(weights.begin(), weights.end());
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    Int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });

  std::map<std::vector<Int>, Int> mult;
  std::vector<Int> shifted(r);
  for (int i = 0; i < r; ++i) shifted[i] = lambda.coeffs[i] + 1;
  for (const auto& m : order) {
    if (height(m) == 0) {
      mult[m] = 1;
      continue;
    }
    // (lambda + rho, lambda + rho) - (mu + rho, mu + rho) = 2 (lambda + rho, beta) - (beta, beta), beta = sum m alpha
    Int denom = checked_sub(checked_mul(2, rs.weight_root_inner(shifted, m)), rs.root_inner(m, m));
    Int numer = 0;
    for (const auto& alpha : rs.positive_roots()) {
      for (Int t = 1;; ++t) {
        std::vector<Int> up(r);
        bool valid = true;
        for (int i = 0; i < r; ++i) {
          up[i] = m[i] - t * alpha[i];
          valid = valid && up[i] >= 0;
        }
        if (!valid) break;
        auto it = mult.find(up);
        if (it == mult.end()) continue;
        // (mu + t alpha, alpha) with mu + t alpha = lambda - sum up alpha
        Int ip = checked_sub(rs.weight_root_inner(lambda.coeffs, alpha), rs.root_inner(up, alpha));
        numer = checked_add(numer, checked_mul(it->second, ip));
      }
    }
    numer = checked_mul(numer, 2);
    if (denom <= 0 || numer % denom != 0) throw Error("Freudenthal recursion produced a non-integer");
    Int v = numer / denom;
    if (v > 0) mult[m] = v;
  }
  return mult;
}

Int freudenthal(const RootSystem& rs, const Weight& lambda, const std::vector<Int>& m) {
  if (static_cast<int>(m.size()) != rs.cartan().rank()) throw Error("deficit has the wrong length");
  if (std::any_of(m.begin(), m.end(), [](Int v) { return v < 0; })) return 0;
  auto ch = character(rs, lambda);
  auto it = ch.find(m);
  return it == ch.end() ? 0 : it->second;
}

std::map<Weight, Int> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const CartanData& c = rs.cartan();
  const int r = c.rank();
  require_dominant(lambda, r);
  require_dominant(mu, r);
  Weight top = Weight::zero(r);
  for (int i = 0; i < r; ++i) top.coeffs[i] = lambda.coeffs[i] + mu.coeffs[i];

  // product character, deficits relative to lambda + mu
  std::map<std::vector<Int>, Int> prod;
  auto cl = character(rs, lambda), cm = character(rs, mu);
  for (const auto& [a, x] : cl)
    for (const auto& [b, y] : cm) {
      std::vector<Int> s(r);
      for (int i = 0; i < r; ++i) s[i] = a[i] + b[i];
      prod[s] += x * y;
    }

  std::map<Weight, Int> out;
  for (;;) {
    const std::vector<Int>* best = nullptr;
    for (const auto& [k, v] : prod) {
      if (v == 0) continue;
      if (v < 0) throw Error("negative coefficient while decomposing a character");
      if (!best || height(k) < height(*best)) best = &k;
    }
    if (!best) break;
    const std::vector<Int> offset = *best;
    const Int count = prod[offset];
    Weight hw = Weight::zero(r);
    for (int i = 1; i <= r; ++i) hw.coeffs[i - 1] = pairing_at(c, top, offset, i);
    if (!hw.dominant()) throw Error("highest remaining weight is not dominant");
    out[hw] += count;
    for (const auto& [k, v] : character(rs, hw)) {
      std::vector<Int> s(r);
      for (int i = 0; i < r; ++i) s[i] = offset[i] + k[i];
      prod[s] -= count * v;
    }
  }
  return out;
}

Int char_product_lr(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  auto dec = tensor_decomposition(rs, lambda, mu);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}

}  // namespace polycrystal::oracle
