#include "polycrystal/special.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace polycrystal {

// ---------------------------------------------------------------- rank 2

Int chebyshev_p(Int X, Int k) {
  if (k < 0) throw IndexOutOfRange("Chebyshev index must be >= 0");
  Int prev = 1, cur = X;
  if (k == 0) return prev;
  for (Int t = 2; t <= k; ++t) {
    Int next = checked_sub(checked_mul(X, cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

Int cheb_a(Int c1, Int c2, Int l) {
  if (l < 0) throw IndexOutOfRange("coefficient index must be >= 0");
  const Int X = checked_sub(checked_mul(c1, c2), 2);
  if (l == 0) return 0;
  if (l == 1) return 1;
  const Int k = l / 2;
  if (l % 2 == 0) return checked_mul(c1, chebyshev_p(X, k - 1));
  return checked_add(chebyshev_p(X, k), chebyshev_p(X, k - 1));
}

std::optional<Int> l_max(Int c1, Int c2) {
  if (checked_mul(c1, c2) >= 4) return std::nullopt;
  for (Int l = 1;; ++l)
    if (cheb_a(c1, c2, l + 1) < 0) return l;
}

ChebCoeffs::ChebCoeffs(Int c1_, Int c2_) : c1(c1_), c2(c2_), X(checked_mul(c1_, c2_) - 2), lmax(l_max(c1_, c2_)) {
  if (c1 < 0 || c2 < 0 || (c1 == 0) != (c2 == 0)) throw InvalidCartan("invalid rank-2 parameters");
}

LinForm eta_form(Int c1, Int c2, Int l) {
  LinForm f = LinForm::var(l, cheb_a(c2, c1, l + 1));
  f.x.add(l + 1, -cheb_a(c2, c1, l));
  return f;
}

FormSet rank2_system(Int c1, Int c2, std::optional<Int> l_window) {
  ChebCoeffs ch(c1, c2);
  if (!ch.lmax && !l_window) throw Error("an explicit l_window is required when l_max is infinite");
  const Int L = ch.lmax ? *ch.lmax : *l_window;

  FormSet fs;
  fs.support_bound = L;
  fs.truncated = !ch.lmax;
  if (ch.lmax) fs.zero_beyond = *ch.lmax;
  fs.insert(LinForm::lambda_term(1) + LinForm::var(1, -1));
  for (Int k = 1; k <= L; ++k) fs.insert(LinForm::var(k));
  for (Int l = 1; l < L; ++l) {
    LinForm f = LinForm::var(l, ch.a(l));
    f.x.add(l + 1, -ch.a(l - 1));
    fs.insert(f);
    fs.insert(LinForm::lambda_term(2) + eta_form(c1, c2, l));
  }
  return fs;
}

// ---------------------------------------------------------------- A_n

Int an_position(int n, int j, int i) {
  if (n < 1 || j < 1 || i < 1 || i > n) throw IndexOutOfRange("double index out of range");
  return static_cast<Int>(j - 1) * n + i;
}

namespace {

// x_{j;i} in the A_n convention: zero when i = 0 or i = n + 1.
LinForm an_var(int n, int j, int i, Int coeff) {
  if (i <= 0 || i > n) return {};
  return LinForm::var(an_position(n, j, i), coeff);
}

}  // namespace

FormSet an_system(int n) {
  if (n < 1) throw InvalidCartan("type A needs n >= 1");
  FormSet fs;
  const Int last = an_position(n, n, 1);
  fs.zero_beyond = last;
  fs.support_bound = last;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) fs.insert(an_var(n, j, i - j + 1, 1) + an_var(n, j + 1, i - j, -1));
    fs.insert(an_var(n, i, 1, 1));
  }
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (i + j > n + 1 && an_position(n, j, i) < last) fs.insert(an_var(n, j, i, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      fs.insert(LinForm::lambda_term(i) + an_var(n, j, i - j + 1, -1) + an_var(n, j, i - j, 1));
  return fs;
}

std::vector<LinForm> an_xi_family(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("index outside 1..n");
  std::vector<LinForm> out;
  for (int j = 1; j <= i; ++j) out.push_back(an_var(n, j, i - j + 1, -1) + an_var(n, j, i - j, 1));
  std::sort(out.begin(), out.end());
  return out;
}

Int an_epsilon_star(int n, const std::vector<Int>& x, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("index outside 1..n");
  auto get = [&](int j, int ii) -> Int {
    if (ii <= 0 || ii > n) return 0;
    Int p = an_position(n, j, ii);
    return p <= static_cast<Int>(x.size()) ? x[p - 1] : 0;
  };
  Int best = 0;
  for (int j = 1; j <= i; ++j) {
    Int v = checked_sub(get(j, i - j + 1), get(j, i - j));
    if (j == 1 || v > best) best = v;
  }
  return best;
}

// ---------------------------------------------------------------- affine A

Int affine_position(int n, int j, int i, Int k) {
  if (n < 3 || j < 1 || i < 1 || i > n - 1) throw IndexOutOfRange("affine double index out of range");
  return k - 1 + static_cast<Int>(j - 1) * (n - 1) + i;
}

std::optional<Int> affine_variable(int n, int j, int i, Int k) {
  if (i == n) {
    ++j;
    i = 1;
  } else if (i == 0) {
    --j;
    i = n - 1;
  }
  if (j <= 0) return std::nullopt;
  return affine_position(n, j, i, k);
}

AdmissibleMatrix::AdmissibleMatrix(int n, int row_bound, std::map<std::pair<int, int>, Int> entries)
    : n_(n), row_bound_(row_bound), entries_(std::move(entries)) {
  if (n_ < 3) throw InvalidCartan("affine type A needs n >= 3");
  for (auto it = entries_.begin(); it != entries_.end();) {
    auto [j, i] = it->first;
    if (j < 1 || i < 1 || i > n_ - 1) throw IndexOutOfRange("matrix entry outside Z_{>=1} x [1,n-1]");
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

AdmissibleMatrix AdmissibleMatrix::c0(int n, int row_bound) { return AdmissibleMatrix(n, row_bound, {{{1, 1}, 1}}); }

Int AdmissibleMatrix::c(int j, int i) const {
  auto it = entries_.find({j, i});
  return it == entries_.end() ? 0 : it->second;
}

Int AdmissibleMatrix::s(int j, int i) const {
  Int v = 0;
  for (int r = 1; r <= j; ++r) v = checked_add(v, c(r, i));
  return v;
}

LinForm AdmissibleMatrix::phi(Int k) const {
  LinForm f;
  for (const auto& [ji, v] : entries_) {
    Int p = affine_position(n_, ji.first, ji.second, k);
    if (p < 1) throw IndexOutOfRange("phi_{C[0]} needs c_{1;1} = 0");
    f.x.add(p, v);
  }
  return f;
}

bool AdmissibleMatrix::is_admissible(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto cell = [](int j, int i) { return "(" + std::to_string(j) + ";" + std::to_string(i) + ")"; };
  const int J = row_bound_;
  const int rows = std::max(J, entries_.empty() ? 1 : entries_.rbegin()->first.first) + 1;
  if (rows > J + 1) return fail("entries beyond the row bound");

  std::vector<std::vector<Int>> s(rows + 2, std::vector<Int>(n_, 0));
  for (int j = 1; j <= rows + 1; ++j)
    for (int i = 1; i <= n_ - 1; ++i) s[j][i] = checked_add(s[j - 1][i], c(j, i));

  Int prefix = 0;
  for (int j = 1; j <= rows; ++j) {
    for (int i = 1; i <= n_ - 1; ++i) {
      if (s[j][i] < 0) return fail("negative partial sum at " + cell(j, i));
      if (j >= J && s[j][i] != (i == 1 ? 1 : 0)) return fail("partial sums not stabilized at " + cell(j, i));
      prefix = checked_add(prefix, s[j][i]);
      if (prefix > j) return fail("cumulative sum exceeds the row at " + cell(j, i));
      if (j >= J && prefix != j) return fail("cumulative sum not saturated at " + cell(j, i));
      if (s[j][i] > 0) {
        bool found = false;
        const int base = (j - 1) * (n_ - 1) + (i - 1);
        for (int t = base + 1; !found && t <= base + (n_ - 1); ++t) found = s[t / (n_ - 1) + 1][t % (n_ - 1) + 1] > 0;
        if (!found) return fail("positive partial sum at " + cell(j, i) + " has no positive successor");
      }
    }
  }
  return true;
}

std::string AdmissibleMatrix::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [ji, v] : entries_) entries[std::to_string(ji.first) + ";" + std::to_string(ji.second)] = v;
  nlohmann::ordered_json j;
  j["entries"] = entries;
  j["row_bound"] = row_bound_;
  return j.dump();
}

AdmissibleMatrix AdmissibleMatrix::from_json(int n, const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::map<std::pair<int, int>, Int> entries;
    for (const auto& [key, val] : j.at("entries").items()) {
      auto semi = key.find(';');
      if (semi == std::string::npos) throw Error("bad matrix key: " + key);
      entries[{std::stoi(key.substr(0, semi)), std::stoi(key.substr(semi + 1))}] = val.get<Int>();
    }
    return AdmissibleMatrix(n, j.at("row_bound").get<int>(), std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::vector<AdmissibleMatrix> enumerate_admissible(int n, int row_bound, std::size_t count_bound) {
  if (n < 3) throw InvalidCartan("affine type A needs n >= 3");
  if (row_bound < 1) throw Error("row bound must be >= 1");
  const int J = row_bound;
  const int width = n - 1;
  const int cells = (J - 1) * width;
  std::vector<Int> s(cells, 0);  // s[(j-1)*width + (i-1)] for j < J
  std::vector<AdmissibleMatrix> out;

  auto s_at = [&](int j, int i) -> Int {
    if (j >= J) return i == 1 ? 1 : 0;
    return s[(j - 1) * width + (i - 1)];
  };

  auto emit = [&] {
    std::map<std::pair<int, int>, Int> entries;
    for (int j = 1; j <= J; ++j)
      for (int i = 1; i <= width; ++i) {
        Int c = s_at(j, i) - (j > 1 ? s_at(j - 1, i) : 0);
        if (c != 0) entries[{j, i}] = c;
      }
    AdmissibleMatrix m(n, J, std::move(entries));
    if (!m.is_admissible()) return;
    if (out.size() >= count_bound)
      throw BudgetExceeded("more than " + std::to_string(count_bound) + " admissible matrices", FormSet{});
    out.push_back(std::move(m));
  };

  std::function<void(int, Int)> place = [&](int t, Int prefix) {
    if (t == cells) {
      if (prefix == J - 1) emit();
      return;
    }
    const int j = t / width + 1;
    for (Int v = 0; prefix + v <= j; ++v) {
      s[t] = v;
      place(t + 1, prefix + v);
    }
    s[t] = 0;
  };
  place(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinForm> affine_xi_family(int n, int i, int rows) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("closed form known for 1 <= i <= n-1");
  if (i == 1) return {LinForm::var(1, -1)};
  std::vector<LinForm> out;
  for (int j = 1; j <= rows; ++j) {
    LinForm f = LinForm::var(affine_position(n, j, i), -1);
    f.x.add(affine_position(n, j, i - 1), 1);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FormSet affine_a_system(int n, const AffineSystemOptions& opts) {
  auto mats = enumerate_admissible(n, opts.row_bound);
  FormSet fs;
  fs.truncated = true;
  fs.support_bound = opts.k_bound;
  for (const auto& m : mats)
    for (Int k = 1; k <= opts.k_bound; ++k) fs.insert(m.phi(k));

  fs.insert(LinForm::lambda_term(1) + LinForm::var(1, -1));
  for (int i = 2; i <= n - 1; ++i)
    for (const auto& f : affine_xi_family(n, i, opts.middle_rows)) fs.insert(LinForm::lambda_term(i) + f);
  if (opts.include_first_column_tail) {
    for (int j = 2; j <= opts.middle_rows; ++j) {
      LinForm f = LinForm::lambda_term(1) + LinForm::var(affine_position(n, j, 1), -1);
      f.x.add(*affine_variable(n, j, 0), 1);
      fs.insert(f);
    }
  }
  const auto c0 = AdmissibleMatrix::c0(n, opts.row_bound);
  for (const auto& m : mats)
    if (m.entries() != c0.entries()) fs.insert(LinForm::lambda_term(n) + m.phi(0));
  return fs;
}

}  // namespace polycrystal
