#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycrystal/linform.hpp"

namespace polycrystal {

// ---------------------------------------------------------------- rank 2

// P_0 = 1, P_1 = X, P_k = X P_{k-1} - P_{k-2}
Int chebyshev_p(Int X, Int k);
// a_0 = 0, a_1 = 1, a_{2k} = c1 P_{k-1}(X), a_{2k+1} = P_k(X) + P_{k-1}(X) with X = c1 c2 - 2
Int cheb_a(Int c1, Int c2, Int l);
// min{l : a_{l+1} < 0}; nullopt (infinite) when c1 c2 >= 4
std::optional<Int> l_max(Int c1, Int c2);

struct ChebCoeffs {
  Int c1 = 0, c2 = 0;
  Int X = -2;
  std::optional<Int> lmax;

  ChebCoeffs(Int c1_, Int c2_);
  Int a(Int l) const { return cheb_a(c1, c2, l); }
  Int a_prime(Int l) const { return cheb_a(c2, c1, l); }
};

// eta_l = a'_{l+1} x_l - a'_l x_{l+1}
LinForm eta_form(Int c1, Int c2, Int l);

// Closed-form system for rank-2 data with the sequence (..., 2, 1, 2, 1):
//   lambda_1 >= x_1,  a_l x_l - a_{l-1} x_{l+1} >= 0,  lambda_2 + eta_l >= 0   (1 <= l < L)
// plus x_k >= 0 for k <= L and x_k = 0 beyond l_max. L is l_max when finite, otherwise
// l_window (required then; the result is marked truncated).
FormSet rank2_system(Int c1, Int c2, std::optional<Int> l_window = std::nullopt);

// ---------------------------------------------------------------- type A_n

// (j;i) -> (j-1) n + i
Int an_position(int n, int j, int i);

// Chains x_{1;i} >= x_{2;i-1} >= ... >= x_{i;1} >= 0, x_{j;i} = 0 for i + j > n + 1, and
// lambda_i >= x_{j;i-j+1} - x_{j;i-j} (with x_{j;0} = 0), over the sequence (..., n, ..., 1).
FormSet an_system(int n);
// {-x_{j;i-j+1} + x_{j;i-j} : 1 <= j <= i}
std::vector<LinForm> an_xi_family(int n, int i);
// max_{1 <= j <= i} (x_{j;i-j+1} - x_{j;i-j})
Int an_epsilon_star(int n, const std::vector<Int>& x, int i);

// ---------------------------------------------------------------- affine A_{n-1}^(1)

// j;i[k] = k - 1 + (j-1)(n-1) + i, for j >= 1 and 1 <= i <= n-1.
Int affine_position(int n, int j, int i, Int k = 1);
// Resolves x_{j;n} = x_{j+1;1} and x_{j;0} = x_{j-1;n-1}; nullopt when the variable is 0 (j <= 0).
std::optional<Int> affine_variable(int n, int j, int i, Int k = 1);

class AdmissibleMatrix {
 public:
  AdmissibleMatrix(int n, int row_bound, std::map<std::pair<int, int>, Int> entries);
  static AdmissibleMatrix c0(int n, int row_bound);

  int n() const { return n_; }
  int row_bound() const { return row_bound_; }
  // nonzero entries c_{j;i}
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  Int c(int j, int i) const;
  // s_{j;i} = c_{1;i} + ... + c_{j;i}
  Int s(int j, int i) const;

  // phi_{C[k]} = sum c_{j;i} x_{j;i[k]}; k = 0 requires c_{1;1} = 0.
  LinForm phi(Int k) const;

  // Admissibility conditions checked up to row row_bound + 1.
  bool is_admissible(std::string* why = nullptr) const;

  std::string to_json() const;
  static AdmissibleMatrix from_json(int n, const std::string& text);

  auto operator<=>(const AdmissibleMatrix& o) const { return entries_ <=> o.entries_; }
  bool operator==(const AdmissibleMatrix& o) const { return entries_ == o.entries_; }

 private:
  int n_;
  int row_bound_;
  std::map<std::pair<int, int>, Int> entries_;
};

// Every admissible matrix whose partial sums equal delta_{i,1} from row J on.
// Throws BudgetExceeded past count_bound matrices.
std::vector<AdmissibleMatrix> enumerate_admissible(int n, int row_bound, std::size_t count_bound = 1000000);

// Xi^(1) = {-x_{1;1}}, Xi^(i) = {-x_{j;i} + x_{j;i-1} : j <= rows} for 1 < i < n
std::vector<LinForm> affine_xi_family(int n, int i, int rows);

struct AffineSystemOptions {
  int row_bound = 4;   // admissible matrices stabilize by this row
  Int k_bound = 8;     // phi_{C[k]} for 1 <= k <= k_bound
  int middle_rows = 4; // lambda_i >= x_{j;i} - x_{j;i-1} for j <= middle_rows
  // Also emit lambda_1 >= x_{j;1} - x_{j-1;n-1} for j >= 2 (the i = 1 rows beyond the first).
  bool include_first_column_tail = false;
};

// Truncated system for the sequence (..., n, ..., 2, 1) of A_{n-1}^(1): phi_{C[k]} >= 0,
// the lambda_i families for i < n, and lambda_n + phi_{C[0]} >= 0 for C != C_0.
FormSet affine_a_system(int n, const AffineSystemOptions& opts);

}  // namespace polycrystal
