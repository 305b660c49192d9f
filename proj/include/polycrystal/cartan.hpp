#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycrystal/checked.hpp"

namespace polycrystal {

enum class FamilyKind { Rank2, TypeA, AffineA, Custom };

// Parameters selecting one of the supported families of Cartan data.
struct FamilySpec {
  FamilyKind kind = FamilyKind::TypeA;
  Int c1 = 0;  // Rank2 only: <h_1, alpha_2> = -c1
  Int c2 = 0;  // Rank2 only: <h_2, alpha_1> = -c2
  int n = 1;   // TypeA / AffineA: number of simple roots

  static FamilySpec rank2(Int c1, Int c2) { return {FamilyKind::Rank2, c1, c2, 2}; }
  static FamilySpec type_a(int n) { return {FamilyKind::TypeA, 0, 0, n}; }
  static FamilySpec affine_a(int n) { return {FamilyKind::AffineA, 0, 0, n}; }

  // "rank2:c1,c2", "an:n", "affine-a:n"
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

// Generalized Cartan matrix a[i][j] = <h_i, alpha_j> on the index set I = {1..rank}.
// Indices in the public API are 1-based throughout.
class CartanData {
 public:
  // Checks every invariant; throws InvalidCartan naming the offending cell.
  CartanData(FamilySpec family, std::vector<std::vector<Int>> matrix, std::vector<Int> symmetrizer);

  int rank() const { return rank_; }
  const FamilySpec& family() const { return family_; }
  FamilyKind kind() const { return family_.kind; }

  // <h_i, alpha_j>; throws IndexOutOfRange.
  Int pairing(int i, int j) const;
  // Unchecked variant for inner loops (1-based).
  Int a(int i, int j) const { return matrix_[(i - 1) * rank_ + (j - 1)]; }

  Int symmetrizer(int i) const;
  const std::vector<Int>& symmetrizers() const { return symmetrizer_; }
  std::vector<std::vector<Int>> matrix() const;

  bool contains(int i) const { return i >= 1 && i <= rank_; }
  void check_index(int i) const;

  // Solves sum_j a[i][j] * m_j = rhs_i over the rationals. Returns nullopt when the
  // matrix is singular or the solution is not integral.
  std::optional<std::vector<Int>> solve_root_coefficients(const std::vector<Int>& rhs) const;
  bool is_singular() const;

  bool operator==(const CartanData& other) const {
    return rank_ == other.rank_ && matrix_ == other.matrix_;
  }

 private:
  int rank_;
  FamilySpec family_;
  std::vector<Int> matrix_;
  std::vector<Int> symmetrizer_;
};

CartanData build_cartan(const FamilySpec& family);

// Custom matrix with a caller-supplied symmetrizer (verified, never searched).
CartanData custom_cartan(std::vector<std::vector<Int>> matrix, std::vector<Int> symmetrizer);

// {"rank": n, "matrix": [[...]], "symmetrizer": [...]}
CartanData cartan_from_json(const std::string& json_text);
std::string cartan_to_json(const CartanData& c);

inline Int pairing(const CartanData& c, int i, int j) { return c.pairing(i, j); }

// lambda = sum_i coeffs[i-1] * Lambda_i; <h_i, lambda> is coeffs[i-1].
struct Weight {
  std::vector<Int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<Int> c) : coeffs(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<Int>(rank, 0)); }
  static Weight fundamental(int rank, int i);
  // "1,0,2"
  static Weight parse(const std::string& text);

  int rank() const { return static_cast<int>(coeffs.size()); }
  Int operator[](int i) const { return coeffs.at(i - 1); }
  bool dominant() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

// A weight written as  sum_i fundamental_i Lambda_i - sum_j deficit_j alpha_j.
// Nothing is projected to a concrete realization of the dual Cartan subalgebra,
// so equality here is structural; use pairings_equal for comparisons that must be
// insensitive to the representation.
struct WeightExpr {
  std::vector<Int> fundamental;
  std::vector<Int> deficit;

  static WeightExpr zero(int rank) { return {std::vector<Int>(rank, 0), std::vector<Int>(rank, 0)}; }
  static WeightExpr of(const Weight& w);
  static WeightExpr simple_root(int rank, int i, Int times);

  Int pairing(const CartanData& c, int i) const;
  std::vector<Int> pairings(const CartanData& c) const;

  WeightExpr operator+(const WeightExpr& o) const;
  bool operator==(const WeightExpr&) const = default;
};

bool pairings_equal(const CartanData& c, const WeightExpr& a, const WeightExpr& b);

}  // namespace polycrystal
