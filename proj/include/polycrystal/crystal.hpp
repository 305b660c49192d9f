#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polycrystal/iota.hpp"

namespace polycrystal {

// An integer extended by -infinity.
class ExtInt {
 public:
  ExtInt(Int v = 0) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtInt neg_inf() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }

  bool is_neg_inf() const { return inf_; }
  Int value() const;  // throws on -infinity

  ExtInt operator+(Int d) const { return inf_ ? *this : ExtInt(checked_add(value_, d)); }
  ExtInt operator-(Int d) const { return inf_ ? *this : ExtInt(checked_sub(value_, d)); }

  std::strong_ordering operator<=>(const ExtInt& o) const {
    if (inf_ || o.inf_) return static_cast<int>(!inf_) <=> static_cast<int>(!o.inf_);
    return value_ <=> o.value_;
  }
  bool operator==(const ExtInt& o) const { return (*this <=> o) == 0; }

  std::string to_string() const { return inf_ ? "-inf" : std::to_string(value_); }

 private:
  Int value_ = 0;
  bool inf_ = false;
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

enum class CrystalMode { HighestWeight, BInfinity };

// The data shared by all points of Z^infty_iota[lambda] (or of Z^infty_iota in
// BInfinity mode, where lambda is ignored and treated as 0).
struct LatticeContext {
  IotaSequence iota;
  Weight lambda;
  CrystalMode mode = CrystalMode::HighestWeight;

  // Throws Error when lambda has the wrong rank or, in HighestWeight mode, is not dominant.
  LatticeContext(IotaSequence s, Weight lam, CrystalMode m = CrystalMode::HighestWeight);
  static std::shared_ptr<const LatticeContext> make(IotaSequence s, Weight lam,
                                                    CrystalMode m = CrystalMode::HighestWeight);
  static std::shared_ptr<const LatticeContext> binfinity(IotaSequence s);

  const CartanData& cartan() const { return iota.cartan(); }
  int rank() const { return iota.rank(); }
};
using ContextPtr = std::shared_ptr<const LatticeContext>;

// (..., x_2, x_1): entries[0] = x_1, trailing zeros trimmed.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> entries);

  Int get(Int k) const { return k >= 1 && k <= size() ? entries_[k - 1] : 0; }
  void set(Int k, Int v);
  void add(Int k, Int d) { set(k, checked_add(get(k), d)); }

  // max k with x_k != 0 (0 for the zero vector)
  Int size() const { return static_cast<Int>(entries_.size()); }
  Int depth() const;  // sum of the entries
  bool is_zero() const { return entries_.empty(); }
  bool nonnegative() const;
  const std::vector<Int>& entries() const { return entries_; }

  // "(x_K,...,x_1)" with the highest position first; "(0)" for the zero vector.
  std::string label() const;

  auto operator<=>(const LatticePoint&) const = default;
  bool operator==(const LatticePoint&) const = default;

 private:
  void trim();
  std::vector<Int> entries_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

// sigma_k(x) = x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j
Int sigma_k(const LatticeContext& ctx, const LatticePoint& x, Int k);
// sigma_0^(i)(x) = -<h_i, lambda> + sum_j <h_i, alpha_{i_j}> x_j; ModeError in BInfinity mode.
Int sigma0_i(const LatticeContext& ctx, const LatticePoint& x, int i);
// sigma^(i)(x) = max_{i_k = i} sigma_k(x), always >= 0.
Int sigma_i(const LatticeContext& ctx, const LatticePoint& x, int i);
// Positions of M^(i) inside the scan window 1..size(x)+period. When sigma^(i) = 0
// the set is infinite and only the members inside the window are listed.
std::vector<Int> m_set(const LatticeContext& ctx, const LatticePoint& x, int i);

std::optional<LatticePoint> lattice_f(const LatticeContext& ctx, const LatticePoint& x, int i);
std::optional<LatticePoint> lattice_e(const LatticeContext& ctx, const LatticePoint& x, int i);
// lambda - sum_k x_k alpha_{i_k}
WeightExpr lattice_weight(const LatticeContext& ctx, const LatticePoint& x);
Int lattice_epsilon(const LatticeContext& ctx, const LatticePoint& x, int i);
Int lattice_phi(const LatticeContext& ctx, const LatticePoint& x, int i);
// sum of x_k over positions k with i_k = i, for every i
std::vector<Int> color_sums(const LatticeContext& ctx, const LatticePoint& x);

using CartanPtr = std::shared_ptr<const CartanData>;

// (x)_i in the elementary crystal B_i.
struct Elementary {
  CartanPtr cartan;
  int i = 1;
  Int x = 0;
};

// r_lambda, the single element of R_lambda.
struct RLambda {
  CartanPtr cartan;
  Weight lambda;
};

struct Lattice {
  ContextPtr ctx;
  LatticePoint point;
};

struct TensorNode;

// An element of a crystal built from B_i, R_lambda and lattice crystals by tensor
// products, or the ideal element 0. Values are immutable and cheap to copy.
class CrystalElem {
 public:
  struct Zero {
    bool operator==(const Zero&) const = default;
  };
  using Tensor = std::shared_ptr<const TensorNode>;

  CrystalElem() : v_(Zero{}) {}
  CrystalElem(Elementary e) : v_(std::move(e)) {}  // NOLINT
  CrystalElem(RLambda r) : v_(std::move(r)) {}      // NOLINT
  CrystalElem(Lattice l) : v_(std::move(l)) {}      // NOLINT

  static CrystalElem zero() { return {}; }
  bool is_zero() const { return std::holds_alternative<Zero>(v_); }
  bool is_tensor() const { return std::holds_alternative<Tensor>(v_); }
  const TensorNode& tensor() const { return *std::get<Tensor>(v_); }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  const CartanData& cartan() const;  // throws ZeroElement
  std::string to_string() const;

  bool operator==(const CrystalElem& o) const;

 private:
  friend CrystalElem tensor(const CrystalElem&, const CrystalElem&);
  std::variant<Zero, Elementary, RLambda, Lattice, Tensor> v_;
};

struct TensorNode {
  CrystalElem left;
  CrystalElem right;
};

CrystalElem elementary(CartanPtr c, int i, Int x);
CrystalElem r_lambda(CartanPtr c, Weight lambda);
CrystalElem lattice(ContextPtr ctx, LatticePoint x);

// b1 (x) b2; absorbs Zero on either side.
CrystalElem tensor(const CrystalElem& b1, const CrystalElem& b2);

CrystalElem f_tilde(const CrystalElem& b, int i);
CrystalElem e_tilde(const CrystalElem& b, int i);
WeightExpr weight(const CrystalElem& b);  // ZeroElement on Zero
ExtInt epsilon_i(const CrystalElem& b, int i);
ExtInt phi_i(const CrystalElem& b, int i);

// Crystal graph of `points` with an edge x -> f_i(x) labelled i whenever both ends
// belong to the set.
std::string crystal_dot(const LatticeContext& ctx, const std::vector<LatticePoint>& points);

}  // namespace polycrystal
