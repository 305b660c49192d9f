#pragma once

#include <map>
#include <vector>

#include "polycrystal/cartan.hpp"

// Classical finite-type computations used as ground truth. Nothing here depends on
// the lattice realization.
namespace polycrystal::oracle {

// Positive roots in the simple-root basis, built by closing the simple roots under
// the simple reflections. Throws NotFiniteType when the closure exceeds max_roots.
class RootSystem {
 public:
  explicit RootSystem(const CartanData& c, std::size_t max_roots = 2000);

  const CartanData& cartan() const { return cartan_; }
  const std::vector<std::vector<Int>>& positive_roots() const { return roots_; }

  // (x, y) for x, y in the root lattice (simple-root coordinates)
  Int root_inner(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // (lambda, y) for lambda in fundamental coordinates and y in the root lattice
  Int weight_root_inner(const std::vector<Int>& lambda, const std::vector<Int>& y) const;

 private:
  CartanData cartan_;
  std::vector<std::vector<Int>> roots_;
};

// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Weights of V(lambda) as deficits m (weight lambda - sum m_i alpha_i) with multiplicities.
std::map<std::vector<Int>, Int> character(const RootSystem& rs, const Weight& lambda);

// Multiplicity of lambda - sum m_i alpha_i in V(lambda), via Freudenthal's recursion.
Int freudenthal(const RootSystem& rs, const Weight& lambda, const std::vector<Int>& m);

// Multiplicity of V(nu) in V(lambda) (x) V(mu), by multiplying characters and
// repeatedly removing the character of a highest remaining weight.
Int char_product_lr(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);
// Every nonzero c^nu_{lambda,mu}, keyed by nu.
std::map<Weight, Int> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu);

}  // namespace polycrystal::oracle
