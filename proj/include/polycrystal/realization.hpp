#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polycrystal/crystal.hpp"
#include "polycrystal/linform.hpp"

namespace polycrystal {

struct MemberResult {
  bool member = false;
  // set when the form set was truncated, so a positive answer is only a necessary condition
  bool necessary_only = false;
  std::optional<LinForm> violated;
};

// x is nonnegative, vanishes beyond fs.zero_beyond (when set) and satisfies phi(x) >= 0
// for every phi in fs, with the symbolic lambda part evaluated at `lam`.
MemberResult member(const LatticePoint& x, const FormSet& fs, const Weight& lam);

struct EnumerateOptions {
  Int depth_cap = 64;
  int threads = 1;
  // assert every reached element satisfies the supplied form set
  bool cross_validate = true;
  // used for the ampleness check when no form set is supplied
  Int seed_window = 8;
  ClosureBounds bounds{};
};

struct RealizationResult {
  ContextPtr ctx;
  std::vector<LatticePoint> elements;  // sorted by depth, then lexicographically
  // true when no element of depth depth_used + 1 exists
  bool complete = false;
  Int depth_used = 0;
  // per-color coordinate sums m = (m_1, ..., m_n) -> number of elements
  std::map<std::vector<Int>, std::size_t> by_weight;
  AmpleReport ample;
  bool cross_validated = false;

  std::size_t size() const { return elements.size(); }
};

// Breadth-first closure of the zero vector under every f_i, by depth sum x_k, up to
// depth_cap. Throws NotAmple when (iota, lambda) is conclusively not ample and
// CrossValidationError when a reached element violates `fs`.
RealizationResult enumerate_blambda(const IotaSequence& s, const Weight& lam, const FormSet* fs,
                                    const EnumerateOptions& opts);

// Elements of the realized B(infinity) (closure of 0 under every f_i on Z^infty_iota)
// with depth <= depth, sorted by depth.
std::vector<LatticePoint> enumerate_binfinity(const IotaSequence& s, Int depth, int threads = 1);

// Number of enumerated elements whose per-color sums equal m. Throws
// IncompleteEnumeration when the depth cap could have censored the count.
std::size_t weight_multiplicity(const RealizationResult& r, const std::vector<Int>& m);

// Root coefficients m with lambda - nu = sum_i m_i alpha_i; nullopt when nu is not
// of that form with m_i >= 0. Throws Error when the Cartan matrix is singular.
std::optional<std::vector<Int>> root_depth(const CartanData& c, const Weight& lambda, const Weight& nu);

// Number of x in the realized B(mu) with per-color sums m and eps_i(x) <= <h_i, lambda>
// for every i: the multiplicity of V(lambda + mu - sum m_i alpha_i) in V(lambda) (x) V(mu).
std::size_t lr_coefficient(const RealizationResult& b_mu, const Weight& lambda, const std::vector<Int>& m);
std::size_t lr_coefficient(const IotaSequence& s, const Weight& lambda, const Weight& mu, const std::vector<Int>& m,
                           const EnumerateOptions& opts);
// Every nu with nonzero lr multiplicity: nu = lambda + mu - sum m_i alpha_i over the
// surviving elements of the complete enumeration b_mu.
std::map<Weight, std::size_t> lr_decomposition(const RealizationResult& b_mu, const Weight& lambda);
// Solves for m (nonsingular Cartan data only); 0 when nu is not below lambda + mu.
std::size_t lr_coefficient(const IotaSequence& s, const Weight& lambda, const Weight& mu, const Weight& nu,
                           const EnumerateOptions& opts);

// max{-phi(x) : phi in xi_set}; xi_set is the closure of xi^(i). Throws
// StrictPositivityViolated when a form other than xi^(i) has a negative coefficient
// at a first-occurrence position.
Int epsilon_star(const IotaSequence& s, const LatticePoint& x, int i, const FormSet& xi_set);
Int epsilon_star(const IotaSequence& s, const LatticePoint& x, int i, const ClosureBounds& bounds);

}  // namespace polycrystal
