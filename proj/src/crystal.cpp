#include "polycrystal/crystal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace polycrystal {

Int ExtInt::value() const {
  if (inf_) throw Error("value of -infinity requested");
  return value_;
}

// ---------------------------------------------------------------- context

LatticeContext::LatticeContext(IotaSequence s, Weight lam, CrystalMode m)
    : iota(std::move(s)), lambda(std::move(lam)), mode(m) {
  if (mode == CrystalMode::BInfinity) lambda = Weight::zero(iota.rank());
  if (lambda.rank() != iota.rank())
    throw Error("weight has rank " + std::to_string(lambda.rank()) + ", expected " + std::to_string(iota.rank()));
  if (mode == CrystalMode::HighestWeight && !lambda.dominant()) throw Error("highest weight must be dominant");
}

ContextPtr LatticeContext::make(IotaSequence s, Weight lam, CrystalMode m) {
  return std::make_shared<const LatticeContext>(std::move(s), std::move(lam), m);
}

ContextPtr LatticeContext::binfinity(IotaSequence s) {
  int r = s.rank();
  return make(std::move(s), Weight::zero(r), CrystalMode::BInfinity);
}

// ---------------------------------------------------------------- points

LatticePoint::LatticePoint(std::vector<Int> entries) : entries_(std::move(entries)) { trim(); }

void LatticePoint::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

void LatticePoint::set(Int k, Int v) {
  if (k < 1) throw IndexOutOfRange("lattice positions start at 1");
  if (k > size()) {
    if (v == 0) return;
    entries_.resize(k, 0);
  }
  entries_[k - 1] = v;
  trim();
}

Int LatticePoint::depth() const {
  Int d = 0;
  for (Int v : entries_) d = checked_add(d, v);
  return d;
}

bool LatticePoint::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Int v) { return v >= 0; });
}

std::string LatticePoint::label() const {
  if (entries_.empty()) return "(0)";
  std::string out = "(";
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it != entries_.rbegin()) out += ",";
    out += std::to_string(*it);
  }
  return out + ")";
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Int v : p.entries()) h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------- sigma

namespace {

// sigma_k for k = 1..window, via suffix sums per color.
std::vector<Int> all_sigmas(const LatticeContext& ctx, const LatticePoint& x, Int window) {
  const auto& s = ctx.iota;
  const auto& c = ctx.cartan();
  const int r = ctx.rank();
  std::vector<Int> suffix(r, 0);
  std::vector<Int> out(window, 0);
  for (Int k = window; k >= 1; --k) {
    const int ik = s.at(k);
    const Int xk = x.get(k);
    out[k - 1] = checked_add(xk, suffix[ik - 1]);
    if (xk != 0)
      for (int col = 1; col <= r; ++col) suffix[col - 1] = checked_fma(suffix[col - 1], c.a(col, ik), xk);
  }
  return out;
}

Int scan_window(const LatticeContext& ctx, const LatticePoint& x) { return x.size() + ctx.iota.period_length(); }

struct SigmaScan {
  Int value = 0;
  Int min_pos = 0;
  Int max_pos = 0;
};

SigmaScan scan(const LatticeContext& ctx, const LatticePoint& x, int i) {
  ctx.cartan().check_index(i);
  const Int w = scan_window(ctx, x);
  auto sig = all_sigmas(ctx, x, w);
  SigmaScan out;
  bool found = false;
  for (Int k = 1; k <= w; ++k) {
    if (ctx.iota.at(k) != i) continue;
    Int v = sig[k - 1];
    if (!found || v > out.value) {
      out = {v, k, k};
      found = true;
    } else if (v == out.value) {
      out.max_pos = k;
    }
  }
  return out;
}

}  // namespace

Int sigma_k(const LatticeContext& ctx, const LatticePoint& x, Int k) {
  if (k < 1) throw IndexOutOfRange("lattice positions start at 1");
  if (k > x.size()) return 0;
  return all_sigmas(ctx, x, x.size())[k - 1];
}

Int sigma0_i(const LatticeContext& ctx, const LatticePoint& x, int i) {
  if (ctx.mode == CrystalMode::BInfinity) throw ModeError("sigma_0 is -infinity on Z^infty");
  ctx.cartan().check_index(i);
  Int v = -ctx.lambda[i];
  for (Int k = 1; k <= x.size(); ++k) v = checked_fma(v, ctx.cartan().a(i, ctx.iota.at(k)), x.get(k));
  return v;
}

Int sigma_i(const LatticeContext& ctx, const LatticePoint& x, int i) { return scan(ctx, x, i).value; }

std::vector<Int> m_set(const LatticeContext& ctx, const LatticePoint& x, int i) {
  ctx.cartan().check_index(i);
  const Int w = scan_window(ctx, x);
  auto sig = all_sigmas(ctx, x, w);
  const Int best = sigma_i(ctx, x, i);
  std::vector<Int> out;
  for (Int k = 1; k <= w; ++k)
    if (ctx.iota.at(k) == i && sig[k - 1] == best) out.push_back(k);
  return out;
}

std::optional<LatticePoint> lattice_f(const LatticeContext& ctx, const LatticePoint& x, int i) {
  auto sc = scan(ctx, x, i);
  if (ctx.mode == CrystalMode::HighestWeight && sc.value <= sigma0_i(ctx, x, i)) return std::nullopt;
  LatticePoint y = x;
  y.add(sc.min_pos, 1);
  return y;
}

std::optional<LatticePoint> lattice_e(const LatticeContext& ctx, const LatticePoint& x, int i) {
  auto sc = scan(ctx, x, i);
  if (sc.value <= 0) return std::nullopt;
  if (ctx.mode == CrystalMode::HighestWeight && sc.value < sigma0_i(ctx, x, i)) return std::nullopt;
  LatticePoint y = x;
  y.add(sc.max_pos, -1);
  return y;
}

std::vector<Int> color_sums(const LatticeContext& ctx, const LatticePoint& x) {
  std::vector<Int> m(ctx.rank(), 0);
  for (Int k = 1; k <= x.size(); ++k) {
    Int& slot = m[ctx.iota.at(k) - 1];
    slot = checked_add(slot, x.get(k));
  }
  return m;
}

WeightExpr lattice_weight(const LatticeContext& ctx, const LatticePoint& x) {
  return {ctx.lambda.coeffs, color_sums(ctx, x)};
}

Int lattice_epsilon(const LatticeContext& ctx, const LatticePoint& x, int i) {
  Int s = sigma_i(ctx, x, i);
  return ctx.mode == CrystalMode::BInfinity ? s : std::max(s, sigma0_i(ctx, x, i));
}

Int lattice_phi(const LatticeContext& ctx, const LatticePoint& x, int i) {
  return checked_add(lattice_weight(ctx, x).pairing(ctx.cartan(), i), lattice_epsilon(ctx, x, i));
}

// ---------------------------------------------------------------- elements

CrystalElem elementary(CartanPtr c, int i, Int x) {
  c->check_index(i);
  return Elementary{std::move(c), i, x};
}

CrystalElem r_lambda(CartanPtr c, Weight lambda) {
  if (lambda.rank() != c->rank()) throw Error("weight rank does not match the Cartan data");
  return RLambda{std::move(c), std::move(lambda)};
}

CrystalElem lattice(ContextPtr ctx, LatticePoint x) { return Lattice{std::move(ctx), std::move(x)}; }

CrystalElem tensor(const CrystalElem& b1, const CrystalElem& b2) {
  if (b1.is_zero() || b2.is_zero()) return CrystalElem::zero();
  CrystalElem out;
  out.v_ = std::make_shared<const TensorNode>(TensorNode{b1, b2});
  return out;
}

const CartanData& CrystalElem::cartan() const {
  if (auto e = get_if<Elementary>()) return *e->cartan;
  if (auto r = get_if<RLambda>()) return *r->cartan;
  if (auto l = get_if<Lattice>()) return l->ctx->cartan();
  if (is_tensor()) return tensor().left.cartan();
  throw ZeroElement("the zero element has no Cartan data");
}

std::string CrystalElem::to_string() const {
  if (is_zero()) return "0";
  if (auto e = get_if<Elementary>()) return "(" + std::to_string(e->x) + ")_" + std::to_string(e->i);
  if (auto r = get_if<RLambda>()) {
    std::string s = "r[";
    for (std::size_t k = 0; k < r->lambda.coeffs.size(); ++k)
      s += (k ? "," : "") + std::to_string(r->lambda.coeffs[k]);
    return s + "]";
  }
  if (auto l = get_if<Lattice>()) return l->point.label();
  return "(" + tensor().left.to_string() + " ⊗ " + tensor().right.to_string() + ")";
}

bool CrystalElem::operator==(const CrystalElem& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_zero()) return true;
  if (auto e = get_if<Elementary>()) return e->i == o.get_if<Elementary>()->i && e->x == o.get_if<Elementary>()->x;
  if (auto r = get_if<RLambda>()) return r->lambda == o.get_if<RLambda>()->lambda;
  if (auto l = get_if<Lattice>()) return l->point == o.get_if<Lattice>()->point;
  return tensor().left == o.tensor().left && tensor().right == o.tensor().right;
}

WeightExpr weight(const CrystalElem& b) {
  if (b.is_zero()) throw ZeroElement("weight of the zero element");
  if (auto e = b.get_if<Elementary>()) return WeightExpr::simple_root(e->cartan->rank(), e->i, e->x);
  if (auto r = b.get_if<RLambda>()) return WeightExpr::of(r->lambda);
  if (auto l = b.get_if<Lattice>()) return lattice_weight(*l->ctx, l->point);
  return weight(b.tensor().left) + weight(b.tensor().right);
}

ExtInt epsilon_i(const CrystalElem& b, int i) {
  if (b.is_zero()) throw ZeroElement("epsilon of the zero element");
  b.cartan().check_index(i);
  if (auto e = b.get_if<Elementary>()) return e->i == i ? ExtInt(-e->x) : ExtInt::neg_inf();
  if (auto r = b.get_if<RLambda>()) return ExtInt(-r->lambda[i]);
  if (auto l = b.get_if<Lattice>()) return ExtInt(lattice_epsilon(*l->ctx, l->point, i));
  const auto& t = b.tensor();
  Int h = weight(t.left).pairing(b.cartan(), i);
  return max(epsilon_i(t.left, i), epsilon_i(t.right, i) - h);
}

ExtInt phi_i(const CrystalElem& b, int i) {
  if (b.is_zero()) throw ZeroElement("phi of the zero element");
  b.cartan().check_index(i);
  if (auto e = b.get_if<Elementary>()) return e->i == i ? ExtInt(e->x) : ExtInt::neg_inf();
  if (b.get_if<RLambda>()) return ExtInt(0);
  if (auto l = b.get_if<Lattice>()) return ExtInt(lattice_phi(*l->ctx, l->point, i));
  const auto& t = b.tensor();
  Int h = weight(t.right).pairing(b.cartan(), i);
  return max(phi_i(t.right, i), phi_i(t.left, i) + h);
}

CrystalElem f_tilde(const CrystalElem& b, int i) {
  if (b.is_zero()) return b;
  b.cartan().check_index(i);
  if (auto e = b.get_if<Elementary>()) return e->i == i ? elementary(e->cartan, i, e->x - 1) : CrystalElem::zero();
  if (b.get_if<RLambda>()) return CrystalElem::zero();
  if (auto l = b.get_if<Lattice>()) {
    auto y = lattice_f(*l->ctx, l->point, i);
    return y ? lattice(l->ctx, std::move(*y)) : CrystalElem::zero();
  }
  const auto& t = b.tensor();
  if (phi_i(t.left, i) > epsilon_i(t.right, i)) return tensor(f_tilde(t.left, i), t.right);
  return tensor(t.left, f_tilde(t.right, i));
}

CrystalElem e_tilde(const CrystalElem& b, int i) {
  if (b.is_zero()) return b;
  b.cartan().check_index(i);
  if (auto e = b.get_if<Elementary>()) return e->i == i ? elementary(e->cartan, i, e->x + 1) : CrystalElem::zero();
  if (b.get_if<RLambda>()) return CrystalElem::zero();
  if (auto l = b.get_if<Lattice>()) {
    auto y = lattice_e(*l->ctx, l->point, i);
    return y ? lattice(l->ctx, std::move(*y)) : CrystalElem::zero();
  }
  const auto& t = b.tensor();
  if (phi_i(t.left, i) >= epsilon_i(t.right, i)) return tensor(e_tilde(t.left, i), t.right);
  return tensor(t.left, e_tilde(t.right, i));
}

// ---------------------------------------------------------------- DOT

std::string crystal_dot(const LatticeContext& ctx, const std::vector<LatticePoint>& points) {
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index;
  for (std::size_t n = 0; n < points.size(); ++n) index.emplace(points[n], n);

  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t n = 0; n < points.size(); ++n) out << "  n" << n << " [label=\"" << points[n].label() << "\"];\n";
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (int i = 1; i <= ctx.rank(); ++i) {
      auto y = lattice_f(ctx, points[n], i);
      if (!y) continue;
      auto it = index.find(*y);
      if (it != index.end()) out << "  n" << n << " -> n" << it->second << " [label=\"" << i << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace polycrystal
