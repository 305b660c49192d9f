#include "polycrystal/cartan.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace polycrystal {

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error("bad integer: " + item);
    out.push_back(v);
  }
  return out;
}

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Exact rational with a positive denominator.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational make(Int n, Int d) {
    if (d < 0) {
      n = checked_sub(0, n);
      d = checked_sub(0, d);
    }
    Int g = std::gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  Rational operator-(const Rational& o) const {
    return make(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den));
  }
  Rational operator*(const Rational& o) const {
    return make(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  Rational operator/(const Rational& o) const {
    return make(checked_mul(num, o.den), checked_mul(den, o.num));
  }
  bool zero() const { return num == 0; }
};

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("family needs a ':' parameter: " + text);
  std::string head = text.substr(0, colon);
  auto params = parse_int_list(text.substr(colon + 1));
  if (head == "rank2") {
    if (params.size() != 2) throw Error("rank2 expects c1,c2");
    return rank2(params[0], params[1]);
  }
  if (head == "an" || head == "affine-a") {
    if (params.size() != 1) throw Error(head + " expects a single n");
    int n = static_cast<int>(params[0]);
    return head == "an" ? type_a(n) : affine_a(n);
  }
  throw Error("unknown family: " + head);
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::Rank2:
      return "rank2:" + std::to_string(c1) + "," + std::to_string(c2);
    case FamilyKind::TypeA:
      return "an:" + std::to_string(n);
    case FamilyKind::AffineA:
      return "affine-a:" + std::to_string(n);
    case FamilyKind::Custom:
      return "custom:" + std::to_string(n);
  }
  return "?";
}

CartanData::CartanData(FamilySpec family, std::vector<std::vector<Int>> matrix, std::vector<Int> symmetrizer)
    : rank_(static_cast<int>(matrix.size())), family_(family), symmetrizer_(std::move(symmetrizer)) {
  if (rank_ < 1) throw InvalidCartan("Cartan matrix must have rank >= 1");
  if (static_cast<int>(symmetrizer_.size()) != rank_)
    throw InvalidCartan("symmetrizer length " + std::to_string(symmetrizer_.size()) + " != rank " +
                        std::to_string(rank_));
  matrix_.reserve(rank_ * rank_);
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank_)
      throw InvalidCartan("row " + std::to_string(i + 1) + " has wrong length");
    for (Int v : matrix[i]) matrix_.push_back(v);
  }
  family_.n = rank_;
  for (int i = 1; i <= rank_; ++i) {
    if (symmetrizer_[i - 1] <= 0)
      throw InvalidCartan("symmetrizer entry d_" + std::to_string(i) + " must be positive");
    for (int j = 1; j <= rank_; ++j) {
      Int aij = a(i, j), aji = a(j, i);
      if (i == j && aij != 2) throw InvalidCartan("diagonal entry " + cell(i, j) + " must be 2");
      if (i != j && aij > 0) throw InvalidCartan("off-diagonal entry " + cell(i, j) + " must be <= 0");
      if (i != j && (aij == 0) != (aji == 0)) {
        auto [zi, zj] = aij == 0 ? std::pair{i, j} : std::pair{j, i};
        throw InvalidCartan("entry " + cell(zi, zj) + " is zero but " + cell(zj, zi) + " is not");
      }
      if (checked_mul(symmetrizer_[i - 1], aij) != checked_mul(symmetrizer_[j - 1], aji))
        throw InvalidCartan("symmetrizer fails at " + cell(i, j));
    }
  }
}

Int CartanData::pairing(int i, int j) const {
  check_index(i);
  check_index(j);
  return a(i, j);
}

void CartanData::check_index(int i) const {
  if (!contains(i))
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
}

Int CartanData::symmetrizer(int i) const {
  check_index(i);
  return symmetrizer_[i - 1];
}

std::vector<std::vector<Int>> CartanData::matrix() const {
  std::vector<std::vector<Int>> m(rank_, std::vector<Int>(rank_));
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) m[i - 1][j - 1] = a(i, j);
  return m;
}

namespace {

// Row-reduces [A | rhs]; returns the solution when A is nonsingular.
std::optional<std::vector<Rational>> gauss(const CartanData& c, const std::vector<Int>& rhs) {
  const int n = c.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational::make(c.a(i + 1, j + 1), 1);
    m[i][n] = Rational::make(rhs.empty() ? 0 : rhs[i], 1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

}  // namespace

bool CartanData::is_singular() const { return !gauss(*this, {}).has_value(); }

std::optional<std::vector<Int>> CartanData::solve_root_coefficients(const std::vector<Int>& rhs) const {
  if (static_cast<int>(rhs.size()) != rank_) throw IndexOutOfRange("rhs length must equal rank");
  auto sol = gauss(*this, rhs);
  if (!sol) return std::nullopt;
  std::vector<Int> out;
  for (const auto& q : *sol) {
    if (q.den != 1) return std::nullopt;
    out.push_back(q.num);
  }
  return out;
}

CartanData build_cartan(const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::Rank2: {
      const Int c1 = family.c1, c2 = family.c2;
      bool both_zero = c1 == 0 && c2 == 0;
      bool both_positive = c1 > 0 && c2 > 0;
      if (!both_zero && !both_positive)
        throw InvalidCartan("rank2 requires c1 = c2 = 0 or both positive, got " + std::to_string(c1) + "," +
                            std::to_string(c2));
      std::vector<Int> d{1, 1};
      if (both_positive) {
        Int g = std::gcd(c1, c2);
        d = {c2 / g, c1 / g};
      }
      return CartanData(family, {{2, -c1}, {-c2, 2}}, d);
    }
    case FamilyKind::TypeA: {
      if (family.n < 1) throw InvalidCartan("type A needs n >= 1");
      const int n = family.n;
      std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      return CartanData(family, m, std::vector<Int>(n, 1));
    }
    case FamilyKind::AffineA: {
      if (family.n < 3) throw InvalidCartan("affine type A needs n >= 3");
      const int n = family.n;
      std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int d = std::abs(i - j);
          m[i][j] = i == j ? 2 : ((d == 1 || d == n - 1) ? -1 : 0);
        }
      return CartanData(family, m, std::vector<Int>(n, 1));
    }
    case FamilyKind::Custom:
      throw InvalidCartan("custom Cartan data needs an explicit matrix; use custom_cartan");
  }
  throw InvalidCartan("unknown family");
}

CartanData custom_cartan(std::vector<std::vector<Int>> matrix, std::vector<Int> symmetrizer) {
  FamilySpec f{FamilyKind::Custom, 0, 0, static_cast<int>(matrix.size())};
  return CartanData(f, std::move(matrix), std::move(symmetrizer));
}

CartanData cartan_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidCartan(std::string("malformed Cartan JSON: ") + e.what());
  }
  if (!j.contains("matrix") || !j.contains("symmetrizer"))
    throw InvalidCartan("Cartan JSON needs 'matrix' and 'symmetrizer'");
  auto m = j.at("matrix").get<std::vector<std::vector<Int>>>();
  auto d = j.at("symmetrizer").get<std::vector<Int>>();
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != m.size())
    throw InvalidCartan("'rank' does not match the matrix size");
  return custom_cartan(std::move(m), std::move(d));
}

std::string cartan_to_json(const CartanData& c) {
  nlohmann::json j;
  j["rank"] = c.rank();
  j["matrix"] = c.matrix();
  j["symmetrizer"] = c.symmetrizers();
  return j.dump();
}

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  w.coeffs.at(i - 1) = 1;
  return w;
}

Weight Weight::parse(const std::string& text) { return Weight(parse_int_list(text)); }

bool Weight::dominant() const {
  for (Int v : coeffs)
    if (v < 0) return false;
  return true;
}

WeightExpr WeightExpr::of(const Weight& w) { return {w.coeffs, std::vector<Int>(w.coeffs.size(), 0)}; }

WeightExpr WeightExpr::simple_root(int rank, int i, Int times) {
  WeightExpr e = zero(rank);
  e.deficit.at(i - 1) = checked_sub(0, times);
  return e;
}

Int WeightExpr::pairing(const CartanData& c, int i) const {
  Int v = fundamental.at(i - 1);
  for (int j = 1; j <= c.rank(); ++j) v = checked_sub(v, checked_mul(c.a(i, j), deficit.at(j - 1)));
  return v;
}

std::vector<Int> WeightExpr::pairings(const CartanData& c) const {
  std::vector<Int> out(c.rank());
  for (int i = 1; i <= c.rank(); ++i) out[i - 1] = pairing(c, i);
  return out;
}

WeightExpr WeightExpr::operator+(const WeightExpr& o) const {
  WeightExpr r = *this;
  for (std::size_t i = 0; i < r.fundamental.size(); ++i) {
    r.fundamental[i] = checked_add(r.fundamental[i], o.fundamental.at(i));
    r.deficit[i] = checked_add(r.deficit[i], o.deficit.at(i));
  }
  return r;
}

bool pairings_equal(const CartanData& c, const WeightExpr& a, const WeightExpr& b) {
  return a.pairings(c) == b.pairings(c);
}

}  // namespace polycrystal
