#include "polycrystal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polycrystal/detail/parallel.hpp"
#include "polycrystal/io.hpp"
#include "polycrystal/oracle.hpp"
#include "polycrystal/realization.hpp"
#include "polycrystal/special.hpp"

namespace polycrystal {

namespace {

struct CliConfig {
  std::string family;
  std::string iota;
  std::string lambda;
  std::string mu, nu, weight, point;
  int index = 0;
  Int depth = -1;
  Int support = -1;
  Int window = -1;
  int rows = 4;
  Int max_weight = 2;
  std::string format = "text";
  int threads = 1;
  bool generic = false;
  std::string command;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Fully resolved inputs shared by every command.
struct Setup {
  CliConfig cfg;
  FamilySpec family;
  bool custom = false;
  std::optional<IotaSequence> iota;
  Weight lambda;
  bool finite = false;
  bool standard_iota = true;
  Int window = 10;
  ClosureBounds bounds;

  const IotaSequence& s() const { return *iota; }
  int rank() const { return iota->rank(); }
};

CartanData load_cartan(const std::string& text, FamilySpec& family, bool& custom) {
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    std::ifstream in(text.substr(prefix.size()));
    if (!in) throw UsageError("cannot read " + text.substr(prefix.size()));
    std::stringstream buf;
    buf << in.rdbuf();
    custom = true;
    auto c = cartan_from_json(buf.str());
    family = c.family();
    return c;
  }
  family = FamilySpec::parse(text);
  return build_cartan(family);
}

Weight parse_weight(const std::string& text, int rank, const char* what) {
  Weight w = Weight::parse(text);
  if (w.rank() != rank)
    throw UsageError(std::string(what) + " needs " + std::to_string(rank) + " entries, got " + std::to_string(w.rank()));
  return w;
}

Setup resolve(const CliConfig& cfg) {
  Setup st;
  st.cfg = cfg;
  CartanData c = load_cartan(cfg.family, st.family, st.custom);
  st.iota = cfg.iota.empty() ? IotaSequence::standard(c) : IotaSequence::parse(c, cfg.iota);
  st.standard_iota = st.iota->period() == IotaSequence::standard(c).period();
  st.lambda = cfg.lambda.empty() ? Weight::zero(c.rank()) : parse_weight(cfg.lambda, c.rank(), "--lambda");
  try {
    oracle::RootSystem rs(c);
    st.finite = true;
  } catch (const NotFiniteType&) {
    st.finite = false;
  }
  const Int n = c.rank();
  if (cfg.window > 0)
    st.window = cfg.window;
  else
    st.window = st.family.kind == FamilyKind::TypeA && !st.custom ? n * (n - 1) + 1 : 10;
  st.bounds.support_bound = cfg.support > 0 ? cfg.support : st.window + std::max<Int>(14, n * n);
  st.bounds.threads = cfg.threads;
  return st;
}

bool uses_closed_form(const Setup& st) {
  return !st.cfg.generic && !st.custom && st.standard_iota;
}

FormSet generic_system(const Setup& st) {
  try {
    return xi_lambda_set(st.s(), st.window, st.bounds);
  } catch (const BudgetExceeded& e) {
    FormSet fs = e.partial();
    fs.truncated = true;
    return fs;
  }
}

// Inequality system for the configured family and sequence.
FormSet family_system(const Setup& st) {
  if (!uses_closed_form(st)) return generic_system(st);
  const Int bound = st.cfg.support > 0 ? st.cfg.support : 8;
  switch (st.family.kind) {
    case FamilyKind::Rank2:
      return rank2_system(st.family.c1, st.family.c2,
                          l_max(st.family.c1, st.family.c2) ? std::nullopt : std::optional<Int>(bound));
    case FamilyKind::TypeA:
      return an_system(st.family.n);
    case FamilyKind::AffineA: {
      AffineSystemOptions o;
      o.row_bound = st.cfg.rows;
      o.middle_rows = st.cfg.rows;
      o.k_bound = bound;
      return affine_a_system(st.family.n, o);
    }
    default:
      return generic_system(st);
  }
}

Int default_depth(const Setup& st) {
  if (st.cfg.depth >= 0) return st.cfg.depth;
  return st.finite ? 64 : 6;
}

EnumerateOptions enum_options(const Setup& st, Int depth, bool cross_validate) {
  EnumerateOptions o;
  o.depth_cap = depth;
  o.threads = st.cfg.threads;
  o.cross_validate = cross_validate;
  o.seed_window = st.window;
  o.bounds = st.bounds;
  return o;
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void warn(std::ostream& err, const std::string& msg) { err << "warning: " << msg << "\n"; }

void require_format(const Setup& st, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (st.cfg.format == f) return;
  throw UsageError("--format " + st.cfg.format + " is not supported by " + st.cfg.command);
}

// ---------------------------------------------------------------- commands

int cmd_inequalities(const Setup& st, std::ostream& out, std::ostream& err) {
  require_format(st, {"text", "json"});
  FormSet fs = family_system(st);
  if (st.cfg.format == "json") {
    out << formset_to_json(fs) << "\n";
  } else {
    for (const auto& f : fs.forms) out << f.inequality() << "\n";
    if (fs.zero_beyond) out << "x_k = 0 for k > " << *fs.zero_beyond << "\n";
    out << "truncated=" << (fs.truncated ? "true" : "false") << "\n";
  }
  if (fs.truncated) {
    warn(err, "the inequality system is truncated at position " + std::to_string(fs.support_bound) +
                  "; membership is only a necessary condition");
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_enumerate(const Setup& st, std::ostream& out, std::ostream& err) {
  require_format(st, {"text", "json", "dot"});
  FormSet fs = family_system(st);
  auto r = enumerate_blambda(st.s(), st.lambda, &fs, enum_options(st, default_depth(st), true));
  if (st.cfg.format == "json") {
    out << realization_to_json(r) << "\n";
  } else if (st.cfg.format == "dot") {
    out << crystal_dot(*r.ctx, r.elements);
  } else {
    out << r.size() << " elements, "
        << (r.complete ? std::string("complete") : "depth-capped at " + std::to_string(r.depth_used)) << "\n";
    for (const auto& x : r.elements) out << x.label() << "\n";
  }
  if (!r.complete) {
    warn(err, "enumeration stopped at depth " + std::to_string(r.depth_used) + "; raise --depth");
    return kExitInconclusive;
  }
  return kExitOk;
}

// Root coefficients m for the weight named by --weight (m directly) or --nu.
std::optional<std::vector<Int>> target_depth(const Setup& st, const Weight& top) {
  if (!st.cfg.weight.empty()) {
    Weight m = parse_weight(st.cfg.weight, st.rank(), "--weight");
    return m.coeffs;
  }
  if (st.cfg.nu.empty()) throw UsageError(st.cfg.command + " needs --nu or --weight");
  return root_depth(st.s().cartan(), top, parse_weight(st.cfg.nu, st.rank(), "--nu"));
}

void print_scalar(const Setup& st, std::ostream& out, const char* key, Int value) {
  if (st.cfg.format == "json")
    out << nlohmann::ordered_json{{key, value}}.dump() << "\n";
  else
    out << value << "\n";
}

int cmd_mult(const Setup& st, std::ostream& out, std::ostream&) {
  require_format(st, {"text", "json"});
  auto m = target_depth(st, st.lambda);
  Int value = 0;
  if (m && std::all_of(m->begin(), m->end(), [](Int v) { return v >= 0; })) {
    FormSet fs = family_system(st);
    Int total = std::accumulate(m->begin(), m->end(), Int{0});
    auto r = enumerate_blambda(st.s(), st.lambda, &fs, enum_options(st, total, false));
    value = static_cast<Int>(weight_multiplicity(r, *m));
  }
  print_scalar(st, out, "multiplicity", value);
  return kExitOk;
}

int cmd_lr(const Setup& st, std::ostream& out, std::ostream&) {
  require_format(st, {"text", "json"});
  if (st.cfg.mu.empty()) throw UsageError("lr needs --mu");
  Weight mu = parse_weight(st.cfg.mu, st.rank(), "--mu");
  std::vector<Int> top(st.rank());
  for (int i = 1; i <= st.rank(); ++i) top[i - 1] = checked_add(st.lambda[i], mu[i]);
  auto m = target_depth(st, Weight(top));
  Int value = 0;
  if (m && std::all_of(m->begin(), m->end(), [](Int v) { return v >= 0; })) {
    FormSet fs = family_system(st);
    Int total = std::accumulate(m->begin(), m->end(), Int{0});
    auto b_mu = enumerate_blambda(st.s(), mu, &fs, enum_options(st, total, false));
    value = static_cast<Int>(lr_coefficient(b_mu, st.lambda, *m));
  }
  print_scalar(st, out, "multiplicity", value);
  return kExitOk;
}

LatticePoint parse_point(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  auto v = Weight::parse(t).coeffs;
  LatticePoint x;
  for (std::size_t j = 0; j < v.size(); ++j) x.set(static_cast<Int>(v.size() - j), v[j]);
  return x;
}

int cmd_epsstar(const Setup& st, std::ostream& out, std::ostream& err) {
  require_format(st, {"text", "json"});
  if (st.cfg.point.empty()) throw UsageError("epsstar needs --point");
  if (st.cfg.index < 1 || st.cfg.index > st.rank()) throw UsageError("epsstar needs --index in 1.." + std::to_string(st.rank()));
  LatticePoint x = parse_point(st.cfg.point);
  if (!x.nonnegative()) throw UsageError("--point must be nonnegative");
  ClosureBounds b = st.bounds;
  b.support_bound = std::max(b.support_bound, x.size() + 2 * st.s().period_length());
  FormSet fs;
  try {
    fs = xi_i_set(st.s(), st.cfg.index, b);
  } catch (const BudgetExceeded& e) {
    fs = e.partial();
    fs.truncated = true;
  }
  Int value = epsilon_star(st.s(), x, st.cfg.index, fs);
  print_scalar(st, out, "epsilon_star", value);
  if (fs.truncated) {
    warn(err, "the generating set was truncated; the value is a lower bound");
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_check_positivity(const Setup& st, std::ostream& out, std::ostream& err) {
  require_format(st, {"text", "json"});
  auto r = check_strict_positivity(st.s(), st.window, st.bounds);
  if (st.cfg.format == "json") {
    out << positivity_to_json(r) << "\n";
  } else if (!r.pass) {
    const auto& v = r.violations.front();
    out << "strict positivity fails at position " << v.position << ": " << v.form.to_string() << "\n";
  } else {
    out << "strict positivity holds" << (r.conclusive ? "" : " within the generated window") << "\n";
  }
  if (!r.pass) return kExitVerifyFailed;
  if (!r.conclusive) {
    warn(err, "the generated sets were truncated; the verdict is inconclusive");
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_check_ample(const Setup& st, std::ostream& out, std::ostream& err) {
  require_format(st, {"text", "json"});
  auto r = check_ample(st.s(), st.lambda, st.window, st.bounds);
  if (st.cfg.format == "json") {
    out << ample_to_json(r) << "\n";
  } else if (!r.ample) {
    out << "not ample: " << r.witness->to_string() << " is negative at 0\n";
  } else {
    out << "ample" << (r.conclusive ? "" : " within the generated window") << "\n";
  }
  if (!r.ample) return kExitVerifyFailed;
  if (!r.conclusive) {
    warn(err, "the generated set was truncated; the verdict is inconclusive");
    return kExitInconclusive;
  }
  return kExitOk;
}

std::vector<Weight> dominant_weights(int rank, Int max_total) {
  std::vector<Weight> out;
  std::vector<Int> cur(rank, 0);
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == rank) {
      out.emplace_back(cur);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_verify(const Setup& st, std::ostream& out, std::ostream&) {
  require_format(st, {"text"});
  if (!st.finite) throw UsageError("verify needs Cartan data of finite type");
  oracle::RootSystem rs(st.s().cartan());
  FormSet fs = family_system(st);
  auto weights = dominant_weights(st.rank(), st.cfg.max_weight);

  struct PerWeight {
    RealizationResult r;
    std::string mismatch;
  };
  auto per = detail::parallel_map(weights, st.cfg.threads, [&](const Weight& lam) {
    PerWeight p;
    p.r = enumerate_blambda(st.s(), lam, &fs, enum_options(st, 1000000, true));
    const std::string tag = "lambda=(" + join(lam.coeffs) + ")";
    Int dim = oracle::weyl_dim(rs, lam);
    if (static_cast<Int>(p.r.size()) != dim) {
      p.mismatch = tag + ": " + std::to_string(p.r.size()) + " elements, Weyl dimension " + std::to_string(dim);
      return p;
    }
    auto ch = oracle::character(rs, lam);
    for (const auto& [m, mult] : ch) {
      auto got = p.r.by_weight.count(m) ? static_cast<Int>(p.r.by_weight.at(m)) : 0;
      if (got != mult) {
        p.mismatch = tag + ", m=(" + join(m) + "): multiplicity " + std::to_string(got) + ", Freudenthal " +
                     std::to_string(mult);
        return p;
      }
    }
    if (p.r.by_weight.size() != ch.size()) p.mismatch = tag + ": weights outside the character support";
    return p;
  });
  for (const auto& p : per)
    if (!p.mismatch.empty()) {
      out << "mismatch: " << p.mismatch << "\n";
      return kExitVerifyFailed;
    }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t b = 0; b < weights.size(); ++b) pairs.emplace_back(a, b);
  auto lr = detail::parallel_map(pairs, st.cfg.threads, [&](const std::pair<std::size_t, std::size_t>& ab) {
    const Weight& lam = weights[ab.first];
    const Weight& mu = weights[ab.second];
    auto got = lr_decomposition(per[ab.second].r, lam);
    auto want = oracle::tensor_decomposition(rs, lam, mu);
    std::set<Weight> nus;
    for (const auto& kv : got) nus.insert(kv.first);
    for (const auto& kv : want) nus.insert(kv.first);
    for (const auto& nu : nus) {
      Int g = got.count(nu) ? static_cast<Int>(got.at(nu)) : 0;
      Int w = want.count(nu) ? want.at(nu) : 0;
      if (g != w)
        return "lambda=(" + join(lam.coeffs) + "), mu=(" + join(mu.coeffs) + "), nu=(" + join(nu.coeffs) +
               "): lr " + std::to_string(g) + ", character product " + std::to_string(w);
    }
    return std::string();
  });
  for (const auto& msg : lr)
    if (!msg.empty()) {
      out << "mismatch: " << msg << "\n";
      return kExitVerifyFailed;
    }
  out << weights.size() << " highest weights, " << pairs.size() << " tensor products\n";
  out << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Polyhedral realizations of crystal bases", "polycrystal"};
  app.require_subcommand(1, 1);
  app.add_option("--family", cfg.family, "rank2:c1,c2 | an:n | affine-a:n | custom:file.json")->required();
  app.add_option("--iota", cfg.iota, "period in display order, e.g. 3,2,1");
  app.add_option("--lambda", cfg.lambda, "highest weight <h_i,lambda>, comma separated");
  app.add_option("--depth", cfg.depth, "enumeration depth cap");
  app.add_option("--support", cfg.support, "closure support bound / rank-2 and affine window");
  app.add_option("--window", cfg.window, "number of seed forms x_1..x_K for generic closures");
  app.add_option("--rows", cfg.rows, "row bound for affine admissible matrices");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--generic", cfg.generic, "use the generic closure instead of a closed form");
  app.add_option("--mu", cfg.mu, "second highest weight (lr)");
  app.add_option("--nu", cfg.nu, "target weight (mult, lr)");
  app.add_option("--weight", cfg.weight, "root coefficients m of lambda - sum m_i alpha_i (mult, lr)");
  app.add_option("--point", cfg.point, "lattice point (..., x_2, x_1) (epsstar)");
  app.add_option("--index", cfg.index, "color i (epsstar)");
  app.add_option("--max-weight", cfg.max_weight, "largest sum of lambda_i checked by verify");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"inequalities", "print the defining inequality system"},
      {"enumerate", "enumerate B(lambda) by breadth-first search"},
      {"mult", "weight multiplicity"},
      {"lr", "tensor product multiplicity of V(nu) in V(lambda) (x) V(mu)"},
      {"epsstar", "epsilon*_i of a lattice point"},
      {"check-positivity", "strict positivity of the generated forms"},
      {"check-ample", "ampleness of (iota, lambda)"},
      {"verify", "compare against Weyl, Freudenthal and character products"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> argv_store{"polycrystal"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Setup st = resolve(cfg);
    if (cfg.command == "inequalities") return cmd_inequalities(st, out, err);
    if (cfg.command == "enumerate") return cmd_enumerate(st, out, err);
    if (cfg.command == "mult") return cmd_mult(st, out, err);
    if (cfg.command == "lr") return cmd_lr(st, out, err);
    if (cfg.command == "epsstar") return cmd_epsstar(st, out, err);
    if (cfg.command == "check-positivity") return cmd_check_positivity(st, out, err);
    if (cfg.command == "check-ample") return cmd_check_ample(st, out, err);
    return cmd_verify(st, out, err);
  } catch (const CrossValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const StrictPositivityViolated& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const IncompleteEnumeration& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polycrystal
