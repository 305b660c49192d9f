#include "polycrystal/io.hpp"

#include "json.hpp"

namespace polycrystal {

using ojson = nlohmann::ordered_json;

namespace {

ojson sparse_to_json(const SparseVec& v) {
  ojson o = ojson::object();
  for (const auto& [k, c] : v.terms()) o[std::to_string(k)] = c;
  return o;
}

SparseVec sparse_from_json(const ojson& o) {
  SparseVec v;
  for (const auto& [k, c] : o.items()) v.add(std::stoll(k), c.get<Int>());
  return v;
}

ojson form_to_json(const LinForm& f) {
  return ojson{{"const", f.constant}, {"coeffs", sparse_to_json(f.x)}, {"lambda", sparse_to_json(f.lambda)}};
}

LinForm form_from_json(const ojson& o) {
  LinForm f;
  f.constant = o.value("const", Int{0});
  if (o.contains("coeffs")) f.x = sparse_from_json(o.at("coeffs"));
  if (o.contains("lambda")) f.lambda = sparse_from_json(o.at("lambda"));
  return f;
}

std::string key_of(const std::vector<Int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

template <class F>
auto guarded(const char* what, F fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

std::string formset_to_json(const FormSet& fs) {
  ojson j;
  j["truncated"] = fs.truncated;
  j["support_bound"] = fs.support_bound;
  j["zero_beyond"] = fs.zero_beyond ? ojson(*fs.zero_beyond) : ojson(nullptr);
  ojson forms = ojson::array();
  for (const auto& f : fs.forms) forms.push_back(form_to_json(f));
  j["forms"] = forms;
  return j.dump(2);
}

FormSet formset_from_json(const std::string& text) {
  return guarded("form set", [&] {
    auto j = ojson::parse(text);
    FormSet fs;
    fs.truncated = j.value("truncated", false);
    fs.support_bound = j.value("support_bound", Int{0});
    if (j.contains("zero_beyond") && !j.at("zero_beyond").is_null()) fs.zero_beyond = j.at("zero_beyond").get<Int>();
    for (const auto& f : j.at("forms")) fs.forms.push_back(form_from_json(f));
    fs.normalize();
    return fs;
  });
}

std::string realization_to_json(const RealizationResult& r) {
  const LatticeContext& ctx = *r.ctx;
  ojson j;
  j["cartan"] = ojson::parse(cartan_to_json(ctx.cartan()));
  j["iota"] = ctx.iota.display();
  j["lambda"] = ctx.lambda.coeffs;
  j["complete"] = r.complete;
  j["depth_used"] = r.depth_used;
  j["count"] = r.elements.size();
  ojson elems = ojson::array();
  for (const auto& x : r.elements) {
    ojson e = ojson::object();
    for (Int k = 1; k <= x.size(); ++k)
      if (x.get(k) != 0) e[std::to_string(k)] = x.get(k);
    elems.push_back(e);
  }
  j["elements"] = elems;
  ojson bw = ojson::object();
  for (const auto& [m, c] : r.by_weight) bw[key_of(m)] = c;
  j["by_weight"] = bw;
  return j.dump(2);
}

RealizationResult realization_from_json(const std::string& text) {
  return guarded("realization", [&] {
    auto j = ojson::parse(text);
    auto cartan = cartan_from_json(j.at("cartan").dump());
    auto iota = IotaSequence::parse(cartan, j.at("iota").get<std::string>());
    RealizationResult r;
    r.ctx = LatticeContext::make(iota, Weight(j.at("lambda").get<std::vector<Int>>()));
    r.complete = j.at("complete").get<bool>();
    r.depth_used = j.at("depth_used").get<Int>();
    for (const auto& e : j.at("elements")) {
      LatticePoint x;
      for (const auto& [k, v] : e.items()) x.set(std::stoll(k), v.get<Int>());
      r.elements.push_back(std::move(x));
    }
    for (const auto& x : r.elements) ++r.by_weight[color_sums(*r.ctx, x)];
    return r;
  });
}

std::string positivity_to_json(const PositivityReport& r) {
  ojson j;
  j["pass"] = r.pass;
  j["conclusive"] = r.conclusive;
  ojson v = ojson::array();
  for (const auto& x : r.violations) v.push_back(ojson{{"form", form_to_json(x.form)}, {"position", x.position}});
  j["violations"] = v;
  return j.dump(2);
}

PositivityReport positivity_from_json(const std::string& text) {
  return guarded("positivity report", [&] {
    auto j = ojson::parse(text);
    PositivityReport r;
    r.pass = j.at("pass").get<bool>();
    r.conclusive = j.at("conclusive").get<bool>();
    for (const auto& v : j.at("violations"))
      r.violations.push_back({form_from_json(v.at("form")), v.at("position").get<Int>()});
    return r;
  });
}

std::string ample_to_json(const AmpleReport& r) {
  ojson j;
  j["ample"] = r.ample;
  j["conclusive"] = r.conclusive;
  j["witness"] = r.witness ? form_to_json(*r.witness) : ojson(nullptr);
  return j.dump(2);
}

AmpleReport ample_from_json(const std::string& text) {
  return guarded("ample report", [&] {
    auto j = ojson::parse(text);
    AmpleReport r;
    r.ample = j.at("ample").get<bool>();
    r.conclusive = j.at("conclusive").get<bool>();
    if (!j.at("witness").is_null()) r.witness = form_from_json(j.at("witness"));
    return r;
  });
}

}  // namespace polycrystal
