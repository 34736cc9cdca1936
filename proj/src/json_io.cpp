#include "nmg/json_io.hpp"

#include <cmath>
#include <sstream>

namespace nmg {

namespace {

json literal_json(const FiniteGroup& g, int idx) {
  if (g.product_literals) return g.elem_names[idx];
  return idx;
}

int literal_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0 || v >= g.order()) throw Error(errc::parse_error, "element index out of range");
    return static_cast<int>(v);
  }
  if (j.is_string()) return parse_element_literal(g, j.get<std::string>());
  throw Error(errc::parse_error, "element literal must be an index or a tuple string");
}

json terms_to_json(const AlgebraElement& f) {
  json arr = json::array();
  for (const auto& [k, v] : f.terms) {
    json t;
    t["elem"] = literal_json(*f.group, k);
    t["re"] = v.real();
    t["im"] = v.imag();
    arr.push_back(std::move(t));
  }
  return arr;
}

std::map<int, cplx> terms_from_json(const FiniteGroup& g, const json& arr) {
  if (!arr.is_array()) throw Error(errc::parse_error, "terms must be an array");
  std::map<int, cplx> t;
  for (const auto& item : arr) {
    int idx = literal_from_json(g, item.at("elem"));
    double re = item.value("re", 0.0);
    double im = item.value("im", 0.0);
    t[idx] += cplx{re, im};
  }
  return t;
}

}  // namespace

json element_to_json(const AlgebraElement& f) {
  json j;
  j["group"] = f.group->name;
  j["terms"] = terms_to_json(f);
  return j;
}

AlgebraElement element_from_json(const json& j, int group_cap, double eps) {
  auto g = make_group(j.at("group").get<std::string>(), group_cap);
  return from_terms(g, terms_from_json(*g, j.at("terms")), eps);
}

json weight_to_json(const Weight& w) {
  json j;
  if (w.is_z()) {
    j["group"] = "Z";
    std::ostringstream os;
    os << (w.kind == Weight::Kind::z_exp ? "exp:" : "absexp:") << w.base;
    j["formula"] = os.str();
    return j;
  }
  j["group"] = w.group->name;
  json vals = json::object();
  for (int i = 0; i < w.group->order(); ++i) vals[w.group->elem_names[i]] = w.values[i];
  j["values"] = std::move(vals);
  return j;
}

Weight weight_from_json(const json& j, int group_cap) {
  std::string spec = j.at("group").get<std::string>();
  if (spec == "Z") return z_weight(j.at("formula").get<std::string>());
  auto g = make_group(spec, group_cap);
  const json& vals = j.at("values");
  std::vector<double> values(g->order(), 0.0);
  if (!vals.is_object()) throw Error(errc::parse_error, "weight values must be an object");
  std::vector<char> seen(g->order(), 0);
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    int idx = parse_element_literal(*g, it.key());
    values[idx] = it.value().get<double>();
    seen[idx] = 1;
  }
  for (char s : seen)
    if (!s) throw Error(errc::parse_error, "weight values missing an element");
  return finite_weight(g, std::move(values));
}

json hom_to_json(const AlgebraHomomorphism& phi) {
  json j;
  j["domain"] = phi.domain->name;
  j["codomain"] = phi.codomain->name;
  json images = json::object();
  for (int x = 0; x < phi.domain->order(); ++x)
    images[phi.domain->elem_names[x]] = terms_to_json(phi.delta_images[x]);
  j["images"] = std::move(images);
  return j;
}

AlgebraHomomorphism hom_from_json(const json& j, int group_cap, double eps) {
  auto f = make_group(j.at("domain").get<std::string>(), group_cap);
  auto g = make_group(j.at("codomain").get<std::string>(), group_cap);
  const json& images = j.at("images");
  if (!images.is_object()) throw Error(errc::parse_error, "images must be an object");
  std::map<int, AlgebraElement> gen_images;
  for (auto it = images.begin(); it != images.end(); ++it) {
    int x = parse_element_literal(*f, it.key());
    gen_images.emplace(x, from_terms(g, terms_from_json(*g, it.value()), eps));
  }
  return hom_from_images(f, g, gen_images, eps);
}

json subgroup_to_json(const Subgroup& k) {
  json arr = json::array();
  for (int m : k.members) arr.push_back(literal_json(*k.parent, m));
  return arr;
}

json character_to_json(const Character& c) {
  json j;
  j["modulus"] = c.modulus;
  json exps = json::object();
  for (size_t i = 0; i < c.subgroup.members.size(); ++i)
    exps[c.subgroup.parent->elem_names[c.subgroup.members[i]]] = c.exponents[i];
  j["exponents"] = std::move(exps);
  j["order"] = c.order();
  j["trivial"] = c.is_trivial();
  return j;
}

json idempotent_to_json(const NormOneIdempotent& it) {
  json j;
  j["K"] = subgroup_to_json(it.K);
  j["rho"] = character_to_json(it.rho);
  j["element"] = element_to_json(it.element);
  return j;
}

json nm_classification_to_json(const NMClassification& cls) {
  json j;
  j["H"] = subgroup_to_json(cls.H);
  j["K"] = subgroup_to_json(cls.K);
  j["rho"] = character_to_json(cls.rho);
  j["iota"] = element_to_json(cls.iota);
  json omegas = json::array();
  for (const auto& om : cls.omega_members) {
    json o;
    o["scalar_re"] = om.scalar.real();
    o["scalar_im"] = om.scalar.imag();
    o["t"] = literal_json(*cls.H.parent, om.elem);
    omegas.push_back(std::move(o));
  }
  j["omega_members"] = std::move(omegas);
  j["omega_generators"] = cls.omega_generators;
  j["scalar_generators"] = cls.scalar_generators;
  j["order"] = cls.members.size();
  return j;
}

json factorization_to_json(const Factorization& fac) {
  json j;
  switch (fac.form) {
    case FactorForm::main: j["form"] = "main"; break;
    case FactorForm::extended_character: j["form"] = "extended-character"; break;
    case FactorForm::positive: j["form"] = "positive"; break;
    case FactorForm::standard: j["form"] = "standard"; break;
  }
  if (!fac.H.members.empty()) j["H"] = subgroup_to_json(fac.H);
  if (!fac.K.members.empty()) j["K"] = subgroup_to_json(fac.K);
  if (!fac.K.members.empty()) j["rho"] = character_to_json(fac.rho);
  if (fac.form == FactorForm::main) {
    j["torus_order"] = fac.torus_order;
    j["middle_group"] = fac.middle->name;
  }
  if (fac.rho_H) j["rho_H"] = character_to_json(*fac.rho_H);
  if (fac.gamma && fac.gamma->kind == ScalarHom::Kind::character) {
    json g;
    g["modulus"] = fac.gamma->modulus;
    g["exponents"] = fac.gamma->exponents;
    j["gamma"] = std::move(g);
  }
  if (!fac.theta.image.empty()) {
    json t;
    t["codomain"] = fac.theta.codomain ? fac.theta.codomain->name : "";
    t["image"] = fac.theta.image;
    j["theta"] = std::move(t);
  }
  if (fac.bound) j["L"] = *fac.bound;
  json factors = json::array();
  for (const auto& h : fac.factors) {
    json f;
    f["domain"] = h.domain->name;
    f["codomain"] = h.codomain->name;
    json images = json::array();
    for (const auto& img : h.delta_images) images.push_back(terms_to_json(img));
    f["images"] = std::move(images);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  return j;
}

json nm_report_to_json(const NmHomReport& rep) {
  json j;
  j["is_nm"] = rep.is_nm;
  if (!rep.is_nm) {
    j["witness"] = {rep.witness_a, rep.witness_b};
    j["detail"] = rep.detail;
  }
  return j;
}

json standard_iso_report_to_json(const StandardIsoReport& rep) {
  json j;
  if (std::isinf(rep.L)) j["L"] = "infinity";
  else j["L"] = rep.L;
  j["l"] = rep.l;
  j["is_standard_hom"] = rep.is_standard_hom;
  j["is_standard_iso"] = rep.is_standard_iso;
  j["is_positive"] = rep.is_positive;
  j["is_linked"] = rep.is_linked;
  return j;
}

json iso_theorem_report_to_json(const IsoTheoremReport& rep) {
  json j;
  j["bijective"] = rep.bijective;
  j["positive"] = rep.positive;
  j["bipositive"] = rep.bipositive;
  j["isometric_on_basis"] = rep.isometric_on_basis;
  j["nm_forward"] = rep.nm_forward;
  j["nm_inverse"] = rep.nm_inverse;
  j["linked_verified"] = rep.linked_verified;
  if (rep.standard_form) j["standard_form"] = factorization_to_json(*rep.standard_form);
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string format_complex(cplx v) {
  std::ostringstream os;
  os.precision(6);
  os << v.real();
  if (v.imag() >= 0) os << "+";
  os << v.imag() << "i";
  return os.str();
}

std::string format_element(const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : f.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << format_complex(v) << ")d[" << f.group->elem_names[k] << "]";
  }
  return os.str();
}

}  // namespace nmg

