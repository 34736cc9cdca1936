// nmgroup: command-line front end for the weighted group algebra library.
//
// Subcommands: group, idempotents, classify-subgroup, hom check|factor|enumerate,
// fourier, verify. Reports are JSON (--json) or human-readable text; all
// randomness is seeded and the seed is reported in the output header.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nmg/json_io.hpp"

using namespace nmg;

namespace {

struct RunConfig {
  double tolerance = kDefaultEps;
  std::uint64_t seed = kDefaultSeed;
  int cap_group = kDefaultGroupCap;
  int cap_closure = kDefaultClosureCap;
  bool json_mode = false;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(errc::parse_error, std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

json report_header(const RunConfig& cfg) {
  json j;
  j["tool"] = "nmgroup";
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  return j;
}

void emit(const RunConfig& cfg, const json& body, const std::string& text) {
  if (cfg.json_mode) {
    json out = report_header(cfg);
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# nmgroup seed=" << cfg.seed << " tolerance=" << cfg.tolerance << "\n"
              << text;
  }
}

// ---- subcommands -------------------------------------------------------------

int cmd_group(const RunConfig& cfg, const std::string& spec) {
  auto parsed = parse_group_expr(spec, cfg.cap_group);
  if (parsed.is_integer) {
    json body;
    body["group"] = "Z";
    body["infinite"] = true;
    emit(cfg, body, "group Z: the additive integers (structure queries unsupported)\n");
    return 0;
  }
  auto g = parsed.finite;
  auto subs = subgroups(g, cfg.cap_group);
  auto z = center(g);
  json body;
  body["group"] = g->name;
  body["order"] = g->order();
  body["abelian"] = g->is_abelian();
  body["exponent"] = g->exponent();
  body["center"] = subgroup_to_json(z);
  body["subgroup_count"] = subs.size();
  json slist = json::array();
  for (const auto& h : subs) slist.push_back(subgroup_to_json(h));
  body["subgroups"] = std::move(slist);
  body["character_count"] = characters(whole_group(g)).size();

  std::ostringstream os;
  os << "group " << g->name << ": order " << g->order()
     << (g->is_abelian() ? ", abelian" : ", nonabelian") << ", exponent " << g->exponent()
     << "\n";
  os << "center: {";
  for (size_t i = 0; i < z.members.size(); ++i)
    os << (i ? "," : "") << g->elem_names[z.members[i]];
  os << "}\n" << subs.size() << " subgroups:\n";
  for (const auto& h : subs) {
    os << "  {";
    for (size_t i = 0; i < h.members.size(); ++i)
      os << (i ? "," : "") << g->elem_names[h.members[i]];
    os << "}\n";
  }
  emit(cfg, body, os.str());
  return 0;
}

int cmd_idempotents(const RunConfig& cfg, const std::string& spec, bool with_oracle) {
  auto g = make_group(spec, cfg.cap_group);
  auto list = enumerate_norm_one_idempotents(g, cfg.cap_group, cfg.tolerance);
  json body;
  body["group"] = g->name;
  body["count"] = list.size();
  json items = json::array();
  for (const auto& it : list) items.push_back(idempotent_to_json(it));
  body["idempotents"] = std::move(items);

  std::ostringstream os;
  os << list.size() << " norm-one idempotents of C[" << g->name << "]:\n";
  for (const auto& it : list) {
    os << "  K={";
    for (size_t i = 0; i < it.K.members.size(); ++i)
      os << (i ? "," : "") << g->elem_names[it.K.members[i]];
    os << "} "
       << (it.rho.is_trivial() ? "trivial rho" : "rho order " + std::to_string(it.rho.order()))
       << ": " << format_element(it.element) << "\n";
  }
  if (with_oracle) {
    if (!g->is_abelian() || g->order() > kDefaultIdempotentEnumCap)
      throw Error(errc::unsupported, "--oracle needs an abelian group within the cap");
    auto oracle = enumerate_idempotents(g, kDefaultIdempotentEnumCap, cfg.tolerance);
    std::set<std::string> oracle_keys, ours;
    for (const auto& e : oracle)
      if (!e.is_zero() && norm1(e) <= 1 + cfg.tolerance) oracle_keys.insert(quantized_key(e));
    for (const auto& it : list) ours.insert(quantized_key(it.element));
    body["oracle_total"] = oracle.size();
    body["oracle_norm_one"] = oracle_keys.size();
    body["oracle_matches"] = (oracle_keys == ours);
    os << "oracle: " << oracle.size() << " idempotents, " << oracle_keys.size()
       << " of norm one; match=" << (oracle_keys == ours ? "yes" : "NO") << "\n";
    if (oracle_keys != ours) {
      emit(cfg, body, os.str());
      return 1;
    }
  }
  emit(cfg, body, os.str());
  return 0;
}

int cmd_classify_subgroup(const RunConfig& cfg, const std::string& path) {
  json j = load_json_file(path);
  const json& arr = j.is_array() ? j : j.at("elements");
  std::vector<AlgebraElement> gens;
  for (const auto& item : arr)
    gens.push_back(element_from_json(item, cfg.cap_group, cfg.tolerance));
  auto cls = classify_nm_subgroup(gens, cfg.cap_closure, cfg.tolerance);
  json body;
  body["classification"] = nm_classification_to_json(cls);
  std::ostringstream os;
  const auto& g = *gens[0].group;
  os << "NM subgroup of order " << cls.members.size() << " classified\n";
  os << "H = {";
  for (size_t i = 0; i < cls.H.members.size(); ++i)
    os << (i ? "," : "") << g.elem_names[cls.H.members[i]];
  os << "}, K = {";
  for (size_t i = 0; i < cls.K.members.size(); ++i)
    os << (i ? "," : "") << g.elem_names[cls.K.members[i]];
  os << "}, rho "
     << (cls.rho.is_trivial() ? "trivial" : "of order " + std::to_string(cls.rho.order()))
     << "\n";
  os << "iota = " << format_element(cls.iota) << "\n";
  os << cls.omega_generators.size() << " omega generators; " << cls.scalar_generators.size()
     << " scalar generators\n";
  emit(cfg, body, os.str());
  return 0;
}

int cmd_hom_check(const RunConfig& cfg, const std::string& path, const std::string& wf_path,
                  const std::string& wg_path) {
  json j = load_json_file(path);
  auto phi = hom_from_json(j, cfg.cap_group, cfg.tolerance);
  auto nm = is_nm_hom(phi, cfg.tolerance);
  bool positive = is_positive_hom(phi, cfg.tolerance);
  json body;
  body["domain"] = phi.domain->name;
  body["codomain"] = phi.codomain->name;
  body["valid"] = true;
  body["nm"] = nm_report_to_json(nm);
  body["positive"] = positive;
  json norms = json::array();
  for (const auto& img : phi.delta_images) norms.push_back(norm1(img));
  body["delta_image_norms"] = std::move(norms);

  std::ostringstream os;
  os << "hom C[" << phi.domain->name << "] -> C[" << phi.codomain->name << "]: valid\n";
  os << "NM: " << (nm.is_nm ? "yes" : "no");
  if (!nm.is_nm) os << " (witness pair " << nm.witness_a << "," << nm.witness_b << ")";
  os << "; positive: " << (positive ? "yes" : "no") << "\n";

  Weight wf = wf_path.empty() ? trivial_weight(phi.domain)
                              : weight_from_json(load_json_file(wf_path), cfg.cap_group);
  Weight wg = wg_path.empty() ? trivial_weight(phi.codomain)
                              : weight_from_json(load_json_file(wg_path), cfg.cap_group);
  if (phi.domain->order() == phi.codomain->order() && hom_inverse(phi, cfg.tolerance)) {
    auto iso = iso_theorem_checks(phi, wf, wg, cfg.tolerance);
    body["iso"] = iso_theorem_report_to_json(iso);
    os << "bijective; positive=" << iso.positive << " bipositive=" << iso.bipositive
       << " isometric_on_basis=" << iso.isometric_on_basis << " linked=" << iso.linked_verified
       << "\n";
  }
  emit(cfg, body, os.str());
  return 0;
}

int cmd_hom_check_standard(const RunConfig& cfg, const std::string& from, const std::string& to,
                           const std::string& gamma_spec, const std::string& theta_spec,
                           const std::string& wf_path, const std::string& wg_path) {
  auto pf = parse_group_expr(from, cfg.cap_group);
  auto pg = parse_group_expr(to, cfg.cap_group);
  if (pf.is_integer != pg.is_integer)
    throw Error(errc::unsupported, "standard pairs need both sides finite or both Z");
  json body;
  StandardIsoReport rep;
  if (pf.is_integer) {
    Weight wf = wf_path.empty() ? z_weight("exp:1")
                                : weight_from_json(load_json_file(wf_path), cfg.cap_group);
    Weight wg = wg_path.empty() ? z_weight("exp:1")
                                : weight_from_json(load_json_file(wg_path), cfg.cap_group);
    long long a = std::stoll(theta_spec);
    rep = standard_iso_check_z(z_scalar_hom(gamma_spec), a, wf, wg, cfg.tolerance);
  } else {
    Weight wf = wf_path.empty() ? trivial_weight(pf.finite)
                                : weight_from_json(load_json_file(wf_path), cfg.cap_group);
    Weight wg = wg_path.empty() ? trivial_weight(pg.finite)
                                : weight_from_json(load_json_file(wg_path), cfg.cap_group);
    // gamma: "m:e0,e1,..." exponent list; theta: comma-separated image list
    ScalarHom gamma;
    gamma.kind = ScalarHom::Kind::character;
    gamma.domain = pf.finite;
    auto colon = gamma_spec.find(':');
    if (colon == std::string::npos)
      throw Error(errc::parse_error, "finite gamma spec is m:e0,e1,...");
    gamma.modulus = std::stoi(gamma_spec.substr(0, colon));
    std::istringstream es(gamma_spec.substr(colon + 1));
    std::string tok;
    while (std::getline(es, tok, ','))
      gamma.exponents.push_back(std::stoi(tok) % gamma.modulus);
    if (gamma.exponents.size() != static_cast<size_t>(pf.finite->order()))
      throw Error(errc::parse_error, "gamma exponent count != |F|");
    GroupHom theta;
    theta.domain = pf.finite;
    theta.codomain = pg.finite;
    std::istringstream ts(theta_spec);
    while (std::getline(ts, tok, ','))
      theta.image.push_back(parse_element_literal(*pg.finite, tok));
    if (theta.image.size() != static_cast<size_t>(pf.finite->order()))
      throw Error(errc::parse_error, "theta image count != |F|");
    if (!is_group_hom(theta)) throw Error(errc::inconsistent_images, "theta is not a hom");
    rep = standard_iso_check(gamma, theta, wf, wg, cfg.tolerance);
  }
  body["standard"] = standard_iso_report_to_json(rep);
  std::ostringstream os;
  os << "standard pair: L=" << rep.L << " l=" << rep.l << " standard_hom=" << rep.is_standard_hom
     << " standard_iso=" << rep.is_standard_iso << " positive=" << rep.is_positive
     << " linked=" << rep.is_linked << "\n";
  emit(cfg, body, os.str());
  return 0;
}

int cmd_hom_factor(const RunConfig& cfg, const std::string& path, const std::string& form) {
  json j = load_json_file(path);
  auto phi = hom_from_json(j, cfg.cap_group, cfg.tolerance);
  Factorization fac;
  if (form == "main")
    fac = factorize_main(phi, cfg.cap_closure, cfg.tolerance);
  else if (form == "character")
    fac = factorize_extended_character(phi, cfg.cap_closure, cfg.tolerance);
  else if (form == "positive")
    fac = classify_positive(phi, cfg.cap_closure, cfg.tolerance);
  else
    throw Error(errc::parse_error, "form must be main|character|positive");
  json body;
  body["factorization"] = factorization_to_json(fac);
  std::ostringstream os;
  os << "factorized (" << form << "): " << fac.factors.size() << " basic factors, H order "
     << fac.H.members.size() << ", K order " << fac.K.members.size() << "\n";
  os << "recomposition verified on every delta\n";
  emit(cfg, body, os.str());
  return 0;
}

int cmd_hom_enumerate(const RunConfig& cfg, const std::string& from, const std::string& to,
                      bool positive_only, bool full) {
  auto f = make_group(from, cfg.cap_group);
  auto g = make_group(to, cfg.cap_group);
  auto list = positive_only ? enumerate_positive_homs(f, g, cfg.cap_group, cfg.tolerance)
                            : enumerate_nm_homs(f, g, cfg.cap_group, cfg.tolerance);
  json body;
  body["domain"] = f->name;
  body["codomain"] = g->name;
  body["class"] = positive_only ? "positive" : "nm";
  body["count"] = list.size();
  if (full) {
    json items = json::array();
    for (const auto& phi : list) items.push_back(hom_to_json(phi));
    body["homs"] = std::move(items);
  }
  std::ostringstream os;
  os << list.size() << (positive_only ? " positive" : " NM") << " homomorphisms C[" << f->name
     << "] -> C[" << g->name << "]\n";
  emit(cfg, body, os.str());
  return 0;
}

int cmd_fourier(const RunConfig& cfg, const std::string& spec, const std::string& elem_path,
                bool list_idempotents) {
  auto g = make_group(spec, cfg.cap_group);
  auto d = dual_group(g);
  json body;
  body["group"] = g->name;
  body["dual_order"] = d.order();
  std::ostringstream os;
  os << "dual of " << g->name << ": " << d.order() << " characters\n";
  if (!elem_path.empty()) {
    auto f = element_from_json(load_json_file(elem_path), cfg.cap_group, cfg.tolerance);
    if (!same_group(f.group, g)) throw Error(errc::group_mismatch, "element group != --group");
    auto s = fourier(d, f);
    json vals = json::array();
    for (auto v : s.values) {
      json t;
      t["re"] = v.real();
      t["im"] = v.imag();
      vals.push_back(std::move(t));
    }
    body["spectrum"] = std::move(vals);
    auto back = inverse_fourier(d, s, cfg.tolerance);
    body["round_trip_ok"] = approx_equal(back, f, cfg.tolerance);
    os << "spectrum:";
    for (auto v : s.values) os << " " << format_complex(v);
    os << "\n";
  }
  if (list_idempotents) {
    auto ids = enumerate_idempotents(g, kDefaultIdempotentEnumCap, cfg.tolerance);
    size_t norm_one = 0;
    for (const auto& e : ids)
      if (!e.is_zero() && norm1(e) <= 1 + cfg.tolerance) ++norm_one;
    body["idempotent_total"] = ids.size();
    body["idempotent_norm_one"] = norm_one;
    os << ids.size() << " idempotents from the dual subsets, " << norm_one << " of norm one\n";
  }
  emit(cfg, body, os.str());
  return 0;
}

int cmd_fourier_transport(const RunConfig& cfg, const std::string& from, const std::string& to,
                          const std::string& pairing_spec, const std::string& apply_path) {
  auto f = make_group(from, cfg.cap_group);
  auto g = make_group(to, cfg.cap_group);
  std::vector<int> pairing;
  if (pairing_spec.empty()) {
    pairing.resize(f->order());
    for (int i = 0; i < f->order(); ++i) pairing[i] = i;
  } else {
    std::istringstream ps(pairing_spec);
    std::string tok;
    while (std::getline(ps, tok, ',')) pairing.push_back(std::stoi(tok));
  }
  auto phi = transport_isomorphism(f, g, pairing, cfg.tolerance);
  auto nm = is_nm_hom(phi, cfg.tolerance);
  json body;
  body["transport"] = hom_to_json(phi);
  body["nm"] = nm_report_to_json(nm);
  body["bijective"] = hom_inverse(phi, cfg.tolerance).has_value();
  std::ostringstream os;
  os << "transport C[" << f->name << "] -> C[" << g->name << "]\n";
  for (int x = 0; x < f->order(); ++x)
    os << "  d[" << f->elem_names[x] << "] -> " << format_element(phi.delta_images[x])
       << "  (norm " << norm1(phi.delta_images[x]) << ")\n";
  os << "NM: " << (nm.is_nm ? "yes" : "no") << "\n";
  if (!apply_path.empty()) {
    auto x = element_from_json(load_json_file(apply_path), cfg.cap_group, cfg.tolerance);
    auto y = apply(phi, x, cfg.tolerance);
    body["applied"] = element_to_json(y);
    os << "applied: " << format_element(y) << "\n";
  }
  emit(cfg, body, os.str());
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  VerifyOptions opts;
  opts.eps = cfg.tolerance;
  opts.seed = cfg.seed;
  opts.group_cap = cfg.cap_group;
  opts.closure_cap = cfg.cap_closure;
  std::vector<CheckResult> results;
  if (suite == "acceptance")
    results = acceptance_criteria(opts);
  else
    results = run_suite(suite, opts);
  bool all = true;
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
    if (!r.pass) all = false;
  }
  os << (all ? "verify: PASS\n" : "verify: FAIL\n");
  json body;
  body["suite"] = suite;
  body["checks"] = check_results_to_json(results);
  body["pass"] = all;
  emit(cfg, body, os.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"norm-multiplicative structure in weighted group algebras"};
  app.require_subcommand(1);
  app.add_option("--tolerance", cfg.tolerance, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_flag("--json", cfg.json_mode, "emit JSON reports");
  app.add_option("--cap-group", cfg.cap_group, "group size cap");
  app.add_option("--cap-closure", cfg.cap_closure, "NM closure cap");

  std::string group_spec, file_path, wf_path, wg_path, from_spec, to_spec;
  std::string gamma_spec, theta_spec, form = "main", suite = "all", pairing, apply_path;
  bool with_oracle = false, positive_only = false, nm_only = false, full = false;
  bool idempotents_flag = false, standard_mode = false;

  auto* cgroup = app.add_subcommand("group", "construct and analyze a group");
  cgroup->add_option("--spec", group_spec, "group expression")->required();

  auto* cidem = app.add_subcommand("idempotents", "norm-one idempotents of C[G]");
  cidem->add_option("--group", group_spec, "group expression")->required();
  cidem->add_flag("--oracle", with_oracle, "cross-check against the Fourier enumeration");

  auto* ccls = app.add_subcommand("classify-subgroup", "classify an NM convolution subgroup");
  ccls->add_option("--file", file_path, "JSON array of generator elements")->required();

  auto* chom = app.add_subcommand("hom", "algebra homomorphism operations");
  chom->require_subcommand(1);
  auto* hcheck = chom->add_subcommand("check", "validate and classify a homomorphism");
  hcheck->add_option("--file", file_path, "homomorphism JSON");
  hcheck->add_flag("--standard", standard_mode, "check a standard (gamma, theta) pair");
  hcheck->add_option("--from", from_spec, "domain group (standard mode)");
  hcheck->add_option("--to", to_spec, "codomain group (standard mode)");
  hcheck->add_option("--gamma", gamma_spec, "gamma: exp:c | zexp:re,im | m:e0,e1,...");
  hcheck->add_option("--theta", theta_spec, "theta: integer a (Z) or image list");
  hcheck->add_option("--weight-from", wf_path, "domain weight JSON");
  hcheck->add_option("--weight-to", wg_path, "codomain weight JSON");
  auto* hfactor = chom->add_subcommand("factor", "factor through basic homomorphisms");
  hfactor->add_option("--file", file_path, "homomorphism JSON")->required();
  hfactor->add_option("--form", form, "main|character|positive");
  auto* henum = chom->add_subcommand("enumerate", "enumerate NM or positive homomorphisms");
  henum->add_option("--from", from_spec, "domain group")->required();
  henum->add_option("--to", to_spec, "codomain group")->required();
  henum->add_flag("--positive", positive_only, "positive homomorphisms");
  henum->add_flag("--nm", nm_only, "NM homomorphisms (default)");
  henum->add_flag("--full", full, "emit every homomorphism table");

  auto* cfour = app.add_subcommand("fourier", "Fourier oracle on abelian groups");
  cfour->add_option("--group", group_spec, "group expression");
  cfour->add_option("--file", file_path, "element JSON to transform");
  cfour->add_flag("--idempotents", idempotents_flag, "enumerate dual-subset idempotents");
  auto* ctrans = cfour->add_subcommand("transport", "Fourier transport isomorphism");
  ctrans->add_option("--from", from_spec, "domain group")->required();
  ctrans->add_option("--to", to_spec, "codomain group")->required();
  ctrans->add_option("--pairing", pairing, "dual pairing, comma list (default identity)");
  ctrans->add_option("--apply", apply_path, "element JSON to push through");

  auto* cver = app.add_subcommand("verify", "run a verification suite");
  cver->add_option("suite", suite, "suite name, 'all', or 'acceptance'");

  // let global flags appear after the subcommand as well
  for (auto* sub : {cgroup, cidem, ccls, chom, hcheck, hfactor, henum, cfour, ctrans, cver})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  (void)nm_only;

  try {
    if (*cgroup) return cmd_group(cfg, group_spec);
    if (*cidem) return cmd_idempotents(cfg, group_spec, with_oracle);
    if (*ccls) return cmd_classify_subgroup(cfg, file_path);
    if (*chom) {
      if (*hcheck) {
        if (standard_mode)
          return cmd_hom_check_standard(cfg, from_spec, to_spec, gamma_spec, theta_spec, wf_path,
                                        wg_path);
        if (file_path.empty())
          throw Error(errc::parse_error, "hom check needs --file or --standard");
        return cmd_hom_check(cfg, file_path, wf_path, wg_path);
      }
      if (*hfactor) return cmd_hom_factor(cfg, file_path, form);
      if (*henum) return cmd_hom_enumerate(cfg, from_spec, to_spec, positive_only, full);
    }
    if (*cfour) {
      if (*ctrans) return cmd_fourier_transport(cfg, from_spec, to_spec, pairing, apply_path);
      if (group_spec.empty()) throw Error(errc::parse_error, "fourier needs --group");
      return cmd_fourier(cfg, group_spec, file_path, idempotents_flag);
    }
    if (*cver) return cmd_verify(cfg, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code == errc::parse_error || e.code == errc::io_error) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
