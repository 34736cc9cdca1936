#include "nmg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "nmg/fourier.hpp"
#include "nmg/hom.hpp"
#include "nmg/nm.hpp"

namespace nmg {

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> groups = {
      "C2", "C3", "C4",    "C5", "C6", "C2xC2", "C2xC3", "C8",
      "C2xC4", "C2xC2xC2", "D3", "D4", "Q8",    "S3",    "S4"};
  return groups;
}

namespace {

std::vector<GroupPtr> corpus_groups(int cap) {
  std::vector<GroupPtr> out;
  for (const auto& spec : corpus()) out.push_back(make_group(spec, cap));
  return out;
}

AlgebraElement random_element(const GroupPtr& g, SeededRng& rng, int max_terms = 4) {
  std::map<int, cplx> t;
  int k = 1 + rng.below(max_terms);
  for (int i = 0; i < k; ++i) t[rng.below(g->order())] += rng.complex_in_box();
  return from_terms(g, std::move(t));
}

std::string fmt_count(size_t n, const std::string& what) {
  std::ostringstream os;
  os << n << " " << what;
  return os.str();
}

CheckResult pass(const std::string& name, const std::string& detail) {
  return CheckResult{name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
  return CheckResult{name, false, detail};
}

// ---- acceptance criteria -----------------------------------------------------

// 1: idempotent classification vs the Fourier oracle on abelian corpus groups
CheckResult criterion1(const VerifyOptions& o) {
  const char* name = "idempotent classification vs oracle";
  size_t groups_checked = 0;
  for (const auto& spec : corpus()) {
    auto g = make_group(spec, o.group_cap);
    if (!g->is_abelian() || g->order() > 12) continue;
    ++groups_checked;
    std::set<std::string> oracle;
    for (const auto& e : enumerate_idempotents(g, kDefaultIdempotentEnumCap, o.eps)) {
      if (e.is_zero() || norm1(e) > 1 + 1e-9) continue;
      oracle.insert(quantized_key(e));
    }
    std::set<std::string> constructed;
    for (const auto& it : enumerate_norm_one_idempotents(g, o.group_cap, o.eps))
      constructed.insert(quantized_key(it.element));
    if (oracle != constructed)
      return fail(name, spec + ": oracle and constructive sets differ (" +
                            std::to_string(oracle.size()) + " vs " +
                            std::to_string(constructed.size()) + ")");
    if (spec == "C4" && constructed.size() != 7)
      return fail(name, "C4 count " + std::to_string(constructed.size()) + " != 7");
    if (spec == "C2xC2" && constructed.size() != 11)
      return fail(name, "C2xC2 count " + std::to_string(constructed.size()) + " != 11");
  }
  return pass(name, fmt_count(groups_checked, "abelian groups, sets equal; C4=7, C2xC2=11"));
}

// 2: positive idempotents are exactly m_K; NM_omega verdicts for (1,2,1,2)
CheckResult criterion2(const VerifyOptions& o) {
  const char* name = "positive idempotent theorem + NM_omega verdicts";
  for (const auto& spec : corpus()) {
    auto g = make_group(spec, o.group_cap);
    if (!g->is_abelian() || g->order() > 12) continue;
    std::set<std::string> oracle_pos;
    for (const auto& e : enumerate_idempotents(g, kDefaultIdempotentEnumCap, o.eps)) {
      if (e.is_zero() || norm1(e) > 1 + 1e-9 || !is_positive_element(e, o.eps)) continue;
      oracle_pos.insert(quantized_key(e));
    }
    std::set<std::string> mks;
    for (const auto& k : subgroups(g, o.group_cap)) mks.insert(quantized_key(make_mK(k)));
    if (oracle_pos != mks)
      return fail(name, spec + ": positive norm-one idempotents are not exactly {m_K}");
  }
  auto c4 = make_group("C4");
  auto w = finite_weight(c4, {1, 2, 1, 2});
  auto deltas = classify_nm_subgroup({delta(c4, 1)}, o.closure_cap, o.eps);
  if (is_nm_omega_subgroup(deltas, w, o.eps))
    return fail(name, "Delta_C4 reported NM_omega under (1,2,1,2)");
  if (!is_nm_omega_subgroup(deltas, trivial_weight(c4), o.eps))
    return fail(name, "Delta_C4 not NM_omega under the trivial weight");
  auto k = subgroup_from_members(c4, {0, 2});
  auto rho = characters(k)[1];
  auto inner = classify_nm_subgroup({make_rho_mK(k, rho, o.eps).element}, o.closure_cap, o.eps);
  if (!is_nm_omega_subgroup(inner, w, o.eps))
    return fail(name, "Gamma in K={0,2} not NM_omega under (1,2,1,2)");
  return pass(name, "positive idempotents = {m_K}; weighted verdicts match w==1 on H");
}

// 3: norm/total-variation equivalence on seeded random pairs
CheckResult criterion3(const VerifyOptions& o) {
  const char* name = "norm/total-variation equivalence";
  size_t tested = 0;
  int gi = 0;
  for (const auto& g : corpus_groups(o.group_cap)) {
    SeededRng rng(o.seed + 0x1000 + static_cast<std::uint64_t>(gi++));
    for (int t = 0; t < o.random_pairs; ++t) {
      auto f = random_element(g, rng);
      auto h = random_element(g, rng);
      if (f.is_zero() || h.is_zero()) continue;
      auto prod = convolve(f, h, o.eps);
      bool norm_side = norm_eq(norm1(prod), norm1(f) * norm1(h), 1e-9);
      bool tv_side = approx_equal(abs_element(prod),
                                  convolve(abs_element(f), abs_element(h), o.eps),
                                  std::max(1e-9, 1e-9 * norm1(f) * norm1(h)));
      if (norm_side != tv_side) {
        std::ostringstream os;
        os << g->name << " pair " << t << ": norm test " << norm_side << " but |.| test "
           << tv_side;
        return fail(name, os.str());
      }
      ++tested;
    }
  }
  return pass(name, fmt_count(tested, "pairs, both criteria always agree"));
}

// 4: factorization round trip over all NM homs between small corpus groups
CheckResult criterion4(const VerifyOptions& o) {
  const char* name = "NM factorization round trip";
  size_t homs_checked = 0;
  for (const auto& fs : corpus()) {
    auto f = make_group(fs, o.group_cap);
    if (f->order() > 8) continue;
    for (const auto& gs : corpus()) {
      auto g = make_group(gs, o.group_cap);
      if (g->order() > 8) continue;
      for (const auto& phi : enumerate_nm_homs(f, g, o.group_cap, o.eps)) {
        for (const auto& img : phi.delta_images)
          if (!norm_eq(norm1(img), 1.0, 1e-9))
            return fail(name, fs + "->" + gs + ": delta image of norm " +
                                  std::to_string(norm1(img)));
        Factorization fac;
        try {
          fac = factorize_main(phi, o.closure_cap, o.eps);
        } catch (const Error& e) {
          return fail(name, fs + "->" + gs + ": " + e.what());
        }
        AlgebraHomomorphism rec = compose(fac.factors[2], compose(fac.factors[1], fac.factors[0],
                                                                  o.eps), o.eps);
        for (int x = 0; x < f->order(); ++x)
          if (!approx_equal(rec.delta_images[x], phi.delta_images[x], 1e-9))
            return fail(name, fs + "->" + gs + ": recomposition off at delta_" +
                                  std::to_string(x));
        ++homs_checked;
      }
    }
  }
  return pass(name, fmt_count(homs_checked, "NM homomorphisms recomposed exactly"));
}

// 5: positive homomorphism classification and contractivity
CheckResult criterion5(const VerifyOptions& o) {
  const char* name = "positive homomorphism classification";
  auto c2 = make_group("C2");
  auto c4 = make_group("C4");
  auto base = enumerate_positive_homs(c2, c4, o.group_cap, o.eps);
  if (base.size() != 5)
    return fail(name, "enumerate_positive_homs(C2,C4) = " + std::to_string(base.size()) +
                          " != 5");
  size_t homs_total = 0, samples = 0;
  auto groups = corpus_groups(o.group_cap);
  int pi = 0;
  for (const auto& f : groups) {
    for (const auto& g : groups) {
      auto enumerated = enumerate_positive_homs(f, g, o.group_cap, o.eps);
      std::set<std::string> keys;
      for (const auto& phi : enumerated) keys.insert(hom_key(phi));
      // independent sweep through the composed basic homomorphisms
      std::set<std::string> swept;
      for (const auto& h : subgroups(g, o.group_cap)) {
        for (const auto& k : subgroups(g, o.group_cap)) {
          if (!std::includes(h.members.begin(), h.members.end(), k.members.begin(),
                             k.members.end()))
            continue;
          if (!is_normal(k, h)) continue;
          auto q = quotient(h, k);
          auto sk = S_K(q, k);
          for (const auto& theta : group_homomorphisms(f, q.group, o.group_cap))
            swept.insert(hom_key(compose(sk, j_theta(theta), o.eps)));
        }
      }
      if (keys != swept)
        return fail(name, f->name + "->" + g->name + ": enumeration (" +
                              std::to_string(keys.size()) + ") != S_K o j_theta sweep (" +
                              std::to_string(swept.size()) + ")");
      SeededRng rng(o.seed + 0x5000 + static_cast<std::uint64_t>(pi++));
      for (const auto& phi : enumerated) {
        ++homs_total;
        for (int t = 0; t < o.contractive_samples; ++t) {
          auto x = random_element(f, rng);
          if (x.is_zero()) continue;
          if (norm1(apply(phi, x, o.eps)) > norm1(x) * (1 + 1e-9)) {
            return fail(name, f->name + "->" + g->name + ": positive hom not contractive");
          }
          ++samples;
        }
      }
    }
  }
  std::ostringstream os;
  os << "C2->C4 has 5; sweeps agree on " << groups.size() * groups.size() << " pairs; "
     << homs_total << " homs contractive on " << samples << " samples";
  return pass(name, os.str());
}

// 6: positive bijective homomorphisms are bipositive
CheckResult criterion6(const VerifyOptions& o) {
  const char* name = "positive isomorphisms are bipositive";
  size_t found = 0;
  auto groups = corpus_groups(o.group_cap);
  for (const auto& f : groups) {
    for (const auto& g : groups) {
      if (f->order() != g->order()) continue;
      for (const auto& phi : enumerate_positive_homs(f, g, o.group_cap, o.eps)) {
        auto inv = hom_inverse(phi, o.eps);
        if (!inv) continue;
        ++found;
        if (!is_positive_hom(*inv, o.eps))
          return fail(name, f->name + "->" + g->name + ": positive iso with non-positive inverse");
      }
    }
  }
  return pass(name, fmt_count(found, "bijective positive homs, all inverses positive"));
}

// 7: the non-NM transport isomorphism CC4 -> C(C2xC2)
CheckResult criterion7(const VerifyOptions& o) {
  const char* name = "non-NM transport isomorphism witness";
  auto c4 = make_group("C4");
  auto klein = make_group("C2xC2");
  AlgebraHomomorphism phi;
  try {
    phi = transport_isomorphism(c4, klein, canonical_c4_klein_pairing(), o.eps);
  } catch (const Error& e) {
    return fail(name, std::string("transport not multiplicative: ") + e.what());
  }
  if (!hom_inverse(phi, o.eps)) return fail(name, "transport is not bijective");
  double n = norm1(phi.delta_images[1]);
  if (!norm_eq(n, std::sqrt(2.0), 1e-9))
    return fail(name, "||phi(d1)||_1 = " + std::to_string(n) + " != sqrt(2)");
  auto nm = is_nm_hom(phi, o.eps);
  if (nm.is_nm) return fail(name, "transport reported NM");
  if (nm.witness_a < 0) return fail(name, "no witness pair returned");
  std::ostringstream os;
  os << "bijective, multiplicative, ||phi(d1)||_1 = sqrt(2), NM fails at pair ("
     << nm.witness_a << "," << nm.witness_b << ")";
  return pass(name, os.str());
}

// 8: linked standard isomorphism on Z with omega = 2^s
CheckResult criterion8(const VerifyOptions& o) {
  const char* name = "linked standard isomorphism on Z";
  auto w = z_weight("exp:2");
  auto gamma = z_scalar_hom("exp:0.5");
  auto rep = standard_iso_check_z(gamma, 2, w, w, o.eps);
  if (!(rep.L == 1.0 && rep.l == 1.0 && rep.is_positive && rep.is_linked))
    return fail(name, "expected L = l = 1, positive, linked");
  SeededRng rng(o.seed + 0x8000);
  for (int t = 0; t < 100; ++t) {
    std::map<long long, cplx> terms;
    int k = 1 + rng.below(5);
    for (int i = 0; i < k; ++i) terms[rng.below(25) - 12] += rng.complex_in_box();
    auto f = z_from_terms(std::move(terms), o.eps);
    auto g = apply_standard_z(gamma, 2, f, o.eps);
    if (!norm_eq(z_norm_w(g, w), z_norm_w(f, w), 1e-9))
      return fail(name, "weighted norm not preserved on sample " + std::to_string(t));
  }
  return pass(name, "L = l = 1, positive, linked; isometric on 100 seeded elements");
}

// 9: PInv(G) = { alpha d_s } via the iff over seeded elements
CheckResult criterion9(const VerifyOptions& o) {
  const char* name = "PInv characterization";
  size_t tested = 0;
  int gi = 0;
  for (const auto& g : corpus_groups(o.group_cap)) {
    SeededRng rng(o.seed + 0x9000 + static_cast<std::uint64_t>(gi++));
    for (int t = 0; t < o.pinv_samples; ++t) {
      AlgebraElement f = zero_element(g);
      switch (rng.below(5)) {
        case 0: f = delta(g, rng.below(g->order()), rng.uniform(0.05, 4.0)); break;
        case 1:
          f = delta(g, rng.below(g->order()), cplx{rng.uniform(-2, 2), rng.uniform(-2, 2)});
          break;
        case 2: {
          std::map<int, cplx> terms;
          for (int i = 0; i < 2; ++i) terms[rng.below(g->order())] += rng.uniform(0.05, 1.5);
          f = from_terms(g, std::move(terms), o.eps);
          break;
        }
        case 3: f = scale(make_mK(subgroups(g, o.group_cap)[rng.below(2)]), rng.uniform(0.5, 2.0));
          break;
        default: f = random_element(g, rng); break;
      }
      if (f.is_zero()) continue;
      ++tested;
      auto r = positive_invertible_check(f, o.eps);
      bool pinv = r.positive && r.invertible && r.inverse_positive;
      if (r.form.has_value() != pinv) {
        std::ostringstream os;
        os << g->name << " sample " << t << ": form " << r.form.has_value() << " but pinv "
           << pinv;
        return fail(name, os.str());
      }
      if (r.form && !approx_equal(f, delta(g, r.form->second, r.form->first), o.eps))
        return fail(name, g->name + ": returned form does not reproduce the element");
    }
  }
  return pass(name, fmt_count(tested, "elements, form <=> positive invertible positive-inverse"));
}

// ---- extra per-module invariant checks (beyond the acceptance criteria) -----

CheckResult check_group_axioms(const VerifyOptions& o) {
  const char* name = "group axioms (exhaustive)";
  for (const auto& g : corpus_groups(o.group_cap)) {
    int n = g->order();
    for (int a = 0; a < n; ++a) {
      if (g->op(0, a) != a || g->op(a, 0) != a) return fail(name, g->name + ": identity");
      if (g->op(a, g->inv(a)) != 0) return fail(name, g->name + ": inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g->op(g->op(a, b), c) != g->op(a, g->op(b, c)))
            return fail(name, g->name + ": associativity");
  }
  return pass(name, fmt_count(corpus().size(), "groups validated"));
}

CheckResult check_subgroup_completeness(const VerifyOptions& o) {
  const char* name = "subgroup enumeration complete (brute force <= 8)";
  size_t checked = 0;
  for (const auto& g : corpus_groups(o.group_cap)) {
    if (g->order() > 8) continue;
    ++checked;
    int n = g->order();
    std::set<std::vector<int>> brute;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (!(mask & 1)) continue;
      std::vector<int> mem;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) mem.push_back(i);
      bool closed = true;
      for (int a : mem)
        for (int b : mem)
          if (!std::binary_search(mem.begin(), mem.end(), g->op(a, b)) ||
              !std::binary_search(mem.begin(), mem.end(), g->inv(a)))
            closed = false;
      if (closed) brute.insert(mem);
    }
    std::set<std::vector<int>> listed;
    for (const auto& h : subgroups(g, o.group_cap)) listed.insert(h.members);
    if (brute != listed) return fail(name, g->name + ": lists differ");
  }
  return pass(name, fmt_count(checked, "groups cross-checked"));
}

CheckResult check_quotient_characters(const VerifyOptions& o) {
  const char* name = "quotients and characters exact";
  for (const auto& g : corpus_groups(o.group_cap)) {
    if (g->order() > 12) continue;
    auto whole = whole_group(g);
    for (const auto& k : subgroups(g, o.group_cap)) {
      for (const auto& ch : characters(k))
        for (int a : k.members)
          for (int b : k.members)
            if (ch.exponent_of(g->op(a, b)) !=
                (ch.exponent_of(a) + ch.exponent_of(b)) % ch.modulus)
              return fail(name, g->name + ": character law");
      if (!is_normal(k, whole)) continue;
      auto q = quotient(whole, k);
      if (!is_group_hom(q.projection)) return fail(name, g->name + ": projection not a hom");
    }
  }
  return pass(name, "all projections and characters multiplicative");
}

CheckResult check_algebra_laws(const VerifyOptions& o) {
  const char* name = "algebra norm and involution laws";
  size_t tested = 0;
  int gi = 0;
  for (const auto& g : corpus_groups(o.group_cap)) {
    SeededRng rng(o.seed + 0x3000 + static_cast<std::uint64_t>(gi++));
    auto w = trivial_weight(g);
    for (int t = 0; t < 200; ++t) {
      auto f = random_element(g, rng);
      auto h = random_element(g, rng);
      if (f.is_zero() || h.is_zero()) continue;
      auto prod = convolve(f, h, o.eps);
      if (norm1(prod) > norm1(f) * norm1(h) + 1e-9)
        return fail(name, g->name + ": submultiplicativity");
      auto tv = convolve(abs_element(f), abs_element(h), o.eps);
      for (const auto& [key, v] : prod.terms)
        if (std::abs(v) > std::abs(tv.at(key)) + 1e-9)
          return fail(name, g->name + ": |f*g| <= |f|*|g|");
      std::set<int> prod_set;
      for (const auto& [s, a] : f.terms)
        for (const auto& [u, b] : h.terms) prod_set.insert(g->op(s, u));
      for (int s : support(prod))
        if (!prod_set.count(s)) return fail(name, g->name + ": support outside product set");
      if (norm_eq(norm1(prod), norm1(f) * norm1(h), 1e-9)) {
        auto supp = support(prod);
        if (std::set<int>(supp.begin(), supp.end()) != prod_set)
          return fail(name, g->name + ": support != product set despite norm equality");
      }
      if (!approx_equal(involution(convolve(f, h, o.eps)),
                        convolve(involution(h), involution(f), o.eps), 1e-9))
        return fail(name, g->name + ": (f*g)* = g* * f*");
      if (!approx_equal(involution(involution(f)), f, 1e-9))
        return fail(name, g->name + ": f** = f");
      ++tested;
    }
  }
  return pass(name, fmt_count(tested, "random pairs"));
}

CheckResult check_fourier_oracle(const VerifyOptions& o) {
  const char* name = "Fourier transform oracle internals";
  size_t groups_checked = 0;
  int gi = 0;
  for (const auto& g : corpus_groups(o.group_cap)) {
    if (!g->is_abelian() || g->order() > kDefaultIdempotentEnumCap) continue;
    ++groups_checked;
    auto d = dual_group(g);
    SeededRng rng(o.seed + 0x4000 + static_cast<std::uint64_t>(gi++));
    for (int t = 0; t < 100; ++t) {
      auto f = random_element(g, rng);
      auto h = random_element(g, rng);
      if (!approx_equal(inverse_fourier(d, fourier(d, f), o.eps), f, 1e-9))
        return fail(name, g->name + ": inversion");
      auto lhs = fourier(d, convolve(f, h, o.eps));
      auto rf = fourier(d, f);
      auto rh = fourier(d, h);
      for (int ci = 0; ci < d.order(); ++ci)
        if (std::abs(lhs.values[ci] - rf.values[ci] * rh.values[ci]) > 1e-9)
          return fail(name, g->name + ": convolution theorem");
    }
    auto ids = enumerate_idempotents(g, kDefaultIdempotentEnumCap, o.eps);
    if (ids.size() != (1u << g->order())) return fail(name, g->name + ": idempotent count");
    std::set<std::string> keys;
    for (const auto& e : ids) {
      if (!approx_equal(convolve(e, e, o.eps), e, 1e-9))
        return fail(name, g->name + ": non-idempotent in enumeration");
      if (!keys.insert(quantized_key(e)).second)
        return fail(name, g->name + ": duplicate idempotent");
    }
  }
  return pass(name, fmt_count(groups_checked, "abelian groups"));
}

CheckResult check_nm_classification(const VerifyOptions& o) {
  const char* name = "NM subgroup classification internals";
  // every (K, rho) round trips; a generated example recomposes
  for (const auto& g : corpus_groups(o.group_cap)) {
    if (g->order() > 8) continue;
    for (const auto& it : enumerate_norm_one_idempotents(g, o.group_cap, o.eps)) {
      auto back = classify_norm_one_idempotent(it.element, o.eps);
      if (back.K.members != it.K.members) return fail(name, g->name + ": K round trip");
      for (int kk : it.K.members)
        if (std::abs(back.rho.value(kk) - it.rho.value(kk)) > 1e-9)
          return fail(name, g->name + ": rho round trip");
      auto cls = classify_nm_subgroup({it.element}, o.closure_cap, o.eps);
      for (size_t i = 0; i < cls.members.size(); ++i) {
        const auto& om = cls.omega_members[i];
        if (std::abs(std::abs(om.scalar) - 1.0) > 1e-9)
          return fail(name, g->name + ": omega scalar not unimodular");
        auto rec = convolve(delta(g, om.elem, om.scalar), cls.iota, o.eps);
        if (!approx_equal(rec, cls.members[i], 1e-9))
          return fail(name, g->name + ": omega recomposition");
      }
    }
  }
  return pass(name, "all (K, rho) anchors round trip with unimodular omega scalars");
}

CheckResult check_hom_composition(const VerifyOptions& o) {
  const char* name = "composition with norm-one idempotent image stays NM";
  auto c2 = make_group("C2");
  auto c4 = make_group("C4");
  auto klein = make_group("C2xC2");
  size_t checked = 0;
  for (const auto& [fg, gq] : {std::pair<GroupPtr, GroupPtr>{c2, c4}, {c4, klein}}) {
    auto inner = enumerate_nm_homs(fg, gq, o.group_cap, o.eps);
    auto outer = enumerate_nm_homs(gq, gq, o.group_cap, o.eps);
    for (const auto& kappa : outer)
      for (const auto& phi : inner) {
        auto comp = compose(kappa, phi, o.eps);
        if (std::abs(norm1(comp.delta_images[0]) - 1.0) > 1e-9) continue;
        if (!is_nm_hom(comp, o.eps).is_nm)
          return fail(name, fg->name + "->" + gq->name + "->" + gq->name + ": not NM");
        ++checked;
      }
  }
  return pass(name, fmt_count(checked, "compositions"));
}

// ---- suite registry ----------------------------------------------------------

using Suite = std::vector<CheckResult> (*)(const VerifyOptions&);

std::vector<CheckResult> suite_group(const VerifyOptions& o) {
  return {check_group_axioms(o), check_subgroup_completeness(o), check_quotient_characters(o)};
}
std::vector<CheckResult> suite_algebra(const VerifyOptions& o) {
  return {check_algebra_laws(o), criterion3(o)};
}
std::vector<CheckResult> suite_fourier(const VerifyOptions& o) {
  return {check_fourier_oracle(o)};
}
std::vector<CheckResult> suite_idempotents(const VerifyOptions& o) {
  return {criterion1(o), criterion2(o)};
}
std::vector<CheckResult> suite_nm(const VerifyOptions& o) {
  return {check_nm_classification(o)};
}
std::vector<CheckResult> suite_homs(const VerifyOptions& o) {
  return {criterion4(o), criterion5(o), criterion6(o), check_hom_composition(o)};
}
std::vector<CheckResult> suite_transport(const VerifyOptions& o) { return {criterion7(o)}; }
std::vector<CheckResult> suite_ziso(const VerifyOptions& o) { return {criterion8(o)}; }
std::vector<CheckResult> suite_pinv(const VerifyOptions& o) { return {criterion9(o)}; }

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> reg = {
      {"group", suite_group},           {"algebra", suite_algebra},
      {"fourier", suite_fourier},       {"idempotents", suite_idempotents},
      {"nm", suite_nm},                 {"homs", suite_homs},
      {"transport", suite_transport},   {"ziso", suite_ziso},
      {"pinv", suite_pinv},
  };
  return reg;
}

}  // namespace

std::vector<CheckResult> acceptance_criteria(const VerifyOptions& opts) {
  return {criterion1(opts), criterion2(opts), criterion3(opts),
          criterion4(opts), criterion5(opts), criterion6(opts),
          criterion7(opts), criterion8(opts), criterion9(opts)};
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [n, s] : registry()) names.push_back(n);
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& [n, s] : registry()) {
      auto part = s(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const auto& [n, s] : registry())
    if (n == name) return s(opts);
  throw Error(errc::parse_error, "unknown suite '" + name + "'");
}

}  // namespace nmg

