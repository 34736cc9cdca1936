#include "nmg/nm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nmg {

AlgebraElement make_mK(const Subgroup& k) {
  std::map<int, cplx> t;
  double c = 1.0 / k.order();
  for (int m : k.members) t[m] = c;
  return AlgebraElement{k.parent, std::move(t)};
}

NormOneIdempotent make_rho_mK(const Subgroup& k, const Character& rho, double eps) {
  if (!same_group(k.parent, rho.subgroup.parent) || k.members != rho.subgroup.members)
    throw Error(errc::group_mismatch, "character not on the given subgroup");
  std::map<int, cplx> t;
  double c = 1.0 / k.order();
  for (size_t i = 0; i < k.members.size(); ++i)
    t[k.members[i]] = rho.value_at_local(static_cast<int>(i)) * c;
  AlgebraElement e = from_terms(k.parent, std::move(t), eps);
  return NormOneIdempotent{k, rho, std::move(e)};
}

NormOneIdempotent classify_norm_one_idempotent(const AlgebraElement& f, double eps) {
  if (f.is_zero()) throw Error(errc::zero_element, "classify_norm_one_idempotent");
  double n1 = norm1(f);
  if (!norm_eq(n1, 1.0, eps)) {
    std::ostringstream os;
    os << "||f||_1 = " << n1;
    throw Error(errc::not_norm_one, os.str());
  }
  if (!approx_equal(convolve(f, f, eps), f, eps)) throw Error(errc::not_idempotent, "f*f != f");

  // K = support(f) must be a subgroup, rho(k) = |K| f(k) a character
  std::vector<int> supp = support(f);
  Subgroup k;
  try {
    k = subgroup_from_members(f.group, supp);
  } catch (const Error&) {
    throw Error(errc::inconsistent_structure, "support is not a subgroup");
  }
  int m = 1;
  for (int x : k.members) m = std::lcm(m, f.group->element_order(x));
  Character rho;
  rho.subgroup = k;
  rho.modulus = m;
  rho.exponents.resize(k.members.size());
  int sz = k.order();
  const double two_pi = 6.283185307179586476925286766559;
  for (size_t i = 0; i < k.members.size(); ++i) {
    cplx val = f.at(k.members[i]) * static_cast<double>(sz);
    if (std::abs(std::abs(val) - 1.0) > sz * eps)
      throw Error(errc::inconsistent_structure, "coefficient not unimodular after scaling");
    double ang = std::arg(val);
    if (ang < 0) ang += two_pi;
    long long e = std::llround(ang * m / two_pi) % m;
    rho.exponents[i] = static_cast<int>(e);
  }
  // exact homomorphism law on the exponents
  for (int a : k.members)
    for (int b : k.members) {
      int lhs = rho.exponent_of(k.parent->op(a, b));
      int rhs = (rho.exponent_of(a) + rho.exponent_of(b)) % m;
      if (lhs != rhs) throw Error(errc::inconsistent_structure, "rho is not multiplicative");
    }
  NormOneIdempotent out = make_rho_mK(k, rho, eps);
  if (!approx_equal(out.element, f, std::max(eps, sz * eps)))
    throw Error(errc::inconsistent_structure, "reconstruction does not reproduce f");
  if (is_positive_element(f, eps) && !rho.is_trivial())
    throw Error(errc::inconsistent_structure, "positive idempotent with nontrivial character");
  return out;
}

std::vector<NormOneIdempotent> enumerate_norm_one_idempotents(const GroupPtr& g, int size_cap,
                                                              double eps) {
  std::vector<NormOneIdempotent> out;
  for (const auto& k : subgroups(g, size_cap))
    for (const auto& rho : characters(k)) out.push_back(make_rho_mK(k, rho, eps));
  return out;
}

NmSetReport is_nm_set(const std::vector<AlgebraElement>& elems, double eps) {
  NmSetReport r;
  if (elems.empty()) return r;
  for (const auto& e : elems)
    if (e.is_zero()) throw Error(errc::zero_element, "is_nm_set");
  for (size_t i = 1; i < elems.size(); ++i)
    if (!same_group(elems[i].group, elems[0].group)) throw Error(errc::group_mismatch, "is_nm_set");

  std::vector<double> norms(elems.size());
  std::vector<AlgebraElement> absd(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    norms[i] = norm1(elems[i]);
    absd[i] = abs_element(elems[i]);
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      auto prod = convolve(elems[i], elems[j], eps);
      bool norm_side = norm_eq(norm1(prod), norms[i] * norms[j], eps);
      bool tv_side = approx_equal(abs_element(prod), convolve(absd[i], absd[j], eps),
                                  std::max(eps, eps * norms[i] * norms[j]));
      if (norm_side != tv_side) r.criteria_agree = false;
      if (!norm_side && r.ok) {
        r.ok = false;
        r.witness_a = static_cast<int>(i);
        r.witness_b = static_cast<int>(j);
        std::ostringstream os;
        os << "||f*g||_1 = " << norm1(prod) << " but ||f||_1 ||g||_1 = " << norms[i] * norms[j];
        r.detail = os.str();
      }
    }
  return r;
}

OmegaMember decompose_in_gamma(const AlgebraElement& f, const Subgroup& k, const Character& rho,
                               double eps) {
  std::vector<int> supp = support(f);
  if (supp.size() != static_cast<size_t>(k.order()))
    throw Error(errc::inconsistent_structure, "member support size != |K|");
  int t = supp[0];
  cplx alpha = f.at(t) * static_cast<double>(k.order());
  const FiniteGroup& g = *f.group;
  for (int kk : k.members) {
    cplx expect = alpha * rho.value(kk) / static_cast<double>(k.order());
    if (std::abs(f.at(g.op(t, kk)) - expect) > std::max(eps, 4 * eps * std::abs(alpha)))
      throw Error(errc::inconsistent_structure, "member is not of the form alpha d_t * rho m_K");
  }
  return OmegaMember{alpha, t};
}

NMClassification classify_nm_subgroup(const std::vector<AlgebraElement>& generators,
                                      int closure_cap, double eps) {
  if (generators.empty()) throw Error(errc::zero_element, "no generators");
  for (const auto& g : generators)
    if (g.is_zero()) throw Error(errc::zero_element, "zero generator");
  for (size_t i = 1; i < generators.size(); ++i)
    if (!same_group(generators[i].group, generators[0].group))
      throw Error(errc::group_mismatch, "generators over different groups");
  GroupPtr grp = generators[0].group;

  NMClassification cls;
  // scalars factored out: close the normalized orbit
  std::vector<AlgebraElement> seeds;
  for (const auto& g : generators) {
    double n = norm1(g);
    if (!norm_eq(n, 1.0, eps)) cls.scalar_generators.push_back(n);
    seeds.push_back(scale(g, 1.0 / n, eps));
  }
  // inverses enter through mu^{-1} = mu* / ||mu||^2; for norm-one members
  // that is the involution
  size_t n_gen = seeds.size();
  for (size_t i = 0; i < n_gen; ++i) seeds.push_back(involution(seeds[i]));

  // in an NM group nu * nu* is the identity, an idempotent; the norm test
  // alone cannot see this for positive generators
  for (size_t i = 0; i < n_gen; ++i) {
    auto c = convolve(seeds[i], seeds[i + n_gen], eps);
    if (!approx_equal(convolve(c, c, eps), c, eps)) {
      std::ostringstream os;
      os << "generator " << i << ": f * f^adj / ||f||^2 is not idempotent, so the adjoint "
            "formula for the inverse fails";
      throw Error(errc::not_nm, os.str());
    }
  }

  std::unordered_map<std::string, int> index_of;
  std::vector<AlgebraElement> members;
  auto push = [&](AlgebraElement e) -> int {
    std::string key = quantized_key(e);
    auto it = index_of.find(key);
    if (it != index_of.end()) return it->second;
    int idx = static_cast<int>(members.size());
    index_of.emplace(std::move(key), idx);
    members.push_back(std::move(e));
    return idx;
  };
  for (auto& s : seeds) push(s);

  // BFS over member * seed products. Each product of norm-one members must
  // be norm-one again; a violation is the NM witness. Covering member x seed
  // pairs covers all pairs, since every member is a seed word.
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < seeds.size(); ++j) {
      auto prod = convolve(members[i], seeds[j], eps);
      double n = norm1(prod);
      if (!norm_eq(n, 1.0, eps)) {
        std::ostringstream os;
        os << "||f*g||_1 = " << n << " for members (" << i << "," << j << ")";
        throw Error(errc::not_nm, os.str());
      }
      push(std::move(prod));
      if (static_cast<int>(members.size()) > closure_cap)
        throw Error(errc::closure_cap, "normalized orbit exceeded closure_cap");
    }
  }
  cls.members = members;

  // identity hunt: powers of the first seed until the orbit cycles
  {
    std::unordered_set<std::string> seen;
    AlgebraElement p = seeds[0];
    std::vector<AlgebraElement> pow{p};
    seen.insert(quantized_key(p));
    int guard = closure_cap + 2;
    while (guard-- > 0) {
      p = convolve(p, seeds[0], eps);
      std::string key = quantized_key(p);
      if (!seen.insert(key).second) break;
      pow.push_back(p);
    }
    // the cycle of powers of a group element passes through the identity:
    // p^a = p^b forces p^{b-a} = iota
    int period = -1;
    std::string repeat = quantized_key(p);
    for (size_t a = 0; a < pow.size(); ++a)
      if (quantized_key(pow[a]) == repeat) {
        period = static_cast<int>(pow.size() - a);
        break;
      }
    if (period <= 0) throw Error(errc::not_a_group, "no cycle in the power orbit");
    cls.iota = pow[static_cast<size_t>(period) - 1];  // pow[i] = seed^{i+1}
    if (!approx_equal(convolve(cls.iota, cls.iota, eps), cls.iota, eps))
      throw Error(errc::not_a_group, "no idempotent in the power orbit");
  }
  // the idempotent must be a two-sided identity for every member
  for (const auto& m : members)
    if (!approx_equal(convolve(cls.iota, m, eps), m, eps) ||
        !approx_equal(convolve(m, cls.iota, eps), m, eps))
      throw Error(errc::not_a_group, "no common identity");

  try {
    auto cl = classify_norm_one_idempotent(cls.iota, eps);
    cls.K = cl.K;
    cls.rho = cl.rho;
    cls.iota = cl.element;
  } catch (const Error& e) {
    if (e.code == errc::zero_element) throw Error(errc::not_a_group, "identity vanished");
    throw;
  }

  // H = subgroup generated by all supports
  {
    std::vector<int> gens_h;
    for (const auto& m : members)
      for (int s : support(m)) gens_h.push_back(s);
    cls.H = generated_subgroup(grp, gens_h);
  }
  // structural requirements from the classification theorem
  if (!is_normal(cls.K, cls.H)) throw Error(errc::inconsistent_structure, "K not normal in H");
  auto ker = cls.rho.kernel();
  if (!is_normal(ker, cls.H)) throw Error(errc::inconsistent_structure, "ker rho not normal in H");
  for (int h : cls.H.members)
    for (int kk : cls.K.members) {
      int conj = grp->op(grp->op(h, kk), grp->inv(h));
      if (!cls.K.contains(conj) || cls.rho.exponent_of(conj) != cls.rho.exponent_of(kk))
        throw Error(errc::inconsistent_structure, "K/ker rho not central in H/ker rho");
    }

  // Omega data: every member must be alpha d_t * rho m_K
  for (const auto& m : members)
    cls.omega_members.push_back(decompose_in_gamma(m, cls.K, cls.rho, eps));

  // minimal generating sublist via greedy + prune, closing in member space
  {
    auto closure_of = [&](const std::vector<int>& gen_idx) {
      std::unordered_set<std::string> got;
      std::vector<AlgebraElement> work{cls.iota};
      got.insert(quantized_key(cls.iota));
      for (int gi : gen_idx) {
        if (got.insert(quantized_key(members[gi])).second) work.push_back(members[gi]);
        auto inv = involution(members[gi]);
        if (got.insert(quantized_key(inv)).second) work.push_back(std::move(inv));
      }
      for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
          auto p = convolve(work[i], work[j], eps);
          if (got.insert(quantized_key(p)).second) work.push_back(std::move(p));
        }
      return got.size();
    };
    std::vector<int> gensel;
    size_t covered = closure_of(gensel);
    for (size_t i = 0; i < members.size() && covered < members.size(); ++i) {
      auto trial = gensel;
      trial.push_back(static_cast<int>(i));
      size_t c = closure_of(trial);
      if (c > covered) {
        gensel = std::move(trial);
        covered = c;
      }
    }
    for (size_t i = 0; i < gensel.size();) {
      auto trial = gensel;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (closure_of(trial) == members.size())
        gensel = std::move(trial);
      else
        ++i;
    }
    cls.omega_generators = std::move(gensel);
  }
  return cls;
}

bool is_nm_omega_subgroup(const NMClassification& cls, const Weight& w, double eps) {
  return is_multiplicative_on(w, cls.H, eps);
}

// ---- invertibility ---------------------------------------------------------

namespace {

// Gaussian elimination solve of the regular representation M x = d_e with
// M[u][v] = f(u v^{-1}).
std::optional<AlgebraElement> solve_regular(const AlgebraElement& f, double eps) {
  const FiniteGroup& g = *f.group;
  int n = g.order();
  std::vector<cplx> a(static_cast<size_t>(n) * (n + 1), cplx{0, 0});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) a[static_cast<size_t>(u) * (n + 1) + v] = f.at(g.op(u, g.inv(v)));
    a[static_cast<size_t>(u) * (n + 1) + n] = (u == 0) ? 1.0 : 0.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 0;
    for (int r = col; r < n; ++r) {
      double m = std::abs(a[static_cast<size_t>(r) * (n + 1) + col]);
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (piv < 0 || best < 1e-12) return std::nullopt;  // singular
    if (piv != col)
      for (int c = 0; c <= n; ++c)
        std::swap(a[static_cast<size_t>(piv) * (n + 1) + c],
                  a[static_cast<size_t>(col) * (n + 1) + c]);
    cplx d = a[static_cast<size_t>(col) * (n + 1) + col];
    for (int c = 0; c <= n; ++c) a[static_cast<size_t>(col) * (n + 1) + c] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      cplx m = a[static_cast<size_t>(r) * (n + 1) + col];
      if (std::abs(m) == 0) continue;
      for (int c = col; c <= n; ++c)
        a[static_cast<size_t>(r) * (n + 1) + c] -= m * a[static_cast<size_t>(col) * (n + 1) + c];
    }
  }
  std::map<int, cplx> x;
  for (int v = 0; v < n; ++v) x[v] = a[static_cast<size_t>(v) * (n + 1) + n];
  return from_terms(f.group, std::move(x), eps);
}

// Fourier route for abelian groups: invertible iff no spectrum zero.
std::optional<AlgebraElement> invert_abelian(const AlgebraElement& f, double eps) {
  const FiniteGroup& g = *f.group;
  auto chars = characters(whole_group(f.group));
  int n = g.order();
  std::vector<cplx> hat(n, cplx{0, 0});
  for (int ci = 0; ci < n; ++ci)
    for (const auto& [s, v] : f.terms) hat[ci] += v * chars[ci].value(s);
  for (const auto& h : hat)
    if (std::abs(h) < 1e-12) return std::nullopt;
  std::map<int, cplx> inv;
  for (int s = 0; s < n; ++s) {
    cplx acc{0, 0};
    for (int ci = 0; ci < n; ++ci) acc += std::conj(chars[ci].value(s)) / hat[ci];
    inv[s] = acc / static_cast<double>(n);
  }
  return from_terms(f.group, std::move(inv), eps);
}

}  // namespace

std::optional<AlgebraElement> convolution_inverse(const AlgebraElement& f, double eps) {
  if (f.is_zero()) return std::nullopt;
  if (f.group->is_abelian()) return invert_abelian(f, eps);
  return solve_regular(f, eps);
}

PInvResult positive_invertible_check(const AlgebraElement& f, double eps) {
  if (f.is_zero()) throw Error(errc::zero_element, "positive_invertible_check");
  PInvResult r;
  if (f.terms.size() == 1) {
    auto [s, v] = *f.terms.begin();
    if (std::abs(v.imag()) <= eps && v.real() > eps) r.form = std::make_pair(v.real(), s);
  }
  r.positive = is_positive_element(f, eps);
  auto inv = convolution_inverse(f, eps);
  r.invertible = inv.has_value();
  if (inv) {
    r.inverse_positive = is_positive_element(*inv, eps);
    r.inverse = std::move(inv);
  }
  return r;
}

}  // namespace nmg
