#include "nmg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nmg {

// ---- weights ---------------------------------------------------------------

double Weight::z_at(long long s) const {
  switch (kind) {
    case Kind::z_exp: return std::pow(base, static_cast<double>(s));
    case Kind::z_absexp: return std::pow(base, std::abs(static_cast<double>(s)));
    default: throw Error(errc::unsupported, "z_at on a finite weight");
  }
}

bool Weight::is_trivial(double eps) const {
  if (is_z()) return std::abs(base - 1.0) <= eps;
  for (double v : values)
    if (std::abs(v - 1.0) > eps) return false;
  return true;
}

Weight trivial_weight(GroupPtr g) {
  Weight w;
  w.kind = Weight::Kind::finite;
  w.values.assign(g->order(), 1.0);
  w.group = std::move(g);
  return w;
}

WeightReport validate_weight(const GroupPtr& g, const std::vector<double>& values, double eps) {
  WeightReport r;
  if (values.size() != static_cast<size_t>(g->order()))
    throw Error(errc::bad_weight, "value count does not match group order");
  for (double v : values)
    if (!(v > 0)) throw Error(errc::bad_weight, "weights must be positive");
  if (std::abs(values[0] - 1.0) > eps) {
    r.valid = false;
    r.detail = "w(e) != 1";
    return r;
  }
  for (int s = 0; s < g->order(); ++s)
    for (int t = 0; t < g->order(); ++t)
      if (values[g->op(s, t)] > values[s] * values[t] * (1 + eps))
        r.violations.emplace_back(s, t);
  r.valid = r.violations.empty();
  return r;
}

WeightReport validate_z_weight(Weight::Kind kind, double base) {
  WeightReport r;
  if (!(base > 0)) throw Error(errc::bad_weight, "base must be positive");
  // b^{s+t} = b^s b^t always; b^|s+t| <= b^|s| b^|t| exactly when b >= 1
  if (kind == Weight::Kind::z_absexp && base < 1.0) {
    r.valid = false;
    r.detail = "absexp requires base >= 1";
  }
  return r;
}

Weight finite_weight(GroupPtr g, std::vector<double> values) {
  WeightReport r = validate_weight(g, values);
  if (!r.valid) {
    std::ostringstream os;
    os << "not submultiplicative";
    if (!r.violations.empty())
      os << " at (" << r.violations[0].first << "," << r.violations[0].second << ")";
    if (!r.detail.empty()) os << ": " << r.detail;
    throw Error(errc::bad_weight, os.str());
  }
  Weight w;
  w.kind = Weight::Kind::finite;
  w.group = std::move(g);
  w.values = std::move(values);
  return w;
}

Weight z_weight(const std::string& formula) {
  auto colon = formula.find(':');
  if (colon == std::string::npos) throw Error(errc::parse_error, "weight formula '" + formula + "'");
  std::string tag = formula.substr(0, colon);
  double base = 0;
  try {
    base = std::stod(formula.substr(colon + 1));
  } catch (...) {
    throw Error(errc::parse_error, "weight formula base in '" + formula + "'");
  }
  Weight w;
  if (tag == "exp")
    w.kind = Weight::Kind::z_exp;
  else if (tag == "absexp")
    w.kind = Weight::Kind::z_absexp;
  else
    throw Error(errc::parse_error, "weight formula tag '" + tag + "'");
  w.base = base;
  WeightReport r = validate_z_weight(w.kind, base);
  if (!r.valid) throw Error(errc::bad_weight, r.detail);
  return w;
}

bool is_multiplicative_on(const Weight& w, const Subgroup& h, double eps) {
  if (w.is_z()) throw Error(errc::unsupported, "is_multiplicative_on needs a finite weight");
  if (!same_group(w.group, h.parent)) throw Error(errc::group_mismatch, "weight/subgroup");
  const FiniteGroup& g = *h.parent;
  for (int s : h.members)
    for (int t : h.members) {
      double lhs = w.at(g.op(s, t));
      double rhs = w.at(s) * w.at(t);
      if (std::abs(lhs - rhs) > std::max(eps, eps * std::abs(lhs))) return false;
    }
  return true;
}

Weight quotient_weight(const Weight& w, const Subgroup& k, const QuotientGroup& q, double eps) {
  if (w.is_z()) throw Error(errc::unsupported, "quotient_weight needs a finite weight");
  if (!same_group(w.group, k.parent)) throw Error(errc::group_mismatch, "weight/subgroup");
  for (int m : k.members)
    if (std::abs(w.at(m) - 1.0) > eps)
      throw Error(errc::bad_weight, "weight not identically 1 on K");
  const FiniteGroup& g = *k.parent;
  // constancy on cosets, then read off at the representatives
  std::vector<double> vals(q.group->order());
  for (int i = 0; i < q.group->order(); ++i) {
    int rep = q.rep[i];
    double v = w.at(rep);
    for (int kk : k.members) {
      double u = w.at(g.op(rep, kk));
      if (std::abs(u - v) > std::max(eps, eps * std::abs(v)))
        throw Error(errc::bad_weight, "weight not constant on cosets");
    }
    vals[i] = v;
  }
  Weight out;
  out.kind = Weight::Kind::finite;
  out.group = q.group;
  out.values = std::move(vals);
  return out;
}

Weight quotient_weight(const Weight& w, const Subgroup& k, double eps) {
  if (w.is_z()) throw Error(errc::unsupported, "quotient_weight needs a finite weight");
  auto q = quotient(whole_group(w.group), k);
  return quotient_weight(w, k, q, eps);
}

// ---- elements --------------------------------------------------------------

cplx AlgebraElement::at(int g) const {
  auto it = terms.find(g);
  return it == terms.end() ? cplx{0.0, 0.0} : it->second;
}

AlgebraElement zero_element(GroupPtr g) { return AlgebraElement{std::move(g), {}}; }

AlgebraElement delta(GroupPtr g, int x, cplx coeff) {
  if (x < 0 || x >= g->order()) throw Error(errc::parse_error, "element index out of range");
  AlgebraElement f{std::move(g), {}};
  if (std::abs(coeff) > 0) f.terms[x] = coeff;
  return f;
}

namespace {
void prune(std::map<int, cplx>& terms, double eps) {
  for (auto it = terms.begin(); it != terms.end();)
    it = std::abs(it->second) < eps ? terms.erase(it) : std::next(it);
}
}  // namespace

AlgebraElement from_terms(GroupPtr g, std::map<int, cplx> terms, double eps) {
  for (const auto& [k, v] : terms) {
    (void)v;
    if (k < 0 || k >= g->order()) throw Error(errc::parse_error, "element index out of range");
  }
  prune(terms, eps);
  return AlgebraElement{std::move(g), std::move(terms)};
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g, double eps) {
  if (!same_group(f.group, g.group)) throw Error(errc::group_mismatch, "add");
  std::map<int, cplx> t = f.terms;
  for (const auto& [k, v] : g.terms) t[k] += v;
  prune(t, eps);
  return AlgebraElement{f.group, std::move(t)};
}

AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g, double eps) {
  return add(f, scale(g, -1.0, eps), eps);
}

AlgebraElement scale(const AlgebraElement& f, cplx c, double eps) {
  std::map<int, cplx> t;
  for (const auto& [k, v] : f.terms) {
    cplx w = v * c;
    if (std::abs(w) >= eps) t[k] = w;
  }
  return AlgebraElement{f.group, std::move(t)};
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g, double eps) {
  if (!same_group(f.group, g.group)) throw Error(errc::group_mismatch, "convolve");
  const FiniteGroup& grp = *f.group;
  std::map<int, cplx> t;
  for (const auto& [s, fs] : f.terms)
    for (const auto& [u, gu] : g.terms) t[grp.op(s, u)] += fs * gu;
  prune(t, eps);
  return AlgebraElement{f.group, std::move(t)};
}

AlgebraElement power(const AlgebraElement& f, int n, double eps) {
  if (n < 1) throw Error(errc::unsupported, "power requires n >= 1");
  AlgebraElement acc = f;
  for (int i = 1; i < n; ++i) acc = convolve(acc, f, eps);
  return acc;
}

AlgebraElement involution(const AlgebraElement& f) {
  const FiniteGroup& grp = *f.group;
  std::map<int, cplx> t;
  for (const auto& [s, v] : f.terms) t[grp.inv(s)] = std::conj(v);
  return AlgebraElement{f.group, std::move(t)};
}

AlgebraElement abs_element(const AlgebraElement& f) {
  std::map<int, cplx> t;
  for (const auto& [s, v] : f.terms) t[s] = cplx{std::abs(v), 0.0};
  return AlgebraElement{f.group, std::move(t)};
}

std::vector<int> support(const AlgebraElement& f) {
  std::vector<int> s;
  s.reserve(f.terms.size());
  for (const auto& [k, v] : f.terms) {
    (void)v;
    s.push_back(k);
  }
  return s;
}

double norm1(const AlgebraElement& f) {
  double n = 0;
  for (const auto& [k, v] : f.terms) {
    (void)k;
    n += std::abs(v);
  }
  return n;
}

double norm_w(const AlgebraElement& f, const Weight& w) {
  if (w.is_z()) throw Error(errc::unsupported, "norm_w needs a finite weight");
  if (!same_group(f.group, w.group)) throw Error(errc::group_mismatch, "norm_w");
  double n = 0;
  for (const auto& [k, v] : f.terms) n += std::abs(v) * w.at(k);
  return n;
}

bool approx_equal(const AlgebraElement& f, const AlgebraElement& g, double eps) {
  if (!same_group(f.group, g.group)) return false;
  for (const auto& [k, v] : f.terms)
    if (std::abs(v - g.at(k)) > eps) return false;
  for (const auto& [k, v] : g.terms)
    if (std::abs(v - f.at(k)) > eps) return false;
  return true;
}

bool is_positive_element(const AlgebraElement& f, double eps) {
  for (const auto& [k, v] : f.terms) {
    (void)k;
    if (std::abs(v.imag()) > eps || v.real() < -eps) return false;
  }
  return true;
}

bool is_idempotent(const AlgebraElement& f, double eps) {
  return approx_equal(convolve(f, f, eps * 1e-3), f, eps);
}

std::string quantized_key(const AlgebraElement& f) {
  std::ostringstream os;
  for (const auto& [k, v] : f.terms) {
    long long re = quantize12(v.real());
    long long im = quantize12(v.imag());
    if (re == 0 && im == 0) continue;
    os << k << ':' << re << ':' << im << ';';
  }
  return os.str();
}

// ---- Z elements ------------------------------------------------------------

ZElement z_delta(long long x, cplx coeff) {
  ZElement f;
  if (std::abs(coeff) > 0) f.terms[x] = coeff;
  return f;
}

ZElement z_from_terms(std::map<long long, cplx> terms, double eps) {
  for (auto it = terms.begin(); it != terms.end();)
    it = std::abs(it->second) < eps ? terms.erase(it) : std::next(it);
  return ZElement{std::move(terms)};
}

ZElement z_convolve(const ZElement& f, const ZElement& g, double eps) {
  std::map<long long, cplx> t;
  for (const auto& [s, fs] : f.terms)
    for (const auto& [u, gu] : g.terms) t[s + u] += fs * gu;
  return z_from_terms(std::move(t), eps);
}

double z_norm1(const ZElement& f) {
  double n = 0;
  for (const auto& [k, v] : f.terms) {
    (void)k;
    n += std::abs(v);
  }
  return n;
}

double z_norm_w(const ZElement& f, const Weight& w) {
  double n = 0;
  for (const auto& [k, v] : f.terms) n += std::abs(v) * w.z_at(k);
  return n;
}

}  // namespace nmg
