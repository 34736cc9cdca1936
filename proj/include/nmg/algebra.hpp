#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nmg/group.hpp"

namespace nmg {

// ---- weights ---------------------------------------------------------------

// Submultiplicative weight w: G -> (0,inf) with w(e)=1. Table-backed for
// finite groups; formula-backed for Z (w(s)=b^s or b^|s|).
struct Weight {
  enum class Kind { finite, z_exp, z_absexp };
  Kind kind = Kind::finite;
  GroupPtr group;              // finite only
  std::vector<double> values;  // finite only
  double base = 1.0;           // Z formulas

  bool is_z() const { return kind != Kind::finite; }
  double at(int g) const { return values[g]; }
  double z_at(long long s) const;
  bool is_trivial(double eps = kDefaultEps) const;
};

Weight trivial_weight(GroupPtr g);
Weight finite_weight(GroupPtr g, std::vector<double> values);  // validates
Weight z_weight(const std::string& formula);                   // "exp:b" | "absexp:b"

struct WeightReport {
  bool valid = true;
  std::vector<std::pair<int, int>> violations;  // pairs (s,t) with w(st) > w(s)w(t)
  std::string detail;
};

// Exhaustive pair check for finite groups; Z formulas validated symbolically.
WeightReport validate_weight(const GroupPtr& g, const std::vector<double>& values,
                             double eps = kDefaultEps);
WeightReport validate_z_weight(Weight::Kind kind, double base);

bool is_multiplicative_on(const Weight& w, const Subgroup& h, double eps = kDefaultEps);

// Coset weight on H/K for K normal with w == 1 on K; verifies constancy on
// cosets. The returned weight lives on quotient(whole(G), K).
Weight quotient_weight(const Weight& w, const Subgroup& k, const QuotientGroup& q,
                       double eps = kDefaultEps);
// Same, building the quotient internally (K normal in the whole group).
Weight quotient_weight(const Weight& w, const Subgroup& k, double eps = kDefaultEps);

// ---- algebra elements ------------------------------------------------------

// Finitely supported complex coefficient function on a finite group; the
// element of C(G,w). Zero coefficients are never stored.
struct AlgebraElement {
  GroupPtr group;
  std::map<int, cplx> terms;

  bool is_zero() const { return terms.empty(); }
  cplx at(int g) const;
};

AlgebraElement zero_element(GroupPtr g);
AlgebraElement delta(GroupPtr g, int x, cplx coeff = 1.0);
AlgebraElement from_terms(GroupPtr g, std::map<int, cplx> terms, double eps = kDefaultEps);

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g, double eps = kDefaultEps);
AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g, double eps = kDefaultEps);
AlgebraElement scale(const AlgebraElement& f, cplx c, double eps = kDefaultEps);

// (f*g)(u) = sum_{st=u} f(s)g(t)
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g,
                        double eps = kDefaultEps);

AlgebraElement power(const AlgebraElement& f, int n, double eps = kDefaultEps);

// f*(s) = conj(f(s^{-1}))
AlgebraElement involution(const AlgebraElement& f);

// |f|(s) = |f(s)|
AlgebraElement abs_element(const AlgebraElement& f);

std::vector<int> support(const AlgebraElement& f);

double norm1(const AlgebraElement& f);
double norm_w(const AlgebraElement& f, const Weight& w);

bool approx_equal(const AlgebraElement& f, const AlgebraElement& g, double eps = kDefaultEps);

// Nonnegative real coefficients (within eps).
bool is_positive_element(const AlgebraElement& f, double eps = kDefaultEps);

bool is_idempotent(const AlgebraElement& f, double eps = kDefaultEps);

// Canonical quantized key (12 decimal digits) for hashable orbit membership.
std::string quantized_key(const AlgebraElement& f);

// ---- Z-backed elements -----------------------------------------------------

struct ZElement {
  std::map<long long, cplx> terms;
};

ZElement z_delta(long long x, cplx coeff = 1.0);
ZElement z_from_terms(std::map<long long, cplx> terms, double eps = kDefaultEps);
ZElement z_convolve(const ZElement& f, const ZElement& g, double eps = kDefaultEps);
double z_norm1(const ZElement& f);
double z_norm_w(const ZElement& f, const Weight& w);

}  // namespace nmg
