#pragma once

#include <optional>

#include "nmg/algebra.hpp"

namespace nmg {

// A norm-one idempotent rho*m_K: coefficient rho(k)/|K| at k in K.
struct NormOneIdempotent {
  Subgroup K;
  Character rho;
  AlgebraElement element;
};

// m_K = (1/|K|) sum_{k in K} d_k
AlgebraElement make_mK(const Subgroup& k);
NormOneIdempotent make_rho_mK(const Subgroup& k, const Character& rho, double eps = kDefaultEps);

// Reads K = support(f), rho(k) = |K| f(k) off a norm-one idempotent and
// validates the structure. Throws NotIdempotent / NotNormOne /
// InconsistentStructure.
NormOneIdempotent classify_norm_one_idempotent(const AlgebraElement& f,
                                               double eps = kDefaultEps);

// { (K, rho) : K <= G, rho in characters(K) }, deterministic order.
std::vector<NormOneIdempotent> enumerate_norm_one_idempotents(
    const GroupPtr& g, int size_cap = kDefaultGroupCap, double eps = kDefaultEps);

struct NmSetReport {
  bool ok = true;
  int witness_a = -1, witness_b = -1;    // indices of the violating pair
  bool criteria_agree = true;            // norm test vs |.| test, must agree
  std::string detail;
};

// True iff ||f*g||_1 = ||f||_1 ||g||_1 for all ordered pairs; cross-checks
// the equivalent |f*g| = |f|*|g| criterion.
NmSetReport is_nm_set(const std::vector<AlgebraElement>& elems, double eps = kDefaultEps);

struct OmegaMember {
  cplx scalar;  // alpha
  int elem;     // t, a parent-group index
};

// Structured output of the NM-subgroup classification: Gamma is parametrized
// by (alpha, t) -> alpha d_t * rho m_K with kernel Omega_rho.
struct NMClassification {
  Subgroup H;                            // s(Gamma)
  Subgroup K;                            // support of the identity
  Character rho;
  AlgebraElement iota;                   // rho m_K
  std::vector<AlgebraElement> members;   // normalized closure, discovery order
  std::vector<OmegaMember> omega_members;        // canonical (alpha, t) per member
  std::vector<int> omega_generators;             // indices into omega_members
  std::vector<double> scalar_generators;         // R+ part when generators are not norm-one
};

// Closes the generated convolution group (scalars factored out), finds the
// identity, classifies it, and emits the Omega-data. Errors: NotNM (reported
// first, with witness), NotAGroup, ClosureCapExceeded.
NMClassification classify_nm_subgroup(const std::vector<AlgebraElement>& generators,
                                      int closure_cap = kDefaultClosureCap,
                                      double eps = kDefaultEps);

// Writes f as alpha d_t * rho m_K with t the minimal support index; throws
// InconsistentStructure when f does not have that shape.
OmegaMember decompose_in_gamma(const AlgebraElement& f, const Subgroup& k, const Character& rho,
                               double eps = kDefaultEps);

// True iff the weight is multiplicative on H = s(Gamma).
bool is_nm_omega_subgroup(const NMClassification& cls, const Weight& w,
                          double eps = kDefaultEps);

struct PInvResult {
  std::optional<std::pair<double, int>> form;  // (alpha, s) when f = alpha d_s, alpha > 0
  bool positive = false;
  bool invertible = false;
  bool inverse_positive = false;
  std::optional<AlgebraElement> inverse;
};

// PInv(G) = { alpha d_s }: returns the form when present, and independently
// verifies positivity/invertibility (Fourier inverse on abelian groups, a
// regular-representation solve otherwise).
PInvResult positive_invertible_check(const AlgebraElement& f, double eps = kDefaultEps);

// Convolution inverse, empty when singular.
std::optional<AlgebraElement> convolution_inverse(const AlgebraElement& f,
                                                  double eps = kDefaultEps);

}  // namespace nmg
