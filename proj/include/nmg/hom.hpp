#pragma once

#include <optional>

#include "nmg/nm.hpp"

namespace nmg {

// gamma: F -> C^x. Finite groups carry integer exponents into mu_m; the
// Z backend carries geometric forms gamma(s) = c^s (c > 0) or z^s.
struct ScalarHom {
  enum class Kind { character, positive_geometric, complex_geometric };
  Kind kind = Kind::character;
  GroupPtr domain;             // finite kind only
  int modulus = 1;             // finite kind
  std::vector<int> exponents;  // finite kind, per element
  cplx zbase{1.0, 0.0};        // geometric kinds (real for positive)

  cplx value(int x) const { return root_of_unity(exponents[x], modulus); }
  cplx z_value(long long s) const;
  bool is_trivial() const;
  bool is_positive() const;
};

ScalarHom trivial_scalar_hom(GroupPtr f);
ScalarHom character_scalar_hom(const Character& chi);  // chi on the whole group
ScalarHom z_scalar_hom(const std::string& spec);       // "exp:c" | "zexp:re,im"

// An algebra homomorphism CF -> CG, determined by its delta images.
struct AlgebraHomomorphism {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<AlgebraElement> delta_images;  // per element of F

  const AlgebraElement& image(int x) const { return delta_images[x]; }
};

// Multiplicativity (all pairs) + idempotent image of the identity.
void validate_hom(const AlgebraHomomorphism& phi, double eps = kDefaultEps);

// Extends generator images multiplicatively and validates every relation.
// Errors: NotGenerating, InconsistentImages.
AlgebraHomomorphism hom_from_images(const GroupPtr& f, const GroupPtr& g,
                                    const std::map<int, AlgebraElement>& generator_images,
                                    double eps = kDefaultEps);

// Basic homomorphisms.
AlgebraHomomorphism M_gamma(const ScalarHom& gamma);
AlgebraHomomorphism j_theta(const GroupHom& theta);
AlgebraHomomorphism j_gamma_theta(const ScalarHom& gamma, const GroupHom& theta);

// S_K: C(H/K) -> C(ambient of H): sK -> d_s * m_K. The domain is the coset
// group of the supplied quotient.
AlgebraHomomorphism S_K(const QuotientGroup& q, const Subgroup& k);

AlgebraHomomorphism compose(const AlgebraHomomorphism& outer, const AlgebraHomomorphism& inner,
                            double eps = kDefaultEps);
AlgebraHomomorphism identity_hom(const GroupPtr& g);
AlgebraElement apply(const AlgebraHomomorphism& phi, const AlgebraElement& f,
                     double eps = kDefaultEps);

struct NmHomReport {
  bool is_nm = true;
  int witness_a = -1, witness_b = -1;  // domain elements whose images violate NM
  std::string detail;
};

NmHomReport is_nm_hom(const AlgebraHomomorphism& phi, double eps = kDefaultEps);
bool is_positive_hom(const AlgebraHomomorphism& phi, double eps = kDefaultEps);

// Quantized delta-image table, the dedup key for enumerations.
std::string hom_key(const AlgebraHomomorphism& phi);

enum class FactorForm { main, extended_character, positive, standard };

// A factorization of an algebra homomorphism into basic homomorphisms; the
// recomposition of `factors` (outermost last) equals the source on every
// delta.
struct Factorization {
  FactorForm form = FactorForm::main;
  Subgroup H;
  Subgroup K;
  Character rho;
  int torus_order = 1;               // M, scalar torus mu_M (main form)
  GroupPtr middle;                   // mu_M x H (main) or materialized H
  QuotientGroup quot;                // (mu_M x H)/Omega_rho or H/K
  GroupHom theta;                    // F -> quot.group
  std::optional<Character> rho_H;    // extended-character form
  std::optional<ScalarHom> gamma;    // extended-character / positive / standard
  std::vector<AlgebraHomomorphism> factors;  // innermost first
  std::optional<double> bound;       // L value where applicable
};

// phi = j_{gamma_x, theta_H} o S_{Omega_rho} o j_theta with the scalar torus
// realized as mu_M, M = exp(F) * ord(rho). Errors: NotNM;
// InconsistentStructure / RecompositionMismatch must never fire.
Factorization factorize_main(const AlgebraHomomorphism& phi, int closure_cap = kDefaultClosureCap,
                             double eps = kDefaultEps);

// phi = M_{rho_H} o S_K o j_{gamma, theta_K}, available when rho extends to a
// character of H (always, when H is abelian). Errors: NoExtension, NotNM.
Factorization factorize_extended_character(const AlgebraHomomorphism& phi,
                                           int closure_cap = kDefaultClosureCap,
                                           double eps = kDefaultEps);

// phi = S_K o j_theta with gamma == 1 (finite domain). Errors: NotPositive.
Factorization classify_positive(const AlgebraHomomorphism& phi,
                                int closure_cap = kDefaultClosureCap, double eps = kDefaultEps);

// All NM homomorphisms CF -> CG, swept over (H <= G, K normal in H with the
// centrality condition, rho, theta into (mu_M x H)/Omega_rho), deduplicated,
// discovery order.
std::vector<AlgebraHomomorphism> enumerate_nm_homs(const GroupPtr& f, const GroupPtr& g,
                                                   int size_cap = kDefaultGroupCap,
                                                   double eps = kDefaultEps);

// All positive homomorphisms CF -> CG = { S_K o j_theta }.
std::vector<AlgebraHomomorphism> enumerate_positive_homs(const GroupPtr& f, const GroupPtr& g,
                                                         int size_cap = kDefaultGroupCap,
                                                         double eps = kDefaultEps);

// ---- standard pairs and the isomorphism theorems ---------------------------

struct StandardIsoReport {
  double L = 1.0;                // sup |gamma(x)| w_G(theta(x)) / w_F(x)
  double l = 1.0;                // inf of the same ratio
  bool is_standard_hom = false;  // L < infinity
  bool is_standard_iso = false;  // theta bijective, 0 < l, L < infinity
  bool is_positive = false;      // gamma into (0, infinity)
  bool is_linked = false;        // |gamma| = w_F / (w_G o theta)
};

StandardIsoReport standard_iso_check(const ScalarHom& gamma, const GroupHom& theta,
                                     const Weight& wf, const Weight& wg,
                                     double eps = kDefaultEps);

// Z backend: theta(s) = a*s, geometric gamma, formula weights; sup/inf in
// closed form.
StandardIsoReport standard_iso_check_z(const ScalarHom& gamma, long long theta_a,
                                       const Weight& wf, const Weight& wg,
                                       double eps = kDefaultEps);

ZElement apply_standard_z(const ScalarHom& gamma, long long theta_a, const ZElement& f,
                          double eps = kDefaultEps);

struct IsoTheoremReport {
  bool bijective = false;
  bool positive = false;
  bool bipositive = false;
  bool isometric_on_basis = false;  // ||phi(d_x)||_{w_G} = w_F(x) for all x
  bool nm_forward = false;
  bool nm_inverse = false;
  std::optional<Factorization> standard_form;  // (gamma, theta) when extracted
  bool linked_verified = false;                // |gamma| = w_F / (w_G o theta)
  std::optional<AlgebraHomomorphism> inverse;
  std::string detail;
};

// Checks the isomorphism theorems on a bijective homomorphism: positive =>
// bipositive with gamma == 1; isometric + NM both ways => linked standard
// form. Errors: NotBijective.
IsoTheoremReport iso_theorem_checks(const AlgebraHomomorphism& phi, const Weight& wf,
                                    const Weight& wg, double eps = kDefaultEps);

// Inverse of a bijective homomorphism via the delta-image coefficient matrix.
std::optional<AlgebraHomomorphism> hom_inverse(const AlgebraHomomorphism& phi,
                                               double eps = kDefaultEps);

}  // namespace nmg
