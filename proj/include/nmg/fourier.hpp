#pragma once

#include "nmg/hom.hpp"

namespace nmg {

// Dual of a finite abelian group: all |G| characters, in the deterministic
// characters() order (trivial character first).
struct DualGroup {
  GroupPtr base;
  std::vector<Character> chars;

  int order() const { return static_cast<int>(chars.size()); }
};

DualGroup dual_group(const GroupPtr& g);  // rejects nonabelian groups

struct Spectrum {
  GroupPtr base;
  std::vector<cplx> values;  // per dual character
};

// fhat(chi) = sum_s f(s) chi(s); turns convolution into pointwise product.
Spectrum fourier(const DualGroup& dual, const AlgebraElement& f);
AlgebraElement inverse_fourier(const DualGroup& dual, const Spectrum& s,
                               double eps = kDefaultEps);

// All 2^|G| idempotents e_S = inverse transform of the indicator of
// S subset of the dual; ordered by subset bitmask. |G| <= cap.
std::vector<AlgebraElement> enumerate_idempotents(const GroupPtr& g,
                                                  int cap = kDefaultIdempotentEnumCap,
                                                  double eps = kDefaultEps);

// The unital algebra isomorphism CF -> CG with
// fourier_G(phi(f)) = fourier_F(f) o pairing^{-1}; pairing[i] is the dual-G
// index matched to dual-F index i.
AlgebraHomomorphism transport_isomorphism(const GroupPtr& f, const GroupPtr& g,
                                          const std::vector<int>& pairing,
                                          double eps = kDefaultEps);

// The pairing used by the C4 -> C2xC2 demo: chi_j -> chi_{(j mod 2, j div 2)}.
std::vector<int> canonical_c4_klein_pairing();

}  // namespace nmg
