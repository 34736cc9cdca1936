#include <cmath>
#include <set>

#include "doctest.h"
#include "nmg/fourier.hpp"
#include "nmg/nm.hpp"

using namespace nmg;

TEST_CASE("dual group orthogonality") {
  for (const char* spec : {"C4", "C2xC2", "C6", "C8", "C2xC4"}) {
    auto g = make_group(spec);
    auto d = dual_group(g);
    REQUIRE(d.order() == g->order());
    for (int i = 0; i < d.order(); ++i)
      for (int j = 0; j < d.order(); ++j) {
        cplx acc{0, 0};
        for (int s = 0; s < g->order(); ++s)
          acc += d.chars[i].value(s) * std::conj(d.chars[j].value(s));
        cplx expect = i == j ? cplx(g->order(), 0) : cplx(0, 0);
        REQUIRE(std::abs(acc - expect) < 1e-9);
      }
  }
  CHECK_THROWS_AS(dual_group(make_group("S3")), Error);
}

TEST_CASE("transform basics") {
  auto c4 = make_group("C4");
  auto d = dual_group(c4);
  // delta_0 transforms to the all-ones spectrum
  auto s = fourier(d, delta(c4, 0));
  for (auto v : s.values) CHECK(std::abs(v - cplx{1, 0}) < 1e-12);

  // m_K for K = {0,2}: 1 on characters trivial on K, 0 elsewhere
  auto k = subgroup_from_members(c4, {0, 2});
  auto mk = make_mK(k);
  auto smk = fourier(d, mk);
  for (int ci = 0; ci < 4; ++ci) {
    bool trivial_on_k = d.chars[ci].exponent_of(2) == 0;
    CHECK(std::abs(smk.values[ci] - (trivial_on_k ? cplx{1, 0} : cplx{0, 0})) < 1e-12);
  }
}

TEST_CASE("inverse transform round trip and convolution theorem") {
  SeededRng rng(kDefaultSeed);
  for (const char* spec : {"C4", "C2xC2", "C6", "C8"}) {
    auto g = make_group(spec);
    auto d = dual_group(g);
    for (int t = 0; t < 50; ++t) {
      std::map<int, cplx> ft, gt;
      for (int i = 0; i < 3; ++i) {
        ft[rng.below(g->order())] += rng.complex_in_box();
        gt[rng.below(g->order())] += rng.complex_in_box();
      }
      auto f = from_terms(g, ft);
      auto h = from_terms(g, gt);
      CHECK(approx_equal(inverse_fourier(d, fourier(d, f)), f, 1e-9));
      auto lhs = fourier(d, convolve(f, h));
      auto rf = fourier(d, f);
      auto rh = fourier(d, h);
      for (int ci = 0; ci < d.order(); ++ci)
        REQUIRE(std::abs(lhs.values[ci] - rf.values[ci] * rh.values[ci]) < 1e-9);
    }
  }
}

TEST_CASE("idempotent enumeration: counts, idempotency, distinctness") {
  auto c2 = make_group("C2");
  auto ids2 = enumerate_idempotents(c2);
  REQUIRE(ids2.size() == 4);
  // 0, d0, (d0+d1)/2, (d0-d1)/2
  CHECK(ids2[0].is_zero());
  bool saw_delta0 = false, saw_mk = false, saw_rmk = false;
  for (const auto& e : ids2) {
    if (approx_equal(e, delta(c2, 0))) saw_delta0 = true;
    if (approx_equal(e, add(delta(c2, 0, 0.5), delta(c2, 1, 0.5)))) saw_mk = true;
    if (approx_equal(e, sub(delta(c2, 0, 0.5), delta(c2, 1, 0.5)))) saw_rmk = true;
  }
  CHECK(saw_delta0);
  CHECK(saw_mk);
  CHECK(saw_rmk);

  CHECK(enumerate_idempotents(make_group("C4")).size() == 16);
  CHECK_THROWS_AS(enumerate_idempotents(make_group("S4")), Error);  // nonabelian/cap

  for (const char* spec : {"C4", "C2xC2", "C6"}) {
    auto g = make_group(spec);
    auto ids = enumerate_idempotents(g);
    CHECK(ids.size() == (1u << g->order()));
    std::set<std::string> keys;
    for (const auto& e : ids) {
      CHECK(approx_equal(convolve(e, e), e, 1e-9));
      CHECK(keys.insert(quantized_key(e)).second);
    }
  }
}

TEST_CASE("oracle idempotent in CC3 with two nontrivial characters") {
  auto c3 = make_group("C3");
  auto ids = enumerate_idempotents(c3);
  // S = {chi_1, chi_2} is bitmask 0b110 = 6
  auto e = ids[6];
  auto expect = from_terms(
      c3, {{0, {2.0 / 3, 0}}, {1, {-1.0 / 3, 0}}, {2, {-1.0 / 3, 0}}});
  CHECK(approx_equal(e, expect, 1e-12));
  CHECK(norm1(e) == doctest::Approx(4.0 / 3));
}

TEST_CASE("transport isomorphism C4 -> C2xC2") {
  auto c4 = make_group("C4");
  auto klein = make_group("C2xC2");
  auto phi = transport_isomorphism(c4, klein, canonical_c4_klein_pairing());

  // phi(d_0) = d_{(0,0)} and phi(m_C4) = m_klein
  CHECK(approx_equal(phi.delta_images[0], delta(klein, 0), 1e-12));
  auto m_c4 = make_mK(whole_group(c4));
  auto m_klein = make_mK(whole_group(klein));
  CHECK(approx_equal(apply(phi, m_c4), m_klein, 1e-12));

  // phi(d_1) = ((1+i)/2) d_{(1,0)} + ((1-i)/2) d_{(1,1)}
  auto img1 = phi.delta_images[1];
  REQUIRE(img1.terms.size() == 2);
  CHECK(std::abs(img1.at(2) - cplx{0.5, 0.5}) < 1e-12);   // (1,0)
  CHECK(std::abs(img1.at(3) - cplx{0.5, -0.5}) < 1e-12);  // (1,1)
  CHECK(norm1(img1) == doctest::Approx(std::sqrt(2.0)));

  // identity pairing on C4 gives the identity map
  auto id = transport_isomorphism(c4, c4, {0, 1, 2, 3});
  for (int x = 0; x < 4; ++x) CHECK(approx_equal(id.delta_images[x], delta(c4, x), 1e-12));

  // bijective and multiplicative, but not NM
  CHECK(hom_inverse(phi).has_value());
  auto nm = is_nm_hom(phi);
  CHECK_FALSE(nm.is_nm);
  CHECK(nm.witness_a >= 0);
}

TEST_CASE("oracle equivalence: norm-one idempotents are exactly rho m_K") {
  for (const char* spec : {"C2", "C3", "C4", "C5", "C2xC2", "C6", "C8", "C2xC4", "C2xC2xC2"}) {
    auto g = make_group(spec);
    auto oracle = enumerate_idempotents(g);
    std::set<std::string> oracle_norm_one;
    std::set<std::string> oracle_positive;
    for (const auto& e : oracle) {
      if (e.is_zero() || norm1(e) > 1 + 1e-9) continue;
      oracle_norm_one.insert(quantized_key(e));
      if (is_positive_element(e)) oracle_positive.insert(quantized_key(e));
    }
    std::set<std::string> constructed;
    std::set<std::string> constructed_positive;
    for (const auto& it : enumerate_norm_one_idempotents(g)) {
      constructed.insert(quantized_key(it.element));
      if (it.rho.is_trivial()) constructed_positive.insert(quantized_key(it.element));
    }
    REQUIRE(oracle_norm_one == constructed);
    REQUIRE(oracle_positive == constructed_positive);  // positive ones are exactly m_K
  }
}

