#include <cmath>
#include <set>

#include "doctest.h"
#include "nmg/fourier.hpp"
#include "nmg/nm.hpp"

using namespace nmg;

namespace {

Character character_with(const Subgroup& k, int member, int want_exponent_num, int want_den) {
  // find the character whose exponent at `member` equals num/den of a turn
  for (const auto& ch : characters(k)) {
    long long lhs = static_cast<long long>(ch.exponent_of(member)) * want_den;
    long long rhs = static_cast<long long>(want_exponent_num) * ch.modulus;
    if (lhs == rhs) return ch;
  }
  throw std::runtime_error("character not found");
}

}  // namespace

TEST_CASE("make_mK and make_rho_mK") {
  auto c4 = make_group("C4");
  auto k = subgroup_from_members(c4, {0, 2});
  CHECK(approx_equal(make_mK(k), add(delta(c4, 0, 0.5), delta(c4, 2, 0.5))));

  auto rho = character_with(k, 2, 1, 2);  // rho(2) = -1
  auto rmk = make_rho_mK(k, rho);
  CHECK(approx_equal(rmk.element, sub(delta(c4, 0, 0.5), delta(c4, 2, 0.5))));
  CHECK(norm1(rmk.element) == doctest::Approx(1.0));
  CHECK(is_idempotent(rmk.element));

  // K = C3 with rho(k) = zeta_3^k: still an idempotent
  auto c3 = make_group("C3");
  auto rho3 = character_with(whole_group(c3), 1, 1, 3);
  auto r3 = make_rho_mK(whole_group(c3), rho3);
  CHECK(approx_equal(convolve(r3.element, r3.element), r3.element));
}

TEST_CASE("classify_norm_one_idempotent round trips and errors") {
  auto c4 = make_group("C4");
  auto rmk = sub(delta(c4, 0, 0.5), delta(c4, 2, 0.5));
  auto cls = classify_norm_one_idempotent(rmk);
  CHECK(cls.K.members == std::vector<int>{0, 2});
  CHECK(std::abs(cls.rho.value(2) - cplx{-1, 0}) < 1e-12);

  auto triv = classify_norm_one_idempotent(delta(c4, 0));
  CHECK(triv.K.members == std::vector<int>{0});
  CHECK(triv.rho.is_trivial());

  // the C3 oracle idempotent with a two-character spectrum has norm 4/3
  auto c3 = make_group("C3");
  auto e = from_terms(c3, {{0, {2.0 / 3, 0}}, {1, {-1.0 / 3, 0}}, {2, {-1.0 / 3, 0}}});
  CHECK_THROWS_WITH_AS(classify_norm_one_idempotent(e), doctest::Contains("1.33"), Error);
  try {
    classify_norm_one_idempotent(e);
  } catch (const Error& err) {
    CHECK(err.code == errc::not_norm_one);
  }

  CHECK_THROWS_AS(classify_norm_one_idempotent(delta(c4, 1)), Error);  // not idempotent
  CHECK_THROWS_AS(classify_norm_one_idempotent(zero_element(c4)), Error);
}

TEST_CASE("classification round trip over every (K, rho) of the corpus sample") {
  for (const char* spec : {"C4", "C2xC2", "D4", "Q8", "S3"}) {
    auto g = make_group(spec);
    for (const auto& it : enumerate_norm_one_idempotents(g)) {
      CHECK(norm1(it.element) == doctest::Approx(1.0));
      CHECK(is_idempotent(it.element));
      auto back = classify_norm_one_idempotent(it.element);
      REQUIRE(back.K.members == it.K.members);
      for (int kk : it.K.members) REQUIRE(std::abs(back.rho.value(kk) - it.rho.value(kk)) < 1e-9);
    }
  }
}

TEST_CASE("enumerate_norm_one_idempotents counts") {
  CHECK(enumerate_norm_one_idempotents(make_group("C4")).size() == 7);
  CHECK(enumerate_norm_one_idempotents(make_group("C2xC2")).size() == 11);
  CHECK(enumerate_norm_one_idempotents(make_group("C1")).size() == 1);
}

TEST_CASE("is_nm_set") {
  auto c4 = make_group("C4");
  std::vector<AlgebraElement> deltas;
  for (int x = 0; x < 4; ++x) deltas.push_back(delta(c4, x));
  auto r = is_nm_set(deltas);
  CHECK(r.ok);
  CHECK(r.criteria_agree);

  // scalar multiples of deltas stay NM
  auto c2 = make_group("C2");
  std::vector<AlgebraElement> scaled{delta(c2, 1, 2.0), delta(c2, 0, 4.0), delta(c2, 1, 0.5),
                                     delta(c2, 0)};
  CHECK(is_nm_set(scaled).ok);

  // f = (3/5) d0 + (4/5) d1 and its convolution inverse violate NM
  auto f = add(delta(c2, 0, 0.6), delta(c2, 1, 0.8));
  auto finv = convolution_inverse(f);
  REQUIRE(finv.has_value());
  CHECK(approx_equal(*finv, add(delta(c2, 0, -15.0 / 7), delta(c2, 1, 20.0 / 7)), 1e-9));
  auto bad = is_nm_set({f, *finv});
  CHECK_FALSE(bad.ok);
  CHECK(bad.criteria_agree);
  CHECK(bad.witness_a >= 0);

  CHECK_THROWS_AS(is_nm_set({zero_element(c2)}), Error);
}

TEST_CASE("classify_nm_subgroup: the (1/2)(d1 - d3) example in CC4") {
  auto c4 = make_group("C4");
  auto gen = sub(delta(c4, 1, 0.5), delta(c4, 3, 0.5));
  auto cls = classify_nm_subgroup({gen});
  CHECK(cls.members.size() == 4);  // {+-rho m_K, +-(1/2)(d1-d3)}
  CHECK(cls.H.members == std::vector<int>{0, 1, 2, 3});
  CHECK(cls.K.members == std::vector<int>{0, 2});
  CHECK(std::abs(cls.rho.value(2) - cplx{-1, 0}) < 1e-12);
  // omega scalars are roots of unity, and recomposition reproduces Gamma
  std::set<std::string> recomposed;
  for (size_t i = 0; i < cls.members.size(); ++i) {
    const auto& om = cls.omega_members[i];
    CHECK(std::abs(std::abs(om.scalar) - 1.0) < 1e-9);
    auto rec = scale(convolve(delta(c4, om.elem, om.scalar), cls.iota), 1.0);
    CHECK(approx_equal(rec, cls.members[i], 1e-9));
    recomposed.insert(quantized_key(rec));
  }
  CHECK(recomposed.size() == cls.members.size());
  CHECK(cls.scalar_generators.empty());
  // a single generator suffices
  CHECK(cls.omega_generators.size() == 1);
}

TEST_CASE("classify_nm_subgroup: delta subgroup and errors") {
  auto c4 = make_group("C4");
  auto cls = classify_nm_subgroup({delta(c4, 1)});
  CHECK(cls.H.members == std::vector<int>{0, 1, 2, 3});
  CHECK(cls.K.members == std::vector<int>{0});
  CHECK(cls.rho.is_trivial());
  CHECK(cls.members.size() == 4);

  auto c2 = make_group("C2");
  auto f = add(delta(c2, 0, 0.6), delta(c2, 1, 0.8));
  try {
    classify_nm_subgroup({f});
    FAIL("expected NotNM");
  } catch (const Error& err) {
    CHECK(err.code == errc::not_nm);
  }

  // scalars are factored out: 2 d1 classifies with scalar generators reported
  auto cls2 = classify_nm_subgroup({delta(c2, 1, 2.0)});
  CHECK(cls2.scalar_generators == std::vector<double>{2.0});
  CHECK(cls2.K.members == std::vector<int>{0});
  CHECK(cls2.H.members == std::vector<int>{0, 1});
}

TEST_CASE("positive generators collapse to trivial character") {
  auto d4 = make_group("D4");
  auto k = subgroup_from_members(d4, {0, 2});
  std::vector<AlgebraElement> gens;
  for (int x : {1, 4}) gens.push_back(convolve(delta(d4, x), make_mK(k)));
  auto cls = classify_nm_subgroup(gens);
  CHECK(cls.rho.is_trivial());
  CHECK(cls.K.members == std::vector<int>{0, 2});
  for (const auto& om : cls.omega_members) {
    CHECK(std::abs(om.scalar.imag()) < 1e-9);
    CHECK(om.scalar.real() > 0);
  }
}

TEST_CASE("NM_omega verdicts against the (1,2,1,2) weight") {
  auto c4 = make_group("C4");
  auto w = finite_weight(c4, {1, 2, 1, 2});
  // Delta_C4 with trivial weight: NM_omega
  auto deltas = classify_nm_subgroup({delta(c4, 1)});
  CHECK(is_nm_omega_subgroup(deltas, trivial_weight(c4)));
  // with (1,2,1,2): not multiplicative on H = C4
  CHECK_FALSE(is_nm_omega_subgroup(deltas, w));
  // Gamma supported in K = {0,2}: w == 1 on H = {0,2}, so NM_omega
  auto k = subgroup_from_members(c4, {0, 2});
  auto rho = characters(k)[1];
  auto inner = classify_nm_subgroup({make_rho_mK(k, rho).element});
  CHECK(is_nm_omega_subgroup(inner, w));
}

TEST_CASE("NM without NM_omega: the constant m_{C4} image under (1,2,1,2)") {
  // Gamma = {m_{C4}} is an NM subgroup, but w = (1,2,1,2) is not identically
  // 1 on its support subgroup H = C4, so it is not NM_omega
  auto c4 = make_group("C4");
  auto w = finite_weight(c4, {1, 2, 1, 2});
  auto cls = classify_nm_subgroup({make_mK(whole_group(c4))});
  CHECK(cls.H.members == std::vector<int>{0, 1, 2, 3});
  CHECK(norm_w(cls.iota, w) == doctest::Approx(1.5));  // != 1
  CHECK_FALSE(is_nm_omega_subgroup(cls, w));
  CHECK(is_nm_omega_subgroup(cls, trivial_weight(c4)));
}

TEST_CASE("positive_invertible_check") {
  auto c4 = make_group("C4");
  auto r = positive_invertible_check(delta(c4, 2, 3.0));
  REQUIRE(r.form.has_value());
  CHECK(r.form->first == doctest::Approx(3.0));
  CHECK(r.form->second == 2);
  CHECK(r.positive);
  CHECK(r.invertible);
  CHECK(r.inverse_positive);
  CHECK(approx_equal(*r.inverse, delta(c4, 2, 1.0 / 3), 1e-9));

  // m_K is not invertible (zero Fourier coefficients)
  auto k = subgroup_from_members(c4, {0, 2});
  auto rm = positive_invertible_check(make_mK(k));
  CHECK_FALSE(rm.form.has_value());
  CHECK(rm.positive);
  CHECK_FALSE(rm.invertible);

  // invertible positive element whose inverse has a negative coefficient
  auto c2 = make_group("C2");
  auto f = add(delta(c2, 0, 0.6), delta(c2, 1, 0.8));
  auto rf = positive_invertible_check(f);
  CHECK_FALSE(rf.form.has_value());
  CHECK(rf.positive);
  CHECK(rf.invertible);
  CHECK_FALSE(rf.inverse_positive);

  CHECK_THROWS_AS(positive_invertible_check(zero_element(c2)), Error);
}

TEST_CASE("PInv iff over seeded elements (abelian and nonabelian routes)") {
  SeededRng rng(kDefaultSeed);
  for (const char* spec : {"C4", "C6", "D4", "S3"}) {
    auto g = make_group(spec);
    for (int t = 0; t < 120; ++t) {
      AlgebraElement f = zero_element(g);
      int family = rng.below(4);
      if (family == 0) {
        f = delta(g, rng.below(g->order()), rng.uniform(0.1, 3.0));
      } else if (family == 1) {
        f = delta(g, rng.below(g->order()),
                  cplx{rng.uniform(-2, 2), rng.uniform(-2, 2)});
      } else if (family == 2) {
        std::map<int, cplx> terms;
        for (int i = 0; i < 2; ++i) terms[rng.below(g->order())] += rng.uniform(0.05, 1.5);
        f = from_terms(g, std::move(terms));
      } else {
        std::map<int, cplx> terms;
        for (int i = 0; i < 3; ++i) terms[rng.below(g->order())] += rng.complex_in_box();
        f = from_terms(g, std::move(terms));
      }
      if (f.is_zero()) continue;
      auto r = positive_invertible_check(f);
      bool should = r.positive && r.invertible && r.inverse_positive;
      REQUIRE(r.form.has_value() == should);
      if (r.inverse) {
        // the reported inverse really is one
        CHECK(approx_equal(convolve(f, *r.inverse), delta(g, 0), 1e-6));
      }
    }
  }
}

