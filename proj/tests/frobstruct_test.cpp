#include "gkv/frobstruct.hpp"
#include "gkv/groupfile.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gkv;

namespace {

PermutationGroup load(const std::string& name) {
  GroupFile gf = parse_group_file(std::string(GKV_DATA_DIR) + "/groups/" + name);
  return PermutationGroup(gf.degree, gf.generators);
}

}  // namespace

TEST_CASE("detect_frobenius on the corpus Frobenius groups") {
  struct Case {
    const char* file;
    std::uint64_t k, h;
  };
  for (Case c : std::vector<Case>{{"s3.grp", 3, 2},
                                  {"a4.grp", 4, 3},
                                  {"f20.grp", 5, 4},
                                  {"z7_z3.grp", 7, 3},
                                  {"d5.grp", 5, 2},
                                  {"frob72.grp", 9, 8},
                                  {"z7_z3_z2.grp", 7, 6},
                                  {"frob_11sq_sl2_5.grp", 121, 120}}) {
    CAPTURE(c.file);
    PermutationGroup g = load(c.file);
    auto dec = detect_frobenius(g);
    REQUIRE(dec.has_value());
    CHECK(dec->kernel.order() == c.k);
    CHECK(dec->complement.order() == c.h);
  }
}

TEST_CASE("detect_frobenius rejects non-Frobenius groups") {
  CHECK_FALSE(detect_frobenius(load("a5.grp")).has_value());
  CHECK_FALSE(detect_frobenius(load("z6.grp")).has_value());
  CHECK_FALSE(detect_frobenius(load("s4.grp")).has_value());
  CHECK_FALSE(detect_frobenius(load("q8.grp")).has_value());
}

TEST_CASE("detected kernels are unique across the corpus scan") {
  for (const char* name : {"s3.grp", "a4.grp", "f20.grp", "z7_z3.grp", "frob72.grp",
                           "z7_z3_z2.grp", "d5.grp", "d6.grp", "s4.grp", "sl2_3.grp"}) {
    CAPTURE(name);
    CHECK(frobenius_kernel_candidates(load(name)).size() <= 1);
  }
}

TEST_CASE("cyclic kernel implies v_K = 1") {
  for (const char* name : {"s3.grp", "f20.grp", "z7_z3.grp", "z7_z3_z2.grp", "d5.grp"}) {
    PermutationGroup g = load(name);
    auto dec = detect_frobenius(g);
    REQUIRE(dec.has_value());
    PermutationGroup kgrp = subgroup_as_group(g, dec->kernel);
    bool cyclic = kgrp.spectrum_set().count(kgrp.order()) > 0;
    if (cyclic) {
      auto hist = g.order_histogram();
      Nat count = hist.count(dec->kernel.order()) ? hist.at(dec->kernel.order()) : 0;
      CHECK(count == euler_phi(Nat(dec->kernel.order())));  // v = 1
    }
  }
}

TEST_CASE("detect_2frobenius") {
  PermutationGroup s4 = load("s4.grp");
  auto d = detect_2frobenius(s4);
  REQUIRE(d.has_value());
  CHECK(d->a.order() == 4);
  CHECK(d->b_order == 3);
  CHECK(d->c_order == 2);

  PermutationGroup g320 = load("two_frob_320.grp");
  auto d2 = detect_2frobenius(g320);
  REQUIRE(d2.has_value());
  CHECK(d2->a.order() == 16);
  CHECK(d2->b_order == 5);
  CHECK(d2->c_order == 4);

  CHECK_FALSE(detect_2frobenius(load("a4.grp")).has_value());
  CHECK_FALSE(detect_2frobenius(load("s3.grp")).has_value());
  CHECK_FALSE(detect_2frobenius(load("f20.grp")).has_value());
  // the order-42 group Z7:Z3:Z2 is plain Frobenius, not 2-Frobenius: any
  // order-6 quotient acting on Z7 kills its order-3 part
  CHECK_FALSE(detect_2frobenius(load("z7_z3_z2.grp")).has_value());
  CHECK_FALSE(detect_2frobenius(load("frob72.grp")).has_value());
}

TEST_CASE("Frobenius lemma checks") {
  PermutationGroup s3 = load("s3.grp");
  auto d = detect_frobenius(s3);
  REQUIRE(d.has_value());
  FrobeniusLemmaReport r = check_frobenius_lemma(s3, *d);
  CHECK(r.kernel_nilpotent);
  CHECK(r.kernel_abelian_when_h_even);
  CHECK(r.complement_odd_sylows_cyclic);
  CHECK(r.complement_2sylow_cyclic_or_quaternion);
  CHECK(r.kernel_noncyclic_odd_sylow_primes.empty());

  PermutationGroup a4 = load("a4.grp");
  auto d4 = detect_frobenius(a4);
  r = check_frobenius_lemma(a4, *d4);
  CHECK(r.kernel_nilpotent);
  CHECK(r.complement_odd_sylows_cyclic);  // H = Z3

  // (Z3 x Z3) : Q8: kernel nilpotent, complement quaternion; the kernel-side
  // "odd Sylow cyclic" reading fails at p = 3 and is reported, not asserted
  PermutationGroup f72 = load("frob72.grp");
  auto d72 = detect_frobenius(f72);
  REQUIRE(d72.has_value());
  r = check_frobenius_lemma(f72, *d72);
  CHECK(r.kernel_nilpotent);
  CHECK(r.kernel_abelian_when_h_even);
  CHECK(r.complement_2sylow_cyclic_or_quaternion);
  CHECK(r.kernel_noncyclic_odd_sylow_primes == std::vector<std::uint64_t>{3});

  // (Z11^2) : SL2(5): non-solvable complement; enumerable consequences only
  PermutationGroup f11 = load("frob_11sq_sl2_5.grp");
  auto d11 = detect_frobenius(f11);
  REQUIRE(d11.has_value());
  r = check_frobenius_lemma(f11, *d11);
  CHECK(r.kernel_nilpotent);
  CHECK(r.kernel_abelian_when_h_even);
  CHECK_FALSE(r.complement_solvable);
  CHECK(r.nonsolvable_complement_consistent);
}

TEST_CASE("2-Frobenius lemma checks") {
  PermutationGroup s4 = load("s4.grp");
  auto d = detect_2frobenius(s4);
  REQUIRE(d.has_value());
  TwoFrobeniusLemmaReport r = check_2frobenius_lemma(s4, *d);
  CHECK(r.s_is_2);
  CHECK(r.pi1_is_piA_union_piC);
  CHECK(r.pi2_is_piB);
  CHECK(r.solvable);
  CHECK(r.b_odd);
  CHECK(r.b_cyclic_subgroup_exists);
  CHECK(r.c_cyclic);

  PermutationGroup g320 = load("two_frob_320.grp");
  auto d2 = detect_2frobenius(g320);
  REQUIRE(d2.has_value());
  r = check_2frobenius_lemma(g320, *d2);
  CHECK(r.s_is_2);
  CHECK(r.pi1_is_piA_union_piC);
  CHECK(r.pi2_is_piB);
  CHECK(r.solvable);
  CHECK(r.b_odd);
  CHECK(r.b_cyclic_subgroup_exists);
  CHECK(r.c_cyclic);
}

TEST_CASE("trichotomy") {
  CHECK(gk_trichotomy(load("s4.grp")).kind == Trichotomy::two_frobenius);
  CHECK(gk_trichotomy(load("f20.grp")).kind == Trichotomy::frobenius);
  auto r = gk_trichotomy(load("a5.grp"));
  CHECK(r.kind == Trichotomy::almost_simple_sandwich);
  CHECK(r.m1_order == 1);
  CHECK(r.m2_order == 60);

  auto rs5 = gk_trichotomy(load("s5.grp"));
  CHECK(rs5.kind == Trichotomy::almost_simple_sandwich);
  CHECK(rs5.m1_order == 1);
  CHECK(rs5.m2_order == 60);

  auto rl = gk_trichotomy(load("l2_7.grp"));
  CHECK(rl.kind == Trichotomy::almost_simple_sandwich);
  CHECK(rl.m2_order == 168);
}

TEST_CASE("Frobenius corpus groups: component structure refines kernel/complement") {
  for (const char* name : {"s3.grp", "f20.grp", "z7_z3.grp", "frob72.grp",
                           "frob_11sq_sl2_5.grp", "z7_z3_z2.grp"}) {
    CAPTURE(name);
    PermutationGroup g = load(name);
    auto dec = detect_frobenius(g);
    REQUIRE(dec.has_value());
    CHECK(std::gcd<std::uint64_t, std::uint64_t>(dec->kernel.order(),
                                                 dec->complement.order()) == 1);
    PrimeGraph pg = build_gk(g.spectrum_set());
    std::set<std::uint64_t> piK = u64_prime_set(dec->kernel.order());
    std::set<std::uint64_t> piH = u64_prime_set(dec->complement.order());
    bool cross = false;
    for (auto& [r, s] : pg.edges)
      if ((piK.count(r) && piH.count(s)) || (piH.count(r) && piK.count(s))) cross = true;
    if (!cross) {
      REQUIRE(pg.s() == 2);
      std::set<std::set<std::uint64_t>> comps(pg.components.begin(), pg.components.end());
      CHECK(comps == std::set<std::set<std::uint64_t>>{piK, piH});
    }
  }
}
