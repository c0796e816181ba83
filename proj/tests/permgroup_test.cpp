#include "gkv/groupfile.hpp"
#include "gkv/permgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace gkv;

namespace {

PermutationGroup load(const std::string& name, std::uint64_t cap = PermutationGroup::kDefaultCap) {
  GroupFile gf = parse_group_file(std::string(GKV_DATA_DIR) + "/groups/" + name);
  return PermutationGroup(gf.degree, gf.generators, cap);
}

Permutation cycles(std::size_t degree, const std::string& text) {
  return parse_cycles(text, degree, 0);
}

}  // namespace

TEST_CASE("group file parsing") {
  std::istringstream good(
      "# demo\n"
      "degree 5\n"
      "gen (1 2 3)(4 5)\n"
      "gen (1 2)\n");
  GroupFile gf = parse_group_stream(good);
  CHECK(gf.degree == 5);
  CHECK(gf.generators.size() == 2);
  CHECK(gf.generators[0].cycle_string() == "(1 2 3)(4 5)");

  std::istringstream bad1("degree 3\ngen (1 4)\n");
  CHECK_THROWS_WITH(parse_group_stream(bad1),
                    Catch::Matchers::ContainsSubstring("line 2") &&
                        Catch::Matchers::ContainsSubstring("out of range"));
  std::istringstream bad2("degree 3\ngen (1 x)\n");
  CHECK_THROWS_WITH(parse_group_stream(bad2), Catch::Matchers::ContainsSubstring("bad token"));
  std::istringstream bad3("gen (1 2)\n");
  CHECK_THROWS_AS(parse_group_stream(bad3), GroupFileError);
  std::istringstream bad4("degree 3\ngen (1 2\n");
  CHECK_THROWS_WITH(parse_group_stream(bad4),
                    Catch::Matchers::ContainsSubstring("unterminated"));
  std::istringstream bad5("degree 3\ngen (1 2)(2 3)\n");
  CHECK_THROWS_WITH(parse_group_stream(bad5), Catch::Matchers::ContainsSubstring("repeated"));
}

TEST_CASE("permutation basics") {
  Permutation p = cycles(5, "(1 2 3)(4 5)");
  CHECK(p.order() == 6);
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(cycles(11, "(1 2 3 4 5 6 7 8 9 10 11)").order() == 11);
  CHECK((p * p.inverse()).is_identity());
  Permutation a = cycles(3, "(1 2)");
  Permutation b = cycles(3, "(2 3)");
  CHECK((a * b).cycle_string() == "(1 3 2)");  // apply a then b
}

TEST_CASE("enumeration: trivial, S5, M11, cap error") {
  PermutationGroup triv(1, {});
  CHECK(triv.order() == 1);

  PermutationGroup s5(5, {cycles(5, "(1 2 3 4 5)"), cycles(5, "(1 2)")});
  CHECK(s5.order() == 120);

  CHECK(load("m11.grp").order() == 7920);

  PermutationGroup capped(5, {cycles(5, "(1 2 3 4 5)"), cycles(5, "(1 2)")}, 50);
  CHECK_THROWS_WITH(capped.order(), Catch::Matchers::ContainsSubstring("cap of 50"));
}

TEST_CASE("element orders partition the group") {
  for (const char* name : {"s4.grp", "a5.grp", "f20.grp", "q8.grp"}) {
    PermutationGroup g = load(name);
    std::uint64_t total = 0;
    for (const auto& [n, c] : g.order_histogram()) total += c;
    CHECK(total == g.order());
  }
}

TEST_CASE("centralizers") {
  PermutationGroup s3(3, {cycles(3, "(1 2 3)"), cycles(3, "(1 2)")});
  CHECK(s3.centralizer(Permutation::identity(3)).order() == 6);
  CHECK(s3.centralizer(cycles(3, "(1 2)")).order() == 2);

  PermutationGroup a4 = load("a4.grp");
  auto id = a4.index_of(cycles(4, "(1 2)(3 4)"));
  REQUIRE(id.has_value());
  CHECK(a4.centralizer(*id).order() == 4);
  CHECK_THROWS_AS(a4.centralizer(cycles(4, "(1 2)")), std::invalid_argument);
}

TEST_CASE("normal subgroup lattices") {
  auto orders_of = [](const std::vector<Subgroup>& subs) {
    std::vector<std::uint64_t> o;
    for (const auto& s : subs) o.push_back(s.order());
    return o;
  };
  CHECK(orders_of(load("s4.grp").normal_subgroups()) ==
        std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(orders_of(load("a5.grp").normal_subgroups()) == std::vector<std::uint64_t>{1, 60});
  CHECK(orders_of(load("z6.grp").normal_subgroups()) ==
        std::vector<std::uint64_t>{1, 2, 3, 6});
}

TEST_CASE("normal lattice agrees with a brute-force oracle on small groups") {
  // oracle: every subgroup generated by up to 3 elements, tested for normality
  for (const char* name :
       {"s3.grp", "z6.grp", "d4.grp", "q8.grp", "a4.grp", "d6.grp", "f20.grp",
        "z7_z3.grp", "s4.grp", "sl2_3.grp", "z7_z3_z2.grp", "m16.grp", "z8xz2.grp",
        "frob72.grp", "d5.grp", "q16.grp", "z12.grp", "v4.grp", "s5.grp",
        "sl2_5.grp", "l2_7.grp", "a5.grp"}) {
    PermutationGroup g = load(name);
    REQUIRE(g.order() <= 200);
    std::uint32_t n = static_cast<std::uint32_t>(g.order());
    std::set<std::vector<std::uint32_t>> level;
    for (std::uint32_t a = 0; a < n; ++a) level.insert(g.generated_subgroup({a}).members);
    std::set<std::vector<std::uint32_t>> all = level;
    for (int depth = 2; depth <= 3; ++depth) {
      std::set<std::vector<std::uint32_t>> next;
      for (const auto& mem : level) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (std::binary_search(mem.begin(), mem.end(), b)) continue;
          std::vector<std::uint32_t> gens = {b};
          gens.insert(gens.end(), mem.begin(), mem.end());
          next.insert(g.generated_subgroup(gens).members);
        }
      }
      for (const auto& m : next) all.insert(m);
      level = std::move(next);
    }
    std::set<std::vector<std::uint32_t>> oracle_normals;
    for (const auto& mem : all) {
      Subgroup s;
      s.members = mem;
      s.bits.assign(n, false);
      for (auto m : mem) s.bits[m] = true;
      s.gens = mem;
      if (g.is_normal(s)) oracle_normals.insert(mem);
    }
    std::set<std::vector<std::uint32_t>> lattice_normals;
    for (const auto& s : g.normal_subgroups()) lattice_normals.insert(s.members);
    CAPTURE(name);
    CHECK(lattice_normals == oracle_normals);
  }
}

TEST_CASE("quotients") {
  PermutationGroup s4 = load("s4.grp");
  auto subs = s4.normal_subgroups();
  REQUIRE(subs[1].order() == 4);
  QuotientGroup q(s4, subs[1]);
  CHECK(q.order() == 6);
  CHECK(q.group().spectrum_set() == std::set<std::uint64_t>{1, 2, 3});

  PermutationGroup a4 = load("a4.grp");
  auto asubs = a4.normal_subgroups();
  REQUIRE(asubs[1].order() == 4);
  QuotientGroup qa(a4, asubs[1]);
  CHECK(qa.order() == 3);
  CHECK(qa.group().spectrum_set() == std::set<std::uint64_t>{1, 3});

  // quotient by the trivial subgroup: isomorphic copy (same order histogram)
  QuotientGroup qt(s4, s4.trivial_subgroup());
  CHECK(qt.order() == 24);
  CHECK(qt.group().order_histogram() == s4.order_histogram());

  // non-normal subgroup rejected with a witness
  Subgroup h = s4.generated_subgroup({*s4.index_of(cycles(4, "(1 2)"))});
  CHECK_THROWS_WITH(QuotientGroup(s4, h), Catch::Matchers::ContainsSubstring("not normal"));

  // |G/N| * |N| = |G| across the S4 lattice
  for (const auto& s : subs) {
    QuotientGroup qq(s4, s);
    CHECK(qq.order() * s.order() == s4.order());
  }
}

TEST_CASE("derived series and solvability") {
  CHECK(load("z6.grp").is_solvable());
  PermutationGroup s4 = load("s4.grp");
  CHECK(s4.is_solvable());
  CHECK(s4.derived_series_orders() == std::vector<std::uint64_t>{24, 12, 4, 1});
  PermutationGroup a5 = load("a5.grp");
  CHECK_FALSE(a5.is_solvable());
  CHECK(a5.derived_series_orders() == std::vector<std::uint64_t>{60});
}

TEST_CASE("nilpotency") {
  CHECK(load("d4.grp").is_nilpotent());
  CHECK(load("z6.grp").is_nilpotent());
  CHECK_FALSE(load("s3.grp").is_nilpotent());
  CHECK(load("q8.grp").is_nilpotent());
  CHECK(load("m16.grp").is_nilpotent());
  CHECK_FALSE(load("f20.grp").is_nilpotent());
}

TEST_CASE("count order dividing") {
  PermutationGroup a5 = load("a5.grp");
  CHECK(a5.count_order_dividing(1) == 1);
  CHECK(a5.count_order_dividing(2) == 16);
  CHECK(a5.count_order_dividing(60) == 60);
  std::uint64_t e = a5.exponent();
  CHECK(e == 30);
  CHECK(a5.count_order_dividing(e) == 60);
  for (std::uint64_t d = 1; d <= e; ++d)
    if (e % d == 0) CHECK(a5.count_order_dividing(d) <= a5.count_order_dividing(e));
}

TEST_CASE("sylow subgroups") {
  PermutationGroup s4 = load("s4.grp");
  CHECK(s4.sylow(2).order() == 8);
  CHECK(s4.sylow(3).order() == 3);
  PermutationGroup sl25 = load("sl2_5.grp");
  CHECK(sl25.sylow(2).order() == 8);
  CHECK(sl25.sylow(5).order() == 5);
}

TEST_CASE("normalizer") {
  PermutationGroup s4 = load("s4.grp");
  Subgroup p3 = s4.sylow(3);
  Subgroup n = s4.normalizer(p3);
  CHECK(n.order() == 6);
}

TEST_CASE("M11 is simple") {
  PermutationGroup m11 = load("m11.grp");
  auto subs = m11.normal_subgroups();
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].order() == 1);
  CHECK(subs[1].order() == 7920);
}
