#include "gkv/gkgraph.hpp"
#include "gkv/groupfile.hpp"
#include "gkv/spectra.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gkv;

namespace {

PermutationGroup load(const std::string& name) {
  GroupFile gf = parse_group_file(std::string(GKV_DATA_DIR) + "/groups/" + name);
  return PermutationGroup(gf.degree, gf.generators);
}

}  // namespace

TEST_CASE("spectra of small groups") {
  CHECK(spectrum(load("s3.grp")) == std::set<std::uint64_t>{1, 2, 3});
  CHECK(spectrum(load("a5.grp")) == std::set<std::uint64_t>{1, 2, 3, 5});
  CHECK(spectrum(load("f20.grp")) == std::set<std::uint64_t>{1, 2, 4, 5});
}

TEST_CASE("order equations") {
  OrderEquation a5 = order_equation(load("a5.grp"));
  CHECK(a5.group_order == 60);
  CHECK(a5.rows.at(2).v == 15);
  CHECK(a5.rows.at(3).v == 10);
  CHECK(a5.rows.at(5).v == 6);
  // 1 + 15*phi(2) + 10*phi(3) + 6*phi(5) = 60
  CHECK(a5.rows.at(1).count + a5.rows.at(2).count + a5.rows.at(3).count +
            a5.rows.at(5).count ==
        60);

  OrderEquation z6 = order_equation(load("z6.grp"));
  CHECK(z6.rows.at(2).v == 1);
  CHECK(z6.rows.at(3).v == 1);
  CHECK(z6.rows.at(6).v == 1);

  OrderEquation s3 = order_equation(load("s3.grp"));
  CHECK(s3.rows.at(2).v == 3);
  CHECK(s3.rows.at(3).v == 1);
}

TEST_CASE("same order type") {
  PermutationGroup s4 = load("s4.grp");
  PermutationGroup s4d = load("s4_doubled.grp");
  CHECK(same_order_type(s4, s4d));

  PermutationGroup z4 = load("z4.grp");
  PermutationGroup v4 = load("v4.grp");
  CHECK_FALSE(same_order_type(z4, v4));

  CHECK_FALSE(same_order_type(load("d6.grp"), load("a4.grp")));

  CHECK(same_order_type(load("m16.grp"), load("z8xz2.grp")));
}

TEST_CASE("mu sets") {
  CHECK(mu_set(order_equation(load("a5.grp"))) == std::set<std::uint64_t>{2, 3, 5});
  CHECK(mu_set(order_equation(load("z6.grp"))) == std::set<std::uint64_t>{6});
  CHECK(mu_set(order_equation(load("f20.grp"))) == std::set<std::uint64_t>{4, 5});
}

TEST_CASE("order equation consistency invariants") {
  for (const char* name : {"s4.grp", "a5.grp", "f20.grp", "u3_3.grp", "l2_7.grp"}) {
    PermutationGroup g = load(name);
    OrderEquation eq = order_equation(g);
    Nat sum = 0;
    for (const auto& [n, row] : eq.rows) {
      CHECK(row.count == row.v * euler_phi(Nat(n)));
      sum += row.count;
      // spectrum closed under divisors
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) CHECK(eq.rows.count(d) == 1);
    }
    CHECK(sum == eq.group_order);
    // equal order equations imply equal |G(d)| for all d (consistency view)
    for (std::uint64_t d = 1; d <= 12; ++d)
      CHECK(eq.count_order_dividing(d) == Nat(g.count_order_dividing(d)));
  }
}

TEST_CASE("order lifting through quotients") {
  PermutationGroup a4 = load("a4.grp");
  Subgroup v4 = a4.normal_subgroups()[1];
  REQUIRE(v4.order() == 4);
  OrderLiftReport r = check_order_lifting(a4, v4, 3, true);
  CHECK(r.preconditions_met());
  CHECK(r.count_in_group == 8);
  CHECK(r.count_in_quotient == 2);
  CHECK(r.count_identity);
  CHECK(r.coset_orders_lift);

  PermutationGroup s4 = load("s4.grp");
  Subgroup sv4 = s4.normal_subgroups()[1];
  r = check_order_lifting(s4, sv4, 3, true);
  CHECK(r.count_in_group == 8);
  CHECK(r.count_in_quotient == 2);
  CHECK(r.count_identity);

  // (F20, Z5, m=4): pi(4) = {2} is the principal component, so the strict
  // precondition fails, but the counting identity still holds here
  PermutationGroup f20 = load("f20.grp");
  Subgroup z5 = f20.normal_subgroups()[1];
  REQUIRE(z5.order() == 5);
  r = check_order_lifting(f20, z5, 4, false);
  CHECK_FALSE(r.preconditions_met());
  CHECK(r.count_in_group == 10);
  CHECK(r.count_in_quotient == 2);
  CHECK(r.count_identity);
  CHECK(r.coset_orders_lift);
}

TEST_CASE("fingerprints distinguish order types") {
  CHECK(order_equation(load("m16.grp")).fingerprint() ==
        order_equation(load("z8xz2.grp")).fingerprint());
  CHECK(order_equation(load("z4.grp")).fingerprint() !=
        order_equation(load("v4.grp")).fingerprint());
}
