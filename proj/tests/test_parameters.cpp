#include <catch2/catch_amalgamated.hpp>

#include "arthurkit/json_io.hpp"
#include "arthurkit/parameters.hpp"

using namespace arthurkit;

namespace {
const CuspidalDatum chi = CuspidalDatum::character("1");
const CuspidalDatum sig2 = CuspidalDatum::symplectic("sig2", 2);
const CuspidalDatum rho2 = CuspidalDatum::orthogonal("rho2", 2);
const CuspidalDatum rho3 = CuspidalDatum::orthogonal("rho3", 3);
}  // namespace

TEST_CASE("cuspidal datum invariants") {
  CHECK_THROWS_AS(CuspidalDatum::symplectic("bad", 3), DomainError);
  CHECK_THROWS_AS(CuspidalDatum::orthogonal("bad", 0), DomainError);
  CuspidalDatum c = CuspidalDatum::character("w");
  CHECK(c.a == 1);
  CHECK(c.is_character);
}

TEST_CASE("tensor type of simple parameters") {
  CHECK(tensor_type(SimpleParameter(sig2, 2)) == DualityType::Orthogonal);
  CHECK(tensor_type(SimpleParameter(sig2, 1)) == DualityType::Symplectic);
  CHECK(tensor_type(SimpleParameter(rho3, 1)) == DualityType::Orthogonal);
  CHECK(tensor_type(SimpleParameter(rho3, 2)) == DualityType::Symplectic);
}

TEST_CASE("conjugate sign and kappa_ab") {
  CuspidalDatum t_plus = CuspidalDatum::conjugate_self_dual("t", 2, Sign::plus());
  CHECK(conjugate_sign(SimpleParameter(t_plus, 2)) == Sign::minus());
  CHECK(conjugate_sign(SimpleParameter(t_plus, 1)) == Sign::plus());

  CHECK(kappa_ab(Sign::plus(), 1, 1) == Sign::plus());
  CHECK(kappa_ab(Sign::plus(), 2, 3) == Sign::plus());
  CHECK(kappa_ab(Sign::minus(), 2, 2) == Sign::plus());

  // eta_(tau,b) = kappa_ab * (-1)^(ab-1) whenever eta_tau = kappa_a (-1)^(a-1)
  for (Sign ka : {Sign::plus(), Sign::minus()})
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; a * b <= 30; ++b) {
        CuspidalDatum t =
            CuspidalDatum::conjugate_self_dual("t", a, ka * Sign::pow_minus_one(a - 1));
        CHECK(conjugate_sign(SimpleParameter(t, b)) ==
              kappa_ab(ka, a, b) * Sign::pow_minus_one(a * b - 1));
      }
}

TEST_CASE("sign_of_simple dispatches and checks kappa consistency") {
  auto tag = sign_of_simple(SimpleParameter(sig2, 2));
  REQUIRE(std::holds_alternative<DualityType>(tag));
  CHECK(std::get<DualityType>(tag) == DualityType::Orthogonal);

  CuspidalDatum t = CuspidalDatum::conjugate_self_dual("t", 2, Sign::minus());
  auto tag2 = sign_of_simple(SimpleParameter(t, 2), Sign::plus());
  REQUIRE(std::holds_alternative<Sign>(tag2));
  CHECK(std::get<Sign>(tag2) == Sign::plus());  // eta_tau (-1)^(b-1) = (-1)(-1)
  // kappa_a = -1 would imply eta_tau = (-1)(-1)^(a-1) = +1 != -1
  CHECK_THROWS_AS(sign_of_simple(SimpleParameter(t, 2), Sign::minus()), DomainError);
}

TEST_CASE("boxplus and boxminus") {
  ArthurParameter empty;
  ArthurParameter psi = ArthurParameter::simple(sig2, 2);
  CHECK(boxplus(empty, psi) == psi);

  ArthurParameter two = boxplus(psi, SimpleParameter(sig2, 2));
  CHECK(two.summands().size() == 2);
  CHECK_FALSE(is_elliptic(two));
  CHECK(boxminus(two, SimpleParameter(sig2, 2)) == psi);
  CHECK_THROWS_AS(boxminus(psi, SimpleParameter(sig2, 4)), DomainError);

  ArthurParameter mixed = boxplus(ArthurParameter::simple(rho3, 3), SimpleParameter(chi, 1));
  CHECK(mixed.gl_size() == 10);
  CHECK(boxminus(boxplus(mixed, SimpleParameter(rho2, 1)), SimpleParameter(rho2, 1)) == mixed);
}

TEST_CASE("dual and ellipticity") {
  CuspidalDatum t1 = CuspidalDatum::orthogonal("t1", 2);
  t1.dual_id = "t2";
  CuspidalDatum t2 = CuspidalDatum::orthogonal("t2", 2);
  t2.dual_id = "t1";
  std::map<std::string, CuspidalDatum> pool{{"t1", t1}, {"t2", t2}};

  ArthurParameter psi({SimpleParameter(t1, 2)});
  ArthurParameter d = dual(psi, pool);
  CHECK(d == ArthurParameter({SimpleParameter(t2, 2)}));
  CHECK(dual(d, pool) == psi);

  ArthurParameter fixed = boxplus(ArthurParameter::simple(sig2, 3), SimpleParameter(sig2, 1));
  CHECK(dual(fixed) == fixed);
  CHECK(is_elliptic(fixed));
  CHECK(is_elliptic(boxplus(ArthurParameter::simple(rho2, 2),
                            SimpleParameter(sig2, 2))));
}

TEST_CASE("classify: plain families") {
  // single orthogonal-type summand of odd size -> Sp
  ArthurParameter psi1 = ArthurParameter::simple(rho3, 3);  // N = 9
  auto g1 = classify(psi1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == GroupDatum::sp(4));

  // (tau symplectic, 2) [+] (1,1): N = 5 -> Sp(2)
  ArthurParameter psi2 = boxplus(ArthurParameter::simple(sig2, 2), SimpleParameter(chi, 1));
  auto g2 = classify(psi2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == GroupDatum::sp(2));

  // mixed types -> no group
  ArthurParameter psi3 =
      boxplus(ArthurParameter::simple(rho2, 1), SimpleParameter(sig2, 1));
  CHECK(classify(psi3).empty());

  // all symplectic type -> SO_odd and Mp
  ArthurParameter psi4 = ArthurParameter::simple(sig2, 1);  // N = 2
  auto g4 = classify(psi4);
  REQUIRE(g4.size() == 2);
  CHECK(g4[0] == GroupDatum::so_odd(1));
  CHECK(g4[1] == GroupDatum::mp(1));

  // all orthogonal, even size -> SO_even with a symbolic character
  ArthurParameter psi5 = boxplus(ArthurParameter::simple(rho3, 1), SimpleParameter(chi, 1));
  auto g5 = classify(psi5);
  REQUIRE(g5.size() == 1);
  CHECK(g5[0].family == GroupFamily::SOeven);
  CHECK(g5[0].n == 2);

  CHECK_THROWS_AS(classify(boxplus(psi4, SimpleParameter(sig2, 1))), DomainError);
}

TEST_CASE("classify: unitary case") {
  for (int a : {1, 2, 3})
    for (int b = 1; b <= 4; ++b)
      for (Sign eta : {Sign::plus(), Sign::minus()}) {
        CuspidalDatum t = CuspidalDatum::conjugate_self_dual("t", a, eta);
        ArthurParameter psi = ArthurParameter::simple(t, b);
        auto gs = classify(psi);
        REQUIRE(gs.size() == 1);
        int N = a * b;
        CHECK(gs[0].family == GroupFamily::U);
        CHECK(gs[0].n == N);
        // the sign condition eta_(tau,b) = kappa (-1)^(N-1)
        CHECK(conjugate_sign(SimpleParameter(t, b)) ==
              gs[0].kappa * Sign::pow_minus_one(N - 1));
        // context filter
        CHECK(classify(psi, gs[0].kappa).size() == 1);
        CHECK(classify(psi, gs[0].kappa * Sign::minus()).empty());
      }

  // summands with conflicting signs do not align
  CuspidalDatum tp = CuspidalDatum::conjugate_self_dual("tp", 2, Sign::plus());
  CuspidalDatum tm = CuspidalDatum::conjugate_self_dual("tm", 2, Sign::minus());
  ArthurParameter psi = boxplus(ArthurParameter::simple(tp, 1), SimpleParameter(tm, 1));
  CHECK(classify(psi).empty());
}

TEST_CASE("classify output obeys the twisted GL size law") {
  std::vector<ArthurParameter> samples = {
      ArthurParameter::simple(rho3, 3),
      boxplus(ArthurParameter::simple(sig2, 2), SimpleParameter(chi, 1)),
      ArthurParameter::simple(sig2, 1),
      boxplus(ArthurParameter::simple(sig2, 3), SimpleParameter(sig2, 1)),
  };
  for (const auto& psi : samples)
    for (const auto& g : classify(psi)) CHECK(g.twisted_gl_size() == psi.gl_size());
}

TEST_CASE("underlying partition") {
  CHECK(underlying_partition(ArthurParameter::simple(rho3, 2)) == Partition({2, 2, 2}));
  ArthurParameter psi = boxplus(ArthurParameter::simple(rho2, 3), SimpleParameter(chi, 1));
  CHECK(underlying_partition(psi) == Partition({3, 3, 1}));
  CHECK(underlying_partition(ArthurParameter::simple(chi, 1)) == Partition({1}));
}

TEST_CASE("group datum sizes") {
  CHECK(GroupDatum::so_odd(3).twisted_gl_size() == 6);
  CHECK(GroupDatum::sp(3).twisted_gl_size() == 7);
  CHECK(GroupDatum::so_even(3).twisted_gl_size() == 6);
  CHECK(GroupDatum::mp(3).twisted_gl_size() == 6);
  CHECK(GroupDatum::unitary(5, Sign::plus()).twisted_gl_size() == 5);

  CHECK(GroupDatum::so_size(7) == GroupDatum::so_odd(3));
  CHECK(GroupDatum::so_size(6) == GroupDatum::so_even(3));
  CHECK(GroupDatum::sp_size(6) == GroupDatum::sp(3));
  CHECK_THROWS_AS(GroupDatum::sp_size(5), DomainError);
  CHECK(GroupDatum::sp(3).str() == "Sp_6");
  CHECK(GroupDatum::so_odd(2).str() == "SO_5");
  CHECK(GroupDatum::mp(2).str() == "Mp_4");
}

TEST_CASE("quadratic character product labels") {
  CHECK(quadratic_product_label({"x", "x"}) == "1");
  CHECK(quadratic_product_label({"x", "y"}) == "x*y");
  CHECK(quadratic_product_label({"x*y", "y"}) == "x");
  CHECK(quadratic_product_label({"1", "x"}) == "x");
  CHECK(quadratic_product_label({}) == "1");
}

TEST_CASE("parameter JSON round trip") {
  ArthurParameter psi = boxplus(ArthurParameter::simple(sig2, 2), SimpleParameter(chi, 1));
  Json j = to_json(psi);
  ArthurParameter back = parameter_from_json(j);
  CHECK(back == psi);
  CHECK(back.summands()[1].tau.duality == DualityType::Symplectic);

  CuspidalDatum t = CuspidalDatum::conjugate_self_dual("u", 3, Sign::minus());
  t.central_nonvanishing = true;
  CuspidalDatum back_t = cuspidal_from_json(to_json(t));
  CHECK(back_t.id == t.id);
  CHECK(back_t.base == BaseField::QuadraticExt);
  CHECK(back_t.eta == Sign::minus());
  CHECK(back_t.central_nonvanishing.value_or(false));
}
