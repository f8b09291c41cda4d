#include "scalcurv/genus.hpp"
#include "scalcurv/manifold.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace scalcurv;

TEST_CASE("Ahat characteristic series coefficients") {
    auto q = ahat_series_coefficients(5);
    REQUIRE(q.size() == 5);
    CHECK(q[0] == Rational(-1, 24));
    CHECK(q[1] == Rational(7, 5760));
    CHECK(q[2] == Rational(-31, 967680));
    CHECK(q[3] == Rational(127, 154828800));
    CHECK(q[4] == Rational(-73, 3503554560LL));
}

TEST_CASE("L characteristic series coefficients") {
    auto q = l_series_coefficients(5);
    REQUIRE(q.size() == 5);
    CHECK(q[0] == Rational(1, 3));
    CHECK(q[1] == Rational(-1, 45));
    CHECK(q[2] == Rational(2, 945));
    CHECK(q[3] == Rational(-1, 4725));
    CHECK(q[4] == Rational(2, 93555));
}

TEST_CASE("Ahat polynomials through weight four") {
    GenusSeries ahat = GenusSeries::ahat(4);

    PartitionPolynomial a1 = genus_polynomial(ahat, 1);
    CHECK(a1.coefficient(Partition({1})) == Rational(-1, 24));
    CHECK(a1.term_count() == 1);

    PartitionPolynomial a2 = genus_polynomial(ahat, 2);
    CHECK(a2.coefficient(Partition({2})) == Rational(-1, 1440));
    CHECK(a2.coefficient(Partition({1, 1})) == Rational(7, 5760));

    PartitionPolynomial a3 = genus_polynomial(ahat, 3);
    CHECK(a3.coefficient(Partition({3})) == Rational(-1, 60480));
    CHECK(a3.coefficient(Partition({2, 1})) == Rational(11, 241920));
    CHECK(a3.coefficient(Partition({1, 1, 1})) == Rational(-31, 967680));

    PartitionPolynomial a4 = genus_polynomial(ahat, 4);
    CHECK(a4.coefficient(Partition({4})) == Rational(-1, 2419200));
    CHECK(a4.coefficient(Partition({3, 1})) == Rational(1, 907200));
    CHECK(a4.coefficient(Partition({2, 2})) == Rational(13, 29030400));
    CHECK(a4.coefficient(Partition({2, 1, 1})) == Rational(-113, 58060800));
    CHECK(a4.coefficient(Partition({1, 1, 1, 1})) == Rational(127, 154828800));
}

TEST_CASE("L polynomials through weight four") {
    GenusSeries l = GenusSeries::l(4);

    PartitionPolynomial l1 = genus_polynomial(l, 1);
    CHECK(l1.coefficient(Partition({1})) == Rational(1, 3));

    PartitionPolynomial l2 = genus_polynomial(l, 2);
    CHECK(l2.coefficient(Partition({2})) == Rational(7, 45));
    CHECK(l2.coefficient(Partition({1, 1})) == Rational(-1, 45));

    PartitionPolynomial l3 = genus_polynomial(l, 3);
    CHECK(l3.coefficient(Partition({3})) == Rational(62, 945));
    CHECK(l3.coefficient(Partition({2, 1})) == Rational(-13, 945));
    CHECK(l3.coefficient(Partition({1, 1, 1})) == Rational(2, 945));

    PartitionPolynomial l4 = genus_polynomial(l, 4);
    CHECK(l4.coefficient(Partition({4})) == Rational(127, 4725));
    CHECK(l4.coefficient(Partition({3, 1})) == Rational(-71, 14175));
    CHECK(l4.coefficient(Partition({2, 2})) == Rational(-19, 14175));
    CHECK(l4.coefficient(Partition({2, 1, 1})) == Rational(22, 14175));
    CHECK(l4.coefficient(Partition({1, 1, 1, 1})) == Rational(-1, 4725));
}

TEST_CASE("weight five spot values") {
    PartitionPolynomial a5 = genus_polynomial(GenusSeries::ahat(5), 5);
    CHECK(a5.coefficient(Partition({5})) == Rational(-1, 95800320LL));
    CHECK(a5.coefficient(Partition({1, 1, 1, 1, 1})) == Rational(-73, 3503554560LL));
    CHECK(a5.coefficient(Partition({3, 2})) == Rational(1, 45619200LL));

    PartitionPolynomial l5 = genus_polynomial(GenusSeries::l(5), 5);
    CHECK(l5.coefficient(Partition({5})) == Rational(146, 13365));
    CHECK(l5.coefficient(Partition({1, 1, 1, 1, 1})) == Rational(2, 93555));
    CHECK(l5.coefficient(Partition({3, 2})) == Rational(-16, 22275));
}

TEST_CASE("genus_polynomial argument validation") {
    CHECK_THROWS_AS(genus_polynomial(GenusSeries::ahat(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(genus_polynomial(GenusSeries::ahat(2), 3), std::invalid_argument);
}

TEST_CASE("a constants") {
    CHECK(a_constant(1) == Rational(1, 8));
    CHECK(a_constant(2) == Rational(1, 224));
    CHECK(a_constant(3) == Rational(1, 3968));
    CHECK(a_constant(4) == Rational(1, 65024));
    CHECK(a_constant(5) == Rational(1, 1046528));
    CHECK_THROWS_AS(a_constant(0), std::invalid_argument);
}

TEST_CASE("combined polynomial kills the top class") {
    for (unsigned k = 2; k <= 5; ++k) {
        PartitionPolynomial c = combined_polynomial(k);
        CHECK(c.coefficient(Partition({k})) == Rational(0));
        CHECK_FALSE(c.is_zero());
    }
    CHECK(combined_polynomial(2).coefficient(Partition({1, 1})) == Rational(1, 896));
    CHECK(combined_polynomial(3).coefficient(Partition({1, 1, 1})) == Rational(-1, 31744));
    CHECK(combined_polynomial(4).coefficient(Partition({1, 1, 1, 1})) == Rational(17, 20807680LL));
    CHECK(combined_polynomial(5).coefficient(Partition({1, 1, 1, 1, 1})) ==
          Rational(-527, 25317605376LL));
    CHECK_THROWS_AS(combined_polynomial(1), std::invalid_argument);
    CHECK_THROWS_AS(combined_polynomial(0), std::invalid_argument);
}

TEST_CASE("evaluation against catalog manifolds") {
    CHECK(genus_of(SeriesKind::ahat, catalog("K3")) == Rational(-2));
    CHECK(genus_of(SeriesKind::l, catalog("K3")) == Rational(16));
    CHECK(genus_of(SeriesKind::ahat, catalog("Bott")) == Rational(1));
    CHECK(genus_of(SeriesKind::l, catalog("Bott")) == Rational(-224));
    CHECK(genus_of(SeriesKind::ahat, catalog("HP2")) == Rational(0));
    CHECK(genus_of(SeriesKind::l, catalog("HP2")) == Rational(1));
    CHECK(genus_of(SeriesKind::ahat, catalog("point")) == Rational(1));
    CHECK(genus_of(SeriesKind::l, catalog("point")) == Rational(1));
}

TEST_CASE("signature theorem holds on every catalog entry") {
    for (const CharacteristicData& m : builtin_catalog())
        CHECK(genus_of(SeriesKind::l, m) == Rational(m.signature));
}

TEST_CASE("odd and sphere dimensions evaluate to zero genus except the trivial cases") {
    CHECK(genus_of(SeriesKind::ahat, catalog("S7")) == Rational(0));
    CHECK(genus_of(SeriesKind::ahat, catalog("S4")) == Rational(0));
    CHECK(genus_of(SeriesKind::l, catalog("S4")) == Rational(0));
    CHECK(genus_of(SeriesKind::ahat, catalog("S3")) == Rational(0));
}

TEST_CASE("evaluate_genus rejects dimension mismatch") {
    PartitionPolynomial a2 = genus_polynomial(GenusSeries::ahat(2), 2);
    CHECK_THROWS_AS(evaluate_genus(a2, catalog("K3")), std::invalid_argument);
}

TEST_CASE("genera are multiplicative on products") {
    CharacteristicData k3 = catalog("K3");
    CharacteristicData bott = catalog("Bott");
    CharacteristicData hp2 = catalog("HP2");

    CHECK(genus_of(SeriesKind::ahat, product(k3, k3)) == Rational(4));
    CHECK(genus_of(SeriesKind::l, product(k3, k3)) == Rational(256));
    CHECK(genus_of(SeriesKind::ahat, product(k3, bott)) == Rational(-2));
    CHECK(genus_of(SeriesKind::l, product(k3, bott)) == Rational(16 * -224));
    CHECK(genus_of(SeriesKind::ahat, product(hp2, k3)) == Rational(0));
    CHECK(genus_of(SeriesKind::l, product(hp2, hp2)) == Rational(1));
}
