#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "frobcell/scalar.hpp"

using namespace frobcell;

namespace {

FieldElement rand_elem(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    if (f.is_rational()) return FieldElement(f, BigRat(num(rng), den(rng)));
    return FieldElement(f, num(rng));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    const Field q = Field::rationals();
    const FieldElement half = FieldElement::parse(q, "1/2");
    const FieldElement third = FieldElement::parse(q, "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - half).is_zero());
    CHECK((half * FieldElement(q, 2)).is_one());
    CHECK(FieldElement::parse(q, "-2/4").to_string() == "-1/2");
    CHECK(FieldElement::parse(q, "4/2").to_string() == "2");
}

TEST_CASE("prime field arithmetic") {
    const Field f3 = Field::prime(3);
    const FieldElement two(f3, 2);
    CHECK(two.inverse() == two);  // 2*2 = 4 = 1 mod 3
    CHECK((two + two) == FieldElement(f3, 1));
    CHECK(FieldElement(f3, -1) == two);
    CHECK(FieldElement(f3, BigRat(1, 2)) == two);  // 1/2 = 2 in F_3
}

TEST_CASE("division by zero and field mismatch are rejected") {
    const Field q = Field::rationals();
    const Field f5 = Field::prime(5);
    CHECK_THROWS_AS(FieldElement::zero(q).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(FieldElement(q, 1) / FieldElement::zero(q), DivisionByZeroError);
    CHECK_THROWS_AS(FieldElement(q, 1) + FieldElement(f5, 1), FieldMismatchError);
}

TEST_CASE("modulus must be prime") {
    CHECK_THROWS_AS(Field::prime(1), FrobcellError);
    CHECK_THROWS_AS(Field::prime(4), FrobcellError);
    CHECK_THROWS_AS(Field::prime(91), FrobcellError);  // 7*13
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(97));
    CHECK_NOTHROW(Field::prime(BigInt("1000000007")));
}

TEST_CASE("field descriptor round trip") {
    CHECK(Field::parse("q") == Field::rationals());
    CHECK(Field::parse("fp:7") == Field::prime(7));
    CHECK(Field::parse(Field::prime(11).to_string()) == Field::prime(11));
    CHECK_THROWS_AS(Field::parse("r64"), ParseError);
}

TEST_CASE("field axioms, randomized") {
    std::mt19937_64 rng(0xfeedf00d);
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(97)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElement x = rand_elem(f, rng);
            const FieldElement y = rand_elem(f, rng);
            const FieldElement z = rand_elem(f, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        }
    }
}

TEST_CASE("scalar parse/format round trip is canonical") {
    std::mt19937_64 rng(42);
    const Field q = Field::rationals();
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 500);
    for (int trial = 0; trial < 200; ++trial) {
        const FieldElement x(q, BigRat(num(rng), den(rng)));
        CHECK(FieldElement::parse(q, x.to_string()) == x);
    }
    CHECK_THROWS_AS(FieldElement::parse(q, "1/0"), FrobcellError);
    CHECK_THROWS_AS(FieldElement::parse(q, "x+1"), ParseError);
    CHECK_THROWS_AS(FieldElement::parse(q, ""), ParseError);
}
