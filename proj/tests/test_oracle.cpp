#include "widthone/oracle.hpp"
#include "widthone/sigma.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using namespace widthone;

TEST_CASE("weakly increasing sequences stream lexicographically") {
    CHECK(collect_weakly_increasing(2, 2) ==
          std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(collect_weakly_increasing(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(collect_weakly_increasing(1, 3) == std::vector<std::vector<int>>{{1, 1, 1}});
}

TEST_CASE("member count needs no enumeration") {
    CHECK(count_members(Shape({2, 2}), 2) == 9);
    CHECK(count_members(Shape({2, 2}), 0) == 1);
    CHECK(count_members(Shape({3}), 2) == 6);
    CHECK(count_members(Shape({2, 3, 2}), 1) == 12);
}

TEST_CASE("row tuples and tensors are inverse on members") {
    const Shape n({2, 3});
    WidthOneStream stream(n, 3);
    CHECK(stream.count() == count_members(n, 3));
    RowTuple rt;
    long long seen = 0;
    while (stream.next_rows(rt)) {
        ++seen;
        const DenseTensor t = row_tuple_to_tensor(rt, n);
        CHECK(is_member(t, 3));
        CHECK(t.total() == 3);
        const RowTuple back = tensor_to_row_tuple(t);
        CHECK(back.rows == rt.rows);
    }
    CHECK(BigInt(seen) == stream.count());
}

TEST_CASE("row tuple validation") {
    const Shape n({2, 2});
    CHECK_THROWS_AS(row_tuple_to_tensor(RowTuple{{{2, 1}, {1, 1}}}, n),
                    std::domain_error); // row not weakly increasing
    CHECK_THROWS_AS(row_tuple_to_tensor(RowTuple{{{1, 1}, {1}}}, n),
                    std::domain_error); // ragged lengths
    CHECK_THROWS_AS(row_tuple_to_tensor(RowTuple{{{1, 3}, {1, 1}}}, n),
                    std::domain_error); // value beyond the extent
    CHECK_THROWS_AS(row_tuple_to_tensor(RowTuple{{{1, 1}}}, n),
                    std::domain_error); // wrong rank
}

TEST_CASE("membership rejects non-chains and wrong sums") {
    const Shape n({2, 2});
    DenseTensor anti(n);
    anti.at(MultiIndex({1, 2})) = 1;
    anti.at(MultiIndex({2, 1})) = 1;
    CHECK(!is_member(anti, 2));
    CHECK_THROWS_AS(tensor_to_row_tuple(anti), std::domain_error);

    DenseTensor chain(n);
    chain.at(MultiIndex({1, 1})) = 2;
    CHECK(is_member(chain, 2));
    CHECK(!is_member(chain, 3));

    DenseTensor neg(n);
    neg.at(MultiIndex({1, 1})) = -1;
    neg.at(MultiIndex({2, 2})) = 3;
    CHECK(!is_member(neg, 2));
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(WidthOneStream(Shape({30, 30, 30, 30}), 5), GuardError);
    Guards tight;
    tight.max_enum = 8;
    CHECK_THROWS_AS(WidthOneStream(Shape({2, 2}), 2, tight), GuardError);
}

TEST_CASE("frozen width-one sum for the 2x2 grid at s=2") {
    const DenseTensor t = sigma_oracle(Shape({2, 2}), 2);
    CHECK(t.at(MultiIndex({1, 1})) == 5);
    CHECK(t.at(MultiIndex({1, 2})) == 4);
    CHECK(t.at(MultiIndex({2, 1})) == 4);
    CHECK(t.at(MultiIndex({2, 2})) == 5);
    CHECK(t.total() == 18);
}

TEST_CASE("column-counting kernel matches the per-tensor reference") {
    for (const Shape& n : {Shape({3}), Shape({2, 3}), Shape({3, 3}), Shape({2, 2, 2})}) {
        for (long long s = 0; s <= 3; ++s) {
            CAPTURE(n.dims());
            CAPTURE(s);
            CHECK(sigma_oracle(n, s) == serial::sigma_oracle(n, s));
        }
    }
}

TEST_CASE("filtering every tensor agrees with the bijection route") {
    CHECK(sigma_membership_oracle(Shape({3, 3}), 2) == sigma_oracle(Shape({3, 3}), 2));
    CHECK(sigma_membership_oracle(Shape({2, 2, 2}), 3) == sigma_oracle(Shape({2, 2, 2}), 3));
    CHECK(sigma_membership_oracle(Shape({4}), 3) == sigma_oracle(Shape({4}), 3));
    // deliberately narrow: it exists to validate the bijection, nothing more
    CHECK_THROWS_AS(sigma_membership_oracle(Shape({4, 3}), 2), std::domain_error);
    CHECK_THROWS_AS(sigma_membership_oracle(Shape({3, 3}), 4), std::domain_error);
}

TEST_CASE("mass of the oracle sum counts columns") {
    const Shape n({2, 3});
    for (long long s = 0; s <= 4; ++s) {
        const BigInt mass = sigma_oracle(n, s).total();
        CHECK(mass == BigInt(s) * count_members(n, s));
    }
}
