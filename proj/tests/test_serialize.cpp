#include "widthone/serialize.hpp"
#include "widthone/sigma.hpp"

#include "doctest.h"

#include <string>

using namespace widthone;

TEST_CASE("tensor report pins field order and decimal strings") {
    const DenseTensor t = sigma_tableaux(Shape({2, 2}), 2);
    const OrderedJson doc = tensor_report(t, 2, "all", true);
    CHECK(doc.dump() ==
          R"({"n":[2,2],"s":2,"method":"all","entries":[)"
          R"({"index":[1,1],"value":"5"},{"index":[1,2],"value":"4"},)"
          R"({"index":[2,1],"value":"4"},{"index":[2,2],"value":"5"}],)"
          R"("total":"18","agreement":true})");
}

TEST_CASE("support entries skip zeros") {
    DenseTensor t(Shape({2, 2}));
    t.at(MultiIndex({2, 1})) = 3;
    const OrderedJson entries = support_entries(t);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].dump() == R"({"index":[2,1],"value":"3"})");
}

TEST_CASE("csv and plain renderings") {
    DenseTensor t(Shape({1, 2}));
    t.at(MultiIndex({1, 1})) = 1;
    t.at(MultiIndex({1, 2})) = 2;
    CHECK(tensor_csv(t) == "x_1,x_2,value\n1,1,1\n1,2,2\n");
    CHECK(tensor_plain(t) == "(1,1) 1\n(1,2) 2\ntotal 3\n");
}

TEST_CASE("decimal list keeps order") {
    CHECK(decimal_list({BigInt(1), BigInt(-4), BigInt(10)}) ==
          std::vector<std::string>{"1", "-4", "10"});
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("digest separates shape, sum, and entries") {
    const DenseTensor a = sigma_tableaux(Shape({2, 2}), 2);
    const DenseTensor b = sigma_hpoly(Shape({2, 2}), 2);
    CHECK(tensor_digest(a, 2) == tensor_digest(b, 2));
    CHECK(tensor_digest(a, 2) != tensor_digest(a, 3));
    const DenseTensor c = sigma_tableaux(Shape({2, 2}), 3);
    CHECK(tensor_digest(c, 3) != tensor_digest(a, 2));
    // 1x4 and 2x2 zero tensors serialize differently even with equal entries
    CHECK(tensor_digest(DenseTensor(Shape({1, 4})), 0) !=
          tensor_digest(DenseTensor(Shape({2, 2})), 0));
}
