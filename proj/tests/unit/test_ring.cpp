#include <doctest.h>

#include "helpers.hpp"
#include "seqcm/ring.hpp"

using namespace seqcm;
using namespace seqcm::test;

TEST_CASE("VarSet set algebra") {
    VarSet a;
    a.add(0);
    a.add(3);
    VarSet b;
    b.add(3);
    b.add(5);

    CHECK(a.size() == 2);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(1));
    CHECK((a & b).size() == 1);
    CHECK((a | b).size() == 3);
    CHECK((a - b) == [] { VarSet v; v.add(0); return v; }());
    CHECK(b.subset_of(a | b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.intersects(b));
    CHECK(VarSet{}.empty());
    CHECK(VarSet{}.subset_of(a));

    std::vector<int> members = (a | b).members();
    CHECK(members == std::vector<int>{0, 3, 5});
}

TEST_CASE("RingSpec naming and blocks") {
    RingSpec ring(3, 2);
    CHECK(ring.var_count() == 5);
    CHECK(ring.var_name(0) == "x1");
    CHECK(ring.var_name(2) == "x3");
    CHECK(ring.var_name(3) == "y1");
    CHECK(ring.var_name(4) == "y2");
    CHECK(ring.var_index("x2") == 1);
    CHECK(ring.var_index("y2") == 4);
    CHECK(ring.var_index("y3") == -1);
    CHECK(ring.var_index("z1") == -1);
    CHECK(ring.p_vars().size() == 3);
    CHECK(ring.q_vars().size() == 2);
    CHECK((ring.p_vars() | ring.q_vars()) == ring.all_vars());
    CHECK(ring.is_x(2));
    CHECK_FALSE(ring.is_x(3));
}

TEST_CASE("RingSpec accepts one-block rings") {
    RingSpec xonly(2, 0);
    CHECK(xonly.q_vars().empty());
    RingSpec yonly(0, 1);
    CHECK(yonly.p_vars().empty());
    CHECK(yonly.var_name(0) == "y1");
}

TEST_CASE("RingSpec rejects bad sizes") {
    CHECK_THROWS_AS(RingSpec(0, 0), InputError);
    CHECK_THROWS_AS(RingSpec(-1, 2), InputError);
    CHECK_THROWS_AS(RingSpec(20, 5), InputError);
}

TEST_CASE("FieldSpec accepts 0 and primes only") {
    CHECK(FieldSpec{0}.characteristic == 0);
    CHECK(FieldSpec{2}.characteristic == 2);
    CHECK(FieldSpec{3}.characteristic == 3);
    CHECK(FieldSpec{65521}.characteristic == 65521);
    CHECK_THROWS_AS(FieldSpec{1}, InputError);
    CHECK_THROWS_AS(FieldSpec{4}, InputError);
    CHECK_THROWS_AS(FieldSpec{91}, InputError);  // 7 * 13
    CHECK_THROWS_AS(FieldSpec{-2}, InputError);
    CHECK_THROWS_AS(FieldSpec{65537}, InputError);  // beyond the modular range
}
