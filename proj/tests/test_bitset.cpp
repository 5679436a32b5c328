#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galmine/bitset.hpp"

using galmine::Bitset;

TEST_CASE("empty and full") {
    Bitset e(70);
    CHECK(e.none());
    CHECK(e.count() == 0);
    Bitset f = Bitset::full(70);
    CHECK(f.count() == 70);
    CHECK(f.test(69));
    CHECK(e.is_subset_of(f));
    CHECK(!f.is_subset_of(e));
    CHECK(Bitset::full(0).none());
}

TEST_CASE("set, reset, find") {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(1) == 64);
    CHECK(b.find_next(65) == 129);
    CHECK(b.find_next(130) == Bitset::npos);
    CHECK(b.max_bit() == 129);
    b.reset(64);
    CHECK(b.count() == 2);
    CHECK(b.to_indices() == std::vector<std::size_t>{0, 129});
}

TEST_CASE("boolean algebra") {
    Bitset a(10), b(10);
    a.set(1);
    a.set(3);
    b.set(3);
    b.set(7);
    CHECK((a & b).to_indices() == std::vector<std::size_t>{3});
    CHECK((a | b).to_indices() == std::vector<std::size_t>{1, 3, 7});
    CHECK(a.minus(b).to_indices() == std::vector<std::size_t>{1});
    CHECK(a.intersects(b));
    CHECK(!a.minus(b).intersects(b));
}

TEST_CASE("lectic order basics") {
    // {0} > {1,2}: the smallest differing element decides
    Bitset a(3), b(3);
    a.set(0);
    b.set(1);
    b.set(2);
    CHECK(b.lectic_less(a));
    CHECK(!a.lectic_less(b));
    // empty set is smallest, full set is largest among its supersets
    Bitset empty(3);
    CHECK(empty.lectic_less(a));
    CHECK(empty.lectic_less(b));
    Bitset full = Bitset::full(3);
    CHECK(b.lectic_less(full));
    CHECK(!full.lectic_less(full));
}

TEST_CASE("lectic order is a strict total order on random sets") {
    std::mt19937 rng(7);
    std::bernoulli_distribution bit(0.5);
    auto rand_set = [&]() {
        Bitset s(67);
        for (std::size_t i = 0; i < 67; ++i)
            if (bit(rng)) s.set(i);
        return s;
    };
    for (int k = 0; k < 200; ++k) {
        Bitset a = rand_set(), b = rand_set(), c = rand_set();
        // antisymmetric
        if (a.lectic_less(b)) CHECK(!b.lectic_less(a));
        if (a == b) CHECK(!a.lectic_less(b));
        // total
        CHECK((a == b || a.lectic_less(b) || b.lectic_less(a)));
        // transitive
        if (a.lectic_less(b) && b.lectic_less(c)) CHECK(a.lectic_less(c));
    }
}

TEST_CASE("hash distinguishes width") {
    CHECK(Bitset(5).hash() != Bitset(6).hash());
    Bitset a(64), b(64);
    a.set(2);
    b.set(2);
    CHECK(a.hash() == b.hash());
}
