#include <catch2/catch_amalgamated.hpp>

#include "semlink/rng.hpp"

using semlink::Rng;

TEST_CASE("same seed and path give identical sequences") {
    Rng a = Rng(1).substream({"snr=5", "trial=0"});
    Rng b = Rng(1).substream({"snr=5", "trial=0"});
    for (int i = 0; i < 1000; ++i) REQUIRE(a.u64() == b.u64());
}

TEST_CASE("sibling substreams diverge almost everywhere") {
    Rng a = Rng(1).substream({"snr=5", "trial=0"});
    Rng b = Rng(1).substream({"snr=5", "trial=1"});
    int same = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
        if (a.u64() == b.u64()) ++same;
    REQUIRE(same <= n / 100);  // >= 99% of positions differ
}

TEST_CASE("seed changes the stream") {
    Rng a = Rng(2).substream("a");
    Rng b = Rng(1).substream("a");
    bool differ = false;
    for (int i = 0; i < 64 && !differ; ++i) differ = a.u64() != b.u64();
    REQUIRE(differ);
}

TEST_CASE("empty substream path is rejected") {
    REQUIRE_THROWS_AS(Rng(1).substream(std::initializer_list<std::string_view>{}),
                      std::invalid_argument);
}

TEST_CASE("u01 stays in (0,1]") {
    Rng r(3);
    for (int i = 0; i < 100000; ++i) {
        const double u = r.u01();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
}

TEST_CASE("normal draws have the right first two moments") {
    Rng r(4);
    const int n = 200000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        s1 += z;
        s2 += z * z;
    }
    const double mean = s1 / n;
    const double var = s2 / n - mean * mean;
    REQUIRE(std::abs(mean) < 0.01);
    REQUIRE(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("cnormal total variance matches request") {
    Rng r(5);
    const int n = 200000;
    double p = 0.0;
    for (int i = 0; i < n; ++i) p += std::norm(r.cnormal(0.5));
    REQUIRE(std::abs(p / n - 0.5) < 0.01);
}

TEST_CASE("below is within range and deterministic") {
    Rng a(6), b(6);
    for (int i = 0; i < 1000; ++i) {
        const uint64_t x = a.below(7);
        REQUIRE(x < 7);
        REQUIRE(x == b.below(7));
    }
    REQUIRE_THROWS_AS(a.below(0), std::invalid_argument);
}
