#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "epistoch/rng.hpp"
#include "test_support.hpp"

using epistoch::Rng;
using test_support::close;

TEST_CASE("uniform draws lie in [0,1) with the right first two moments") {
    Rng rng(12345);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    // 5 sigma bands: sd(mean) = 1/sqrt(12 n)
    CHECK(close(mean, 0.5, 5.0 / std::sqrt(12.0 * n)));
    CHECK(close(var, 1.0 / 12.0, 0.002));
}

TEST_CASE("same seed reproduces the stream, different seeds do not") {
    Rng a(987654321), b(987654321), c(987654322);
    bool all_equal_ab = true, any_diff_ac = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t x = a.next();
        all_equal_ab &= (x == b.next());
        any_diff_ac |= (x != c.next());
    }
    CHECK(all_equal_ab);
    CHECK(any_diff_ac);
}

TEST_CASE("exponential has the requested rate") {
    Rng rng(777);
    const int n = 200000;
    const double rate = 0.4;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.exponential(rate);
        REQUIRE(x >= 0.0);
        sum += x;
    }
    // sd(mean) = (1/rate)/sqrt(n)
    CHECK(close(sum / n, 1.0 / rate, 5.0 / (rate * std::sqrt(static_cast<double>(n)))));
}

TEST_CASE("bounded draws are unbiased across residue classes") {
    Rng rng(2024);
    const std::uint64_t bound = 7;
    const int n = 140000;
    std::vector<int> counts(bound, 0);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t v = rng.below(bound);
        REQUIRE(v < bound);
        ++counts[static_cast<std::size_t>(v)];
    }
    const double expect = static_cast<double>(n) / bound;
    const double sd = std::sqrt(expect * (1.0 - 1.0 / bound));
    for (std::uint64_t r = 0; r < bound; ++r)
        CHECK(close(counts[static_cast<std::size_t>(r)], expect, 5.0 * sd));
}

TEST_CASE("poisson matches mean and variance, small and chunked regimes") {
    for (const double mean : {3.0, 47.5}) {
        Rng rng(55 + static_cast<std::uint64_t>(mean));
        const int n = 100000;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = static_cast<double>(rng.poisson(mean));
            sum += x;
            sumsq += x * x;
        }
        const double m = sum / n;
        const double v = sumsq / n - m * m;
        CHECK(close(m, mean, 5.0 * std::sqrt(mean / n)));
        CHECK(close(v, mean, 0.05 * mean));
    }
}

TEST_CASE("normal draws have zero mean and unit variance") {
    Rng rng(31337);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sumsq += x * x;
    }
    const double m = sum / n;
    CHECK(close(m, 0.0, 5.0 / std::sqrt(static_cast<double>(n))));
    CHECK(close(sumsq / n - m * m, 1.0, 0.02));
}
