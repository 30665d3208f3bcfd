#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "euorient/crt.hpp"
#include "euorient/iseries.hpp"
#include "euorient/primes.hpp"

using namespace euorient;

TEST_CASE("select_primes picks the largest primes below the bound") {
    auto one = select_primes(1, 10);
    REQUIRE(one.size() == 1);
    CHECK(one[0].p == 7);

    auto two = select_primes(2, 12);
    REQUIRE(two.size() == 2);
    CHECK(two[0].p == 11);
    CHECK(two[1].p == 7);

    auto three = select_primes(3, 1u << 31);
    REQUIRE(three.size() == 3);
    CHECK(three[0].p != three[1].p);
    CHECK(three[1].p != three[2].p);
    for (auto p : three) {
        CHECK(p.p < (1u << 31));
        CHECK(is_prime_u32(p.p));
    }

    CHECK_THROWS_AS(select_primes(5, 11), ConfigError);
}

TEST_CASE("is_prime_u32 against trial division") {
    auto trial = [](uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; d++)
            if (n % d == 0) return false;
        return true;
    };
    for (uint32_t n = 0; n < 2000; n++) CHECK(is_prime_u32(n) == trial(n));
    CHECK(is_prime_u32(2147483647u)); // 2^31 - 1
    CHECK(!is_prime_u32(2147483647u - 2));
}

TEST_CASE("inv_mod") {
    CHECK(inv_mod(ResidueValue{1, {7}}).value == 1);
    CHECK(inv_mod(ResidueValue{2, {7}}).value == 4);
    CHECK(inv_mod(ResidueValue{5, {11}}).value == 9);
    CHECK_THROWS_AS(inv_mod(ResidueValue{0, {7}}), NonInvertible);

    // a * inv(a) = 1 for all residues of a small prime
    for (uint32_t a = 1; a < 101; a++) CHECK(mul_mod(a, inv_mod(a, 101), 101) == 1);
}

TEST_CASE("crt_combine textbook cases") {
    CHECK(crt_combine({{2, {3}}, {3, {5}}}) == 8);
    CHECK(crt_combine({{0, {97}}}) == 0);
    CHECK_THROWS_AS(crt_combine({{1, {5}}, {2, {5}}}), DuplicatePrime);
}

TEST_CASE("crt_combine recovers random integers below the prime product") {
    auto primes = select_primes(4, 1u << 30);
    BigInt mod = 1;
    for (auto p : primes) mod *= p.p;
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 200; t++) {
        BigInt n = 0;
        for (int limb = 0; limb < 3; limb++) n = (n << 32) | (uint32_t)rng();
        n %= mod;
        std::vector<ResidueValue> rs;
        for (auto p : primes) rs.push_back({(uint32_t)(n % p.p), p});
        CHECK(crt_combine(rs) == n);
    }
}

TEST_CASE("residue dump round trip") {
    std::vector<uint32_t> vals{1, 2, 10, 66, 504};
    std::string path = "residue_dump_test.tmp";
    write_residue_dump(path, "general", {1000003}, vals);
    std::string model;
    uint32_t prime = 0;
    auto back = read_residue_dump(path, &model, &prime);
    CHECK(back == vals);
    CHECK(model == "general");
    CHECK(prime == 1000003);
    std::remove(path.c_str());
}
