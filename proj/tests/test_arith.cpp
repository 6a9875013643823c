#include <doctest.h>

#include <random>

#include "hasse/arith.hpp"

using namespace hasse;

TEST_SUITE("arith")
{
    TEST_CASE("primality agrees with a sieve")
    {
        const auto primes = primes_below(100000);
        std::vector<bool> sieve(100000, false);
        for (auto p : primes) sieve[p] = true;
        for (unsigned n = 0; n < 100000; ++n) {
            CHECK(is_prime_u64(n) == sieve[n]);
            CHECK(is_prime(Int(n)) == sieve[n]);
        }
        CHECK_FALSE(is_prime(Int(561)));
        CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to 2, 3, 5, 7
    }

    TEST_CASE("large primes and seeds")
    {
        Int m89 = (Int(1) << 89) - 1, m127 = (Int(1) << 127) - 1;
        for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
            set_primality_seed(seed);
            CHECK(is_prime(m89));
            CHECK(is_prime(m127));
            CHECK_FALSE(is_prime(m89 * m127));
        }
        set_primality_seed(0);
    }

    TEST_CASE("factorize examples")
    {
        auto f = factorize((Int(1) << 64) + 1);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].prime == 274177);
        CHECK(f.factors[1].prime == Int("67280421310721"));
        auto g = factorize(-360);
        CHECK(g.sign == -1);
        CHECK(g.value() == -360);
        CHECK(g.exponent_of(2) == 3);
        CHECK(g.exponent_of(3) == 2);
        CHECK(g.exponent_of(7) == 0);
        CHECK(factorize(1).empty());
    }

    TEST_CASE("factorize random products")
    {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 60; ++trial) {
            Int n = 1;
            const int k = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < k; ++i) {
                Int p;
                Int start = Int(static_cast<unsigned long>(rng() >> (20 + rng() % 30)));
                mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
                n *= p;
            }
            const Factorization f = factorize(n);
            CHECK(f.value() == n);
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                CHECK(is_prime(f.factors[i].prime));
                if (i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
            }
        }
    }

    TEST_CASE("kronecker matches Euler's criterion")
    {
        for (auto p : primes_below(200)) {
            if (p == 2) continue;
            for (long a = -50; a <= 50; ++a) {
                const Int e = pow_mod(mod(Int(a), Int(p)), Int((p - 1) / 2), Int(p));
                const int euler = e == 0 ? 0 : e == 1 ? 1 : -1;
                CHECK(kronecker(Int(a), Int(p)) == euler);
            }
        }
        CHECK(kronecker(Int(5), Int(2)) == -1);
        CHECK(kronecker(Int(17), Int(2)) == 1);
        CHECK(kronecker(Int(6), Int(2)) == 0);
    }

    TEST_CASE("sqrt_mod")
    {
        for (auto p : primes_below(500)) {
            if (p == 2) continue;
            for (unsigned a = 1; a < p; ++a) {
                auto r = sqrt_mod(Int(a), Int(p));
                CHECK(r.has_value() == (kronecker(Int(a), Int(p)) == 1));
                if (r) {
                    CHECK(mod(*r * *r, Int(p)) == a);
                    CHECK(*r <= Int(p) - *r);
                }
            }
        }
        CHECK_THROWS_AS(sqrt_mod(Int(3), Int(2)), UsageError);
    }

    TEST_CASE("helpers")
    {
        CHECK(is_squarefree(Int(142)));
        CHECK_FALSE(is_squarefree(Int(4)));
        CHECK(is_squarefree(Int(1)));
        CHECK(is_squarefree(Int(-15)));
        CHECK_FALSE(is_squarefree(Int(-12)));
        CHECK_THROWS_AS(is_squarefree(Int(0)), UsageError);
        CHECK(exact_cube_root(Int(-3307949)) == Int(-149));
        CHECK_FALSE(exact_cube_root(Int(26)).has_value());
        CHECK(exact_sqrt(Int(144)) == Int(12));
        CHECK(floor_cbrt(Int(-9)) == -3);
        CHECK(valuation(Int(1376), Int(2)) == 5);
        CHECK(inverse_mod(Int(2), Int(27)) == 14);
        CHECK_THROWS_AS(inverse_mod(Int(3), Int(27)), DomainError);
    }
}
