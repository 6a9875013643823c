#include <doctest.h>

#include <set>

#include "hasse/membership.hpp"
#include "hasse/splitting.hpp"

using namespace hasse;

TEST_SUITE("splitting")
{
    TEST_CASE("represented primes")
    {
        const auto ps = find_represented_primes(Int(79), Int(1), 20);
        REQUIRE(ps.size() == 20);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const auto &r = ps[i];
            CHECK(r.p == r.x * r.x + 237 * r.y * r.y);
            CHECK(r.y >= 1);
            CHECK(is_prime_u64(r.p));
            CHECK(r.p % 3 == 1);
            if (i) CHECK(ps[i - 1].p < r.p);
        }
        // the stream and the batch agree, including across window growth
        RepresentedPrimeStream s(Int(79), Int(1), kDefaultSearchBound);
        for (const auto &r : ps) CHECK(s.next() == r);
        CHECK_THROWS_AS(find_represented_primes(Int(79), Int(1), 5, 300), DomainError);
        CHECK_THROWS_AS(find_represented_primes(Int(79), Int(100), 1, 1000), DomainError);
    }

    TEST_CASE("cubic residues match the set of cubes")
    {
        for (std::uint64_t p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL}) {
            std::set<std::uint64_t> cubes;
            for (std::uint64_t w = 1; w < p; ++w) cubes.insert(w * w * w % p);
            for (std::uint64_t z = 1; z < p; ++z) CHECK(is_cubic_residue(z, p) == (cubes.count(z) > 0));
            CHECK_THROWS_AS(is_cubic_residue(0, p), DomainError);
        }
    }

    TEST_CASE("residuacity does not depend on the square-root branch")
    {
        for (long d : {21L, 79L, 142L, 229L}) {
            const QuadElem eps = fundamental_unit(Int(d)).elem;
            for (const auto &rp : find_represented_primes(Int(d), Int(1), 30)) {
                const PrimeWitness w = evaluate_witness(eps, rp);
                CHECK(w.sqrt_d * w.sqrt_d % rp.p == static_cast<std::uint64_t>(d) % rp.p);
                const std::uint64_t other = reduce_mod_p(eps, rp.p, rp.p - w.sqrt_d);
                CHECK(is_cubic_residue(other, rp.p) == w.cubic);
            }
        }
    }

    TEST_CASE("d = 21: not in M, in M_3")
    {
        const QuadElem eps = fundamental_unit(Int(21)).elem;
        const Verdict v1 = membership_test(eps, 1);
        CHECK(v1.kind == VerdictKind::NonMember);
        REQUIRE(v1.witness.has_value());
        CHECK_FALSE(v1.witness->cubic);
        const Verdict v3 = membership_test(eps, 3, 50);
        CHECK(v3.kind == VerdictKind::LikelyMember);
        CHECK(v3.trials >= 50);
    }

    TEST_CASE("cubes are always members")
    {
        const QuadElem mu(Int(142), Int(5), Int(2));
        CHECK(membership_test(qpow(mu, 3), 1).kind == VerdictKind::LikelyMember);
        CHECK_THROWS_AS(membership_test(QuadElem(Int(142), Int(0), Int(0)), 1), UsageError);
    }

    TEST_CASE("criterion agrees with residuacity for d <= 120")
    {
        for (long d = 2; d <= 120; ++d) {
            if (!is_squarefree(Int(d))) continue;
            const CrosscheckReport r = thm16_crosscheck(Int(d));
            CHECK(r.agree);
            CHECK_FALSE(r.inconclusive);
        }
    }
}
