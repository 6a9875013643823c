#include <doctest.h>

#include "hasse/census.hpp"

using namespace hasse;

TEST_SUITE("census")
{
    TEST_CASE("master set and both claims")
    {
        const CensusResult a = run_census(1);
        CHECK(a.master_count == 9565938);
        CHECK(a.master_count * 3 == 2ULL * 27 * 27 * 27 * 27 * 27);
        CHECK(a.claim74_holds);
        CHECK(a.claim75_holds);
        CHECK(a.counterexamples.empty());
    }

    TEST_CASE("result does not depend on the number of jobs")
    {
        const CensusResult a = run_census(1), b = run_census(3), c = run_census(8);
        for (const CensusResult *r : {&b, &c}) {
            CHECK(r->master_count == a.master_count);
            CHECK(r->claim74_holds == a.claim74_holds);
            CHECK(r->claim75_holds == a.claim75_holds);
            CHECK(r->counterexamples == a.counterexamples);
        }
    }
}
