#include <doctest.h>

#include <set>

#include "hasse/membership.hpp"

using namespace hasse;

namespace {

std::set<unsigned> allowed(std::initializer_list<int> reps)
{
    std::set<unsigned> s;
    for (int r : reps) {
        s.insert(static_cast<unsigned>((r % 27 + 27) % 27));
        s.insert(static_cast<unsigned>((-r % 27 + 27) % 27));
    }
    return s;
}

} // namespace

TEST_SUITE("membership")
{
    TEST_CASE("P_d table rows")
    {
        const std::set<unsigned> rows[9] = {
            allowed({4, 5, 13}),          allowed({0, 1, 9}),           allowed({0, 2, 7, 9, 11}),
            allowed({0, 4, 5, 9, 13}),    allowed({0, 8, 9}),           allowed({0, 2, 7, 9, 11}),
            allowed({0, 4, 5, 9, 13}),    allowed({0, 9, 10}),          allowed({0, 2, 7, 9, 11}),
        };
        const PdTable &t = PdTable::instance();
        for (unsigned n = 0; n < 9; ++n)
            for (unsigned a = 0; a < 27; ++a) {
                CHECK(t.allows(n, a) == rows[n].count(a) > 0);
                CHECK(t.allows(n, a) == t.allows(n, (27 - a) % 27));
            }
    }

    TEST_CASE("unit criterion examples")
    {
        CHECK_FALSE(thm61_in_M(fundamental_unit(Int(21))));
        CHECK(thm61_in_M(fundamental_unit(Int(79))));
        CHECK_FALSE(thm61_in_M(fundamental_unit(Int(142))));
        for (unsigned a : {0u, 9u, 18u}) {
            CHECK(thm61_predicate(a, 1));
            CHECK(thm61_predicate(a, -1));
        }
        CHECK(thm61_predicate(2, -1));
        CHECK_FALSE(thm61_predicate(2, 1));
        CHECK(thm61_predicate(26, 1));
        CHECK_FALSE(thm61_predicate(10, 1));
    }

    TEST_CASE("P_d restricted to units equals the unit criterion")
    {
        for (unsigned a = 0; a < 27; ++a)
            for (int eps : {1, -1})
                CHECK(PdTable::instance().allows(eps == 1 ? 1 : 8, a) == thm61_predicate(a, eps));
        for (long d = 2; d < 300; ++d) {
            if (!is_squarefree(Int(d))) continue;
            const FundUnit fu = fundamental_unit(Int(d));
            CHECK(pd_member(fu.elem) == thm61_in_M(fu));
        }
    }

    TEST_CASE("norms of the listed elements")
    {
        CHECK(qnorm(QuadElem(Int(79), Int(17), Int(2))) == -27);
        CHECK(qnorm(QuadElem(Int(142), Int(13), Int(1))) == 27);
        CHECK(qnorm(QuadElem(Int(223), Int(14), Int(1))) == -27);
        CHECK(qnorm(QuadElem(Int(229), Int(11), Int(1), 2)) == -27);
        CHECK(qnorm(QuadElem(Int(235), Int(28), Int(3))) == -1331);
        CHECK(qnorm(QuadElem(Int(254), Int(77), Int(2))) == 4913);
        CHECK(qnorm(QuadElem(Int(79), Int(1376), Int(387))) == Int(-215) * 215 * 215);
    }

    TEST_CASE("pd_member examples")
    {
        CHECK(pd_member(QuadElem(Int(142), Int(13), Int(1))));
        CHECK_FALSE(pd_member(QuadElem(Int(79), Int(17), Int(2))));
        CHECK_FALSE(pd_member(QuadElem(Int(229), Int(11), Int(1), 2)));
        CHECK_THROWS_AS(pd_member(QuadElem(Int(2), Int(3), Int(1))), DomainError);
        CHECK(norm_cube_root(QuadElem(Int(235), Int(28), Int(3))) == -11);
    }

    TEST_CASE("classify_sd examples")
    {
        const auto a = classify_sd(QuadElem(Int(79), Int(1376), Int(387)));
        CHECK(a.in_Sd);
        CHECK_FALSE(a.in_Sd_star);
        CHECK_FALSE(a.rd_witness.has_value());
        CHECK(a.n == -215);

        const auto b = classify_sd(QuadElem(Int(5), Int(31), Int(155), 2));
        REQUIRE(b.rd_witness.has_value());
        CHECK(b.rd_witness->n == -31);
        CHECK(qnorm(b.rd_witness->base) == -31);

        const auto c = classify_sd(QuadElem(Int(235), Int(28), Int(3)));
        CHECK(c.in_Sd_star);
        CHECK(c.n == -11);

        for (auto u : {QuadElem(Int(79), Int(17), Int(2)), QuadElem(Int(142), Int(13), Int(1)),
                       QuadElem(Int(223), Int(14), Int(1)), QuadElem(Int(229), Int(11), Int(1), 2),
                       QuadElem(Int(254), Int(77), Int(2))})
            CHECK(classify_sd(u).in_Sd_star);

        const auto cube = classify_sd(qpow(QuadElem(Int(7), Int(2), Int(1)), 3));
        CHECK_FALSE(cube.in_Sd);
        const auto content = classify_sd(QuadElem(Int(7), Int(8), Int(0)));
        CHECK_FALSE(content.in_Sd);
        CHECK_FALSE(classify_sd(QuadElem(Int(7), Int(3), Int(1))).norm_is_cube);
    }

    TEST_CASE("cubes times the fundamental unit lie in S_d with ramified content")
    {
        for (long d : {2L, 7L, 21L, 79L}) {
            const QuadElem eps = fundamental_unit(Int(d)).elem;
            for (long x = 1; x < 12; ++x)
                for (long y = 1; y < 12; ++y) {
                    const QuadElem mu{Int(d), Int(x), Int(y)};
                    if (rational_prime_content(mu).empty() == false) continue;
                    const QuadElem u = qmul(qpow(mu, 3), eps);
                    const auto cls = classify_sd(u);
                    CHECK(cls.in_Sd);
                    const Int disc = d % 4 == 1 ? Int(d) : Int(4 * d);
                    for (const auto &pp : rational_prime_content(u).factors) CHECK(kronecker(disc, pp.prime) == 0);
                    if (d % 4 != 3) CHECK(cls.in_Sd_star);
                }
        }
    }
}
