#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hasse/cubic_disc.hpp"
#include "hasse/membership.hpp"

using namespace hasse;

TEST_SUITE("cubic_disc")
{
    TEST_CASE("examples")
    {
        const DiscReport r21 = verify_disc_theorems(Int(21));
        CHECK(r21.field_disc == -567);
        CHECK(r21.theorem == "1.4");
        CHECK(r21.pass);
        const DiscReport r79 = verify_disc_theorems(Int(79));
        CHECK(r79.field_disc == -948);
        CHECK(r79.field_disc == r79.D_F);
        CHECK(r79.pass);
        CHECK(min_poly_of_t(fundamental_unit(Int(79))) == CubicPoly{-3, -160});
        CHECK(poly_disc(CubicPoly{-3, -5}) == -567);
    }

    TEST_CASE("reducible polynomials are rejected")
    {
        CHECK(integer_root(CubicPoly{-1, 0}) == Int(0));
        CHECK(integer_root(CubicPoly{-7, 6}).has_value());
        CHECK_FALSE(integer_root(CubicPoly{-3, -5}).has_value());
        CHECK_THROWS_AS(field_discriminant(CubicPoly{-1, 0}), DomainError);
        CHECK_THROWS_AS(field_discriminant(CubicPoly{-7, 6}), DomainError);
    }

    TEST_CASE("normalize_cubic")
    {
        CHECK(normalize_cubic(CubicPoly{-12, 16 * 2 + 1}) == CubicPoly{-12, 33});
        CHECK(normalize_cubic(CubicPoly{-3 * 4, 5 * 8}) == CubicPoly{-3, 5});
        CHECK(normalize_cubic(CubicPoly{0, 27 * 2}) == CubicPoly{0, 2});
    }

    TEST_CASE("local index agrees with Dedekind and with exhaustive search")
    {
        for (long p = -30; p <= 30; ++p)
            for (long q = -30; q <= 30; ++q) {
                const CubicPoly f{p, q};
                if (poly_disc(f) == 0 || integer_root(f) || !(normalize_cubic(f) == f)) continue;
                for (long l : {2L, 3L, 5L, 7L}) {
                    const LocalIndex li = local_index(f, Int(l));
                    CHECK(dedekind_is_maximal(f, Int(l)) == (li.index_valuation == 0));
                    if (l <= 3) CHECK(index_valuation_by_search(f, Int(l)) == li.index_valuation);
                    CHECK(li.disc_valuation == li.field_valuation + 2 * li.index_valuation);
                }
                const FieldDiscriminant fd = field_discriminant(f);
                CHECK(fd.field_disc * fd.index * fd.index == poly_disc(f));
            }
    }

    TEST_CASE("frozen table for d <= 500")
    {
        std::ifstream in(std::string(HASSE_TEST_DATA) + "/disc500.txt");
        REQUIRE(in);
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::string d, p, q, D, m;
            ss >> d >> p >> q >> D >> m;
            const FundUnit fu = fundamental_unit(Int(d));
            CHECK(min_poly_of_t(fu) == CubicPoly{Int(p), Int(q)});
            CHECK(field_discriminant(CubicPoly{Int(p), Int(q)}).field_disc == Int(D));
            CHECK(thm61_in_M(fu) == (m == "1"));
            ++rows;
        }
        CHECK(rows == 305);
    }

    TEST_CASE("quad_field_disc")
    {
        CHECK(quad_field_disc(Int(-7)) == -7);
        CHECK(quad_field_disc(Int(-237)) == -948);
        CHECK(quad_field_disc(Int(5)) == 5);
        CHECK(quad_field_disc(Int(-1)) == -4);
    }
}
