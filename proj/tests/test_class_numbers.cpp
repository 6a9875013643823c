#include <doctest.h>

#include "hasse/class_numbers.hpp"
#include "hasse/arith.hpp"

using namespace hasse;

namespace {

// h(D) = -(w / 2|D|) sum_{n=1}^{|D|} (D/n) n for a fundamental D < 0.
std::int64_t analytic_class_number(std::int64_t D)
{
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= -D; ++n) s += kronecker(Int(static_cast<long>(D)), Int(static_cast<long>(n))) * n;
    const std::int64_t w = D == -3 ? 6 : D == -4 ? 4 : 2;
    return -w * s / (2 * -D);
}

bool is_fundamental(std::int64_t D)
{
    if (D % 4 == -3 || D % 4 == 1) return is_squarefree(Int(static_cast<long>(D)));
    if (D % 4 != 0) return false;
    const std::int64_t m = D / 4;
    return (m % 4 == -1 || m % 4 == 2 || m % 4 == -2 || m % 4 == 3) && is_squarefree(Int(static_cast<long>(m)));
}

} // namespace

TEST_SUITE("class_numbers")
{
    TEST_CASE("imaginary class numbers")
    {
        CHECK(class_number_imaginary(-15) == 2);
        CHECK(class_number_imaginary(-4) == 1);
        CHECK(class_number_imaginary(-3) == 1);
        CHECK(class_number_imaginary(-36) == 2);
        CHECK(class_number_imaginary(-1704) == 24);
        CHECK(class_number_imaginary(-23) == 3);
        CHECK_THROWS_AS(class_number_imaginary(-5), UsageError);
    }

    TEST_CASE("form count matches the analytic formula for |D| <= 200")
    {
        for (std::int64_t D = -3; D >= -200; --D)
            if (is_fundamental(D)) CHECK(class_number_imaginary(D) == analytic_class_number(D));
    }

    TEST_CASE("real class numbers")
    {
        for (std::int64_t d : {79, 142, 223, 229, 254}) CHECK(class_number_real(d) == 3);
        for (std::int64_t d : {10, 15, 26, 30, 34, 35}) CHECK(class_number_real(d) == 2);
        for (std::int64_t d : {82, 130, 145}) CHECK(class_number_real(d) == 4);
        for (std::int64_t d : {2, 3, 5, 6, 7, 13, 21, 94}) CHECK(class_number_real(d) == 1);
        CHECK_THROWS_AS(class_number_real(12), UsageError);
    }

    TEST_CASE("reduced indefinite forms are closed under rho")
    {
        for (std::int64_t D : {12, 13, 40, 60, 316, 568, 1016}) {
            for (const auto &f : reduced_forms_indefinite(D)) {
                const BqForm g = rho(f);
                CHECK(g.disc() == D);
                CHECK(is_reduced_indefinite(g));
            }
        }
        CHECK(count_cycles(4 * 79) == 6);
    }

    TEST_CASE("ring class degrees")
    {
        CHECK(imaginary_field_disc(79) == -948);
        CHECK(imaginary_field_disc(21) == -7);
        CHECK(imaginary_field_disc(3) == -4);
        CHECK(ring_class_degree(79, 1) == 12);
        CHECK(ring_class_degree(79, 3) == 36);
        CHECK(ring_class_degree(21, 1) == 4); // Z[sqrt -63] has conductor 6 over Q(sqrt -7)
        // h(O) = h_K f prod (1 - (D/p)/p) / [O_K^* : O^*] against the form count
        for (std::int64_t d : {2, 5, 7, 10, 11, 13, 14}) {
            for (std::int64_t e : {1, 2, 3}) {
                const std::int64_t D = -12 * d * e * e;
                CHECK(ring_class_degree(d, e) == class_number_imaginary(D));
            }
        }
    }

    TEST_CASE("ray class degrees")
    {
        CHECK(ideal_totient(-948, 3) == 6);
        CHECK(ideal_totient(-7, 2) == 1);
        CHECK(unit_image_size(-4, 3) == 4);
        CHECK(unit_image_size(-4, 2) == 2);
        CHECK(unit_image_size(-7, 2) == 1);
        CHECK(unit_image_size(-7, 3) == 2);
        CHECK(ray_class_degree(-948, 3) == 36);
    }

    TEST_CASE("ring and ray degrees agree for d <= 200")
    {
        for (std::int64_t d = 2; d <= 200; ++d) {
            if (!is_squarefree(Int(static_cast<long>(d)))) continue;
            const Thm62Report r = verify_thm62(d);
            CHECK(r.ring_degree == r.ray_degree);
            if (d == 3) {
                CHECK_FALSE(r.pass);
                CHECK_FALSE(r.annotation.empty());
                CHECK(r.ring_degree == 2);
                CHECK(r.expected == 4);
            } else {
                CHECK(r.pass);
                CHECK(r.annotation.empty());
            }
        }
        const Thm62Report r21 = verify_thm62(21);
        REQUIRE(r21.g.has_value());
        CHECK(r21.g->first == -1);
        CHECK(r21.g->second == 1);
        CHECK(r21.expected_multiple == 4);
    }
}
