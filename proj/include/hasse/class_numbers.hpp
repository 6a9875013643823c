#ifndef HASSE_CLASS_NUMBERS_HPP
#define HASSE_CLASS_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hasse {

/// Primitive integral binary quadratic form a x^2 + b xy + c y^2.
struct BqForm {
    std::int64_t a = 0, b = 0, c = 0;

    std::int64_t disc() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool operator==(const BqForm &) const = default;
    auto operator<=>(const BqForm &) const = default;
};

bool is_reduced_definite(const BqForm &f);
bool is_reduced_indefinite(const BqForm &f);

/// Reduced primitive positive definite forms of discriminant D < 0.
std::vector<BqForm> reduced_forms_imaginary(std::int64_t D);
std::int64_t class_number_imaginary(std::int64_t D);

/// Reduced primitive indefinite forms of discriminant D > 0 (D not a square).
std::vector<BqForm> reduced_forms_indefinite(std::int64_t D);

/// One step of the cycle operator on reduced indefinite forms.
BqForm rho(const BqForm &f);

/// Number of rho-cycles of reduced forms of discriminant D (the narrow class number).
std::int64_t count_cycles(std::int64_t D);

/// Class number h(d) of Q(sqrt d), d squarefree > 1.
std::int64_t class_number_real(std::int64_t d);

/// Signed squarefree kernel of n != 0.
std::int64_t squarefree_kernel(std::int64_t n);

/// Discriminant of Q(sqrt n) for squarefree n != 1.
std::int64_t fundamental_discriminant(std::int64_t n);

/// Discriminant of F = Q(sqrt(-3d)).
std::int64_t imaginary_field_disc(std::int64_t d);

/// Number of roots of unity in the imaginary quadratic field of discriminant D.
int roots_of_unity_count(std::int64_t D);

/// Ring class number of the order Z[e sqrt(-3d)], i.e. |M_e : F|.
std::int64_t ring_class_degree(std::int64_t d, std::int64_t e);

/// phi((N)) = |(O_F / N O_F)^*| for F of discriminant D_F < 0.
std::int64_t ideal_totient(std::int64_t D_F, std::int64_t N);

/// Size of the image of the unit group of F in (O_F / N O_F)^*.
std::int64_t unit_image_size(std::int64_t D_F, std::int64_t N);

/// Degree of the ray class field F_(N) over F.
std::int64_t ray_class_degree(std::int64_t D_F, std::int64_t N);

struct Thm62Report {
    std::int64_t d = 0;
    std::string case_tag;   // "6.4" or "6.5"
    std::string identity;   // e.g. "M_3 = F_(6)"
    std::int64_t modulus = 0;  // N of the ray class field
    std::int64_t order_e = 0;  // e of the ring class field M_e
    std::int64_t h_F = 0;
    std::int64_t ring_degree = 0;
    std::int64_t ray_degree = 0;
    std::int64_t expected_multiple = 0; // expected = expected_multiple * h_F
    std::int64_t expected = 0;
    std::optional<std::pair<int, int>> g; // ((-m/3), (-m/2)) when 3 | d
    bool pass = false;
    std::string annotation; // non-empty for the documented edge case
};

Thm62Report verify_thm62(std::int64_t d);

} // namespace hasse

#endif
