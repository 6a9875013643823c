#ifndef HASSE_MEMBERSHIP_HPP
#define HASSE_MEMBERSHIP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hasse/quadratic.hpp"

namespace hasse {

/// Allowed residues of a (mod 27) for each class of n (mod 9), where
/// N(a + b sqrt d) = n^3. Bit k of row[n] is set iff a = k (mod 27) is allowed.
class PdTable {
public:
    static const PdTable &instance();

    bool allows(unsigned n_mod9, unsigned a_mod27) const { return (rows_[n_mod9 % 9] >> (a_mod27 % 27)) & 1u; }
    std::uint32_t row(unsigned n_mod9) const { return rows_[n_mod9 % 9]; }

private:
    PdTable();
    std::array<std::uint32_t, 9> rows_{};
};

/// Congruence criterion for the cube root of the fundamental unit to lie in
/// the ring class field of Z[sqrt(-3d)]. a is read mod 27 through den^-1.
bool thm61_in_M(const FundUnit &fu);

/// Same predicate on raw residues: a mod 27 and the norm epsilon.
bool thm61_predicate(unsigned a_mod27, int epsilon);

/// Signed n with N(u) = n^3; DomainError when the norm is not a cube.
Int norm_cube_root(const QuadElem &u);

bool pd_member(const QuadElem &u);

struct RdWitness {
    Int n;
    QuadElem base; // r + s sqrt d with N = n and u = n * base
};

struct SdClassification {
    bool norm_is_cube = false;
    bool in_Sd = false;
    bool in_Sd_star = false;
    Int n; // meaningful when norm_is_cube
    std::optional<RdWitness> rd_witness;
    std::vector<std::string> reasons; // failed S_d conditions
};

SdClassification classify_sd(const QuadElem &u);

} // namespace hasse

#endif
