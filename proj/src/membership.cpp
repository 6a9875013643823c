#include "hasse/membership.hpp"

#include <initializer_list>

namespace hasse {

namespace {

std::uint32_t residues(std::initializer_list<int> signed_values)
{
    std::uint32_t mask = 0;
    for (int v : signed_values) {
        mask |= 1u << (((v % 27) + 27) % 27);
        mask |= 1u << (((-v % 27) + 27) % 27);
    }
    return mask;
}

} // namespace

PdTable::PdTable()
{
    const std::uint32_t row_258 = residues({0, 2, 7, 9, 11});
    const std::uint32_t row_pm3 = residues({0, 4, 5, 9, 13});
    rows_[0] = residues({4, 5, 13});
    rows_[1] = residues({0, 1, 9});
    rows_[2] = row_258;
    rows_[3] = row_pm3;
    rows_[4] = residues({0, 8, 9});
    rows_[5] = row_258;
    rows_[6] = row_pm3;
    rows_[7] = residues({0, 9, 10});
    rows_[8] = row_258;
}

const PdTable &PdTable::instance()
{
    static const PdTable table;
    return table;
}

bool thm61_predicate(unsigned a_mod27, int epsilon)
{
    const unsigned a9 = a_mod27 % 9;
    if (a9 == 0) return true;
    if (epsilon == -1) return a9 == 2 || a9 == 7;
    return a_mod27 == 1 || a_mod27 == 26;
}

bool thm61_in_M(const FundUnit &fu)
{
    const auto [a, b] = half_residue(fu.elem, 27);
    return thm61_predicate(static_cast<unsigned>(a.get_ui()), fu.epsilon);
}

Int norm_cube_root(const QuadElem &u)
{
    const Int norm = qnorm(u);
    auto n = exact_cube_root(norm);
    if (!n) throw DomainError("norm " + norm.get_str() + " of " + u.to_string() + " is not a cube");
    return *n;
}

bool pd_member(const QuadElem &u)
{
    const Int n = norm_cube_root(u);
    const auto [a, b] = half_residue(u, 27);
    return PdTable::instance().allows(static_cast<unsigned>(mod(n, 9).get_ui()), static_cast<unsigned>(a.get_ui()));
}

SdClassification classify_sd(const QuadElem &u)
{
    if (u.is_zero()) throw UsageError("classify_sd: u must be nonzero");
    SdClassification out;
    auto n = exact_cube_root(qnorm(u));
    out.norm_is_cube = n.has_value();
    if (!n) {
        out.reasons.push_back("norm is not a cube");
        return out;
    }
    out.n = *n;

    if (is_cube_in_order(u)) out.reasons.push_back("u is a cube in O(d)");
    const Factorization content = rational_prime_content(u);
    bool cube_divisor = false, content_divides_d = true;
    for (const auto &pp : content.factors) {
        if (pp.exponent >= 3) cube_divisor = true;
        if (!mpz_divisible_p(u.d().get_mpz_t(), pp.prime.get_mpz_t())) content_divides_d = false;
    }
    if (cube_divisor) out.reasons.push_back("u is divisible by the cube of a rational prime");
    out.in_Sd = out.reasons.empty();
    out.in_Sd_star = out.in_Sd && content_divides_d;

    if (out.n != 0) {
        if (auto base = divide_exact(u, out.n); base && qnorm(*base) == out.n)
            out.rd_witness = RdWitness{out.n, *base};
    }
    return out;
}

} // namespace hasse
