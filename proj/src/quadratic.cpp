#include "hasse/quadratic.hpp"

#include <algorithm>
#include <sstream>

namespace hasse {

namespace {

bool is_one_mod_four(const Int &d) { return mod(d, 4) == 1; }

void require_same_field(const QuadElem &u, const QuadElem &v)
{
    if (u.d() != v.d()) throw UsageError("quadratic: elements of different fields");
}

// Builds (x + y sqrt d)/den for den in {1, 2, 4}; the value must be integral.
QuadElem normalized(const Int &d, Int x, Int y, unsigned den)
{
    while (den > 1 && mpz_even_p(x.get_mpz_t()) && mpz_even_p(y.get_mpz_t())) {
        x >>= 1;
        y >>= 1;
        den >>= 1;
    }
    return QuadElem(d, std::move(x), std::move(y), den);
}

} // namespace

void require_real_field(const Int &d)
{
    if (d <= 1) throw UsageError("d must be greater than 1, got " + d.get_str());
    if (!is_squarefree(d)) throw UsageError("d must be squarefree, got " + d.get_str());
}

QuadElem::QuadElem(Int d, Int x, Int y, unsigned den) : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)), den_(den)
{
    if (d_ <= 1) throw UsageError("QuadElem: d must exceed 1");
    if (den_ != 1 && den_ != 2) throw UsageError("QuadElem: den must be 1 or 2");
    if (den_ == 2) {
        if (mpz_even_p(x_.get_mpz_t()) && mpz_even_p(y_.get_mpz_t())) {
            x_ >>= 1;
            y_ >>= 1;
            den_ = 1;
        } else if (!is_one_mod_four(d_) || mpz_even_p(x_.get_mpz_t()) || mpz_even_p(y_.get_mpz_t())) {
            throw UsageError("QuadElem: (" + x_.get_str() + " + " + y_.get_str() + " sqrt " + d_.get_str() +
                             ")/2 is not in the maximal order");
        }
    }
}

QuadElem QuadElem::from_omega(const Int &d, const Int &a, const Int &b)
{
    if (is_one_mod_four(d)) return normalized(d, 2 * a + b, b, 2);
    return QuadElem(d, a, b, 1);
}

std::pair<Int, Int> QuadElem::omega_coords() const
{
    if (!is_one_mod_four(d_)) return {x_, y_};
    // (x + y sqrt d)/den = (x - y)/den + (2y/den) omega
    if (den_ == 2) return {Int((x_ - y_) / 2), y_};
    return {Int(x_ - y_), Int(2 * y_)};
}

std::string QuadElem::to_string() const
{
    std::ostringstream os;
    if (den_ == 2) os << '(';
    os << x_.get_str();
    os << (sgn(y_) < 0 ? "-" : "+") << Int(abs(y_)).get_str() << "*sqrt(" << d_.get_str() << ")";
    if (den_ == 2) os << ")/2";
    return os.str();
}

QuadElem qmul(const QuadElem &u, const QuadElem &v)
{
    require_same_field(u, v);
    Int x = u.x() * v.x() + u.d() * u.y() * v.y();
    Int y = u.x() * v.y() + u.y() * v.x();
    return normalized(u.d(), std::move(x), std::move(y), u.den() * v.den());
}

QuadElem qadd(const QuadElem &u, const QuadElem &v)
{
    require_same_field(u, v);
    if (u.den() == v.den()) return normalized(u.d(), u.x() + v.x(), u.y() + v.y(), u.den());
    const Int su = v.den(), sv = u.den(); // cross-scale to den 2
    return normalized(u.d(), u.x() * su + v.x() * sv, u.y() * su + v.y() * sv, 2);
}

QuadElem qneg(const QuadElem &u) { return QuadElem(u.d(), -u.x(), -u.y(), u.den()); }

QuadElem qconj(const QuadElem &u) { return QuadElem(u.d(), u.x(), -u.y(), u.den()); }

Int qnorm(const QuadElem &u)
{
    Int n = u.x() * u.x() - u.d() * u.y() * u.y();
    if (u.den() == 2) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
    return n;
}

Int qtrace(const QuadElem &u) { return u.den() == 2 ? u.x() : Int(2 * u.x()); }

QuadElem qpow(const QuadElem &u, unsigned long k)
{
    QuadElem result(u.d(), 1, 0, 1);
    QuadElem base = u;
    while (k) {
        if (k & 1) result = qmul(result, base);
        k >>= 1;
        if (k) base = qmul(base, base);
    }
    return result;
}

QuadElem qscale(const QuadElem &u, const Int &m) { return QuadElem(u.d(), u.x() * m, u.y() * m, u.den()); }

std::optional<QuadElem> divide_exact(const QuadElem &u, const Int &m)
{
    if (m == 0) throw UsageError("divide_exact: division by zero");
    const Int denom = m * u.den();
    if (mpz_divisible_p(u.x().get_mpz_t(), denom.get_mpz_t()) && mpz_divisible_p(u.y().get_mpz_t(), denom.get_mpz_t()))
        return QuadElem(u.d(), u.x() / denom, u.y() / denom, 1);
    if (!is_one_mod_four(u.d())) return std::nullopt;
    Int x2 = 2 * u.x(), y2 = 2 * u.y();
    if (!mpz_divisible_p(x2.get_mpz_t(), denom.get_mpz_t()) || !mpz_divisible_p(y2.get_mpz_t(), denom.get_mpz_t()))
        return std::nullopt;
    Int x = x2 / denom, y = y2 / denom;
    if (mpz_odd_p(x.get_mpz_t()) != mpz_odd_p(y.get_mpz_t())) return std::nullopt;
    return QuadElem(u.d(), std::move(x), std::move(y), 2);
}

CfExpansion expand_cf(const Int &d)
{
    require_real_field(d);
    CfExpansion cf;
    cf.d = d;
    cf.P0 = is_one_mod_four(d) ? 1 : 0;
    cf.Q0 = is_one_mod_four(d) ? 2 : 1;
    const Int root = sqrt(d);

    Int P = cf.P0, Q = cf.Q0;
    Int P1, Q1; // state after the leading quotient; the expansion is purely periodic from there
    for (std::size_t k = 0;; ++k) {
        // Q > 0 throughout, so floor((P + sqrt d)/Q) == floor((P + isqrt d)/Q)
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), Int(P + root).get_mpz_t(), Q.get_mpz_t());
        cf.quotients.push_back(a);
        Int nextP = a * Q - P;
        Int nextQ = (d - nextP * nextP) / Q;
        P = std::move(nextP);
        Q = std::move(nextQ);
        if (k == 0) {
            P1 = P;
            Q1 = Q;
        } else if (P == P1 && Q == Q1) {
            cf.period = k;
            return cf;
        }
    }
}

QuadElem unit_from_expansion(const CfExpansion &cf)
{
    Int p_prev = 1, p = cf.quotients.at(0);
    Int q_prev = 0, q = 1;
    for (std::size_t i = 1; i < cf.period; ++i) {
        Int pn = cf.quotients[i] * p + p_prev;
        Int qn = cf.quotients[i] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
    }
    // p - q * conj(omega)
    if (cf.Q0 == 2) return normalized(cf.d, 2 * p - q, q, 2);
    return QuadElem(cf.d, p, q, 1);
}

FundUnit fundamental_unit(const Int &d)
{
    const CfExpansion cf = expand_cf(d);
    QuadElem unit = unit_from_expansion(cf);
    const Int n = qnorm(unit);
    if (n != 1 && n != -1) throw std::logic_error("fundamental_unit: continued fraction produced a non-unit");
    return FundUnit{std::move(unit), n == 1 ? 1 : -1};
}

std::pair<Int, Int> half_residue(const QuadElem &u, const Int &modulus)
{
    if (modulus <= 0 || mpz_even_p(modulus.get_mpz_t())) throw UsageError("half_residue: modulus must be odd and positive");
    const Int inv = inverse_mod(Int(u.den()), modulus);
    return {mod(u.x() * inv, modulus), mod(u.y() * inv, modulus)};
}

std::optional<QuadElem> is_cube_in_order(const QuadElem &u)
{
    if (u.is_zero()) return QuadElem(u.d(), 0, 0, 1);
    if (!exact_cube_root(qnorm(u))) return std::nullopt; // N(rho)^3 = N(u)

    const bool half_allowed = is_one_mod_four(u.d());
    unsigned long shift = 64 + 2 * (bit_length(u.x()) + bit_length(u.y())) + bit_length(u.d());

    // The starting shift bounds the embedding error well below 1/8; a close
    // but failing candidate is retried once at doubled precision.
    for (int attempt = 0; attempt < 2; ++attempt, shift *= 2) {
        // sqrt(d) * 2^shift, truncated
        Int scaled_root;
        mpz_mul_2exp(scaled_root.get_mpz_t(), u.d().get_mpz_t(), 2 * shift);
        mpz_sqrt(scaled_root.get_mpz_t(), scaled_root.get_mpz_t());

        Int x_scaled;
        mpz_mul_2exp(x_scaled.get_mpz_t(), u.x().get_mpz_t(), shift);
        const Int emb1 = x_scaled + u.y() * scaled_root; // den * sigma_1(u) * 2^shift
        const Int emb2 = x_scaled - u.y() * scaled_root;

        // cbrt(sigma_i) * 2^shift = cbrt(emb_i * 2^(2 shift) / den)
        auto scaled_cbrt = [&](const Int &emb) {
            Int t;
            mpz_mul_2exp(t.get_mpz_t(), emb.get_mpz_t(), 2 * shift);
            if (u.den() == 2) mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
            return floor_cbrt(t);
        };
        const Int r1 = scaled_cbrt(emb1), r2 = scaled_cbrt(emb2);

        bool near_integer = false;
        for (unsigned den : {1u, 2u}) {
            if (den == 2 && !half_allowed) continue;
            // X = den (r1 + r2) / 2^(shift+1), Y = den (r1 - r2) / (2 scaled_root)
            const Int xnum = den * (r1 + r2);
            Int xden;
            mpz_ui_pow_ui(xden.get_mpz_t(), 2, shift + 1);
            const Int ynum = den * (r1 - r2);
            const Int yden = 2 * scaled_root;

            auto round_div = [](const Int &num, const Int &dd, Int &rem) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), Int(2 * num + dd).get_mpz_t(), Int(2 * dd).get_mpz_t());
                rem = abs(num - q * dd); // distance to the nearest integer, times dd
                return q;
            };
            Int xrem, yrem;
            const Int X = round_div(xnum, xden, xrem);
            const Int Y = round_div(ynum, yden, yrem);
            if (8 * xrem > xden || 8 * yrem > yden) continue;
            near_integer = true;
            if (den == 2 && (mpz_even_p(X.get_mpz_t()) || mpz_even_p(Y.get_mpz_t()))) continue;
            QuadElem candidate(u.d(), X, Y, den);
            if (qpow(candidate, 3) == u) return candidate;
        }
        // No candidate close to an integer: a true cube would have produced one.
        if (!near_integer) return std::nullopt;
    }
    return std::nullopt;
}

Factorization rational_prime_content(const QuadElem &u)
{
    if (u.is_zero()) throw UsageError("rational_prime_content: u must be nonzero");
    Factorization out;
    std::vector<Int> candidates;
    const Int g = gcd(u.x(), u.y());
    for (const auto &pp : factorize(g).factors) candidates.push_back(pp.prime);
    // 2 | x + y sqrt d with x, y odd when d = 1 (mod 4)
    if (u.den() == 1 && is_one_mod_four(u.d()) && mpz_odd_p(u.x().get_mpz_t()) && mpz_odd_p(u.y().get_mpz_t()))
        candidates.push_back(2);
    std::sort(candidates.begin(), candidates.end());
    for (const Int &p : candidates) {
        unsigned k = 0;
        QuadElem rest = u;
        while (auto q = divide_exact(rest, p)) {
            rest = *q;
            ++k;
        }
        if (k) out.factors.push_back({p, k});
    }
    return out;
}

Int c_of(const QuadElem &u)
{
    Int c = 1;
    for (const auto &pp : rational_prime_content(u).factors)
        if (!mpz_divisible_p(u.d().get_mpz_t(), pp.prime.get_mpz_t())) c *= pp.prime;
    return c;
}

Int odd_part(const Int &c)
{
    if (c <= 0) throw UsageError("odd_part: c must be positive");
    Int r = c;
    while (mpz_even_p(r.get_mpz_t())) r >>= 1;
    return r;
}

} // namespace hasse
