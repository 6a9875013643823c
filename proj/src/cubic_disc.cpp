#include "hasse/cubic_disc.hpp"

#include <array>
#include <sstream>

#include "hasse/membership.hpp"

namespace hasse {

namespace {

using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<Vec3, 3>; // row-major

Mat3 identity3()
{
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
    return m;
}

Mat3 matmul(const Mat3 &a, const Mat3 &b)
{
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            c[i][j] = 0;
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Matrix of multiplication by theta on the basis (1, theta, theta^2).
Mat3 companion(const CubicPoly &f)
{
    Mat3 c;
    for (auto &row : c) row = {0, 0, 0};
    c[1][0] = 1;
    c[2][1] = 1;
    c[0][2] = -f.q;
    c[1][2] = -f.p;
    return c;
}

// Is (v0 + v1 theta + v2 theta^2) / denom an algebraic integer? Checked on
// the characteristic polynomial of its multiplication matrix.
bool is_integral(const Mat3 &theta, const Mat3 &theta2, const Vec3 &v, const Int &denom)
{
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? v[0] : Int(0)) + v[1] * theta[i][j] + v[2] * theta2[i][j];
    const Int trace = m[0][0] + m[1][1] + m[2][2];
    const Int minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                       m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const Int d2 = denom * denom;
    return mpz_divisible_p(trace.get_mpz_t(), denom.get_mpz_t()) && mpz_divisible_p(minors.get_mpz_t(), d2.get_mpz_t()) &&
           mpz_divisible_p(det.get_mpz_t(), Int(d2 * denom).get_mpz_t());
}

// First integer zero of f on [lo, hi], where f is monotone there.
std::optional<Int> monotone_zero(const CubicPoly &f, Int lo, Int hi)
{
    if (lo > hi) return std::nullopt;
    const bool increasing = f.eval(lo) <= f.eval(hi);
    while (lo < hi) {
        Int mid = lo + (hi - lo) / 2;
        if ((f.eval(mid) < 0) == increasing) lo = mid + 1;
        else hi = mid;
    }
    if (f.eval(lo) == 0) return lo;
    return std::nullopt;
}

unsigned val_or_inf(const Int &n, const Int &p) { return n == 0 ? 1000000u : valuation(n, p); }

} // namespace

std::string CubicPoly::to_string() const
{
    std::ostringstream os;
    os << "x^3";
    if (p != 0) os << (sgn(p) < 0 ? " - " : " + ") << Int(abs(p)).get_str() << "x";
    if (q != 0) os << (sgn(q) < 0 ? " - " : " + ") << Int(abs(q)).get_str();
    return os.str();
}

CubicPoly min_poly_of_t(const FundUnit &fu)
{
    const QuadElem &u = fu.elem;
    // 2a = 2x/den is integral: den == 2 forces odd x.
    const Int two_a = u.den() == 2 ? u.x() : Int(2 * u.x());
    return CubicPoly{Int(-3 * fu.epsilon), Int(-two_a)};
}

Int poly_disc(const CubicPoly &f) { return -4 * f.p * f.p * f.p - 27 * f.q * f.q; }

std::optional<Int> integer_root(const CubicPoly &f)
{
    if (f.q == 0) return Int(0);
    const Int bound = 1 + (abs(f.p) > abs(f.q) ? Int(abs(f.p)) : Int(abs(f.q)));
    if (f.p >= 0) return monotone_zero(f, -bound, bound);
    // critical points at +-c, c = sqrt(-p/3); monotone on the three pieces
    Int c_floor = sqrt(Int(-f.p / 3));
    while (3 * (c_floor + 1) * (c_floor + 1) <= -f.p) ++c_floor;
    const Int c_ceil = 3 * c_floor * c_floor == -f.p ? c_floor : Int(c_floor + 1);
    if (auto r = monotone_zero(f, -bound, -c_ceil)) return r;
    if (auto r = monotone_zero(f, -c_floor, c_floor)) return r;
    return monotone_zero(f, c_ceil, bound);
}

CubicPoly normalize_cubic(const CubicPoly &f)
{
    CubicPoly g = f;
    const Int common = gcd(f.p, f.q);
    if (common == 0) return g;
    for (const auto &pp : factorize(common).factors) {
        const Int l2 = pp.prime * pp.prime, l3 = l2 * pp.prime;
        while (mpz_divisible_p(g.p.get_mpz_t(), l2.get_mpz_t()) && mpz_divisible_p(g.q.get_mpz_t(), l3.get_mpz_t())) {
            g.p /= l2;
            g.q /= l3;
            if (g.p == 0 && g.q == 0) break;
        }
    }
    return g;
}

unsigned index_valuation_by_search(const CubicPoly &f, const Int &prime)
{
    if (prime > 1000) throw UsageError("index_valuation_by_search: prime too large for exhaustive search");
    const unsigned long l = prime.get_ui();
    const Mat3 theta = companion(f);
    const Mat3 theta2 = matmul(theta, theta);

    Mat3 basis = identity3(); // rows, power-basis coordinates over `den`
    Int den = 1;
    unsigned steps = 0;
    const unsigned bound = valuation(poly_disc(f), prime) / 2;

    for (bool grew = true; grew && steps <= bound;) {
        grew = false;
        const Int denom = den * l;
        for (unsigned long code = 1; code < l * l * l && !grew; ++code) {
            const std::array<unsigned long, 3> c = {code % l, (code / l) % l, code / (l * l)};
            Vec3 v = {0, 0, 0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) v[j] += c[i] * basis[i][j];
            if (!is_integral(theta, theta2, v, denom)) continue;

            // Replace a basis row with a coefficient unit mod l by the scaled
            // new element (coefficient 1 on that row); the lattice index drops by l.
            int pivot = 0;
            while (c[pivot] == 0) ++pivot;
            const unsigned long inv = inverse_mod(Int(c[pivot]), prime).get_ui();
            Vec3 alpha = {0, 0, 0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) alpha[j] += ((c[i] * inv) % l) * basis[i][j];
            for (int i = 0; i < 3; ++i)
                if (i != pivot)
                    for (auto &x : basis[i]) x *= l;
            basis[pivot] = alpha;
            den = denom;

            Int g = den;
            for (const auto &row : basis)
                for (const auto &x : row) g = gcd(g, x);
            if (g > 1) {
                den /= g;
                for (auto &row : basis)
                    for (auto &x : row) x /= g;
            }
            ++steps;
            grew = true;
        }
    }
    if (steps > bound) throw std::logic_error("index_valuation_by_search: index exceeds discriminant bound");
    return steps;
}

bool dedekind_is_maximal(const CubicPoly &f, const Int &prime)
{
    // The only repeated factors of a cubic mod l are linear; Z[theta] is
    // l-maximal iff f(r) != 0 (mod l^2) for every repeated root r.
    std::vector<Int> candidates;
    if (prime <= 3) {
        for (unsigned long r = 0; r < prime.get_ui(); ++r) candidates.push_back(Int(r));
    } else {
        // f'(r) = 3 r^2 + p = 0
        const Int target = mod(-f.p * inverse_mod(Int(3), prime), prime);
        if (auto s = sqrt_mod(target, prime)) {
            candidates.push_back(*s);
            candidates.push_back(mod(-*s, prime));
        }
    }
    const Int l2 = prime * prime;
    for (const Int &r : candidates) {
        const bool root = mod(f.eval(r), prime) == 0;
        const bool repeated = mod(3 * r * r + f.p, prime) == 0;
        if (root && repeated && mod(f.eval(r), l2) == 0) return false;
    }
    return true;
}

LocalIndex local_index(const CubicPoly &f, const Int &prime)
{
    LocalIndex out;
    out.prime = prime;
    out.disc_valuation = valuation(poly_disc(f), prime);
    if (prime >= 5) {
        // Tame: v_l(D_K) = 2 when l is totally ramified, else v_l(disc) mod 2.
        // Total ramification needs f = x^3 (mod l); the Newton polygon of the
        // normalized f then has one segment of slope v/3 exactly when
        // v_l(q) = 1, or v_l(q) = 2 and v_l(p) >= 2.
        const unsigned vp = val_or_inf(f.p, prime), vq = val_or_inf(f.q, prime);
        if (vp >= 1 && vq >= 1)
            out.field_valuation = (vq == 1 || (vq == 2 && vp >= 2)) ? 2 : 1;
        else
            out.field_valuation = out.disc_valuation % 2;
        out.index_valuation = (out.disc_valuation - out.field_valuation) / 2;
    } else {
        out.index_valuation = index_valuation_by_search(f, prime);
        out.field_valuation = out.disc_valuation - 2 * out.index_valuation;
    }
    return out;
}

FieldDiscriminant field_discriminant(const CubicPoly &f)
{
    if (auto r = integer_root(f)) throw DomainError(f.to_string() + " is reducible (root " + r->get_str() + ")");
    const CubicPoly g = normalize_cubic(f);
    const Int disc = poly_disc(g);
    const Factorization fac = factorize(disc);
    Int field = fac.sign;
    for (const auto &pp : fac.factors) {
        unsigned v = pp.exponent;
        if (v >= 2) v = local_index(g, pp.prime).field_valuation;
        Int t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), v);
        field *= t;
    }
    const Int full = poly_disc(f);
    auto index = exact_sqrt(Int(full / field));
    if (!index || *index * *index * field != full) throw std::logic_error("field_discriminant: index is not integral");
    return FieldDiscriminant{field, *index};
}

Int quad_field_disc(const Int &n)
{
    if (n == 0 || n == 1) throw UsageError("quad_field_disc: n must be a squarefree integer other than 0, 1");
    if (abs(n) > 1 && !is_squarefree(Int(abs(n)))) throw UsageError("quad_field_disc: n must be squarefree");
    return mod(n, 4) == 1 ? n : Int(4 * n);
}

DiscReport verify_disc_theorems(const Int &d)
{
    require_real_field(d);
    DiscReport r;
    r.d = d;
    const FundUnit fu = fundamental_unit(d);
    r.in_M = thm61_in_M(fu);
    const bool three_divides = mpz_divisible_ui_p(d.get_mpz_t(), 3);
    const bool one_mod_four = mod(d, 4) == 1;

    // F = Q(sqrt(-3d)) = Q(sqrt(-m)) when d = 3m
    const Int m = three_divides ? Int(d / 3) : d;
    r.D_F = quad_field_disc(three_divides ? Int(-m) : Int(-3 * d));
    Int closed = three_divides ? (one_mod_four ? Int(-m) : Int(-4 * m)) : (one_mod_four ? Int(-3 * d) : Int(-12 * d));
    if (r.in_M) {
        r.theorem = three_divides ? "1.2" : "1.1";
        r.predicted = r.D_F;
    } else {
        r.theorem = three_divides ? "1.4" : "1.3";
        r.predicted = (three_divides ? 81 : 9) * r.D_F;
        closed *= three_divides ? 81 : 9;
    }
    r.closed_form = closed;
    r.poly = min_poly_of_t(fu);
    r.poly_disc = poly_disc(r.poly);
    const FieldDiscriminant fd = field_discriminant(r.poly);
    r.field_disc = fd.field_disc;
    r.index = fd.index;
    r.pass = r.field_disc == r.predicted && r.predicted == r.closed_form && sgn(r.field_disc) < 0;
    return r;
}

} // namespace hasse
