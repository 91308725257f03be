#include "hbsum/identities.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace hbsum {

long mod_inverse(long a, long m) {
    if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 1;
    long r0 = m, r1 = ((a % m) + m) % m;
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return ((s0 % m) + m) % m;
}

Rational gen_binom(long n, long k) {
    if (k < 0) return Rational();
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(n - i);
    mpz_class kfac;
    mpz_fac_ui(kfac.get_mpz_t(), static_cast<unsigned long>(k));
    return num / Rational(mpz_class(kfac));
}

namespace {

long geti(const Params& ps, std::string_view name) {
    auto it = ps.find(std::string(name));
    if (it == ps.end())
        throw std::invalid_argument("identity parameter '" + std::string(name) + "' is missing");
    if (!it->second.is_integer())
        throw std::invalid_argument("identity parameter '" + std::string(name) +
                                    "' must be an integer");
    mpz_class n = it->second.numerator();
    if (!n.fits_slong_p())
        throw std::invalid_argument("identity parameter '" + std::string(name) +
                                    "' is out of range");
    return n.get_si();
}

Rational getr(const Params& ps, std::string_view name) {
    auto it = ps.find(std::string(name));
    if (it == ps.end())
        throw std::invalid_argument("identity parameter '" + std::string(name) + "' is missing");
    return it->second;
}

bool cop2(long a, long b) { return std::gcd(a, b) == 1; }
bool cop3(long a, long b, long c) { return cop2(a, b) && cop2(b, c) && cop2(a, c); }

Rational ipow(long base, long e) { return Rational(base).pow(e); }

int sgn_pow(long e) { return (e & 1) ? -1 : 1; }

// Unbarred Hall-Wilson-Zagier shape with plus shift signs:
// sum_mu B_p(a(mu+z)/c + x) B_q(b(mu+z)/c + y).
Rational splus(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z) {
    SumSpec s;
    s.modulus = c;
    s.inner_shift = z;
    s.first = FunctionSpec{FunFamily::BernoulliFun, p, a, x, +1};
    s.second = FunctionSpec{FunFamily::BernoulliFun, q, b, y, +1};
    return generalized_sum(t, s);
}

// sum_{mu=1}^{mod-1} (-1)^(mu+1) E_0(m1 mu/mod) E_0(m2 mu/mod).
Rational gold(const FunctionTable& t, long m1, long m2, long mod) {
    SumSpec s;
    s.modulus = mod;
    s.weight = SumWeight::AlternatingMu;
    s.start = 1;
    s.first = FunctionSpec{FunFamily::EulerFun, 0, m1, Rational(), +1};
    s.second = FunctionSpec{FunFamily::EulerFun, 0, m2, Rational(), +1};
    return -generalized_sum(t, s);
}

// Single-factor sums sum_mu w(mu) E_p(c(mu+x)/a + z) over mu mod a.
Rational euler_row_sum(const FunctionTable& t, SumWeight w, int p, long a, long c,
                       const Rational& x, const Rational& z) {
    SumSpec s;
    s.modulus = a;
    s.weight = w;
    s.inner_shift = x;
    s.first = FunctionSpec{FunFamily::EulerFun, p, c, z, +1};
    s.second = FunctionSpec{FunFamily::BernoulliFun, 0, 1, Rational(), +1};
    return generalized_sum(t, s);
}

Rational cls(ClassicalKind k, long a, long c) { return classical_sum(k, a, c); }

std::vector<IdentityInfo> build_catalog() {
    using F = ParamField;
    const auto Mod = ParamKind::Modulus;
    const auto Ord = ParamKind::Order;
    const auto Ord0 = ParamKind::OrderFrom0;
    const auto Sh = ParamKind::Shift;
    const auto Sc = ParamKind::Scale;

    std::vector<IdentityInfo> cat;

    cat.push_back(IdentityInfo{
        "eq-0",
        {F{"p", Ord}, F{"q", Ord}, F{"X", Sh}, F{"Y", Sh}},
        +[](const Params& ps) { return geti(ps, "p") >= 1 && geti(ps, "q") >= 1; },
        +[](const FunctionTable& t, const Params& ps) {
            const long p = geti(ps, "p"), q = geti(ps, "q"), n = p + q;
            const Rational X = getr(ps, "X"), Y = getr(ps, "Y");
            Rational lhs = gen_binom(n, q) * t.bernoulli_fun(static_cast<int>(p), X + Y) *
                           t.bernoulli_fun(static_cast<int>(q), Y);
            Rational r1, r2;
            for (long j = 0; j <= n; ++j)
                r1 += gen_binom(n, j) * gen_binom(n - 1 - j, q - 1) *
                      t.bernoulli_fun(static_cast<int>(n - j), Y) *
                      t.bernoulli_fun(static_cast<int>(j), X);
            for (long h = 0; h <= q; ++h)
                r2 += Rational(sgn_pow(h)) * gen_binom(n, h) * gen_binom(n - 1 - h, p - 1) *
                      t.bernoulli_fun(static_cast<int>(n - h), X + Y) *
                      t.bernoulli_fun(static_cast<int>(h), X);
            return lhs - r1 - r2;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p") + geti(ps, "q")); }});

    cat.push_back(IdentityInfo{
        "mult-B",
        {F{"n", Ord0}, F{"r", Mod}, F{"x", Sh}},
        +[](const Params& ps) { return geti(ps, "n") >= 0 && geti(ps, "r") >= 1; },
        +[](const FunctionTable& t, const Params& ps) {
            const int n = static_cast<int>(geti(ps, "n"));
            const long r = geti(ps, "r");
            const Rational x = getr(ps, "x");
            Rational acc;
            for (long v = 0; v < r; ++v)
                acc += t.bernoulli_fun(n, (x + Rational(v)) / Rational(r));
            return t.bernoulli_fun(n, x) - ipow(r, n - 1) * acc;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "n")); }});

    cat.push_back(IdentityInfo{
        "mult-E-odd",
        {F{"n", Ord0}, F{"r", Mod}, F{"x", Sh}},
        +[](const Params& ps) {
            return geti(ps, "n") >= 0 && geti(ps, "r") >= 1 && (geti(ps, "r") & 1) == 1;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int n = static_cast<int>(geti(ps, "n"));
            const long r = geti(ps, "r");
            const Rational x = getr(ps, "x");
            Rational acc;
            for (long v = 0; v < r; ++v) {
                Rational term = t.euler_fun(n, (x + Rational(v)) / Rational(r));
                acc += (v & 1) ? -term : term;
            }
            return t.euler_fun(n, x) - ipow(r, n) * acc;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "n")); }});

    cat.push_back(IdentityInfo{
        "mult-E-even",
        {F{"n", Ord}, F{"r", Mod}, F{"x", Sh}},
        +[](const Params& ps) {
            return geti(ps, "n") >= 1 && geti(ps, "r") >= 2 && (geti(ps, "r") & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int n = static_cast<int>(geti(ps, "n"));
            const long r = geti(ps, "r");
            const Rational x = getr(ps, "x");
            Rational acc;
            for (long v = 0; v < r; ++v) {
                Rational term = t.bernoulli_fun(n, (x + Rational(v)) / Rational(r));
                acc += (v & 1) ? -term : term;
            }
            return t.euler_fun(n - 1, x) + Rational(2, n) * ipow(r, n - 1) * acc;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "n")); }});

    cat.push_back(IdentityInfo{
        "mult-Ebar-even",
        {F{"p", Ord}, F{"r", Mod}, F{"x", Sh}},
        +[](const Params& ps) {
            return geti(ps, "p") >= 1 && geti(ps, "r") >= 2 && (geti(ps, "r") & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long r = geti(ps, "r");
            const Rational x = getr(ps, "x");
            Rational acc;
            for (long v = 0; v < r; ++v) {
                Rational term = t.bbar_fun(p, (x + Rational(v)) / Rational(r));
                acc += (v & 1) ? -term : term;
            }
            return Rational(-p, 2) * t.ebar_fun(p - 1, x) - ipow(r, p - 1) * acc;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    cat.push_back(IdentityInfo{
        "lemma-27",
        {F{"p", Ord0}, F{"a", Mod}, F{"c", Mod}, F{"x", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "p") >= 0 && a >= 1 && c >= 1 && (a & 1) == 1 && (c & 1) == 0 &&
                   cop2(a, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), z = getr(ps, "z");
            return euler_row_sum(t, SumWeight::None, p, a, c, x, z) -
                   ipow(a, -p) * t.euler_fun(p, Rational(a) * z + Rational(c) * x);
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    cat.push_back(IdentityInfo{
        "lemma-11",
        {F{"p", Ord0}, F{"a", Mod}, F{"c", Mod}, F{"x", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "p") >= 0 && a >= 1 && c >= 1 && (a & 1) == 1 && (c & 1) == 1 &&
                   cop2(a, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), z = getr(ps, "z");
            return euler_row_sum(t, SumWeight::AlternatingMu, p, a, c, x, z) -
                   ipow(a, -p) * t.euler_fun(p, Rational(a) * z + Rational(c) * x);
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    cat.push_back(IdentityInfo{
        "classical-dedekind",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c);
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            Rational rhs = Rational(-1, 4) +
                           Rational(1, 12) * (Rational(a, c) + Rational(c, a) + Rational(1, a * c));
            return cls(ClassicalKind::Dedekind, a, c) + cls(ClassicalKind::Dedekind, c, a) - rhs;
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "hb-0",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c) && ((a + c) & 1) == 1;
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return cls(ClassicalKind::S, a, c) + cls(ClassicalKind::S, c, a) - Rational(1);
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "hb-12",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c) && (a & 1) == 0;
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            Rational rhs = Rational(1, 2) - Rational(1, 2) * (Rational(1, a * c) + Rational(c, a));
            return cls(ClassicalKind::S1, a, c) - Rational(2) * cls(ClassicalKind::S2, c, a) - rhs;
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "hb-34",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c) && (c & 1) == 1;
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return Rational(2) * cls(ClassicalKind::S3, a, c) - cls(ClassicalKind::S4, c, a) -
                   (Rational(1) - Rational(a, c));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "hb-5",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c) && ((a + c) & 1) == 0;
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return cls(ClassicalKind::S5, a, c) + cls(ClassicalKind::S5, c, a) -
                   (Rational(1, 2) - Rational(1, 2 * a * c));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "rp-S",
        {F{"p", Ord}, F{"q", Ord}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh},
         F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 && b >= 1 && c >= 1 &&
                   cop3(a, b, c) && ((a + b + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            Rational lhs = ipow(a, 1 - p) * ipow(b, 1 - q) * S_pq(t, p, q, a, b, c, x, y, z);
            Rational r1, r2;
            for (int j = 1; j <= p; ++j)
                r1 += gen_binom(p - 1, j - 1) * ipow(a, 1 - j) * ipow(c, 1 + j - p - q) *
                      S_pq(t, p + q - j, j, c, -a, b, z, x, y);
            for (int h = 1; h <= q; ++h)
                r2 += Rational(sgn_pow(h)) * gen_binom(q - 1, h - 1) * ipow(b, 1 - h) *
                      ipow(c, 1 + h - p - q) * S_pq(t, p + q - h, h, c, b, a, z, -y, x);
            return lhs - r1 - r2;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p") + geti(ps, "q")); }});

    cat.push_back(IdentityInfo{
        "three-term-12",
        {F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c) && ((a + b + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            return S_pq(t, 1, 1, a, b, c, x, y, z) - S_pq(t, 1, 1, c, -a, b, z, x, y) +
                   S_pq(t, 1, 1, c, b, a, z, -y, x);
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "goldberg-12a",
        {F{"a", Mod}, F{"b", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c) && ((a + b + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return gold(t, a, b, c) + gold(t, c, a, b) + gold(t, c, b, a) - Rational(1);
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "cor-S-15",
        {F{"p", Ord}, F{"a", Mod}, F{"c", Mod}, F{"x", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && a >= 1 && c >= 1 && cop2(a, c) && ((a + c) & 1) == 1;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), z = getr(ps, "z");
            Rational lhs = Rational(a) * ipow(c, p) * S_p(t, p, a, c, x, z) +
                           Rational(c) * ipow(a, p) * S_p(t, p, c, a, z, x);
            Rational rhs;
            for (int j = 1; j <= p; ++j)
                rhs += gen_binom(p - 1, j - 1) * ipow(a, p + 1 - j) * ipow(c, j) *
                       t.euler_fun(p - j, z) * t.euler_fun(j - 1, x);
            return lhs - rhs;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    // rp-s12 is stated for arbitrary positive a, b with c even; the
    // coprime-restricted sweep is a separate entry so reports keep the two
    // populations apart.
    const auto rps12_residual = +[](const FunctionTable& t, const Params& ps) {
        const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
        const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
        const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
        Rational lhs = ipow(a, 1 - p) * ipow(b, 1 - q) * S2_pq(t, p, q, a, b, c, x, y, z);
        Rational r1, r2;
        for (int j = 0; j <= p; ++j)
            r1 += gen_binom(p, j) * ipow(a, 1 - j) * ipow(c, 1 + j - p - q) *
                  S1_pq(t, p + q - j, j, c, -a, b, z, x, y);
        for (int h = 0; h <= q; ++h)
            r2 += Rational(sgn_pow(h)) * gen_binom(q, h) * ipow(b, 1 - h) *
                  ipow(c, 1 + h - p - q) * S1_pq(t, p + q - h, h, c, b, a, z, -y, x);
        return lhs + Rational(q, 2) * r1 + Rational(p, 2) * r2;
    };
    const auto rps12_degree =
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p") + geti(ps, "q")); };

    cat.push_back(IdentityInfo{
        "rp-s12",
        {F{"p", Ord}, F{"q", Ord}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh},
         F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 && b >= 1 && c >= 1 &&
                   (c & 1) == 0;
        },
        rps12_residual, rps12_degree});

    cat.push_back(IdentityInfo{
        "rp-s12-coprime",
        {F{"p", Ord}, F{"q", Ord}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh},
         F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 && b >= 1 && c >= 1 &&
                   (c & 1) == 0 && cop3(a, b, c);
        },
        rps12_residual, rps12_degree});

    cat.push_back(IdentityInfo{
        "three-term-29",
        {F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c) && (c & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            Rational lhs = S1_pq(t, 1, 1, c, b, a, z, -y, x) -
                           S1_pq(t, 1, 1, c, -a, b, z, x, y) -
                           Rational(2) * S2_pq(t, 1, 1, a, b, c, x, y, z);
            Rational rhs = Rational(a, b * c) * t.euler_fun(1, Rational(b) * z + Rational(c) * y) +
                           Rational(b, a * c) * t.euler_fun(1, Rational(a) * z + Rational(c) * x);
            return lhs - rhs;
        },
        +[](const Params&) { return 2; }});

    cat.push_back(IdentityInfo{
        "eq-30",
        {F{"a", Mod}, F{"b", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c) && (c & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational o;
            return S1_pq(t, 1, 1, c, b, a, o, o, o) - S1_pq(t, 1, 1, c, -a, b, o, o, o) -
                   Rational(2) * S2_pq(t, 1, 1, a, b, c, o, o, o) +
                   Rational(1, 2 * c) * (Rational(a, b) + Rational(b, a));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "hb-12-from-30",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return a >= 1 && c >= 1 && cop2(a, c) && (c & 1) == 0;
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            Rational rhs = Rational(1, 2) - Rational(1, 2) * (Rational(a, c) + Rational(1, a * c));
            return cls(ClassicalKind::S1, c, a) - Rational(2) * cls(ClassicalKind::S2, a, c) - rhs;
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "s1-two-term",
        {F{"a", Mod}, F{"b", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b");
            return a >= 1 && b >= 1 && (a & 1) == 1 && (b & 1) == 1 && cop2(a, b);
        },
        +[](const FunctionTable&, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b");
            const long ap = mod_inverse(a, b), bp = mod_inverse(b, a);
            Rational rhs = Rational(1, 2) - Rational(1, 4) * (Rational(a, b) + Rational(b, a));
            return cls(ClassicalKind::S1, 2 * ap, b) + cls(ClassicalKind::S1, 2 * bp, a) - rhs;
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "cor-s12",
        {F{"p", Ord}, F{"a", Mod}, F{"c", Mod}, F{"x", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && a >= 1 && c >= 1 && cop2(a, c) && (c & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), z = getr(ps, "z");
            Rational lhs = Rational(p * c) * ipow(a, p) * Sp1(t, p, c, a, z, x) -
                           Rational(2 * a) * ipow(c, p) * Sp2(t, p, a, c, x, z);
            Rational rhs = Rational(p) * t.euler_fun(p, Rational(a) * z + Rational(c) * x);
            for (int j = 0; j <= p; ++j)
                rhs += gen_binom(p, j) * ipow(a, p + 1 - j) * ipow(c, j) *
                       t.euler_fun(p - j, z) * t.bernoulli_fun(j, x);
            return lhs - rhs;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    cat.push_back(IdentityInfo{
        "rp-s543",
        {F{"p", Ord}, F{"q", Ord}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh},
         F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 && b >= 1 && c >= 1 &&
                   cop3(a, b, c) && ((a + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            Rational lhs = ipow(a, 1 - p) * ipow(b, 1 - q) * S35_pq(t, p, q, a, b, c, x, y, z);
            Rational r1, r2;
            for (int j = 1; j <= p; ++j)
                r1 += gen_binom(p - 1, j - 1) * ipow(a, 1 - j) * ipow(c, 1 + j - p - q) *
                      S4_pq(t, p + q - j, j, c, -a, b, z, x, y);
            for (int h = 0; h <= q; ++h)
                r2 += Rational(sgn_pow(h)) * gen_binom(q, h) * ipow(b, 1 - h) *
                      ipow(c, 1 + h - p - q) * S35_pq(t, p + q - h, h, c, b, a, z, -y, x);
            return lhs + Rational(q, 2) * r1 - r2;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p") + geti(ps, "q")); }});

    cat.push_back(IdentityInfo{
        "three-term-10",
        {F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c) && ((a + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            return S35_pq(t, 1, 1, a, b, c, x, y, z) +
                   Rational(1, 2) * S4_pq(t, 1, 1, c, -a, b, z, x, y) +
                   S35_pq(t, 1, 1, c, b, a, z, -y, x) -
                   Rational(b, a * c) * t.euler_fun(1, Rational(c) * x + Rational(a) * z);
        },
        +[](const Params&) { return 2; }});

    cat.push_back(IdentityInfo{
        "red-13a",
        {F{"a", Mod}, F{"c", Mod}},
        +[](const Params& ps) { return geti(ps, "a") >= 1 && geti(ps, "c") >= 1; },
        +[](const FunctionTable& t, const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational o;
            return S35_pq(t, 1, 1, a, 1, c, o, o, o) -
                   (cls(ClassicalKind::S5, a, c) - Rational(1, 2));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "red-13b",
        {F{"b", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long b = geti(ps, "b"), c = geti(ps, "c");
            return b >= 1 && c >= 1 && cop2(b, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long b = geti(ps, "b"), c = geti(ps, "c");
            const Rational o;
            return S35_pq(t, 1, 1, 1, b, c, o, o, o) -
                   (cls(ClassicalKind::S3, b, c) - Rational(1, 2));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "red-13c",
        {F{"b", Mod}, F{"c", Mod}},
        +[](const Params& ps) { return geti(ps, "b") >= 1 && geti(ps, "c") >= 1; },
        +[](const FunctionTable& t, const Params& ps) {
            const long b = geti(ps, "b"), c = geti(ps, "c");
            const Rational o;
            return S4_pq(t, 1, 1, c, -1, b, o, o, o) -
                   (Rational(1) - cls(ClassicalKind::S4, c, b));
        },
        +[](const Params&) { return 1; }});

    cat.push_back(IdentityInfo{
        "cor-rp-s5",
        {F{"p", Ord}, F{"a", Mod}, F{"c", Mod}, F{"x", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "p") >= 1 && a >= 1 && c >= 1 && (a & 1) == 1 && (c & 1) == 1 &&
                   cop2(a, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p"));
            const long a = geti(ps, "a"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), z = getr(ps, "z");
            Rational lhs = Rational(a) * ipow(c, p) * Sp5(t, p, a, c, x, z) +
                           Rational(c) * ipow(a, p) * Sp5(t, p, c, a, z, x);
            Rational corr;
            for (int j = 1; j <= p; ++j)
                corr += gen_binom(p - 1, j - 1) * ipow(a, p + 1 - j) * ipow(c, j) *
                        t.euler_fun(p - j, z) * t.euler_fun(j - 1, x);
            Rational rhs = Rational(-1, 2) * corr +
                           t.euler_fun(p, Rational(a) * z + Rational(c) * x);
            return lhs - rhs;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "p")); }});

    cat.push_back(IdentityInfo{
        "cor-s3s4",
        {F{"q", Ord}, F{"b", Mod}, F{"c", Mod}, F{"y", Sh}, F{"z", Sh}},
        +[](const Params& ps) {
            const long b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "q") >= 1 && b >= 1 && c >= 1 && cop2(b, c) && (c & 1) == 1;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int q = static_cast<int>(geti(ps, "q"));
            const long b = geti(ps, "b"), c = geti(ps, "c");
            const Rational y = getr(ps, "y"), z = getr(ps, "z");
            Rational lhs = Rational(2 * b) * ipow(c, q) * Sq3(t, q, b, c, y, z) -
                           Rational(q * c) * ipow(b, q) * Sq4(t, q, c, b, z, y);
            Rational rhs;
            for (int h = 0; h <= q; ++h)
                rhs += gen_binom(q, h) * ipow(b, q + 1 - h) * ipow(c, h) *
                       t.euler_fun(q - h, z) * t.bernoulli_fun(h, y);
            return lhs - Rational(2) * rhs;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "q")); }});

    const auto hom_fields = std::vector<ParamField>{
        F{"d", Sc}, F{"p", Ord}, F{"q", Ord}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod},
        F{"x", Sh}, F{"y", Sh}, F{"z", Sh}};
    const auto hom_degree =
        +[](const Params& ps) { return static_cast<int>(std::max(geti(ps, "p"), geti(ps, "q"))); };

    cat.push_back(IdentityInfo{
        "hom-14", hom_fields,
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            return geti(ps, "d") >= 1 && geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 &&
                   b >= 1 && c >= 1 && ((a + b + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c"), d = geti(ps, "d");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            return S_pq(t, p, q, d * a, d * b, d * c, x, y, z) -
                   Rational(d) * S_pq(t, p, q, a, b, c, x, y, z);
        },
        hom_degree});

    cat.push_back(IdentityInfo{
        "hom-35", hom_fields,
        +[](const Params& ps) {
            const long a = geti(ps, "a"), c = geti(ps, "c");
            return geti(ps, "d") >= 1 && geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 &&
                   geti(ps, "b") >= 1 && c >= 1 && ((a + c) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c"), d = geti(ps, "d");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            return S35_pq(t, p, q, d * a, d * b, d * c, x, y, z) -
                   Rational(d) * S35_pq(t, p, q, a, b, c, x, y, z);
        },
        hom_degree});

    cat.push_back(IdentityInfo{
        "hom-4", hom_fields,
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b");
            return geti(ps, "d") >= 1 && geti(ps, "p") >= 1 && geti(ps, "q") >= 1 && a >= 1 &&
                   b >= 1 && geti(ps, "c") >= 1 && ((a + b) & 1) == 0;
        },
        +[](const FunctionTable& t, const Params& ps) {
            const int p = static_cast<int>(geti(ps, "p")), q = static_cast<int>(geti(ps, "q"));
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c"), d = geti(ps, "d");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            return S4_pq(t, p, q, d * a, d * b, d * c, x, y, z) -
                   Rational(d) * S4_pq(t, p, q, a, b, c, x, y, z);
        },
        hom_degree});

    cat.push_back(IdentityInfo{
        "mikolas-shifted",
        {F{"m", Ord}, F{"r", Ord0}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}, F{"x", Sh}, F{"y", Sh},
         F{"z", Sh}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const long m = geti(ps, "m"), r = geti(ps, "r");
            return m >= 1 && r >= 0 && r <= m - 1 && a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long m = geti(ps, "m"), r = geti(ps, "r");
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const Rational x = getr(ps, "x"), y = getr(ps, "y"), z = getr(ps, "z");
            Rational lhs =
                gen_binom(m + 1, r + 1) * ipow(a, r + 1) * ipow(b, m - r) * ipow(c, m) *
                    splus(t, static_cast<int>(m - r), static_cast<int>(r + 1), a, b, c, x, y, z) -
                Rational(sgn_pow(r)) * ipow(c, m + 1) *
                    t.bernoulli_fun(static_cast<int>(m + 1), Rational(b) * x - Rational(a) * y);
            Rational r1, r2;
            for (long j = 0; j <= m - r; ++j)
                r1 += gen_binom(m + 1, j) * gen_binom(m - j, r) * ipow(a, m + 1 - j) * ipow(c, j) *
                      ipow(b, m) *
                      splus(t, static_cast<int>(m + 1 - j), static_cast<int>(j), c, -a, b, z, x, y);
            for (long h = 0; h <= r + 1; ++h)
                r2 += Rational(sgn_pow(h)) * gen_binom(m + 1, h) * gen_binom(m - h, m - 1 - r) *
                      ipow(b, m + 1 - h) * ipow(c, h) * ipow(a, m) *
                      splus(t, static_cast<int>(m + 1 - h), static_cast<int>(h), c, b, a, z, -y, x);
            return lhs - r1 - r2;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "m") + 1); }});

    cat.push_back(IdentityInfo{
        "mikolas-final",
        {F{"m", Ord}, F{"r", Ord0}, F{"a", Mod}, F{"b", Mod}, F{"c", Mod}},
        +[](const Params& ps) {
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            const long m = geti(ps, "m"), r = geti(ps, "r");
            return m >= 1 && r >= 0 && r <= m - 1 && a >= 1 && b >= 1 && c >= 1 && cop3(a, b, c);
        },
        +[](const FunctionTable& t, const Params& ps) {
            const long m = geti(ps, "m"), r = geti(ps, "r");
            const long a = geti(ps, "a"), b = geti(ps, "b"), c = geti(ps, "c");
            Rational t1 = gen_binom(m + 1, r + 1) * ipow(a, r + 1) * ipow(b, m - r) * ipow(c, m) *
                          mikolas_s(t, static_cast<int>(m - r), static_cast<int>(r + 1), a, b, c);
            Rational t2, t3;
            for (long j = 1; j <= m - r; ++j)
                t2 += Rational(-sgn_pow(j)) * gen_binom(m + 1, j) * gen_binom(m - j, r) *
                      ipow(a, m + 1 - j) * ipow(c, j) * ipow(b, m) *
                      mikolas_s(t, static_cast<int>(m + 1 - j), static_cast<int>(j), c, a, b);
            for (long j = 1; j <= r + 1; ++j)
                t3 += Rational(-sgn_pow(j)) * gen_binom(m + 1, j) * gen_binom(m - j, m - 1 - r) *
                      ipow(b, m + 1 - j) * ipow(c, j) * ipow(a, m) *
                      mikolas_s(t, static_cast<int>(m + 1 - j), static_cast<int>(j), c, b, a);
            Rational rhs = (Rational(sgn_pow(r)) * ipow(c, m + 1) +
                            gen_binom(m, r) * ipow(a, m + 1) + gen_binom(m, r + 1) * ipow(b, m + 1)) *
                               t.bernoulli_fun(static_cast<int>(m + 1), Rational()) -
                           Rational(m + 1) * gen_binom(m - 1, r) * ipow(a * b, m) * Rational(c) *
                               t.bernoulli_fun(static_cast<int>(m), Rational());
            return t1 + t2 + t3 - rhs;
        },
        +[](const Params& ps) { return static_cast<int>(geti(ps, "m") + 1); }});

    return cat;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> cat = build_catalog();
    return cat;
}

const IdentityInfo* find_identity(std::string_view id) {
    for (const auto& info : identity_catalog())
        if (info.id == id) return &info;
    return nullptr;
}

namespace {

const IdentityInfo& require_identity(std::string_view id) {
    const IdentityInfo* info = find_identity(id);
    if (!info) throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
    return *info;
}

void require_params(const IdentityInfo& info, const Params& ps) {
    for (const auto& f : info.fields) {
        if (f.kind == ParamKind::Shift)
            getr(ps, f.name);
        else
            geti(ps, f.name);
    }
}

}  // namespace

IdentityCheck check_identity(const FunctionTable& t, std::string_view id, const Params& params) {
    const IdentityInfo& info = require_identity(id);
    require_params(info, params);
    IdentityCheck out;
    out.id = std::string(id);
    out.params = params;
    if (!info.applicable(params)) return out;
    out.applicable = true;
    out.residual = info.residual(t, params);
    return out;
}

Rational identity_residual_unchecked(const FunctionTable& t, std::string_view id,
                                     const Params& params) {
    const IdentityInfo& info = require_identity(id);
    require_params(info, params);
    return info.residual(t, params);
}

}  // namespace hbsum
