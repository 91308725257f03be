#include "hbsum/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace hbsum {

namespace {

const Rational kZero{};

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int max_total_degree) : n_(max_total_degree) {
    if (n_ < 0) throw std::invalid_argument("series: negative truncation degree");
    c_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), Rational());
}

const Rational& TruncatedSeries::coeff(int i, int j) const {
    if (i < 0 || j < 0) throw std::out_of_range("series: negative exponent");
    if (i + j > n_) return kZero;
    return c_[static_cast<std::size_t>(i) * (n_ + 1) + j];
}

void TruncatedSeries::set_coeff(int i, int j, Rational v) {
    if (i < 0 || j < 0 || i + j > n_)
        throw std::out_of_range("series: exponent outside truncation");
    c_[static_cast<std::size_t>(i) * (n_ + 1) + j] = std::move(v);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (n_ != o.n_) throw std::invalid_argument("series: truncation degrees differ");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (n_ != o.n_) throw std::invalid_argument("series: truncation degrees differ");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (Rational& r : c_) r *= s;
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (n_ != o.n_) throw std::invalid_argument("series: truncation degrees differ");
    TruncatedSeries out(n_);
    for (int i1 = 0; i1 <= n_; ++i1)
        for (int j1 = 0; i1 + j1 <= n_; ++j1) {
            const Rational& a = coeff(i1, j1);
            if (a.is_zero()) continue;
            int room = n_ - i1 - j1;
            for (int i2 = 0; i2 <= room; ++i2)
                for (int j2 = 0; i2 + j2 <= room; ++j2) {
                    const Rational& b = o.coeff(i2, j2);
                    if (b.is_zero()) continue;
                    out.set_coeff(i1 + i2, j1 + j2, out.coeff(i1 + i2, j1 + j2) + a * b);
                }
        }
    return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("series: negative power");
    TruncatedSeries out(n_);
    out.set_coeff(0, 0, Rational(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::substitute(const TruncatedSeries& for_x,
                                            const TruncatedSeries& for_y) const {
    if (for_x.n_ != n_ || for_y.n_ != n_)
        throw std::invalid_argument("series: truncation degrees differ");
    std::vector<TruncatedSeries> xp, yp;
    xp.reserve(n_ + 1);
    yp.reserve(n_ + 1);
    xp.push_back(TruncatedSeries(n_));
    xp.back().set_coeff(0, 0, Rational(1));
    yp.push_back(xp.back());
    for (int k = 1; k <= n_; ++k) {
        xp.push_back(xp.back() * for_x);
        yp.push_back(yp.back() * for_y);
    }
    TruncatedSeries out(n_);
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; i + j <= n_; ++j) {
            const Rational& a = coeff(i, j);
            if (a.is_zero()) continue;
            out += xp[i] * yp[j] * a;
        }
    return out;
}

TruncatedSeries TruncatedSeries::linear_form(int max_total_degree, const Rational& alpha,
                                             const Rational& beta) {
    if (max_total_degree < 1)
        throw std::invalid_argument("series: degree too small for a linear form");
    TruncatedSeries out(max_total_degree);
    out.set_coeff(1, 0, alpha);
    out.set_coeff(0, 1, beta);
    return out;
}

std::string TruncatedSeries::export_text() const {
    std::ostringstream os;
    for (int total = 0; total <= n_; ++total)
        for (int i = 0; i <= total; ++i) {
            const Rational& v = coeff(i, total - i);
            if (v.is_zero()) continue;
            os << i << ' ' << total - i << ' ' << v.str() << '\n';
        }
    return os.str();
}

LaurentSeries::LaurentSeries(int max_total_degree) : n_(max_total_degree) {
    if (n_ < 0) throw std::invalid_argument("series: negative truncation degree");
    c_.assign(static_cast<std::size_t>(n_ + 3) * (n_ + 3), Rational());
}

const Rational& LaurentSeries::coeff(int i, int j) const {
    if (i < -1 || j < -1) throw std::out_of_range("series: exponent below -1");
    if (i + j > n_) return kZero;
    return c_[static_cast<std::size_t>(i + 1) * (n_ + 3) + (j + 1)];
}

void LaurentSeries::set_coeff(int i, int j, Rational v) {
    if (i < -1 || j < -1 || i + j > n_)
        throw std::out_of_range("series: exponent outside truncation");
    c_[static_cast<std::size_t>(i + 1) * (n_ + 3) + (j + 1)] = std::move(v);
}

std::string LaurentSeries::export_text() const {
    std::ostringstream os;
    for (int total = -2; total <= n_; ++total)
        for (int i = -1; i <= total + 1; ++i) {
            int j = total - i;
            if (j < -1) continue;
            const Rational& v = coeff(i, j);
            if (v.is_zero()) continue;
            os << i << ' ' << j << ' ' << v.str() << '\n';
        }
    return os.str();
}

MembershipVerdict omega_membership(const Rational& x, const Rational& y, const Rational& z,
                                   long da, long db, long dc) {
    if (da < 1 || db < 1 || dc < 1)
        throw std::domain_error("membership: moduli must be positive");
    MembershipVerdict out;
    for (long k = 0; k < da && !out.member; ++k) {
        Rational r = (x + Rational(k)) / Rational(da);
        Rational b0 = y - Rational(db) * r;
        Rational c0 = z - Rational(dc) * r;
        if (!b0.is_integer() || !c0.is_integer()) continue;
        out.member = true;
        MembershipWitness w;
        w.R = r;
        w.a0 = mpz_class(-k);  // x - da*r
        w.b0 = b0.numerator();
        w.c0 = c0.numerator();
        out.witness = std::move(w);
    }
    if (!out.member) return out;
    // The admissible R values form a lattice of step 1/gcd; the offset-sum
    // parity is well defined exactly when each step shifts it by an even
    // amount.
    long g = std::gcd(da, std::gcd(db, dc));
    long span = (da + db + dc) / g;
    if (span % 2 != 0) {
        out.parity = ParityClass::Ambiguous;
    } else {
        mpz_class s = out.witness->a0 + out.witness->b0 + out.witness->c0;
        out.parity = mpz_odd_p(s.get_mpz_t()) ? ParityClass::Odd : ParityClass::Even;
    }
    return out;
}

namespace {

void validate_omega(const OmegaParams& p) {
    if (p.a < 1 || p.b < 1 || p.c < 1)
        throw std::domain_error("omega: moduli must be positive");
    if (std::gcd(p.a, p.b) != 1 || std::gcd(p.b, p.c) != 1 || std::gcd(p.a, p.c) != 1)
        throw std::domain_error("omega: moduli must be pairwise coprime");
    if (p.d < 1 || p.d % 2 != 0) throw std::domain_error("omega: d must be a positive even integer");
}

struct RotationSlots {
    long A, B, C;
    Rational sx, sy, sz;
    int u, v;  // leading variables: 0 = X, 1 = Y, 2 = Z
};

RotationSlots rotation_slots(const OmegaParams& p) {
    long da = p.d * p.a, db = p.d * p.b, dc = p.d * p.c;
    switch (p.rotation) {
        case 0: return {da, db, dc, p.x, p.y, p.z, 0, 1};
        case 1: return {dc, da, db, p.z, p.x, p.y, 2, 0};
        case 2: return {db, dc, da, p.y, p.z, p.x, 1, 2};
        default: throw std::invalid_argument("omega: rotation must be 0, 1 or 2");
    }
}

TruncatedSeries var_series(int n, int var) {
    switch (var) {
        case 0: return TruncatedSeries::linear_form(n, Rational(1), Rational());
        case 1: return TruncatedSeries::linear_form(n, Rational(), Rational(1));
        default: return TruncatedSeries::linear_form(n, Rational(-1), Rational(-1));
    }
}

// U^i V^j for i+j <= n; identical for every parameter point of a rotation,
// so built once and shared.
const std::vector<std::vector<TruncatedSeries>>& uv_products(int u, int v, int n) {
    static std::mutex m;
    static std::map<std::tuple<int, int, int>, std::vector<std::vector<TruncatedSeries>>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple(u, v, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TruncatedSeries one(n);
    one.set_coeff(0, 0, Rational(1));
    std::vector<TruncatedSeries> up{one}, vp{one};
    if (n >= 1) {
        TruncatedSeries us = var_series(n, u), vs = var_series(n, v);
        for (int k = 1; k <= n; ++k) {
            up.push_back(up.back() * us);
            vp.push_back(vp.back() * vs);
        }
    }
    std::vector<std::vector<TruncatedSeries>> tbl;
    for (int i = 0; i <= n; ++i) {
        std::vector<TruncatedSeries> row;
        for (int j = 0; i + j <= n; ++j) row.push_back(up[i] * vp[j]);
        tbl.push_back(std::move(row));
    }
    return cache.emplace(key, std::move(tbl)).first->second;
}

}  // namespace

TruncatedSeries omega_series(const FunctionTable& t, const OmegaParams& params, int N) {
    validate_omega(params);
    if (N < 0) throw std::invalid_argument("omega: negative truncation degree");
    RotationSlots rs = rotation_slots(params);

    SumSpec shape;
    shape.modulus = rs.C;
    shape.weight = SumWeight::AlternatingMu;
    shape.inner_shift = rs.sz;
    shape.first = {FunFamily::EulerBar, 0, rs.A, rs.sx, -1};
    shape.second = {FunFamily::EulerBar, 0, rs.B, rs.sy, -1};
    auto sb = generalized_sum_table(t, shape, N, N);

    const auto& prods = uv_products(rs.u, rs.v, N);
    std::vector<Rational> apow{Rational(1)}, bpow{Rational(1)};
    for (int k = 1; k <= N; ++k) {
        apow.push_back(apow.back() * Rational(rs.A));
        bpow.push_back(bpow.back() * Rational(rs.B));
    }

    TruncatedSeries out(N);
    for (int p = 1; p <= N + 1; ++p)
        for (int q = 1; p + q <= N + 2; ++q) {
            const Rational& s = sb[p - 1][q - 1];
            if (s.is_zero()) continue;
            Rational scalar = s * Rational(static_cast<long>(p) * q, 4) /
                              (factorial(p) * factorial(q) * apow[p - 1] * bpow[q - 1]);
            const TruncatedSeries& m = prods[p - 1][q - 1];
            for (int i = 0; i <= N; ++i)
                for (int j = 0; i + j <= N; ++j) {
                    const Rational& mc = m.coeff(i, j);
                    if (mc.is_zero()) continue;
                    out.set_coeff(i, j, out.coeff(i, j) + mc * scalar);
                }
        }
    return out;
}

OmegaReport check_omega_reciprocity(const FunctionTable& t, const OmegaParams& params, int N) {
    validate_omega(params);
    if (N < 0) throw std::invalid_argument("omega: negative truncation degree");

    OmegaParams p = params;
    p.rotation = 0;
    TruncatedSeries total = omega_series(t, p, N);
    p.rotation = 1;
    total += omega_series(t, p, N);
    p.rotation = 2;
    total += omega_series(t, p, N);

    MembershipVerdict mv =
        omega_membership(params.x, params.y, params.z, params.d * params.a, params.d * params.b,
                         params.d * params.c);
    bool indeterminate = false;
    std::optional<Rational> rhs;
    if (!mv.member) {
        rhs = Rational();
    } else if (*mv.parity == ParityClass::Ambiguous) {
        indeterminate = true;
    } else {
        rhs = (*mv.parity == ParityClass::Odd) ? Rational(1, 4) : Rational(-1, 4);
    }

    TruncatedSeries residual = total;
    if (rhs) residual.set_coeff(0, 0, residual.coeff(0, 0) - *rhs);
    bool passed = !indeterminate && residual.is_zero();
    return OmegaReport{std::move(mv), std::move(total), std::move(rhs), std::move(residual),
                       indeterminate, passed};
}

LaurentSeries hwz_G_series(const FunctionTable& t, long a, long b, long c, const Rational& x,
                           const Rational& y, const Rational& z, int N) {
    if (a < 1 || b < 1 || c < 1) throw std::domain_error("gen fn: moduli must be positive");
    if (N < 0) throw std::invalid_argument("gen fn: negative truncation degree");

    SumSpec shape;
    shape.modulus = c;
    shape.weight = SumWeight::None;
    shape.inner_shift = z;
    shape.first = {FunFamily::BernoulliBar, 0, a, x, -1};
    shape.second = {FunFamily::BernoulliBar, 0, b, y, -1};
    auto s = generalized_sum_table(t, shape, N + 2, N + 2);

    std::vector<Rational> fact{Rational(1)};
    for (int k = 1; k <= N + 2; ++k) fact.push_back(factorial(k));

    LaurentSeries out(N);
    for (int p = 0; p <= N + 2; ++p)
        for (int q = 0; p + q <= N + 2; ++q) {
            const Rational& v = s[p][q];
            if (v.is_zero()) continue;
            Rational coeff = v / (fact[p] * fact[q] * Rational(a).pow(p - 1) * Rational(b).pow(q - 1));
            out.set_coeff(p - 1, q - 1, std::move(coeff));
        }
    return out;
}

}  // namespace hbsum
