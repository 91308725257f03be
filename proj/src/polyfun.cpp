#include "hbsum/polyfun.hpp"

#include <cmath>
#include <complex>

namespace hbsum {

FloorSplit floor_split(const Rational& x) {
    FloorSplit out;
    out.floor = x.floor();
    out.frac = x - Rational(out.floor);
    return out;
}

Rational sawtooth(const Rational& x) {
    FloorSplit s = floor_split(x);
    if (s.frac.is_zero()) return Rational(0);
    return s.frac - Rational(1, 2);
}

Rational PolyTable::eval(int n, const Rational& x) const {
    check(n);
    const auto& c = rows_[static_cast<size_t>(n)];
    Rational acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

static Rational binom_z(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

std::pair<PolyTable, PolyTable> build_tables(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("build_tables: negative degree");
    // Euler degree m needs Bernoulli degree m+1 internally.
    int btop = max_degree + 1;

    // Bernoulli numbers B_0..B_btop via sum_{k=0}^{n-1} C(n+1,k) B_k = -(n+1) B_n.
    std::vector<Rational> bnum(static_cast<size_t>(btop) + 1);
    bnum[0] = Rational(1);
    for (long n = 1; n <= btop; ++n) {
        Rational s;
        for (long k = 0; k < n; ++k) s += binom_z(n + 1, k) * bnum[static_cast<size_t>(k)];
        bnum[static_cast<size_t>(n)] = -s / Rational(n + 1);
    }

    auto bern_row = [&](long n) {
        std::vector<Rational> row(static_cast<size_t>(n) + 1);
        for (long m = 0; m <= n; ++m)
            row[static_cast<size_t>(m)] = binom_z(n, m) * bnum[static_cast<size_t>(n - m)];
        return row;
    };

    PolyTable bern;
    bern.rows_.reserve(static_cast<size_t>(max_degree) + 1);
    for (long n = 0; n <= max_degree; ++n) bern.rows_.push_back(bern_row(n));

    // E_m(x) coefficients from B_{m+1}: coeff_k = (2/(m+1)) * b_k * (1 - 2^{m+1-k}).
    PolyTable eul;
    eul.rows_.push_back({Rational(1)});
    for (long m = 1; m <= max_degree; ++m) {
        long n = m + 1;
        std::vector<Rational> b = bern_row(n);
        std::vector<Rational> row(static_cast<size_t>(m) + 1);
        for (long k = 0; k <= m; ++k) {
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
            row[static_cast<size_t>(k)] =
                Rational(2, n) * b[static_cast<size_t>(k)] * (Rational(1) - Rational(p2));
        }
        eul.rows_.push_back(std::move(row));
    }

    if (max_degree >= 1 &&
        (eul.rows_[1] != std::vector<Rational>{Rational(-1, 2), Rational(1)} ||
         eul.rows_[0] != std::vector<Rational>{Rational(1)}))
        throw std::logic_error("build_tables: Euler cross-check failed");

    return {std::move(bern), std::move(eul)};
}

FunctionTable::FunctionTable(int max_degree) {
    auto [b, e] = build_tables(max_degree);
    bern_ = std::move(b);
    eul_ = std::move(e);
}

Rational FunctionTable::bernoulli_fun(int n, const Rational& x) const {
    return bern_.eval(n, floor_split(x).frac);
}

Rational FunctionTable::bbar_fun(int n, const Rational& x) const {
    bern_.coeffs(n);  // degree contract as for bernoulli_fun
    if (n == 1) return sawtooth(x);
    return bernoulli_fun(n, x);
}

Rational FunctionTable::euler_fun(int n, const Rational& x) const {
    FloorSplit s = floor_split(x);
    Rational v = eul_.eval(n, s.frac);
    return mpz_odd_p(s.floor.get_mpz_t()) ? -v : v;
}

Rational FunctionTable::ebar_fun(int n, const Rational& x) const {
    eul_.coeffs(n);
    if (n == 0 && x.is_integer()) return Rational(0);
    return euler_fun(n, x);
}

Rational FunctionTable::eval(FunFamily family, int order, const Rational& x) const {
    switch (family) {
        case FunFamily::BernoulliFun: return bernoulli_fun(order, x);
        case FunFamily::BernoulliBar: return bbar_fun(order, x);
        case FunFamily::EulerFun: return euler_fun(order, x);
        case FunFamily::EulerBar: return ebar_fun(order, x);
    }
    throw std::logic_error("unreachable");
}

void FunctionTable::eval_orders(FunFamily family, int max_order, const Rational& x,
                                std::vector<Rational>& out) const {
    out.resize(static_cast<size_t>(max_order) + 1);
    FloorSplit s = floor_split(x);
    bool bern_like =
        family == FunFamily::BernoulliFun || family == FunFamily::BernoulliBar;
    const PolyTable& tab = bern_like ? bern_ : eul_;
    bool negate = !bern_like && mpz_odd_p(s.floor.get_mpz_t());
    for (int n = 0; n <= max_order; ++n) {
        Rational v = tab.eval(n, s.frac);
        out[static_cast<size_t>(n)] = negate ? -v : v;
    }
    if (family == FunFamily::BernoulliBar && max_order >= 1) out[1] = sawtooth(x);
    if (family == FunFamily::EulerBar && s.frac.is_zero()) out[0] = Rational(0);
}

double fourier_partial(int p, double x, long M) {
    if (p < 1) throw std::domain_error("fourier_partial: p must be >= 1");
    if (M < 1) throw std::domain_error("fourier_partial: M must be >= 1");
    if (p == 1 && std::abs(x - std::round(x)) <= 1e-9)
        throw std::domain_error("fourier_partial: p=1 is undefined at integer x");

    const double two_pi = 2.0 * M_PI;
    std::complex<double> acc(0.0, 0.0);
    double parity = (p % 2 == 0) ? 1.0 : -1.0;  // 1/(-m)^p = parity/m^p
    for (long m = 1; m <= M; ++m) {
        double theta = two_pi * static_cast<double>(m) * x;
        std::complex<double> e(std::cos(theta), std::sin(theta));
        double mp = std::pow(static_cast<double>(m), p);
        acc += (e + parity * std::conj(e)) / mp;
    }
    double fact = 1.0;
    for (int k = 2; k <= p; ++k) fact *= k;
    std::complex<double> denom = std::pow(std::complex<double>(0.0, two_pi), p);
    return (-fact * acc / denom).real();
}

}  // namespace hbsum
