#include "hbsum/sums.hpp"

#include <stdexcept>

namespace hbsum {

namespace {

Rational factor_shift(const FunctionSpec& f) {
    return f.shift_sign < 0 ? -f.shift : f.shift;
}

bool mu_weight_negative(const SumSpec& spec, long mu) {
    return spec.weight == SumWeight::AlternatingMu && (mu & 1);
}

}  // namespace

Rational generalized_sum(const FunctionTable& t, const SumSpec& spec) {
    if (spec.modulus < 1) throw std::domain_error("sum modulus must be positive");
    if (spec.start != 0 && spec.start != 1) throw std::domain_error("sum start must be 0 or 1");
    if (spec.first.multiplier == 0 || spec.second.multiplier == 0)
        throw std::domain_error("factor multiplier must be nonzero");
    const Rational step(1, spec.modulus);
    const Rational sx = factor_shift(spec.first);
    const Rational sy = factor_shift(spec.second);
    Rational base = (spec.inner_shift + Rational(spec.start)) / Rational(spec.modulus);
    Rational acc;
    for (long mu = spec.start; mu < spec.modulus; ++mu, base += step) {
        Rational term = t.eval(spec.first.family, spec.first.order,
                               Rational(spec.first.multiplier) * base + sx) *
                        t.eval(spec.second.family, spec.second.order,
                               Rational(spec.second.multiplier) * base + sy);
        if (mu_weight_negative(spec, mu))
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

std::vector<std::vector<Rational>> generalized_sum_table(const FunctionTable& t,
                                                         const SumSpec& shape,
                                                         int max_first_order,
                                                         int max_second_order) {
    if (shape.modulus < 1) throw std::domain_error("sum modulus must be positive");
    if (shape.first.multiplier == 0 || shape.second.multiplier == 0)
        throw std::domain_error("factor multiplier must be nonzero");
    if (max_first_order < 0 || max_second_order < 0)
        throw std::domain_error("order bounds must be non-negative");
    std::vector<std::vector<Rational>> out(
        max_first_order + 1, std::vector<Rational>(max_second_order + 1));
    const Rational step(1, shape.modulus);
    const Rational sx = factor_shift(shape.first);
    const Rational sy = factor_shift(shape.second);
    Rational base = (shape.inner_shift + Rational(shape.start)) / Rational(shape.modulus);
    std::vector<Rational> f1, f2;
    for (long mu = shape.start; mu < shape.modulus; ++mu, base += step) {
        t.eval_orders(shape.first.family, max_first_order,
                      Rational(shape.first.multiplier) * base + sx, f1);
        t.eval_orders(shape.second.family, max_second_order,
                      Rational(shape.second.multiplier) * base + sy, f2);
        const bool neg = mu_weight_negative(shape, mu);
        for (int i = 0; i <= max_first_order; ++i) {
            if (f1[i].is_zero()) continue;
            const Rational& w = f1[i];
            auto& row = out[i];
            for (int j = 0; j <= max_second_order; ++j) {
                if (f2[j].is_zero()) continue;
                if (neg)
                    row[j] -= w * f2[j];
                else
                    row[j] += w * f2[j];
            }
        }
    }
    return out;
}

Rational classical_sum(ClassicalKind kind, long a, long c) {
    if (c < 1) throw std::domain_error("classical sum modulus must be positive");
    Rational acc;
    for (long mu = 1; mu < c; ++mu) {
        const Rational frac_mu(mu, c);
        const Rational arg(a * mu, c);
        const bool floor_odd = mpz_odd_p(floor_split(arg).floor.get_mpz_t());
        switch (kind) {
            case ClassicalKind::Dedekind:
                acc += sawtooth(frac_mu) * sawtooth(arg);
                break;
            case ClassicalKind::S:
                // (-1)^(mu+1+[a mu/c])
                if ((mu + 1 + (floor_odd ? 1 : 0)) & 1)
                    acc -= 1;
                else
                    acc += 1;
                break;
            case ClassicalKind::S1:
                if (floor_odd)
                    acc -= sawtooth(frac_mu);
                else
                    acc += sawtooth(frac_mu);
                break;
            case ClassicalKind::S2:
                if (mu & 1)
                    acc -= sawtooth(arg) * sawtooth(frac_mu);
                else
                    acc += sawtooth(arg) * sawtooth(frac_mu);
                break;
            case ClassicalKind::S3:
                if (mu & 1)
                    acc -= sawtooth(arg);
                else
                    acc += sawtooth(arg);
                break;
            case ClassicalKind::S4:
                if (floor_odd)
                    acc -= 1;
                else
                    acc += 1;
                break;
            case ClassicalKind::S5:
                if ((mu + (floor_odd ? 1 : 0)) & 1)
                    acc -= sawtooth(frac_mu);
                else
                    acc += sawtooth(frac_mu);
                break;
        }
    }
    return acc;
}

namespace {

FunctionSpec make_factor(FunFamily fam, int order, long mult, const Rational& shift, int sign) {
    FunctionSpec f;
    f.family = fam;
    f.order = order;
    f.multiplier = mult;
    f.shift = shift;
    f.shift_sign = sign;
    return f;
}

SumSpec two_factor(long c, SumWeight w, const Rational& z, FunctionSpec f1, FunctionSpec f2) {
    SumSpec s;
    s.modulus = c;
    s.weight = w;
    s.inner_shift = z;
    s.first = std::move(f1);
    s.second = std::move(f2);
    s.start = 0;
    return s;
}

}  // namespace

Rational hwz_s(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, z,
                      make_factor(FunFamily::BernoulliBar, p, a, x, -1),
                      make_factor(FunFamily::BernoulliBar, q, b, y, -1)));
}

Rational carlitz_s(const FunctionTable& t, int p, long a, long c,
                   const Rational& x, const Rational& y) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, y,
                      make_factor(FunFamily::BernoulliFun, p, a, x, +1),
                      make_factor(FunFamily::BernoulliBar, 1, 1, Rational(), +1)));
}

Rational rademacher_s(const FunctionTable& t, long a, long c,
                      const Rational& x, const Rational& y) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, y,
                      make_factor(FunFamily::BernoulliBar, 1, a, x, +1),
                      make_factor(FunFamily::BernoulliBar, 1, 1, Rational(), +1)));
}

Rational mikolas_s(const FunctionTable& t, int p, int q, long a, long b, long c) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, Rational(),
                      make_factor(FunFamily::BernoulliFun, p, a, Rational(), +1),
                      make_factor(FunFamily::BernoulliFun, q, b, Rational(), +1)));
}

Rational apostol_s(const FunctionTable& t, int p, long a, long c) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, Rational(),
                      make_factor(FunFamily::BernoulliBar, p, a, Rational(), +1),
                      make_factor(FunFamily::BernoulliBar, 1, 1, Rational(), +1)));
}

Rational S_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
              const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::EulerFun, p - 1, a, x, +1),
                      make_factor(FunFamily::EulerFun, q - 1, b, y, +1)));
}

Rational S1_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, z,
                      make_factor(FunFamily::EulerFun, p - 1, a, x, +1),
                      make_factor(FunFamily::BernoulliFun, q, b, y, +1)));
}

Rational S2_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::BernoulliFun, p, a, x, +1),
                      make_factor(FunFamily::BernoulliFun, q, b, y, +1)));
}

Rational S35_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::EulerFun, p - 1, a, x, +1),
                      make_factor(FunFamily::BernoulliFun, q, b, y, +1)));
}

Rational S4_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, z,
                      make_factor(FunFamily::EulerFun, p - 1, a, x, +1),
                      make_factor(FunFamily::EulerFun, q - 1, b, y, +1)));
}

Rational S_p(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z) {
    return S_pq(t, p, 1, a, 1, c, x, Rational(), z);
}

Rational Sp1(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z) {
    return S1_pq(t, p, 1, a, 1, c, x, Rational(), z);
}

Rational Sp2(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z) {
    return S2_pq(t, p, 1, a, 1, c, x, Rational(), z);
}

Rational Sp5(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z) {
    return S35_pq(t, p, 1, a, 1, c, x, Rational(), z);
}

Rational Sq3(const FunctionTable& t, int q, long b, long c, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::BernoulliFun, q, b, y, +1),
                      make_factor(FunFamily::EulerFun, 0, 1, Rational(), +1)));
}

Rational Sq4(const FunctionTable& t, int q, long c, long b, const Rational& z, const Rational& y) {
    return generalized_sum(
        t, two_factor(b, SumWeight::None, y,
                      make_factor(FunFamily::EulerFun, q - 1, c, z, +1),
                      make_factor(FunFamily::EulerFun, 0, 1, Rational(), +1)));
}

Rational S_pq_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                  const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::EulerBar, p - 1, a, x, -1),
                      make_factor(FunFamily::EulerBar, q - 1, b, y, -1)));
}

Rational S1_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, z,
                      make_factor(FunFamily::EulerBar, p - 1, a, x, -1),
                      make_factor(FunFamily::BernoulliBar, q, b, y, -1)));
}

Rational S2_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::BernoulliBar, p, a, x, -1),
                      make_factor(FunFamily::BernoulliBar, q, b, y, -1)));
}

Rational S35_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                 const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::AlternatingMu, z,
                      make_factor(FunFamily::EulerBar, p - 1, a, x, -1),
                      make_factor(FunFamily::BernoulliBar, q, b, y, -1)));
}

Rational S4_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z) {
    return generalized_sum(
        t, two_factor(c, SumWeight::None, z,
                      make_factor(FunFamily::EulerBar, p - 1, a, x, -1),
                      make_factor(FunFamily::EulerBar, q - 1, b, y, -1)));
}

}  // namespace hbsum
