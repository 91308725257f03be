#pragma once

#include <vector>

#include "hbsum/polyfun.hpp"
#include "hbsum/rational.hpp"

namespace hbsum {

// One factor f(mult*(mu+z)/c + shift_sign*shift) of a residue sum.
struct FunctionSpec {
    FunFamily family = FunFamily::BernoulliFun;
    int order = 0;
    long multiplier = 1;  // nonzero; theorems pass negative multipliers
    Rational shift;
    int shift_sign = 1;  // +1 or -1
};

enum class SumWeight { None, AlternatingMu };

struct SumSpec {
    long modulus = 1;  // c >= 1
    SumWeight weight = SumWeight::None;
    Rational inner_shift;  // z
    FunctionSpec first;    // multiplier a, shift x
    FunctionSpec second;   // multiplier b, shift y
    int start = 0;         // 0 or 1; start=1 gives the classical mu=1..c-1 range
};

// sum_{mu=start}^{c-1} w(mu) f1(a(mu+z)/c + e1*x) f2(b(mu+z)/c + e2*y), exact.
Rational generalized_sum(const FunctionTable& t, const SumSpec& spec);

// Same sum for every pair of factor orders at once: out[i][j] is the value
// with first.order=i, second.order=j (the orders in `shape` are ignored).
// One pass over mu; shared floor_splits make large order grids cheap.
std::vector<std::vector<Rational>> generalized_sum_table(const FunctionTable& t,
                                                         const SumSpec& shape,
                                                         int max_first_order,
                                                         int max_second_order);

enum class ClassicalKind { Dedekind, S, S1, S2, S3, S4, S5 };

// The classical Dedekind and Hardy-Berndt sums, evaluated from their literal
// mu=1..c-1 definitions (sawtooth factors and [a*mu/c] floor parities).
Rational classical_sum(ClassicalKind kind, long a, long c);

// Named sum families. Shift signs: plus for the script-B/E sums, minus for
// the hwz and bar-variant sums.
Rational hwz_s(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z);
Rational carlitz_s(const FunctionTable& t, int p, long a, long c,
                   const Rational& x, const Rational& y);
Rational rademacher_s(const FunctionTable& t, long a, long c,
                      const Rational& x, const Rational& y);
Rational mikolas_s(const FunctionTable& t, int p, int q, long a, long b, long c);
Rational apostol_s(const FunctionTable& t, int p, long a, long c);

Rational S_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
              const Rational& x, const Rational& y, const Rational& z);
Rational S1_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z);
Rational S2_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z);
Rational S35_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z);
Rational S4_pq(const FunctionTable& t, int p, int q, long a, long b, long c,
               const Rational& x, const Rational& y, const Rational& z);

Rational S_p(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z);
Rational Sp1(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z);
Rational Sp2(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z);
Rational Sp5(const FunctionTable& t, int p, long a, long c, const Rational& x, const Rational& z);

Rational Sq3(const FunctionTable& t, int q, long b, long c, const Rational& y, const Rational& z);
Rational Sq4(const FunctionTable& t, int q, long c, long b, const Rational& z, const Rational& y);

// Bar variants: Ebar/Bbar factor families, minus shift signs. The S35 bar sum
// carries the (-1)^mu weight like its unbarred counterpart.
Rational S_pq_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                  const Rational& x, const Rational& y, const Rational& z);
Rational S1_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z);
Rational S2_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z);
Rational S35_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                 const Rational& x, const Rational& y, const Rational& z);
Rational S4_bar(const FunctionTable& t, int p, int q, long a, long b, long c,
                const Rational& x, const Rational& y, const Rational& z);

}  // namespace hbsum
