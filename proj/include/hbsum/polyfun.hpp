#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hbsum/rational.hpp"

namespace hbsum {

// Thrown when an evaluation asks for a polynomial degree beyond what the
// frozen tables were built for.
class DegreeError : public std::out_of_range {
public:
    explicit DegreeError(int wanted, int have)
        : std::out_of_range("degree " + std::to_string(wanted) +
                            " exceeds table built to degree " + std::to_string(have)) {}
};

struct FloorSplit {
    mpz_class floor;  // greatest integer <= input
    Rational frac;    // input - floor, in [0, 1)
};

FloorSplit floor_split(const Rational& x);

// ((x)): x - [x] - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// Coefficient table for one polynomial family, degrees 0..max_degree.
// Row n holds the coefficients of the degree-n polynomial, constant term first.
class PolyTable {
public:
    int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<Rational>& coeffs(int n) const {
        check(n);
        return rows_[static_cast<size_t>(n)];
    }
    Rational eval(int n, const Rational& x) const;

private:
    friend std::pair<PolyTable, PolyTable> build_tables(int max_degree);
    void check(int n) const {
        if (n < 0 || n > max_degree()) throw DegreeError(n, max_degree());
    }
    std::vector<std::vector<Rational>> rows_;
};

// Bernoulli and Euler polynomial tables up to max_degree, built eagerly from
// the Bernoulli number recurrence; the Euler coefficients are derived from
// the Bernoulli ones and cross-checked against E_0 = 1 and E_1 = x - 1/2.
std::pair<PolyTable, PolyTable> build_tables(int max_degree);

enum class FunFamily { BernoulliFun, BernoulliBar, EulerFun, EulerBar };

// Periodized function evaluators over a frozen pair of tables.
//
//   bernoulli_fun(n,x) = B_n(x - [x])                 (period 1)
//   bbar_fun(n,x)      = bernoulli_fun, except n=1 -> sawtooth
//   euler_fun(n,x)     = (-1)^[x] E_n(x - [x])        (quasi-period 1)
//   ebar_fun(n,x)      = euler_fun, except 0 at integer x when n=0
class FunctionTable {
public:
    explicit FunctionTable(int max_degree);

    int max_degree() const { return bern_.max_degree(); }
    const PolyTable& bernoulli() const { return bern_; }
    const PolyTable& euler() const { return eul_; }

    Rational bernoulli_fun(int n, const Rational& x) const;
    Rational bbar_fun(int n, const Rational& x) const;
    Rational euler_fun(int n, const Rational& x) const;
    Rational ebar_fun(int n, const Rational& x) const;

    Rational eval(FunFamily family, int order, const Rational& x) const;

    // All orders 0..max_order of one family at a single argument, sharing one
    // floor_split; the workhorse for sum kernels that need many orders.
    void eval_orders(FunFamily family, int max_order, const Rational& x,
                     std::vector<Rational>& out) const;

private:
    PolyTable bern_, eul_;
};

// Symmetric partial Fourier sum -p!/(2*pi*i)^p sum_{0<|m|<=M} e^{2*pi*i*m*x}/m^p,
// real by construction; approximates bernoulli_fun(p, x) for large M.
// p = 1 is rejected within 1e-9 of an integer, where the series is excluded.
double fourier_partial(int p, double x, long M);

}  // namespace hbsum
