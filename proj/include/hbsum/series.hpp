#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbsum/sums.hpp"

namespace hbsum {

// Dense bivariate polynomial in X and Y truncated at a fixed total degree.
// Coefficients with i + j > N are identically zero and cannot be set;
// products drop the truncated part.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int max_total_degree);

    int max_total_degree() const { return n_; }
    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, Rational v);
    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries pow(int e) const;

    // Image under X -> for_x, Y -> for_y.
    TruncatedSeries substitute(const TruncatedSeries& for_x, const TruncatedSeries& for_y) const;

    // alpha*X + beta*Y at the given truncation degree.
    static TruncatedSeries linear_form(int max_total_degree, const Rational& alpha,
                                       const Rational& beta);

    // One line "i j value" per stored monomial, sorted by (i+j, i).
    std::string export_text() const;

    bool operator==(const TruncatedSeries& o) const { return n_ == o.n_ && c_ == o.c_; }

  private:
    int n_;
    std::vector<Rational> c_;  // (N+1)x(N+1), entries with i+j > N unused
};

// Bivariate series allowing exponent -1 in each variable (no deeper poles),
// truncated by exponent sum.
class LaurentSeries {
  public:
    explicit LaurentSeries(int max_total_degree);

    int max_total_degree() const { return n_; }
    const Rational& coeff(int i, int j) const;  // i, j >= -1
    void set_coeff(int i, int j, Rational v);
    std::string export_text() const;

  private:
    int n_;
    std::vector<Rational> c_;
};

enum class ParityClass { Even, Odd, Ambiguous };

struct MembershipWitness {
    Rational R;
    mpz_class a0, b0, c0;
};

// Whether (x,y,z) = (da,db,dc)*R + integer offsets for some real R, and the
// offset parity when that parity does not depend on the choice of R.
struct MembershipVerdict {
    bool member = false;
    std::optional<ParityClass> parity;        // present iff member
    std::optional<MembershipWitness> witness;  // present iff member
};

MembershipVerdict omega_membership(const Rational& x, const Rational& y, const Rational& z,
                                   long da, long db, long dc);

struct OmegaParams {
    long a = 1, b = 1, c = 1;  // pairwise coprime, positive
    long d = 2;                // even, positive
    Rational x, y, z;
    // Cyclic slot order: 0 = (da,db,dc | x,y,z | X,Y),
    // 1 = (dc,da,db | z,x,y | Z,X), 2 = (db,dc,da | y,z,x | Y,Z), Z = -X-Y.
    int rotation = 0;
};

// One generating-function permutation, expressed in the common (X,Y) basis:
// sum over p,q >= 1 of (pq/4) Sbar_{p,q}(slots) (U/alpha)^{p-1} (V/beta)^{q-1} / (p! q!),
// truncated at total degree N. Needs table orders through N.
TruncatedSeries omega_series(const FunctionTable& t, const OmegaParams& params, int N);

struct OmegaReport {
    MembershipVerdict membership;
    TruncatedSeries total;                 // sum of the three rotations
    std::optional<Rational> rhs_constant;  // absent iff parity is ambiguous
    TruncatedSeries residual;              // total minus the constant (total itself if absent)
    bool indeterminate = false;            // ambiguous parity: reported, not judged
    bool passed = false;                   // residual identically zero and not indeterminate
};

// Degree-by-degree check of the three-rotation reciprocity against the
// membership right-hand side. rotation in params is ignored.
OmegaReport check_omega_reciprocity(const FunctionTable& t, const OmegaParams& params, int N);

// The two-variable generating function of the Bernoulli-type sums, kept in
// its own leading variables with 1/X and 1/Y rows intact: coefficient of
// X^(p-1) Y^(q-1) is s_{p,q}(a,b,c : x,y,z) a^(1-p) b^(1-q) / (p! q!).
// Needs table orders through N+2.
LaurentSeries hwz_G_series(const FunctionTable& t, long a, long b, long c, const Rational& x,
                           const Rational& y, const Rational& z, int N);

}  // namespace hbsum
