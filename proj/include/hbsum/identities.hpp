#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbsum/sums.hpp"

namespace hbsum {

// Identity parameters by name. Integer-valued parameters are stored as
// integral Rationals; lookups reject non-integral values where one is needed.
using Params = std::map<std::string, Rational>;

struct IdentityCheck {
    std::string id;
    Params params;
    bool applicable = false;
    std::optional<Rational> residual;  // present iff applicable

    bool passed() const { return applicable && residual && residual->is_zero(); }
};

// How a parameter is enumerated in sweeps. Hypotheses (parity, coprimality,
// range coupling like r <= m-1) live in the identity's applicability test.
enum class ParamKind {
    Modulus,    // 1 .. modulus_max
    Scale,      // 1 .. 4 (homogeneity factors)
    Order,      // 1 .. order_max
    OrderFrom0, // 0 .. order_max
    Shift,      // k/D for configured denominators D, 0 <= k < D
};

struct ParamField {
    std::string_view name;
    ParamKind kind;
};

struct IdentityInfo {
    std::string_view id;
    std::vector<ParamField> fields;
    bool (*applicable)(const Params&);
    Rational (*residual)(const FunctionTable&, const Params&);
    int (*required_degree)(const Params&);
};

// Every verified relation, keyed by a stable id. Each residual is the
// relation's left-hand side minus its right-hand side, so a zero residual
// means the relation holds at that point.
const std::vector<IdentityInfo>& identity_catalog();

// Null when the id is unknown.
const IdentityInfo* find_identity(std::string_view id);

// Evaluates one identity at one parameter point. Throws std::invalid_argument
// for an unknown id or missing/non-integral parameter; propagates DegreeError
// when the table is too small.
IdentityCheck check_identity(const FunctionTable& t, std::string_view id, const Params& params);

// Evaluates the residual even when the hypotheses fail. Used to probe that
// hypotheses are necessary (a violated hypothesis should produce nonzero
// residuals somewhere); never part of a pass/fail verdict.
Rational identity_residual_unchecked(const FunctionTable& t, std::string_view id,
                                     const Params& params);

// Least positive inverse of a modulo m (m >= 1; returns 1 when m == 1).
// Throws std::domain_error unless gcd(a, m) == 1.
long mod_inverse(long a, long m);

// Binomial coefficient with integer upper argument of either sign:
// n(n-1)...(n-k+1)/k!, zero for k < 0.
Rational gen_binom(long n, long k);

}  // namespace hbsum
