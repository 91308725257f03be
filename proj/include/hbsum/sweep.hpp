#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbsum/identities.hpp"

namespace hbsum {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Grid bounds shared by all identity sweeps. Shift values are k/D for each
// configured denominator D with 0 <= k < D, deduplicated and sorted.
struct GridBounds {
    long modulus_max = 8;
    int order_max = 3;
    std::vector<long> shift_denominators{1, 2, 3};
    long scale_max = 4;
};

// splitmix64: tiny, seedable, identical output everywhere. Used only to pick
// sample points, never for anything cryptographic.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); the modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// Visits every point of the identity's parameter grid in a fixed order
// (declared fields, rightmost varying fastest), applicable or not.
void for_each_param_point(const IdentityInfo& info, const GridBounds& bounds,
                          const std::function<void(const Params&)>& fn);

struct CampaignConfig {
    std::vector<std::string> identities;       // empty = whole catalog
    GridBounds bounds;
    std::optional<long> samples_per_identity;  // nullopt = exhaustive
    std::uint64_t seed = 0;
    int series_degree = 4;
    std::vector<long> d_values;                // even scales; empty skips the series sweep
};

struct IdentityFailure {
    Params params;
    Rational residual;
};

struct IdentityResult {
    std::string id;
    long points_tested = 0;      // residuals actually evaluated
    long points_applicable = 0;  // grid points satisfying the hypotheses
    long indeterminate = 0;      // series points with an ambiguous verdict
    std::vector<IdentityFailure> failures;
};

struct SweepReport {
    std::string version{kToolVersion};
    CampaignConfig config;
    std::vector<IdentityResult> results;
    bool pass = true;
};

// Runs every configured identity sweep plus, when d_values is nonempty, the
// generating-function reciprocity sweep (reported under id "omega-g-rp").
// The table must cover campaign_table_degree(cfg).
SweepReport run_sweep(const FunctionTable& t, const CampaignConfig& cfg);

// Reciprocity of the three-rotation generating function over pairwise coprime
// triples up to modulus_max, every d in d_values, shifts from the grid.
// Aggregated under the id "omega-g-rp"; ambiguous parity counts as
// indeterminate, not as a failure.
IdentityResult sweep_omega(const FunctionTable& t, const CampaignConfig& cfg);

// Report serialization with a fixed key order, so identical runs produce
// identical bytes. Contains no timestamps by design.
std::string report_to_json(const SweepReport& report);

// Parses the JSON campaign file. Throws std::runtime_error on malformed input
// (including odd d_values and non-positive bounds).
CampaignConfig parse_campaign_config(const std::string& json_text);

// Smallest table degree sufficient for everything the config can evaluate.
int campaign_table_degree(const CampaignConfig& cfg);

}  // namespace hbsum
