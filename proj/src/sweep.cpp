#include "hbsum/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hbsum/series.hpp"

namespace hbsum {

namespace {

std::vector<Rational> field_candidates(const ParamField& f, const GridBounds& b) {
    std::vector<Rational> out;
    switch (f.kind) {
        case ParamKind::Modulus:
            for (long v = 1; v <= b.modulus_max; ++v) out.emplace_back(v);
            break;
        case ParamKind::Scale:
            for (long v = 1; v <= b.scale_max; ++v) out.emplace_back(v);
            break;
        case ParamKind::Order:
            for (int v = 1; v <= b.order_max; ++v) out.emplace_back(v);
            break;
        case ParamKind::OrderFrom0:
            for (int v = 0; v <= b.order_max; ++v) out.emplace_back(v);
            break;
        case ParamKind::Shift: {
            std::set<Rational> vals;
            for (long d : b.shift_denominators)
                for (long k = 0; k < d; ++k) vals.insert(Rational(k, d));
            out.assign(vals.begin(), vals.end());
            break;
        }
    }
    return out;
}

}  // namespace

void for_each_param_point(const IdentityInfo& info, const GridBounds& bounds,
                          const std::function<void(const Params&)>& fn) {
    const size_t n = info.fields.size();
    std::vector<std::vector<Rational>> values(n);
    for (size_t i = 0; i < n; ++i) {
        values[i] = field_candidates(info.fields[i], bounds);
        if (values[i].empty()) return;
    }
    std::vector<size_t> idx(n, 0);
    Params ps;
    for (;;) {
        for (size_t i = 0; i < n; ++i)
            ps[std::string(info.fields[i].name)] = values[i][idx[i]];
        fn(ps);
        size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

CampaignConfig parse_campaign_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    CampaignConfig cfg;
    try {
        if (j.contains("identities")) {
            if (j["identities"].is_string()) {
                if (j["identities"].get<std::string>() != "all")
                    throw std::runtime_error("config: identities must be a list or \"all\"");
            } else {
                cfg.identities = j["identities"].get<std::vector<std::string>>();
            }
        }
        cfg.bounds.modulus_max = j.value("modulus_max", cfg.bounds.modulus_max);
        cfg.bounds.order_max = j.value("order_max", cfg.bounds.order_max);
        if (j.contains("shift_denominators"))
            cfg.bounds.shift_denominators = j["shift_denominators"].get<std::vector<long>>();
        if (j.contains("samples_per_identity")) {
            if (j["samples_per_identity"].is_string()) {
                if (j["samples_per_identity"].get<std::string>() != "exhaustive")
                    throw std::runtime_error(
                        "config: samples_per_identity must be a count or \"exhaustive\"");
            } else {
                cfg.samples_per_identity = j["samples_per_identity"].get<long>();
            }
        }
        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.series_degree = j.value("series_degree", cfg.series_degree);
        if (j.contains("d_values")) cfg.d_values = j["d_values"].get<std::vector<long>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }

    for (const auto& id : cfg.identities)
        if (!find_identity(id))
            throw std::runtime_error("config: unknown identity id '" + id + "'");
    if (cfg.bounds.modulus_max < 1) throw std::runtime_error("config: modulus_max must be >= 1");
    if (cfg.bounds.order_max < 1) throw std::runtime_error("config: order_max must be >= 1");
    if (cfg.bounds.shift_denominators.empty())
        throw std::runtime_error("config: shift_denominators must be nonempty");
    for (long d : cfg.bounds.shift_denominators)
        if (d < 1) throw std::runtime_error("config: shift denominators must be >= 1");
    if (cfg.samples_per_identity && *cfg.samples_per_identity < 1)
        throw std::runtime_error("config: samples_per_identity must be >= 1");
    if (cfg.series_degree < 0) throw std::runtime_error("config: series_degree must be >= 0");
    for (long d : cfg.d_values)
        if (d < 2 || (d & 1)) throw std::runtime_error("config: d_values must be positive even");
    return cfg;
}

int campaign_table_degree(const CampaignConfig& cfg) {
    // The widest identity needs p + q at the order bound; series needs factor
    // orders through series_degree + 1.
    int deg = 2 * cfg.bounds.order_max;
    deg = std::max(deg, cfg.bounds.order_max + 1);
    if (!cfg.d_values.empty()) deg = std::max(deg, cfg.series_degree + 1);
    return deg;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

IdentityResult sweep_identity(const FunctionTable& t, const IdentityInfo& info,
                              const CampaignConfig& cfg) {
    IdentityResult res;
    res.id = std::string(info.id);

    // Reservoir-sample applicable points in one enumeration pass, then
    // evaluate only the kept ones. With no sample bound, keep everything.
    std::vector<Params> keep;
    long applicable = 0;
    SplitMix64 rng(cfg.seed ^ fnv1a(info.id));
    const bool sampled = cfg.samples_per_identity.has_value();
    const size_t limit = sampled ? static_cast<size_t>(*cfg.samples_per_identity) : SIZE_MAX;
    for_each_param_point(info, cfg.bounds, [&](const Params& ps) {
        if (!info.applicable(ps)) return;
        ++applicable;
        if (!sampled) {
            keep.push_back(ps);
        } else if (keep.size() < limit) {
            keep.push_back(ps);
        } else {
            std::uint64_t slot = rng.below(static_cast<std::uint64_t>(applicable));
            if (slot < limit) keep[static_cast<size_t>(slot)] = ps;
        }
    });
    res.points_applicable = applicable;

    std::sort(keep.begin(), keep.end());
    for (const auto& ps : keep) {
        Rational r = info.residual(t, ps);
        ++res.points_tested;
        if (!r.is_zero()) res.failures.push_back(IdentityFailure{ps, r});
    }
    return res;
}

Rational first_nonzero(const TruncatedSeries& s) {
    for (int total = 0; total <= s.max_total_degree(); ++total)
        for (int i = 0; i <= total; ++i)
            if (!s.coeff(i, total - i).is_zero()) return s.coeff(i, total - i);
    return Rational();
}

}  // namespace

IdentityResult sweep_omega(const FunctionTable& t, const CampaignConfig& cfg) {
    IdentityResult res;
    res.id = "omega-g-rp";

    std::vector<Rational> shifts =
        field_candidates(ParamField{"x", ParamKind::Shift}, cfg.bounds);

    std::vector<OmegaParams> keep;
    long applicable = 0;
    SplitMix64 rng(cfg.seed ^ fnv1a(res.id));
    const bool sampled = cfg.samples_per_identity.has_value();
    const size_t limit = sampled ? static_cast<size_t>(*cfg.samples_per_identity) : SIZE_MAX;
    auto offer = [&](const OmegaParams& p) {
        ++applicable;
        if (!sampled || keep.size() < limit) {
            keep.push_back(p);
        } else {
            std::uint64_t slot = rng.below(static_cast<std::uint64_t>(applicable));
            if (slot < limit) keep[static_cast<size_t>(slot)] = p;
        }
    };
    for (long a = 1; a <= cfg.bounds.modulus_max; ++a)
        for (long b = 1; b <= cfg.bounds.modulus_max; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long c = 1; c <= cfg.bounds.modulus_max; ++c) {
                if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                for (long d : cfg.d_values)
                    for (const Rational& x : shifts)
                        for (const Rational& y : shifts)
                            for (const Rational& z : shifts)
                                offer(OmegaParams{a, b, c, d, x, y, z, 0});
            }
        }
    res.points_applicable = applicable;

    std::sort(keep.begin(), keep.end(), [](const OmegaParams& l, const OmegaParams& r) {
        return std::tie(l.a, l.b, l.c, l.d, l.x, l.y, l.z) <
               std::tie(r.a, r.b, r.c, r.d, r.x, r.y, r.z);
    });
    for (const auto& p : keep) {
        OmegaReport rep = check_omega_reciprocity(t, p, cfg.series_degree);
        ++res.points_tested;
        if (rep.indeterminate) {
            ++res.indeterminate;
            continue;
        }
        if (rep.residual.is_zero()) continue;
        Params ps;
        ps["a"] = Rational(p.a);
        ps["b"] = Rational(p.b);
        ps["c"] = Rational(p.c);
        ps["d"] = Rational(p.d);
        ps["x"] = p.x;
        ps["y"] = p.y;
        ps["z"] = p.z;
        res.failures.push_back(IdentityFailure{std::move(ps), first_nonzero(rep.residual)});
    }
    return res;
}

SweepReport run_sweep(const FunctionTable& t, const CampaignConfig& cfg) {
    SweepReport report;
    report.config = cfg;

    std::vector<const IdentityInfo*> selected;
    if (cfg.identities.empty()) {
        for (const auto& info : identity_catalog()) selected.push_back(&info);
    } else {
        for (const auto& id : cfg.identities) {
            const IdentityInfo* info = find_identity(id);
            if (!info) throw std::invalid_argument("unknown identity id '" + id + "'");
            selected.push_back(info);
        }
    }

    for (const IdentityInfo* info : selected) {
        report.results.push_back(sweep_identity(t, *info, cfg));
        if (!report.results.back().failures.empty()) report.pass = false;
    }

    if (!cfg.d_values.empty()) {
        report.results.push_back(sweep_omega(t, cfg));
        if (!report.results.back().failures.empty()) report.pass = false;
    }
    return report;
}

std::string report_to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;

    nlohmann::ordered_json jc;
    jc["identities"] = report.config.identities.empty()
                           ? nlohmann::ordered_json("all")
                           : nlohmann::ordered_json(report.config.identities);
    jc["modulus_max"] = report.config.bounds.modulus_max;
    jc["order_max"] = report.config.bounds.order_max;
    jc["shift_denominators"] = report.config.bounds.shift_denominators;
    if (report.config.samples_per_identity)
        jc["samples_per_identity"] = *report.config.samples_per_identity;
    else
        jc["samples_per_identity"] = "exhaustive";
    jc["seed"] = report.config.seed;
    jc["series_degree"] = report.config.series_degree;
    jc["d_values"] = report.config.d_values;
    j["config"] = std::move(jc);

    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& res : report.results) {
        nlohmann::ordered_json jr;
        jr["id"] = res.id;
        jr["points_tested"] = res.points_tested;
        jr["points_applicable"] = res.points_applicable;
        jr["indeterminate"] = res.indeterminate;
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& f : res.failures) {
            nlohmann::ordered_json jf;
            nlohmann::ordered_json jp;
            for (const auto& [name, value] : f.params) jp[name] = value.str();
            jf["params"] = std::move(jp);
            jf["residual"] = f.residual.str();
            fails.push_back(std::move(jf));
        }
        jr["failures"] = std::move(fails);
        results.push_back(std::move(jr));
    }
    j["results"] = std::move(results);
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace hbsum
