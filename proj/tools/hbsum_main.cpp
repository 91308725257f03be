#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hbsum/identities.hpp"
#include "hbsum/series.hpp"
#include "hbsum/sweep.hpp"

namespace {

using hbsum::FunctionTable;
using hbsum::Params;
using hbsum::Rational;

// Flag problems exit 2; precondition problems (domain errors, degree caps)
// exit 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<int> degree_cap() {
    const char* s = std::getenv("HBSUM_MAX_DEGREE");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 0) throw UsageError("HBSUM_MAX_DEGREE must be a nonnegative integer");
    return static_cast<int>(v);
}

FunctionTable make_table(int degree) {
    if (degree < 1) degree = 1;
    auto cap = degree_cap();
    if (cap && degree > *cap)
        throw std::domain_error("table degree " + std::to_string(degree) +
                                " exceeds HBSUM_MAX_DEGREE=" + std::to_string(*cap));
    return FunctionTable(degree);
}

// Raw option values; parsed lazily so each subcommand can demand its own set.
struct FlagSet {
    std::map<std::string, std::string> raw;

    void attach(CLI::App* cmd, std::initializer_list<const char*> names) {
        for (const char* n : names)
            cmd->add_option(std::string("--") + n, raw[n]);
    }

    std::optional<Rational> value(const std::string& name) const {
        auto it = raw.find(name);
        if (it == raw.end() || it->second.empty()) return std::nullopt;
        try {
            return Rational::parse(it->second);
        } catch (const std::exception&) {
            throw UsageError("--" + name + ": cannot parse '" + it->second + "' as a rational");
        }
    }

    Rational shift(const std::string& name) const {
        auto v = value(name);
        return v ? *v : Rational();
    }

    long integer(const std::string& name) const {
        auto v = value(name);
        if (!v) throw UsageError("--" + name + " is required");
        if (!v->is_integer()) throw UsageError("--" + name + " must be an integer");
        mpz_class n = v->numerator();
        if (!n.fits_slong_p()) throw UsageError("--" + name + " is out of range");
        return n.get_si();
    }

    int order(const std::string& name) const { return static_cast<int>(integer(name)); }
};

int run_eval(const std::string& sum, const FlagSet& f) {
    Rational result;
    if (sum == "dedekind" || sum == "S" || sum == "s1" || sum == "s2" || sum == "s3" ||
        sum == "s4" || sum == "s5") {
        hbsum::ClassicalKind kind;
        if (sum == "dedekind") kind = hbsum::ClassicalKind::Dedekind;
        else if (sum == "S") kind = hbsum::ClassicalKind::S;
        else if (sum == "s1") kind = hbsum::ClassicalKind::S1;
        else if (sum == "s2") kind = hbsum::ClassicalKind::S2;
        else if (sum == "s3") kind = hbsum::ClassicalKind::S3;
        else if (sum == "s4") kind = hbsum::ClassicalKind::S4;
        else kind = hbsum::ClassicalKind::S5;
        result = hbsum::classical_sum(kind, f.integer("a"), f.integer("c"));
    } else {
        // Size the table from whichever order flags the sum takes.
        int deg = 1;
        auto bump = [&](const char* n) {
            auto v = f.value(n);
            if (v && v->is_integer() && v->numerator().fits_slong_p())
                deg = std::max(deg, static_cast<int>(v->numerator().get_si()));
        };
        bump("p");
        bump("q");
        FunctionTable t = make_table(deg);

        if (sum == "hwz")
            result = hbsum::hwz_s(t, f.order("p"), f.order("q"), f.integer("a"), f.integer("b"),
                                  f.integer("c"), f.shift("x"), f.shift("y"), f.shift("z"));
        else if (sum == "carlitz")
            result = hbsum::carlitz_s(t, f.order("p"), f.integer("a"), f.integer("c"),
                                      f.shift("x"), f.shift("y"));
        else if (sum == "rademacher")
            result = hbsum::rademacher_s(t, f.integer("a"), f.integer("c"), f.shift("x"),
                                         f.shift("y"));
        else if (sum == "mikolas")
            result = hbsum::mikolas_s(t, f.order("p"), f.order("q"), f.integer("a"),
                                      f.integer("b"), f.integer("c"));
        else if (sum == "apostol")
            result = hbsum::apostol_s(t, f.order("p"), f.integer("a"), f.integer("c"));
        else if (sum == "Sp" || sum == "Sp1" || sum == "Sp2" || sum == "Sp5") {
            auto fn = sum == "Sp"    ? hbsum::S_p
                      : sum == "Sp1" ? hbsum::Sp1
                      : sum == "Sp2" ? hbsum::Sp2
                                     : hbsum::Sp5;
            result = fn(t, f.order("p"), f.integer("a"), f.integer("c"), f.shift("x"),
                        f.shift("z"));
        } else if (sum == "Sq3")
            result = hbsum::Sq3(t, f.order("q"), f.integer("b"), f.integer("c"), f.shift("y"),
                                f.shift("z"));
        else if (sum == "Sq4")
            result = hbsum::Sq4(t, f.order("q"), f.integer("c"), f.integer("b"), f.shift("z"),
                                f.shift("y"));
        else {
            Rational (*fn)(const FunctionTable&, int, int, long, long, long, const Rational&,
                           const Rational&, const Rational&) = nullptr;
            if (sum == "Spq") fn = hbsum::S_pq;
            else if (sum == "S1pq") fn = hbsum::S1_pq;
            else if (sum == "S2pq") fn = hbsum::S2_pq;
            else if (sum == "S35pq") fn = hbsum::S35_pq;
            else if (sum == "S4pq") fn = hbsum::S4_pq;
            else if (sum == "Spq-bar") fn = hbsum::S_pq_bar;
            else if (sum == "S1pq-bar") fn = hbsum::S1_bar;
            else if (sum == "S2pq-bar") fn = hbsum::S2_bar;
            else if (sum == "S35pq-bar") fn = hbsum::S35_bar;
            else if (sum == "S4pq-bar") fn = hbsum::S4_bar;
            if (!fn) throw UsageError("unknown sum '" + sum + "'");
            result = fn(t, f.order("p"), f.order("q"), f.integer("a"), f.integer("b"),
                        f.integer("c"), f.shift("x"), f.shift("y"), f.shift("z"));
        }
    }
    std::cout << result.str() << "\n";
    return 0;
}

int run_check(const std::string& id, const FlagSet& f) {
    const hbsum::IdentityInfo* info = hbsum::find_identity(id);
    if (!info) {
        std::cerr << "unknown identity id '" << id << "'\n";
        return 2;
    }
    Params ps;
    for (const auto& field : info->fields) {
        std::string name(field.name);
        auto v = f.value(name);
        if (!v) throw UsageError("--" + name + " is required for identity '" + id + "'");
        ps[name] = *v;
    }
    FunctionTable t = make_table(info->required_degree(ps));
    hbsum::IdentityCheck c = hbsum::check_identity(t, id, ps);
    std::cout << "id " << c.id << "\n";
    std::cout << "applicable " << (c.applicable ? "true" : "false") << "\n";
    if (c.residual) std::cout << "residual " << c.residual->str() << "\n";
    if (!c.applicable) {
        std::cout << "verdict not-applicable\n";
        return 3;
    }
    std::cout << "verdict " << (c.passed() ? "pass" : "fail") << "\n";
    return c.passed() ? 0 : 1;
}

// Kept in sync with configs/default_sweep.json.
const char* kDefaultConfig = R"({
  "identities": "all",
  "modulus_max": 8,
  "order_max": 3,
  "shift_denominators": [1, 2, 3],
  "samples_per_identity": 120,
  "seed": 20250825,
  "series_degree": 4,
  "d_values": []
})";

int run_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& format) {
    std::string text;
    if (config_path.empty()) {
        text = kDefaultConfig;
    } else {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot read config '" << config_path << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    hbsum::CampaignConfig cfg;
    try {
        cfg = hbsum::parse_campaign_config(text);
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    FunctionTable t = make_table(hbsum::campaign_table_degree(cfg));
    hbsum::SweepReport report = hbsum::run_sweep(t, cfg);

    std::string rendered;
    if (format == "json") {
        rendered = hbsum::report_to_json(report);
    } else {
        std::ostringstream os;
        for (const auto& r : report.results) {
            os << r.id << ": " << r.points_tested << "/" << r.points_applicable
               << " points, " << r.failures.size() << " failures";
            if (r.indeterminate > 0) os << ", " << r.indeterminate << " indeterminate";
            os << "\n";
        }
        os << (report.pass ? "pass" : "fail") << "\n";
        rendered = os.str();
    }

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        out << rendered;
    }
    return report.pass ? 0 : 1;
}

int run_series(const std::string& theorem, const FlagSet& f, int degree) {
    if (theorem != "omega") throw UsageError("unknown theorem '" + theorem + "'");
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    hbsum::OmegaParams p;
    p.a = f.integer("a");
    p.b = f.integer("b");
    p.c = f.integer("c");
    p.d = f.integer("d");
    p.x = f.shift("x");
    p.y = f.shift("y");
    p.z = f.shift("z");

    FunctionTable t = make_table(degree);
    hbsum::OmegaReport rep = hbsum::check_omega_reciprocity(t, p, degree);

    if (!rep.membership.member) {
        std::cout << "branch non-member\n";
    } else if (*rep.membership.parity == hbsum::ParityClass::Ambiguous) {
        std::cout << "branch ambiguous\n";
    } else {
        std::cout << "branch member\n";
        std::cout << "parity "
                  << (*rep.membership.parity == hbsum::ParityClass::Odd ? "odd" : "even") << "\n";
    }
    if (rep.membership.witness) {
        const auto& w = *rep.membership.witness;
        std::cout << "witness R=" << w.R.str() << " offsets=(" << w.a0.get_str() << ","
                  << w.b0.get_str() << "," << w.c0.get_str() << ")\n";
    }
    if (rep.rhs_constant) std::cout << "rhs " << rep.rhs_constant->str() << "\n";
    std::cout << "residual " << (rep.residual.is_zero() ? "zero" : "nonzero") << "\n";
    std::cout << rep.residual.export_text();
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dedekind and Hardy-Berndt sum calculator"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one named sum");
    std::string sum_name;
    eval_cmd->add_option("--sum", sum_name, "sum family token")->required();
    FlagSet eval_flags;
    eval_flags.attach(eval_cmd, {"p", "q", "a", "b", "c", "x", "y", "z"});

    auto* check_cmd = app.add_subcommand("check", "check one identity at one point");
    std::string identity_id;
    check_cmd->add_option("--identity", identity_id, "identity id")->required();
    FlagSet check_flags;
    check_flags.attach(check_cmd,
                       {"a", "b", "c", "d", "m", "n", "p", "q", "r", "x", "y", "z", "X", "Y"});

    auto* sweep_cmd = app.add_subcommand("sweep", "run an identity sweep campaign");
    std::string config_path, out_path, format = "json";
    sweep_cmd->add_option("--config", config_path, "campaign config JSON (default: built in)");
    sweep_cmd->add_option("--out", out_path, "report path (default: stdout)");
    sweep_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* series_cmd = app.add_subcommand("series", "check the generating-function reciprocity");
    std::string theorem = "omega";
    int degree = 6;
    series_cmd->add_option("--theorem", theorem, "which statement to check");
    series_cmd->add_option("--degree", degree, "series truncation degree");
    FlagSet series_flags;
    series_flags.attach(series_cmd, {"a", "b", "c", "d", "x", "y", "z"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(sum_name, eval_flags);
        if (check_cmd->parsed()) return run_check(identity_id, check_flags);
        if (sweep_cmd->parsed()) return run_sweep(config_path, out_path, format);
        if (series_cmd->parsed()) return run_series(theorem, series_flags, degree);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hbsum::DegreeError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
