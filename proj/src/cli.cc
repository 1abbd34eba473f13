// Copyright 2026 The mubgf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mubgf/cli.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mubgf/config.h"
#include "mubgf/mub.h"
#include "mubgf/ringlab.h"
#include "mubgf/serialize.h"
#include "mubgf/tomography.h"
#include "mubgf/weyl.h"

namespace mubgf {

namespace {

/// Exhaustive checks above these sizes are skipped with a note.
constexpr uint32_t kAxiomCheckMax = 64;
constexpr uint32_t kOrthogonalityCheckMax = 32;
constexpr uint32_t kDenseCheckMax = 16;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_format(const RunConfig &cfg, std::initializer_list<const char *> allowed) {
    for (const char *a : allowed) {
        if (cfg.format == a) {
            return;
        }
    }
    throw ConfigError("format '" + cfg.format + "' is not supported by this command");
}

void require_positive_tolerance(const RunConfig &cfg) {
    if (!(cfg.tolerance > 0)) {
        throw ConfigError("tolerance must be positive");
    }
}

PhaseConvention convention_for(const RunConfig &cfg, const GaloisField &f) {
    if (cfg.phase_k >= f.size()) {
        throw ConfigError("phase-k must be a field element below N = " + std::to_string(f.size()));
    }
    return PhaseConvention{Element(cfg.phase_k)};
}

void emit(std::ostream &out, const Json &doc) {
    out << doc.dump(2) << '\n';
}

void pretty_tables(std::ostream &out, const GaloisField &f) {
    const uint32_t n = f.size();
    const int w = static_cast<int>(std::to_string(n).size()) + 1;
    auto table = [&](const char *title, auto op) {
        out << title << '\n' << std::setw(w) << ' ' << " |";
        for (uint32_t b = 0; b < n; b++) {
            out << std::setw(w) << b;
        }
        out << '\n';
        for (uint32_t a = 0; a < n; a++) {
            out << std::setw(w) << a << " |";
            for (uint32_t b = 0; b < n; b++) {
                out << std::setw(w) << op(a, b);
            }
            out << '\n';
        }
        out << '\n';
    };
    table("field multiplication", [&](uint32_t a, uint32_t b) { return f.mul(Element(a), Element(b)).label(); });
    table("field addition", [&](uint32_t a, uint32_t b) { return f.add(Element(a), Element(b)).label(); });
    table("multiplication mod N", [&](uint32_t a, uint32_t b) { return a * b % n; });
    table("addition mod N", [&](uint32_t a, uint32_t b) { return (a + b) % n; });
}

int cmd_field(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {"json", "csv", "pretty"});
    FieldPtr f = resolve_field(cfg);
    if (cfg.format == "pretty") {
        pretty_tables(out, *f);
    } else {
        out << export_tables(*f, parse_table_format(cfg.format));
    }
    return kExitPass;
}

int cmd_mubs(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {"json"});
    FieldPtr f = resolve_field(cfg);
    emit(out, family_json(mub_family(f, convention_for(cfg, *f))));
    return kExitPass;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {"json", "csv", "pretty"});
    require_positive_tolerance(cfg);
    FieldPtr f = resolve_field(cfg);
    const PhaseConvention conv = convention_for(cfg, *f);
    const uint32_t n = f->size();
    const bool dense = n <= std::min(cfg.dense_cap, kDenseCheckMax);

    std::vector<Report> reports;
    auto skipped = [&](const std::string &name, const std::string &why) {
        Report r(name);
        r.notes.push_back("skipped: " + why);
        reports.push_back(std::move(r));
    };
    if (n <= kAxiomCheckMax) {
        reports.push_back(verify_field_axioms(*f));
        reports.push_back(verify_character_identities(*f));
    } else {
        skipped("field_axioms", "N above " + std::to_string(kAxiomCheckMax));
    }
    if (f->p() != 2) {
        reports.push_back(bilinear_relabel_check(*f));
    }
    reports.push_back(verify_class_structure(f));
    reports.push_back(verify_weyl_commutation(f));
    if (n <= kOrthogonalityCheckMax) {
        reports.push_back(verify_operator_orthogonality(f));
    } else {
        skipped("operator_orthogonality", "N above " + std::to_string(kOrthogonalityCheckMax));
    }
    Report group_law("u_group_law");
    for (uint32_t i = 0; i <= n; i++) {
        group_law.merge(u_group_law_check(f, i, conv));
    }
    reports.push_back(std::move(group_law));
    reports.push_back(verify_u_generator_orders(f, conv));
    if (dense) {
        reports.push_back(verify_dense_algebra(f, cfg.tolerance, cfg.dense_cap));
    } else {
        skipped("dense_algebra", "N above the dense limit");
    }

    MubFamily family = mub_family(f, conv);
    if (cfg.corrupt_phase) {
        // Negative control: perturb one amplitude of the dual basis.
        uint16_t &e = family.bases[1][0].exponents[n > 1 ? 1 : 0];
        e = static_cast<uint16_t>((e + 1) % (2 * f->p()));
    }
    UnbiasednessResult unbiased = verify_unbiasedness(family);
    if (cfg.format == "csv") {
        out << unbiasedness_csv(unbiased);
        return unbiased.report.passed() ? kExitPass : kExitVerificationFailure;
    }
    reports.push_back(unbiased.report);
    reports.push_back(verify_eigenstates(family, cfg.tolerance, dense ? cfg.dense_cap : 0));
    if (dense) {
        reports.push_back(verify_projectors(family, cfg.tolerance, cfg.dense_cap));
        Report covariance("basis_covariance");
        for (uint32_t i = 1; i <= n; i++) {
            covariance.merge(verify_basis_covariance(family, i, cfg.tolerance, cfg.dense_cap).report);
        }
        reports.push_back(std::move(covariance));
    } else {
        skipped("projectors", "N above the dense limit");
        skipped("basis_covariance", "N above the dense limit");
    }
    if (f->p() != 2) {
        reports.push_back(wf_equivalence_check(family).report);
    }

    bool passed = true;
    for (const Report &r : reports) {
        passed = passed && r.passed();
    }
    if (cfg.format == "pretty") {
        for (const Report &r : reports) {
            out << r.summary() << '\n';
            for (const std::string &c : r.counterexamples) {
                out << "  " << c << '\n';
            }
            for (const std::string &note : r.notes) {
                if (note.starts_with("skipped")) {
                    out << "  " << note << '\n';
                }
            }
        }
        out << (passed ? "all checks passed" : "verification FAILED") << '\n';
    } else {
        Json doc = Json{{"field", field_descriptor(*f)},
                        {"phase_k", cfg.phase_k},
                        {"even_reading", reading_name(conv.even_reading)},
                        {"corrupt_phase", cfg.corrupt_phase},
                        {"passed", passed}};
        Json rs = Json::array();
        for (const Report &r : reports) {
            rs.push_back(report_json(r));
        }
        doc["reports"] = std::move(rs);
        emit(out, doc);
    }
    return passed ? kExitPass : kExitVerificationFailure;
}

int cmd_tomo(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {"json", "pretty"});
    require_positive_tolerance(cfg);
    FieldPtr f = resolve_field(cfg);
    check_dense_cap(f->size(), cfg.dense_cap, "tomo");
    if (cfg.count == 0) {
        throw ConfigError("count must be positive");
    }
    const MubFamily family = mub_family(f, convention_for(cfg, *f));
    const TomographySummary s = tomography_round_trip(family, cfg.seed, cfg.count, cfg.tolerance);
    if (cfg.format == "pretty") {
        out << s.report.summary() << '\n'
            << "max error: pauli " << s.pauli_error << ", mub " << s.mub_error << ", weyl " << s.weyl_error << '\n';
    } else {
        emit(out, tomography_json(s));
    }
    return s.report.passed() ? kExitPass : kExitVerificationFailure;
}

int cmd_ring(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg, {"json", "pretty"});
    if (cfg.n == 0) {
        throw ConfigError("ring needs --n");
    }
    const RingClasses classes = maximal_commuting_classes(cfg.n, 1e-10, cfg.dense_cap);
    const RingScan scan = eigenbasis_unbiasedness_scan(classes, cfg.seed, 1e-8, cfg.dense_cap);
    if (cfg.format == "pretty") {
        out << "Z_" << cfg.n << ": " << classes.classes.size() << " maximal commuting classes, "
            << classes.overlapping_pairs << " overlapping pairs, max deviation from 1/N " << scan.max_deviation
            << '\n';
    } else {
        emit(out, ring_json(classes, scan));
    }
    return scan.report.passed() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

FieldPtr resolve_field(const RunConfig &cfg) {
    uint32_t p = cfg.p;
    uint32_t m = cfg.m;
    if (p == 0) {
        if (cfg.n < 2) {
            throw std::invalid_argument("give --p (and --m) or --n");
        }
        for (uint32_t d = 2; d <= cfg.n; d++) {
            if (cfg.n % d == 0) {
                p = d;
                break;
            }
        }
        uint32_t rest = cfg.n;
        uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            e++;
        }
        if (rest != 1) {
            throw std::invalid_argument(std::to_string(cfg.n) + " is not a prime power");
        }
        if (m != 0 && m != e) {
            throw std::invalid_argument("--m disagrees with --n");
        }
        m = e;
    }
    if (m == 0) {
        m = 1;
    }
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    FieldPtr f = build_field(p, m);
    if (cfg.n != 0 && cfg.n != f->size()) {
        throw std::invalid_argument("--n " + std::to_string(cfg.n) + " disagrees with p^m = " +
                                    std::to_string(f->size()));
    }
    return f;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mutually unbiased bases over GF(p^m)"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.dense_cap = default_dense_cap();

    auto add_field_options = [&](CLI::App *sub) {
        sub->add_option("--p", cfg.p, "characteristic");
        sub->add_option("--m", cfg.m, "extension degree (default 1)");
        sub->add_option("--n", cfg.n, "dimension N = p^m");
    };
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "json, csv or pretty");
        sub->add_option("--dense-cap", cfg.dense_cap, "largest N for dense matrix checks");
        sub->add_option("--tolerance", cfg.tolerance, "float tolerance for dense checks");
    };

    CLI::App *field = app.add_subcommand("field", "field and mod-N operation tables");
    add_field_options(field);
    field->add_option("--format", cfg.format, "json, csv or pretty");

    CLI::App *mubs = app.add_subcommand("mubs", "export the N+1 bases");
    add_field_options(mubs);
    mubs->add_option("--phase-k", cfg.phase_k, "phase convention element");
    mubs->add_option("--format", cfg.format, "json");

    CLI::App *verify = app.add_subcommand("verify", "run every exact and dense check");
    add_field_options(verify);
    add_common(verify);
    verify->add_option("--phase-k", cfg.phase_k, "phase convention element");
    verify->add_flag("--corrupt-phase", cfg.corrupt_phase, "perturb one amplitude before verifying");

    CLI::App *tomo = app.add_subcommand("tomo", "tomography round trips on random states");
    add_field_options(tomo);
    add_common(tomo);
    tomo->add_option("--phase-k", cfg.phase_k, "phase convention element");
    tomo->add_option("--seed", cfg.seed, "first seed");
    tomo->add_option("--count", cfg.count, "number of random states");

    CLI::App *ring = app.add_subcommand("ring", "Weyl operators over Z_N");
    ring->add_option("--n", cfg.n, "ring size")->required();
    ring->add_option("--format", cfg.format, "json or pretty");
    ring->add_option("--dense-cap", cfg.dense_cap, "largest N for dense matrices");
    ring->add_option("--seed", cfg.seed, "seed for the eigenbasis combinations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfigError;
    }

    try {
        if (*field) {
            return cmd_field(cfg, out);
        }
        if (*mubs) {
            return cmd_mubs(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out);
        }
        if (*tomo) {
            return cmd_tomo(cfg, out);
        }
        return cmd_ring(cfg, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}

}  // namespace mubgf
