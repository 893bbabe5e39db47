#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chow/invariants.hpp"
#include "chow/jobspec.hpp"

namespace chow {

enum class OutputFormat { json, text };

struct RunResult {
    std::string output;
    int exit_code = 0;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json affine_to_json(const AffineForm& f, const ParameterList& params) {
    Json j;
    j["const"] = f.constant().str();
    Json coeffs = Json::object();
    for (const auto& name : params.names) {
        const Rational c = f.coefficient(name);
        if (!c.is_zero()) coeffs[name] = c.str();
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json cone_to_json(const MaximalCone& cone) {
    Json j;
    Json idx = Json::array();
    for (const auto i : cone.vertex_indices) idx.push_back(i + 1);
    j["vertices"] = std::move(idx);
    j["det"] = cone.generator_det.str();
    return j;
}

inline Json record_to_json(const VerificationRecord& rec) {
    Json j;
    j["pass"] = rec.pass;
    j["details"] = rec.details;
    return j;
}

/// Deterministic lift-shift constants for the verify command.
inline std::vector<Rational> lift_shift_constants(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
    std::vector<Rational> cs;
    while (static_cast<int>(cs.size()) < count) {
        const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
        const auto den = static_cast<std::int64_t>(rng() % 7) + 1;
        if (num == 0) continue;
        cs.emplace_back(num, den);
    }
    return cs;
}

}  // namespace detail

/// Executes one CLI command against a parsed job. Commands:
///   fan        -- maximal cones and the smoothness report
///   weights    -- per-fixed-point tangent and line weights
///   invariants -- expansion coefficients a, b and Futaki invariants F
///   verify     -- exact verification records (compactification identity,
///                 intersection formula, lift-shift invariance, Ehrhart count)
///   all        -- everything above
/// Exit code 0 on success, 1 if a requested verification fails.
inline RunResult run(const JobSpec& job, const std::string& command, OutputFormat format) {
    const bool want_fan = command == "fan" || command == "all";
    const bool want_weights = command == "weights" || command == "all";
    const bool want_invariants =
        command == "invariants" || command == "verify" || command == "all";
    const bool want_verify = command == "verify" || command == "all";
    if (!want_fan && !want_weights && !want_invariants)
        throw InputError("unknown command '" + command +
                         "' (expected fan, weights, invariants, verify, or all)");

    const Fan fan = face_fan(job.polytope);
    const SmoothnessReport smooth = check_smooth(fan);

    detail::Json out;
    out["schema"] = 1;
    out["command"] = command;
    {
        detail::Json input;
        input["dim"] = job.polytope.dim;
        input["vertex_count"] = job.polytope.vertices.size();
        input["parameters"] = job.params.names;
        input["seed"] = job.options.seed;
        input["samples"] = job.options.samples.value_or(job.params.size() + 4);
        input["flip_sign"] = job.options.flip_sign;
        out["input"] = std::move(input);
    }

    std::ostringstream text;
    if (want_fan) {
        detail::Json fan_json;
        fan_json["cone_count"] = fan.cones.size();
        fan_json["smooth"] = smooth.smooth;
        detail::Json cones = detail::Json::array();
        for (const auto& c : fan.cones) cones.push_back(detail::cone_to_json(c));
        fan_json["cones"] = std::move(cones);
        out["fan"] = std::move(fan_json);

        text << "fan: " << fan.cones.size() << " maximal cones, "
             << (smooth.smooth ? "smooth" : "NOT smooth") << "\n";
        for (const auto& c : fan.cones) {
            text << "  cone {";
            for (std::size_t i = 0; i < c.vertex_indices.size(); ++i)
                text << (i ? " " : "") << "v" << c.vertex_indices[i] + 1;
            text << "}  det " << c.generator_det.str() << "\n";
        }
    }

    bool verifications_pass = true;
    if (want_weights || want_invariants) {
        if (!smooth.smooth)
            throw InputError(
                "the fan is not smooth; weights and invariants are only defined "
                "for smooth toric Fano manifolds");

        std::vector<AffineForm> lambda = resolve_lambda(job.ops, fan);
        if (job.options.flip_sign) lambda = scale_lambda(std::move(lambda), Rational(-1));
        const std::size_t count = job.options.samples.value_or(job.params.size() + 4);
        const LocalizationContext ctx =
            make_context(fan, lambda, job.params, count, job.options.seed);

        if (want_weights) {
            detail::Json weights = detail::Json::array();
            text << "weights:\n";
            for (const auto& fp : ctx.fixed_points()) {
                const auto& cone = fan.cones[fp.cone_index];
                detail::Json w;
                w["cone"] = detail::cone_to_json(cone)["vertices"];
                detail::Json tangent = detail::Json::array();
                for (const auto& form : fp.weights)
                    tangent.push_back(detail::affine_to_json(form, job.params));
                w["tangent_weights"] = std::move(tangent);
                w["line_weight"] = detail::affine_to_json(fp.line_weight, job.params);
                weights.push_back(std::move(w));

                text << "  cone {";
                for (std::size_t i = 0; i < cone.vertex_indices.size(); ++i)
                    text << (i ? " " : "") << "v" << cone.vertex_indices[i] + 1;
                text << "}:";
                for (const auto& form : fp.weights)
                    text << "  " << format_affine(form, job.params);
                text << "  | line: " << format_affine(fp.line_weight, job.params) << "\n";
            }
            out["weights"] = std::move(weights);
        }

        if (want_invariants) {
            InvariantReport report = obstruction_report(ctx);
            detail::Json inv;
            inv["n"] = report.n;
            detail::Json a = detail::Json::array();
            for (const auto& v : report.a) a.push_back(v.str());
            inv["a"] = std::move(a);
            detail::Json b = detail::Json::array();
            for (const auto& f : report.b)
                b.push_back(detail::affine_to_json(f, job.params));
            inv["b"] = std::move(b);
            detail::Json futaki_json = detail::Json::array();
            for (const auto& f : report.F)
                futaki_json.push_back(detail::affine_to_json(f, job.params));
            inv["F"] = std::move(futaki_json);
            inv["obstructed"] = report.obstructed;
            out["invariants"] = std::move(inv);

            text << "invariants (n = " << report.n << "):\n";
            for (std::size_t ell = 0; ell < report.a.size(); ++ell)
                text << "  a_" << ell << " = " << report.a[ell].str() << "\n";
            for (std::size_t ell = 0; ell < report.b.size(); ++ell)
                text << "  b_" << ell << " = " << format_affine(report.b[ell], job.params)
                     << "\n";
            for (std::size_t ell = 0; ell < report.F.size(); ++ell)
                text << "  F_" << ell + 1 << " = "
                     << format_affine(report.F[ell], job.params) << "\n";
            text << "  obstructed: " << (report.obstructed ? "true" : "false") << "\n";

            if (want_verify) {
                report.verifications.emplace("compactification_identity",
                                             verify_bl1(ctx, report.b));
                report.verifications.emplace(
                    "intersection_formula",
                    verify_theorem_main(ctx, report.a, report.b, report.F));

                VerificationRecord lift{"lift_shift_invariance", true, {}};
                for (const auto& c : detail::lift_shift_constants(job.options.seed, 5))
                    lift.record(lift_shift_check(report.a, report.b, c), "c=" + c.str());
                report.verifications.emplace("lift_shift_invariance", std::move(lift));

                if (job.options.ehrhart_kmax >= 1)
                    report.verifications.emplace(
                        "ehrhart_consistency",
                        verify_ehrhart(report.a, dual_polytope(job.polytope),
                                       job.options.ehrhart_kmax));

                detail::Json checks;
                text << "verifications:\n";
                for (const auto& [name, rec] : report.verifications) {
                    verifications_pass = verifications_pass && rec.pass;
                    checks[name] = detail::record_to_json(rec);
                    text << "  " << (rec.pass ? "[PASS] " : "[FAIL] ") << name << "\n";
                    for (const auto& d : rec.details) text << "      " << d << "\n";
                }
                out["verifications"] = std::move(checks);
                out["all_verifications_pass"] = verifications_pass;
            }
        }
    }

    RunResult result;
    result.exit_code = verifications_pass ? 0 : 1;
    if (format == OutputFormat::json) {
        result.output = out.dump(2);
        result.output += "\n";
    } else {
        result.output = text.str();
    }
    return result;
}

/// Machine-readable error object matching the report schema.
inline std::string error_document(const std::string& kind, const std::string& message,
                                  OutputFormat format) {
    if (format == OutputFormat::json) {
        detail::Json j;
        j["schema"] = 1;
        detail::Json e;
        e["kind"] = kind;
        e["message"] = message;
        j["error"] = std::move(e);
        return j.dump(2) + "\n";
    }
    return "error (" + kind + "): " + message + "\n";
}

}  // namespace chow
