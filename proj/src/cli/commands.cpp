#include "commord/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commord/errors.hpp"
#include "commord/io/json_io.hpp"
#include "commord/structure/quantum_plane_demo.hpp"
#include "commord/weightset/weightset.hpp"
#include "commord/witness/commutator_witness.hpp"
#include "commord/witness/theorem32.hpp"

namespace commord::cli {

using nlohmann::json;

namespace {

CommandResult usage_error(const std::string& message) {
    return {kExitUsage, json{{"error", message}, {"ok", false}}, message};
}

CommandResult check_failure(json payload, const std::string& message) {
    payload["error"] = message;
    payload["ok"] = false;
    return {kExitCheckFailed, std::move(payload), message};
}

/// Maps the library's exception types onto the exit-code contract.
CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const HypothesisNotSatisfied& e) {
        return check_failure(json{{"hypothesis", e.hypothesis()}}, e.what());
    } catch (const NotInWeightSet& e) {
        return check_failure(json::object(), e.what());
    } catch (const NotACyclicConjugator& e) {
        return check_failure(json::object(), e.what());
    } catch (const NotAUnit& e) {
        return check_failure(json{{"ring", e.ring()}}, e.what());
    } catch (const InvariantViolation& e) {
        return check_failure(json{{"internal", true}}, e.what());
    } catch (const io::ParseError& e) {
        return usage_error(e.what());
    } catch (const json::exception& e) {
        return usage_error(std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::length_error& e) {
        return usage_error(e.what());
    }
}

template <class R>
json scalar_json(const typename R::Element& x) {
    return io::to_json(x);
}

} // namespace

CommandResult cmd_decide(std::int64_t k, std::int64_t n) {
    return guarded([&] {
        return CommandResult{kExitOk, io::certificate_to_json(weightset::decompose(k, n)), {}};
    });
}

CommandResult cmd_witness(std::int64_t k, std::int64_t n, const std::optional<std::string>& out_path) {
    return guarded([&]() -> CommandResult {
        const auto cert = weightset::decompose(k, n);
        if (!cert.nonempty()) {
            return check_failure(io::certificate_to_json(cert),
                                 "no n k-th roots of unity sum to zero: M_{k,n} is empty for k = " +
                                     std::to_string(k) + ", n = " + std::to_string(n));
        }
        const auto w = witness::build_witness(k, n);
        json doc = io::witness_to_json(w);
        const auto checks = witness::check_witness(w);
        if (!checks.all()) return check_failure(doc, "witness failed re-verification");
        if (!out_path) return {kExitOk, std::move(doc), {}};
        std::ofstream f(*out_path);
        if (!f) return usage_error("cannot open '" + *out_path + "' for writing");
        f << doc.dump(2) << '\n';
        if (!f) return usage_error("failed writing '" + *out_path + "'");
        return {kExitOk, json{{"k", k}, {"n", n}, {"out", *out_path}, {"checks", io::checks_to_json(checks)}}, {}};
    });
}

CommandResult cmd_verify_text(const std::string& text) {
    return guarded([&]() -> CommandResult {
        const auto w = io::witness_from_json(json::parse(text));
        const auto checks = witness::check_witness(w);
        json payload{{"k", w.k}, {"n", w.n}, {"checks", io::checks_to_json(checks)}, {"ok", checks.all()}};
        if (checks.all()) return {kExitOk, std::move(payload), {}};
        json failed = json::array();
        if (!checks.commutator_ok) failed.push_back("[A,B] = C");
        if (!checks.power_ok) failed.push_back("C^k = Id");
        if (!checks.trace_zero) failed.push_back("tr C = 0");
        payload["failed"] = failed;
        return {kExitCheckFailed, std::move(payload), "failed: " + failed.dump()};
    });
}

CommandResult cmd_verify(const std::string& path) {
    std::ifstream f(path);
    if (!f) return usage_error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return cmd_verify_text(buf.str());
}

CommandResult cmd_lemma_pd(std::int64_t n, const std::string& ring_spec) {
    return guarded([&]() -> CommandResult {
        if (n < 2) return usage_error("n must be >= 2");
        const auto ring = io::parse_ring_spec(ring_spec);
        return std::visit(
            [&](const auto& r) -> CommandResult {
                using R = std::decay_t<decltype(r)>;
                const auto rep = witness::lemma_pd_check(static_cast<std::size_t>(n), r);
                json payload{{"n", n},
                             {"ring", io::descriptor(r)},
                             {"(1-n)", scalar_json<R>(r.from_int(1 - n))},
                             {"power", io::matrix_to_json(rep.direct)},
                             {"commutator_is_p_delta", rep.commutator_is_p_delta},
                             {"routes_agree", rep.routes_agree},
                             {"matches_expected", rep.matches_expected},
                             {"ok", rep.ok()}};
                return {rep.ok() ? kExitOk : kExitCheckFailed, std::move(payload), {}};
            },
            ring);
    });
}

CommandResult cmd_theorem32(std::int64_t n, const std::string& ring_spec, const std::string& strategy_name,
                            const std::optional<std::string>& u) {
    return guarded([&]() -> CommandResult {
        if (n < 2) return usage_error("n must be >= 2");
        const auto strategy = witness::parse_strategy(strategy_name);
        if (!strategy) return usage_error("unknown strategy '" + strategy_name + "'");
        if (*strategy == witness::CorollaryStrategy::n3 && !u) return usage_error("strategy n3 requires --u");
        const auto ring = io::parse_ring_spec(ring_spec);
        return std::visit(
            [&](const auto& r) -> CommandResult {
                using R = std::decay_t<decltype(r)>;
                std::optional<typename R::Element> u_elem;
                if (u) {
                    const Rational q = io::parse_rational_arg(*u);
                    if constexpr (std::is_same_v<R, ZmodRing>) {
                        if (q.denominator() != 1) throw io::ParseError("--u must be an integer for Z/m");
                        if (!q.numerator().fits_slong_p()) throw io::ParseError("--u out of range");
                        u_elem = r.from_int(q.numerator().get_si());
                    } else if constexpr (std::is_same_v<R, CyclotomicField>) {
                        u_elem = r.from_rational(q);
                    } else {
                        u_elem = q;
                    }
                }
                const auto nn = static_cast<std::size_t>(n);
                const auto dec = witness::corollary_units(nn, r, *strategy, u_elem);
                const auto wit = witness::build_theorem32(nn, dec);
                json units = json::array();
                for (const auto& v : dec.units) units.push_back(scalar_json<R>(v));
                const bool is_p = wit.commutator == witness::cyclic_shift(r, nn, 1);
                const bool power_ok = mat_power(wit.commutator, n) == DenseMatrix<R>::identity(r, nn);
                json payload{{"n", n},
                             {"ring", io::descriptor(r)},
                             {"strategy", strategy_name},
                             {"units", std::move(units)},
                             {"A", io::matrix_to_json(wit.A)},
                             {"B", io::matrix_to_json(wit.B)},
                             {"commutator", io::matrix_to_json(wit.commutator)},
                             {"commutator_is_P", is_p},
                             {"power_ok", power_ok},
                             {"ok", is_p && power_ok}};
                return {is_p && power_ok ? kExitOk : kExitCheckFailed, std::move(payload), {}};
            },
            ring);
    });
}

CommandResult cmd_structure_demo(std::int64_t n, std::uint64_t seed, std::size_t samples) {
    return guarded([&]() -> CommandResult {
        const auto rep = structure::quantum_plane_demo(n, seed, samples);
        json coeffs = json::array();
        for (const auto& c : rep.e0_coeffs) coeffs.push_back(io::to_json(c));
        const auto& iso = rep.iso;
        json iso_json{{"samples", iso.samples},
                      {"seed", iso.seed},
                      {"unital", iso.unital},
                      {"additive", iso.additive},
                      {"multiplicative", iso.multiplicative},
                      {"round_trip_ring", iso.round_trip_ring},
                      {"round_trip_matrix", iso.round_trip_matrix},
                      {"image_rank", iso.image_rank ? json(*iso.image_rank) : json(nullptr)},
                      {"bijectivity", iso.bijectivity_note},
                      {"ok", iso.ok()}};
        json payload{{"n", n},
                     {"a", io::to_json(rep.a)},
                     {"b", io::to_json(rep.b)},
                     {"constraint_ok", rep.constraint_ok},
                     {"u_power_ok", rep.u_power_ok},
                     {"conjugation_ok", rep.conjugation_ok},
                     {"x_inverse_ok", rep.x_inverse_ok},
                     {"dim_algebra", rep.dim_algebra},
                     {"dim_corner", rep.dim_corner},
                     {"phi_bijective", rep.phi_bijective},
                     {"e0_coeffs", std::move(coeffs)},
                     {"e0_closed_form_ok", rep.e0_closed_form_ok},
                     {"iso", std::move(iso_json)},
                     {"ok", rep.ok()}};
        return {rep.ok() ? kExitOk : kExitCheckFailed, std::move(payload), {}};
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact witnesses for commutators of finite multiplicative order"};
    app.require_subcommand(1);

    std::int64_t k = 0, n = 0;
    std::string ring_spec = "Q", strategy, path;
    std::optional<std::string> out_path, u;
    std::uint64_t seed = 0;
    std::size_t samples = 25;

    auto* decide = app.add_subcommand("decide", "Is M_{k,n} nonempty? Prints the weight-set certificate");
    decide->add_option("--k", k, "root-of-unity order (>= 2)")->required();
    decide->add_option("--n", n, "matrix size (>= 1)")->required();

    auto* wit = app.add_subcommand("witness", "Construct (A, B) over Q(zeta_k) with [A,B]^k = Id_n");
    wit->add_option("--k", k)->required();
    wit->add_option("--n", n)->required();
    wit->add_option("--out", out_path, "write the witness JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Re-check a witness file; exit 0 iff all identities hold");
    verify->add_option("file", path)->required();

    auto* lemma = app.add_subcommand("lemma-pd", "Check [D,P]^n = (1-n) Id by two routes");
    lemma->add_option("--n", n)->required();
    lemma->add_option("--ring", ring_spec, "Q | Zmod:m | Cyclo:m");

    auto* thm = app.add_subcommand("theorem32", "Build A, B over a ring from a central unit decomposition");
    thm->add_option("--n", n)->required();
    thm->add_option("--ring", ring_spec, "Q | Zmod:m | Cyclo:m");
    thm->add_option("--strategy", strategy, "n2 | n3 | inverse_n_minus_1 | char_divides")->required();
    thm->add_option("--u", u, "the unit u for strategy n3");

    auto* demo = app.add_subcommand("structure-demo", "Quantum plane R = M_n(S) demonstration");
    demo->add_option("--n", n)->required();
    demo->add_option("--samples", samples, "randomized homomorphism samples");

    for (auto* sub : {decide, wit, verify, lemma, thm, demo}) sub->add_option("--seed", seed, "seed for sampled checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    CommandResult result;
    if (*decide)
        result = cmd_decide(k, n);
    else if (*wit)
        result = cmd_witness(k, n, out_path);
    else if (*verify)
        result = cmd_verify(path);
    else if (*lemma)
        result = cmd_lemma_pd(n, ring_spec);
    else if (*thm)
        result = cmd_theorem32(n, ring_spec, strategy, u);
    else
        result = cmd_structure_demo(n, seed, samples);

    if (!result.payload.is_null()) out << result.payload.dump(2) << '\n';
    if (!result.diagnostics.empty()) err << result.diagnostics << '\n';
    return result.exit_code;
}

} // namespace commord::cli
