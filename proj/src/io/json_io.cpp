#include "commord/io/json_io.hpp"

#include <cctype>

#include "commord/errors.hpp"

namespace commord::io {

namespace {

std::int64_t get_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string("expected integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed " + what + ": '" + text + "'");
    }
    if (pos != text.size()) throw ParseError("malformed " + what + ": '" + text + "'");
    return v;
}

} // namespace

json to_json(const Rational& q) { return q.str(); }

json to_json(const ZmodScalar& z) { return json{{"mod", z.modulus()}, {"val", z.residue()}}; }

json to_json(const CycloScalar& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(q.str());
    return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

json descriptor(const RationalField&) { return json{{"kind", "rational"}}; }
json descriptor(const ZmodRing& r) { return json{{"kind", "zmod"}, {"modulus", r.modulus()}}; }
json descriptor(const CyclotomicField& r) { return json{{"kind", "cyclotomic"}, {"order", r.order()}}; }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

ZmodScalar zmod_from_json(const json& j, const ZmodRing& ring) {
    const auto m = get_int(j, "mod");
    const auto v = get_int(j, "val");
    if (m != ring.modulus()) throw ParseError("residue modulus does not match " + ring.name());
    if (v < 0 || v >= m) throw ParseError("residue is not canonical");
    return ZmodScalar(m, v);
}

CycloScalar cyclo_from_json(const json& j, const CyclotomicField& field) {
    if (get_int(j, "order") != field.order()) throw ParseError("cyclotomic order does not match " + field.name());
    const json& c = j.at("coeffs");
    if (!c.is_array() || static_cast<std::int64_t>(c.size()) != field.degree())
        throw ParseError("cyclotomic element needs phi(m) coefficients");
    std::vector<Rational> coeffs;
    for (const auto& q : c) coeffs.push_back(rational_from_json(q));
    return CycloScalar(field.order(), std::move(coeffs));
}

ScalarRing parse_ring_spec(const std::string& spec) {
    if (spec == "Q") return RationalField{};
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("unknown ring '" + spec + "' (use Q, Zmod:m or Cyclo:m)");
    const std::string kind = spec.substr(0, colon);
    const std::int64_t m = parse_int(spec.substr(colon + 1), "ring parameter");
    try {
        if (kind == "Zmod") return ZmodRing(m);
        if (kind == "Cyclo") return CyclotomicField(m);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown ring '" + spec + "' (use Q, Zmod:m or Cyclo:m)");
}

ScalarRing ring_from_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw ParseError("ring descriptor needs 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    try {
        if (kind == "rational") return RationalField{};
        if (kind == "zmod") return ZmodRing(get_int(j, "modulus"));
        if (kind == "cyclotomic") return CyclotomicField(get_int(j, "order"));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unsupported ring kind '" + kind + "'");
}

Rational parse_rational_arg(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json certificate_to_json(const weightset::WeightCertificate& cert) {
    return json{{"k", cert.k},
                {"n", cert.n},
                {"nonempty", cert.nonempty()},
                {"primes", cert.primes},
                {"coefficients", cert.coefficients ? json(*cert.coefficients) : json(nullptr)}};
}

json checks_to_json(const witness::WitnessChecks& c) {
    return json{{"commutator_ok", c.commutator_ok}, {"power_ok", c.power_ok}, {"trace_zero", c.trace_zero}};
}

json witness_to_json(const witness::CycloWitness& w) {
    return json{{"k", w.k},
                {"n", w.n},
                {"A", matrix_to_json(w.A)},
                {"B", matrix_to_json(w.B)},
                {"C", matrix_to_json(w.C)},
                {"checks", checks_to_json(witness::check_witness(w))}};
}

witness::CycloWitness witness_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("witness must be a JSON object");
    const auto k = get_int(j, "k");
    const auto n = get_int(j, "n");
    if (k < 1 || n < 1) throw ParseError("k and n must be positive");
    for (const char* key : {"A", "B", "C"})
        if (!j.contains(key)) throw ParseError(std::string("witness is missing '") + key + "'");
    const CyclotomicField field = [&] {
        try {
            return CyclotomicField(k);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }();
    auto A = matrix_from_json(j.at("A"), field);
    auto B = matrix_from_json(j.at("B"), field);
    auto C = matrix_from_json(j.at("C"), field);
    const auto nn = static_cast<std::size_t>(n);
    for (const auto* m : {&A, &B, &C})
        if (m->rows() != nn || m->cols() != nn) throw ParseError("witness matrices must be n x n");
    return witness::CycloWitness{k, nn, std::move(A), std::move(B), std::move(C)};
}

} // namespace commord::io
