#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/dense_matrix.hpp"
#include "commord/rings/finite_algebra.hpp"
#include "commord/rings/matrix_ring.hpp"
#include "commord/weightset/weightset.hpp"
#include "commord/witness/commutator_witness.hpp"

namespace commord::io {

using nlohmann::json;

/// Malformed or schema-violating JSON / ring specs.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalars: Rational as "p/q"; Z/m as {"mod": m, "val": r};
// Q(zeta_m) as {"order": m, "coeffs": ["p/q", ...]}.
json to_json(const Rational& q);
json to_json(const ZmodScalar& z);
json to_json(const CycloScalar& c);

// Ring descriptors: {"kind": "rational"}, {"kind": "zmod", "modulus": m},
// {"kind": "cyclotomic", "order": m}, {"kind": "matrix", "n": n, "inner": ...}.
json descriptor(const RationalField&);
json descriptor(const ZmodRing& r);
json descriptor(const CyclotomicField& r);

template <class R>
json descriptor(const MatrixRing<R>& r) {
    return json{{"kind", "matrix"}, {"n", r.size()}, {"inner", descriptor(r.inner())}};
}

Rational rational_from_json(const json& j);
ZmodScalar zmod_from_json(const json& j, const ZmodRing& ring);
CycloScalar cyclo_from_json(const json& j, const CyclotomicField& field);

inline Rational scalar_from_json(const json& j, const RationalField&) { return rational_from_json(j); }
inline ZmodScalar scalar_from_json(const json& j, const ZmodRing& r) { return zmod_from_json(j, r); }
inline CycloScalar scalar_from_json(const json& j, const CyclotomicField& f) { return cyclo_from_json(j, f); }

/// The scalar rings reachable from the CLI.
using ScalarRing = std::variant<RationalField, ZmodRing, CyclotomicField>;

/// "Q", "Zmod:m" or "Cyclo:m".
ScalarRing parse_ring_spec(const std::string& spec);
ScalarRing ring_from_descriptor(const json& j);

/// A scalar given on the command line: "p/q" for Q and Q(zeta_m) (as a
/// rational constant), an integer for Z/m.
Rational parse_rational_arg(const std::string& text);

/// {"ring": <descriptor>, "rows": r, "cols": c, "entries": [[...], ...]}.
template <class R>
json matrix_to_json(const DenseMatrix<R>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", descriptor(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Reads a matrix whose descriptor must match `ring`.
template <class R>
DenseMatrix<R> matrix_from_json(const json& j, const R& ring) {
    if (!j.is_object()) throw ParseError("matrix must be an object");
    for (const char* key : {"ring", "rows", "cols", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("matrix is missing '") + key + "'");
    if (j.at("ring") != descriptor(ring)) throw ParseError("matrix ring does not match " + ring.name());
    if (!j.at("rows").is_number_unsigned() || !j.at("cols").is_number_unsigned())
        throw ParseError("rows/cols must be positive integers");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& e = j.at("entries");
    if (rows == 0 || cols == 0 || !e.is_array() || e.size() != rows) throw ParseError("entries do not match rows");
    std::vector<typename R::Element> entries;
    for (const auto& row : e) {
        if (!row.is_array() || row.size() != cols) throw ParseError("entry row does not match cols");
        for (const auto& x : row) entries.push_back(scalar_from_json(x, ring));
    }
    return DenseMatrix<R>(ring, rows, cols, std::move(entries));
}

/// {"dim": d, "field": <descriptor>, "labels": [...], "table": [d*d coordinate
/// vectors, row-major in (i, j)], "one": [...]}.
template <ExactField F>
json algebra_to_json(const FiniteAlgebra<F>& alg) {
    auto coords = [](const std::vector<typename F::Element>& v) {
        json out = json::array();
        for (const auto& c : v) out.push_back(to_json(c));
        return out;
    };
    json table = json::array();
    for (std::size_t i = 0; i < alg.dimension(); ++i)
        for (std::size_t j = 0; j < alg.dimension(); ++j) table.push_back(coords((alg.basis(i) * alg.basis(j)).coords()));
    return json{{"dim", alg.dimension()},
                {"field", descriptor(alg.base_field())},
                {"labels", alg.basis_labels()},
                {"table", std::move(table)},
                {"one", coords(alg.one().coords())}};
}

/// Rebuilds the algebra (re-running its associativity and identity checks).
template <ExactField F>
FiniteAlgebra<F> algebra_from_json(const json& j, const F& field) {
    if (!j.is_object()) throw ParseError("algebra must be an object");
    for (const char* key : {"dim", "field", "table", "one"})
        if (!j.contains(key)) throw ParseError(std::string("algebra is missing '") + key + "'");
    if (j.at("field") != descriptor(field)) throw ParseError("algebra field does not match " + field.name());
    if (!j.at("dim").is_number_unsigned()) throw ParseError("dim must be a nonnegative integer");
    const auto d = j.at("dim").get<std::size_t>();
    auto coords = [&](const json& v) {
        if (!v.is_array() || v.size() != d) throw ParseError("coordinate vector must have length dim");
        std::vector<typename F::Element> out;
        for (const auto& c : v) out.push_back(scalar_from_json(c, field));
        return out;
    };
    const json& t = j.at("table");
    if (!t.is_array() || t.size() != d * d) throw ParseError("table must have dim^2 entries");
    std::vector<std::vector<typename F::Element>> table;
    for (const auto& v : t) table.push_back(coords(v));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != d) throw ParseError("labels must have length dim");
    } else {
        for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
    }
    return FiniteAlgebra<F>(field, std::move(labels), table, coords(j.at("one")));
}

json certificate_to_json(const weightset::WeightCertificate& cert);

json checks_to_json(const witness::WitnessChecks& c);

/// {"k", "n", "A", "B", "C", "checks"}.
json witness_to_json(const witness::CycloWitness& w);

/// Parses the matrices and k; does not check any identity.
witness::CycloWitness witness_from_json(const json& j);

} // namespace commord::io
