#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commord/cli/commands.hpp"
#include "commord/errors.hpp"
#include "commord/io/json_io.hpp"
#include "commord/rings/quantum_plane.hpp"
#include "commord/structure/quantum_plane_demo.hpp"

using namespace commord;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json payload() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("commord_test_" + name + ".json");
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

// Adds 1 to the constant coefficient of entry (i, j) of matrix `key`.
json perturbed(json doc, const std::string& key, std::size_t i, std::size_t j) {
    auto& c = doc[key]["entries"][i][j]["coeffs"][0];
    c = (Rational::parse(c.get<std::string>()) + Rational(1)).str();
    return doc;
}

} // namespace

TEST_CASE("decide") {
    const auto r = run({"decide", "--k", "6", "--n", "5"});
    CHECK(r.code == 0);
    const auto p = r.payload();
    CHECK(p["nonempty"] == true);
    CHECK(p["coefficients"] == json::array({1, 1}));
    CHECK(p["primes"] == json::array({2, 3}));
    CHECK(p["k"] == 6);
    CHECK(p["n"] == 5);

    const auto r43 = run({"decide", "--k", "4", "--n", "3"});
    CHECK(r43.code == 0);
    CHECK(r43.payload()["nonempty"] == false);
    CHECK(r43.payload()["coefficients"].is_null());

    CHECK(run({"decide", "--k", "1", "--n", "3"}).code == 2);
    CHECK(run({"decide", "--k", "6", "--n", "0"}).code == 2);
    CHECK(run({"decide", "--k", "six", "--n", "5"}).code == 2);
    CHECK(run({"decide", "--k", "6"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("decide") != std::string::npos);
    CHECK(run({"witness", "--k", "2", "--n", "2", "--bogus"}).code == 2);
}

TEST_CASE("witness to stdout") {
    const auto r = run({"witness", "--k", "2", "--n", "2"});
    REQUIRE(r.code == 0);
    const auto p = r.payload();
    CHECK(p["checks"] == json{{"commutator_ok", true}, {"power_ok", true}, {"trace_zero", true}});
    const auto w = io::witness_from_json(p);
    const CyclotomicField k2(2);
    CHECK(w.C == DenseMatrix<CyclotomicField>::diagonal(k2, {k2.one(), k2.from_int(-1)}));
    CHECK(p["C"]["entries"][1][1] == json{{"order", 2}, {"coeffs", {"-1/1"}}});

    const auto r95 = run({"witness", "--k", "9", "--n", "5"});
    CHECK(r95.code == 1);
    CHECK(r95.payload()["nonempty"] == false);
    CHECK(r95.payload()["ok"] == false);
    CHECK(r95.err.find("empty") != std::string::npos);
}

TEST_CASE("witness file round trip through verify") {
    const auto path = temp_file("w65");
    const auto r = run({"witness", "--k", "6", "--n", "5", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload()["out"] == path.string());
    const auto doc = json::parse(read_text(path));
    CHECK(doc["A"]["rows"] == 5);
    const auto v = run({"verify", path.string()});
    CHECK(v.code == 0);
    CHECK(v.payload()["ok"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("verify exit codes") {
    const auto doc = run({"witness", "--k", "3", "--n", "3"}).payload();
    CHECK(cli::cmd_verify_text(doc.dump()).exit_code == 0);

    const auto bad = cli::cmd_verify_text(perturbed(doc, "C", 0, 0).dump());
    CHECK(bad.exit_code == 1);
    CHECK(bad.payload["failed"] == json::array({"[A,B] = C", "C^k = Id", "tr C = 0"}));

    const std::string text = doc.dump();
    CHECK(cli::cmd_verify_text(text.substr(0, text.size() / 2)).exit_code == 2);
    CHECK(cli::cmd_verify_text("[]").exit_code == 2);
    CHECK(cli::cmd_verify_text("{}").exit_code == 2);
    auto wrong_ring = doc;
    wrong_ring["A"]["ring"]["order"] = 4;
    CHECK(cli::cmd_verify_text(wrong_ring.dump()).exit_code == 2);
    auto wrong_shape = doc;
    wrong_shape["A"]["entries"].erase(0);
    CHECK(cli::cmd_verify_text(wrong_shape.dump()).exit_code == 2);
    auto bad_rational = doc;
    bad_rational["B"]["entries"][0][0]["coeffs"][0] = "1/0";
    CHECK(cli::cmd_verify_text(bad_rational.dump()).exit_code == 2);

    const auto path = temp_file("truncated");
    write_text(path, text.substr(0, text.size() - 10));
    CHECK(run({"verify", path.string()}).code == 2);
    std::filesystem::remove(path);
    CHECK(run({"verify", "/nonexistent/commord/witness.json"}).code == 2);
}

TEST_CASE("every single-entry perturbation flips verify to exit 1") {
    for (auto [k, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{6, 5}}) {
        const auto doc = run({"witness", "--k", std::to_string(k), "--n", std::to_string(n)}).payload();
        for (const char* key : {"A", "B", "C"})
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                    INFO("k = " << k << ", n = " << n << ", " << key << "(" << i << "," << j << ")");
                    CHECK(cli::cmd_verify_text(perturbed(doc, key, i, j).dump()).exit_code == 1);
                }
    }
}

TEST_CASE("lemma-pd") {
    const auto r = run({"lemma-pd", "--n", "4", "--ring", "Q"});
    REQUIRE(r.code == 0);
    const auto p = r.payload();
    CHECK(p["(1-n)"] == "-3/1");
    CHECK(p["ok"] == true);
    CHECK(p["ring"] == json{{"kind", "rational"}});
    CHECK(p["power"]["entries"][0][0] == "-3/1");

    const auto z = run({"lemma-pd", "--n", "3", "--ring", "Zmod:2"}).payload();
    CHECK(z["(1-n)"] == json{{"mod", 2}, {"val", 0}});
    CHECK(run({"lemma-pd", "--n", "5", "--ring", "Cyclo:5"}).code == 0);
    CHECK(run({"lemma-pd", "--n", "4", "--ring", "R"}).code == 2);
    CHECK(run({"lemma-pd", "--n", "4", "--ring", "Zmod:1"}).code == 2);
    CHECK(run({"lemma-pd", "--n", "4", "--ring", "Zmod:x"}).code == 2);
    CHECK(run({"lemma-pd", "--n", "1"}).code == 2);
}

TEST_CASE("theorem32") {
    const auto r = run({"theorem32", "--n", "5", "--ring", "Zmod:3", "--strategy", "char_divides"});
    REQUIRE(r.code == 0);
    CHECK(r.payload()["ok"] == true);
    CHECK(r.payload()["commutator_is_P"] == true);

    const auto r4 = run({"theorem32", "--n", "4", "--ring", "Q", "--strategy", "inverse_n_minus_1"}).payload();
    CHECK(r4["units"] == json::array({"1/3", "1/3", "1/3"}));
    const auto r3 = run({"theorem32", "--n", "3", "--ring", "Zmod:5", "--strategy", "n3", "--u", "2"}).payload();
    CHECK(r3["units"] == json::array({json{{"mod", 5}, {"val", 2}}, json{{"mod", 5}, {"val", 4}}}));
    CHECK(run({"theorem32", "--n", "3", "--ring", "Q", "--strategy", "n3", "--u", "1/2"}).code == 0);
    CHECK(run({"theorem32", "--n", "3", "--ring", "Cyclo:3", "--strategy", "n3", "--u", "1/2"}).code == 0);
    CHECK(run({"theorem32", "--n", "2", "--ring", "Cyclo:4", "--strategy", "n2"}).code == 0);

    const auto fail = run({"theorem32", "--n", "4", "--ring", "Zmod:3", "--strategy", "inverse_n_minus_1"});
    CHECK(fail.code == 1);
    CHECK(fail.payload()["hypothesis"] == "n-1 unit");
    CHECK(run({"theorem32", "--n", "5", "--ring", "Zmod:2", "--strategy", "char_divides"}).code == 1);
    CHECK(run({"theorem32", "--n", "3", "--ring", "Q", "--strategy", "n3"}).code == 2);
    CHECK(run({"theorem32", "--n", "3", "--ring", "Zmod:5", "--strategy", "n3", "--u", "1/2"}).code == 2);
    CHECK(run({"theorem32", "--n", "3", "--ring", "Q", "--strategy", "nope"}).code == 2);
}

TEST_CASE("structure-demo") {
    const auto r = run({"structure-demo", "--n", "3"});
    REQUIRE(r.code == 0);
    const auto p = r.payload();
    CHECK(p["dim_corner"] == 1);
    CHECK(p["phi_bijective"] == true);
    CHECK(p["u_power_ok"] == true);
    CHECK(p["conjugation_ok"] == true);
    CHECK(p["ok"] == true);
    CHECK(p["e0_coeffs"].size() == 9);
    CHECK(p["iso"]["seed"] == 0);
    CHECK(run({"structure-demo", "--n", "2", "--seed", "5", "--samples", "3"}).payload()["iso"]["seed"] == 5);
    CHECK(run({"structure-demo", "--n", "9"}).code == 2);
}

TEST_CASE("output is deterministic with sorted keys") {
    const auto a = run({"structure-demo", "--n", "2"});
    const auto b = run({"structure-demo", "--n", "2"});
    CHECK(a.out == b.out);
    const auto p = a.payload();
    std::vector<std::string> keys;
    for (const auto& [key, value] : p.items()) keys.push_back(key);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(a.out.find("\"a\"") < a.out.find("\"b\""));
}

TEST_CASE("exit 0 implies every ok flag is true") {
    const std::vector<std::vector<std::string>> commands = {
        {"decide", "--k", "6", "--n", "5"},
        {"witness", "--k", "6", "--n", "5"},
        {"lemma-pd", "--n", "6", "--ring", "Cyclo:6"},
        {"theorem32", "--n", "5", "--ring", "Zmod:3", "--strategy", "char_divides"},
        {"structure-demo", "--n", "2"}};
    for (const auto& c : commands) {
        const auto r = run(c);
        REQUIRE(r.code == 0);
        std::vector<json> stack{r.payload()};
        while (!stack.empty()) {
            const json j = stack.back();
            stack.pop_back();
            if (!j.is_object()) continue;
            for (const auto& [key, value] : j.items()) {
                if (key == "ok" || key.ends_with("_ok")) CHECK(value == true);
                stack.push_back(value);
            }
        }
    }
}

TEST_CASE("JSON round trips") {
    std::mt19937_64 rng(12);
    const CyclotomicField k(12);
    const MatrixRing<CyclotomicField> m3(k, 3);
    for (int t = 0; t < 10; ++t) {
        const auto m = m3.random(rng);
        const json j = io::matrix_to_json(m);
        CHECK(io::matrix_from_json(json::parse(j.dump()), k) == m);
        CHECK(io::matrix_to_json(io::matrix_from_json(j, k)).dump() == j.dump());
    }
    const ZmodRing z7(7);
    const MatrixRing<ZmodRing> mz(z7, 2);
    const auto mzv = mz.random(rng);
    CHECK(io::matrix_from_json(io::matrix_to_json(mzv), z7) == mzv);
    CHECK_THROWS_AS(io::matrix_from_json(io::matrix_to_json(mzv), ZmodRing(5)), io::ParseError);

    const RationalField q;
    const auto mq = DenseMatrix<RationalField>(q, 1, 2, {Rational(3), Rational(-1, 2)});
    CHECK(io::matrix_to_json(mq)["entries"] == json::array({json::array({"3/1", "-1/2"})}));
    CHECK(io::matrix_from_json(io::matrix_to_json(mq), q) == mq);
    CHECK(io::descriptor(m3) == json{{"inner", {{"kind", "cyclotomic"}, {"order", 12}}}, {"kind", "matrix"}, {"n", 3}});

    const auto w = io::witness_from_json(run({"witness", "--k", "6", "--n", "5"}).payload());
    const json wj = io::witness_to_json(w);
    CHECK(io::witness_to_json(io::witness_from_json(json::parse(wj.dump()))) == wj);

    for (std::int64_t kk = 2; kk <= 10; ++kk)
        for (std::int64_t n = 1; n <= 10; ++n) {
            const json c = io::certificate_to_json(weightset::decompose(kk, n));
            CHECK(json::parse(c.dump()) == c);
        }
}

TEST_CASE("finite algebra JSON") {
    const CyclotomicField k(3);
    const auto alg = quantum_plane(3, structure::quantum_plane_demo_a(3), k.one());
    const json j = io::algebra_to_json(alg);
    CHECK(j["dim"] == 9);
    CHECK(j["table"].size() == 81);
    const auto back = io::algebra_from_json(json::parse(j.dump()), k);
    CHECK(back.dimension() == 9);
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b)
            CHECK((back.basis(a) * back.basis(b)).coords() == (alg.basis(a) * alg.basis(b)).coords());
    CHECK(io::algebra_to_json(back) == j);
    auto broken = j;
    broken["one"][0] = json{{"order", 3}, {"coeffs", {"2/1", "0/1"}}};
    CHECK_THROWS_AS(io::algebra_from_json(broken, k), DomainError);
    CHECK_THROWS_AS(io::algebra_from_json(j, CyclotomicField(4)), io::ParseError);
}

TEST_CASE("ring specs") {
    CHECK(std::holds_alternative<RationalField>(io::parse_ring_spec("Q")));
    CHECK(std::get<ZmodRing>(io::parse_ring_spec("Zmod:12")).modulus() == 12);
    CHECK(std::get<CyclotomicField>(io::parse_ring_spec("Cyclo:7")).order() == 7);
    CHECK_THROWS_AS(io::parse_ring_spec("Cyclo:0"), io::ParseError);
    CHECK_THROWS_AS(io::parse_ring_spec("Zmod:"), io::ParseError);
    CHECK_THROWS_AS(io::parse_ring_spec("Z"), io::ParseError);
    CHECK(std::get<ZmodRing>(io::ring_from_descriptor(io::descriptor(ZmodRing(9)))).modulus() == 9);
    CHECK_THROWS_AS(io::ring_from_descriptor(json{{"kind", "matrix"}}), io::ParseError);
}
