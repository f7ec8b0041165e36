#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonabcoh/error.hpp"
#include "nonabcoh/fingerprint.hpp"
#include "nonabcoh/io/json.hpp"

using namespace nonabcoh;
using numkit::GaussianRational;
using numkit::Mode;

namespace {

io::ParseOptions exact_opts() {
    io::ParseOptions o;
    o.mode = Mode::exact;
    return o;
}

io::ParseOptions float_opts() {
    io::ParseOptions o;
    o.mode = Mode::floating;
    return o;
}

} // namespace

TEST_CASE("rationalize snaps within tolerance and rejects noise") {
    CHECK(io::rationalize(0.5, 1e-9) == mpq_class(1, 2));
    CHECK(io::rationalize(1.0 / 3.0, 1e-9) == mpq_class(1, 3));
    CHECK(io::rationalize(-0.75, 1e-9) == mpq_class(-3, 4));
    CHECK(io::rationalize(2.0, 1e-9) == mpq_class(2));
}

TEST_CASE("matrix parsing in both modes") {
    std::string text = R"([[{"re":"1/2","im":"0"},{"re":"-3/4","im":"1"}],
                           [{"re":0,"im":0},{"re":"2","im":"0"}]])";
    auto exact = io::parse_matrix(text, exact_opts());
    CHECK(exact.mode() == Mode::exact);
    CHECK(exact.at(0, 0).exact_value() == GaussianRational(mpq_class(1, 2), mpq_class(0)));
    CHECK(exact.at(0, 1).exact_value() == GaussianRational(mpq_class(-3, 4), mpq_class(1)));

    auto fl = io::parse_matrix(R"([[{"re":0.25,"im":-1.5}]])", float_opts());
    CHECK(fl.mode() == Mode::floating);
    CHECK(fl.at(0, 0).float_value() == std::complex<double>(0.25, -1.5));

    CHECK_THROWS_AS(io::parse_matrix(R"([[{"re":1,"im":0},{"re":1,"im":0}],[{"re":1,"im":0}]])",
                                     float_opts()),
                    Error);
    CHECK_THROWS_AS(io::parse_matrix(R"([[{"re":1,"imaginary":0}]])", float_opts()), Error);
}

TEST_CASE("group, representation and word schemas") {
    std::string group_text = R"({"generators":2,"relators":[[[1,1],[2,1],[1,-1],[2,-1]]]})";
    auto group = io::parse_group(group_text);
    CHECK(group.generators == 2);
    REQUIRE(group.relators.size() == 1);
    CHECK(group.relators[0] == betti::Word::commutator(1, 2));

    std::string rep_text = R"({"rank":1,"images":[[[{"re":"2","im":"0"}]],[[{"re":"0","im":"3"}]]]})";
    auto rep = io::parse_representation(rep_text, group, exact_opts());
    CHECK(betti::check_relations(rep, 0.0));

    auto words = io::parse_words(R"([[[1,1]],[[1,1],[2,-1]]])");
    CHECK(words.size() == 2);

    CHECK_THROWS_AS(io::parse_group(R"({"generators":1,"relators":[[[2,1]]]})"), Error);
    CHECK_THROWS_AS(io::parse_group(R"({"generators":1,"relators":[],"extra":0})"), Error);
}

TEST_CASE("nerve, cochain and cocycle schemas") {
    std::string nerve_text = R"({"n":3,"maximalSimplices":[[0,1,2]]})";
    auto nerve = io::parse_nerve(nerve_text);
    CHECK(nerve->simplex_count(1) == 3);

    std::string cochain_text =
        R"({"degree":1,"coefficients":"Z","values":{"0,1":2,"1,2":-1}})";
    auto cochain = io::parse_cochain(cochain_text, nerve, exact_opts());
    CHECK(cochain.z_at(nerve->simplex_index(1, {0, 1})) == 2);
    CHECK(cochain.z_at(nerve->simplex_index(1, {0, 2})) == 0);

    std::string cocycle_text =
        R"({"rank":1,"transitions":{"0,1":[[{"re":"2","im":"0"}]]}})";
    auto cocycle = io::parse_cocycle(cocycle_text, nerve, exact_opts());
    CHECK(localsys::validate_cocycle(cocycle, 0.0) == false); // 2 * 1 * 1 != 1

    CHECK_THROWS_AS(io::parse_cochain(R"({"degree":1,"coefficients":"Q","values":{}})", nerve,
                                      exact_opts()),
                    Error);
    CHECK_THROWS_AS(io::parse_cochain(R"({"degree":1,"coefficients":"Z","values":{"0,3":1}})",
                                      nerve, exact_opts()),
                    Error);
}

TEST_CASE("surface, connection, path and fuchsian schemas") {
    std::string surface_text = R"({"vertices":3,"triangles":[[0,1,2]]})";
    auto surface = io::parse_surface(surface_text);
    CHECK(surface->has_boundary());

    std::string conn_text = R"({"rank":1,"transport":{"0>1":[[{"re":2,"im":0}]],
                                                      "2>1":[[{"re":4,"im":0}]]}})";
    auto conn = io::parse_connection(conn_text, surface, float_opts());
    CHECK(conn.transport(0, 1).at(0, 0).float_value() == std::complex<double>(2.0, 0.0));
    CHECK(std::abs(conn.transport(1, 2).at(0, 0).float_value() - 0.25) < 1e-15);

    auto path = io::parse_edge_path(R"({"edges":["0>1","1>2"]})");
    REQUIRE(path.size() == 2);
    CHECK(path[1][0] == 1);

    std::string sys_text = R"({"rank":1,"A0":[[{"re":0.5,"im":0}]],"A1":[[{"re":0,"im":0}]]})";
    auto sys = io::parse_fuchsian_system(sys_text, float_opts());
    CHECK(sys.a_infinity().at(0, 0).float_value() == std::complex<double>(-0.5, 0.0));
}

TEST_CASE("malformed JSON carries a position annotation") {
    try {
        io::parse_nerve("{\"n\": 3, ");
        FAIL("expected a SchemaError");
    } catch (const Error& e) {
        CHECK(e.code() == "SchemaError");
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
}

TEST_CASE("complex literals") {
    CHECK(io::parse_complex_literal("2") == std::complex<double>(2.0, 0.0));
    CHECK(io::parse_complex_literal("-0.5") == std::complex<double>(-0.5, 0.0));
    CHECK(io::parse_complex_literal("i") == std::complex<double>(0.0, 1.0));
    CHECK(io::parse_complex_literal("-i") == std::complex<double>(0.0, -1.0));
    CHECK(io::parse_complex_literal("2i") == std::complex<double>(0.0, 2.0));
    CHECK(io::parse_complex_literal("1+2i") == std::complex<double>(1.0, 2.0));
    CHECK(io::parse_complex_literal("1.5e-2-0.5i") == std::complex<double>(0.015, -0.5));
    CHECK_THROWS_AS(io::parse_complex_literal("banana"), Error);
}

TEST_CASE("report values serialize deterministically with sorted keys") {
    io::Value report = io::Value::object();
    report["beta"] = 0.1;
    report["alpha"] = io::Value::array();
    report["alpha"].push_back(io::Value(std::int64_t(3)));
    report["alpha"].push_back("x");
    report["gamma"] = true;
    std::string once = report.dump();
    std::string twice = report.dump();
    CHECK(once == twice);
    CHECK(once == "{\"alpha\":[3,\"x\"],\"beta\":0.10000000000000001,\"gamma\":true}\n");

    io::Value s = io::scalar_value(numkit::Scalar::exact(GaussianRational(mpq_class(-3, 4),
                                                                          mpq_class(0))));
    CHECK(s.dump() == "{\"im\":\"0\",\"re\":\"-3/4\"}\n");
}

TEST_CASE("fingerprints are stable") {
    CHECK(fingerprint_hex("abc") == fingerprint_hex("abc"));
    CHECK(fingerprint_hex("abc") != fingerprint_hex("abd"));
    CHECK(fingerprint_hex("").size() == 16);
}
