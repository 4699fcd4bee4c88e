#include "grcone/errors.hpp"
#include "grcone/io.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace grcone;
using grcone::io::json;

TEST_CASE("parse_input: split documents") {
    const io::InputDocument doc =
        io::parse_input(R"({"kind":"split","characteristic":2,"exponents":[3,1,0]})");
    CHECK(doc.is_bundle());
    CHECK(doc.kind() == "split");
    const BundleDescriptor& b = doc.bundle();
    CHECK(b.is_split());
    CHECK(b.as_split().characteristic == 2);
    CHECK(b.as_split().bundle.exponents() == std::vector<Int>{3, 1, 0});
}

TEST_CASE("parse_input: char0_hn documents") {
    const io::InputDocument doc =
        io::parse_input(R"({"kind":"char0_hn","blocks":[[1,3],[1,1],[1,0]]})");
    CHECK(doc.kind() == "char0_hn");
    CHECK(doc.bundle().as_char_zero().hn ==
          HNType({HNBlock{1, 3}, HNBlock{1, 1}, HNBlock{1, 0}}));
    // The characteristic field is optional but pinned to zero.
    CHECK_NOTHROW(
        io::parse_input(R"({"kind":"char0_hn","characteristic":0,"blocks":[[2,3]]})"));
    CHECK_THROWS_AS(
        io::parse_input(R"({"kind":"char0_hn","characteristic":5,"blocks":[[2,3]]})"),
        ValidationError);
}

TEST_CASE("parse_input: strong_hn documents") {
    const io::InputDocument doc = io::parse_input(
        R"({"kind":"strong_hn","characteristic":2,"delta":1,"blocks":[[2,3]]})");
    CHECK(doc.kind() == "strong_hn");
    const StrongHNData& d = doc.bundle().as_strong().data;
    CHECK(d.characteristic() == 2);
    CHECK(d.delta() == 1);
    CHECK(d.hn() == HNType({HNBlock{2, 3}}));
}

TEST_CASE("parse_input: cover documents") {
    const io::InputDocument doc = io::parse_input(
        R"({"kind":"cover","cover_degree":2,"l_degree":1,"exponents":[3,3]})");
    CHECK(doc.is_cover());
    CHECK(doc.kind() == "cover");
    CHECK(doc.cover().cover_degree() == 2);
    CHECK(doc.cover().l_degree() == 1);
    CHECK_THROWS_AS(doc.bundle(), ValidationError); // wrong accessor
}

TEST_CASE("parse_input: malformed text is a ParseError") {
    CHECK_THROWS_AS(io::parse_input("not json"), ParseError);
    CHECK_THROWS_AS(io::parse_input(""), ParseError);
    CHECK_THROWS_AS(io::parse_input("{"), ParseError);
}

TEST_CASE("parse_input: structural problems are ValidationErrors naming the field") {
    auto message_of = [](const std::string& text) {
        try {
            io::parse_input(text);
        } catch (const ValidationError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message_of(R"([1,2,3])") == "input document must be a JSON object");
    CHECK(message_of(R"({"blocks":[[1,1]]})") == "input document is missing field \"kind\"");
    CHECK(message_of(R"({"kind":"mystery"})") ==
          "field \"kind\": unknown document kind \"mystery\"");
    CHECK(message_of(R"({"kind":"split","characteristic":2})") ==
          "split document is missing field \"exponents\"");
    CHECK(message_of(R"({"kind":"split","characteristic":2,"exponents":[1,0],"x":1})") ==
          "unknown field \"x\" in split document");
    CHECK(message_of(R"({"kind":"split","characteristic":2,"exponents":"nope"})") ==
          "field \"exponents\": expected an array of integers");
    CHECK(message_of(R"({"kind":"split","characteristic":2,"exponents":[1,0.5]})") ==
          "field \"exponents[1]\": expected an integer or decimal string");
    CHECK(message_of(R"({"kind":"char0_hn","blocks":[[1,3],[7]]})") ==
          "field \"blocks[1]\": expected a [rank, degree] pair");
    CHECK(message_of(R"({"kind":"strong_hn","characteristic":2,"blocks":[[2,3]]})") ==
          "strong_hn document is missing field \"delta\"");
}

TEST_CASE("parse_input: domain invariants still apply") {
    CHECK_THROWS_AS(
        io::parse_input(R"({"kind":"split","characteristic":4,"exponents":[1,0]})"),
        ValidationError); // composite characteristic
    CHECK_THROWS_AS(io::parse_input(R"({"kind":"split","characteristic":0,"exponents":[9]})"),
                    ValidationError); // rank 1
    CHECK_THROWS_AS(io::parse_input(R"({"kind":"char0_hn","blocks":[[1,1],[1,3]]})"),
                    ValidationError); // slopes must strictly decrease
    CHECK_THROWS_AS(
        io::parse_input(
            R"({"kind":"strong_hn","characteristic":2,"delta":-1,"blocks":[[2,3]]})"),
        ValidationError); // delta must be non-negative
    CHECK_THROWS_AS(
        io::parse_input(R"({"kind":"cover","cover_degree":0,"l_degree":1,"exponents":[1]})"),
        ValidationError);
}

TEST_CASE("bundle documents round-trip through to_json") {
    const char* samples[] = {
        R"({"kind":"split","characteristic":2,"exponents":[3,1,0]})",
        R"({"kind":"split","characteristic":0,"exponents":[-4,7]})",
        R"({"kind":"char0_hn","blocks":[[1,3],[1,1],[1,0]]})",
        R"({"kind":"strong_hn","characteristic":3,"delta":2,"blocks":[[1,9],[2,3]]})",
    };
    for (const char* text : samples) {
        CAPTURE(text);
        const io::InputDocument doc = io::parse_input(text);
        const io::InputDocument again = io::parse_input(io::to_json(doc.bundle()));
        CHECK(again.bundle() == doc.bundle());
    }
    const io::InputDocument cover = io::parse_input(
        R"({"kind":"cover","cover_degree":2,"l_degree":1,"exponents":[3,3]})");
    CHECK(io::parse_input(io::to_json(cover.cover())).cover() == cover.cover());
}

TEST_CASE("integers wider than 64 bits travel as decimal strings") {
    const std::string wide = "123456789012345678901234567890";
    const io::InputDocument doc = io::parse_input(
        R"({"kind":"split","characteristic":0,"exponents":[")" + wide + R"(",0]})");
    CHECK(doc.bundle().as_split().bundle.exponents()[0] == parse_integer(wide));

    const json out = io::to_json(doc.bundle());
    CHECK(out["exponents"][0].is_string());
    CHECK(out["exponents"][0].get<std::string>() == wide);
    CHECK(out["exponents"][1].is_number_integer());
    CHECK(io::parse_input(out).bundle() == doc.bundle());
}

TEST_CASE("int_to_json stays numeric within 64 bits") {
    CHECK(io::int_to_json(Int(42)).is_number_integer());
    CHECK(io::int_to_json(Int("9223372036854775807")).is_number_integer());
    CHECK(io::int_to_json(Int("9223372036854775808")).is_string());
    CHECK(io::int_to_json(Int("-9223372036854775808")).is_number_integer());
    CHECK(io::int_to_json(Int("-9223372036854775809")).is_string());
    CHECK(io::json_to_int(io::int_to_json(Int("-9223372036854775809")), "x") ==
          Int("-9223372036854775809"));
}

TEST_CASE("json_to_rational accepts strings and integers") {
    CHECK(io::json_to_rational(json("3/2"), "q") == make_rational(3, 2));
    CHECK(io::json_to_rational(json("-7"), "q") == Rational(-7));
    CHECK(io::json_to_rational(json(5), "q") == Rational(5));
    CHECK_THROWS_AS(io::json_to_rational(json("x/y"), "q"), ValidationError);
    CHECK_THROWS_AS(io::json_to_rational(json(1.5), "q"), ValidationError);
}

TEST_CASE("certificates round-trip field for field") {
    EffectivityCertificate cert;
    cert.r = 2;
    cert.ell = 2;
    cert.n = 1;
    cert.selected_exponents = {Int(12), Int(2)};
    cert.tilde_l_degree = 14;
    cert.total_map_degree = 2;
    cert.checks = CertificateChecks{true, true, true};

    const json doc = io::to_json(cert);
    CHECK(doc["kind"] == "certificate");
    CHECK(io::parse_certificate(doc) == cert);
    CHECK(io::parse_certificate(io::dump_document(doc)) == cert);
}

TEST_CASE("certificate parsing is strict") {
    const json good = io::to_json(EffectivityCertificate{});
    {
        json bad = good;
        bad["surprise"] = 1;
        CHECK_THROWS_AS(io::parse_certificate(bad), ValidationError);
    }
    {
        json bad = good;
        bad["kind"] = "oracle_report";
        CHECK_THROWS_AS(io::parse_certificate(bad), ValidationError);
    }
    {
        json bad = good;
        bad.erase("checks");
        CHECK_THROWS_AS(io::parse_certificate(bad), ValidationError);
    }
    {
        json bad = good;
        bad["checks"]["summand_ok"] = 1; // not a boolean
        CHECK_THROWS_AS(io::parse_certificate(bad), ValidationError);
    }
    {
        json bad = good;
        bad["checks"]["extra"] = true;
        CHECK_THROWS_AS(io::parse_certificate(bad), ValidationError);
    }
    CHECK_THROWS_AS(io::parse_certificate("{{"), ParseError);
}

TEST_CASE("result documents carry their kind and exact values") {
    OracleReport rep;
    rep.r = 2;
    rep.lambda_formula = Rational(4);
    rep.lambda_oracle = Rational(4);
    rep.h0_at_boundary = 1;
    rep.h0_beyond_boundary = 0;
    rep.verdict = true;
    const json o = io::to_json(rep);
    CHECK(o["kind"] == "oracle_report");
    CHECK(o["lambda_formula"] == "4");
    CHECK(o["verdict"] == true);

    const json l = io::lambda_document(1, make_rational(3, 2));
    CHECK(l["kind"] == "lambda");
    CHECK(l["lambda"] == "3/2");
    CHECK(l["r"] == 1);

    const json c = io::cone_document(Cone2D(Ray(0, 1), Ray(1, -4)), 2);
    CHECK(c["kind"] == "cone");
    CHECK(c["rays"][0][0] == 0);
    CHECK(c["rays"][1][1] == -4);

    CHECK(io::verification_document(true)["valid"] == true);
    CHECK(io::verification_document(false)["kind"] == "verification");
}

TEST_CASE("dump_document is byte-deterministic regardless of insertion order") {
    json a;
    a["kind"] = "lambda";
    a["r"] = 2;
    a["lambda"] = "4";
    json b;
    b["lambda"] = "4";
    b["r"] = 2;
    b["kind"] = "lambda";
    CHECK(io::dump_document(a) == io::dump_document(b));
    CHECK(io::dump_document(a).back() == '\n');
}
