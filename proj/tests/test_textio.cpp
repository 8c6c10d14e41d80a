#include <doctest.h>

#include "bottchern/textio.hpp"
#include "test_helpers.hpp"

using namespace bctest;

TEST_CASE("gaussian coefficient grammar") {
    CHECK(parse_gaussian("3") == GaussQ(3));
    CHECK(parse_gaussian("-1/2") == GaussQ::of(-1, 2));
    CHECK(parse_gaussian("2i") == GaussQ(2) * I);
    CHECK(parse_gaussian("1i") == I);
    CHECK(parse_gaussian("i") == I);
    CHECK(parse_gaussian("-i") == -I);
    CHECK(parse_gaussian("1/2+1/3i") == GaussQ(Rat(Int(1), Int(2)), Rat(Int(1), Int(3))));
    CHECK(parse_gaussian("2-3i") == GaussQ(Rat(Int(2)), Rat(Int(-3))));
    CHECK_THROWS_AS((void)parse_gaussian("1/0"), ParseError);
    CHECK_THROWS_AS((void)parse_gaussian("1+"), ParseError);
    CHECK_THROWS_AS((void)parse_gaussian("1ي"), ParseError);

    // Canonical rendering stays inside the grammar.
    for (const char* s : {"3", "-1/2", "2i", "1/2+1/3i", "2-3i", "0"})
        CHECK(to_string(parse_gaussian(s)) == s);
}

TEST_CASE("form grammar round-trips") {
    auto names = default_generator_names(3);
    Form f = parse_form("phi1^phi2", names);
    CHECK(f == mono({1, 2}, {}));
    CHECK(parse_form("phi1~^phi2~", names) == mono({}, {1, 2}));
    CHECK(parse_form("phi1~", names) == mono({}, {1}));
    CHECK(parse_form("- phi3^phi1~^phi3~", names) == -mono({3}, {1, 3}));
    CHECK(parse_form("0", names).is_zero());
    CHECK(parse_form("1", names) == Form(Monomial::one()));
    CHECK(parse_form("i phi1", names) == I * mono({1}, {}));
    CHECK(parse_form("(1+2i) phi1 - 1/2 phi2", names) ==
          (GaussQ(1) + GaussQ(2) * I) * mono({1}, {}) - GaussQ::of(1, 2) * mono({2}, {}));
    CHECK(parse_form("e(-1,1) phi3^phi1~", names) == mono({3}, {1}, {-1, 1}));
    CHECK(parse_form("2 e(0,-2) phi1", names) == GaussQ(2) * mono({1}, {}, {0, -2}));

    // Whitespace insensitivity.
    CHECK(parse_form("phi1 ^ phi2  +  i  phi3", names) ==
          parse_form("phi1^phi2+iphi3", names));

    // Unknown names and malformed words are rejected with positions.
    CHECK_THROWS_AS((void)parse_form("psi1", names), ParseError);
    CHECK_THROWS_AS((void)parse_form("phi1^", names), ParseError);
    CHECK_THROWS_AS((void)parse_form("phi1 phi2 junk(", names), ParseError);

    // Round-trip through the canonical printer.
    for (const char* s :
         {"phi1^phi2", "-phi3^phi1~^phi3~", "(1+1i) phi1 - 2i phi2", "e(-1,1) phi3 + phi1",
          "1 - phi1^phi1~", "(1+1i)", "(-2/3+1i) e(1,-1) phi2~", "5"}) {
        Form g = parse_form(s, names);
        CHECK(parse_form(to_string(g, names), names) == g);
    }
}

TEST_CASE("model documents parse, validate and round-trip") {
    std::string text = R"(
# a three-torus written out explicitly
model torus_demo
dim 3
gen phi1
gen phi2
gen phi3
d phi1 = 0
d phi2 = 0
d phi3 = 0
metric identity
)";
    ModelDocument doc = parse_model(text);
    CHECK(doc.model == model("torus_3"));
    CHECK(doc.model.name() == "torus_demo");

    // Empty differential section means a torus as well.
    ModelDocument torus = parse_model("model t\ndim 2\n");
    CHECK(torus.model == model("torus_2"));

    // Integrability failures surface as a validation report.
    CHECK_THROWS_AS((void)parse_model("model bad\ndim 2\nd phi1 = phi1~^phi2~\n"),
                    ValidationFailure);
    try {
        (void)parse_model("model bad\ndim 2\nd phi1 = phi1~^phi2~\n");
    } catch (const ValidationFailure& e) {
        REQUIRE(!e.report.issues.empty());
        CHECK(e.report.issues[0].kind == "integrability");
    }

    // Parse errors carry line/column positions.
    try {
        (void)parse_model("model bad\ndim 2\nd phi1 = phi1^^phi2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    // Round-trip: emit(parse(t)) parses to an identical model.
    for (const std::string& name : catalog::names()) {
        CAPTURE(name);
        ModelDocument d1 = parse_model(catalog::document_text(name));
        ModelDocument d2 = parse_model(emit_model(d1));
        CHECK(d1.model == d2.model);
        CHECK(d1.generator_names == d2.generator_names);
        CHECK(d1.generator_weights == d2.generator_weights);
    }
}

TEST_CASE("custom generator names and gram entries") {
    std::string text = R"(
model custom
dim 2
gen alpha
gen beta weight (1,0)
d alpha = 0
d beta = 0
gram 1 1 = 2
gram 1 2 = i
gram 2 2 = 3
)";
    ModelDocument doc = parse_model(text);
    CHECK(doc.generator_names == std::vector<std::string>{"alpha", "beta"});
    CHECK(doc.generator_weights[1] == Weight{1, 0});
    CHECK(doc.model.metric().gram[0][0] == GaussQ(2));
    CHECK(doc.model.metric().gram[0][1] == I);
    CHECK(doc.model.metric().gram[1][0] == -I);
    ModelDocument again = parse_model(emit_model(doc));
    CHECK(again.model == doc.model);

    // Forms must use the declared names.
    CHECK(parse_form("alpha^beta~", doc.generator_names) == mono({1}, {2}));
    CHECK_THROWS_AS((void)parse_form("phi1", doc.generator_names), ParseError);

    // A non-positive gram is a validation failure.
    CHECK_THROWS_AS((void)parse_model("model m\ndim 1\ngram 1 1 = -1\n"), ValidationFailure);
}

TEST_CASE("weighted document with a window") {
    std::string text = catalog::document_text("nakamura_a");
    CHECK(text.find("window -2..2 x -2..2") != std::string::npos);
    CHECK(text.find("weight (-1,0)") != std::string::npos);
    ModelDocument doc = parse_model(text);
    CHECK(doc.model.window() == WeightWindow{-2, 2, -2, 2});

    // A weighted window with a non-closed first generator is rejected.
    std::string bad = "model m\ndim 2\nwindow -1..1 x -1..1\nd phi1 = 0\nd phi2 = phi1^phi2\n";
    CHECK_NOTHROW((void)parse_model(bad));
    std::string worse = "model m\ndim 2\nwindow -1..1 x -1..1\nd phi1 = phi1^phi2\n";
    try {
        (void)parse_model(worse);
        FAIL("expected a validation failure");
    } catch (const ValidationFailure& e) {
        REQUIRE(!e.report.issues.empty());
        CHECK(e.report.issues[0].kind == "character-compatibility");
    }
}
