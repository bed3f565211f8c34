#include <catch2/catch_amalgamated.hpp>

#include <jacring/errors.hpp>
#include <jacring/form.hpp>

using Catch::Matchers::ContainsSubstring;
using jacring::Expo;
using jacring::Form;
using jacring::RationalField;

namespace {
Form<RationalField> parse(const std::string& text) {
    return jacring::parse_form<RationalField>(text, RationalField{});
}
}  // namespace

TEST_CASE("parses the Fermat binary quintic", "[form]") {
    auto f = parse("x0^5 + x1^5");
    CHECK(f.nvars == 2);
    CHECK(f.degree == 5);
    CHECK(f.terms.size() == 2);
    CHECK(jacring::forms_equal(f, jacring::fermat_form(5, 2, RationalField{})));
}

TEST_CASE("parses coefficients, products and minus signs", "[form]") {
    auto f = parse("3*x0^2*x1 - x2^3");
    CHECK(f.nvars == 3);
    CHECK(f.degree == 3);
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms.at(Expo{2, 1, 0}) == 3);
    CHECK(f.terms.at(Expo{0, 0, 3}) == -1);
}

TEST_CASE("parses rational coefficients and collects repeated terms", "[form]") {
    auto f = parse("1/2*x0^2 + 1/2*x0^2 + x0*x1");
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms.at(Expo{2, 0}) == 1);
    CHECK(f.terms.at(Expo{1, 1}) == 1);

    // terms cancelling to zero drop out; a fully cancelled form is an error
    CHECK_THROWS_AS(parse("x0^2 - x0^2"), jacring::parse_error);
}

TEST_CASE("whitespace is insignificant and '*' after coefficient optional", "[form]") {
    auto a = parse("2x0 *x1+ x1 ^ 2");
    auto b = parse("2*x0*x1 + x1^2");
    CHECK(jacring::forms_equal(a, b));
}

TEST_CASE("inhomogeneous input is rejected naming both terms", "[form]") {
    CHECK_THROWS_MATCHES(parse("x0^2 + x1^3"), jacring::parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("x0^2") &&
                                                         ContainsSubstring("x1^3") &&
                                                         ContainsSubstring("degree")));
}

TEST_CASE("parse failures carry a usable diagnostic", "[form]") {
    CHECK_THROWS_MATCHES(parse("x0^2 + y^2"), jacring::parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("unknown variable")));
    CHECK_THROWS_MATCHES(parse("1/0*x0^3"), jacring::parse_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("zero denominator")));
    CHECK_THROWS_AS(parse(""), jacring::parse_error);
    CHECK_THROWS_AS(parse("5"), jacring::parse_error);
    CHECK_THROWS_AS(parse("x0^2 x1"), jacring::parse_error);  // missing '*'
}

TEST_CASE("round trip through form_to_string", "[form]") {
    for (const char* text : {"x0^5 + x1^5", "3*x0^2*x1 - x2^3", "x0^4 + 2*x0^2*x1^2 - 7*x1^4"}) {
        auto f = parse(text);
        auto g = parse(jacring::form_to_string(f));
        CHECK(jacring::forms_equal(f, g));
    }
}

TEST_CASE("derivative matches hand computation", "[form]") {
    auto f = parse("x0^3*x1 + x1^4");
    auto d0 = jacring::derivative(f, 0);
    REQUIRE(d0.terms.size() == 1);
    CHECK(d0.terms.at(Expo{2, 1}) == 3);
    auto d1 = jacring::derivative(f, 1);
    REQUIRE(d1.terms.size() == 2);
    CHECK(d1.terms.at(Expo{3, 0}) == 1);
    CHECK(d1.terms.at(Expo{0, 3}) == 4);
}

TEST_CASE("random forms are reproducible from the seed", "[form]") {
    RationalField F;
    auto a = jacring::random_form(4, 3, F, 42);
    auto b = jacring::random_form(4, 3, F, 42);
    CHECK(jacring::forms_equal(a, b));
    CHECK(a.degree == 4);
    CHECK(a.nvars == 3);

    auto c = jacring::random_form(4, 3, F, 43);
    CHECK_FALSE(jacring::forms_equal(a, c));

    // distinct retry attempts from one seed differ as well
    auto d = jacring::random_form(4, 3, F, 42, 1);
    CHECK_FALSE(jacring::forms_equal(a, d));
}
