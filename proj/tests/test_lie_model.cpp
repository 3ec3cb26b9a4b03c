#include "symhodge/catalog.hpp"
#include "symhodge/lie_model.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symhodge;

namespace {

const char* kt_text = R"json({
  "name": "kodaira-thurston",
  "dim": 4,
  "structure": [{"i": 1, "j": 2, "k": 4, "c": "1"}],
  "omega": [{"i": 1, "j": 3, "c": "1"}, {"i": 2, "j": 4, "c": "1"}]
})json";

} // namespace

TEST_CASE("abelian torus file loads")
{
    const LieModel m = load_model(R"json({"name":"t4","dim":4,"structure":[],"omega":[]})json");
    CHECK(m.dim == 4);
    CHECK(m.structure.empty());
    const GradedOperator d = exterior_derivative(m);
    for (int k = 0; k <= 4; ++k)
        CHECK(d.block(k).is_zero());
}

TEST_CASE("Kodaira-Thurston file loads and validates")
{
    const LieModel m = load_model(kt_text);
    const ValidationReport rep = validate(m);
    CHECK(rep.ok());
    CHECK(rep.unimodular);
    for (bool b : rep.d_squared_zero)
        CHECK(b);

    const GradedOperator d = exterior_derivative(m);
    // de4 = e1^e2, everything else closed
    CHECK(d.apply(Form::basis(4, {4})) == Form::basis(4, {1, 2}));
    CHECK(d.apply(Form::basis(4, {1})).is_zero());
    // kernel of d on degree 1 is three-dimensional: e1, e2, e3
    CHECK(nullspace(d.block(1)).size() == 3);
}

TEST_CASE("model with de1 = e1^e2 is rejected")
{
    // the validator decides by assembling d and computing d^2 and the
    // top-minus-one block exactly; here d^2 = 0 survives the wedge algebra
    // but d(e1^e3^e4) = e1^e2^e3^e4 breaks unimodularity
    const char* text = R"json({
      "name": "bad",
      "dim": 4,
      "structure": [{"i": 1, "j": 2, "k": 1, "c": "1"}],
      "omega": []
    })json";
    const ValidationReport rep = validate(parse_model(text));
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.unimodular);
    CHECK_THROWS_AS(load_model(text), ModelError);
}

TEST_CASE("non-unimodular 2-dim model rejected")
{
    // de2 = e1^e2: the affine algebra; d nonzero on degree 2n-1 = 1
    const char* text = R"json({
      "name": "affine",
      "dim": 2,
      "structure": [{"i": 1, "j": 2, "k": 2, "c": "1"}],
      "omega": [{"i": 1, "j": 2, "c": "1"}]
    })json";
    const LieModel m = parse_model(text);
    const ValidationReport rep = validate(m);
    CHECK_FALSE(rep.unimodular);
    for (bool b : rep.d_squared_zero) // d^2 = 0 still holds here
        CHECK(b);
    CHECK_THROWS_AS(load_model(text), ModelError);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_model("not json"), ModelError);
    CHECK_THROWS_AS(parse_model(R"json({"name":"x","dim":3,"structure":[],"omega":[]})json"),
                    ModelError); // odd dimension
    CHECK_THROWS_AS(parse_model(R"json({"name":"x","dim":0,"structure":[],"omega":[]})json"),
                    ModelError);
    CHECK_THROWS_AS(
        parse_model(R"json({"name":"x","dim":4,"structure":[],"omega":[],"extra":1})json"),
        ModelError); // unknown key
    CHECK_THROWS_AS(
        parse_model(
            R"json({"name":"x","dim":4,"structure":[{"i":2,"j":1,"k":3,"c":"1"}],"omega":[]})json"),
        ModelError); // needs i < j
    CHECK_THROWS_AS(
        parse_model(
            R"json({"name":"x","dim":4,"structure":[{"i":1,"j":5,"k":3,"c":"1"}],"omega":[]})json"),
        ModelError); // index out of range
    CHECK_THROWS_AS(
        parse_model(
            R"json({"name":"x","dim":4,"structure":[{"i":1,"j":2,"k":3,"c":"1/0"}],"omega":[]})json"),
        ModelError); // zero denominator
    CHECK_THROWS_AS(
        parse_model(
            R"json({"name":"x","dim":4,"structure":[{"i":1,"j":2,"k":3,"c":1}],"omega":[]})json"),
        ModelError); // coefficient must be a string
    CHECK_THROWS_AS(
        parse_model(
            R"json({"name":"x","dim":4,"structure":[{"i":1,"j":2,"k":3,"c":"1","x":0}],"omega":[]})json"),
        ModelError); // unknown key in record
}

TEST_CASE("every catalog model validates with correct dimension table")
{
    for (const auto& id : catalog_ids()) {
        const LieModel m = catalog_model(id);
        const ValidationReport rep = validate(m);
        CHECK(rep.ok());
        const GradedOperator d = exterior_derivative(m);
        CHECK(compose(d, d).is_zero());
        CHECK(d.block(m.dim - 1).is_zero()); // unimodularity
        for (int k = 0; k <= m.dim; ++k) {
            CHECK(rep.degree_dims[static_cast<std::size_t>(k)] == degree_dimension(m.dim, k));
            CHECK(d.block(k).cols() == degree_dimension(m.dim, k));
        }
    }
}

TEST_CASE("catalog lookups")
{
    CHECK(catalog_ids().size() >= 5);
    CHECK(catalog_find("t4") != nullptr);
    CHECK(catalog_find("nope") == nullptr);
    CHECK_THROWS_AS(catalog_model("nope"), ModelError);
}
