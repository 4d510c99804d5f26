#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "ltistab/diagram.hpp"
#include "ltistab/error.hpp"
#include "ltistab/parser.hpp"
#include "ltistab/stability.hpp"

using namespace ltistab;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

TransferFunction elaborate(std::string_view json_text) { return elaborate_diagram(parse_diagram(json_text)); }

Error error_of(std::string_view json_text) {
    try {
        elaborate(json_text);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an ltistab::Error for " << json_text);
    return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("proportional loop around a first-order plant") {
    const TransferFunction h = elaborate(R"j({"kind": "feedback", "forward": {"kind": "series", "blocks": [
        {"kind": "tf", "expr": "3"}, {"kind": "tf", "expr": "1/(s+2)"}]}})j");
    CHECK(h == parse_transfer_function("3/(s+5)"));
    CHECK(bibo_from_poles(h).verdict == Verdict::Stable);
}

TEST_CASE("loop stabilizing an unstable plant") {
    const TransferFunction h = elaborate(R"j({"kind": "feedback", "forward": {"kind": "series", "blocks": [
        {"kind": "tf", "expr": "0.5"}, {"kind": "tf", "expr": "1/(s-1)"}]}})j");
    const RootSet poles = tf_poles(h);
    REQUIRE(poles.size() == 1);
    CHECK_THAT(poles.roots[0].location.real(), WithinAbs(0.5, 1e-12));
    CHECK(bibo_from_poles(h).verdict == Verdict::Unstable);

    const TransferFunction stabilized = elaborate(R"j({"kind": "feedback", "forward": {"kind": "series", "blocks": [
        {"kind": "tf", "expr": "1.5"}, {"kind": "tf", "expr": "1/(s-1)"}]}})j");
    CHECK(bibo_from_poles(stabilized).verdict == Verdict::Stable);
}

TEST_CASE("single-block and parallel diagrams") {
    CHECK(elaborate(R"j({"kind": "series", "blocks": [{"kind": "tf", "expr": "1/(s+1)"}]})j") ==
          parse_transfer_function("1/(s+1)"));
    CHECK(elaborate(R"j({"kind": "parallel", "blocks": [{"kind": "tf", "expr": "1/(s+1)"},
        {"kind": "tf", "expr": "1/(s+2)"}]})j") == parse_transfer_function("(2*s+3)/(s^2+3*s+2)"));
    CHECK(elaborate(R"j({"kind": "tf", "expr": "2"})j") == TransferFunction::gain(2.0));
}

TEST_CASE("diagram file from the test data") {
    std::ifstream in(std::string(LTISTAB_TEST_DATA_DIR) + "/proportional_loop.json");
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    CHECK(elaborate(text.str()) == parse_transfer_function("3/(s+5)"));
}

TEST_CASE("invalid diagrams") {
    const Error extra = error_of(R"j({"kind": "tf", "expr": "1", "gain": 2})j");
    CHECK(extra.code() == ErrorCode::InvalidDiagram);
    CHECK_THAT(extra.what(), ContainsSubstring("gain"));

    const Error nested = error_of(R"j({"kind": "series", "blocks": [{"kind": "tf", "expr": "1"}, {"kind": "tff"}]})j");
    CHECK(nested.code() == ErrorCode::InvalidDiagram);
    CHECK_THAT(nested.what(), ContainsSubstring("$.blocks[1]"));

    CHECK(error_of("{").code() == ErrorCode::InvalidDiagram);
    CHECK(error_of("[]").code() == ErrorCode::InvalidDiagram);
    CHECK(error_of(R"j({"kind": "series", "blocks": []})j").code() == ErrorCode::InvalidDiagram);
    CHECK(error_of(R"j({"kind": "feedback"})j").code() == ErrorCode::InvalidDiagram);
    CHECK(error_of(R"j({"kind": "tf", "expr": 3})j").code() == ErrorCode::InvalidDiagram);

    const Error leaf = error_of(R"j({"kind": "feedback", "forward": {"kind": "tf", "expr": "1/(s+1)/(s+2)"}})j");
    CHECK(leaf.code() == ErrorCode::MultipleDivision);
    CHECK_THAT(leaf.what(), ContainsSubstring("$.forward"));
    CHECK(leaf.offset() == 7u);

    const Error loop = error_of(R"j({"kind": "feedback", "forward": {"kind": "tf", "expr": "-1"}})j");
    CHECK(loop.code() == ErrorCode::DegenerateLoop);
    CHECK_THAT(loop.what(), ContainsSubstring("$:"));
}
