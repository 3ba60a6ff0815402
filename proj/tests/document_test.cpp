#include "cace/document.hpp"

#include "doctest.h"

using namespace cace;

namespace {

// the 15-generator length-65 code of the running example
const char* kSuboptimal65 = R"({
  "generators": [1, 3, 4, 9, 10, 12, 13, 14, 16, 17, 22, 23, 27, 29, 30],
  "n": 65,
  "omega": 3
})";

}  // namespace

TEST_CASE("parse accepts the canonical document") {
  Code code = parse_code(kSuboptimal65);
  CHECK(code.modulus() == 65);
  CHECK(code.weight() == 3);
  CHECK(code.size() == 15);
}

TEST_CASE("serialize then parse is the identity") {
  Code code(58, 5, {1, 9, 23, 33, 7, 5, 45});
  CHECK(parse_code(serialize_code(code)) == code);
}

TEST_CASE("canonical documents round-trip byte for byte") {
  std::string canonical = serialize_code(parse_code(kSuboptimal65));
  CHECK(serialize_code(parse_code(canonical)) == canonical);
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(parse_code("not json"), MalformedDocument);
  CHECK_THROWS_AS(parse_code("[1,2]"), MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3})"), MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3,"generators":[1],"note":"x"})"),
                  MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3,"generators":[0]})"),
                  MalformedDocument);  // generator 0 out of range
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3,"generators":[13]})"),
                  MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3,"generators":[3,1]})"),
                  MalformedDocument);  // not ascending
  CHECK_THROWS_AS(parse_code(R"({"n":10,"omega":5,"generators":[2,4]})"),
                  MalformedDocument);  // duplicate expansion
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":3.5,"generators":[1]})"),
                  MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":-13,"omega":3,"generators":[1]})"),
                  MalformedDocument);
  CHECK_THROWS_AS(parse_code(R"({"n":13,"omega":1,"generators":[1]})"),
                  MalformedDocument);
}
