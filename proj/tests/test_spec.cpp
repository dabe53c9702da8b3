#include <doctest.h>

#include <functional>

#include "equirank/error.hpp"
#include "equirank/spec.hpp"

using namespace equirank;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("Z1")->order() == 1);
  CHECK(parse_group_spec("Z7")->order() == 7);
  CHECK(parse_group_spec("S4")->order() == 24);
  CHECK(parse_group_spec("D5")->order() == 10);
  CHECK(parse_group_spec("Q8")->order() == 8);
  CHECK(parse_group_spec("Z2xZ3")->order() == 6);
  CHECK(parse_group_spec("Z2xZ2xZ2")->order() == 8);
  CHECK(parse_group_spec("perm:3:(0 1);(0 1 2)")->order() == 6);
  CHECK(parse_group_spec("perm:4:(0 1 2 3)")->order() == 4);
}

TEST_CASE("group spec errors") {
  CHECK(code_of([] { parse_group_spec("Q9"); }) == "unknown-group-token");
  CHECK(code_of([] { parse_group_spec("Z0"); }) == "unknown-group-token");
  CHECK(code_of([] { parse_group_spec("Z2x"); }) == "unknown-group-token");
  CHECK(code_of([] { parse_group_spec("perm:3"); }) == "malformed-cycles");
  CHECK(code_of([] { parse_group_spec("perm:3:(0 5)"); }) == "malformed-cycles");
  CHECK(code_of([] { parse_group_spec("Z1000000"); }) == "size-limit");
  CHECK(code_of([] { parse_group_spec("Z100xZ200"); }) == "size-limit");
  try {
    parse_group_spec("Z2xQ9");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("G-set specs") {
  const auto s3 = parse_group_spec("S3");
  const auto shift = parse_gset_spec("shift:q=2", s3);
  CHECK(shift.gset->size() == 64);
  REQUIRE(shift.shift.has_value());
  CHECK(shift.shift->q == 2);

  CHECK(parse_gset_spec("cosets:", s3).gset->size() == 6);
  CHECK(parse_gset_spec("cosets:(1 2)", s3).gset->size() == 3);
  CHECK(parse_gset_spec("cosets:(),(0 2 1),(0 1 2)", s3).gset->size() == 2);
  const auto u = parse_gset_spec("union:cosets:(1 2)+cosets:(),(0 2 1),(0 1 2)+cosets:", s3);
  CHECK(u.gset->size() == 11);
  CHECK_FALSE(u.shift.has_value());

  const auto z6 = parse_group_spec("Z6");
  CHECK(parse_gset_spec("cosets:3", z6).gset->size() == 3);
}

TEST_CASE("G-set spec errors") {
  const auto s3 = parse_group_spec("S3");
  CHECK(code_of([&] { parse_gset_spec("shift:q=1", s3); }) == "invalid-alphabet");
  CHECK(code_of([&] { parse_gset_spec("shift:q=x", s3); }) == "invalid-alphabet");
  CHECK(code_of([&] { parse_gset_spec("cosets:(0 1 2)", s3); }) == "not-a-subgroup");
  CHECK(code_of([&] { parse_gset_spec("cosets:zz", s3); }) == "unknown-element");
  CHECK(code_of([&] { parse_gset_spec("orbit:1", s3); }) == "unknown-gset-token");
  CHECK(code_of([&] { parse_gset_spec("shift:q=20", parse_group_spec("Z6")); }) ==
        "size-limit");
}
