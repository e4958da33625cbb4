#include <doctest.h>

#include "pomcoh/formula.hpp"
#include "pomcoh/space_text.hpp"

using namespace pomcoh;

TEST_SUITE_BEGIN("text-formats");

TEST_CASE("space files") {
  const SpaceFile file = parse_space_file(
      "# two spaces and a hypercoherence\n"
      "space a { tokens: x, y; scoh: (x,y); }\n"
      "space flat { tokens: u, v, w; }\n"
      "hspace h { tokens: x, y, z; gamma: {x,y}, {x,y,z}; }\n");

  REQUIRE(file.spaces.count("a"));
  REQUIRE(file.spaces.count("flat"));
  REQUIRE(file.hypers.count("h"));

  const Space& a = file.spaces.at("a");
  CHECK(a.size() == 2);
  CHECK(a.rel(Token::atom("x"), Token::atom("y")) == Rel3::ScohStrict);

  const Space& flat = file.spaces.at("flat");
  CHECK(flat.size() == 3);
  CHECK(flat.rel(Token::atom("u"), Token::atom("v")) == Rel3::SincohStrict);

  const Hyper& h = file.hypers.at("h");
  CHECK(h.in_gamma_star({Token::atom("x"), Token::atom("y"), Token::atom("z")}));
  CHECK(h.in_gamma({Token::atom("z")}));
  CHECK_FALSE(h.in_gamma_star({Token::atom("x"), Token::atom("z")}));
}

TEST_CASE("space file errors carry positions") {
  CHECK_THROWS_AS(parse_space_file("space a { scoh: (x,y); }"), ParseError);
  CHECK_THROWS_AS(parse_space_file("space a { tokens: x; scoh: (x,q); }"),
                  ParseError);
  CHECK_THROWS_AS(parse_space_file("blob a { tokens: x; }"), ParseError);
  CHECK_THROWS_AS(parse_space_file("space a { tokens: x, y; gamma: {x,y}; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_space_file("hspace a { tokens: x; gamma: {x}; }"),
                  ParseError);
  CHECK_NOTHROW(parse_space_file(""));
}

TEST_SUITE_END();
