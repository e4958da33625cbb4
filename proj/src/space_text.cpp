#include "pomcoh/space_text.hpp"

#include <cctype>
#include <vector>

#include "pomcoh/formula.hpp"  // ParseError

namespace pomcoh {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos < text.size() && text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }

  std::string ident() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '*'))
      ++pos;
    if (pos == start) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }
};

std::vector<Token> parse_token_list(Lexer& lx) {
  std::vector<Token> tokens;
  tokens.push_back(Token::atom(lx.ident()));
  while (lx.peek(',')) {
    lx.expect(',');
    tokens.push_back(Token::atom(lx.ident()));
  }
  return tokens;
}

}  // namespace

SpaceFile parse_space_file(std::string_view text) {
  SpaceFile out;
  Lexer lx{text};
  while (!lx.done()) {
    const std::string kind = lx.ident();
    if (kind != "space" && kind != "hspace")
      lx.fail("expected 'space' or 'hspace'");
    const std::string name = lx.ident();
    lx.expect('{');

    std::string section = lx.ident();
    if (section != "tokens") lx.fail("expected 'tokens'");
    lx.expect(':');
    std::vector<Token> web = parse_token_list(lx);
    lx.expect(';');

    std::vector<std::pair<Token, Token>> scoh;
    std::vector<std::vector<Token>> gamma;
    if (!lx.peek('}')) {
      section = lx.ident();
      lx.expect(':');
      if (kind == "space") {
        if (section != "scoh") lx.fail("expected 'scoh'");
        for (;;) {
          lx.expect('(');
          Token a = Token::atom(lx.ident());
          lx.expect(',');
          Token b = Token::atom(lx.ident());
          lx.expect(')');
          scoh.emplace_back(std::move(a), std::move(b));
          if (!lx.peek(',')) break;
          lx.expect(',');
        }
      } else {
        if (section != "gamma") lx.fail("expected 'gamma'");
        for (;;) {
          lx.expect('{');
          gamma.push_back(parse_token_list(lx));
          lx.expect('}');
          if (!lx.peek(',')) break;
          lx.expect(',');
        }
      }
      lx.expect(';');
    }
    lx.expect('}');

    try {
      if (kind == "space")
        out.spaces.insert_or_assign(name, Space(std::move(web), scoh));
      else
        out.hypers.insert_or_assign(name, Hyper(std::move(web), gamma));
    } catch (const std::invalid_argument& e) {
      lx.fail(std::string("in ") + kind + " " + name + ": " + e.what());
    }
  }
  return out;
}

}  // namespace pomcoh
