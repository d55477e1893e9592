#include "muforge/parse.hpp"

#include <cctype>
#include <string>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, at, line, col);
  }

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "' " + what, pos);
    ++pos;
  }

  bool eat_arrow() {
    skip();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  FormulaRef parse_disj() {
    FormulaRef a = parse_conj();
    skip();
    if (eat('|')) return disj(std::move(a), parse_disj());
    return a;
  }

  FormulaRef parse_conj() {
    FormulaRef a = parse_unit();
    skip();
    if (eat('&')) return conj(std::move(a), parse_conj());
    return a;
  }

  FormulaRef parse_unit() {
    skip();
    if (pos >= text.size()) fail("expected formula, found end of input", pos);
    char c = text[pos];

    if (c == '(') {
      ++pos;
      FormulaRef f = parse_disj();
      expect(')', "to close '('");
      return f;
    }
    if (c == '~') {
      ++pos;
      skip();
      std::size_t at = pos;
      if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
        fail("expected proposition after '~'", at);
      std::string name = ident();
      if (name == "tt" || name == "ff" || name == "mu" || name == "nu")
        fail("keyword '" + name + "' cannot be negated", at);
      return nprop(std::move(name));
    }
    if (eat_arrow()) {
      expect('{', "after '->'");
      std::vector<FormulaRef> members;
      skip();
      if (!eat('}')) {
        members.push_back(parse_disj());
        while (eat(',')) members.push_back(parse_disj());
        expect('}', "to close '->{'");
      }
      return modal(std::move(members));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t at = pos;
      std::string name = ident();
      if (name == "tt") return top();
      if (name == "ff") return bottom();
      if (name == "mu" || name == "nu") {
        skip();
        std::size_t vat = pos;
        if (pos >= text.size() || !std::isupper(static_cast<unsigned char>(text[pos])))
          fail("expected variable after '" + name + "'", vat);
        std::string v = ident();
        expect('.', "after binder variable");
        FormulaRef body = parse_disj();
        return name == "mu" ? mu(std::move(v), std::move(body))
                            : nu(std::move(v), std::move(body));
      }
      (void)at;
      return prop(std::move(name));
    }
    if (std::isupper(static_cast<unsigned char>(c))) return var(ident());
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

} // namespace

FormulaRef parse_formula(std::string_view text) {
  Parser p{text};
  FormulaRef f = p.parse_disj();
  p.skip();
  if (p.pos < text.size())
    p.fail(std::string("trailing input starting with '") + text[p.pos] + "'", p.pos);
  return rename_binders_unique(f);
}

} // namespace muforge
