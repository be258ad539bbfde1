#include "fcl/parser.hpp"

#include <cctype>
#include <vector>

namespace fcl {

void SymbolTable::declare(const std::string& name, Sort s) {
  auto [it, inserted] = sorts.emplace(name, s);
  if (!inserted && it->second != s)
    throw std::invalid_argument("symbol '" + name + "' already declared with sort " +
                                sort_name(it->second));
}

std::optional<Sort> SymbolTable::lookup(const std::string& name) const {
  auto it = sorts.find(name);
  if (it == sorts.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({Token::Kind::number, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && is_ident(text[i])) ++i;
      out.push_back({Token::Kind::ident, text.substr(start, i - start), start});
      continue;
    }
    // multi-character punctuation first
    static const char* multi[] = {"<->", "->", "[[", "]]", "<<", ">>"};
    bool matched = false;
    for (const char* m : multi) {
      std::size_t n = std::char_traits<char>::length(m);
      if (text.compare(i, n, m) == 0) {
        out.push_back({Token::Kind::punct, m, i});
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string singles = "[]<>()!&|+^~/";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Kind::end, "", text.size()});
  return out;
}

struct FormulaParser {
  SymbolTable& symbols;
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }

  bool accept_punct(const char* p) {
    if (toks[at].kind == Token::Kind::punct && toks[at].text == p) {
      ++at;
      return true;
    }
    return false;
  }

  void expect_punct(const char* p) {
    if (!accept_punct(p))
      throw ParseError(std::string("expected '") + p + "'", toks[at].pos);
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, toks[at].pos); }

  // ---- weights -----------------------------------------------------------

  Degree parse_weight() {
    if (peek().kind != Token::Kind::number) fail("expected a weight");
    std::size_t wpos = peek().pos;
    std::string w = toks[at++].text;
    if (accept_punct("/")) {
      if (peek().kind != Token::Kind::number) fail("expected a denominator");
      w += "/" + toks[at++].text;
    }
    try {
      return Degree::parse(w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), wpos);
    }
  }

  // ---- index terms -------------------------------------------------------

  ITerm parse_iterm_unary() {
    if (accept_punct("~")) return IndexTerm::compl_of(parse_iterm_unary());
    if (accept_punct("(")) {
      ITerm t = parse_iterm();
      expect_punct(")");
      return t;
    }
    if (peek().kind == Token::Kind::number) {
      if (peek().text != "0") fail("'0' is the only numeric index term");
      ++at;
      return IndexTerm::zero();
    }
    if (peek().kind == Token::Kind::ident) return IndexTerm::prim(toks[at++].text);
    fail("expected an index term");
  }

  ITerm parse_iterm_meet() {
    ITerm t = parse_iterm_unary();
    while (accept_punct("&")) t = IndexTerm::meet_of(t, parse_iterm_unary());
    return t;
  }

  ITerm parse_iterm() {
    ITerm t = parse_iterm_meet();
    while (accept_punct("|")) t = IndexTerm::join_of(t, parse_iterm_meet());
    return t;
  }

  // ---- modalities --------------------------------------------------------

  Sort parse_tag() {
    if (peek().kind != Token::Kind::ident || (peek().text != "_p" && peek().text != "_o"))
      fail("expected modality tag '_p' or '_o'");
    Sort s = toks[at++].text == "_p" ? Sort::property : Sort::object;
    return s;
  }

  ITerm parse_opt_index() {
    if (!accept_punct("^")) return nullptr;
    return parse_iterm_unary();
  }

  // A modality token sequence has been opened with `open`; parse the rest
  // and the argument.  kind: 0 = [..], 1 = [[..]], 2 = <..>, 3 = <<..>>.
  Fptr parse_modality(int kind, std::optional<Sort> region) {
    std::size_t mpos = toks[at - 1].pos;
    Degree w = parse_weight();
    bool strict = accept_punct("+");
    static const char* closers[] = {"]", "]]", ">", ">>"};
    expect_punct(closers[kind]);
    Sort arg_sort = parse_tag();
    ITerm idx = parse_opt_index();
    Sort own = opposite(arg_sort);
    if (region && *region != own)
      throw ParseError(std::string("this modality yields a ") + sort_name(own) +
                           "-sorted formula, but a " + sort_name(*region) +
                           "-sorted one is expected here",
                       mpos);
    Fptr arg = parse_unary(arg_sort);
    switch (kind) {
      case 0:
        return nec({w, strict}, std::move(arg), std::move(idx));
      case 1:
        return suff({w, strict}, std::move(arg), std::move(idx));
      case 2:
        return expand_derived(strict ? DerivedKind::pos_strict : DerivedKind::pos, w,
                              std::move(arg), std::move(idx));
      default:
        return expand_derived(strict ? DerivedKind::suff_dual_strict : DerivedKind::suff_dual, w,
                              std::move(arg), std::move(idx));
    }
  }

  // ---- formulas ----------------------------------------------------------

  Fptr parse_unary(std::optional<Sort> region) {
    if (accept_punct("!")) return neg(parse_unary(region));
    if (accept_punct("[")) return parse_modality(0, region);
    if (accept_punct("[[")) return parse_modality(1, region);
    if (accept_punct("<")) return parse_modality(2, region);
    if (accept_punct("<<")) return parse_modality(3, region);
    if (accept_punct("(")) {
      Fptr f = parse_iff(region);
      expect_punct(")");
      return f;
    }
    if (peek().kind == Token::Kind::ident) {
      const Token& tok = toks[at++];
      auto declared = symbols.lookup(tok.text);
      if (declared) {
        if (region && *region != *declared)
          throw ParseError("atom '" + tok.text + "' is " + sort_name(*declared) + "-sorted, but a " +
                               sort_name(*region) + "-sorted formula is expected here",
                           tok.pos);
        return atom(tok.text, *declared);
      }
      if (!region)
        throw ParseError("cannot infer the sort of atom '" + tok.text +
                             "'; declare it or supply an expected sort",
                         tok.pos);
      symbols.declare(tok.text, *region);
      return atom(tok.text, *region);
    }
    fail("expected a formula");
  }

  Fptr parse_and(std::optional<Sort> region) {
    Fptr f = parse_unary(region);
    while (true) {
      std::size_t opos = peek().pos;
      if (!accept_punct("&")) break;
      Fptr rhs = parse_unary(f->sort);
      if (rhs->sort != f->sort)
        throw ParseError("'&' operands have different sorts", opos);
      f = conj(std::move(f), std::move(rhs));
    }
    return f;
  }

  Fptr parse_or(std::optional<Sort> region) {
    Fptr f = parse_and(region);
    while (accept_punct("|")) f = or_(std::move(f), parse_and(f ? f->sort : region));
    return f;
  }

  Fptr parse_imp(std::optional<Sort> region) {
    Fptr f = parse_or(region);
    if (!accept_punct("->")) return f;
    Fptr rhs = parse_imp(f->sort);  // right-associative
    return implies(std::move(f), std::move(rhs));
  }

  Fptr parse_iff(std::optional<Sort> region) {
    Fptr f = parse_imp(region);
    if (!accept_punct("<->")) return f;
    Fptr rhs = parse_iff(f->sort);
    return iff(std::move(f), std::move(rhs));
  }
};

}  // namespace

Fptr parse_formula(const std::string& text, SymbolTable& symbols,
                   std::optional<Sort> expected_sort) {
  FormulaParser p{symbols, lex(text)};
  Fptr f = p.parse_iff(expected_sort);
  if (p.peek().kind != Token::Kind::end)
    throw ParseError("trailing input after formula", p.peek().pos);
  return f;
}

}  // namespace fcl
