#include "gasp/parser.hpp"

#include <cctype>
#include <optional>

#include "gasp/error.hpp"

namespace gasp {

namespace {

enum class Tok {
  Ident, Integer, If, Dot, Bar, Comma, LBrace, RBrace, Tilde, Amp,
  Eq, Ne, Le, Ge, Lt, Gt, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(Tok kind) {
  switch (kind) {
  case Tok::Ident: return "atom";
  case Tok::Integer: return "integer";
  case Tok::If: return "':-'";
  case Tok::Dot: return "'.'";
  case Tok::Bar: return "'|'";
  case Tok::Comma: return "','";
  case Tok::LBrace: return "'{'";
  case Tok::RBrace: return "'}'";
  case Tok::Tilde: return "'~'";
  case Tok::Amp: return "'&'";
  case Tok::Eq: return "'='";
  case Tok::Ne: return "'!='";
  case Tok::Le: return "'<='";
  case Tok::Ge: return "'>='";
  case Tok::Lt: return "'<'";
  case Tok::Gt: return "'>'";
  case Tok::End: return "end of input";
  }
  return "?";
}

bool is_keyword(std::string_view s) { return s == "not" || s == "count" || s == "dnf"; }

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok{Tok::End, {}, line_, column_};
    if (pos_ >= text_.size())
      return tok;
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      advance(1);
      tok.kind = kind;
      return tok;
    };
    auto pair = [&](char second, Tok two, std::optional<Tok> one) -> Token {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == second) {
        advance(2);
        tok.kind = two;
        return tok;
      }
      if (!one)
        fail(tok, "unexpected character '" + std::string(1, c) + "'");
      advance(1);
      tok.kind = *one;
      return tok;
    };
    switch (c) {
    case '.': return single(Tok::Dot);
    case '|': return single(Tok::Bar);
    case ',': return single(Tok::Comma);
    case '{': return single(Tok::LBrace);
    case '}': return single(Tok::RBrace);
    case '~': return single(Tok::Tilde);
    case '&': return single(Tok::Amp);
    case '=': return single(Tok::Eq);
    case ':': return pair('-', Tok::If, std::nullopt);
    case '!': return pair('=', Tok::Ne, std::nullopt);
    case '<': return pair('=', Tok::Le, Tok::Lt);
    case '>': return pair('=', Tok::Ge, Tok::Gt);
    default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = Tok::Integer;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok.text += text_[pos_];
        advance(1);
      }
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text += text_[pos_];
        advance(1);
      }
      return tok;
    }
    fail(tok, "unexpected character");
  }

private:
  [[noreturn]] static void fail(const Token &at, const std::string &message) {
    throw ParseError(at.line, at.column, {}, message);
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
public:
  Parser(std::string_view text, const ParseOptions &options) : lexer_(text), options_(options) {
    tok_ = lexer_.next();
  }

  Program program() {
    std::vector<Rule> rules;
    while (tok_.kind != Tok::End)
      rules.push_back(statement());
    return Program(std::move(rules));
  }

private:
  [[noreturn]] void expected(std::vector<Tok> kinds) {
    std::vector<std::string> names;
    std::string message = "expected ";
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      names.push_back(describe(kinds[i]));
      if (i > 0)
        message += i + 1 == kinds.size() ? " or " : ", ";
      message += names.back();
    }
    message += ", found " + (tok_.text.empty() ? describe(tok_.kind) : "'" + tok_.text + "'");
    throw ParseError(tok_.line, tok_.column, std::move(names), message);
  }

  [[noreturn]] void invalid(const Token &at, const std::string &message) {
    throw ParseError(at.line, at.column, {}, message);
  }

  bool accept(Tok kind) {
    if (tok_.kind != kind)
      return false;
    tok_ = lexer_.next();
    return true;
  }

  void expect(Tok kind) {
    if (!accept(kind))
      expected({kind});
  }

  bool at_keyword(std::string_view kw) const { return tok_.kind == Tok::Ident && tok_.text == kw; }

  Atom atom() {
    if (tok_.kind != Tok::Ident || is_keyword(tok_.text))
      expected({Tok::Ident});
    Token at = tok_;
    tok_ = lexer_.next();
    if (is_valid_atom_name(at.text))
      return Atom(at.text);
    if (is_reserved_atom_name(at.text)) {
      if (!options_.allow_reserved)
        throw ReservedAtom(at.line, at.column, at.text);
      return Atom::reserved(at.text);
    }
    invalid(at, "invalid atom name '" + at.text + "'");
  }

  Rule statement() {
    Rule rule;
    if (tok_.kind == Tok::Ident && !is_keyword(tok_.text)) {
      do {
        Token at = tok_;
        if (!rule.head.insert(atom()).second)
          invalid(at, "duplicate head atom '" + at.text + "'");
      } while (accept(Tok::Bar));
    }
    if (accept(Tok::If)) {
      rule.body = body();
    } else if (tok_.kind != Tok::Dot) {
      if (rule.head.empty())
        expected({Tok::Ident, Tok::If, Tok::Dot});
      expected({Tok::Bar, Tok::If, Tok::Dot});
    }
    expect(Tok::Dot);
    return rule;
  }

  Body body() {
    if (at_keyword("count"))
      return aggregate();
    if (at_keyword("dnf"))
      return dnf();
    AtomSet pos, neg;
    if (tok_.kind == Tok::Dot)
      return Body();
    Token start = tok_;
    do {
      if (at_keyword("not")) {
        tok_ = lexer_.next();
        neg.insert(atom());
      } else {
        pos.insert(atom());
      }
    } while (accept(Tok::Comma));
    return conjunct_body(start, std::move(pos), std::move(neg));
  }

  Body conjunct_body(const Token &start, AtomSet pos, AtomSet neg) {
    try {
      return Body::literals(std::move(pos), std::move(neg));
    } catch (const InvalidArgument &e) {
      invalid(start, e.what());
    }
  }

  Body aggregate() {
    tok_ = lexer_.next();
    expect(Tok::LBrace);
    AtomSet set;
    do {
      set.insert(atom());
    } while (accept(Tok::Comma));
    expect(Tok::RBrace);
    Comparator cmp;
    switch (tok_.kind) {
    case Tok::Eq: cmp = Comparator::Eq; break;
    case Tok::Ne: cmp = Comparator::Ne; break;
    case Tok::Le: cmp = Comparator::Le; break;
    case Tok::Ge: cmp = Comparator::Ge; break;
    case Tok::Lt: cmp = Comparator::Lt; break;
    case Tok::Gt: cmp = Comparator::Gt; break;
    default: expected({Tok::Eq, Tok::Ne, Tok::Le, Tok::Ge, Tok::Lt, Tok::Gt});
    }
    tok_ = lexer_.next();
    if (tok_.kind != Tok::Integer)
      expected({Tok::Integer});
    std::size_t bound = 0;
    for (char c : tok_.text) {
      if (bound > (std::size_t{1} << 40))
        invalid(tok_, "integer out of range");
      bound = bound * 10 + static_cast<std::size_t>(c - '0');
    }
    tok_ = lexer_.next();
    return Body::count(std::move(set), cmp, bound);
  }

  Body dnf() {
    tok_ = lexer_.next();
    expect(Tok::LBrace);
    std::vector<Conjunct> disjuncts;
    do {
      Token start = tok_;
      AtomSet pos, neg;
      do {
        if (accept(Tok::Tilde))
          neg.insert(atom());
        else
          pos.insert(atom());
      } while (accept(Tok::Amp));
      try {
        disjuncts.emplace_back(std::move(pos), std::move(neg));
      } catch (const InvalidArgument &e) {
        invalid(start, e.what());
      }
    } while (accept(Tok::Bar));
    expect(Tok::RBrace);
    return Body::dnf(std::move(disjuncts));
  }

  Lexer lexer_;
  ParseOptions options_;
  Token tok_;
};

std::string join_atoms(const AtomSet &set, std::string_view sep, std::string_view prefix = {}) {
  std::string out;
  for (const auto &atom : set) {
    if (!out.empty())
      out += sep;
    out += prefix;
    out += atom.name();
  }
  return out;
}

std::string render_conjunct(const Conjunct &c, std::string_view sep, std::string_view neg) {
  std::string out = join_atoms(c.positives, sep);
  for (const auto &atom : c.negatives) {
    if (!out.empty())
      out += sep;
    out += neg;
    out += atom.name();
  }
  return out;
}

} // namespace

Program parse_program(const SourceProgram &src, const ParseOptions &options) {
  return parse_program(std::string_view(src.text), options);
}

Program parse_program(std::string_view text, const ParseOptions &options) {
  return Parser(text, options).program();
}

std::string render(const Body &body) {
  const Body c = canonical(body);
  if (const auto *lc = std::get_if<LiteralConjunction>(&c.value()))
    return render_conjunct(lc->conjunct, ", ", "not ");
  if (const auto *ca = std::get_if<CountAggregate>(&c.value()))
    return "count{" + join_atoms(ca->atoms, ", ") + "} " + std::string(to_string(ca->comparator)) +
           " " + std::to_string(ca->bound);
  const auto &dnf = c.as<Dnf>();
  std::string out = "dnf{";
  for (std::size_t i = 0; i < dnf.disjuncts.size(); ++i) {
    // An empty disjunct makes the whole body true; only reachable from
    // to_dnf over an empty domain.
    if (dnf.disjuncts[i].empty())
      return "";
    if (i > 0)
      out += " | ";
    out += render_conjunct(dnf.disjuncts[i], " & ", "~");
  }
  return out + "}";
}

std::string render(const Rule &rule) {
  std::string head = join_atoms(rule.head, " | ");
  std::string body = render(rule.body);
  if (body.empty())
    return head.empty() ? ":-." : head + ".";
  return (head.empty() ? ":- " : head + " :- ") + body + ".";
}

std::string render(const Program &program) {
  std::string out;
  const Program canon = program.canonical();
  for (const auto &rule : canon.rules())
    out += render(rule) + "\n";
  return out;
}

} // namespace gasp
