#pragma once

#include "eflp/program.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eflp {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class Dialect { core, saad, cornejo };

inline Dialect parse_dialect(const std::string& name) {
  if (name == "core") return Dialect::core;
  if (name == "saad") return Dialect::saad;
  if (name == "cornejo") return Dialect::cornejo;
  throw ConfigError("unknown dialect '" + name + "'");
}

using AnyProgram = std::variant<Program, SaadProgram, CornejoProgram>;

namespace detail {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      if (c == '@' && j == i + 1) throw ParseError(line, col, "'@' must be followed by a name");
      tok.kind = Token::Kind::ident;
      tok.text = std::string(src.substr(start, j - start));
      advance(j - i);
    } else if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j + 1 < src.size() && (src[j] == '.' || src[j] == '/') && is_digit(src[j + 1])) {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      tok.kind = Token::Kind::number;
      tok.text = std::string(src.substr(start, j - start));
      advance(j - i);
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '-') {
      tok.kind = Token::Kind::punct;
      tok.text = "<-";
      advance(2);
    } else if (std::string_view(".,()[]&|-:#").find(c) != std::string_view::npos) {
      tok.kind = Token::Kind::punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect) : tokens_(tokenize(text)), dialect_(dialect) {}

  AnyProgram run() {
    while (!at_end()) {
      if (is_punct("#"))
        directive();
      else
        statement();
    }
    switch (dialect_) {
      case Dialect::core:
        core_.config = config_;
        core_.declared_atoms = declared_;
        return core_;
      case Dialect::saad:
        saad_.declared_atoms = declared_;
        return saad_;
      case Dialect::cornejo:
        cornejo_.config = config_;
        cornejo_.declared_atoms = declared_;
        return cornejo_;
    }
    return core_;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::punct && peek(k).text == p;
  }
  bool is_ident(std::string_view name, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::ident && peek(k).text == name;
  }

  [[noreturn]] void fail(const std::string& message, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(t.line, t.column, message);
  }

  std::string describe(const Token& t) const {
    if (t.kind == Token::Kind::end) return "end of input";
    return "'" + t.text + "'";
  }

  const Token& expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "', found " + describe(peek()));
    return tokens_[pos_++];
  }

  std::string expect_ident(const char* what) {
    if (peek().kind != Token::Kind::ident) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return tokens_[pos_++].text;
  }

  TruthValue number() {
    if (peek().kind != Token::Kind::number) fail("expected a number, found " + describe(peek()));
    const Token& t = tokens_[pos_++];
    try {
      return TruthValue::parse(t.text);
    } catch (const ConfigError& e) {
      fail(e.what(), &t);
    }
  }

  std::string atom_name() {
    const Token& t = peek();
    std::string name = expect_ident("an atom");
    if (name == "not" || name == "neg") fail("'" + name + "' is a keyword, not an atom", &t);
    return name;
  }

  Literal literal() {
    const Token& start = peek();
    bool negated = false;
    if (is_punct("-")) {
      ++pos_;
      negated = true;
    } else if (is_ident("neg") && peek(1).kind == Token::Kind::ident) {
      ++pos_;
      negated = true;
    }
    if (negated && dialect_ == Dialect::cornejo) fail("strong negation is not allowed in this dialect", &start);
    return Literal{atom_name(), negated};
  }

  void directive() {
    expect_punct("#");
    const Token& name_tok = peek();
    std::string name = expect_ident("a directive name");
    if (name == "atoms") {
      declared_.insert(atom_name());
      while (is_punct(",")) {
        ++pos_;
        declared_.insert(atom_name());
      }
      expect_punct(".");
      return;
    }
    if (dialect_ == Dialect::saad) fail("directive '#" + name + "' is not available in this dialect", &name_tok);
    try {
      if (name == "lattice") {
        std::string kind = expect_ident("a lattice kind");
        if (kind == "bool" || kind == "boolean") {
          config_.set_lattice(Lattice::boolean());
        } else if (kind == "rational") {
          config_.set_lattice(Lattice::rational());
        } else if (kind == "chain") {
          expect_punct("(");
          const Token& n_tok = peek();
          if (n_tok.kind != Token::Kind::number || n_tok.text.find_first_not_of("0123456789") != std::string::npos)
            fail("expected the chain length");
          ++pos_;
          std::size_t n = std::stoul(n_tok.text);
          expect_punct(")");
          config_.set_lattice(Lattice::chain(n));
        } else {
          fail("unknown lattice '" + kind + "'");
        }
      } else if (name == "conj") {
        config_.set_conjunction_family(expect_ident("a conjunction family"));
      } else if (name == "sneg") {
        config_.set_strong_negator(parse_negator(expect_ident("a negator")));
      } else if (name == "wneg") {
        config_.set_weak_negator(parse_negator(expect_ident("a negator")));
      } else {
        fail("unknown directive '#" + name + "'", &name_tok);
      }
    } catch (const ConfigError& e) {
      fail(e.what(), &name_tok);
    }
    expect_punct(".");
  }

  void statement() {
    switch (dialect_) {
      case Dialect::core:
        core_.rules.push_back(rule(literal()));
        return;
      case Dialect::saad:
        saad_.rules.push_back(saad_rule());
        return;
      case Dialect::cornejo:
        if (peek().kind == Token::Kind::number) {
          CornejoConstraint c;
          c.bound = number();
          expect_punct("<-");
          c.body = body();
          expect_punct(".");
          cornejo_.constraints.push_back(std::move(c));
        } else {
          cornejo_.rules.push_back(rule(literal()));
        }
        return;
    }
  }

  Rule rule(Literal head) {
    Rule r;
    r.head = std::move(head);
    if (is_punct(".")) {
      ++pos_;
      return r;
    }
    expect_punct("<-");
    if (is_punct("[")) {
      ++pos_;
      Weight w;
      w.theta = number();
      if (is_punct(",")) {
        ++pos_;
        const Token& t = peek();
        w.implicator = expect_ident("an implicator");
        if (!config_.implicator(w.implicator)) fail("unknown implicator '" + w.implicator + "'", &t);
      } else {
        w.implicator = config_.default_implicator();
      }
      expect_punct("]");
      r.weight = std::move(w);
    }
    r.body = body();
    expect_punct(".");
    return r;
  }

  Formula body() {
    Formula lhs = conjunction();
    while (is_punct("|")) {
      ++pos_;
      lhs = Formula::apply(config_.disjunction(), {std::move(lhs), conjunction()});
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (is_punct("&")) {
      ++pos_;
      lhs = Formula::apply(config_.conjunction(), {std::move(lhs), unary()});
    }
    return lhs;
  }

  Formula unary() {
    if (is_ident("not")) {
      ++pos_;
      return Formula::weak_neg(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) return Formula::constant(number());
    if (is_punct("(")) {
      ++pos_;
      Formula inner = body();
      expect_punct(")");
      return inner;
    }
    if (t.kind == Token::Kind::ident && t.text == "geq" && is_punct("[", 1)) {
      pos_ += 2;
      TruthValue c = number();
      expect_punct("]");
      expect_punct("(");
      Formula arg = body();
      expect_punct(")");
      return Formula::apply(threshold_id(c), {std::move(arg)});
    }
    if (t.kind == Token::Kind::ident && is_punct("(", 1) && t.text != "not" && t.text != "neg") {
      std::string id = t.text;
      pos_ += 2;
      std::optional<Connective> conn;
      try {
        conn = config_.connective(id);
      } catch (const ConfigError&) {
      }
      if (!conn) fail("unknown connective '" + id + "' for lattice " + config_.lattice().name(), &t);
      std::vector<Formula> args;
      if (!is_punct(")")) {
        args.push_back(body());
        while (is_punct(",")) {
          ++pos_;
          args.push_back(body());
        }
      }
      expect_punct(")");
      if (args.size() != conn->arity)
        fail("connective '" + id + "' expects " + std::to_string(conn->arity) + " arguments", &t);
      return Formula::apply(id, std::move(args));
    }
    if (t.kind == Token::Kind::ident || is_punct("-")) return Formula::literal(literal());
    fail("expected a formula, found " + describe(t));
  }

  AnnotatedLiteral annotated() {
    AnnotatedLiteral a;
    a.lit = literal();
    expect_punct(":");
    a.bound = number();
    return a;
  }

  SaadRule saad_rule() {
    SaadRule r;
    r.head = annotated();
    if (is_punct(".")) {
      ++pos_;
      return r;
    }
    expect_punct("<-");
    do {
      if (is_ident("not") && !is_punct(":", 1)) {
        ++pos_;
        r.negative.push_back(annotated());
      } else {
        r.positive.push_back(annotated());
      }
    } while (is_punct(",") && (++pos_, true));
    expect_punct(".");
    return r;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Dialect dialect_;
  LatticeConfig config_;
  std::set<std::string> declared_;
  Program core_;
  SaadProgram saad_;
  CornejoProgram cornejo_;
};

}  // namespace detail

inline AnyProgram parse(std::string_view text, Dialect dialect = Dialect::core) {
  return detail::Parser(text, dialect).run();
}

inline Program parse_program(std::string_view text) { return std::get<Program>(parse(text, Dialect::core)); }
inline SaadProgram parse_saad(std::string_view text) { return std::get<SaadProgram>(parse(text, Dialect::saad)); }
inline CornejoProgram parse_cornejo(std::string_view text) {
  return std::get<CornejoProgram>(parse(text, Dialect::cornejo));
}

}  // namespace eflp
