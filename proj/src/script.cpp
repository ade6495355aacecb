#include "akv/script.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace akv::script {

// ---------------------------------------------------------------------------
// lexer

namespace {

enum class Tok {
  Ident, Int,
  KwAzumaya, KwModule, KwLine, KwTangent, KwOver, KwRank, KwAssume, KwCheck,
  KwEval, KwSweep, KwPrint, KwIn,
  LParen, RParen, LBrace, RBrace, Comma, Equals, Plus, Minus, Star, Caret,
  Slash, DotDot, End
};

struct Token {
  Tok type = Tok::End;
  std::string text;
  long value = 0;  // Int
  SourceLoc loc;
};

const std::map<std::string, Tok, std::less<>>& keyword_table() {
  static const std::map<std::string, Tok, std::less<>> table = {
      {"azumaya", Tok::KwAzumaya}, {"module", Tok::KwModule},
      {"line", Tok::KwLine},       {"tangent", Tok::KwTangent},
      {"over", Tok::KwOver},       {"rank", Tok::KwRank},
      {"assume", Tok::KwAssume},   {"check", Tok::KwCheck},
      {"eval", Tok::KwEval},       {"sweep", Tok::KwSweep},
      {"print", Tok::KwPrint},     {"in", Tok::KwIn},
  };
  return table;
}

std::string token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::KwAzumaya: return "'azumaya'";
    case Tok::KwModule: return "'module'";
    case Tok::KwLine: return "'line'";
    case Tok::KwTangent: return "'tangent'";
    case Tok::KwOver: return "'over'";
    case Tok::KwRank: return "'rank'";
    case Tok::KwAssume: return "'assume'";
    case Tok::KwCheck: return "'check'";
    case Tok::KwEval: return "'eval'";
    case Tok::KwSweep: return "'sweep'";
    case Tok::KwPrint: return "'print'";
    case Tok::KwIn: return "'in'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::DotDot: return "'..'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t = next_token();
      out.push_back(t);
      if (t.type == Tok::End) break;
    }
    return out;
  }

 private:
  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  Token next_token() {
    SourceLoc loc{line_, col_};
    if (pos_ >= src_.size()) return Token{Tok::End, "", 0, loc};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        word += src_[pos_++];
        ++col_;
      }
      auto kw = keyword_table().find(word);
      if (kw != keyword_table().end()) return Token{kw->second, word, 0, loc};
      return Token{Tok::Ident, std::move(word), 0, loc};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_++];
        ++col_;
      }
      long value = 0;
      try {
        value = std::stol(digits);
      } catch (const std::out_of_range&) {
        throw SyntaxError("integer literal out of range", loc.line, loc.col);
      }
      return Token{Tok::Int, std::move(digits), value, loc};
    }
    auto punct = [&](Tok t) {
      ++pos_;
      ++col_;
      return Token{t, std::string(1, c), 0, loc};
    };
    switch (c) {
      case '(': return punct(Tok::LParen);
      case ')': return punct(Tok::RParen);
      case '{': return punct(Tok::LBrace);
      case '}': return punct(Tok::RBrace);
      case ',': return punct(Tok::Comma);
      case '=': return punct(Tok::Equals);
      case '+': return punct(Tok::Plus);
      case '-': return punct(Tok::Minus);
      case '*': return punct(Tok::Star);
      case '^': return punct(Tok::Caret);
      case '/': return punct(Tok::Slash);
      case '.':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
          pos_ += 2;
          col_ += 2;
          return Token{Tok::DotDot, "..", 0, loc};
        }
        throw SyntaxError("stray '.'", loc.line, loc.col);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          loc.line, loc.col);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

// ---------------------------------------------------------------------------
// AST helpers

Expr Expr::make_number(Rational v) {
  Expr e;
  e.kind = Kind::Number;
  e.number = std::move(v);
  return e;
}

Expr Expr::make_ident(std::string n) {
  Expr e;
  e.kind = Kind::Ident;
  e.name = std::move(n);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Ident: return a.name == b.name;
    case Expr::Kind::Call: return a.name == b.name && a.args == b.args;
    case Expr::Kind::Tuple: return a.args == b.args;
    case Expr::Kind::Unary:
    case Expr::Kind::Binary: return a.op == b.op && a.args == b.args;
  }
  return false;
}

bool operator==(const Arg& a, const Arg& b) {
  return a.name == b.name && a.value == b.value;
}
bool operator==(const DeclareStmt& a, const DeclareStmt& b) {
  return a.flavor == b.flavor && a.name == b.name && a.rank == b.rank &&
         a.over == b.over;
}
bool operator==(const AssumeStmt& a, const AssumeStmt& b) {
  return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs;
}
bool operator==(const CheckStmt& a, const CheckStmt& b) {
  return a.check == b.check && a.args == b.args;
}
bool operator==(const EvalStmt& a, const EvalStmt& b) { return a.expr == b.expr; }
bool operator==(const SweepStmt& a, const SweepStmt& b) {
  return a.var == b.var && a.lo == b.lo && a.hi == b.hi && a.body == b.body;
}
bool operator==(const PrintStmt& a, const PrintStmt& b) { return a.expr == b.expr; }
bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }
bool operator==(const Script& a, const Script& b) {
  return a.statements == b.statements;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Script parse_script() {
    Script s;
    while (peek().type != Tok::End) s.statements.push_back(parse_statement());
    return s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError("expected " + expected + ", got " + token_name(t.type) +
                          (t.type == Tok::Ident ? " '" + t.text + "'" : ""),
                      t.loc.line, t.loc.col);
  }

  Token expect(Tok type) {
    if (peek().type != type) fail(token_name(type));
    return advance();
  }

  std::string expect_ident() { return expect(Tok::Ident).text; }

  Stmt parse_statement() {
    SourceLoc loc = peek().loc;
    switch (peek().type) {
      case Tok::KwAzumaya: return Stmt{parse_azumaya(), loc};
      case Tok::KwModule: return Stmt{parse_module(), loc};
      case Tok::KwLine: return Stmt{parse_line(), loc};
      case Tok::KwTangent: return Stmt{parse_tangent(), loc};
      case Tok::KwAssume: return Stmt{parse_assume(), loc};
      case Tok::KwCheck: return Stmt{parse_check(), loc};
      case Tok::KwEval: {
        advance();
        return Stmt{EvalStmt{parse_expr()}, loc};
      }
      case Tok::KwSweep: return Stmt{parse_sweep(), loc};
      case Tok::KwPrint: {
        advance();
        return Stmt{PrintStmt{parse_expr()}, loc};
      }
      default:
        fail(
            "one of: 'azumaya', 'module', 'line', 'tangent', 'assume', "
            "'check', 'eval', 'sweep', 'print'");
    }
  }

  DeclareStmt parse_azumaya() {
    advance();
    DeclareStmt d;
    d.flavor = Flavor::Azumaya;
    d.name = expect_ident();
    expect(Tok::KwRank);
    d.rank = parse_expr();
    return d;
  }

  DeclareStmt parse_module() {
    advance();
    DeclareStmt d;
    d.flavor = Flavor::Plain;
    d.name = expect_ident();
    expect(Tok::KwOver);
    d.over = expect_ident();
    expect(Tok::KwRank);
    d.rank = parse_expr();
    return d;
  }

  DeclareStmt parse_line() {
    advance();
    DeclareStmt d;
    d.flavor = Flavor::Plain;
    d.name = expect_ident();
    if (peek().type == Tok::KwOver) {
      advance();
      d.over = expect_ident();
    }
    d.rank = Expr::make_number(1);
    return d;
  }

  DeclareStmt parse_tangent() {
    advance();
    DeclareStmt d;
    d.flavor = Flavor::Tangent;
    d.name = expect_ident();
    d.rank = Expr::make_number(1);
    return d;
  }

  AssumeStmt parse_assume() {
    advance();
    AssumeStmt a;
    if (peek().type == Tok::KwRank) {
      advance();
      a.kind = AssumeStmt::Kind::RankEq;
      expect(Tok::LParen);
      a.lhs = expect_ident();
      expect(Tok::RParen);
      expect(Tok::Equals);
      expect(Tok::KwRank);
      expect(Tok::LParen);
      a.rhs = expect_ident();
      expect(Tok::RParen);
      return a;
    }
    if (peek().type == Tok::Ident && peek().text == "c1") {
      advance();
      a.kind = AssumeStmt::Kind::C1Zero;
      expect(Tok::LParen);
      a.lhs = expect_ident();
      expect(Tok::RParen);
      expect(Tok::Equals);
      Token zero = expect(Tok::Int);
      if (zero.value != 0)
        throw SyntaxError("the only supported c1 relation is c1(X) = 0",
                          zero.loc.line, zero.loc.col);
      return a;
    }
    fail("'c1' or 'rank'");
  }

  CheckStmt parse_check() {
    advance();
    CheckStmt c;
    c.check = expect_ident();
    expect(Tok::LParen);
    if (peek().type != Tok::RParen) {
      c.args.push_back(parse_check_arg());
      while (peek().type == Tok::Comma) {
        advance();
        c.args.push_back(parse_check_arg());
      }
    }
    expect(Tok::RParen);
    return c;
  }

  Arg parse_check_arg() {
    Arg a;
    Expr e = parse_expr();
    // "name = value": an argument that parsed as a bare identifier followed
    // by '=' was actually a parameter name.
    if (e.kind == Expr::Kind::Ident && peek().type == Tok::Equals) {
      advance();
      a.name = e.name;
      a.value = parse_expr();
    } else {
      a.value = std::move(e);
    }
    return a;
  }

  SweepStmt parse_sweep() {
    advance();
    SweepStmt s;
    s.var = expect_ident();
    expect(Tok::KwIn);
    Token lo = expect(Tok::Int);
    expect(Tok::DotDot);
    Token hi = expect(Tok::Int);
    s.lo = lo.value;
    s.hi = hi.value;
    if (s.lo > s.hi)
      throw SyntaxError("empty sweep range", lo.loc.line, lo.loc.col);
    expect(Tok::LBrace);
    while (peek().type != Tok::RBrace) {
      if (peek().type == Tok::End) fail("'}'");
      s.body.push_back(parse_statement());
    }
    expect(Tok::RBrace);
    return s;
  }

  // expr := term { (+|-) term }
  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      char op = advance().text[0];
      Expr rhs = parse_term();
      Expr node;
      node.kind = Expr::Kind::Binary;
      node.op = op;
      node.args = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  // term := unary { * unary }
  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek().type == Tok::Star) {
      advance();
      Expr rhs = parse_unary();
      Expr node;
      node.kind = Expr::Kind::Binary;
      node.op = '*';
      node.args = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  // unary := - unary | power. Minus over a literal folds into the literal.
  Expr parse_unary() {
    if (peek().type == Tok::Minus) {
      SourceLoc loc = advance().loc;
      Expr inner = parse_unary();
      if (inner.kind == Expr::Kind::Number) {
        inner.number = -inner.number;
        return inner;
      }
      Expr node;
      node.kind = Expr::Kind::Unary;
      node.op = '-';
      node.loc = loc;
      node.args = {std::move(inner)};
      return node;
    }
    return parse_power();
  }

  // power := primary [ ^ INT ]
  Expr parse_power() {
    Expr base = parse_primary();
    if (peek().type == Tok::Caret) {
      advance();
      Token exp = expect(Tok::Int);
      Expr node;
      node.kind = Expr::Kind::Binary;
      node.op = '^';
      node.args = {std::move(base), Expr::make_number(exp.value)};
      return node;
    }
    return base;
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Int: {
        Token num = advance();
        // INT [ / INT ]: a rational literal, not a division operator
        if (peek().type == Tok::Slash) {
          advance();
          Token den = expect(Tok::Int);
          if (den.value == 0)
            throw SyntaxError("rational literal with zero denominator",
                              den.loc.line, den.loc.col);
          return Expr::make_number(rat(num.value, den.value));
        }
        return Expr::make_number(num.value);
      }
      case Tok::Ident: {
        Token name = advance();
        if (peek().type == Tok::LParen) {
          advance();
          Expr call;
          call.kind = Expr::Kind::Call;
          call.name = name.text;
          call.loc = name.loc;
          if (peek().type != Tok::RParen) {
            call.args.push_back(parse_expr());
            while (peek().type == Tok::Comma) {
              advance();
              call.args.push_back(parse_expr());
            }
          }
          expect(Tok::RParen);
          return call;
        }
        Expr id = Expr::make_ident(name.text);
        id.loc = name.loc;
        return id;
      }
      case Tok::LParen: {
        advance();
        Expr first = parse_expr();
        if (peek().type == Tok::Comma) {
          Expr tuple;
          tuple.kind = Expr::Kind::Tuple;
          tuple.args.push_back(std::move(first));
          while (peek().type == Tok::Comma) {
            advance();
            tuple.args.push_back(parse_expr());
          }
          expect(Tok::RParen);
          return tuple;
        }
        expect(Tok::RParen);
        return first;
      }
      default:
        fail("integer, identifier, or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// resolution: declaration discipline for symbol and sweep-variable names

class Resolver {
 public:
  void run(const Script& s) {
    scopes_.emplace_back();
    for (const Stmt& st : s.statements) resolve_stmt(st);
  }

 private:
  bool declared(const std::string& name) const {
    for (const auto& scope : scopes_)
      if (scope.count(name)) return true;
    return false;
  }

  void declare(const std::string& name, SourceLoc loc) {
    if (declared(name))
      throw ResolveError("name '" + name + "' declared twice", loc.line, loc.col);
    scopes_.back().insert(name);
  }

  void require_declared(const std::string& name, SourceLoc loc) const {
    if (!declared(name)) throw UseBeforeDeclare(name, loc.line, loc.col);
  }

  void resolve_expr(const Expr& e, SourceLoc loc) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return;
      case Expr::Kind::Ident:
        require_declared(e.name, e.loc.line ? e.loc : loc);
        return;
      case Expr::Kind::Call:
      case Expr::Kind::Tuple:
      case Expr::Kind::Unary:
      case Expr::Kind::Binary:
        for (const Expr& a : e.args) resolve_expr(a, loc);
        return;
    }
  }

  void resolve_stmt(const Stmt& st) {
    if (const auto* d = std::get_if<DeclareStmt>(&st.node)) {
      if (!d->over.empty()) require_declared(d->over, st.loc);
      resolve_expr(d->rank, st.loc);
      declare(d->name, st.loc);
    } else if (const auto* a = std::get_if<AssumeStmt>(&st.node)) {
      require_declared(a->lhs, st.loc);
      if (a->kind == AssumeStmt::Kind::RankEq) require_declared(a->rhs, st.loc);
    } else if (const auto* c = std::get_if<CheckStmt>(&st.node)) {
      const CheckSpec* spec = find_check(c->check);
      if (!spec)
        throw ResolveError("unknown check '" + c->check + "'", st.loc.line,
                           st.loc.col);
      auto bound = bind_check_args(*c, *spec, st.loc);
      for (const ParamSpec& p : spec->params) {
        auto it = bound.find(p.name);
        if (it == bound.end()) continue;
        const Expr& value = *it->second;
        switch (p.kind) {
          case ArgKind::Symbol:
            if (value.kind != Expr::Kind::Ident)
              throw ResolveError("check '" + c->check + "' parameter '" +
                                     p.name + "' expects a symbol name",
                                 st.loc.line, st.loc.col);
            require_declared(value.name, value.loc.line ? value.loc : st.loc);
            break;
          case ArgKind::Selector:
            if (value.kind != Expr::Kind::Ident)
              throw ResolveError("check '" + c->check + "' parameter '" +
                                     p.name + "' expects a selector word",
                                 st.loc.line, st.loc.col);
            break;
          case ArgKind::Number:
          case ArgKind::Tuple:
            resolve_expr(value, st.loc);
            break;
        }
      }
    } else if (const auto* e = std::get_if<EvalStmt>(&st.node)) {
      resolve_expr(e->expr, st.loc);
    } else if (const auto* sw = std::get_if<SweepStmt>(&st.node)) {
      scopes_.emplace_back();
      declare(sw->var, st.loc);
      for (const Stmt& inner : sw->body) resolve_stmt(inner);
      scopes_.pop_back();
    } else if (const auto* p = std::get_if<PrintStmt>(&st.node)) {
      resolve_expr(p->expr, st.loc);
    }
  }

  std::vector<std::set<std::string>> scopes_;
};

}  // namespace

Script parse(std::string_view source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  Script s = parser.parse_script();
  Resolver{}.run(s);
  return s;
}

// ---------------------------------------------------------------------------
// renderer

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Unary:
      return 3;
    case Expr::Kind::Binary:
      if (e.op == '^') return 4;
      if (e.op == '*') return 2;
      return 1;
    default:
      return 5;
  }
}

void render_expr_to(std::ostringstream& out, const Expr& e) {
  auto child = [&](const Expr& c, bool parens) {
    if (parens) out << "(";
    render_expr_to(out, c);
    if (parens) out << ")";
  };
  switch (e.kind) {
    case Expr::Kind::Number:
      out << to_string(e.number);
      return;
    case Expr::Kind::Ident:
      out << e.name;
      return;
    case Expr::Kind::Call: {
      out << e.name << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        render_expr_to(out, e.args[i]);
      }
      out << ")";
      return;
    }
    case Expr::Kind::Tuple: {
      out << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        render_expr_to(out, e.args[i]);
      }
      out << ")";
      return;
    }
    case Expr::Kind::Unary:
      out << "-";
      child(e.args[0], precedence(e.args[0]) < precedence(e));
      return;
    case Expr::Kind::Binary: {
      const int mine = precedence(e);
      if (e.op == '^') {
        // the grammar allows one '^' per power with a primary base
        child(e.args[0], precedence(e.args[0]) < 5);
        out << "^";
        render_expr_to(out, e.args[1]);
        return;
      }
      child(e.args[0], precedence(e.args[0]) < mine);
      out << " " << e.op << " ";
      child(e.args[1], precedence(e.args[1]) <= mine);
      return;
    }
  }
}

void render_stmt_to(std::ostringstream& out, const Stmt& st, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (const auto* d = std::get_if<DeclareStmt>(&st.node)) {
    if (d->flavor == Flavor::Azumaya) {
      out << pad << "azumaya " << d->name << " rank " << render(d->rank);
    } else if (d->flavor == Flavor::Tangent) {
      out << pad << "tangent " << d->name;
    } else if (d->rank.kind == Expr::Kind::Number && d->rank.number == 1 &&
               d->over.empty()) {
      out << pad << "line " << d->name;
    } else if (d->rank.kind == Expr::Kind::Number && d->rank.number == 1) {
      // "line X over A" and "module X over A rank 1" parse to the same node;
      // prefer the shorter form.
      out << pad << "line " << d->name << " over " << d->over;
    } else {
      out << pad << "module " << d->name << " over " << d->over << " rank "
          << render(d->rank);
    }
  } else if (const auto* a = std::get_if<AssumeStmt>(&st.node)) {
    if (a->kind == AssumeStmt::Kind::C1Zero)
      out << pad << "assume c1(" << a->lhs << ") = 0";
    else
      out << pad << "assume rank(" << a->lhs << ") = rank(" << a->rhs << ")";
  } else if (const auto* c = std::get_if<CheckStmt>(&st.node)) {
    out << pad << "check " << c->check << "(";
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      if (i) out << ", ";
      if (!c->args[i].name.empty()) out << c->args[i].name << "=";
      render_expr_to(out, c->args[i].value);
    }
    out << ")";
  } else if (const auto* e = std::get_if<EvalStmt>(&st.node)) {
    out << pad << "eval " << render(e->expr);
  } else if (const auto* sw = std::get_if<SweepStmt>(&st.node)) {
    out << pad << "sweep " << sw->var << " in " << sw->lo << ".." << sw->hi
        << " {\n";
    for (const Stmt& inner : sw->body) {
      render_stmt_to(out, inner, indent + 1);
      out << "\n";
    }
    out << pad << "}";
  } else if (const auto* p = std::get_if<PrintStmt>(&st.node)) {
    out << pad << "print " << render(p->expr);
  }
}

}  // namespace

std::string render(const Expr& e) {
  std::ostringstream out;
  render_expr_to(out, e);
  return out.str();
}

std::string render(const Script& s) {
  std::ostringstream out;
  for (const Stmt& st : s.statements) {
    render_stmt_to(out, st, 0);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// check registry

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = {
      {"pairing",
       {{"m", ArgKind::Symbol, true},
        {"n", ArgKind::Symbol, true},
        {"a", ArgKind::Symbol, true},
        {"t", ArgKind::Symbol, true},
        {"g", ArgKind::Number, false}}},
      {"pairing_exact",
       {{"m", ArgKind::Symbol, true},
        {"n", ArgKind::Symbol, true},
        {"a", ArgKind::Symbol, true},
        {"t", ArgKind::Symbol, true},
        {"g", ArgKind::Number, false}}},
      {"isometry",
       {{"lemma", ArgKind::Selector, true},
        {"dims", ArgKind::Tuple, false},
        {"seeds", ArgKind::Number, false}}},
      {"sqrt_form", {{"a", ArgKind::Symbol, true}}},
      {"ac1_form",
       {{"m", ArgKind::Symbol, true}, {"a", ArgKind::Symbol, true}}},
      {"azumaya_ch", {{"a", ArgKind::Symbol, true}}},
      {"hom_consistency",
       {{"m", ArgKind::Symbol, true},
        {"n", ArgKind::Symbol, true},
        {"a", ArgKind::Symbol, true}}},
      {"split_oracle", {{"seeds", ArgKind::Number, false}}},
      {"ring_axioms", {{"seeds", ArgKind::Number, false}}},
  };
  return registry;
}

const CheckSpec* find_check(const std::string& name) {
  for (const CheckSpec& spec : check_registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

std::map<std::string, const Expr*> bind_check_args(const CheckStmt& stmt,
                                                   const CheckSpec& spec,
                                                   SourceLoc loc) {
  std::map<std::string, const Expr*> bound;
  std::size_t positional = 0;
  bool seen_named = false;
  for (const Arg& arg : stmt.args) {
    if (arg.name.empty()) {
      if (seen_named)
        throw ResolveError("positional argument after named argument in check '" +
                               stmt.check + "'",
                           loc.line, loc.col);
      if (positional >= spec.params.size())
        throw ResolveError("too many arguments for check '" + stmt.check + "'",
                           loc.line, loc.col);
      bound[spec.params[positional].name] = &arg.value;
      ++positional;
    } else {
      seen_named = true;
      bool known = false;
      for (const ParamSpec& p : spec.params) known = known || p.name == arg.name;
      if (!known)
        throw ResolveError("check '" + stmt.check + "' has no parameter '" +
                               arg.name + "'",
                           loc.line, loc.col);
      if (bound.count(arg.name))
        throw ResolveError("duplicate argument '" + arg.name + "' in check '" +
                               stmt.check + "'",
                           loc.line, loc.col);
      bound[arg.name] = &arg.value;
    }
  }
  for (const ParamSpec& p : spec.params)
    if (p.required && !bound.count(p.name))
      throw ResolveError("check '" + stmt.check + "' is missing required argument '" +
                             p.name + "'",
                         loc.line, loc.col);
  return bound;
}

}  // namespace akv::script
