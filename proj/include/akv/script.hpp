#ifndef AKV_SCRIPT_HPP
#define AKV_SCRIPT_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "akv/chern.hpp"
#include "akv/errors.hpp"
#include "akv/rational.hpp"

namespace akv::script {

struct SourceLoc {
  int line = 1, col = 1;
};

// Expression AST. Rational literals ("3", "3/4"), identifiers, calls,
// parenthesized tuples, unary minus, and the binary operators + - * ^.
// Unary minus over a literal is folded into the literal by the parser, so a
// rendered negative number round-trips to the same node.
struct Expr {
  enum class Kind { Number, Ident, Call, Tuple, Unary, Binary };

  Kind kind = Kind::Number;
  Rational number = 0;     // Number
  std::string name;        // Ident, Call
  char op = 0;             // Unary ('-'), Binary ('+','-','*','^')
  std::vector<Expr> args;  // Call arguments, Tuple elements, Unary/Binary operands
  SourceLoc loc;

  static Expr make_number(Rational v);
  static Expr make_ident(std::string n);
};

bool operator==(const Expr& a, const Expr& b);  // structural, locations ignored

// One check argument: positional (name empty) or named.
struct Arg {
  std::string name;
  Expr value;
};
bool operator==(const Arg& a, const Arg& b);

struct DeclareStmt {
  Flavor flavor = Flavor::Plain;  // Plain is used for "line"
  std::string name;
  Expr rank;         // tangent/line have implicit rank 1
  std::string over;  // owning algebra for module/line; may be empty for line
};
bool operator==(const DeclareStmt& a, const DeclareStmt& b);

// Supported relations: c1(X) = 0, and rank(X) = rank(Y).
struct AssumeStmt {
  enum class Kind { C1Zero, RankEq };
  Kind kind = Kind::C1Zero;
  std::string lhs, rhs;  // rhs used by RankEq
};
bool operator==(const AssumeStmt& a, const AssumeStmt& b);

struct CheckStmt {
  std::string check;
  std::vector<Arg> args;
};
bool operator==(const CheckStmt& a, const CheckStmt& b);

struct EvalStmt {
  Expr expr;
};
bool operator==(const EvalStmt& a, const EvalStmt& b);

struct Stmt;

struct SweepStmt {
  std::string var;
  long lo = 0, hi = 0;  // inclusive
  std::vector<Stmt> body;
};
bool operator==(const SweepStmt& a, const SweepStmt& b);

struct PrintStmt {
  Expr expr;
};
bool operator==(const PrintStmt& a, const PrintStmt& b);

struct Stmt {
  std::variant<DeclareStmt, AssumeStmt, CheckStmt, EvalStmt, SweepStmt, PrintStmt> node;
  SourceLoc loc;
};
bool operator==(const Stmt& a, const Stmt& b);

struct Script {
  std::vector<Stmt> statements;
};
bool operator==(const Script& a, const Script& b);

// Parses (and resolves) a script: LL(1) grammar, whitespace-insensitive,
// '#' line comments. Throws SyntaxError with location and the expected-token
// set, or UseBeforeDeclare/ResolveError from the resolution pass.
Script parse(std::string_view source);

// Canonical text form; parse(render(parse(s))) == parse(s).
std::string render(const Script& s);
std::string render(const Expr& e);

// ---- check registry ----------------------------------------------------
// Every check the CLI exposes is backed by a named module-level invariant.
// The registry drives both argument resolution and execution.

enum class ArgKind { Symbol, Selector, Number, Tuple };

struct ParamSpec {
  std::string name;
  ArgKind kind = ArgKind::Number;
  bool required = true;
};

struct CheckSpec {
  std::string name;
  std::vector<ParamSpec> params;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& name);

// Binds positional and named arguments against the spec; throws ResolveError
// on arity or naming problems. Missing optional parameters are absent from
// the result.
std::map<std::string, const Expr*> bind_check_args(const CheckStmt& stmt,
                                                   const CheckSpec& spec,
                                                   SourceLoc loc);

}  // namespace akv::script

#endif
