#include "akv/interpreter.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include "akv/checks.hpp"

namespace akv::script {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

using Value = std::variant<Rational, GradedClass, BaseClass, BundleSymbol>;

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "rational";
    case 1: return "graded class";
    case 2: return "base class";
    default: return "symbol";
  }
}

Json value_to_json(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v))
    return Json{{"type", "rational"}, {"value", to_string(*r)}};
  if (const auto* g = std::get_if<GradedClass>(&v))
    return Json{{"type", "graded"}, {"value", graded_to_json(*g)},
                {"text", g->str()}};
  if (const auto* b = std::get_if<BaseClass>(&v))
    return Json{{"type", "base"}, {"value", base_to_json(*b)},
                {"text", b->str()}};
  const auto& s = std::get<BundleSymbol>(v);
  return Json{{"type", "symbol"}, {"value", symbol_to_json(s)}};
}

std::string value_to_text(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  if (const auto* g = std::get_if<GradedClass>(&v)) return g->str();
  if (const auto* b = std::get_if<BaseClass>(&v)) return b->str();
  const auto& s = std::get<BundleSymbol>(v);
  return s.name + ": " + flavor_name(s.flavor) + ", rank " +
         std::to_string(s.rank) + ", c1 = " + s.c1.str() +
         ", c2 = " + s.c2.str();
}

struct Env {
  std::map<std::string, BundleSymbol> symbols;
  std::map<std::string, Rational> vars;
};

class Executor {
 public:
  Executor(const RunOptions& options, Report& report)
      : options_(options), report_(report),
        out_(options.out ? *options.out : std::cout) {}

  // returns false when execution should stop (fail-fast)
  bool run(const std::vector<Stmt>& statements, Env& env) {
    for (const Stmt& st : statements)
      if (!run_statement(st, env)) return false;
    return true;
  }

 private:
  bool run_statement(const Stmt& st, Env& env) {
    if (const auto* sw = std::get_if<SweepStmt>(&st.node)) return run_sweep(*sw, env);
    const auto start = Clock::now();
    try {
      if (const auto* d = std::get_if<DeclareStmt>(&st.node)) {
        run_declare(*d, env);
      } else if (const auto* a = std::get_if<AssumeStmt>(&st.node)) {
        run_assume(*a, env);
      } else if (const auto* c = std::get_if<CheckStmt>(&st.node)) {
        ReportEntry entry = run_check(*c, env, st.loc);
        entry.duration_ms = ms_since(start);
        return push_entry(std::move(entry));
      } else if (const auto* e = std::get_if<EvalStmt>(&st.node)) {
        Value v = eval(e->expr, env);
        ReportEntry entry;
        entry.id = entry_id("eval " + render(e->expr));
        entry.params = bindings_json();
        entry.pass = true;
        entry.payload = value_to_json(v);
        entry.duration_ms = ms_since(start);
        return push_entry(std::move(entry));
      } else if (const auto* p = std::get_if<PrintStmt>(&st.node)) {
        out_ << value_to_text(eval(p->expr, env)) << "\n";
      }
      return true;
    } catch (const Error& err) {
      // Runtime problems become failed entries so one run reports everything.
      ReportEntry entry;
      entry.id = entry_id(statement_id(st));
      entry.params = bindings_json();
      entry.pass = false;
      entry.payload = Json{{"error", err.what()}};
      entry.duration_ms = ms_since(start);
      return push_entry(std::move(entry));
    }
  }

  static std::string statement_id(const Stmt& st) {
    Script single;
    single.statements.push_back(st);
    std::string text = render(single);
    while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
      text.pop_back();
    return text;
  }

  bool run_sweep(const SweepStmt& sw, Env& env) {
    for (long v = sw.lo; v <= sw.hi; ++v) {
      Env child = env;  // per-iteration scope
      child.vars[sw.var] = Rational(v);
      bindings_.emplace_back(sw.var, v);
      const bool keep_going = run(sw.body, child);
      bindings_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  void run_declare(const DeclareStmt& d, Env& env) {
    if (!d.over.empty()) {
      const BundleSymbol& owner = lookup_symbol(d.over, env);
      if (owner.flavor != Flavor::Azumaya)
        throw NotAzumaya("'" + d.over + "' is not an Azumaya symbol");
    }
    const long rank = eval_positive_int(d.rank, env, "rank");
    BundleSymbol sym =
        d.flavor == Flavor::Azumaya ? make_azumaya(d.name, static_cast<int>(rank))
        : d.flavor == Flavor::Tangent
            ? make_tangent(d.name)
            : (rank == 1 && d.rank.kind == Expr::Kind::Number
                   ? make_line(d.name)
                   : make_module(d.name, static_cast<int>(rank)));
    env.symbols.insert_or_assign(d.name, std::move(sym));
  }

  void run_assume(const AssumeStmt& a, Env& env) {
    if (a.kind == AssumeStmt::Kind::C1Zero) {
      BundleSymbol& sym = lookup_symbol(a.lhs, env);
      // imposed by substitution: later uses of the symbol see c1 = 0
      sym = make_bundle(sym.name, sym.rank, GradedClass(), sym.c2, sym.flavor);
      return;
    }
    const BundleSymbol& lhs = lookup_symbol(a.lhs, env);
    const BundleSymbol& rhs = lookup_symbol(a.rhs, env);
    if (lhs.rank != rhs.rank)
      throw RankMismatch("assumed rank(" + a.lhs + ") = rank(" + a.rhs +
                         ") but ranks are " + std::to_string(lhs.rank) +
                         " and " + std::to_string(rhs.rank));
  }

  ReportEntry run_check(const CheckStmt& c, Env& env, SourceLoc loc) {
    const CheckSpec* spec = find_check(c.check);
    if (!spec) throw Error("unknown check '" + c.check + "'");
    auto bound = bind_check_args(c, *spec, loc);

    auto symbol_arg = [&](const char* name) -> const BundleSymbol& {
      return lookup_symbol(bound.at(name)->name, env);
    };
    auto number_arg = [&](const char* name, Rational fallback) {
      auto it = bound.find(name);
      if (it == bound.end()) return fallback;
      return eval_rational(*it->second, env);
    };

    checks::CheckResult result;
    if (c.check == "pairing" || c.check == "pairing_exact") {
      result = checks::pairing(symbol_arg("m"), symbol_arg("n"),
                               symbol_arg("a"), symbol_arg("t"),
                               number_arg("g", Rational(0)),
                               c.check == "pairing_exact");
    } else if (c.check == "isometry") {
      const std::string lemma = bound.at("lemma")->name;
      std::vector<int> dims;
      if (auto it = bound.find("dims"); it != bound.end()) {
        const Expr& tuple = *it->second;
        if (tuple.kind == Expr::Kind::Tuple) {
          for (const Expr& e : tuple.args)
            dims.push_back(static_cast<int>(eval_positive_int(e, env, "dims")));
        } else {
          dims.push_back(static_cast<int>(eval_positive_int(tuple, env, "dims")));
        }
      }
      const long seeds = eval_int_or(bound, "seeds", 50, env);
      const int dims_max = lemma == "natiso" ? 3 : 4;
      result = checks::isometry_suite(lemma, std::move(dims),
                                      static_cast<int>(seeds), dims_max,
                                      options_.seed);
    } else if (c.check == "sqrt_form") {
      result = checks::sqrt_form(symbol_arg("a"));
    } else if (c.check == "ac1_form") {
      result = checks::ac1_form(symbol_arg("m"), symbol_arg("a"));
    } else if (c.check == "azumaya_ch") {
      result = checks::azumaya_ch(symbol_arg("a"));
    } else if (c.check == "hom_consistency") {
      result = checks::hom_consistency(symbol_arg("m"), symbol_arg("n"),
                                       symbol_arg("a"));
    } else if (c.check == "split_oracle") {
      result = checks::split_oracle(
          static_cast<int>(eval_int_or(bound, "seeds", 50, env)), options_.seed);
    } else if (c.check == "ring_axioms") {
      result = checks::ring_axioms(
          static_cast<int>(eval_int_or(bound, "seeds", 200, env)), options_.seed);
    } else {
      throw Error("check '" + c.check + "' is registered but not implemented");
    }

    ReportEntry entry;
    Script single;
    Stmt st;
    st.node = c;
    single.statements.push_back(std::move(st));
    std::string text = render(single);
    while (!text.empty() && text.back() == '\n') text.pop_back();
    entry.id = entry_id(text);
    entry.params = bindings_json();
    entry.pass = result.pass;
    entry.payload = std::move(result.payload);
    return entry;
  }

  // --- expression evaluation ---

  Value eval(const Expr& e, Env& env) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return e.number;
      case Expr::Kind::Ident: {
        if (auto it = env.vars.find(e.name); it != env.vars.end())
          return it->second;
        if (auto it = env.symbols.find(e.name); it != env.symbols.end())
          return it->second;
        throw Error("unknown name '" + e.name + "'");
      }
      case Expr::Kind::Tuple:
        throw Error("tuples are only valid as check arguments");
      case Expr::Kind::Unary: {
        Value v = eval(e.args[0], env);
        if (auto* r = std::get_if<Rational>(&v)) return Rational(-*r);
        if (auto* g = std::get_if<GradedClass>(&v)) return neg(*g);
        if (auto* b = std::get_if<BaseClass>(&v)) return neg(*b);
        throw Error("cannot negate a symbol");
      }
      case Expr::Kind::Binary:
        return eval_binary(e, env);
      case Expr::Kind::Call:
        return eval_call(e, env);
    }
    throw Error("unreachable expression kind");
  }

  Value eval_binary(const Expr& e, Env& env) {
    if (e.op == '^') return eval_pow(e, env);
    Value lhs = eval(e.args[0], env);
    Value rhs = eval(e.args[1], env);

    // promote rationals to scalar graded classes when mixed with one
    if (std::holds_alternative<GradedClass>(lhs) &&
        std::holds_alternative<Rational>(rhs))
      rhs = GradedClass(std::get<Rational>(rhs));
    if (std::holds_alternative<GradedClass>(rhs) &&
        std::holds_alternative<Rational>(lhs) && e.op != '*')
      lhs = GradedClass(std::get<Rational>(lhs));

    if (auto* a = std::get_if<Rational>(&lhs)) {
      if (auto* b = std::get_if<Rational>(&rhs)) {
        switch (e.op) {
          case '+': return Rational(*a + *b);
          case '-': return Rational(*a - *b);
          case '*': return Rational(*a * *b);
        }
      }
      if (e.op == '*') {
        if (auto* g = std::get_if<GradedClass>(&rhs)) return scale(*a, *g);
        if (auto* b = std::get_if<BaseClass>(&rhs)) return scale(*a, *b);
      }
    }
    if (auto* a = std::get_if<GradedClass>(&lhs)) {
      if (auto* b = std::get_if<GradedClass>(&rhs)) {
        switch (e.op) {
          case '+': return add(*a, *b);
          case '-': return sub(*a, *b);
          case '*': return mul(*a, *b);
        }
      }
      if (e.op == '*') {
        if (auto* r = std::get_if<Rational>(&rhs)) return scale(*r, *a);
      }
    }
    if (auto* a = std::get_if<BaseClass>(&lhs)) {
      if (auto* b = std::get_if<BaseClass>(&rhs)) {
        switch (e.op) {
          case '+': return add(*a, *b);
          case '-': return sub(*a, *b);
        }
      }
    }
    throw Error(std::string("operator '") + e.op + "' not defined for " +
                value_kind(lhs) + " and " + value_kind(rhs));
  }

  Value eval_pow(const Expr& e, Env& env) {
    Value base = eval(e.args[0], env);
    const Rational& exp = e.args[1].number;
    if (exp.get_den() != 1) throw Error("exponent must be an integer");
    const long k = exp.get_num().get_si();
    if (auto* r = std::get_if<Rational>(&base)) {
      if (k < 0) {
        if (*r == 0) throw Error("division by zero in power");
        Rational inv = 1 / *r;
        Rational out = 1;
        for (long i = 0; i < -k; ++i) out *= inv;
        return out;
      }
      Rational out = 1;
      for (long i = 0; i < k; ++i) out *= *r;
      return out;
    }
    if (auto* g = std::get_if<GradedClass>(&base)) {
      if (k < 0) throw Error("negative powers of classes: use inv(...)");
      GradedClass out{Rational(1)};
      for (long i = 0; i < k; ++i) out = mul(out, *g);
      return out;
    }
    throw Error("power of a " + value_kind(base));
  }

  Value eval_call(const Expr& e, Env& env) {
    auto arity = [&](std::size_t n) {
      if (e.args.size() != n)
        throw Error("function '" + e.name + "' takes " + std::to_string(n) +
                    " argument(s)");
    };
    auto symbol_at = [&](std::size_t i) -> BundleSymbol {
      Value v = eval(e.args[i], env);
      if (auto* s = std::get_if<BundleSymbol>(&v)) return *s;
      throw Error("function '" + e.name + "' expects a symbol, got " +
                  value_kind(v));
    };
    auto class_at = [&](std::size_t i) -> GradedClass {
      Value v = eval(e.args[i], env);
      if (auto* g = std::get_if<GradedClass>(&v)) return *g;
      if (auto* r = std::get_if<Rational>(&v)) return GradedClass(*r);
      throw Error("function '" + e.name + "' expects a class, got " +
                  value_kind(v));
    };
    auto rational_at = [&](std::size_t i) -> Rational {
      Value v = eval(e.args[i], env);
      if (auto* r = std::get_if<Rational>(&v)) return *r;
      throw Error("function '" + e.name + "' expects a rational, got " +
                  value_kind(v));
    };

    if (e.name == "ch") { arity(1); return chern_character(symbol_at(0)); }
    if (e.name == "td") { arity(1); return todd(symbol_at(0)); }
    if (e.name == "dual") { arity(1); return dual_symbol(symbol_at(0)); }
    if (e.name == "hom") {
      arity(3);
      return hom_a_chern(symbol_at(0), symbol_at(1), symbol_at(2));
    }
    if (e.name == "ach") {
      arity(2);
      return a_chern_character(symbol_at(0), symbol_at(1));
    }
    if (e.name == "ac1") { arity(2); return a_c1(symbol_at(0), symbol_at(1)); }
    if (e.name == "c1") { arity(1); return symbol_at(0).c1; }
    if (e.name == "c2") { arity(1); return symbol_at(0).c2; }
    if (e.name == "rank") { arity(1); return Rational(symbol_at(0).rank); }
    if (e.name == "inv") { arity(1); return invert_unit(class_at(0)); }
    if (e.name == "invsqrt") { arity(1); return invert_sqrt_unit(class_at(0)); }
    if (e.name == "grade") {
      arity(2);
      Rational k = rational_at(1);
      if (k.get_den() != 1) throw Error("grade index must be an integer");
      return grade(class_at(0), static_cast<int>(k.get_num().get_si()));
    }
    if (e.name == "push") { arity(1); return pushforward(class_at(0)); }
    if (e.name == "lambda") {
      arity(3);
      return lambda_c1(symbol_at(0), symbol_at(1), rational_at(2));
    }
    throw Error("unknown function '" + e.name + "'");
  }

  // --- helpers ---

  BundleSymbol& lookup_symbol(const std::string& name, Env& env) {
    auto it = env.symbols.find(name);
    if (it == env.symbols.end())
      throw Error("'" + name + "' is not a declared symbol");
    return it->second;
  }

  Rational eval_rational(const Expr& e, Env& env) {
    Value v = eval(e, env);
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    throw Error("expected a rational value");
  }

  long eval_positive_int(const Expr& e, Env& env, const char* what) {
    Rational r = eval_rational(e, env);
    if (r.get_den() != 1 || sgn(r) <= 0)
      throw Error(std::string(what) + " must be a positive integer, got " +
                  to_string(r));
    return r.get_num().get_si();
  }

  long eval_int_or(const std::map<std::string, const Expr*>& bound,
                   const char* name, long fallback, Env& env) {
    auto it = bound.find(name);
    if (it == bound.end()) return fallback;
    return eval_positive_int(*it->second, env, name);
  }

  std::string entry_id(const std::string& base) const {
    if (bindings_.empty()) return base;
    std::ostringstream out;
    out << base << " [";
    for (std::size_t i = 0; i < bindings_.size(); ++i) {
      if (i) out << ", ";
      out << bindings_[i].first << "=" << bindings_[i].second;
    }
    out << "]";
    return out.str();
  }

  Json bindings_json() const {
    Json j = Json::object();
    for (const auto& [name, value] : bindings_) j[name] = value;
    return j;
  }

  bool push_entry(ReportEntry entry) {
    const bool failed = !entry.pass;
    report_.entries.push_back(std::move(entry));
    return !(failed && options_.fail_fast);
  }

  const RunOptions& options_;
  Report& report_;
  std::ostream& out_;
  std::vector<std::pair<std::string, long>> bindings_;
};

}  // namespace

bool Report::all_pass() const {
  for (const ReportEntry& e : entries)
    if (!e.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json list = Json::array();
  for (const ReportEntry& e : entries)
    list.push_back(Json{{"id", e.id},
                        {"params", e.params},
                        {"verdict", e.pass ? "pass" : "fail"},
                        {"payload", e.payload},
                        {"duration_ms", e.duration_ms}});
  return Json{{"schema", 1}, {"pass", all_pass()}, {"entries", std::move(list)}};
}

std::string Report::summary() const {
  std::ostringstream out;
  int failed = 0;
  for (const ReportEntry& e : entries) {
    out << (e.pass ? "[PASS] " : "[FAIL] ") << e.id << "\n";
    if (!e.pass) {
      ++failed;
      if (e.payload.contains("error"))
        out << "       " << e.payload["error"].get<std::string>() << "\n";
    }
  }
  out << entries.size() << " checks, " << failed << " failed\n";
  return out.str();
}

Report execute(const Script& s, const RunOptions& options) {
  Report report;
  Env env;
  Executor exec(options, report);
  exec.run(s.statements, env);
  return report;
}

// ---------------------------------------------------------------------------
// canned suites

namespace {

void add_entry(Report& report, const std::string& id, Json params,
               const checks::CheckResult& result, double ms) {
  report.entries.push_back(
      ReportEntry{id, std::move(params), result.pass, result.payload, ms});
}

void run_timed(Report& report, const std::string& id, Json params,
               const std::function<checks::CheckResult()>& fn) {
  const auto start = Clock::now();
  try {
    checks::CheckResult r = fn();
    add_entry(report, id, std::move(params), r, ms_since(start));
  } catch (const Error& err) {
    checks::CheckResult r;
    r.pass = false;
    r.payload = Json{{"error", err.what()}};
    add_entry(report, id, std::move(params), r, ms_since(start));
  }
}

}  // namespace

Report selftest(int seeds, int dims_max, std::uint64_t seed) {
  Report report;
  // section 1: isometry residual suites
  for (const char* lemma :
       {"iota", "bidual", "riesz", "alpha", "swap", "trace", "natiso"}) {
    const int cap = std::string(lemma) == "natiso" ? std::min(dims_max, 3) : dims_max;
    run_timed(report, std::string("isometry(") + lemma + ")",
              Json{{"seeds", seeds}, {"dims_max", cap}}, [&, lemma, cap] {
                return checks::isometry_suite(lemma, {}, seeds, cap, seed);
              });
  }

  // sections 2-3: exact identities, swept over the Morita rank
  for (int n = 1; n <= 8; ++n) {
    const int rank = n * n;
    BundleSymbol a = make_azumaya("A", rank);
    BundleSymbol m = make_module("M", rank);
    BundleSymbol nn = make_module("N", rank);
    BundleSymbol t = make_tangent("T");
    Json params{{"n", n}};

    run_timed(report, "azumaya_ch(A) [n=" + std::to_string(n) + "]", params,
              [&] { return checks::azumaya_ch(a); });
    run_timed(report, "sqrt_form(A) [n=" + std::to_string(n) + "]", params,
              [&] { return checks::sqrt_form(a); });
    run_timed(report, "ac1_form(M, A) [n=" + std::to_string(n) + "]", params,
              [&] { return checks::ac1_form(m, a); });
    run_timed(report, "hom_consistency(M, N, A) [n=" + std::to_string(n) + "]",
              params, [&] { return checks::hom_consistency(m, nn, a); });
    for (int g = 0; g <= 3; ++g) {
      Json p2{{"n", n}, {"g", g}};
      run_timed(report,
                "pairing_exact(M, N, A, T, g=" + std::to_string(g) + ") [n=" +
                    std::to_string(n) + "]",
                p2, [&, g] {
                  return checks::pairing(m, nn, a, t, Rational(g), true);
                });
    }
  }

  run_timed(report, "split_oracle(seeds=50)", Json{{"seeds", 50}},
            [&] { return checks::split_oracle(50, seed); });
  run_timed(report, "ring_axioms(seeds=200)", Json{{"seeds", 200}},
            [&] { return checks::ring_axioms(200, seed); });
  return report;
}

Report sweep_pairing(int n_max, const std::vector<Rational>& genus_list) {
  Report report;
  for (int n = 1; n <= n_max; ++n) {
    const int rank = n * n;
    BundleSymbol a = make_azumaya("A", rank);
    BundleSymbol m = make_module("M", rank);
    BundleSymbol nn = make_module("N", rank);
    BundleSymbol t = make_tangent("T");
    for (const Rational& g : genus_list) {
      run_timed(report,
                "pairing_exact(M, N, A, T, g=" + to_string(g) + ") [n=" +
                    std::to_string(n) + "]",
                Json{{"n", n}, {"g", to_string(g)}},
                [&] { return checks::pairing(m, nn, a, t, g, true); });
    }
  }
  return report;
}

}  // namespace akv::script
