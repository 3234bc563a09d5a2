#include "gft/functorial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gft {

using Tag = FunctorialExpr::Tag;

ExprPtr make_builtin(BuiltinKind kind) {
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Builtin;
  e->builtin = kind;
  return e;
}

ExprPtr make_phi_pi(std::set<std::uint64_t> primes) {
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Builtin;
  e->builtin = BuiltinKind::PhiPi;
  e->primes = std::move(primes);
  return e;
}

ExprPtr make_star(ExprPtr left, ExprPtr right) {
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Star;
  e->children = {std::move(left), std::move(right)};
  return e;
}

ExprPtr make_circ(ExprPtr left, ExprPtr right) {
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Circ;
  e->children = {std::move(left), std::move(right)};
  return e;
}

ExprPtr make_meet(std::vector<ExprPtr> children) {
  if (children.empty()) throw DomainError("meet of empty family");
  if (children.size() == 1) return children.front();
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Meet;
  e->children = std::move(children);
  return e;
}

ExprPtr make_join(std::vector<ExprPtr> children) {
  if (children.empty()) throw DomainError("join of empty family");
  if (children.size() == 1) return children.front();
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Join;
  e->children = std::move(children);
  return e;
}

ExprPtr make_power(ExprPtr base, int k) {
  if (k < 1) throw DomainError("power exponent must be >= 1");
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Power;
  e->children = {std::move(base)};
  e->exponent = k;
  return e;
}

ExprPtr make_omega(ExprPtr base) {
  auto e = std::make_shared<FunctorialExpr>();
  e->tag = Tag::Omega;
  e->children = {std::move(base)};
  return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->tag != b->tag) return false;
  if (a->tag == Tag::Builtin)
    return a->builtin == b->builtin && a->primes == b->primes;
  if (a->exponent != b->exponent) return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!expr_equal(a->children[i], b->children[i])) return false;
  return true;
}

namespace {

std::string builtin_name(const FunctorialExpr& e) {
  switch (e.builtin) {
    case BuiltinKind::F: return "F";
    case BuiltinKind::Fstar: return "Fstar";
    case BuiltinKind::Ftilde: return "Ftilde";
    case BuiltinKind::Phi: return "Phi";
    case BuiltinKind::Soc: return "Soc";
    case BuiltinKind::Triv: return "Triv";
    case BuiltinKind::Id: return "Id";
    case BuiltinKind::PhiPi: {
      std::ostringstream out;
      out << "Phi_pi{";
      bool first = true;
      for (auto p : e.primes) {
        if (!first) out << ',';
        out << p;
        first = false;
      }
      out << '}';
      return out.str();
    }
  }
  return "?";
}

// precedence levels: join=0, meet=1, star/circ=2, power=3, atom=4
int prec_of(const FunctorialExpr& e) {
  switch (e.tag) {
    case Tag::Join: return 0;
    case Tag::Meet: return 1;
    case Tag::Star:
    case Tag::Circ: return 2;
    case Tag::Power:
    case Tag::Omega: return 3;
    case Tag::Builtin: return 4;
  }
  return 4;
}

void print_rec(const FunctorialExpr& e, int min_prec, std::ostream& out) {
  bool need_parens = prec_of(e) < min_prec;
  if (need_parens) out << '(';
  switch (e.tag) {
    case Tag::Builtin:
      out << builtin_name(e);
      break;
    case Tag::Star:
    case Tag::Circ:
      print_rec(*e.children[0], 2, out);
      out << (e.tag == Tag::Star ? " * " : " o ");
      print_rec(*e.children[1], 3, out);  // left-assoc: right child binds tighter
      break;
    case Tag::Meet:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << " & ";
        print_rec(*e.children[i], 2, out);
      }
      break;
    case Tag::Join:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << " | ";
        print_rec(*e.children[i], 1, out);
      }
      break;
    case Tag::Power:
      print_rec(*e.children[0], 4, out);
      out << '^' << e.exponent;
      break;
    case Tag::Omega:
      print_rec(*e.children[0], 4, out);
      out << "^inf";
      break;
  }
  if (need_parens) out << ')';
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::ostringstream out;
  print_rec(*e, 0, out);
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos), 0,
                     static_cast<int>(pos));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  }

  ExprPtr atom() {
    if (eat('(')) {
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    std::string name = ident();
    if (name.empty()) fail("expected functorial atom");
    if (name == "F") return make_builtin(BuiltinKind::F);
    if (name == "Fstar") return make_builtin(BuiltinKind::Fstar);
    if (name == "Ftilde") return make_builtin(BuiltinKind::Ftilde);
    if (name == "Phi") return make_builtin(BuiltinKind::Phi);
    if (name == "Soc") return make_builtin(BuiltinKind::Soc);
    if (name == "Triv") return make_builtin(BuiltinKind::Triv);
    if (name == "Id") return make_builtin(BuiltinKind::Id);
    if (name == "Phi_pi") {
      if (!eat('{')) fail("expected '{' after Phi_pi");
      std::set<std::uint64_t> primes;
      if (peek() == '}') fail("empty prime set in Phi_pi");
      primes.insert(number());
      while (eat(',')) primes.insert(number());
      if (!eat('}')) fail("expected '}' in Phi_pi");
      return make_phi_pi(std::move(primes));
    }
    fail("unknown atom '" + name + "'");
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (eat('^')) {
      skip_ws();
      if (text.compare(pos, 3, "inf") == 0) {
        pos += 3;
        return make_omega(std::move(base));
      }
      std::uint64_t k = number();
      if (k == 0) fail("power exponent must be >= 1");
      return make_power(std::move(base), static_cast<int>(k));
    }
    return base;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        eat('*');
        left = make_star(std::move(left), factor());
      } else if (peek() == 'o') {
        // operator 'o' must stand alone, not start an identifier
        std::size_t save = pos;
        ++pos;
        if (pos < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
          pos = save;
          break;
        }
        left = make_circ(std::move(left), factor());
      } else {
        break;
      }
    }
    return left;
  }

  ExprPtr meet_expr() {
    std::vector<ExprPtr> parts{term()};
    while (eat('&')) parts.push_back(term());
    return make_meet(std::move(parts));
  }

  ExprPtr expr() {
    std::vector<ExprPtr> parts{meet_expr()};
    while (eat('|')) parts.push_back(meet_expr());
    return make_join(std::move(parts));
  }
};

}  // namespace

ExprPtr parse_functorial(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

ElemSet evaluate(const ExprPtr& e, const LocalGroup& g, const Caps& caps,
                 EvalInfo* info) {
  const Ctx& ctx = g.ctx;
  switch (e->tag) {
    case Tag::Builtin:
      switch (e->builtin) {
        case BuiltinKind::F: return fitting(g);
        case BuiltinKind::Fstar: return f_star(g, caps);
        case BuiltinKind::Ftilde: return f_tilde(g, caps);
        case BuiltinKind::Phi: return frattini(g, caps);
        case BuiltinKind::PhiPi: return phi_pi(g, e->primes, caps);
        case BuiltinKind::Soc: return socle(g);
        case BuiltinKind::Triv: return ctx->trivial_set();
        case BuiltinKind::Id: return g.elems;
      }
      throw DomainError("unknown builtin");
    case Tag::Star: {
      ElemSet v1 = evaluate(e->children[0], g, caps, info);
      LocalQuotient q = make_quotient(g, v1, caps);
      ElemSet v2 = evaluate(e->children[1], q.target, caps, info);
      return q.preimage(v2);
    }
    case Tag::Circ: {
      ElemSet v1 = evaluate(e->children[0], g, caps, info);
      return evaluate(e->children[1], sub_local(ctx, v1), caps, info);
    }
    case Tag::Meet: {
      ElemSet acc = evaluate(e->children[0], g, caps, info);
      for (std::size_t i = 1; i < e->children.size(); ++i)
        acc = acc & evaluate(e->children[i], g, caps, info);
      return acc;
    }
    case Tag::Join: {
      ElemSet acc = evaluate(e->children[0], g, caps, info);
      for (std::size_t i = 1; i < e->children.size(); ++i)
        acc = join_sets(ctx, acc, evaluate(e->children[i], g, caps, info), &g.elems);
      return acc;
    }
    case Tag::Power: {
      LocalGroup cur = g;
      ElemSet val = cur.elems;
      for (int i = 0; i < e->exponent; ++i) {
        val = evaluate(e->children[0], cur, caps, info);
        cur = sub_local(ctx, val);
      }
      return val;
    }
    case Tag::Omega: {
      LocalGroup cur = g;
      int iters = 0;
      const int bound = static_cast<int>(g.order()) + 1;
      for (;;) {
        ElemSet val = evaluate(e->children[0], cur, caps, info);
        ++iters;
        if (iters > bound)
          throw DomainError("omega iteration failed to stabilize");
        if (val == cur.elems) break;
        cur = sub_local(ctx, val);
      }
      if (info) info->omega_iterations = iters;
      return cur.elems;
    }
  }
  throw DomainError("unknown expression tag");
}

bool AxiomReport::all_passed() const {
  for (const auto& f : failures)
    if (f) return false;
  return true;
}

namespace {

std::string describe_set(const Ctx& ctx, const ElemSet& s) {
  std::ostringstream out;
  out << "order " << s.count() << " <";
  auto gens = minimal_gens(ctx, s);
  if (gens.empty()) out << "()";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << to_cycles(ctx->perm(gens[i]));
  }
  out << '>';
  return out.str();
}

}  // namespace

AxiomReport check_axioms(const ExprPtr& e, const LocalGroup& g,
                         const std::set<int>& which, const Caps& caps) {
  AxiomReport report;
  const Ctx& ctx = g.ctx;
  ElemSet value = evaluate(e, g, caps);

  bool need_lattice = which.count(1) || which.count(2) || which.count(5);
  std::vector<ElemSet> normals;
  if (need_lattice) normals = normal_lattice(g).members;

  if (which.count(1)) {
    for (const auto& n : normals) {
      LocalQuotient q = make_quotient(g, n, caps);
      ElemSet img = q.image_set(value);
      ElemSet qvalue = evaluate(e, q.target, caps);
      if (!img.subset_of(qvalue)) {
        report.failures[0] = "F1 fails for quotient by N = " + describe_set(ctx, n);
        break;
      }
    }
  }
  if (which.count(2) || which.count(5)) {
    for (const auto& n : normals) {
      ElemSet nvalue = evaluate(e, sub_local(ctx, n), caps);
      if (which.count(2) && !report.failures[1] && !nvalue.subset_of(value))
        report.failures[1] = "F2 fails for N = " + describe_set(ctx, n);
      if (which.count(5) && !report.failures[4] &&
          !(value & n).subset_of(nvalue))
        report.failures[4] = "F5 fails for N = " + describe_set(ctx, n);
      if ((!which.count(2) || report.failures[1]) &&
          (!which.count(5) || report.failures[4]))
        break;
    }
  }
  if (which.count(3)) {
    ElemSet cent = centralizer_in(ctx, g, minimal_gens(ctx, value));
    if (!cent.subset_of(value))
      report.failures[2] =
          "F3 fails: centralizer " + describe_set(ctx, cent) +
          " not inside value " + describe_set(ctx, value);
  }
  if (which.count(4)) {
    ElemSet bound = f_tilde(g, caps);  // preimage of Soc(G/Phi(G))
    if (!value.subset_of(bound))
      report.failures[3] =
          "F4 fails: value " + describe_set(ctx, value) +
          " not inside Soc(G/Phi) preimage " + describe_set(ctx, bound);
  }
  return report;
}

bool values_lattice_distributive(const LocalGroup& g,
                                 const std::vector<ExprPtr>& family,
                                 const Caps& caps) {
  const Ctx& ctx = g.ctx;
  std::vector<ElemSet> values;
  auto add = [&](const ElemSet& s) {
    if (std::find(values.begin(), values.end(), s) == values.end())
      values.push_back(s);
  };
  for (const auto& e : family) add(evaluate(e, g, caps));
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      add(values[i] & values[j]);
      add(join_sets(ctx, values[i], values[j], &g.elems));
    }
  auto meet = [&](const ElemSet& a, const ElemSet& b) { return a & b; };
  auto vee = [&](const ElemSet& a, const ElemSet& b) {
    return join_sets(ctx, a, b, &g.elems);
  };
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values) {
        if (!(meet(a, vee(b, c)) == vee(meet(a, b), meet(a, c)))) return false;
        if (!(vee(a, meet(b, c)) == meet(vee(a, b), vee(a, c)))) return false;
      }
  return true;
}

bool radical_class_membership(const ExprPtr& e, const LocalGroup& g,
                              const Caps& caps) {
  return evaluate(e, g, caps) == g.elems;
}

ElemSet gamma_class_radical(const ExprPtr& e, const LocalGroup& g,
                            const Caps& caps) {
  ElemSet acc = g.ctx->trivial_set();
  for (const auto& n : normal_lattice(g).members)
    if (evaluate(e, sub_local(g.ctx, n), caps) == n)
      acc = join_sets(g.ctx, acc, n, &g.elems);
  return acc;
}

}  // namespace gft
