#include "pltlbmc/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pltlbmc {

namespace {
Expr node(EK k, std::string name = {}, Expr a = nullptr, Expr b = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
}  // namespace

Expr e_var(const std::string& n) { return node(EK::Var, n); }
Expr e_next(const std::string& n) { return node(EK::NextVar, n); }
Expr e_true() {
  static Expr t = node(EK::True);
  return t;
}
Expr e_false() {
  static Expr f = node(EK::False);
  return f;
}
Expr e_not(Expr a) { return node(EK::Not, {}, std::move(a)); }
Expr e_and(Expr a, Expr b) { return node(EK::And, {}, std::move(a), std::move(b)); }
Expr e_or(Expr a, Expr b) { return node(EK::Or, {}, std::move(a), std::move(b)); }
Expr e_implies(Expr a, Expr b) { return node(EK::Implies, {}, std::move(a), std::move(b)); }
Expr e_iff(Expr a, Expr b) { return node(EK::Iff, {}, std::move(a), std::move(b)); }

Expr e_and_all(const std::vector<Expr>& xs) {
  if (xs.empty()) return e_true();
  Expr r = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) r = e_and(r, xs[i]);
  return r;
}
Expr e_or_all(const std::vector<Expr>& xs) {
  if (xs.empty()) return e_false();
  Expr r = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) r = e_or(r, xs[i]);
  return r;
}

std::string to_string(const Expr& e) {
  switch (e->kind) {
    case EK::Var: return e->name;
    case EK::NextVar: return "next(" + e->name + ")";
    case EK::True: return "true";
    case EK::False: return "false";
    case EK::Not: return "!" + to_string(e->a);
    case EK::And: return "(" + to_string(e->a) + " & " + to_string(e->b) + ")";
    case EK::Or: return "(" + to_string(e->a) + " | " + to_string(e->b) + ")";
    case EK::Implies: return "(" + to_string(e->a) + " -> " + to_string(e->b) + ")";
    case EK::Iff: return "(" + to_string(e->a) + " <-> " + to_string(e->b) + ")";
  }
  return "?";
}

ModelError::ModelError(ModelErrorKind k, const std::string& msg, int line)
    : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
      kind(k),
      line(line) {}

int SymbolicModel::var_index(const std::string& n) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == n) return static_cast<int>(i);
  return -1;
}

const Expr* SymbolicModel::define(const std::string& n) const {
  for (auto& [name, e] : defines)
    if (name == n) return &e;
  return nullptr;
}

namespace {

void collect_names(const Expr& e, bool under_next, std::vector<std::pair<std::string, bool>>& out) {
  if (!e) return;
  if (e->kind == EK::Var) out.push_back({e->name, under_next});
  if (e->kind == EK::NextVar) out.push_back({e->name, true});
  collect_names(e->a, under_next, out);
  collect_names(e->b, under_next, out);
}

bool contains_next(const Expr& e) {
  if (!e) return false;
  return e->kind == EK::NextVar || contains_next(e->a) || contains_next(e->b);
}

void flatten_and(const Expr& e, std::vector<Expr>& out) {
  if (e->kind == EK::And) {
    flatten_and(e->a, out);
    flatten_and(e->b, out);
  } else if (e->kind != EK::True) {
    out.push_back(e);
  }
}

}  // namespace

void SymbolicModel::validate() const {
  std::set<std::string> seen;
  for (auto& v : vars)
    if (!seen.insert(v).second)
      throw ModelError(ModelErrorKind::Duplicate, "duplicate name '" + v + "'");
  for (auto& [n, e] : defines)
    if (!seen.insert(n).second)
      throw ModelError(ModelErrorKind::Duplicate, "duplicate name '" + n + "'");
  for (auto& i : inputs)
    if (var_index(i) < 0)
      throw ModelError(ModelErrorKind::UndefinedIdentifier, "undefined input '" + i + "'");

  auto check = [&](const Expr& e, bool allow_next, const char* where) {
    if (!allow_next && contains_next(e))
      throw ModelError(ModelErrorKind::NextOutsideTrans,
                       std::string("next() outside TRANS in ") + where);
    std::vector<std::pair<std::string, bool>> names;
    collect_names(e, false, names);
    for (auto& [n, nx] : names)
      if (!has_name(n))
        throw ModelError(ModelErrorKind::UndefinedIdentifier,
                         "undefined identifier '" + n + "' in " + where);
  };
  check(init, false, "INIT");
  check(trans, true, "TRANS");
  for (auto& f : fairness) check(f, false, "FAIRNESS");
  for (auto& [n, e] : defines) check(e, false, ("DEFINE " + n).c_str());

  // cycle detection over define references
  std::map<std::string, int> color;
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    color[n] = 1;
    std::vector<std::pair<std::string, bool>> names;
    collect_names(*define(n), false, names);
    for (auto& [m, nx] : names) {
      if (!define(m)) continue;
      if (color[m] == 1)
        throw ModelError(ModelErrorKind::CyclicDefine, "cyclic DEFINE involving '" + m + "'");
      if (color[m] == 0) dfs(m);
    }
    color[n] = 2;
  };
  for (auto& [n, e] : defines)
    if (color[n] == 0) dfs(n);
}

// ---------------------------------------------------------------- parsing

namespace {

struct ExprParser {
  const std::string& s;
  size_t p = 0;
  int line;
  bool allow_next;

  [[noreturn]] void fail(const std::string& msg) {
    throw ModelError(ModelErrorKind::Syntax,
                     "syntax error: " + msg + " at column " + std::to_string(p + 1), line);
  }
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(const char* tok) {
    ws();
    size_t n = std::char_traits<char>::length(tok);
    if (s.compare(p, n, tok) == 0) {
      p += n;
      return true;
    }
    return false;
  }
  static bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '=';
  }
  std::string ident() {
    ws();
    if (p >= s.size() || !id_start(s[p])) fail("expected identifier");
    size_t b = p;
    while (p < s.size() && id_char(s[p])) ++p;
    return s.substr(b, p - b);
  }

  Expr parse_all() {
    Expr e = iff();
    ws();
    if (p != s.size()) fail("unexpected '" + s.substr(p, 1) + "'");
    return e;
  }
  Expr iff() {
    Expr l = impl();
    while (eat("<->")) l = e_iff(l, impl());
    return l;
  }
  Expr impl() {
    Expr l = disj();
    if (eat("->")) return e_implies(l, impl());
    return l;
  }
  Expr disj() {
    Expr l = conj();
    while (eat("|")) l = e_or(l, conj());
    return l;
  }
  Expr conj() {
    Expr l = unary();
    while (eat("&")) l = e_and(l, unary());
    return l;
  }
  Expr unary() {
    if (eat("!")) return e_not(unary());
    return primary();
  }
  Expr primary() {
    if (eat("(")) {
      Expr e = iff();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    ws();
    if (p >= s.size()) fail("unexpected end of expression");
    std::string id = ident();
    if (id == "true") return e_true();
    if (id == "false") return e_false();
    if (id == "next") {
      if (!eat("(")) fail("expected '(' after next");
      if (!allow_next)
        throw ModelError(ModelErrorKind::NextOutsideTrans, "next() outside TRANS", line);
      std::string n = ident();
      if (!eat(")")) fail("expected ')'");
      return e_next(n);
    }
    return e_var(id);
  }
};

Expr parse_expr(const std::string& text, int line, bool allow_next) {
  ExprParser ep{text, 0, line, allow_next};
  return ep.parse_all();
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"VAR",    "INPUT",    "INIT", "TRANS",
                                          "DEFINE", "FAIRNESS", "SPEC"};
  return k;
}

bool valid_ident(const std::string& n) {
  if (n.empty() || !ExprParser::id_start(n[0])) return false;
  return std::all_of(n.begin(), n.end(), ExprParser::id_char);
}

}  // namespace

ParsedModel parse_model(const std::string& text) {
  struct Directive {
    std::string kw, body;
    int line;
  };
  std::vector<Directive> ds;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (keywords().count(first)) {
      std::string rest;
      std::getline(ls, rest);
      ds.push_back({first, rest, lineno});
    } else {
      if (ds.empty())
        throw ModelError(ModelErrorKind::Syntax, "syntax error: expected a directive", lineno);
      ds.back().body += " " + raw;
    }
  }

  ParsedModel pm;
  SymbolicModel& m = pm.model;
  std::vector<Expr> inits, transes;
  std::vector<std::pair<Expr, int>> placed;
  for (auto& d : ds) {
    if (d.kw == "VAR" || d.kw == "INPUT") {
      std::istringstream ns(d.body);
      std::string n;
      bool any = false;
      while (ns >> n) {
        any = true;
        if (!valid_ident(n))
          throw ModelError(ModelErrorKind::Syntax, "syntax error: bad name '" + n + "'", d.line);
        if (m.var_index(n) < 0) m.vars.push_back(n);
        else if (d.kw == "VAR")
          throw ModelError(ModelErrorKind::Duplicate, "duplicate name '" + n + "'", d.line);
        if (d.kw == "INPUT") m.inputs.push_back(n);
      }
      if (!any)
        throw ModelError(ModelErrorKind::Syntax, "syntax error: " + d.kw + " needs names",
                         d.line);
    } else if (d.kw == "INIT") {
      inits.push_back(parse_expr(d.body, d.line, false));
      placed.push_back({inits.back(), d.line});
    } else if (d.kw == "TRANS") {
      transes.push_back(parse_expr(d.body, d.line, true));
      placed.push_back({transes.back(), d.line});
    } else if (d.kw == "FAIRNESS") {
      m.fairness.push_back(parse_expr(d.body, d.line, false));
      placed.push_back({m.fairness.back(), d.line});
    } else if (d.kw == "DEFINE") {
      auto pos = d.body.find(":=");
      if (pos == std::string::npos)
        throw ModelError(ModelErrorKind::Syntax, "syntax error: DEFINE needs ':='", d.line);
      std::string name = d.body.substr(0, pos);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (!valid_ident(name))
        throw ModelError(ModelErrorKind::Syntax, "syntax error: bad define name '" + name + "'",
                         d.line);
      m.defines.push_back({name, parse_expr(d.body.substr(pos + 2), d.line, false)});
      placed.push_back({m.defines.back().second, d.line});
    } else if (d.kw == "SPEC") {
      std::string body = d.body;
      body.erase(0, body.find_first_not_of(" \t"));
      if (pm.spec)
        throw ModelError(ModelErrorKind::Syntax, "syntax error: more than one SPEC", d.line);
      pm.spec = body;
    }
  }
  for (auto& [e, line] : placed) {
    std::vector<std::pair<std::string, bool>> names;
    collect_names(e, false, names);
    for (auto& [n, nx] : names)
      if (!m.has_name(n))
        throw ModelError(ModelErrorKind::UndefinedIdentifier, "undefined identifier '" + n + "'", line);
  }
  m.init = e_and_all(inits);
  m.trans = e_and_all(transes);
  m.validate();
  return pm;
}

ParsedModel load_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_model(ss.str());
}

std::string write_model(const SymbolicModel& m, const std::optional<std::string>& spec) {
  std::ostringstream o;
  std::set<std::string> inputs(m.inputs.begin(), m.inputs.end());
  std::vector<std::string> plain;
  for (auto& v : m.vars)
    if (!inputs.count(v)) plain.push_back(v);
  auto names = [&](const char* kw, const std::vector<std::string>& xs) {
    if (xs.empty()) return;
    o << kw;
    for (auto& x : xs) o << ' ' << x;
    o << '\n';
  };
  names("VAR", plain);
  names("INPUT", m.inputs);
  for (auto& [n, e] : m.defines) o << "DEFINE " << n << " := " << to_string(e) << '\n';
  o << "INIT " << to_string(m.init) << '\n';
  std::vector<Expr> tc;
  flatten_and(m.trans, tc);
  for (auto& t : tc) o << "TRANS " << to_string(t) << '\n';
  for (auto& f : m.fairness) o << "FAIRNESS " << to_string(f) << '\n';
  if (spec) o << "SPEC " << *spec << '\n';
  return o.str();
}

// ---------------------------------------------------------------- compiled

bool CompiledExpr::eval(int r, uint64_t cur, uint64_t nxt) const {
  const Node& n = nodes[r];
  switch (n.k) {
    case Const: return n.a != 0;
    case Cur: return (cur >> n.a) & 1u;
    case Nxt: return (nxt >> n.a) & 1u;
    case Not: return !eval(n.a, cur, nxt);
    case And: return eval(n.a, cur, nxt) && eval(n.b, cur, nxt);
    case Or: return eval(n.a, cur, nxt) || eval(n.b, cur, nxt);
    case Implies: return !eval(n.a, cur, nxt) || eval(n.b, cur, nxt);
    case Iff: return eval(n.a, cur, nxt) == eval(n.b, cur, nxt);
  }
  return false;
}

int CompiledExpr::eval3(int r, uint64_t cur, uint64_t ck, uint64_t nxt, uint64_t known) const {
  const Node& n = nodes[r];
  switch (n.k) {
    case Const: return n.a != 0;
    case Cur: return ((ck >> n.a) & 1u) ? static_cast<int>((cur >> n.a) & 1u) : 2;
    case Nxt: return ((known >> n.a) & 1u) ? static_cast<int>((nxt >> n.a) & 1u) : 2;
    case Not: {
      int v = eval3(n.a, cur, ck, nxt, known);
      return v == 2 ? 2 : 1 - v;
    }
    case And: {
      int x = eval3(n.a, cur, ck, nxt, known);
      if (x == 0) return 0;
      int y = eval3(n.b, cur, ck, nxt, known);
      if (y == 0) return 0;
      return (x == 1 && y == 1) ? 1 : 2;
    }
    case Or: {
      int x = eval3(n.a, cur, ck, nxt, known);
      if (x == 1) return 1;
      int y = eval3(n.b, cur, ck, nxt, known);
      if (y == 1) return 1;
      return (x == 0 && y == 0) ? 0 : 2;
    }
    case Implies: {
      int x = eval3(n.a, cur, ck, nxt, known);
      if (x == 0) return 1;
      int y = eval3(n.b, cur, ck, nxt, known);
      if (y == 1) return 1;
      return (x == 1 && y == 0) ? 0 : 2;
    }
    case Iff: {
      int x = eval3(n.a, cur, ck, nxt, known);
      if (x == 2) return 2;
      int y = eval3(n.b, cur, ck, nxt, known);
      if (y == 2) return 2;
      return x == y;
    }
  }
  return 2;
}

int CompiledExpr::max_next(int r) const {
  const Node& n = nodes[r];
  switch (n.k) {
    case Const:
    case Cur: return -1;
    case Nxt: return n.a;
    case Not: return max_next(n.a);
    default: return std::max(max_next(n.a), max_next(n.b));
  }
}

CompiledModel::CompiledModel(const SymbolicModel& m) {
  nvars = static_cast<int>(m.vars.size());
  std::map<std::pair<std::string, bool>, int> memo;
  auto add = [&](CompiledExpr::K k, int a = -1, int b = -1) {
    dag.nodes.push_back({k, a, b});
    return static_cast<int>(dag.nodes.size()) - 1;
  };
  std::function<int(const Expr&, bool)> comp = [&](const Expr& e, bool primed) -> int {
    switch (e->kind) {
      case EK::True: return add(CompiledExpr::Const, 1);
      case EK::False: return add(CompiledExpr::Const, 0);
      case EK::Var:
      case EK::NextVar: {
        bool pr = primed || e->kind == EK::NextVar;
        int vi = m.var_index(e->name);
        if (vi >= 0) return add(pr ? CompiledExpr::Nxt : CompiledExpr::Cur, vi);
        auto key = std::make_pair(e->name, pr);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const Expr* d = m.define(e->name);
        if (!d)
          throw ModelError(ModelErrorKind::UndefinedIdentifier,
                           "undefined identifier '" + e->name + "'");
        int r = comp(*d, pr);
        memo[key] = r;
        return r;
      }
      case EK::Not: return add(CompiledExpr::Not, comp(e->a, primed));
      case EK::And: {
        int a = comp(e->a, primed), b = comp(e->b, primed);
        return add(CompiledExpr::And, a, b);
      }
      case EK::Or: {
        int a = comp(e->a, primed), b = comp(e->b, primed);
        return add(CompiledExpr::Or, a, b);
      }
      case EK::Implies: {
        int a = comp(e->a, primed), b = comp(e->b, primed);
        return add(CompiledExpr::Implies, a, b);
      }
      case EK::Iff: {
        int a = comp(e->a, primed), b = comp(e->b, primed);
        return add(CompiledExpr::Iff, a, b);
      }
    }
    return -1;
  };
  init = comp(m.init, false);
  std::vector<Expr> tc;
  flatten_and(m.trans, tc);
  for (auto& t : tc) trans_conjuncts.push_back(comp(t, false));
  for (auto& f : m.fairness) fairness.push_back(comp(f, false));
  for (auto& v : m.vars) labels[v] = comp(e_var(v), false);
  for (auto& [n, e] : m.defines) labels[n] = comp(e_var(n), false);
}

int CompiledModel::label(const std::string& name) const {
  auto it = labels.find(name);
  if (it == labels.end())
    throw ModelError(ModelErrorKind::UndefinedIdentifier, "unknown atom '" + name + "'");
  return it->second;
}

// ---------------------------------------------------------------- explicit

int ExplicitModel::label_index(const std::string& name) const {
  for (size_t i = 0; i < label_names.size(); ++i)
    if (label_names[i] == name) return static_cast<int>(i);
  return -1;
}

int ExplicitModel::find_state(uint64_t v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

size_t ExplicitModel::num_edges() const {
  size_t n = 0;
  for (auto& s : succ) n += s.size();
  return n;
}

std::vector<int> ExplicitModel::reachable() const {
  std::vector<uint8_t> seen(states.size(), 0);
  std::vector<int> q;
  for (size_t s = 0; s < states.size(); ++s)
    if (initial[s]) {
      seen[s] = 1;
      q.push_back(static_cast<int>(s));
    }
  for (size_t h = 0; h < q.size(); ++h)
    for (int t : succ[q[h]])
      if (!seen[t]) {
        seen[t] = 1;
        q.push_back(t);
      }
  std::sort(q.begin(), q.end());
  return q;
}

std::string ExplicitModel::state_name(int s) const {
  std::string out;
  for (int j = 0; j < nbits; ++j) {
    if (j) out += ' ';
    out += var_names[j] + "=" + (((states[s] >> j) & 1u) ? "1" : "0");
  }
  return out;
}

ExplicitModel build_explicit(const SymbolicModel& m, int max_bits, bool reachable_only,
                             bool require_total) {
  const int n = static_cast<int>(m.vars.size());
  if (n > max_bits || n > 62)
    throw TooManyBits("model has " + std::to_string(n) + " state bits, limit is " +
                      std::to_string(std::min(max_bits, 62)));
  CompiledModel cm(m);
  const CompiledExpr& dag = cm.dag;

  // Conjuncts bucketed by highest next-state variable they mention.
  std::vector<std::vector<int>> bucket(n + 1);
  for (int c : cm.trans_conjuncts) bucket[dag.max_next(c) + 1].push_back(c);

  auto successors = [&](uint64_t cur) {
    std::vector<uint64_t> out;
    for (int c : bucket[0])
      if (!dag.eval(c, cur, 0)) return out;
    std::function<void(int, uint64_t)> rec = [&](int t, uint64_t nxt) {
      if (t == n) {
        out.push_back(nxt);
        return;
      }
      uint64_t known = (t + 1 >= 64) ? ~0ull : ((1ull << (t + 1)) - 1);
      for (uint64_t bit = 0; bit < 2; ++bit) {
        uint64_t nv = nxt | (bit << t);
        bool ok = true;
        for (int b = t + 1; b <= n && ok; ++b)
          for (int c : bucket[b])
            if (dag.eval3(c, cur, ~0ull, nv, known) == 0) {
              ok = false;
              break;
            }
        if (ok) rec(t + 1, nv);
      }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
  };

  auto initials = [&]() {
    std::vector<uint64_t> out;
    std::function<void(int, uint64_t)> rec = [&](int t, uint64_t cur) {
      if (t == n) {
        if (dag.eval(cm.init, cur, 0)) out.push_back(cur);
        return;
      }
      uint64_t known = (1ull << (t + 1)) - 1;
      for (uint64_t bit = 0; bit < 2; ++bit) {
        uint64_t cv = cur | (bit << t);
        if (dag.eval3(cm.init, cv, known, 0, 0) != 0) rec(t + 1, cv);
      }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
  };

  ExplicitModel em;
  em.nbits = n;
  em.var_names = m.vars;
  std::vector<std::vector<uint64_t>> succ_vals;
  if (!reachable_only) {
    uint64_t total = 1ull << n;
    em.states.resize(total);
    for (uint64_t s = 0; s < total; ++s) {
      em.states[s] = s;
      em.index_[s] = static_cast<int>(s);
    }
    em.initial.assign(total, 0);
    for (uint64_t s = 0; s < total; ++s) em.initial[s] = dag.eval(cm.init, s, 0);
    succ_vals.resize(total);
    for (uint64_t s = 0; s < total; ++s) succ_vals[s] = successors(s);
  } else {
    std::vector<uint64_t> init_vals = initials();
    for (uint64_t v : init_vals) {
      em.index_[v] = static_cast<int>(em.states.size());
      em.states.push_back(v);
    }
    for (size_t h = 0; h < em.states.size(); ++h) {
      auto sv = successors(em.states[h]);
      for (uint64_t t : sv)
        if (!em.index_.count(t)) {
          em.index_[t] = static_cast<int>(em.states.size());
          em.states.push_back(t);
        }
      succ_vals.push_back(std::move(sv));
    }
    em.initial.assign(em.states.size(), 0);
    for (size_t i = 0; i < init_vals.size(); ++i) em.initial[i] = 1;
  }
  em.succ.resize(em.states.size());
  for (size_t s = 0; s < em.states.size(); ++s) {
    for (uint64_t t : succ_vals[s]) em.succ[s].push_back(em.index_.at(t));
    if (require_total && em.succ[s].empty()) {
      std::string name;
      for (int j = 0; j < n; ++j)
        name += (j ? " " : "") + m.vars[j] + "=" + std::to_string((em.states[s] >> j) & 1u);
      throw TotalityError("transition relation is not total: deadlocked state {" + name + "}",
                          em.states[s]);
    }
  }
  for (auto& v : m.vars) em.label_names.push_back(v);
  for (auto& [d, e] : m.defines) em.label_names.push_back(d);
  em.labels.resize(em.label_names.size());
  for (size_t l = 0; l < em.label_names.size(); ++l) {
    int r = cm.labels.at(em.label_names[l]);
    em.labels[l].resize(em.states.size());
    for (size_t s = 0; s < em.states.size(); ++s) em.labels[l][s] = dag.eval(r, em.states[s], 0);
  }
  for (int f : cm.fairness) {
    std::vector<uint8_t> fs(em.states.size());
    for (size_t s = 0; s < em.states.size(); ++s) fs[s] = dag.eval(f, em.states[s], 0);
    em.fair.push_back(std::move(fs));
  }
  return em;
}

ExplicitModel explicit_expand(const SymbolicModel& m, int max_bits) {
  return build_explicit(m, max_bits, false, true);
}

ExplicitModel explicit_expand(const SymbolicModel& m, const ExpandOptions& opt) {
  return build_explicit(m, opt.max_bits, opt.reachable_only, opt.require_total);
}

std::set<std::string> input_vars_irrelevant_for_fairness(const SymbolicModel& m) {
  // Names reachable through define expansion, split by next() context.
  std::set<std::string> in_fair, under_next;
  std::function<void(const Expr&, bool, std::set<std::string>&, std::set<std::string>&)> walk =
      [&](const Expr& e, bool nx, std::set<std::string>& plain, std::set<std::string>& primed) {
        if (!e) return;
        if (e->kind == EK::Var || e->kind == EK::NextVar) {
          bool pr = nx || e->kind == EK::NextVar;
          if (const Expr* d = m.define(e->name)) {
            walk(*d, pr, plain, primed);
          } else {
            (pr ? primed : plain).insert(e->name);
          }
          return;
        }
        walk(e->a, nx, plain, primed);
        walk(e->b, nx, plain, primed);
      };
  std::set<std::string> dummy;
  for (auto& f : m.fairness) walk(f, false, in_fair, dummy);
  std::set<std::string> trans_plain;
  walk(m.trans, false, trans_plain, under_next);
  std::set<std::string> out;
  for (auto& i : m.inputs)
    if (!in_fair.count(i) && !under_next.count(i)) out.insert(i);
  return out;
}

bool is_transition_input(const ExplicitModel& em, int var) {
  for (size_t s = 0; s < em.states.size(); ++s) {
    std::set<int> targets(em.succ[s].begin(), em.succ[s].end());
    for (int t : em.succ[s]) {
      int f = em.find_state(em.states[t] ^ (1ull << var));
      if (f < 0 || !targets.count(f)) return false;
    }
  }
  return true;
}

SymbolicModel symbolic_from_graph(int nbits, const std::vector<int>& initial,
                                  const std::vector<std::vector<int>>& succ,
                                  const std::vector<std::vector<int>>& fair_sets) {
  SymbolicModel m;
  for (int j = 0; j < nbits; ++j) m.vars.push_back("b" + std::to_string(j));
  auto cube = [&](int s, bool next) {
    std::vector<Expr> lits;
    for (int j = 0; j < nbits; ++j) {
      Expr v = next ? e_next(m.vars[j]) : e_var(m.vars[j]);
      lits.push_back(((s >> j) & 1) ? v : e_not(v));
    }
    return e_and_all(lits);
  };
  std::vector<Expr> init;
  for (int s : initial) init.push_back(cube(s, false));
  m.init = e_or_all(init);
  std::vector<Expr> tr;
  for (size_t s = 0; s < succ.size(); ++s) {
    std::vector<Expr> ts;
    for (int t : succ[s]) ts.push_back(cube(t, true));
    tr.push_back(e_implies(cube(static_cast<int>(s), false), e_or_all(ts)));
  }
  m.trans = e_and_all(tr);
  for (auto& fs : fair_sets) {
    std::vector<Expr> xs;
    for (int s : fs) xs.push_back(cube(s, false));
    m.fairness.push_back(e_or_all(xs));
  }
  return m;
}

}  // namespace pltlbmc
