#include "pltlbmc/pltl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <unordered_set>

namespace pltlbmc {

namespace {

struct Store {
  std::mutex mu;
  std::map<std::tuple<int, std::string, int, int>, const FormulaNode*> index;
  std::deque<FormulaNode> nodes;
};

Store& store() {
  static Store s;
  return s;
}

Formula intern(Op op, const std::string& name, Formula a, Formula b) {
  Store& s = store();
  std::lock_guard<std::mutex> lock(s.mu);
  auto key = std::make_tuple(static_cast<int>(op), name, a ? a->id : -1, b ? b->id : -1);
  auto it = s.index.find(key);
  if (it != s.index.end()) return it->second;
  FormulaNode n;
  n.op = op;
  n.name = name;
  n.a = a;
  n.b = b;
  n.id = static_cast<int>(s.nodes.size());
  int cd = std::max(a ? a->depth : 0, b ? b->depth : 0);
  n.depth = is_past(op) ? cd + 1 : cd;
  n.has_past = is_past(op) || (a && a->has_past) || (b && b->has_past);
  s.nodes.push_back(std::move(n));
  const FormulaNode* p = &s.nodes.back();
  s.index.emplace(key, p);
  return p;
}

}  // namespace

bool is_past(Op op) {
  return op == Op::Prev || op == Op::PrevZ || op == Op::Since || op == Op::Trigger;
}
bool is_future(Op op) { return op == Op::Next || op == Op::Until || op == Op::Release; }
bool is_temporal(Op op) { return is_past(op) || is_future(op); }
bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Until || op == Op::Release ||
         op == Op::Since || op == Op::Trigger;
}

Formula mk_true() { return intern(Op::True, "", nullptr, nullptr); }
Formula mk_false() { return intern(Op::False, "", nullptr, nullptr); }
Formula mk_atom(const std::string& name) { return intern(Op::Atom, name, nullptr, nullptr); }
Formula mk_neg_atom(const std::string& name) {
  return intern(Op::NegAtom, name, nullptr, nullptr);
}
Formula mk(Op op, Formula a, Formula b) {
  if (op == Op::True || op == Op::False || op == Op::Atom || op == Op::NegAtom)
    throw std::invalid_argument("mk: leaf operator");
  if (!a || (is_binary(op) != (b != nullptr)))
    throw std::invalid_argument("mk: wrong arity");
  return intern(op, "", a, b);
}

int past_depth(Formula f) { return f->depth; }

std::vector<Formula> closure(Formula f) {
  std::vector<Formula> out;
  std::unordered_set<int> seen;
  // iterative post-order
  std::vector<std::pair<Formula, bool>> st{{f, false}};
  while (!st.empty()) {
    auto [n, done] = st.back();
    st.pop_back();
    if (seen.count(n->id)) continue;
    if (done) {
      seen.insert(n->id);
      out.push_back(n);
      continue;
    }
    st.push_back({n, true});
    if (n->b) st.push_back({n->b, false});
    if (n->a) st.push_back({n->a, false});
  }
  return out;
}

std::vector<std::string> atoms_of(Formula f) {
  std::set<std::string> s;
  for (Formula g : closure(f))
    if (g->op == Op::Atom || g->op == Op::NegAtom) s.insert(g->name);
  return {s.begin(), s.end()};
}

static const char* op_symbol(Op op) {
  switch (op) {
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Next: return "X";
    case Op::Until: return "U";
    case Op::Release: return "R";
    case Op::Prev: return "Y";
    case Op::PrevZ: return "Z";
    case Op::Since: return "S";
    case Op::Trigger: return "T";
    default: return "?";
  }
}

std::string to_string(Formula f) {
  switch (f->op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return f->name;
    case Op::NegAtom: return "!" + f->name;
    case Op::Next:
    case Op::Prev:
    case Op::PrevZ: return std::string(op_symbol(f->op)) + " " + to_string(f->a);
    default:
      return "(" + to_string(f->a) + " " + op_symbol(f->op) + " " + to_string(f->b) + ")";
  }
}

// ---------------------------------------------------------------- surface

Surface smk(SOp op, std::vector<Surface> kids, std::string name) {
  auto n = std::make_shared<SurfaceNode>();
  n->op = op;
  n->kids = std::move(kids);
  n->name = std::move(name);
  return n;
}

static const char* sop_symbol(SOp op) {
  switch (op) {
    case SOp::Not: return "!";
    case SOp::And: return "&";
    case SOp::Or: return "|";
    case SOp::Implies: return "->";
    case SOp::Iff: return "<->";
    case SOp::X: return "X";
    case SOp::F: return "F";
    case SOp::G: return "G";
    case SOp::U: return "U";
    case SOp::R: return "R";
    case SOp::Y: return "Y";
    case SOp::Z: return "Z";
    case SOp::S: return "S";
    case SOp::T: return "T";
    case SOp::O: return "O";
    case SOp::H: return "H";
    default: return "?";
  }
}

std::string to_string(const Surface& s) {
  switch (s->op) {
    case SOp::True: return "true";
    case SOp::False: return "false";
    case SOp::Atom: return s->name;
    default: break;
  }
  if (s->kids.size() == 1) {
    std::string sep = s->op == SOp::Not ? "" : " ";
    return std::string(sop_symbol(s->op)) + sep + to_string(s->kids[0]);
  }
  return "(" + to_string(s->kids[0]) + " " + sop_symbol(s->op) + " " + to_string(s->kids[1]) +
         ")";
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line(line),
      column(column) {}

namespace {

enum class Tok { Ident, LParen, RParen, Not, And, Or, Implies, Iff, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '=';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto adv = [&](size_t n) {
    for (size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    int l = line, cl = col;
    if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), l, cl});
      adv(j - i);
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", l, cl});
      adv(1);
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", l, cl});
      adv(1);
    } else if (c == '!') {
      out.push_back({Tok::Not, "!", l, cl});
      adv(1);
    } else if (c == '&') {
      out.push_back({Tok::And, "&", l, cl});
      adv(1);
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", l, cl});
      adv(1);
    } else if (text.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Implies, "->", l, cl});
      adv(2);
    } else if (text.compare(i, 3, "<->") == 0) {
      out.push_back({Tok::Iff, "<->", l, cl});
      adv(3);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Surface parse() {
    Surface s = iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return s;
  }

 private:
  std::vector<Token> t_;
  size_t p_ = 0;

  const Token& peek() const { return t_[p_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error: " + msg, peek().line, peek().col);
  }
  bool ident_is(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  Surface iff() {
    Surface l = impl();
    while (peek().kind == Tok::Iff) {
      ++p_;
      l = smk(SOp::Iff, {l, impl()});
    }
    return l;
  }
  Surface impl() {
    Surface l = disj();
    if (peek().kind == Tok::Implies) {
      ++p_;
      return smk(SOp::Implies, {l, impl()});
    }
    return l;
  }
  Surface disj() {
    Surface l = conj();
    while (peek().kind == Tok::Or) {
      ++p_;
      l = smk(SOp::Or, {l, conj()});
    }
    return l;
  }
  Surface conj() {
    Surface l = binary();
    while (peek().kind == Tok::And) {
      ++p_;
      l = smk(SOp::And, {l, binary()});
    }
    return l;
  }
  Surface binary() {
    Surface l = unary();
    static const std::pair<const char*, SOp> ops[] = {
        {"U", SOp::U}, {"R", SOp::R}, {"S", SOp::S}, {"T", SOp::T}};
    for (auto& [kw, op] : ops) {
      if (ident_is(kw)) {
        ++p_;
        return smk(op, {l, binary()});
      }
    }
    return l;
  }
  Surface unary() {
    if (peek().kind == Tok::Not) {
      ++p_;
      return smk(SOp::Not, {unary()});
    }
    static const std::pair<const char*, SOp> ops[] = {{"X", SOp::X}, {"F", SOp::F},
                                                      {"G", SOp::G}, {"Y", SOp::Y},
                                                      {"Z", SOp::Z}, {"O", SOp::O},
                                                      {"H", SOp::H}};
    for (auto& [kw, op] : ops) {
      if (ident_is(kw)) {
        ++p_;
        return smk(op, {unary()});
      }
    }
    return primary();
  }
  Surface primary() {
    const Token& tk = peek();
    if (tk.kind == Tok::LParen) {
      ++p_;
      Surface s = iff();
      if (peek().kind != Tok::RParen) fail("expected ')'");
      ++p_;
      return s;
    }
    if (tk.kind == Tok::Ident) {
      static const std::set<std::string> reserved = {"U", "R", "S", "T", "X", "F",
                                                     "G", "Y", "Z", "O", "H"};
      if (reserved.count(tk.text)) fail("operator '" + tk.text + "' used as operand");
      ++p_;
      if (tk.text == "true") return smk(SOp::True);
      if (tk.text == "false") return smk(SOp::False);
      return smk(SOp::Atom, {}, tk.text);
    }
    if (tk.kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + tk.text + "'");
  }
};

Formula pnf(const Surface& s, bool neg) {
  auto k = [&](size_t i, bool n) { return pnf(s->kids[i], n); };
  switch (s->op) {
    case SOp::True: return neg ? mk_false() : mk_true();
    case SOp::False: return neg ? mk_true() : mk_false();
    case SOp::Atom: return neg ? mk_neg_atom(s->name) : mk_atom(s->name);
    case SOp::Not: return k(0, !neg);
    case SOp::And: return mk(neg ? Op::Or : Op::And, k(0, neg), k(1, neg));
    case SOp::Or: return mk(neg ? Op::And : Op::Or, k(0, neg), k(1, neg));
    case SOp::Implies:
      return neg ? mk(Op::And, k(0, false), k(1, true)) : mk(Op::Or, k(0, true), k(1, false));
    case SOp::Iff:
      if (neg)
        return mk(Op::Or, mk(Op::And, k(0, false), k(1, true)),
                  mk(Op::And, k(0, true), k(1, false)));
      return mk(Op::Or, mk(Op::And, k(0, false), k(1, false)),
                mk(Op::And, k(0, true), k(1, true)));
    case SOp::X: return mk(Op::Next, k(0, neg));
    case SOp::F:
      return neg ? mk(Op::Release, mk_false(), k(0, true)) : mk(Op::Until, mk_true(), k(0, false));
    case SOp::G:
      return neg ? mk(Op::Until, mk_true(), k(0, true)) : mk(Op::Release, mk_false(), k(0, false));
    case SOp::U: return mk(neg ? Op::Release : Op::Until, k(0, neg), k(1, neg));
    case SOp::R: return mk(neg ? Op::Until : Op::Release, k(0, neg), k(1, neg));
    case SOp::Y: return mk(neg ? Op::PrevZ : Op::Prev, k(0, neg));
    case SOp::Z: return mk(neg ? Op::Prev : Op::PrevZ, k(0, neg));
    case SOp::S: return mk(neg ? Op::Trigger : Op::Since, k(0, neg), k(1, neg));
    case SOp::T: return mk(neg ? Op::Since : Op::Trigger, k(0, neg), k(1, neg));
    case SOp::O:
      return neg ? mk(Op::Trigger, mk_false(), k(0, true)) : mk(Op::Since, mk_true(), k(0, false));
    case SOp::H:
      return neg ? mk(Op::Since, mk_true(), k(0, true)) : mk(Op::Trigger, mk_false(), k(0, false));
  }
  throw std::logic_error("pnf: bad operator");
}

}  // namespace

Surface parse_formula(const std::string& text) { return Parser(lex(text)).parse(); }

Formula to_pnf(const Surface& s) { return pnf(s, false); }

Surface negate(const Surface& s) { return smk(SOp::Not, {s}); }

Surface embed(Formula f) {
  switch (f->op) {
    case Op::True: return smk(SOp::True);
    case Op::False: return smk(SOp::False);
    case Op::Atom: return smk(SOp::Atom, {}, f->name);
    case Op::NegAtom: return smk(SOp::Not, {smk(SOp::Atom, {}, f->name)});
    case Op::And: return smk(SOp::And, {embed(f->a), embed(f->b)});
    case Op::Or: return smk(SOp::Or, {embed(f->a), embed(f->b)});
    case Op::Next: return smk(SOp::X, {embed(f->a)});
    case Op::Until: return smk(SOp::U, {embed(f->a), embed(f->b)});
    case Op::Release: return smk(SOp::R, {embed(f->a), embed(f->b)});
    case Op::Prev: return smk(SOp::Y, {embed(f->a)});
    case Op::PrevZ: return smk(SOp::Z, {embed(f->a)});
    case Op::Since: return smk(SOp::S, {embed(f->a), embed(f->b)});
    case Op::Trigger: return smk(SOp::T, {embed(f->a), embed(f->b)});
  }
  throw std::logic_error("embed: bad operator");
}

}  // namespace pltlbmc
