#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "pltlbmc/sat.hpp"

namespace pltlbmc {

size_t CircuitBuilder::KeyHash::operator()(const std::vector<uint32_t>& k) const {
  size_t h = 1469598103934665603ull;
  for (uint32_t x : k) h = (h ^ x) * 1099511628211ull;
  return h;
}

CircuitBuilder::CircuitBuilder(Solver& s, bool polarity_aware) : s_(s), pg_(polarity_aware) {
  true_ = Lit::make(s_.new_var());
  s_.add_clause({true_});
}

Lit CircuitBuilder::input() { return Lit::make(s_.new_var()); }

bool CircuitBuilder::is_gate(Lit l) const {
  uint32_t v = l.var();
  return v < gate_of_var_.size() && gate_of_var_[v] >= 0;
}

Lit CircuitBuilder::make_gate(GateKind k, std::vector<Lit> in) {
  std::vector<uint32_t> key;
  key.reserve(in.size() + 1);
  key.push_back(static_cast<uint32_t>(k));
  for (Lit l : in) key.push_back(l.x);
  auto it = hash_.find(key);
  if (it != hash_.end()) return it->second;
  Lit out = Lit::make(s_.new_var());
  uint32_t v = out.var();
  if (gate_of_var_.size() <= v) gate_of_var_.resize(v + 1, -1);
  gate_of_var_[v] = static_cast<int32_t>(gates_.size());
  gates_.push_back({k, std::move(in), 0});
  gate_var_.push_back(v);
  hash_.emplace(std::move(key), out);
  ++gate_count_;
  return out;
}

Lit CircuitBuilder::and_(std::vector<Lit> xs) {
  size_t n = 0;
  for (Lit x : xs) {
    if (x == true_) continue;
    if (x == ~true_) return ~true_;
    xs[n++] = x;
  }
  xs.resize(n);
  std::vector<Lit>& ys = xs;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (size_t i = 0; i + 1 < ys.size(); ++i)
    if (ys[i].var() == ys[i + 1].var()) return ~true_;
  if (ys.empty()) return true_;
  if (ys.size() == 1) return ys[0];
  return make_gate(GateKind::And, std::move(ys));
}

Lit CircuitBuilder::or_(std::vector<Lit> xs) {
  for (Lit& x : xs) x = ~x;
  return ~and_(std::move(xs));
}

Lit CircuitBuilder::iff(Lit a, Lit b) {
  if (a == b) return true_;
  if (a == ~b) return ~true_;
  if (is_const(a)) return a == true_ ? b : ~b;
  if (is_const(b)) return b == true_ ? a : ~a;
  bool flip = a.neg() != b.neg();
  Lit pa = Lit::make(a.var()), pb = Lit::make(b.var());
  if (pb < pa) std::swap(pa, pb);
  Lit g = make_gate(GateKind::Iff, {pa, pb});
  return flip ? ~g : g;
}

Lit CircuitBuilder::ite(Lit c, Lit t, Lit e) {
  if (is_const(c)) return c == true_ ? t : e;
  if (t == e) return t;
  if (t == ~e) return iff(c, t);
  if (c.neg()) {
    c = ~c;
    std::swap(t, e);
  }
  if (is_const(t)) return t == true_ ? or_(c, e) : and_(~c, e);
  if (is_const(e)) return e == true_ ? or_(~c, t) : and_(c, t);
  if (t == c) return or_(c, e);
  if (t == ~c) return and_(~c, e);
  if (e == c) return and_(c, t);
  if (e == ~c) return or_(~c, t);
  if (t.neg()) return ~make_gate(GateKind::Ite, {c, ~t, ~e});
  return make_gate(GateKind::Ite, {c, t, e});
}

Lit CircuitBuilder::gate(GateKind k, const std::vector<Lit>& in) {
  switch (k) {
    case GateKind::And: return and_(in);
    case GateKind::Iff:
      if (in.size() != 2) throw std::invalid_argument("iff needs two inputs");
      return iff(in[0], in[1]);
    case GateKind::Ite:
      if (in.size() != 3) throw std::invalid_argument("ite needs three inputs");
      return ite(in[0], in[1], in[2]);
  }
  throw std::invalid_argument("unknown gate kind");
}

void CircuitBuilder::emit(Lit root) {
  std::vector<Lit> stack{root};
  while (!stack.empty()) {
    Lit l = stack.back();
    stack.pop_back();
    if (!is_gate(l)) continue;
    Gate& g = gates_[gate_of_var_[l.var()]];
    uint8_t want = pg_ ? (l.neg() ? 2 : 1) : 3;
    uint8_t todo = want & ~g.emitted;
    if (!todo) continue;
    g.emitted |= todo;
    Lit o = Lit::make(l.var());
    const std::vector<Lit>& in = g.in;
    switch (g.kind) {
      case GateKind::And:
        if (todo & 1) {
          for (Lit x : in) {
            s_.add_clause({~o, x});
            stack.push_back(x);
          }
        }
        if (todo & 2) {
          std::vector<Lit> c{o};
          for (Lit x : in) {
            c.push_back(~x);
            stack.push_back(~x);
          }
          s_.add_clause(std::move(c));
        }
        break;
      case GateKind::Iff: {
        Lit a = in[0], b = in[1];
        if (todo & 1) {
          s_.add_clause({~o, ~a, b});
          s_.add_clause({~o, a, ~b});
        }
        if (todo & 2) {
          s_.add_clause({o, a, b});
          s_.add_clause({o, ~a, ~b});
        }
        for (Lit x : {a, ~a, b, ~b}) stack.push_back(x);
        break;
      }
      case GateKind::Ite: {
        Lit c = in[0], t = in[1], e = in[2];
        if (todo & 1) {
          s_.add_clause({~o, ~c, t});
          s_.add_clause({~o, c, e});
          stack.push_back(t);
          stack.push_back(e);
        }
        if (todo & 2) {
          s_.add_clause({o, ~c, ~t});
          s_.add_clause({o, c, ~e});
          stack.push_back(~t);
          stack.push_back(~e);
        }
        stack.push_back(c);
        stack.push_back(~c);
        break;
      }
    }
  }
}

void CircuitBuilder::ensure(Lit l) { emit(l); }

void CircuitBuilder::add_clause(std::vector<Lit> lits) {
  std::vector<Lit> c;
  c.reserve(lits.size());
  for (Lit l : lits) {
    if (l == true_) return;
    if (l == ~true_) continue;
    c.push_back(l);
  }
  for (Lit l : c) emit(l);
  s_.add_clause(std::move(c));
}

void CircuitBuilder::assert_rec(Lit l, std::vector<Lit>* guard) {
  auto clause = [&](std::vector<Lit> c) {
    if (guard)
      for (Lit g : *guard) c.push_back(g);
    add_clause(std::move(c));
  };
  if (!is_gate(l)) {
    clause({l});
    return;
  }
  const Gate& g = gates_[gate_of_var_[l.var()]];
  std::vector<Lit> in = g.in;  // copy: recursion may grow gates_
  switch (g.kind) {
    case GateKind::And:
      if (!l.neg()) {
        for (Lit x : in) assert_rec(x, guard);
      } else {
        std::vector<Lit> c;
        for (Lit x : in) c.push_back(~x);
        clause(std::move(c));
      }
      return;
    case GateKind::Iff: {
      Lit a = in[0], b = l.neg() ? ~in[1] : in[1];
      clause({~a, b});
      clause({a, ~b});
      return;
    }
    case GateKind::Ite: {
      Lit c = in[0], t = in[1], e = in[2];
      if (l.neg()) {
        t = ~t;
        e = ~e;
      }
      clause({~c, t});
      clause({c, e});
      return;
    }
  }
}

void CircuitBuilder::assert_lit(Lit l) { assert_rec(l, nullptr); }

void CircuitBuilder::assert_guarded(Lit guard, Lit l) {
  std::vector<Lit> g{~guard};
  assert_rec(l, &g);
}

SolveResult CircuitBuilder::solve(const std::vector<Lit>& assumptions, int64_t budget) {
  for (Lit a : assumptions) emit(a);
  return s_.solve(assumptions, budget);
}

// ---------------------------------------------------------------- DIMACS

void export_dimacs(const Solver& s, std::ostream& out, bool with_assumptions) {
  size_t extra = with_assumptions ? s.last_assumptions().size() : 0;
  out << "p cnf " << s.num_vars() << ' ' << s.num_original_clauses() + extra << '\n';
  for (size_t i = 0; i < s.num_original_clauses(); ++i) {
    for (Lit l : s.original_clause(i)) out << l.dimacs() << ' ';
    out << "0\n";
  }
  if (with_assumptions)
    for (Lit l : s.last_assumptions()) out << l.dimacs() << " 0\n";
}

void export_dimacs(const Solver& s, const std::string& path, bool with_assumptions) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write DIMACS file '" + path + "'");
  export_dimacs(s, f, with_assumptions);
  if (!f) throw std::runtime_error("I/O error writing '" + path + "'");
}

DimacsCnf parse_dimacs(std::istream& in) {
  DimacsCnf cnf;
  std::string line;
  std::vector<int> cur;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      size_t nc;
      if (!(ls >> p >> fmt >> cnf.nvars >> nc) || fmt != "cnf")
        throw std::runtime_error("bad DIMACS header");
      header = true;
      continue;
    }
    int x;
    while (ls >> x) {
      if (x == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(x);
        cnf.nvars = std::max<uint32_t>(cnf.nvars, static_cast<uint32_t>(std::abs(x)));
      }
    }
  }
  if (!header) throw std::runtime_error("missing DIMACS header");
  if (!cur.empty()) cnf.clauses.push_back(cur);
  return cnf;
}

ExternalResult solve_external_file(const std::string& cnf_path, const std::string& cmd) {
  std::string full = cmd + " '" + cnf_path + "' 2>/dev/null";
  FILE* p = popen(full.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run external solver '" + cmd + "'");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  ExternalResult r;
  std::istringstream in(out);
  std::string line;
  bool got = false;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        r.result = SolveResult::Unsat;
        got = true;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        r.result = SolveResult::Sat;
        got = true;
      }
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream vs(line.substr(2));
      int x;
      while (vs >> x)
        if (x != 0) r.model.push_back(x);
    }
  }
  if (!got) throw std::runtime_error("external solver produced no 's' line");
  return r;
}

ExternalResult solve_external(const Solver& s, const std::string& cmd,
                              const std::vector<Lit>& assumptions) {
  auto dir = std::filesystem::temp_directory_path();
  std::string tmpl = (dir / "pltlbmc_XXXXXX").string();
  std::vector<char> name(tmpl.begin(), tmpl.end());
  name.push_back('\0');
  int fd = mkstemp(name.data());
  if (fd < 0) throw std::runtime_error("cannot create temporary file");
  close(fd);
  std::string path(name.data());
  {
    std::ofstream f(path);
    f << "p cnf " << s.num_vars() << ' ' << s.num_original_clauses() + assumptions.size() << '\n';
    for (size_t i = 0; i < s.num_original_clauses(); ++i) {
      for (Lit l : s.original_clause(i)) f << l.dimacs() << ' ';
      f << "0\n";
    }
    for (Lit l : assumptions) f << l.dimacs() << " 0\n";
  }
  ExternalResult r;
  try {
    r = solve_external_file(path, cmd);
  } catch (...) {
    std::filesystem::remove(path);
    throw;
  }
  std::filesystem::remove(path);
  return r;
}

}  // namespace pltlbmc
