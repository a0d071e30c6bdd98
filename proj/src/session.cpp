/*
 * Copyright (c) 2026, the gcdim authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "gcdim/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "gcdim/spectrum.hpp"

namespace gcdim::session {

namespace {

// ---------------------------------------------------------------------------
// Grammar tables

enum class Arg { Mod, ModOrDual, Dual, Prime, Map, Fn, Witness, Int, ModSet, PrimeSet, Kind };

struct CmdSpec {
  std::vector<Arg> positional;
  std::map<std::string, Arg> keywords;
  std::set<std::string> required;
};

const std::map<std::string, CmdSpec>& commands() {
  static const std::map<std::string, CmdSpec> t = [] {
    std::map<std::string, CmdSpec> m;
    const std::pair<std::string, Arg> dual{"dualizer", Arg::Dual}, bound{"bound", Arg::Int};
    m["semidual"] = {{Arg::ModOrDual}, {bound}, {}};
    m["totref"] = {{Arg::Mod}, {dual, bound}, {}};
    m["gcdim"] = {{Arg::Mod}, {dual, bound}, {}};
    m["depth"] = {{Arg::Mod}, {}, {}};
    m["grade"] = {{Arg::Prime}, {}, {}};
    m["transpose"] = {{Arg::Mod}, {dual}, {}};
    m["decompose"] = {{Arg::Mod}, {dual}, {}};
    m["transpose_ses"] = {{Arg::Map, Arg::Map}, {dual}, {}};
    m["cosyzygy"] = {{Arg::Mod}, {dual}, {}};
    m["ext"] = {{Arg::Mod, Arg::Mod}, {{"index", Arg::Int}}, {"index"}};
    m["tor"] = {{Arg::Mod, Arg::Mod}, {{"index", Arg::Int}}, {"index"}};
    m["hom"] = {{Arg::Mod, Arg::Mod}, {}, {}};
    m["resolution"] = {{Arg::Mod}, {bound}, {}};
    m["hilbert"] = {{Arg::Mod}, {{"degree", Arg::Int}}, {}};
    m["dim"] = {{Arg::Mod}, {}, {}};
    m["iso"] = {{Arg::Mod, Arg::Mod}, {{"trials", Arg::Int}, {"seed", Arg::Int}}, {}};
    m["phi"] = {{}, {{"set", Arg::ModSet}, {"kind", Arg::Kind}, {"primes", Arg::PrimeSet}, bound}, {"set"}};
    m["lambda"] = {{Arg::Mod}, {{"fn", Arg::Fn}, {"kind", Arg::Kind}, {"primes", Arg::PrimeSet}, bound}, {"fn"}};
    m["gcheck"] = {{Arg::Fn}, {{"primes", Arg::PrimeSet}}, {}};
    m["witness"] = {{Arg::Witness}, {{"set", Arg::ModSet}, {"target", Arg::Mod}}, {"set", "target"}};
    m["wwords"] = {{}, {dual, {"length", Arg::Int}}, {"length"}};
    m["extvdim"] = {{Arg::Mod}, {{"set", Arg::ModSet}, bound}, {"set"}};
    m["stable"] = {{Arg::Mod, Arg::Mod}, {dual, {"summands", Arg::Int}, {"seed", Arg::Int}, {"trials", Arg::Int}}, {}};
    m["localdepth"] = {{Arg::Mod}, {{"prime", Arg::Prime}}, {"prime"}};
    m["localpd"] = {{Arg::Mod}, {{"prime", Arg::Prime}, bound}, {"prime"}};
    m["localgcdim"] = {{Arg::Mod}, {dual, {"prime", Arg::Prime}, bound}, {"prime"}};
    return m;
  }();
  return t;
}

// derived module ops and their argument kinds
const std::map<std::string, std::vector<Arg>>& module_ops() {
  static const std::map<std::string, std::vector<Arg>> t = {
      {"residue", {}},
      {"syzygy", {Arg::Mod, Arg::Int}},
      {"dual", {Arg::Mod, Arg::Dual}},
      {"transpose", {Arg::Mod, Arg::Dual}},
      {"cosyzygy", {Arg::Mod, Arg::Dual}},
      {"sum", {Arg::Mod, Arg::Mod}},
      {"shift", {Arg::Mod, Arg::Int}},
      {"ext", {Arg::Mod, Arg::Mod, Arg::Int}},
      {"tor", {Arg::Mod, Arg::Mod, Arg::Int}},
      {"hom", {Arg::Mod, Arg::Mod}},
  };
  return t;
}

enum class Sym { Ring, Module, Dualizer, Prime, GradeFn, Map, Witness };

std::string_view sym_name(Sym s) {
  switch (s) {
    case Sym::Ring: return "ring";
    case Sym::Module: return "module";
    case Sym::Dualizer: return "dualizer";
    case Sym::Prime: return "prime";
    case Sym::GradeFn: return "gradefn";
    case Sym::Map: return "map";
    case Sym::Witness: return "witness";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Session run() {
    std::istringstream in(text_);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      if (trim(raw).empty()) continue;
      s_ = raw;
      pos_ = 0;
      statement();
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t col) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_) + ", column " + std::to_string(col + 1) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_str(std::string_view t) {
    ws();
    if (s_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }
  bool peek_ident(std::string_view w) {
    ws();
    std::size_t save = pos_;
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) return false;
    std::string id = ident();
    pos_ = save;
    return id == w;
  }
  std::string ident() {
    ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("expected a name");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  void keyword(std::string_view w) {
    ws();
    std::size_t start = pos_;
    if (!(pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) || ident() != w) {
      pos_ = start;
      fail("expected '" + std::string(w) + "'");
    }
  }
  long integer() {
    ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return std::stol(s_.substr(start, pos_ - start));
    } catch (...) {
      pos_ = start;
      fail("integer out of range");
    }
  }
  std::size_t natural() {
    std::size_t start = pos_;
    long v = integer();
    if (v < 0) fail("expected a nonnegative integer", start);
    return static_cast<std::size_t>(v);
  }
  void end_of_line() {
    if (!at_end()) fail("unexpected trailing text");
  }

  // raw polynomial text up to ',' or one of `stops` at bracket depth 0; validated against the ring
  std::string poly_text(std::string_view stops) {
    ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && depth > 0) {
        --depth;
      } else if (depth == 0 && (c == ',' || stops.find(c) != std::string_view::npos)) {
        break;
      }
      ++pos_;
    }
    std::string t = trim(std::string_view(s_).substr(start, pos_ - start));
    if (t.empty()) fail("expected a polynomial", start);
    if (!alg_) fail("no ring declared", start);
    try {
      alg_->parse(t);
    } catch (const Error& e) {
      fail(std::string("bad polynomial '") + t + "': " + e.what(), start);
    }
    return t;
  }

  std::vector<std::string> poly_list(char close) {
    std::vector<std::string> out;
    if (accept(close)) return out;
    do out.push_back(poly_text(std::string(1, close)));
    while (accept(','));
    expect(close);
    return out;
  }

  std::vector<std::vector<std::string>> matrix() {
    std::size_t start = pos_;
    expect('[');
    std::vector<std::vector<std::string>> rows;
    if (accept(']')) return rows;
    do {
      expect('[');
      rows.push_back(poly_list(']'));
    } while (accept(','));
    expect(']');
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) fail("malformed matrix: row lengths differ", start);
    return rows;
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (accept(']')) return out;
    do out.push_back(static_cast<int>(integer()));
    while (accept(','));
    expect(']');
    return out;
  }

  void declare(const std::string& name, Sym kind, std::size_t col) {
    if (symbols_.count(name)) fail("'" + name + "' is already declared", col);
    symbols_[name] = kind;
  }

  std::string use(Sym kind) {
    ws();
    std::size_t col = pos_;
    std::string name = ident();
    auto it = symbols_.find(name);
    if (it == symbols_.end()) fail("undeclared name '" + name + "'", col);
    if (it->second != kind)
      fail("'" + name + "' is a " + std::string(sym_name(it->second)) + ", expected a " + std::string(sym_name(kind)), col);
    return name;
  }

  std::string name_list(Sym kind) {
    expect('{');
    std::string out = "{";
    do {
      out += (out.size() > 1 ? ", " : "") + use(kind);
    } while (accept(','));
    expect('}');
    return out + "}";
  }

  std::string arg(Arg a) {
    switch (a) {
      case Arg::Mod: return use(Sym::Module);
      case Arg::Dual: return use(Sym::Dualizer);
      case Arg::Prime: return use(Sym::Prime);
      case Arg::Map: return use(Sym::Map);
      case Arg::Fn: return use(Sym::GradeFn);
      case Arg::Witness: return use(Sym::Witness);
      case Arg::Int: return std::to_string(natural());
      case Arg::ModSet: return name_list(Sym::Module);
      case Arg::ModOrDual: {
        ws();
        std::size_t col = pos_;
        std::string n = ident();
        auto it = symbols_.find(n);
        if (it == symbols_.end() || (it->second != Sym::Module && it->second != Sym::Dualizer))
          fail("expected a module or dualizer name", col);
        return n;
      }
      case Arg::PrimeSet:
        if (peek_ident("all")) return ident();
        return name_list(Sym::Prime);
      case Arg::Kind:
        if (peek_ident("projective")) return ident();
        return use(Sym::Dualizer);
    }
    fail("bad argument");
  }

  void statement() {
    ws();
    std::size_t col = pos_;
    std::string head = ident();
    if (head != "ring" && !out_.ring) fail("the ring must be declared first", col);
    if (head == "ring") return ring_decl(col);
    if (head == "module") return module_decl();
    if (head == "dualizer") return dualizer_decl();
    if (head == "prime") return prime_decl();
    if (head == "gradefn") return gradefn_decl();
    if (head == "map") return map_decl();
    if (head == "witness" && !peek_declared_witness()) return witness_decl();
    auto it = commands().find(head);
    if (it == commands().end()) fail("unknown statement '" + head + "'", col);
    command(head, it->second);
  }

  // `witness w = ...` declares; `witness w set ...` runs the checker
  bool peek_declared_witness() {
    std::size_t save = pos_;
    ws();
    bool cmd = false;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::string n = ident();
      cmd = !accept('=');
    }
    pos_ = save;
    return cmd;
  }

  void ring_decl(std::size_t col) {
    if (out_.ring) fail("only one ring per session", col);
    RingDecl r;
    std::size_t ncol = pos_;
    r.name = ident();
    expect('=');
    keyword("poly");
    expect('(');
    std::size_t pcol = pos_;
    long p = integer();
    expect(',');
    expect('[');
    do r.vars.push_back(ident());
    while (accept(','));
    expect(']');
    expect(',');
    std::size_t ocol = pos_;
    r.order = ident();
    expect(')');
    try {
      parse_order(r.order);
    } catch (const Error&) {
      fail("unknown monomial order '" + r.order + "'", ocol);
    }
    try {
      alg_.emplace(PrimeField(static_cast<std::uint64_t>(p < 0 ? 0 : p)), r.vars, parse_order(r.order));
    } catch (const Error& e) {
      fail(e.what(), pcol);
    }
    r.p = static_cast<std::uint64_t>(p);
    if (accept('/')) {
      keyword("ideal");
      expect('(');
      r.ideal = poly_list(')');
    }
    end_of_line();
    declare(r.name, Sym::Ring, ncol);
    out_.ring = std::move(r);
    out_.order.push_back({StmtKind::Ring, 0});
  }

  void module_decl() {
    ModuleDecl m;
    std::size_t ncol = pos_;
    m.name = ident();
    expect('=');
    ws();
    std::size_t ocol = pos_;
    m.expr.op = ident();
    if (m.expr.op == "coker") {
      m.expr.rows = matrix();
      if (peek_ident("degrees")) {
        ident();
        ws();
        std::size_t dcol = pos_;
        m.expr.degrees = int_list();
        m.expr.has_degrees = true;
        if (!m.expr.rows.empty() && m.expr.degrees.size() != m.expr.rows.size())
          fail("degrees list has " + std::to_string(m.expr.degrees.size()) + " entries for " +
                   std::to_string(m.expr.rows.size()) + " matrix rows",
               dcol);
      }
    } else {
      auto it = module_ops().find(m.expr.op);
      if (it == module_ops().end()) fail("unknown module expression '" + m.expr.op + "'", ocol);
      for (Arg a : it->second) m.expr.args.push_back(arg(a));
    }
    end_of_line();
    declare(m.name, Sym::Module, ncol);
    out_.order.push_back({StmtKind::Module, out_.modules.size()});
    out_.modules.push_back(std::move(m));
  }

  void dualizer_decl() {
    DualizerDecl d;
    std::size_t ncol = pos_;
    d.name = ident();
    expect('=');
    d.module = use(Sym::Module);
    end_of_line();
    declare(d.name, Sym::Dualizer, ncol);
    out_.order.push_back({StmtKind::Dualizer, out_.dualizers.size()});
    out_.dualizers.push_back(std::move(d));
  }

  void prime_decl() {
    PrimeDecl p;
    std::size_t ncol = pos_;
    p.name = ident();
    expect('=');
    keyword("ideal");
    expect('(');
    p.ideal = poly_list(')');
    if (p.ideal.empty()) fail("a prime needs at least one generator");
    if (peek_ident("in")) {
      ident();
      do p.contains.push_back(use(Sym::Prime));
      while (accept(','));
    }
    end_of_line();
    declare(p.name, Sym::Prime, ncol);
    out_.order.push_back({StmtKind::Prime, out_.primes.size()});
    out_.primes.push_back(std::move(p));
  }

  void gradefn_decl() {
    GradeFnDecl g;
    std::size_t ncol = pos_;
    g.name = ident();
    expect('=');
    expect('{');
    if (!accept('}')) {
      do {
        std::string p = use(Sym::Prime);
        expect(':');
        std::optional<long> v;
        if (peek_ident("inf")) {
          ident();
        } else {
          v = static_cast<long>(natural());
        }
        g.entries.emplace_back(p, v);
      } while (accept(','));
      expect('}');
    }
    end_of_line();
    declare(g.name, Sym::GradeFn, ncol);
    out_.order.push_back({StmtKind::GradeFn, out_.gradefns.size()});
    out_.gradefns.push_back(std::move(g));
  }

  void map_decl() {
    MapDecl m;
    std::size_t ncol = pos_;
    m.name = ident();
    expect('=');
    m.source = use(Sym::Module);
    if (!accept_str("->")) fail("expected '->'");
    m.target = use(Sym::Module);
    m.rows = matrix();
    end_of_line();
    declare(m.name, Sym::Map, ncol);
    out_.order.push_back({StmtKind::Map, out_.maps.size()});
    out_.maps.push_back(std::move(m));
  }

  WitnessExpr wexpr() {
    ws();
    std::size_t col = pos_;
    WitnessExpr e;
    e.op = ident();
    if (auto it = symbols_.find(e.op); it != symbols_.end() && it->second == Sym::Witness) {
      e.names.push_back(e.op);
      e.op = "ref";
      return e;
    }
    if (e.op == "free") {
      e.ints = int_list();
      return e;
    }
    expect('(');
    if (e.op == "gen") {
      e.names.push_back(use(Sym::Module));
    } else if (e.op == "syz") {
      e.children.push_back(wexpr());
    } else if (e.op == "ext" || e.op == "kernel") {
      e.children.push_back(wexpr());
      expect(',');
      e.children.push_back(wexpr());
      expect(',');
      e.names.push_back(use(Sym::Module));
      expect(',');
      e.names.push_back(use(Sym::Map));
      expect(',');
      e.names.push_back(use(Sym::Map));
    } else if (e.op == "summand") {
      e.children.push_back(wexpr());
      expect(',');
      e.names.push_back(use(Sym::Module));
      expect(',');
      e.names.push_back(use(Sym::Module));
    } else {
      fail("unknown witness step '" + e.op + "'", col);
    }
    expect(')');
    return e;
  }

  void witness_decl() {
    WitnessDecl w;
    std::size_t ncol = pos_;
    w.name = ident();
    expect('=');
    w.expr = wexpr();
    end_of_line();
    declare(w.name, Sym::Witness, ncol);
    out_.order.push_back({StmtKind::Witness, out_.witnesses.size()});
    out_.witnesses.push_back(std::move(w));
  }

  void command(const std::string& name, const CmdSpec& spec) {
    Command c;
    c.name = name;
    c.line = line_;
    for (Arg a : spec.positional) c.positional.push_back(arg(a));
    std::set<std::string> seen;
    while (!at_end()) {
      std::size_t col = pos_;
      std::string key = ident();
      auto it = spec.keywords.find(key);
      if (it == spec.keywords.end()) fail("unknown keyword '" + key + "' for " + name, col);
      if (!seen.insert(key).second) fail("repeated keyword '" + key + "'", col);
      c.keywords.emplace_back(key, arg(it->second));
    }
    for (const auto& r : spec.required)
      if (!seen.count(r)) fail("missing keyword '" + r + "' for " + name);
    out_.order.push_back({StmtKind::Command, out_.commands.size()});
    out_.commands.push_back(std::move(c));
  }

  const std::string& text_;
  std::string s_;
  std::size_t pos_ = 0;
  int line_ = 0;
  Session out_;
  std::optional<PolyAlgebra> alg_;
  std::map<std::string, Sym> symbols_;
};

// ---------------------------------------------------------------------------
// Printer

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string print_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::string> rs;
  for (const auto& r : rows) rs.push_back("[" + join(r) + "]");
  return "[" + join(rs) + "]";
}

std::string print_ints(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return "[" + join(s) + "]";
}

std::string print_wexpr(const WitnessExpr& e) {
  if (e.op == "free") return "free" + print_ints(e.ints);
  if (e.op == "ref") return e.names[0];
  std::vector<std::string> parts;
  for (const auto& c : e.children) parts.push_back(print_wexpr(c));
  for (const auto& n : e.names) parts.push_back(n);
  return e.op + "(" + join(parts) + ")";
}

}  // namespace

Session parse_session(const std::string& text) { return Parser(text).run(); }

std::string print_session(const Session& s) {
  std::string out;
  for (const auto& st : s.order) {
    switch (st.kind) {
      case StmtKind::Ring: {
        const RingDecl& r = *s.ring;
        out += "ring " + r.name + " = poly(" + std::to_string(r.p) + ", [" + join(r.vars) + "], " + r.order + ")";
        if (!r.ideal.empty()) out += " / ideal(" + join(r.ideal) + ")";
        break;
      }
      case StmtKind::Module: {
        const ModuleDecl& m = s.modules[st.index];
        out += "module " + m.name + " = " + m.expr.op;
        if (m.expr.op == "coker") {
          out += " " + print_matrix(m.expr.rows);
          if (m.expr.has_degrees) out += " degrees " + print_ints(m.expr.degrees);
        } else if (!m.expr.args.empty()) {
          out += " " + join(m.expr.args, " ");
        }
        break;
      }
      case StmtKind::Dualizer: {
        const auto& d = s.dualizers[st.index];
        out += "dualizer " + d.name + " = " + d.module;
        break;
      }
      case StmtKind::Prime: {
        const auto& p = s.primes[st.index];
        out += "prime " + p.name + " = ideal(" + join(p.ideal) + ")";
        if (!p.contains.empty()) out += " in " + join(p.contains);
        break;
      }
      case StmtKind::GradeFn: {
        const auto& g = s.gradefns[st.index];
        std::vector<std::string> es;
        for (const auto& [p, v] : g.entries) es.push_back(p + ": " + (v ? std::to_string(*v) : "inf"));
        out += "gradefn " + g.name + " = {" + join(es) + "}";
        break;
      }
      case StmtKind::Map: {
        const auto& m = s.maps[st.index];
        out += "map " + m.name + " = " + m.source + " -> " + m.target + " " + print_matrix(m.rows);
        break;
      }
      case StmtKind::Witness: {
        const auto& w = s.witnesses[st.index];
        out += "witness " + w.name + " = " + print_wexpr(w.expr);
        break;
      }
      case StmtKind::Command: {
        const auto& c = s.commands[st.index];
        out += c.name;
        for (const auto& p : c.positional) out += " " + p;
        for (const auto& [k, v] : c.keywords) out += " " + k + " " + v;
        break;
      }
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runner

namespace {

using json = nlohmann::ordered_json;

std::string twist_suffix(int d) { return d == 0 ? "" : "(" + std::to_string(-d) + ")"; }

/// Short rendering: 0, R(-1) + R, R/(x)(1), otherwise the presentation.
std::string pretty(const FpModule& M, bool twist = true) {
  FpModule m = minimal_presentation(M);
  const Ring& R = *m.ring();
  if (m.ngens() == 0) return "0";
  if (m.rels().cols() == 0) {
    std::vector<std::string> parts;
    for (int d : m.degrees()) parts.push_back("R" + (twist ? twist_suffix(d) : ""));
    return join(parts, " + ");
  }
  if (m.ngens() == 1) {
    std::vector<std::string> gens;
    for (std::size_t j = 0; j < m.rels().cols(); ++j) gens.push_back(R.format(m.rels().at(0, j)));
    return "R/(" + join(gens) + ")" + (twist ? twist_suffix(m.degrees()[0]) : "");
  }
  return m.describe();
}

json module_json(const FpModule& M) {
  FpModule m = minimal_presentation(M);
  json j;
  j["module"] = pretty(m);
  j["presentation"] = m.describe();
  j["zero"] = m.ngens() == 0;
  json num = json::object();
  for (const auto& [d, c] : hilbert(m).numerator) num[std::to_string(d)] = c;
  j["hilbert_numerator"] = num;
  return j;
}

json local_json(const LocalDim& d) { return d ? json(*d) : json("inf"); }

json verdict_json(const BoundedVerdict& v) {
  switch (v.kind) {
    case BoundedVerdict::Kind::Value: return json(v.value);
    case BoundedVerdict::Kind::Infinite: return json("inf");
    case BoundedVerdict::Kind::Fail: return json("Fail");
  }
  return json();
}

struct Failed {
  std::string name;
};

class Runner {
 public:
  Runner(const Session& s, const RunOptions& o, std::ostream& out) : s_(s), o_(o), out_(out) {}

  int run() {
    for (const auto& st : s_.order) {
      if (st.kind == StmtKind::Command) {
        command(s_.commands[st.index]);
        continue;
      }
      try {
        declaration(st);
      } catch (const Error& e) {
        json rep;
        rep["declaration"] = decl_name(st);
        rep["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        emit(rep);
        failed_.insert(decl_name(st));
        if (st.kind == StmtKind::Ring) ring_failed_ = true;
      }
    }
    return errors_ ? 1 : 0;
  }

 private:
  std::string decl_name(const Statement& st) const {
    switch (st.kind) {
      case StmtKind::Ring: return s_.ring->name;
      case StmtKind::Module: return s_.modules[st.index].name;
      case StmtKind::Dualizer: return s_.dualizers[st.index].name;
      case StmtKind::Prime: return s_.primes[st.index].name;
      case StmtKind::GradeFn: return s_.gradefns[st.index].name;
      case StmtKind::Map: return s_.maps[st.index].name;
      case StmtKind::Witness: return s_.witnesses[st.index].name;
      case StmtKind::Command: break;
    }
    return "";
  }

  void require(const std::string& name) const {
    if (ring_failed_) throw Error(ErrorKind::BadArgument, "the ring declaration failed");
    if (failed_.count(name)) throw Error(ErrorKind::BadArgument, "declaration '" + name + "' failed");
  }

  const FpModule& mod(const std::string& n) const {
    require(n);
    return mods_.at(n);
  }

  Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const std::vector<int>& row_deg,
                      std::optional<std::vector<int>> col_deg) const {
    const std::size_t ncols = rows.empty() ? (col_deg ? col_deg->size() : 0) : rows.front().size();
    std::vector<Polynomial> entries;
    std::vector<int> cd = col_deg ? *col_deg : std::vector<int>(ncols, 0);
    if (cd.size() != ncols) throw Error(ErrorKind::RankMismatch, "matrix has the wrong number of columns");
    for (std::size_t j = 0; j < ncols && !col_deg; ++j)
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Polynomial p = ring_->parse(rows[i][j]);
        if (!p.is_zero()) {
          cd[j] = p.degree() + row_deg[i];
          break;
        }
      }
    Matrix m(row_deg, cd);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = ring_->parse(rows[i][j]);
    return m;
  }

  Dualizer dualizer(const std::optional<std::string>& name, std::size_t bound) {
    std::string key = name.value_or("") + "#" + std::to_string(bound);
    auto it = dual_cache_.find(key);
    if (it != dual_cache_.end()) return it->second;
    FpModule C = name ? mod(dual_of_.at(*name)) : FpModule::free(ring_, {0});
    if (name) require(*name);
    Dualizer d = certify_dualizer(C, bound);
    dual_cache_.emplace(key, d);
    return d;
  }

  void declaration(const Statement& st) {
    switch (st.kind) {
      case StmtKind::Ring: {
        const RingDecl& r = *s_.ring;
        ring_ = Ring::make(r.p, r.vars, r.order, r.ideal);
        break;
      }
      case StmtKind::Module: {
        const ModuleDecl& m = s_.modules[st.index];
        mods_[m.name] = module_expr(m.expr);
        break;
      }
      case StmtKind::Dualizer: {
        const auto& d = s_.dualizers[st.index];
        mod(d.module);
        dual_of_[d.name] = d.module;
        break;
      }
      case StmtKind::Prime: {
        const auto& p = s_.primes[st.index];
        require(s_.ring->name);
        std::vector<Polynomial> ideal;
        for (const auto& g : p.ideal) ideal.push_back(ring_->parse(g));
        for (const auto& q : p.contains) require(q);
        prime_list_.push_back(make_prime(ring_, p.name, ideal, p.contains, prime_list_));
        break;
      }
      case StmtKind::GradeFn: {
        const auto& g = s_.gradefns[st.index];
        GradeFnTable t;
        for (const auto& [p, v] : g.entries)
          t.entries[p] = v ? LocalDim(static_cast<std::size_t>(*v)) : LocalDim();
        fns_[g.name] = t;
        break;
      }
      case StmtKind::Map: {
        const auto& m = s_.maps[st.index];
        const FpModule &src = mod(m.source), &tgt = mod(m.target);
        if (m.rows.size() != tgt.ngens())
          throw Error(ErrorKind::RankMismatch, "map " + m.name + " needs one row per target generator");
        maps_[m.name] = make_map(src, tgt, parse_matrix(m.rows, tgt.degrees(), src.degrees()));
        break;
      }
      case StmtKind::Witness:
        break;
      case StmtKind::Command:
        break;
    }
  }

  FpModule module_expr(const ModuleExpr& e) {
    require(s_.ring->name);
    const auto& a = e.args;
    if (e.op == "coker") {
      std::vector<int> degs = e.has_degrees ? e.degrees : std::vector<int>(e.rows.size(), 0);
      return FpModule(ring_, degs, parse_matrix(e.rows, degs, std::nullopt));
    }
    if (e.op == "residue") return FpModule::residue_field(ring_);
    if (e.op == "syzygy") return syzygy(mod(a[0]), std::stoul(a[1]));
    if (e.op == "dual") return dual(mod(a[0]), dualizer(a[1], o_.bound));
    if (e.op == "transpose") return transpose(mod(a[0]), dualizer(a[1], o_.bound)).module;
    if (e.op == "cosyzygy") return cosyzygy(mod(a[0]), dualizer(a[1], o_.bound));
    if (e.op == "sum") return direct_sum(mod(a[0]), mod(a[1]));
    if (e.op == "shift") return shift(mod(a[0]), std::stoi(a[1]));
    if (e.op == "ext") return ext(mod(a[0]), mod(a[1]), std::stoul(a[2]));
    if (e.op == "tor") return tor(mod(a[0]), mod(a[1]), std::stoul(a[2]));
    if (e.op == "hom") return hom(mod(a[0]), mod(a[1]));
    throw Error(ErrorKind::BadArgument, "unknown module expression " + e.op);
  }

  std::vector<std::string> set_items(const std::string& v) const {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
      if (c == '{' || c == '}' || c == ' ') continue;
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }

  std::vector<PrimeRecord> primes(const std::optional<std::string>& v) const {
    if (!v || *v == "all") return prime_list_;
    std::vector<PrimeRecord> out;
    for (const auto& n : set_items(*v)) {
      require(n);
      for (const auto& p : prime_list_)
        if (p.label == n) out.push_back(p);
    }
    return out;
  }

  const PrimeRecord& prime(const std::string& n) const {
    require(n);
    for (const auto& p : prime_list_)
      if (p.label == n) return p;
    throw Error(ErrorKind::BadArgument, "unknown prime " + n);
  }

  ModuleKind kind(const std::optional<std::string>& v, std::size_t bound) {
    if (!v || *v == "projective") return ModuleKind::projectives();
    return ModuleKind::dualizer(dualizer(*v, bound));
  }

  void build_witness(const WitnessExpr& e, const std::vector<std::string>& set, ResolvingWitness& w) {
    ResolvingWitness& w_out = w;
    if (e.op == "ref") {
      require(e.names[0]);
      for (const auto& w : s_.witnesses)
        if (w.name == e.names[0]) return build_witness(w.expr, set, w_out);
    }
    WitnessNode n;
    if (e.op == "gen") {
      n.kind = WitnessNode::Kind::Generator;
      auto it = std::find(set.begin(), set.end(), e.names[0]);
      n.index = static_cast<std::size_t>(it - set.begin());
    } else if (e.op == "free") {
      n.kind = WitnessNode::Kind::Free;
      n.twists = e.ints;
    } else {
      for (const auto& c : e.children) {
        build_witness(c, set, w);
        n.children.push_back(w.nodes.size() - 1);
      }
      if (e.op == "syz") {
        n.kind = WitnessNode::Kind::Syzygy;
      } else if (e.op == "summand") {
        n.kind = WitnessNode::Kind::Summand;
        n.module = mod(e.names[0]);
        n.complement = mod(e.names[1]);
      } else {
        n.kind = e.op == "ext" ? WitnessNode::Kind::Extension : WitnessNode::Kind::EpiKernel;
        n.module = mod(e.names[0]);
        require(e.names[1]);
        require(e.names[2]);
        n.left = maps_.at(e.names[1]).matrix;
        n.right = maps_.at(e.names[2]).matrix;
      }
    }
    w.nodes.push_back(std::move(n));
  }

  void command(const Command& c) {
    json rep;
    rep["command"] = c.name;
    rep["line"] = c.line;
    json inputs;
    inputs["args"] = c.positional;
    std::map<std::string, std::string> kw;
    for (const auto& [k, v] : c.keywords) {
      inputs[k] = v;
      kw[k] = v;
    }
    rep["inputs"] = inputs;
    auto opt = [&](const std::string& k) -> std::optional<std::string> {
      auto it = kw.find(k);
      if (it == kw.end()) return std::nullopt;
      return it->second;
    };
    const std::size_t bound = opt("bound") ? std::stoul(*opt("bound")) : o_.bound;
    const std::uint64_t seed = opt("seed") ? std::stoull(*opt("seed")) : o_.seed;
    const int trials = opt("trials") ? std::stoi(*opt("trials")) : o_.trials;
    rep["seed"] = seed;
    rep["bound"] = nullptr;
    json cert = json::object();
    try {
      require(s_.ring->name);
      const auto& P = c.positional;
      const std::string& n = c.name;
      if (n == "semidual") {
        rep["bound"] = bound;
        const FpModule& C = dual_of_.count(P[0]) ? mod(dual_of_.at(P[0])) : mod(P[0]);
        BoundedVerdict v = is_semidualizing(C, bound);
        rep["verdict"] = v.passed() ? "SemidualizingUpTo" : "Fail";
        if (v.witness) {
          rep["witness"] = "Ext^" + std::to_string(*v.witness_index) + " ≅ " + pretty(*v.witness, false);
          cert["witness_graded"] = pretty(*v.witness);
          cert["witness_index"] = *v.witness_index;
        }
        cert["violations"] = v.violations;
        cert["reason"] = v.reason;
      } else if (n == "totref" || n == "gcdim") {
        rep["bound"] = bound;
        Dualizer C = dualizer(opt("dualizer"), bound);
        BoundedVerdict v = n == "totref" ? is_totally_reflexive(mod(P[0]), C, bound) : gc_dim(mod(P[0]), C, bound);
        if (n == "totref") {
          rep["verdict"] = v.passed() ? "Pass" : "Fail";
        } else {
          rep["verdict"] = verdict_json(v);
          if (!v.ab_check.empty()) rep["ab_check"] = v.ab_check;
        }
        cert["reason"] = v.reason;
        if (v.witness_index) cert["witness_index"] = *v.witness_index;
      } else if (n == "depth") {
        rep["verdict"] = depth(mod(P[0]));
      } else if (n == "grade") {
        rep["verdict"] = grade(ring_, prime(P[0]).ideal);
      } else if (n == "transpose") {
        TransposeResult t = transpose(mod(P[0]), dualizer(opt("dualizer"), o_.bound));
        rep["verdict"] = pretty(t.module);
        cert = module_json(t.module);
      } else if (n == "decompose") {
        auto d = transpose_decompose(mod(P[0]), dualizer(opt("dualizer"), o_.bound));
        rep["verdict"] = d.certified() ? "Exact" : "NotExact";
        cert["E"] = module_json(d.E);
        cert["T"] = module_json(d.T);
        cert["S"] = module_json(d.S);
        cert["checks"] = {{"injective", d.injective}, {"exact", d.exact}, {"surjective", d.surjective}};
      } else if (n == "transpose_ses") {
        require(P[0]);
        require(P[1]);
        SixTerm t = transpose_ses(maps_.at(P[0]), maps_.at(P[1]), dualizer(opt("dualizer"), o_.bound));
        rep["verdict"] = t.certified() ? "Exact" : "NotExact";
        json ms = json::array();
        for (const auto& m : t.modules) ms.push_back(module_json(m));
        cert["terms"] = ms;
        cert["exact"] = t.exact;
      } else if (n == "cosyzygy") {
        FpModule m = cosyzygy(mod(P[0]), dualizer(opt("dualizer"), o_.bound));
        rep["verdict"] = pretty(m);
        cert = module_json(m);
      } else if (n == "ext" || n == "tor" || n == "hom") {
        std::size_t i = opt("index") ? std::stoul(*opt("index")) : 0;
        FpModule m = n == "ext" ? ext(mod(P[0]), mod(P[1]), i)
                     : n == "tor" ? tor(mod(P[0]), mod(P[1]), i)
                                  : hom(mod(P[0]), mod(P[1]));
        rep["verdict"] = pretty(m);
        cert = module_json(m);
      } else if (n == "resolution") {
        rep["bound"] = bound;
        Resolution F = free_resolution(mod(P[0]), bound);
        rep["verdict"] = F.betti();
        cert["finite"] = F.finite;
        if (F.finite) cert["length"] = F.length();
        json degs = json::array();
        for (std::size_t i = 0; i <= F.d.size(); ++i) degs.push_back(F.free_degrees(i));
        cert["degrees"] = degs;
        cert["certified"] = certify_resolution(F);
      } else if (n == "hilbert") {
        int D = opt("degree") ? std::stoi(*opt("degree")) : 10;
        HilbertSeries h = hilbert(mod(P[0]));
        rep["verdict"] = h.range(0, D);
        json num = json::object();
        for (const auto& [d, v] : h.numerator) num[std::to_string(d)] = v;
        cert["numerator"] = num;
        cert["nvars"] = h.nvars;
      } else if (n == "dim") {
        int d = krull_dim(mod(P[0]));
        rep["verdict"] = d == kZeroDim ? json("-inf") : json(d);
      } else if (n == "iso") {
        IsoResult r = is_isomorphic(mod(P[0]), mod(P[1]), trials, seed);
        rep["verdict"] = to_string(r.verdict);
        cert["reason"] = r.reason;
        cert["trials"] = trials;
      } else if (n == "phi" || n == "lambda") {
        rep["bound"] = bound;
        auto ps = primes(opt("primes"));
        ModuleKind k = kind(opt("kind"), bound);
        if (n == "phi") {
          std::vector<FpModule> S;
          for (const auto& m : set_items(*opt("set"))) S.push_back(mod(m));
          GradeFnTable t = phi(S, k, ps, bound);
          json tab = json::object();
          for (const auto& [label, v] : t.entries) tab[label] = local_json(v);
          rep["verdict"] = tab;
        } else {
          require(*opt("fn"));
          Judgement j = lambda_member(mod(P[0]), fns_.at(*opt("fn")), k, ps, bound);
          rep["verdict"] = j.yes ? "Yes" : "No";
          cert["detail"] = j.detail;
        }
        cert["scope"] = "relative to the supplied primes";
      } else if (n == "gcheck") {
        require(P[0]);
        Judgement j = is_grade_consistent(fns_.at(P[0]), primes(opt("primes")), ring_);
        rep["verdict"] = j.yes ? "Yes" : "No";
        cert["detail"] = j.detail;
        cert["scope"] = "relative to the supplied primes";
      } else if (n == "witness") {
        auto set = set_items(*opt("set"));
        std::vector<FpModule> S;
        for (const auto& m : set) S.push_back(mod(m));
        const WitnessDecl* wd = nullptr;
        for (const auto& w : s_.witnesses)
          if (w.name == P[0]) wd = &w;
        ResolvingWitness w;
        build_witness(wd->expr, set, w);
        w.root = w.nodes.size() - 1;
        WitnessVerdict v = check_resolving_witness(w, S, mod(*opt("target")));
        rep["verdict"] = v.valid ? "Valid" : "Invalid";
        cert["node"] = v.node;
        cert["node_kind"] = to_string(w.nodes.at(std::min(v.node, w.nodes.size() - 1)).kind);
        cert["reason"] = v.reason;
      } else if (n == "wwords") {
        auto ws = w_words(dualizer(opt("dualizer"), o_.bound), std::stoul(*opt("length")), seed);
        json list = json::array();
        for (const auto& w : ws) list.push_back({{"word", w.word}, {"module", pretty(w.module)}});
        rep["verdict"] = list;
      } else if (n == "extvdim") {
        rep["bound"] = bound;
        std::vector<FpModule> B;
        for (const auto& m : set_items(*opt("set"))) B.push_back(mod(m));
        BoundedVerdict v = ext_vanishing_dim(mod(P[0]), B, bound);
        rep["verdict"] = verdict_json(v);
        if (!v.reason.empty()) cert["reason"] = v.reason;
      } else if (n == "stable") {
        std::size_t sb = opt("summands") ? std::stoul(*opt("summands")) : 4;
        auto r = stable_equiv_mod_add(mod(P[0]), mod(P[1]), dualizer(opt("dualizer"), o_.bound), sb, seed, trials);
        rep["verdict"] = r.yes ? "Yes" : "Unknown";
        if (r.yes) cert["witness"] = {{"P", r.p}, {"Q", r.q}};
        cert["reason"] = r.reason;
      } else if (n == "localdepth") {
        rep["verdict"] = local_json(local_depth(mod(P[0]), prime(*opt("prime"))));
      } else if (n == "localpd" || n == "localgcdim") {
        rep["bound"] = bound;
        BoundedVerdict v = n == "localpd"
                               ? local_pd(mod(P[0]), prime(*opt("prime")), bound)
                               : local_gcdim(mod(P[0]), dualizer(opt("dualizer"), bound), prime(*opt("prime")), bound);
        rep["verdict"] = verdict_json(v);
        cert["reason"] = v.reason;
      }
      rep["certificates"] = cert;
    } catch (const Error& e) {
      rep["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    emit(rep);
  }

  void emit(const json& rep) {
    if (rep.contains("error")) errors_ = true;
    if (o_.format == Format::Json) {
      out_ << rep.dump(-1, ' ', false, json::error_handler_t::replace) << "\n";
      return;
    }
    std::string head = rep.contains("command") ? "[line " + rep["line"].dump() + "] " + rep["command"].get<std::string>()
                                               : "declaration " + rep["declaration"].get<std::string>();
    out_ << head << "\n";
    for (const auto& [k, v] : rep.items()) {
      if (k == "command" || k == "line" || k == "declaration") continue;
      if (k == "certificates" && v.is_object()) {
        for (const auto& [ck, cv] : v.items())
          out_ << "  " << ck << ": " << (cv.is_string() ? cv.get<std::string>() : cv.dump()) << "\n";
        continue;
      }
      out_ << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }

  const Session& s_;
  const RunOptions& o_;
  std::ostream& out_;
  RingPtr ring_;
  bool ring_failed_ = false;
  bool errors_ = false;
  std::set<std::string> failed_;
  std::map<std::string, FpModule> mods_;
  std::map<std::string, std::string> dual_of_;
  std::map<std::string, Dualizer> dual_cache_;
  std::vector<PrimeRecord> prime_list_;
  std::map<std::string, GradeFnTable> fns_;
  std::map<std::string, ModuleMap> maps_;
};

}  // namespace

int run(const Session& s, const RunOptions& opts, std::ostream& out) { return Runner(s, opts, out).run(); }

}  // namespace gcdim::session
