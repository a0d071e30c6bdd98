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
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcdim/error.hpp"

namespace gcdim::session {

struct RingDecl {
  std::string name;
  std::uint64_t p = 101;
  std::vector<std::string> vars;
  std::string order;
  std::vector<std::string> ideal;
  bool operator==(const RingDecl&) const = default;
};

/// `coker <rows> degrees [..]`, or a derived module `<op> <args>`.
struct ModuleExpr {
  std::string op = "coker";
  std::vector<std::vector<std::string>> rows;
  std::vector<int> degrees;
  bool has_degrees = false;
  std::vector<std::string> args;
  bool operator==(const ModuleExpr&) const = default;
};

struct ModuleDecl {
  std::string name;
  ModuleExpr expr;
  bool operator==(const ModuleDecl&) const = default;
};

struct DualizerDecl {
  std::string name, module;
  bool operator==(const DualizerDecl&) const = default;
};

struct PrimeDecl {
  std::string name;
  std::vector<std::string> ideal;
  std::vector<std::string> contains;  // primes declared inside this one
  bool operator==(const PrimeDecl&) const = default;
};

struct GradeFnDecl {
  std::string name;
  std::vector<std::pair<std::string, std::optional<long>>> entries;  // nullopt = inf
  bool operator==(const GradeFnDecl&) const = default;
};

struct MapDecl {
  std::string name, source, target;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const MapDecl&) const = default;
};

/// <witness name> | gen(M) | free[..] | syz(w) | ext(w0, w1, A, f, g) | kernel(w0, w1, A, f, g) | summand(w0, A, B)
struct WitnessExpr {
  std::string op;
  std::vector<WitnessExpr> children;
  std::vector<std::string> names;
  std::vector<int> ints;
  bool operator==(const WitnessExpr&) const = default;
};

struct WitnessDecl {
  std::string name;
  WitnessExpr expr;
  bool operator==(const WitnessDecl&) const = default;
};

struct Command {
  std::string name;
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> keywords;  // canonical value text
  int line = 0;
  bool operator==(const Command& o) const {
    return name == o.name && positional == o.positional && keywords == o.keywords;
  }
};

enum class StmtKind { Ring, Module, Dualizer, Prime, GradeFn, Map, Witness, Command };

struct Statement {
  StmtKind kind;
  std::size_t index;  // into the matching vector of Session
  bool operator==(const Statement&) const = default;
};

struct Session {
  std::optional<RingDecl> ring;
  std::vector<ModuleDecl> modules;
  std::vector<DualizerDecl> dualizers;
  std::vector<PrimeDecl> primes;
  std::vector<GradeFnDecl> gradefns;
  std::vector<MapDecl> maps;
  std::vector<WitnessDecl> witnesses;
  std::vector<Command> commands;
  std::vector<Statement> order;

  /// Statement count, commands included.
  std::size_t declarations() const { return order.size(); }
  bool operator==(const Session& o) const {
    return ring == o.ring && modules == o.modules && dualizers == o.dualizers && primes == o.primes &&
           gradefns == o.gradefns && maps == o.maps && witnesses == o.witnesses && commands == o.commands &&
           order == o.order;
  }
};

/// Throws Error(Parse) with "line L, column C: ..." in the message.
Session parse_session(const std::string& text);
std::string print_session(const Session& s);

enum class Format { Json, Text };

struct RunOptions {
  std::size_t bound = 20;
  std::uint64_t seed = 0;
  int trials = 64;
  Format format = Format::Json;
};

/// Writes one report per command (and one per failing declaration). Returns 0
/// when nothing failed, 1 otherwise.
int run(const Session& s, const RunOptions& opts, std::ostream& out);

}  // namespace gcdim::session
