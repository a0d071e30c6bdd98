// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "gcdim/homalg.hpp"
#include "gcdim/spectrum.hpp"
#include "oracle/ext_oracle.hpp"

using namespace fx;

namespace {

constexpr std::size_t kBound = 20;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

Dualizer DR(const RingPtr& R) { return certify_dualizer(free(R), kBound); }

std::vector<Named> fixtures(const RingPtr& R) {
  std::vector<Named> out = modules(R, 1);
  out.push_back({"random2", random_coker(R, 2)});
  return out;
}

std::vector<Polynomial> ideal(const RingPtr& R, std::vector<std::string> gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(R->parse(g));
  return out;
}

std::vector<PrimeRecord> coordinate_primes(const RingPtr& R) {
  std::vector<PrimeRecord> ps;
  ps.push_back(make_prime(R, "px", ideal(R, {"x"}), {}, ps));
  ps.push_back(make_prime(R, "py", ideal(R, {"y"}), {}, ps));
  ps.push_back(make_prime(R, "m", ideal(R, {"x", "y"}), {"px", "py"}, ps));
  return ps;
}

std::string name(const RingPtr& R) {
  if (R == R1()) return "R1";
  if (R == R2()) return "R2";
  if (R == R3()) return "R3";
  if (R == R4()) return "R4";
  return "R5";
}

// 1. gc_dim + depth X = depth R
void auslander_buchsbaum(Outcome& o) {
  std::size_t checked = 0;
  for (auto R : {R2(), R3()}) {
    std::size_t dR = ring_depth(R);
    for (const auto& f : fixtures(R)) {
      auto v = gc_dim(f.M, DR(R), kBound);
      if (v.kind != BoundedVerdict::Kind::Value) continue;
      ++checked;
      o.expect(v.value + depth(f.M) == dR, name(R) + " " + f.name);
    }
  }
  o.expect(checked >= 8, "too few finite verdicts");
  o.note << checked << " finite verdicts";
}

// 2. gc_dim agrees with the last nonvanishing Ext
void cdim_characterization(Outcome& o) {
  std::size_t checked = 0;
  for (auto R : {R1(), R2(), R3(), R4(), R5()})
    for (const auto& f : fixtures(R)) {
      auto v = gc_dim(f.M, DR(R), kBound);
      if (v.kind != BoundedVerdict::Kind::Value) continue;
      std::size_t n = 0;
      for (std::size_t i = 1; i <= kBound; ++i)
        if (!ext_is_zero(f.M, free(R), i)) n = i;
      ++checked;
      o.expect(v.value == n, name(R) + " " + f.name);
    }
  o.note << (o.ok ? "" : "; ") << checked << " finite verdicts";
}

// 3. transpose is an involution up to free summands
void transpose_involution(Outcome& o) {
  for (auto R : {R2(), R3()}) {
    Dualizer C = DR(R);
    for (const auto& f : fixtures(R)) {
      FpModule tt = transpose(transpose(f.M, C).module, C).module;
      o.expect(stable_equiv_mod_add(tt, f.M, C, 4).yes, name(R) + " " + f.name);
    }
  }
}

// 4. six-term sequence on syzygy sequences
void six_term(Outcome& o) {
  for (auto R : {R1(), R2(), R3(), R4(), R5()}) {
    Dualizer C = DR(R);
    for (const auto& f : fixtures(R)) {
      auto [inc, proj] = syzygy_sequence(f.M);
      o.expect(transpose_ses(inc, proj, C).certified(), name(R) + " " + f.name);
    }
  }
}

// 5. filtration sequence and Hilbert additivity
void filtration(Outcome& o) {
  for (auto R : {R1(), R2(), R3(), R4(), R5()}) {
    Dualizer C = DR(R);
    for (const auto& f : fixtures(R)) {
      auto d = transpose_decompose(f.M, C);
      o.expect(d.certified(), name(R) + " " + f.name + " not exact");
      auto t = hilbert(d.T).range(-10, 10), e = hilbert(d.E).range(-10, 10), s = hilbert(d.S).range(-10, 10);
      for (std::size_t i = 0; i < t.size(); ++i) o.expect(t[i] == e[i] + s[i], name(R) + " " + f.name + " HS");
    }
  }
}

// 6. gc_dim of the transpose of k over R3
void transpose_dimension(Outcome& o) {
  auto v = gc_dim(transpose(k(R3()), DR(R3())).module, DR(R3()), kBound);
  o.expect(v.kind == BoundedVerdict::Kind::Value && v.value == 1, "got " + v.to_string());
  o.note << "verdict " << v.to_string();
}

// 7. semidualizing gate
void semidualizing_gate(Outcome& o) {
  for (auto R : {R1(), R2(), R3(), R4(), R5()})
    o.expect(is_semidualizing(free(R), kBound).passed(), name(R) + " R rejected");
  auto v = is_semidualizing(mod_x(R1()), kBound);
  o.expect(v.kind == BoundedVerdict::Kind::Fail, "R/(x) accepted");
  o.expect(v.witness.has_value() && v.witness_index == 1u, "no Ext^1 witness");
  if (v.witness) {
    auto iso = is_isomorphic_up_to_shift(*v.witness, mod_x(R1()));
    o.expect(iso.verdict == IsoVerdict::Iso, "witness not isomorphic to R/(x)");
  }
}

// 8. regular rings: gc_dim = resolution length
void regular_degeneration(Outcome& o) {
  std::vector<std::pair<FpModule, std::size_t>> cases = {{k(R4()), 2}, {mod_x(R4()), 1}, {free(R4()), 0}};
  for (const auto& [M, want] : cases) {
    auto v = gc_dim(M, DR(R4()), kBound);
    auto F = free_resolution(M, kBound);
    o.expect(v.kind == BoundedVerdict::Kind::Value && v.value == want && F.finite && F.length() == want,
             "expected " + std::to_string(want));
  }
}

// 9. phi lands in grade consistent functions and round-trips
void phi_round_trip(Outcome& o) {
  auto ps = coordinate_primes(R4());
  auto kind = ModuleKind::projectives();
  GradeFnTable f = phi({mod_x(R4())}, kind, ps, kBound);
  o.expect(f.entries.at("px") == LocalDim(1) && f.entries.at("py") == LocalDim(0) && f.entries.at("m") == LocalDim(1),
           "phi table");
  o.expect(is_grade_consistent(f, ps, R4()).yes, "not grade consistent");
  o.expect(lambda_member(mod_x(R4()), f, kind, ps, kBound).yes, "round trip");
  GradeFnTable zero{{{"px", 0}, {"py", 0}, {"m", 0}}};
  auto no = lambda_member(mod_x(R4()), zero, kind, ps, kBound);
  o.expect(!no.yes && no.detail.rfind("px", 0) == 0, "f = 0 witness: " + no.detail);
}

// 10. localization at the maximal ideal
void localization(Outcome& o) {
  for (auto R : {R1(), R2(), R3(), R4(), R5()}) {
    PrimeRecord m = maximal_prime(R);
    for (const auto& f : fixtures(R)) {
      o.expect(local_depth(f.M, m) == LocalDim(depth(f.M)), name(R) + " " + f.name + " depth");
      if (R != R4()) continue;
      auto v = local_pd(f.M, m, kBound);
      auto F = free_resolution(f.M, kBound);
      o.expect(F.finite && v.kind == BoundedVerdict::Kind::Value && v.value == F.length(), f.name + " pd");
    }
  }
}

// 11. independent oracle for graded Ext dimensions
void oracle_equivalence(Outcome& o) {
  std::size_t compared = 0;
  for (auto R : {R2(), R4()}) {
    oracle::QRing Q = R == R2() ? oracle::QRing(1, {{{{2}, 1}}}) : oracle::QRing(2, {});
    auto mods = fixtures(R);
    for (const auto& M : mods)
      for (const auto& N : mods) {
        oracle::ExtOracle ex(Q, M.M, N.M, 3, 12);
        for (std::size_t i = 0; i <= 3; ++i) {
          auto hs = hilbert(ext(M.M, N.M, i));
          for (int t = -8; t <= 8; ++t, ++compared)
            o.expect(hs.dim(t) == ex.dim(i, t), name(R) + " " + M.name + "," + N.name + " i=" + std::to_string(i));
        }
      }
  }
  o.note << (o.ok ? "" : "; ") << compared << " graded dimensions";
}

// 12. join law
void join_law(Outcome& o) {
  std::mt19937_64 rng(2024);
  struct Setting {
    RingPtr R;
    std::vector<PrimeRecord> ps;
    ModuleKind kind;
  };
  std::vector<Setting> settings = {{R4(), coordinate_primes(R4()), ModuleKind::projectives()},
                                   {R3(), coordinate_primes(R3()), ModuleKind::dualizer(DR(R3()))}};
  for (int trial = 0; trial < 20; ++trial) {
    const Setting& s = settings[trial % 2];
    std::vector<FpModule> pool;
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      for (const auto& f : modules(s.R, seed)) pool.push_back(f.M);
    std::vector<FpModule> a{pool[rng() % pool.size()]}, b{pool[rng() % pool.size()]};
    if (rng() % 2) a.push_back(pool[rng() % pool.size()]);
    std::vector<FpModule> both = a;
    both.insert(both.end(), b.begin(), b.end());
    auto fa = phi(a, s.kind, s.ps, kBound), fb = phi(b, s.kind, s.ps, kBound), fab = phi(both, s.kind, s.ps, kBound);
    for (const auto& p : s.ps) {
      LocalDim x = fa.entries.at(p.label), y = fb.entries.at(p.label);
      LocalDim join = (!x || !y) ? LocalDim() : LocalDim(std::max(*x, *y));
      o.expect(fab.entries.at(p.label) == join, "trial " + std::to_string(trial) + " at " + p.label);
    }
  }
}

// 13. resolving witnesses
struct Handmade {
  std::string name;
  ResolvingWitness w;
  std::vector<FpModule> S;
  FpModule target;
};

Matrix entries(const RingPtr& R, std::vector<int> rows, std::vector<int> cols, std::vector<std::string> vals) {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) m.at(i, j) = R->parse(vals[j * rows.size() + i]);
  return m;
}

WitnessNode node(WitnessNode::Kind kind, std::vector<std::size_t> children = {}) {
  WitnessNode n;
  n.kind = kind;
  n.children = std::move(children);
  return n;
}

std::vector<Handmade> valid_witnesses() {
  using K = WitnessNode::Kind;
  std::vector<Handmade> out;
  RingPtr A = R2(), B = R4();
  WitnessNode gen = node(K::Generator);

  out.push_back({"generator", {{gen}, 0}, {k(A)}, k(A)});
  out.push_back({"syzygy", {{gen, node(K::Syzygy, {0})}, 1}, {k(A)}, shift(k(A), -1)});
  WitnessNode f0 = node(K::Free);
  f0.twists = {0};
  out.push_back({"free", {{f0}, 0}, {k(A)}, free(A)});
  WitnessNode f01 = node(K::Free);
  f01.twists = {0, 1};
  out.push_back({"free pair", {{f01}, 0}, {k(B)}, free(B, {0, 1})});

  WitnessNode split = node(K::Extension, {0, 0});
  split.module = direct_sum(k(A), k(A));
  split.left = entries(A, {0, 0}, {0}, {"1", "0"});
  split.right = entries(A, {0}, {0, 0}, {"0", "1"});
  out.push_back({"split extension", {{gen, split}, 1}, {k(A)}, direct_sum(k(A), k(A))});

  WitnessNode sum = node(K::Extension, {0, 1});
  sum.module = direct_sum(k(A), free(A));
  sum.left = entries(A, {0, 0}, {0}, {"1", "0"});
  sum.right = entries(A, {0}, {0, 0}, {"0", "1"});
  WitnessNode part = node(K::Summand, {2});
  part.module = free(A);
  part.complement = k(A);
  out.push_back({"summand", {{gen, f0, sum, part}, 3}, {k(A)}, free(A)});

  WitnessNode ker = node(K::EpiKernel, {1, 0});
  ker.module = syzygy(k(A), 1);
  ker.left = entries(A, {0}, {1}, {"x"});
  ker.right = Matrix::identity({0});
  out.push_back({"kernel chain", {{gen, f0, sum, part, ker}, 4}, {k(A)}, shift(k(A), -1)});

  out.push_back({"second syzygy", {{gen, node(K::Syzygy, {0}), node(K::Syzygy, {1})}, 2}, {k(B)}, free(B, {2})});

  WitnessNode nonsplit = node(K::Extension, {1, 0});
  nonsplit.module = free(A);
  nonsplit.left = entries(A, {0}, {1}, {"x"});
  nonsplit.right = Matrix::identity({0});
  out.push_back({"nonsplit extension", {{gen, node(K::Syzygy, {0}), nonsplit}, 2}, {k(A)}, free(A)});

  WitnessNode omega = node(K::EpiKernel, {1, 0});
  omega.module = syzygy(k(B), 1);
  omega.left = entries(B, {0}, {1, 1}, {"x", "y"});
  omega.right = Matrix::identity({0});
  out.push_back({"kernel of R -> k", {{gen, f0, omega}, 2}, {k(B)}, syzygy(k(B), 1)});
  return out;
}

void witness_soundness(Outcome& o) {
  auto ws = valid_witnesses();
  for (const auto& h : ws) {
    clear_resolution_cache();
    auto v = check_resolving_witness(h.w, h.S, h.target);
    o.expect(v.valid, h.name + ": " + v.reason);
  }
  // one corrupted certificate each: (witness, corrupted node)
  std::vector<std::pair<Handmade, std::size_t>> bad;
  {
    Handmade h = ws[4];
    h.w.nodes[1].right = entries(R2(), {0}, {0, 0}, {"1", "0"});
    bad.push_back({h, 1});
  }
  {
    Handmade h = ws[6];
    h.w.nodes[3].complement = free(R2());
    bad.push_back({h, 3});
  }
  {
    Handmade h = ws[8];
    h.w.nodes[2].left = entries(R2(), {0}, {1}, {"0"});
    bad.push_back({h, 2});
  }
  {
    Handmade h = ws[9];
    h.w.nodes[2].right = entries(R4(), {0}, {0}, {"0"});
    bad.push_back({h, 2});
  }
  {
    Handmade h = ws[1];
    h.w.nodes[1].children = {1};
    bad.push_back({h, 1});
  }
  for (const auto& [h, at] : bad) {
    clear_resolution_cache();
    auto v = check_resolving_witness(h.w, h.S, h.target);
    o.expect(!v.valid && v.node == at, "corrupted " + h.name + " reported node " + std::to_string(v.node));
  }
  o.note << (o.ok ? "" : "; ") << ws.size() << " valid, " << bad.size() << " corrupted";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Auslander-Buchsbaum formula on R2, R3", auslander_buchsbaum},
      {"gc_dim equals the Ext vanishing index", cdim_characterization},
      {"transpose involution up to free summands", transpose_involution},
      {"six-term transpose sequence is exact", six_term},
      {"filtration sequence exact with Hilbert additivity", filtration},
      {"gc_dim of the transpose of k over R3 is 1", transpose_dimension},
      {"semidualizing gate", semidualizing_gate},
      {"regular degeneration over R4", regular_degeneration},
      {"phi lands in grade consistent functions and round-trips", phi_round_trip},
      {"localization at the maximal ideal", localization},
      {"Ext dimensions agree with the linear-algebra oracle", oracle_equivalence},
      {"join law on 20 random pairs", join_law},
      {"witness soundness", witness_soundness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.ok;
    std::printf("%s %2zu  %s  [%s] (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.note.str().c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
