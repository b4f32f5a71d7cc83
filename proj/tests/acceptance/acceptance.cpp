// Copyright 2026 The hocat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <fmt/ranges.h>

#include "random_category.hpp"

#include "hocat/congruence.hpp"
#include "hocat/deformation.hpp"
#include "hocat/document.hpp"
#include "hocat/homotopy.hpp"
#include "hocat/weq.hpp"
#include "hocat/zigzag.hpp"

using namespace hocat;
namespace ht = hocat::testing;

namespace {

  constexpr std::size_t kInstances = 200;
  constexpr std::size_t kBudget    = 8;
  constexpr double      kLimitMs   = 5000.0;

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  Outcome ok(std::string detail) {
    return {true, std::move(detail)};
  }
  Outcome fail(std::string detail) {
    return {false, std::move(detail)};
  }

  struct Loaded {
    RawCategory raw;
    FinCat      cat;
    MorphismSet weq;
  };

  Loaded load(std::string const& stem) {
    RawCategory raw = load_spec_file(ht::fixture_path(stem));
    FinCat      cat = validate_category(raw);
    MorphismSet weq = check_weq_axioms(cat, resolve_morphisms(cat, raw.weak_equivalences)).members;
    return {std::move(raw), std::move(cat), std::move(weq)};
  }

  std::optional<WhiteheadCertificate> target_certificate(FinCat const& cat, MorphismSet const& weq,
                                                         DeformationChain const& chain) {
    Subcategory const sub = stage_category(cat, chain.target);
    return certify_whitehead(sub.cat, check_weq_axioms(sub.cat, restrict_to(sub, weq))).certificate;
  }

  bool all_invertible(FinCat const& cat, Congruence const& L, MorphismSet const& weq) {
    for (MorphismId w : weq.members()) {
      if (!homotopy_inverse(cat, L, w)) {
        return false;
      }
    }
    return true;
  }

  Outcome f_retr_end_to_end() {
    Loaded const    l   = load("f_retr");
    WeqFamily const fam = check_weq_axioms(l.cat, l.weq);
    if (!fam.report.homotopical()) {
      return fail("axioms fail");
    }
    auto const split = check_split_generated(l.cat, fam);
    MorphismId const r = l.cat.morphism_id("r");
    MorphismId const s = l.cat.morphism_id("s");
    MorphismId const e = l.cat.morphism_id("e");
    if (!split.holds()
        || split.certificate->decompositions.at(e) != std::vector<MorphismId>{r, s}) {
      return fail("split certificate does not decompose e as [r, s]");
    }
    Congruence const L = homotopy_congruence(l.cat, l.weq);
    MorphismId const idb = l.cat.identity(l.cat.object_id("b"));
    std::vector<MorphismId> expected{idb, e};
    std::sort(expected.begin(), expected.end());
    if (L.non_singleton_classes() != std::vector<std::vector<MorphismId>>{expected}) {
      return fail("homotopy congruence is not {e, id:b}");
    }
    WhiteheadVerdict const v = certify_whitehead(l.cat, fam);
    if (v.status != WhiteheadStatus::certified) {
      return fail("not certified");
    }
    QuotientResult const q = quotient(l.cat, v.certificate->congruence);
    if (!find_isomorphism(q.quotient, ht::load_fixture("f_iso").cat)) {
      return fail("quotient is not isomorphic to F_ISO");
    }
    if (!all_invertible(l.cat, L, l.weq)) {
      return fail("some weak equivalence is not invertible");
    }
    return ok("certified, quotient ≅ F_ISO");
  }

  Outcome f_span_end_to_end() {
    Loaded const    l     = load("f_span");
    WeqFamily const fam   = check_weq_axioms(l.cat, l.weq);
    auto const      split = check_split_generated(l.cat, fam);
    if (split.holds() || split.unreachable != l.cat.morphism_id("f")) {
      return fail("split generation does not fail on f");
    }
    if (homotopy_congruence(l.cat, l.weq).num_classes() != l.cat.num_morphisms()) {
      return fail("homotopy congruence is not discrete");
    }
    auto const w = nonfullness_witness(l.cat, l.weq);
    if (!w || w->from != l.cat.object_id("a") || w->to != l.cat.object_id("b")) {
      return fail("no non-fullness witness at (a, b)");
    }
    if (certify_whitehead(l.cat, fam).status != WhiteheadStatus::failed) {
      return fail("verdict is not failed");
    }
    return ok(fmt::format("witness {}", format_zigzag(l.cat, w->zigzag)));
  }

  Outcome f_def_ho_cr() {
    Loaded const           l     = load("f_def");
    DeformationChain const chain = load_chain(l.cat, l.weq, l.raw);
    if (!chain.functorial()) {
      return fail("deformation is not functorial");
    }
    auto const cert0 = target_certificate(l.cat, l.weq, chain);
    if (!cert0) {
      return fail("target subcategory not certified");
    }
    HoCr const ho = build_ho_cr(l.cat, l.weq, chain, *cert0);
    for (ObjectId x = 0; x < l.cat.num_objects(); ++x) {
      for (ObjectId y = 0; y < l.cat.num_objects(); ++y) {
        if (ho.category.hom(x, y).size() != 1) {
          return fail("a hom-set of Ho(C, r) is not a singleton");
        }
      }
    }
    InversionCheck const inv = check_inverts_w(ho, l.weq);
    MorphismId const theta = l.cat.morphism_id("theta");
    MorphismId const image = ho.gamma_r.on_morphisms[theta];
    bool const theta_inverted = !ho.category.hom(ho.category.cod(image), ho.category.dom(image)).empty()
                                && ho.category.compose(ho.category.hom(ho.category.cod(image),
                                                                       ho.category.dom(image))[0],
                                                       image)
                                       == ho.category.identity(ho.category.dom(image));
    if (!inv.holds || !theta_inverted) {
      return fail("γ_r does not invert θ");
    }
    if (!find_isomorphism(ho.category, ht::load_fixture("f_iso").cat)) {
      return fail("Ho(C, r) is not isomorphic to F_ISO");
    }
    return ok("Ho(C, r) ≅ F_ISO");
  }

  // Compares the homotopy congruence with bounded zigzag equivalence on
  // every parallel pair.
  struct OracleCount {
    std::size_t pairs      = 0;
    std::size_t related    = 0;
    std::size_t mismatches = 0;
  };

  void oracle(FinCat const& cat, MorphismSet const& weq, OracleCount& count) {
    Congruence const L = homotopy_congruence(cat, weq);
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      for (ObjectId y = 0; y < cat.num_objects(); ++y) {
        auto const& hom = cat.hom(x, y);
        if (hom.size() < 2) {
          continue;
        }
        std::vector<MorphismId> const members(hom.begin(), hom.end());
        BoundedRelation const r = bounded_relation(cat, weq, members, kBudget);
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            bool const alg = L.related(members[a], members[b]);
            ++count.pairs;
            count.related += alg ? 1 : 0;
            count.mismatches += alg != r.related[a][b] ? 1 : 0;
          }
        }
      }
    }
  }

  Outcome oracle_equivalence() {
    OracleCount fixtures;
    for (std::string const& stem : ht::fixture_names()) {
      ht::Fixture const f = ht::load_fixture(stem);
      oracle(f.cat, f.weq, fixtures);
    }
    OracleCount  random;
    std::mt19937 rng(4);
    for (std::size_t i = 0; i < kInstances; ++i) {
      ht::Instance const inst = ht::random_split_generated(rng, {});
      oracle(inst.cat, inst.weq, random);
    }
    std::string const detail = fmt::format(
        "fixtures {} pairs ({} related), random {} pairs ({} related), {} mismatches",
        fixtures.pairs, fixtures.related, random.pairs, random.related,
        fixtures.mismatches + random.mismatches);
    return fixtures.mismatches + random.mismatches == 0 ? ok(detail) : fail(detail);
  }

  Outcome adjunction_laws() {
    std::mt19937 rng(5);
    std::size_t  enumerated = 0;
    for (std::size_t i = 0; i < kInstances; ++i) {
      ht::RandomSpec spec;
      if (i % 2 == 0) {
        spec.max_morphisms = 8;
      }
      FinCat const        cat  = ht::random_category(rng, spec);
      Precongruence const seed = ht::random_precongruence(rng, cat, 1 + i % 3);
      Congruence const    R    = least_congruence(cat, seed);
      for (MorphismPair const& p : seed.pairs()) {
        if (!R.related(p.first, p.second)) {
          return fail(fmt::format("instance {}: least congruence misses a seed pair", i));
        }
      }
      if (kernel_congruence(cat, quotient(cat, R).projection) != R) {
        return fail(fmt::format("instance {}: kernel of the projection differs", i));
      }
      Congruence const D = Congruence::discrete(cat);
      if (kernel_congruence(cat, quotient(cat, D).projection) != D) {
        return fail(fmt::format("instance {}: kernel of the discrete projection differs", i));
      }
      if (cat.num_morphisms() <= 8) {
        ++enumerated;
        bool found = false;
        for (Congruence const& C : ht::all_congruences(cat)) {
          bool contains_seed = true;
          for (MorphismPair const& p : seed.pairs()) {
            contains_seed = contains_seed && C.related(p.first, p.second);
          }
          if (contains_seed && !R.refines(C)) {
            return fail(fmt::format("instance {}: a smaller congruence contains the seed", i));
          }
          found = found || C == R;
        }
        if (!found) {
          return fail(fmt::format("instance {}: least congruence not among all congruences", i));
        }
      }
    }
    return ok(fmt::format("{} instances, {} checked for minimality", kInstances, enumerated));
  }

  Outcome coincidence(CoincidenceResult const& c, Congruence const& L, std::string const& where) {
    if (!c.holds || c.left != L || c.right != L || c.combined != L) {
      return fail(fmt::format("{}: congruences differ", where));
    }
    return ok("");
  }

  Outcome coincidence_law() {
    std::size_t certified = 0;
    for (std::string const& stem : ht::fixture_names()) {
      ht::Fixture const f   = ht::load_fixture(stem);
      WeqFamily const   fam = check_weq_axioms(f.cat, f.weq);
      if (!fam.report.category_with_weak_equivalences()
          || !check_split_generated(f.cat, fam).holds()) {
        continue;
      }
      ++certified;
      Outcome const o = coincidence(check_lr_coincide(f.cat, fam),
                                    homotopy_congruence(f.cat, f.weq), stem);
      if (!o.pass) {
        return o;
      }
    }
    std::mt19937 rng(6);
    for (std::size_t i = 0; i < kInstances; ++i) {
      ht::Instance const inst = ht::random_split_generated(rng, {});
      Outcome const o = coincidence(check_lr_coincide(inst.cat, check_weq_axioms(inst.cat, inst.weq)),
                                    homotopy_congruence(inst.cat, inst.weq),
                                    fmt::format("instance {}", i));
      if (!o.pass) {
        return o;
      }
    }
    return ok(fmt::format("{} fixtures and {} random instances", certified, kInstances));
  }

  // Common fork on both sides implies transitivity of R^c on both sides.
  // The fork condition on a side implies R^c respects W on that side.
  Outcome fork_logic() {
    std::size_t common      = 0;
    std::size_t informative = 0;
    std::size_t fork        = 0;
    auto check = [&](FinCat const& cat, MorphismSet const& weq, std::string const& where) -> Outcome {
      bool const cl = check_common_fork(cat, weq, Side::left).holds;
      bool const cr = check_common_fork(cat, weq, Side::right).holds;
      if (cl && cr) {
        ++common;
        if (!r_left_comp(cat, weq).empty() || !r_right_comp(cat, weq).empty()) {
          ++informative;
        }
        if (!check_rc_transitive(cat, weq, Side::left).holds
            || !check_rc_transitive(cat, weq, Side::right).holds) {
          return fail(fmt::format("{}: common fork holds but R^c is not transitive", where));
        }
      }
      for (Side side : {Side::left, Side::right}) {
        if (!check_fork_condition(cat, weq, side).holds) {
          continue;
        }
        ++fork;
        Precongruence const rc = rc_relation(cat, weq, side);
        for (MorphismPair const& p : rc.pairs()) {
          if (weq.contains(p.first) != weq.contains(p.second)) {
            return fail(fmt::format("{}: fork condition holds but R^c mixes W", where));
          }
        }
      }
      return ok("");
    };
    for (std::string const& stem : ht::fixture_names()) {
      ht::Fixture const f = ht::load_fixture(stem);
      if (Outcome o = check(f.cat, f.weq, stem); !o.pass) {
        return o;
      }
    }
    std::mt19937 rng(7);
    for (std::size_t i = 0; i < 20 * kInstances; ++i) {
      ht::RandomSpec spec;
      spec.max_objects = 2;
      FinCat const      cat = ht::random_category(rng, spec);
      MorphismSet const weq = i % 2 == 0 ? ht::random_split_weq(rng, cat) : ht::random_weq(rng, cat);
      if (Outcome o = check(cat, weq, fmt::format("instance {}", i)); !o.pass) {
        return o;
      }
    }
    return ok(fmt::format("common fork on {} instances ({} with R^c nontrivial), fork condition on {} sides",
                          common, informative, fork));
  }

  Outcome saturation() {
    ht::Fixture const monoid = ht::load_fixture("monoid_t");
    WeqFamily const   mfam   = check_weq_axioms(monoid.cat, monoid.weq);
    auto const        mcert  = certify_whitehead(monoid.cat, mfam).certificate;
    if (!mcert || check_saturation(monoid.cat, mfam, &*mcert).saturated()) {
      return fail("monoid_t reported saturated");
    }
    std::vector<std::string> checked;
    for (std::string const& stem : ht::fixture_names()) {
      ht::Fixture const f   = ht::load_fixture(stem);
      WeqFamily const   fam = check_weq_axioms(f.cat, f.weq);
      if (!fam.report.homotopical() || !check_split_generated(f.cat, fam).holds()) {
        continue;
      }
      if (!check_fork_condition(f.cat, f.weq, Side::left).holds
          && !check_fork_condition(f.cat, f.weq, Side::right).holds) {
        continue;
      }
      auto const cert = certify_whitehead(f.cat, fam).certificate;
      if (!cert || !check_saturation(f.cat, fam, &*cert).saturated()) {
        return fail(fmt::format("{} is not saturated", stem));
      }
      checked.push_back(stem);
    }
    if (checked.empty()) {
      return fail("no fixture satisfies the hypotheses");
    }
    return ok(fmt::format("monoid_t not saturated; saturated: {}", fmt::join(checked, ", ")));
  }

  Outcome conjugation() {
    std::vector<std::string> checked;
    for (std::string const& stem : ht::fixture_names()) {
      Loaded const l = load(stem);
      if (l.raw.deformation.empty()) {
        continue;
      }
      DeformationChain const chain = load_chain(l.cat, l.weq, l.raw);
      auto const cert  = certify_whitehead(l.cat, check_weq_axioms(l.cat, l.weq)).certificate;
      auto const cert0 = target_certificate(l.cat, l.weq, chain);
      if (!cert || !cert0 || !chain.functorial()) {
        continue;
      }
      HoCr const ho = build_ho_cr(l.cat, l.weq, chain, *cert0);
      ConjugationReport const c = check_conjugation(l.cat, l.weq, chain, ho, &*cert, kBudget);
      if (!c.certified_route || !c.holds || !c.phi || !c.psi) {
        return fail(fmt::format("{}: {}", stem, c.failure));
      }
      FinCat const q = quotient(l.cat, cert->congruence).quotient;
      for (ObjectId x = 0; x < q.num_objects(); ++x) {
        if (c.psi->on_objects[c.phi->on_objects[x]] != x) {
          return fail(fmt::format("{}: ψφ is not the identity on objects", stem));
        }
      }
      for (MorphismId m = 0; m < q.num_morphisms(); ++m) {
        if (c.psi->on_morphisms[c.phi->on_morphisms[m]] != m) {
          return fail(fmt::format("{}: ψφ is not the identity", stem));
        }
      }
      for (MorphismId m = 0; m < ho.category.num_morphisms(); ++m) {
        if (c.phi->on_morphisms[c.psi->on_morphisms[m]] != m) {
          return fail(fmt::format("{}: φψ is not the identity", stem));
        }
      }
      checked.push_back(stem);
    }
    if (checked.empty()) {
      return fail("no fixture has both certificates");
    }
    return ok(fmt::format("mutually inverse on {}", fmt::join(checked, ", ")));
  }

  std::string run_analyze(std::string const& path) {
    std::string const command = fmt::format("'{}' analyze '{}' --format json", HOCAT_CLI, path);
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) {
      throw std::runtime_error("cannot run " + command);
    }
    std::string            out;
    std::array<char, 4096> buffer{};
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) {
      out.append(buffer.data(), n);
    }
    return out;
  }

  Outcome determinism() {
    std::size_t bytes = 0;
    for (std::string const& stem : ht::fixture_names()) {
      std::string const path  = ht::fixture_path(stem).string();
      std::string const first = run_analyze(path);
      if (first.empty() || first != run_analyze(path)) {
        return fail(fmt::format("{}: outputs differ", stem));
      }
      bytes += first.size();
    }
    return ok(fmt::format("{} fixtures, {} bytes each run", ht::fixture_names().size(), bytes));
  }

  struct Criterion {
    char const*              name;
    std::function<Outcome()> check;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"F_RETR end-to-end", f_retr_end_to_end},
      {"F_SPAN end-to-end", f_span_end_to_end},
      {"F_DEF Ho(C, r)", f_def_ho_cr},
      {"oracle equivalence", oracle_equivalence},
      {"adjunction laws", adjunction_laws},
      {"coincidence law", coincidence_law},
      {"fork logic", fork_logic},
      {"saturation", saturation},
      {"conjugation", conjugation},
      {"determinism", determinism},
  };
  int    failures = 0;
  double total_ms = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = criteria[i].check();
    } catch (std::exception const& e) {
      o = fail(fmt::format("exception: {}", e.what()));
    }
    double const ms
        = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    total_ms += ms;
    if (o.pass && ms > kLimitMs) {
      o = fail(fmt::format("{} (over the time limit)", o.detail));
    }
    failures += o.pass ? 0 : 1;
    fmt::print("{} {:2} {}: {} [{:.0f} ms]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
               o.detail, ms);
  }
  fmt::print("{} of {} criteria passed in {:.0f} ms\n", criteria.size() - failures,
             criteria.size(), total_ms);
  return failures == 0 ? 0 : 1;
}
