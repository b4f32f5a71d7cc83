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

#include "hocat/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "hocat/errors.hpp"
#include "hocat/zigzag.hpp"

namespace hocat {

  using nlohmann::json;

  std::size_t default_budget() {
    if (char const* env = std::getenv("HOCAT_BUDGET")) {
      char*               end = nullptr;
      unsigned long const v   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0') {
        return v;
      }
    }
    return kDefaultBudget;
  }

  std::set<std::string> resolve_stages(std::set<std::string> const& requested) {
    static std::map<std::string, std::vector<std::string>> const needs = {
        {"axioms", {}},
        {"splits", {"axioms"}},
        {"homotopy", {"axioms"}},
        {"whitehead", {"axioms"}},
        {"forks", {"axioms"}},
        {"saturation", {"axioms", "whitehead"}},
        {"deformation", {"axioms"}},
    };
    std::set<std::string> out;
    if (requested.empty()) {
      for (char const* s : kStageNames) {
        out.insert(s);
      }
      return out;
    }
    for (std::string const& s : requested) {
      auto it = needs.find(s);
      if (it == needs.end()) {
        throw PreconditionError(fmt::format("unknown stage \"{}\"", s));
      }
      out.insert(s);
      out.insert(it->second.begin(), it->second.end());
    }
    return out;
  }

  namespace {

    class Stopwatch {
     public:
      Stopwatch(std::vector<StageTiming>& sink, std::string name)
          : sink_(sink), name_(std::move(name)),
            start_(std::chrono::steady_clock::now()) {}
      ~Stopwatch() {
        std::chrono::duration<double, std::milli> const d
            = std::chrono::steady_clock::now() - start_;
        sink_.push_back({name_, d.count()});
      }
      Stopwatch(Stopwatch const&)            = delete;
      Stopwatch& operator=(Stopwatch const&) = delete;

     private:
      std::vector<StageTiming>&             sink_;
      std::string                           name_;
      std::chrono::steady_clock::time_point start_;
    };

    DeformationStage run_deformation(FinCat const&               cat,
                                     MorphismSet const&          weq,
                                     RawCategory const&          raw,
                                     WhiteheadCertificate const* ambient,
                                     std::size_t                 budget) {
      DeformationStage out{load_chain(cat, weq, raw), {}, {}, {}, {}, {}, {}, {}, {}};
      Subcategory const sub = stage_category(cat, out.chain.target);
      out.c0                = sub.cat;
      out.c0_family         = check_weq_axioms(sub.cat, restrict_to(sub, weq));
      if (!out.c0_family.report.category_with_weak_equivalences()) {
        out.notes.push_back("the target subcategory fails the weak equivalence axioms");
        return out;
      }
      out.c0_whitehead = certify_whitehead(sub.cat, out.c0_family);
      if (!out.c0_whitehead->certificate) {
        out.notes.push_back("the target subcategory has no Whitehead certificate");
        return out;
      }
      if (!out.chain.functorial()) {
        out.notes.push_back("Ho(C, r) requires a functorial chain or an ambient certificate");
        return out;
      }
      out.ho_cr     = build_ho_cr(cat, weq, out.chain, *out.c0_whitehead->certificate);
      out.inverts_w = check_inverts_w(*out.ho_cr, weq);
      out.conjugation
          = check_conjugation(cat, weq, out.chain, *out.ho_cr, ambient, budget);

      FinCat const& h = out.ho_cr->category;
      std::vector<MorphismId> violations;
      for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
        if (weq.contains(f)) {
          continue;
        }
        MorphismId const m = out.ho_cr->gamma_r.on_morphisms[f];
        for (MorphismId g : h.hom(h.cod(m), h.dom(m))) {
          if (h.is_identity(h.compose_unchecked(g, m))
              && h.is_identity(h.compose_unchecked(m, g))) {
            violations.push_back(f);
            break;
          }
        }
      }
      out.saturation_violations = std::move(violations);
      return out;
    }

  }  // namespace

  AnalysisReport analyze(RawCategory const& raw, AnalysisOptions const& options) {
    AnalysisReport report;
    {
      Stopwatch sw(report.timings, "validate");
      report.category = validate_category(raw);
    }
    FinCat const& cat = report.category;
    report.stages     = resolve_stages(options.stages);
    auto wanted = [&](char const* s) { return report.stages.contains(s); };

    {
      Stopwatch sw(report.timings, "axioms");
      MorphismSet const named = resolve_morphisms(cat, raw.weak_equivalences);
      report.family           = check_weq_axioms(cat, named);
    }
    WeqFamily const&   family = *report.family;
    MorphismSet const& weq    = family.members;
    if (!family.report.category_with_weak_equivalences()) {
      report.notes.push_back("two-out-of-three fails; later stages skipped");
      return report;
    }

    if (wanted("splits")) {
      Stopwatch sw(report.timings, "splits");
      report.splits = check_split_generated(cat, family);
    }
    if (wanted("homotopy")) {
      Stopwatch sw(report.timings, "homotopy");
      report.homotopy = homotopy_congruence(cat, weq);
    }
    if (wanted("whitehead")) {
      Stopwatch sw(report.timings, "whitehead");
      report.whitehead = certify_whitehead(cat, family);
      if (report.whitehead->certificate) {
        report.quotient = quotient(cat, report.whitehead->certificate->congruence);
      }
    }
    if (wanted("forks")) {
      Stopwatch sw(report.timings, "forks");
      for (Side side : {Side::left, Side::right}) {
        ForkSide fs{check_fork_condition(cat, weq, side),
                    check_common_fork(cat, weq, side),
                    check_rc_transitive(cat, weq, side)};
        (side == Side::left ? report.forks_left : report.forks_right) = std::move(fs);
      }
    }
    WhiteheadCertificate const* cert
        = report.whitehead && report.whitehead->certificate
              ? &*report.whitehead->certificate
              : nullptr;
    if (wanted("saturation")) {
      if (cert != nullptr) {
        Stopwatch sw(report.timings, "saturation");
        report.saturation = check_saturation(cat, family, cert);
      } else {
        report.notes.push_back("saturation needs a Whitehead certificate; skipped");
      }
    }
    if (wanted("deformation") && !raw.deformation.empty()) {
      Stopwatch sw(report.timings, "deformation");
      report.deformation = run_deformation(cat, weq, raw, cert, options.budget);
    }
    return report;
  }

  AnalysisReport run_analysis(std::filesystem::path const& path,
                              AnalysisOptions const&       options) {
    return analyze(load_spec_file(path), options);
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {

    json names(FinCat const& cat, std::vector<MorphismId> const& ms) {
      json out = json::array();
      for (MorphismId m : ms) {
        out.push_back(cat.name(m));
      }
      return out;
    }

    json classes_json(FinCat const& cat, Congruence const& c) {
      json out = json::array();
      for (auto const& cls : c.non_singleton_classes()) {
        out.push_back(names(cat, cls));
      }
      return out;
    }

    json pair_json(FinCat const& cat, std::optional<MorphismPair> const& p) {
      if (!p) {
        return nullptr;
      }
      return json::array({cat.name(p->first), cat.name(p->second)});
    }

    json zigzag_json(FinCat const& cat, Zigzag const& z) {
      return {{"from", cat.object_name(z.source())},
              {"to", cat.object_name(z.target())},
              {"steps", format_zigzag(cat, z)}};
    }

    json trace_json(FinCat const& cat, MoveTrace const& t) {
      json out = json::array();
      for (Move const& m : t.moves) {
        out.push_back(format_move(cat, m));
      }
      return out;
    }

    json axioms_json(FinCat const& cat, WeqFamily const& f) {
      json out;
      out["identities"]          = true;
      out["inserted_identities"] = names(cat, f.report.inserted_identities);
      out["two_of_three"]        = f.report.two_of_three();
      if (auto const& w = f.report.two_of_three_failure) {
        out["two_of_three_witness"] = {{"first", cat.name(w->first)},
                                       {"second", cat.name(w->second)},
                                       {"composite", cat.name(w->composite)},
                                       {"missing", cat.name(w->missing)}};
      }
      out["weak_invertibility"] = f.report.weak_invertibility();
      if (auto const& w = f.report.weak_invertibility_failure) {
        out["weak_invertibility_witness"]
            = {{"f", cat.name(w->f)}, {"g", cat.name(w->g)}, {"h", cat.name(w->h)}};
      }
      out["homotopical"] = f.report.homotopical();
      return out;
    }

    json splits_json(FinCat const& cat, SplitGeneration const& s) {
      json out;
      out["holds"] = s.holds();
      if (s.certificate) {
        json splits = json::array();
        for (SplitWeq const& w : s.certificate->split_weqs) {
          splits.push_back({{"morphism", cat.name(w.morphism)},
                            {"partner", cat.name(w.partner)},
                            {"kind", w.kind == SplitKind::section ? "section"
                                                                  : "retraction"}});
        }
        out["split_weak_equivalences"] = splits;
        json decomp                    = json::object();
        for (auto const& [w, word] : s.certificate->decompositions) {
          decomp[cat.name(w)] = names(cat, word);
        }
        out["decompositions"] = decomp;
      }
      if (s.unreachable) {
        out["unreachable"] = cat.name(*s.unreachable);
      }
      return out;
    }

    json whitehead_json(FinCat const& cat, WhiteheadVerdict const& v) {
      json out;
      out["congruence"]     = classes_json(cat, v.congruence);
      out["not_invertible"] = names(cat, v.not_invertible);
      if (v.certificate) {
        json inv = json::object();
        for (auto const& [w, g] : v.certificate->inverse_table) {
          inv[cat.name(w)] = cat.name(g);
        }
        out["inverse_table"] = inv;
      }
      if (v.witness) {
        out["nonfullness_witness"] = zigzag_json(cat, v.witness->zigzag);
      }
      return out;
    }

    json category_json(FinCat const& cat) {
      json ms = json::array();
      for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
        ms.push_back({{"name", cat.name(m)},
                      {"dom", cat.object_name(cat.dom(m))},
                      {"cod", cat.object_name(cat.cod(m))}});
      }
      return {{"objects", cat.objects()}, {"morphisms", ms}};
    }

    json quotient_json(FinCat const& cat, QuotientResult const& q) {
      json out     = category_json(q.quotient);
      json members = json::object();
      for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
        members[q.quotient.name(q.projection.on_morphisms[m])].push_back(cat.name(m));
      }
      out["classes"] = members;
      return out;
    }

    json fork_json(FinCat const& cat, ForkSide const& f) {
      return {{"fork_condition",
               {{"holds", f.fork_condition.holds},
                {"counterexample", pair_json(cat, f.fork_condition.counterexample)}}},
              {"common_fork",
               {{"holds", f.common_fork.holds},
                {"counterexample", pair_json(cat, f.common_fork.counterexample)},
                {"second", pair_json(cat, f.common_fork.second)}}},
              {"rc_transitive",
               {{"holds", f.rc_transitive.holds},
                {"witness", f.rc_transitive.holds
                                ? json(nullptr)
                                : json::array({cat.name(*f.rc_transitive.f),
                                               cat.name(*f.rc_transitive.g),
                                               cat.name(*f.rc_transitive.h)})}}}};
    }

    json deformation_json(FinCat const& cat, DeformationStage const& d) {
      json out;
      json links = json::array();
      for (Deformation const& l : d.chain.links) {
        links.push_back({{"direction", to_string(l.direction)},
                         {"functorial", l.functorial},
                         {"target", [&] {
                            json objs = json::array();
                            for (ObjectId x : l.target.objects) {
                              objs.push_back(cat.object_name(x));
                            }
                            return objs;
                          }()}});
      }
      out["links"]      = links;
      out["functorial"] = d.chain.functorial();
      json r            = json::object();
      json theta        = json::object();
      for (ObjectId x = 0; x < cat.num_objects(); ++x) {
        r[cat.object_name(x)]     = cat.object_name(d.chain.on_objects[x]);
        theta[cat.object_name(x)] = format_zigzag(cat, d.chain.theta[x]);
      }
      json rf = json::object();
      for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
        rf[cat.name(f)] = cat.name(d.chain.on_morphisms[f]);
      }
      out["on_objects"]   = r;
      out["on_morphisms"] = rf;
      out["theta"]        = theta;
      out["target_whitehead"]
          = d.c0_whitehead ? json(to_string(d.c0_whitehead->status)) : json("skipped");
      out["notes"] = d.notes;
      return out;
    }

    json ho_cr_json(FinCat const& cat, DeformationStage const& d) {
      HoCr const&   h   = *d.ho_cr;
      FinCat const& hc  = h.category;
      FinCat const& c0  = h.c0.cat;
      json          out;
      out["objects"] = hc.objects();
      json homs      = json::array();
      for (ObjectId x = 0; x < hc.num_objects(); ++x) {
        for (ObjectId y = 0; y < hc.num_objects(); ++y) {
          json classes = json::array();
          for (MorphismId m : hc.hom(x, y)) {
            auto const& cls = h.c0_congruence.classes()[h.c0_congruence.class_of(
                h.representative[m])];
            classes.push_back(names(c0, cls));
          }
          homs.push_back({{"from", hc.object_name(x)},
                          {"to", hc.object_name(y)},
                          {"classes", classes}});
        }
      }
      out["homs"] = homs;
      json gamma  = json::object();
      for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
        gamma[cat.name(f)] = hc.name(h.gamma_r.on_morphisms[f]);
      }
      out["gamma_r"]   = gamma;
      out["inverts_w"] = d.inverts_w->holds;
      if (d.inverts_w->witness) {
        out["not_inverted"] = cat.name(*d.inverts_w->witness);
      }
      out["saturation_violations"] = names(cat, *d.saturation_violations);
      ConjugationReport const& c   = *d.conjugation;
      json conj{{"route", c.certified_route ? "certified" : "lemma"}, {"holds", c.holds}};
      if (!c.failure.empty()) {
        conj["failure"] = c.failure;
      }
      if (!c.certified_route) {
        json inst = json::array();
        for (LemmaInstance const& i : c.instances) {
          inst.push_back(
              {{"morphism", cat.name(i.morphism)},
               {"direction", i.direction == Direction::forward ? "forward" : "backward"},
               {"outcome", i.outcome == LemmaOutcome::equivalent ? "equivalent" : "unknown"},
               {"moves", trace_json(cat, i.search.trace)}});
        }
        conj["instances"] = inst;
      }
      out["conjugation"] = conj;
      return out;
    }

  }  // namespace

  json report_json(AnalysisReport const& r) {
    FinCat const& cat = r.category;
    json          out;
    out["category"] = category_json(cat);
    json stages     = json::object();
    for (char const* s : kStageNames) {
      stages[s] = r.stages.contains(s) ? "scheduled" : "skipped";
    }
    out["stages"] = stages;
    out["notes"]  = r.notes;
    json const skipped("skipped");

    out["axioms"] = r.family ? axioms_json(cat, *r.family) : skipped;
    out["weak_equivalences"]
        = r.family ? names(cat, r.family->members.members()) : skipped;
    out["split_generation"] = r.splits ? splits_json(cat, *r.splits) : skipped;
    out["homotopy"] = r.homotopy ? json{{"classes", classes_json(cat, *r.homotopy)}}
                                 : skipped;
    out["whitehead"] = r.whitehead ? json(to_string(r.whitehead->status)) : skipped;
    out["whitehead_detail"] = r.whitehead ? whitehead_json(cat, *r.whitehead) : skipped;
    out["quotient"]  = r.quotient ? quotient_json(cat, *r.quotient) : skipped;
    if (r.forks_left && r.forks_right) {
      out["forks"] = {{"left", fork_json(cat, *r.forks_left)},
                      {"right", fork_json(cat, *r.forks_right)}};
    } else {
      out["forks"] = skipped;
    }
    if (r.saturation) {
      out["saturation"] = {{"saturated", r.saturation->saturated()},
                           {"predicted", r.saturation->predicted},
                           {"violations", names(cat, r.saturation->violations)}};
    } else {
      out["saturation"] = skipped;
    }
    if (r.deformation) {
      out["deformation"] = deformation_json(cat, *r.deformation);
      out["ho_cr"] = r.deformation->ho_cr ? ho_cr_json(cat, *r.deformation) : skipped;
    } else {
      out["deformation"] = skipped;
      out["ho_cr"]       = skipped;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string join(FinCat const& cat, std::vector<MorphismId> const& ms) {
      std::string out;
      for (MorphismId m : ms) {
        out += (out.empty() ? "" : ", ") + cat.name(m);
      }
      return out;
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    void text_forks(std::ostream& os, FinCat const& cat, char const* side, ForkSide const& f) {
      auto pair = [&](std::optional<MorphismPair> const& p) {
        return p ? fmt::format(" ({}, {})", cat.name(p->first), cat.name(p->second))
                 : std::string();
      };
      os << fmt::format("  {}: fork condition {}{}, common fork {}{}, R^c transitive {}\n",
                        side, yes_no(f.fork_condition.holds),
                        pair(f.fork_condition.counterexample),
                        yes_no(f.common_fork.holds), pair(f.common_fork.counterexample),
                        yes_no(f.rc_transitive.holds));
    }

  }  // namespace

  std::string render_report(AnalysisReport const& r, ReportFormat format) {
    if (format == ReportFormat::json) {
      return report_json(r).dump(2) + "\n";
    }
    FinCat const&      cat = r.category;
    std::ostringstream os;
    auto header = [&](std::string_view title) { os << "== " << title << " ==\n"; };
    auto skipped = [&] { os << "  skipped\n"; };

    header("category");
    os << fmt::format("  {} objects, {} morphisms\n", cat.num_objects(), cat.num_morphisms());
    for (std::string const& n : r.notes) {
      os << "  note: " << n << "\n";
    }

    header("axioms");
    if (r.family) {
      WeqAxiomReport const& a = r.family->report;
      os << "  W = {" << join(cat, r.family->members.members()) << "}\n";
      os << "  identities: pass\n";
      os << "  two out of three: " << (a.two_of_three() ? "pass" : "FAIL");
      if (auto const& w = a.two_of_three_failure) {
        os << fmt::format(" ({} then {} gives {}; {} not in W)", cat.name(w->first),
                          cat.name(w->second), cat.name(w->composite), cat.name(w->missing));
      }
      os << "\n  weak invertibility: " << (a.weak_invertibility() ? "pass" : "fail");
      if (auto const& w = a.weak_invertibility_failure) {
        os << fmt::format(" (f={}, g={}, h={})", cat.name(w->f), cat.name(w->g),
                          cat.name(w->h));
      }
      os << "\n";
    } else {
      skipped();
    }

    header("split generation");
    if (r.splits) {
      if (r.splits->certificate) {
        os << "  holds\n";
        for (auto const& [w, word] : r.splits->certificate->decompositions) {
          os << fmt::format("  {} = [{}]\n", cat.name(w), join(cat, word));
        }
      } else {
        os << "  fails at " << cat.name(*r.splits->unreachable) << "\n";
      }
    } else {
      skipped();
    }

    header("homotopy congruence");
    if (r.homotopy) {
      auto const cls = r.homotopy->non_singleton_classes();
      if (cls.empty()) {
        os << "  discrete\n";
      }
      for (auto const& c : cls) {
        os << "  {" << join(cat, c) << "}\n";
      }
    } else {
      skipped();
    }

    header("whitehead");
    if (r.whitehead) {
      os << "  " << to_string(r.whitehead->status) << "\n";
      if (r.whitehead->certificate) {
        for (auto const& [w, g] : r.whitehead->certificate->inverse_table) {
          os << fmt::format("  inverse of {}: {}\n", cat.name(w), cat.name(g));
        }
      }
      if (r.whitehead->witness) {
        auto const& w = *r.whitehead->witness;
        os << fmt::format("  C({}, {}) is empty but {} joins them\n",
                          cat.object_name(w.from), cat.object_name(w.to),
                          format_zigzag(cat, w.zigzag));
      }
      if (!r.whitehead->not_invertible.empty()) {
        os << "  not invertible: " << join(cat, r.whitehead->not_invertible) << "\n";
      }
    } else {
      skipped();
    }

    header("quotient");
    if (r.quotient) {
      FinCat const& q = r.quotient->quotient;
      os << fmt::format("  {} morphisms\n", q.num_morphisms());
      for (MorphismId m = 0; m < q.num_morphisms(); ++m) {
        std::vector<MorphismId> members;
        for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
          if (r.quotient->projection.on_morphisms[f] == m) {
            members.push_back(f);
          }
        }
        os << fmt::format("  {}: {} -> {} = {{{}}}\n", q.name(m),
                          q.object_name(q.dom(m)), q.object_name(q.cod(m)),
                          join(cat, members));
      }
    } else {
      skipped();
    }

    header("forks");
    if (r.forks_left && r.forks_right) {
      text_forks(os, cat, "left", *r.forks_left);
      text_forks(os, cat, "right", *r.forks_right);
    } else {
      skipped();
    }

    header("saturation");
    if (r.saturation) {
      os << "  " << (r.saturation->saturated() ? "saturated" : "NOT saturated");
      if (!r.saturation->violations.empty()) {
        os << " (" << join(cat, r.saturation->violations) << ")";
      }
      os << (r.saturation->predicted ? ", predicted by the fork condition" : "") << "\n";
    } else {
      skipped();
    }

    header("deformation");
    if (r.deformation) {
      DeformationStage const& d = *r.deformation;
      os << fmt::format("  {} link(s), functorial: {}\n", d.chain.links.size(),
                        yes_no(d.chain.functorial()));
      for (ObjectId x = 0; x < cat.num_objects(); ++x) {
        os << fmt::format("  r({}) = {}, theta = {}\n", cat.object_name(x),
                          cat.object_name(d.chain.on_objects[x]),
                          format_zigzag(cat, d.chain.theta[x]));
      }
      for (std::string const& n : d.notes) {
        os << "  note: " << n << "\n";
      }
    } else {
      skipped();
    }

    header("Ho(C, r)");
    if (r.deformation && r.deformation->ho_cr) {
      DeformationStage const& d  = *r.deformation;
      FinCat const&           hc = d.ho_cr->category;
      os << fmt::format("  {} morphisms\n", hc.num_morphisms());
      for (ObjectId x = 0; x < hc.num_objects(); ++x) {
        for (ObjectId y = 0; y < hc.num_objects(); ++y) {
          os << fmt::format("  ({}, {}): {} class(es)\n", hc.object_name(x),
                            hc.object_name(y), hc.hom(x, y).size());
        }
      }
      os << "  gamma_r inverts W: " << yes_no(d.inverts_w->holds) << "\n";
      ConjugationReport const& c = *d.conjugation;
      os << fmt::format("  conjugation ({} route): {}\n",
                        c.certified_route ? "certified" : "lemma",
                        c.holds ? "verified" : "NOT verified");
      if (!c.failure.empty()) {
        os << "  " << c.failure << "\n";
      }
      for (LemmaInstance const& i : c.instances) {
        os << fmt::format("  [{}{}]: {}\n", i.direction == Direction::forward ? ">" : "<",
                          cat.name(i.morphism),
                          i.outcome == LemmaOutcome::equivalent ? "equivalent" : "unknown");
        for (std::size_t k = 0; k < i.search.trace.moves.size(); ++k) {
          os << fmt::format("    {}. {}\n", k + 1, format_move(cat, i.search.trace.moves[k]));
        }
      }
    } else {
      skipped();
    }

    header("timings");
    for (StageTiming const& t : r.timings) {
      os << fmt::format("  {}: {:.3f} ms\n", t.name, t.milliseconds);
    }
    return os.str();
  }

}  // namespace hocat
