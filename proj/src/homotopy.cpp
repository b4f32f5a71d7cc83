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

#include "hocat/homotopy.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  namespace {

    // The right-hand notions are the left-hand ones computed in the
    // opposite category, which keeps morphism indices unchanged.
    struct Oriented {
      FinCat      cat;
      MorphismSet weq;
    };

    Oriented orient(FinCat const& cat, MorphismSet const& weq, Side side) {
      if (side == Side::left) {
        return {cat, weq};
      }
      auto [op, op_weq] = opposite(cat, weq);
      return {std::move(op), std::move(op_weq)};
    }

    Precongruence left_seed(FinCat const& cat, MorphismSet const& weq) {
      Precongruence     out(cat.num_morphisms());
      std::size_t const nobj = cat.num_objects();
      std::vector<MorphismId> const ws = weq.members();
      for (ObjectId a = 0; a < nobj; ++a) {
        for (ObjectId b = 0; b < nobj; ++b) {
          auto const& h = cat.hom(a, b);
          for (std::size_t i = 0; i < h.size(); ++i) {
            for (std::size_t j = i + 1; j < h.size(); ++j) {
              for (MorphismId s : ws) {
                if (cat.dom(s) == b
                    && cat.compose_unchecked(s, h[i])
                           == cat.compose_unchecked(s, h[j])) {
                  out.add(std::min(h[i], h[j]), std::max(h[i], h[j]));
                  break;
                }
              }
            }
          }
        }
      }
      return out;
    }

    // (h∘∂₀, h∘∂₁) over ordered seed pairs, reflexive ones included.
    Precongruence left_rc(FinCat const& cat, MorphismSet const& weq) {
      Precongruence const seed = left_seed(cat, weq);
      std::vector<MorphismPair> legs;
      for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
        legs.emplace_back(m, m);
      }
      for (auto [f, g] : seed.pairs()) {
        legs.emplace_back(f, g);
        legs.emplace_back(g, f);
      }
      Precongruence out(cat.num_morphisms());
      for (auto [d0, d1] : legs) {
        for (MorphismId h = 0; h < cat.num_morphisms(); ++h) {
          if (cat.dom(h) == cat.cod(d0)) {
            out.add(cat.compose_unchecked(h, d0), cat.compose_unchecked(h, d1));
          }
        }
      }
      return out;
    }

    std::vector<Fork> left_forks(FinCat const&      cat,
                                 MorphismSet const& weq,
                                 ObjectId           vertex,
                                 Side               label) {
      std::vector<Fork> out;
      for (MorphismId s : weq.members()) {
        ObjectId const apex = cat.dom(s);
        auto const&    legs = cat.hom(vertex, apex);
        for (MorphismId d0 : legs) {
          MorphismId const alpha = cat.compose_unchecked(s, d0);
          if (!weq.contains(alpha)) {
            continue;
          }
          for (MorphismId d1 : legs) {
            if (cat.compose_unchecked(s, d1) == alpha) {
              out.push_back({label, vertex, apex, d0, d1, s, alpha});
            }
          }
        }
      }
      return out;
    }

    std::optional<MorphismId> mediator(FinCat const& cat,
                                       Fork const&   fork,
                                       MorphismId    f,
                                       MorphismId    g) {
      for (MorphismId h : cat.hom(fork.apex, cat.cod(f))) {
        if (cat.compose_unchecked(h, fork.leg0) == f
            && cat.compose_unchecked(h, fork.leg1) == g) {
          return h;
        }
      }
      return std::nullopt;
    }

    // Ordered R^c pairs grouped by hom-set.
    std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphismPair>>
    by_hom(FinCat const& cat, Precongruence const& rel) {
      std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphismPair>> out;
      for (auto const& p : rel.pairs()) {
        out[{cat.dom(p.first), cat.cod(p.first)}].push_back(p);
      }
      return out;
    }

  }  // namespace

  std::string_view to_string(Side side) noexcept {
    return side == Side::left ? "left" : "right";
  }

  std::string_view to_string(WhiteheadStatus status) noexcept {
    switch (status) {
      case WhiteheadStatus::certified: return "certified";
      case WhiteheadStatus::failed: return "failed";
      case WhiteheadStatus::inconclusive: return "inconclusive";
    }
    return "";
  }

  Precongruence r_left(FinCat const& cat, MorphismSet const& weq) {
    return left_seed(cat, weq);
  }

  Precongruence r_right(FinCat const& cat, MorphismSet const& weq) {
    auto [op, op_weq] = opposite(cat, weq);
    return left_seed(op, op_weq);
  }

  Precongruence r_seed(FinCat const& cat, MorphismSet const& weq, Side side) {
    return side == Side::left ? r_left(cat, weq) : r_right(cat, weq);
  }

  Precongruence rc_relation(FinCat const& cat, MorphismSet const& weq, Side side) {
    Oriented const o = orient(cat, weq, side);
    return left_rc(o.cat, o.weq);
  }

  Precongruence r_left_comp(FinCat const& cat, MorphismSet const& weq) {
    Precongruence out(cat.num_morphisms());
    for (auto [f, g] : rc_relation(cat, weq, Side::left).distinct_pairs()) {
      out.add(f, g);
    }
    return out;
  }

  Precongruence r_right_comp(FinCat const& cat, MorphismSet const& weq) {
    Precongruence out(cat.num_morphisms());
    for (auto [f, g] : rc_relation(cat, weq, Side::right).distinct_pairs()) {
      out.add(f, g);
    }
    return out;
  }

  Congruence homotopy_congruence(FinCat const& cat, MorphismSet const& weq) {
    Precongruence seed = r_left(cat, weq);
    seed.add_all(r_right(cat, weq));
    return least_congruence(cat, seed);
  }

  WhiteheadVerdict certify_whitehead(FinCat const& cat, WeqFamily const& family) {
    require_weak_equivalences(family);
    MorphismSet const& weq = family.members;

    WhiteheadCertificate cert;
    cert.left_seed  = r_left(cat, weq);
    cert.right_seed = r_right(cat, weq);
    Precongruence seed = cert.left_seed;
    seed.add_all(cert.right_seed);
    cert.congruence = least_congruence(cat, seed);

    WhiteheadVerdict verdict{WhiteheadStatus::certified, cert.congruence, {}, {}, {}};
    for (MorphismId w : weq.members()) {
      if (auto inv = homotopy_inverse(cat, cert.congruence, w)) {
        cert.inverse_table.emplace(w, *inv);
      } else {
        verdict.not_invertible.push_back(w);
      }
    }
    if (verdict.not_invertible.empty()) {
      verdict.certificate = std::move(cert);
      return verdict;
    }
    if (check_split_generated(cat, family).holds()) {
      throw InternalError(fmt::format(
          "split-generated family but {} has no homotopy inverse",
          cat.name(verdict.not_invertible.front())));
    }
    verdict.witness = nonfullness_witness(cat, weq);
    verdict.status  = verdict.witness ? WhiteheadStatus::failed
                                      : WhiteheadStatus::inconclusive;
    return verdict;
  }

  CoincidenceResult check_lr_coincide(FinCat const& cat, WeqFamily const& family) {
    if (!check_split_generated(cat, family).holds()) {
      throw PreconditionError("check_lr_coincide needs a split-generated family");
    }
    MorphismSet const& weq = family.members;
    CoincidenceResult  out;
    out.left     = least_congruence(cat, r_left(cat, weq));
    out.right    = least_congruence(cat, r_right(cat, weq));
    out.combined = homotopy_congruence(cat, weq);
    for (MorphismId f = 0; f < cat.num_morphisms() && !out.differing; ++f) {
      for (MorphismId g : cat.hom(cat.dom(f), cat.cod(f))) {
        bool const l = out.left.related(f, g);
        if (l != out.right.related(f, g) || l != out.combined.related(f, g)) {
          out.holds     = false;
          out.differing = MorphismPair{f, g};
          break;
        }
      }
    }
    return out;
  }

  std::vector<Fork> weq_forks(FinCat const&      cat,
                              MorphismSet const& weq,
                              ObjectId           vertex,
                              Side               side) {
    Oriented const o = orient(cat, weq, side);
    return left_forks(o.cat, o.weq, vertex, side);
  }

  std::optional<HomotopyWitness> find_homotopy(FinCat const&      cat,
                                               MorphismSet const& weq,
                                               Side               side,
                                               MorphismId         f,
                                               MorphismId         g) {
    Oriented const o = orient(cat, weq, side);
    if (o.cat.dom(f) != o.cat.dom(g) || o.cat.cod(f) != o.cat.cod(g)) {
      return std::nullopt;
    }
    for (Fork const& fork : left_forks(o.cat, o.weq, o.cat.dom(f), side)) {
      if (auto h = mediator(o.cat, fork, f, g)) {
        return HomotopyWitness{f, g, fork, *h};
      }
    }
    return std::nullopt;
  }

  ForkCheck check_fork_condition(FinCat const& cat, MorphismSet const& weq, Side side) {
    Oriented const o = orient(cat, weq, side);
    ForkCheck      out;
    for (auto const& [ends, pairs] : by_hom(o.cat, left_rc(o.cat, o.weq))) {
      std::vector<Fork> const forks = left_forks(o.cat, o.weq, ends.first, side);
      for (auto [f, g] : pairs) {
        if (f >= g) {
          continue;  // reflexive pairs have the trivial fork; g,f is dual
        }
        bool const found = std::any_of(forks.begin(), forks.end(), [&](Fork const& k) {
          return mediator(o.cat, k, f, g).has_value();
        });
        if (!found) {
          out.holds          = false;
          out.counterexample = MorphismPair{f, g};
          return out;
        }
      }
    }
    return out;
  }

  ForkCheck check_common_fork(FinCat const&      cat,
                              MorphismSet const& weq,
                              Side               side,
                              PairScope          scope) {
    Oriented const o = orient(cat, weq, side);
    ForkCheck      out;
    Precongruence  rel = left_rc(o.cat, o.weq);
    if (scope == PairScope::distinct) {
      Precongruence distinct(cat.num_morphisms());
      for (auto [f, g] : rel.distinct_pairs()) {
        distinct.add(f, g);
      }
      rel = std::move(distinct);
    }
    for (auto const& [ends, pairs] : by_hom(o.cat, rel)) {
      std::vector<Fork> const forks = left_forks(o.cat, o.weq, ends.first, side);
      // supports[k][i]: fork k carries a homotopy for pairs[i].
      std::vector<std::vector<bool>> supports;
      for (Fork const& k : forks) {
        std::vector<bool> row(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          auto [f, g] = pairs[i];
          row[i]      = mediator(o.cat, k, f, g).has_value()
                   || (scope == PairScope::distinct && mediator(o.cat, k, g, f).has_value());
        }
        supports.push_back(std::move(row));
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i; j < pairs.size(); ++j) {
          bool const common = std::any_of(
              supports.begin(), supports.end(),
              [&](std::vector<bool> const& row) { return row[i] && row[j]; });
          if (!common) {
            out.holds          = false;
            out.counterexample = pairs[i];
            out.second         = pairs[j];
            return out;
          }
        }
      }
    }
    return out;
  }

  TransitivityCheck check_rc_transitive(FinCat const& cat,
                                        MorphismSet const& weq,
                                        Side          side) {
    Precongruence const rel = rc_relation(cat, weq, side);
    std::map<MorphismId, std::vector<MorphismId>> succ;
    for (auto [f, g] : rel.pairs()) {
      succ[f].push_back(g);
    }
    for (auto const& [f, gs] : succ) {
      for (MorphismId g : gs) {
        auto const next = succ.find(g);
        if (next == succ.end()) {
          continue;
        }
        for (MorphismId h : next->second) {
          if (!rel.contains(f, h)) {
            return {false, f, g, h};
          }
        }
      }
    }
    return {};
  }

  SaturationReport check_saturation(FinCat const&               cat,
                                    WeqFamily const&            family,
                                    WhiteheadCertificate const* cert) {
    if (cert == nullptr) {
      throw PreconditionError("saturation check needs a Whitehead certificate");
    }
    SaturationReport out;
    for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
      if (!family.members.contains(f)
          && homotopy_inverse(cat, cert->congruence, f)) {
        out.violations.push_back(f);
      }
    }
    out.predicted = family.report.homotopical()
                    && check_split_generated(cat, family).holds()
                    && (check_fork_condition(cat, family.members, Side::left).holds
                        || check_fork_condition(cat, family.members, Side::right).holds);
    return out;
  }

}  // namespace hocat
