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

#include "hocat/weq.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  WeqFamily check_weq_axioms(FinCat const& cat, MorphismSet const& weq) {
    if (weq.universe() != cat.num_morphisms()) {
      throw PreconditionError("weak equivalences belong to a different category");
    }
    WeqFamily family{weq, {}};
    MorphismSet& W = family.members;
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      if (!W.contains(cat.identity(x))) {
        family.report.inserted_identities.push_back(cat.identity(x));
        W.insert(cat.identity(x));
      }
    }

    std::size_t const n = cat.num_morphisms();
    // A composite missing from W is reported before a missing factor.
    for (bool composite_only : {true, false}) {
      for (MorphismId f = 0; f < n && !family.report.two_of_three_failure; ++f) {
        for (MorphismId g = 0; g < n; ++g) {
          if (!cat.composable(g, f)) {
            continue;
          }
          MorphismId const gf    = cat.compose_unchecked(g, f);
          int const        count = int(W.contains(f)) + int(W.contains(g))
                            + int(W.contains(gf));
          if (count != 2 || (composite_only && W.contains(gf))) {
            continue;
          }
          MorphismId const missing
              = !W.contains(f) ? f : (!W.contains(g) ? g : gf);
          family.report.two_of_three_failure
              = TwoOfThreeWitness{f, g, gf, missing};
          break;
        }
      }
    }

    for (MorphismId f = 0; f < n; ++f) {
      if (W.contains(f)) {
        continue;
      }
      std::optional<MorphismId> right, left;
      for (MorphismId g = 0; g < n && !right; ++g) {
        if (cat.composable(f, g) && W.contains(cat.compose_unchecked(f, g))) {
          right = g;
        }
      }
      for (MorphismId h = 0; h < n && !left; ++h) {
        if (cat.composable(h, f) && W.contains(cat.compose_unchecked(h, f))) {
          left = h;
        }
      }
      if (right && left) {
        family.report.weak_invertibility_failure
            = WeakInvertibilityWitness{f, *right, *left};
        break;
      }
    }
    return family;
  }

  WeqFamily check_weq_axioms(FinCat const&                cat,
                             std::span<std::string const> names) {
    MorphismSet W(cat.num_morphisms());
    for (auto const& nm : names) {
      W.insert(cat.morphism_id(nm));
    }
    return check_weq_axioms(cat, W);
  }

  void require_weak_equivalences(WeqFamily const& family) {
    if (!family.report.category_with_weak_equivalences()) {
      throw PreconditionError(
          "the family of weak equivalences fails the two out of three property");
    }
  }

  std::vector<SplitPair> find_splits(FinCat const& cat) {
    std::vector<SplitPair> out;
    for (MorphismId s = 0; s < cat.num_morphisms(); ++s) {
      for (MorphismId r : cat.hom(cat.cod(s), cat.dom(s))) {
        if (cat.is_identity(cat.compose_unchecked(r, s))) {
          out.push_back({s, r});
        }
      }
    }
    std::sort(out.begin(), out.end(), [](SplitPair const& a, SplitPair const& b) {
      return std::pair{a.section, a.retraction}
             < std::pair{b.section, b.retraction};
    });
    return out;
  }

  SplitWeq const* SplitCertificate::find_split(MorphismId m) const {
    auto it = std::find_if(split_weqs.begin(),
                           split_weqs.end(),
                           [m](SplitWeq const& s) { return s.morphism == m; });
    return it == split_weqs.end() ? nullptr : &*it;
  }

  SplitGeneration check_split_generated(FinCat const&    cat,
                                        WeqFamily const& family) {
    require_weak_equivalences(family);
    MorphismSet const& W = family.members;
    std::size_t const  n = cat.num_morphisms();

    SplitCertificate cert;
    // Least-index partner; sections take precedence over retractions.
    for (MorphismId w : W.members()) {
      std::optional<SplitWeq> found;
      for (MorphismId r : cat.hom(cat.cod(w), cat.dom(w))) {
        if (cat.is_identity(cat.compose_unchecked(r, w))) {
          found = SplitWeq{w, r, SplitKind::section};
          break;
        }
      }
      if (!found) {
        for (MorphismId s : cat.hom(cat.cod(w), cat.dom(w))) {
          if (cat.is_identity(cat.compose_unchecked(w, s))) {
            found = SplitWeq{w, s, SplitKind::retraction};
            break;
          }
        }
      }
      if (found) {
        cert.split_weqs.push_back(*found);
      }
    }

    // Breadth-first closure: each composite first reached is recorded with
    // a shortest decomposition.
    std::vector<std::optional<std::vector<MorphismId>>> decomp(n);
    std::deque<MorphismId>                              queue;
    for (auto const& s : cert.split_weqs) {
      decomp[s.morphism] = std::vector<MorphismId>{s.morphism};
      queue.push_back(s.morphism);
    }
    while (!queue.empty()) {
      MorphismId const x = queue.front();
      queue.pop_front();
      for (auto const& s : cert.split_weqs) {
        if (!cat.composable(s.morphism, x)) {
          continue;
        }
        MorphismId const y = cat.compose_unchecked(s.morphism, x);
        if (!decomp[y]) {
          auto word = *decomp[x];
          word.push_back(s.morphism);
          decomp[y] = std::move(word);
          queue.push_back(y);
        }
      }
    }

    SplitGeneration result;
    for (MorphismId w : W.members()) {
      if (!decomp[w]) {
        result.unreachable = w;
        return result;
      }
      cert.decompositions.emplace(w, *decomp[w]);
    }
    result.certificate = std::move(cert);
    return result;
  }

}  // namespace hocat
