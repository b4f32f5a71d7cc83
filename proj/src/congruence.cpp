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

#include "hocat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  ////////////////////////////////////////////////////////////////////////
  // Precongruence
  ////////////////////////////////////////////////////////////////////////

  void Precongruence::add(MorphismId f, MorphismId g) {
    if (f >= universe_ || g >= universe_) {
      throw PreconditionError("precongruence: morphism index out of range");
    }
    pairs_.emplace(f, g);
  }

  void Precongruence::add_all(Precongruence const& other) {
    for (auto [f, g] : other.pairs_) {
      add(f, g);
    }
  }

  std::set<MorphismPair> Precongruence::distinct_pairs() const {
    std::set<MorphismPair> out;
    for (auto [f, g] : pairs_) {
      if (f != g) {
        out.insert(canonical(f, g));
      }
    }
    return out;
  }

  void check_parallel(FinCat const& cat, Precongruence const& R) {
    if (R.universe() != cat.num_morphisms()) {
      throw PreconditionError("precongruence belongs to a different category");
    }
    for (auto [f, g] : R.pairs()) {
      if (cat.dom(f) != cat.dom(g) || cat.cod(f) != cat.cod(g)) {
        throw PreconditionError(fmt::format(
            "related morphisms {} and {} are not parallel", cat.name(f), cat.name(g)));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      // Returns false if x and y were already in one block.
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        return true;
      }

      std::vector<std::size_t> labels() {
        std::vector<std::size_t> out(parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) {
          out[i] = find(i);
        }
        return out;
      }

     private:
      std::vector<std::size_t> parent_;
    };

    // First violation of closure under composition, if any.
    std::optional<std::string> closure_violation(FinCat const&                   cat,
                                                 std::vector<std::size_t> const& label) {
      std::size_t const n = cat.num_morphisms();
      // Comparing every morphism with the least member of its class on one
      // side at a time suffices: two-sided closure follows by transitivity.
      std::map<std::size_t, MorphismId> rep;
      for (MorphismId m = 0; m < n; ++m) {
        rep.emplace(label[m], m);
      }
      for (MorphismId f = 0; f < n; ++f) {
        MorphismId const g = rep.at(label[f]);
        if (f == g) {
          continue;
        }
        if (cat.dom(f) != cat.dom(g) || cat.cod(f) != cat.cod(g)) {
          return fmt::format(
              "{} and {} are related but not parallel", cat.name(f), cat.name(g));
        }
        for (MorphismId u = 0; u < n; ++u) {
          if (cat.composable(f, u)
              && label[cat.compose_unchecked(f, u)]
                     != label[cat.compose_unchecked(g, u)]) {
            return fmt::format("{} ~ {} but {}∘{} and {}∘{} are not related",
                               cat.name(f),
                               cat.name(g),
                               cat.name(f),
                               cat.name(u),
                               cat.name(g),
                               cat.name(u));
          }
          if (cat.composable(u, f)
              && label[cat.compose_unchecked(u, f)]
                     != label[cat.compose_unchecked(u, g)]) {
            return fmt::format("{} ~ {} but {}∘{} and {}∘{} are not related",
                               cat.name(f),
                               cat.name(g),
                               cat.name(u),
                               cat.name(f),
                               cat.name(u),
                               cat.name(g));
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  Congruence::Congruence(std::vector<std::size_t> const& labels)
      : class_of_(labels.size()) {
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t m = 0; m < labels.size(); ++m) {
      auto [it, fresh] = renumber.emplace(labels[m], classes_.size());
      if (fresh) {
        classes_.emplace_back();
      }
      class_of_[m] = it->second;
      classes_[it->second].push_back(static_cast<MorphismId>(m));
    }
  }

  Congruence Congruence::discrete(FinCat const& cat) {
    std::vector<std::size_t> labels(cat.num_morphisms());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return Congruence(labels);
  }

  Congruence Congruence::from_partition(FinCat const&                   cat,
                                        std::vector<std::size_t> const& labels) {
    if (labels.size() != cat.num_morphisms()) {
      throw ValidationError("partition has the wrong size");
    }
    if (auto bad = closure_violation(cat, labels)) {
      throw ValidationError(*bad);
    }
    return Congruence(labels);
  }

  std::vector<std::vector<MorphismId>> Congruence::non_singleton_classes() const {
    std::vector<std::vector<MorphismId>> out;
    std::copy_if(classes_.begin(),
                 classes_.end(),
                 std::back_inserter(out),
                 [](auto const& c) { return c.size() > 1; });
    return out;
  }

  Precongruence Congruence::as_relation() const {
    Precongruence R(universe());
    for (auto const& c : classes_) {
      for (MorphismId f : c) {
        for (MorphismId g : c) {
          R.add(f, g);
        }
      }
    }
    return R;
  }

  bool Congruence::refines(Congruence const& other) const {
    for (auto const& c : classes_) {
      for (MorphismId m : c) {
        if (!other.related(c.front(), m)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Precongruence close_composition(FinCat const& cat, Precongruence const& R) {
    check_parallel(cat, R);
    std::size_t const n = cat.num_morphisms();
    Precongruence     out(n);
    for (auto [f, g] : R.distinct_pairs()) {
      ObjectId const a = cat.dom(f);
      ObjectId const b = cat.cod(f);
      for (MorphismId u = 0; u < n; ++u) {
        if (cat.cod(u) != a) {
          continue;
        }
        MorphismId const fu = cat.compose_unchecked(f, u);
        MorphismId const gu = cat.compose_unchecked(g, u);
        for (MorphismId v = 0; v < n; ++v) {
          if (cat.dom(v) != b) {
            continue;
          }
          MorphismId const vfu = cat.compose_unchecked(v, fu);
          MorphismId const vgu = cat.compose_unchecked(v, gu);
          if (vfu != vgu) {
            auto [x, y] = canonical(vfu, vgu);
            out.add(x, y);
          }
        }
      }
    }
    return out;
  }

  Congruence least_congruence(FinCat const& cat, Precongruence const& R) {
    check_parallel(cat, R);
    std::size_t const        n = cat.num_morphisms();
    UnionFind                uf(n);
    std::deque<MorphismPair> work;
    for (auto p : R.distinct_pairs()) {
      work.push_back(p);
    }
    // Every successful merge re-fires composition closure for the merged
    // pair, so the fixpoint is closed under both operations.
    while (!work.empty()) {
      auto [f, g] = work.front();
      work.pop_front();
      if (!uf.unite(f, g)) {
        continue;
      }
      ObjectId const a = cat.dom(f);
      ObjectId const b = cat.cod(f);
      for (MorphismId u = 0; u < n; ++u) {
        if (cat.cod(u) != a) {
          continue;
        }
        MorphismId const fu = cat.compose_unchecked(f, u);
        MorphismId const gu = cat.compose_unchecked(g, u);
        for (MorphismId v = 0; v < n; ++v) {
          if (cat.dom(v) != b) {
            continue;
          }
          MorphismId const vfu = cat.compose_unchecked(v, fu);
          MorphismId const vgu = cat.compose_unchecked(v, gu);
          if (uf.find(vfu) != uf.find(vgu)) {
            work.emplace_back(vfu, vgu);
          }
        }
      }
    }
    return Congruence(uf.labels());
  }

  QuotientResult quotient(FinCat const& cat, Congruence const& R) {
    if (R.universe() != cat.num_morphisms()) {
      throw PreconditionError("congruence belongs to a different category");
    }
    std::vector<std::size_t> labels(cat.num_morphisms());
    for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
      labels[m] = R.class_of(m);
    }
    if (auto bad = closure_violation(cat, labels)) {
      throw PreconditionError(fmt::format("not a congruence: {}", *bad));
    }

    auto const&               classes = R.classes();
    std::vector<MorphismInfo> infos;
    for (auto const& c : classes) {
      MorphismId nm = c.front();
      for (MorphismId m : c) {
        if (cat.is_identity(m)) {
          nm = m;
          break;
        }
      }
      infos.push_back({cat.name(nm), cat.dom(nm), cat.cod(nm)});
    }
    std::vector<MorphismId> ids(cat.num_objects());
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      ids[x] = static_cast<MorphismId>(R.class_of(cat.identity(x)));
    }
    std::size_t const       k = classes.size();
    std::vector<MorphismId> table(k * k, kNoMorphism);
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t f = 0; f < k; ++f) {
        MorphismId const rg = classes[g].front();
        MorphismId const rf = classes[f].front();
        if (cat.composable(rg, rf)) {
          table[g * k + f] = static_cast<MorphismId>(
              R.class_of(cat.compose_unchecked(rg, rf)));
        }
      }
    }

    QuotientResult result;
    result.quotient = FinCat::from_table(
        cat.objects(), std::move(infos), std::move(ids), std::move(table));
    result.projection.on_objects.resize(cat.num_objects());
    std::iota(result.projection.on_objects.begin(),
              result.projection.on_objects.end(),
              ObjectId{0});
    for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
      result.projection.on_morphisms.push_back(
          static_cast<MorphismId>(R.class_of(m)));
    }
    return result;
  }

  Congruence kernel_congruence(FinCat const& source, CatFunctor const& F) {
    if (F.on_morphisms.size() != source.num_morphisms()) {
      throw PreconditionError("functor does not match its source category");
    }
    std::map<std::tuple<ObjectId, ObjectId, MorphismId>, std::size_t> key;
    std::vector<std::size_t> labels(source.num_morphisms());
    for (MorphismId m = 0; m < source.num_morphisms(); ++m) {
      auto [it, _] = key.emplace(
          std::tuple{source.dom(m), source.cod(m), F.on_morphisms[m]}, key.size());
      labels[m] = it->second;
    }
    return Congruence(labels);
  }

  std::optional<MorphismId> homotopy_inverse(FinCat const&     cat,
                                             Congruence const& L,
                                             MorphismId        f) {
    ObjectId const x = cat.dom(f);
    ObjectId const y = cat.cod(f);
    for (MorphismId g : cat.hom(y, x)) {
      if (L.related(cat.compose_unchecked(g, f), cat.identity(x))
          && L.related(cat.compose_unchecked(f, g), cat.identity(y))) {
        return g;
      }
    }
    return std::nullopt;
  }

  MorphismSet sigma_of(FinCat const& cat, Congruence const& L) {
    MorphismSet out(cat.num_morphisms());
    for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
      if (homotopy_inverse(cat, L, f)) {
        out.insert(f);
      }
    }
    return out;
  }

  MorphismSet sigma_of(FinCat const& cat, Precongruence const& R) {
    return sigma_of(cat, least_congruence(cat, R));
  }

  CongruenceCheck is_congruence(FinCat const& cat, Precongruence const& R) {
    auto fail = [&](std::string why, MorphismId f, MorphismId g) {
      return CongruenceCheck{false, std::move(why), MorphismPair{f, g}};
    };
    if (R.universe() != cat.num_morphisms()) {
      return {false, "relation belongs to a different category", std::nullopt};
    }
    for (auto [f, g] : R.pairs()) {
      if (cat.dom(f) != cat.dom(g) || cat.cod(f) != cat.cod(g)) {
        return fail("related morphisms are not parallel", f, g);
      }
    }
    std::size_t const n = cat.num_morphisms();
    for (MorphismId f = 0; f < n; ++f) {
      if (!R.contains(f, f)) {
        return fail(fmt::format("not reflexive at {}", cat.name(f)), f, f);
      }
    }
    for (auto [f, g] : R.pairs()) {
      if (!R.contains(g, f)) {
        return fail(
            fmt::format("not symmetric: {} ~ {}", cat.name(f), cat.name(g)), g, f);
      }
    }
    for (auto [f, g] : R.pairs()) {
      auto lo = R.pairs().lower_bound({g, 0});
      for (auto it = lo; it != R.pairs().end() && it->first == g; ++it) {
        if (!R.contains(f, it->second)) {
          return fail(fmt::format("not transitive: {} ~ {} ~ {}",
                                  cat.name(f),
                                  cat.name(g),
                                  cat.name(it->second)),
                      f,
                      it->second);
        }
      }
    }
    for (auto [f, g] : R.pairs()) {
      for (MorphismId u = 0; u < n; ++u) {
        if (cat.composable(f, u)) {
          MorphismId const fu = cat.compose_unchecked(f, u);
          MorphismId const gu = cat.compose_unchecked(g, u);
          if (!R.contains(fu, gu)) {
            return fail(fmt::format("not closed under precomposition with {}",
                                    cat.name(u)),
                        fu,
                        gu);
          }
        }
        if (cat.composable(u, f)) {
          MorphismId const uf = cat.compose_unchecked(u, f);
          MorphismId const ug = cat.compose_unchecked(u, g);
          if (!R.contains(uf, ug)) {
            return fail(fmt::format("not closed under postcomposition with {}",
                                    cat.name(u)),
                        uf,
                        ug);
          }
        }
      }
    }
    return {};
  }

}  // namespace hocat
