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

#include "hocat/fincat.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  std::string identity_name(std::string_view object) {
    return fmt::format("{}{}", kIdentityPrefix, object);
  }

  ////////////////////////////////////////////////////////////////////////
  // MorphismSet
  ////////////////////////////////////////////////////////////////////////

  MorphismSet::MorphismSet(std::size_t                 universe,
                           std::span<MorphismId const> members)
      : bits_(universe, false) {
    for (MorphismId m : members) {
      insert(m);
    }
  }

  std::size_t MorphismSet::size() const {
    return static_cast<std::size_t>(
        std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<MorphismId> MorphismSet::members() const {
    std::vector<MorphismId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) {
        out.push_back(static_cast<MorphismId>(i));
      }
    }
    return out;
  }

  bool MorphismSet::is_subset_of(MorphismSet const& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.contains(static_cast<MorphismId>(i))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // FinCat
  ////////////////////////////////////////////////////////////////////////

  FinCat FinCat::from_table(std::vector<std::string>  objects,
                            std::vector<MorphismInfo> morphisms,
                            std::vector<MorphismId>   identities,
                            std::vector<MorphismId>   table) {
    std::size_t const nobj = objects.size();
    std::size_t const n    = morphisms.size();
    if (identities.size() != nobj) {
      throw ValidationError("every object needs exactly one identity");
    }
    if (table.size() != n * n) {
      throw ValidationError(fmt::format(
          "composition table has {} entries, expected {}", table.size(), n * n));
    }
    for (auto const& m : morphisms) {
      if (m.dom >= nobj || m.cod >= nobj) {
        throw ValidationError(
            fmt::format("morphism {} has an unknown endpoint", m.name));
      }
    }
    for (ObjectId x = 0; x < nobj; ++x) {
      MorphismId i = identities[x];
      if (i >= n || morphisms[i].dom != x || morphisms[i].cod != x) {
        throw ValidationError(fmt::format(
            "identity of object {} is not an endomorphism of it", objects[x]));
      }
    }

    auto at = [&](MorphismId g, MorphismId f) -> MorphismId& {
      return table[static_cast<std::size_t>(g) * n + f];
    };

    for (MorphismId g = 0; g < n; ++g) {
      for (MorphismId f = 0; f < n; ++f) {
        MorphismId const gf = at(g, f);
        if (morphisms[f].cod != morphisms[g].dom) {
          if (gf != kNoMorphism) {
            throw ValidationError(
                fmt::format("composite {}∘{} given for a non-composable pair",
                            morphisms[g].name,
                            morphisms[f].name));
          }
          continue;
        }
        if (gf == kNoMorphism) {
          throw ValidationError(fmt::format("missing composite {}∘{}",
                                            morphisms[g].name,
                                            morphisms[f].name));
        }
        if (gf >= n || morphisms[gf].dom != morphisms[f].dom
            || morphisms[gf].cod != morphisms[g].cod) {
          throw ValidationError(
              fmt::format("composite {}∘{} has the wrong endpoints",
                          morphisms[g].name,
                          morphisms[f].name));
        }
      }
    }

    for (MorphismId f = 0; f < n; ++f) {
      MorphismId const src = identities[morphisms[f].dom];
      MorphismId const tgt = identities[morphisms[f].cod];
      if (at(f, src) != f || at(tgt, f) != f) {
        throw ValidationError(
            fmt::format("identity law fails for {}", morphisms[f].name));
      }
    }

    for (MorphismId f = 0; f < n; ++f) {
      for (MorphismId g = 0; g < n; ++g) {
        if (morphisms[f].cod != morphisms[g].dom) {
          continue;
        }
        MorphismId const gf = at(g, f);
        for (MorphismId h = 0; h < n; ++h) {
          if (morphisms[g].cod != morphisms[h].dom) {
            continue;
          }
          if (at(h, gf) != at(at(h, g), f)) {
            throw ValidationError(fmt::format(
                "associativity fails for ({}, {}, {}): {}∘({}∘{}) = {} but "
                "({}∘{})∘{} = {}",
                morphisms[f].name,
                morphisms[g].name,
                morphisms[h].name,
                morphisms[h].name,
                morphisms[g].name,
                morphisms[f].name,
                morphisms[at(h, gf)].name,
                morphisms[h].name,
                morphisms[g].name,
                morphisms[f].name,
                morphisms[at(at(h, g), f)].name));
          }
        }
      }
    }

    FinCat cat;
    cat.homs_.resize(nobj * nobj);
    for (MorphismId m = 0; m < n; ++m) {
      cat.homs_[morphisms[m].dom * nobj + morphisms[m].cod].push_back(m);
    }
    cat.objects_    = std::move(objects);
    cat.morphisms_  = std::move(morphisms);
    cat.identities_ = std::move(identities);
    cat.table_      = std::move(table);
    return cat;
  }

  MorphismId FinCat::compose(MorphismId g, MorphismId f) const {
    if (!composable(g, f)) {
      throw PreconditionError(fmt::format(
          "cannot compose {} after {}: endpoints do not match", name(g), name(f)));
    }
    return compose_unchecked(g, f);
  }

  std::optional<ObjectId> FinCat::find_object(std::string_view nm) const {
    auto it = std::find(objects_.begin(), objects_.end(), nm);
    if (it == objects_.end()) {
      return std::nullopt;
    }
    return static_cast<ObjectId>(it - objects_.begin());
  }

  std::optional<MorphismId> FinCat::find_morphism(std::string_view nm) const {
    auto it = std::find_if(morphisms_.begin(),
                           morphisms_.end(),
                           [&](MorphismInfo const& m) { return m.name == nm; });
    if (it == morphisms_.end()) {
      return std::nullopt;
    }
    return static_cast<MorphismId>(it - morphisms_.begin());
  }

  ObjectId FinCat::object_id(std::string_view nm) const {
    if (auto x = find_object(nm)) {
      return *x;
    }
    throw PreconditionError(fmt::format("unknown object {}", nm));
  }

  MorphismId FinCat::morphism_id(std::string_view nm) const {
    if (auto m = find_morphism(nm)) {
      return *m;
    }
    throw PreconditionError(fmt::format("unknown morphism {}", nm));
  }

  MorphismSet FinCat::identities() const {
    return MorphismSet(num_morphisms(), identities_);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  std::vector<MorphismId> hom_set(FinCat const& cat, ObjectId a, ObjectId b) {
    if (a >= cat.num_objects() || b >= cat.num_objects()) {
      throw PreconditionError("hom_set: unknown object");
    }
    return cat.hom(a, b);
  }

  MorphismId compose_path(FinCat const&               cat,
                          ObjectId                    start,
                          std::span<MorphismId const> path) {
    if (start >= cat.num_objects()) {
      throw PreconditionError("compose_path: unknown start object");
    }
    MorphismId acc = cat.identity(start);
    for (MorphismId m : path) {
      if (cat.dom(m) != cat.cod(acc)) {
        throw PreconditionError(fmt::format(
            "compose_path: {} does not start where the path ends", cat.name(m)));
      }
      acc = cat.compose_unchecked(m, acc);
    }
    return acc;
  }

  FinCat opposite(FinCat const& cat) {
    std::size_t const         n = cat.num_morphisms();
    std::vector<MorphismInfo> morphisms;
    morphisms.reserve(n);
    for (MorphismId m = 0; m < n; ++m) {
      morphisms.push_back({cat.name(m), cat.cod(m), cat.dom(m)});
    }
    std::vector<MorphismId> identities(cat.num_objects());
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      identities[x] = cat.identity(x);
    }
    // In the dual, g ∘op f = f ∘ g.
    std::vector<MorphismId> table(n * n, kNoMorphism);
    for (MorphismId g = 0; g < n; ++g) {
      for (MorphismId f = 0; f < n; ++f) {
        if (cat.composable(f, g)) {
          table[g * n + f] = cat.compose_unchecked(f, g);
        }
      }
    }
    return FinCat::from_table(
        cat.objects(), std::move(morphisms), std::move(identities), std::move(table));
  }

  std::pair<FinCat, MorphismSet> opposite(FinCat const&      cat,
                                          MorphismSet const& weq) {
    return {opposite(cat), weq};
  }

  std::optional<std::string> check_functor(FinCat const&     source,
                                           FinCat const&     target,
                                           CatFunctor const& F) {
    if (F.on_objects.size() != source.num_objects()
        || F.on_morphisms.size() != source.num_morphisms()) {
      return "functor maps have the wrong size";
    }
    for (ObjectId x : F.on_objects) {
      if (x >= target.num_objects()) {
        return "object image out of range";
      }
    }
    for (MorphismId m = 0; m < source.num_morphisms(); ++m) {
      MorphismId const fm = F.on_morphisms[m];
      if (fm >= target.num_morphisms()) {
        return fmt::format("image of {} out of range", source.name(m));
      }
      if (target.dom(fm) != F.on_objects[source.dom(m)]
          || target.cod(fm) != F.on_objects[source.cod(m)]) {
        return fmt::format("{} is not mapped between the images of its endpoints",
                           source.name(m));
      }
    }
    for (ObjectId x = 0; x < source.num_objects(); ++x) {
      if (F.on_morphisms[source.identity(x)]
          != target.identity(F.on_objects[x])) {
        return fmt::format("identity of {} is not preserved",
                           source.object_name(x));
      }
    }
    for (MorphismId f = 0; f < source.num_morphisms(); ++f) {
      for (MorphismId g = 0; g < source.num_morphisms(); ++g) {
        if (!source.composable(g, f)) {
          continue;
        }
        if (F.on_morphisms[source.compose_unchecked(g, f)]
            != target.compose_unchecked(F.on_morphisms[g], F.on_morphisms[f])) {
          return fmt::format(
              "composite {}∘{} is not preserved", source.name(g), source.name(f));
        }
      }
    }
    return std::nullopt;
  }

  namespace {
    class IsoSearch {
     public:
      IsoSearch(FinCat const& s, FinCat const& t) : s_(s), t_(t) {}

      std::optional<CatFunctor> run() {
        if (s_.num_objects() != t_.num_objects()
            || s_.num_morphisms() != t_.num_morphisms()) {
          return std::nullopt;
        }
        F_.on_objects.assign(s_.num_objects(), 0);
        F_.on_morphisms.assign(s_.num_morphisms(), kNoMorphism);
        used_obj_.assign(t_.num_objects(), false);
        used_mor_.assign(t_.num_morphisms(), false);
        if (assign_object(0)) {
          return F_;
        }
        return std::nullopt;
      }

     private:
      bool assign_object(ObjectId x) {
        if (x == s_.num_objects()) {
          return assign_morphism(0);
        }
        for (ObjectId y = 0; y < t_.num_objects(); ++y) {
          if (used_obj_[y]) {
            continue;
          }
          F_.on_objects[x] = y;
          if (!hom_sizes_match(x)) {
            continue;
          }
          used_obj_[y] = true;
          if (assign_object(x + 1)) {
            return true;
          }
          used_obj_[y] = false;
        }
        return false;
      }

      // Hom-set cardinalities between x and already placed objects agree.
      bool hom_sizes_match(ObjectId x) const {
        for (ObjectId z = 0; z <= x; ++z) {
          auto const fx = F_.on_objects[x];
          auto const fz = F_.on_objects[z];
          if (s_.hom(x, z).size() != t_.hom(fx, fz).size()
              || s_.hom(z, x).size() != t_.hom(fz, fx).size()) {
            return false;
          }
        }
        return true;
      }

      bool assign_morphism(MorphismId m) {
        if (m == s_.num_morphisms()) {
          return true;
        }
        ObjectId const a = F_.on_objects[s_.dom(m)];
        ObjectId const b = F_.on_objects[s_.cod(m)];
        for (MorphismId c : t_.hom(a, b)) {
          if (used_mor_[c]) {
            continue;
          }
          if (s_.is_identity(m) != t_.is_identity(c)) {
            continue;
          }
          F_.on_morphisms[m] = c;
          if (consistent(m)) {
            used_mor_[c] = true;
            if (assign_morphism(m + 1)) {
              return true;
            }
            used_mor_[c] = false;
          }
        }
        F_.on_morphisms[m] = kNoMorphism;
        return false;
      }

      // Composition is preserved on every pair among morphisms 0..m.
      bool consistent(MorphismId m) const {
        for (MorphismId k = 0; k <= m; ++k) {
          for (auto [g, f] : {std::pair{m, k}, std::pair{k, m}}) {
            if (!s_.composable(g, f)) {
              continue;
            }
            MorphismId const gf  = s_.compose_unchecked(g, f);
            MorphismId const img = F_.on_morphisms[gf];
            if (img == kNoMorphism) {
              continue;
            }
            if (img
                != t_.compose_unchecked(F_.on_morphisms[g], F_.on_morphisms[f])) {
              return false;
            }
          }
        }
        return true;
      }

      FinCat const&     s_;
      FinCat const&     t_;
      CatFunctor        F_;
      std::vector<bool> used_obj_;
      std::vector<bool> used_mor_;
    };
  }  // namespace

  std::optional<CatFunctor> find_isomorphism(FinCat const& source,
                                             FinCat const& target) {
    return IsoSearch(source, target).run();
  }

  Subcategory make_subcategory(
      FinCat const&                                 parent,
      std::span<ObjectId const>                     objects,
      std::optional<std::vector<MorphismId>> const& morphisms) {
    std::vector<bool> in_obj(parent.num_objects(), false);
    for (ObjectId x : objects) {
      if (x >= parent.num_objects()) {
        throw ValidationError("subcategory: unknown object");
      }
      in_obj[x] = true;
    }
    std::vector<bool> in_mor(parent.num_morphisms(), false);
    if (morphisms) {
      for (MorphismId m : *morphisms) {
        if (m >= parent.num_morphisms()) {
          throw ValidationError("subcategory: unknown morphism");
        }
        if (!in_obj[parent.dom(m)] || !in_obj[parent.cod(m)]) {
          throw ValidationError(fmt::format(
              "subcategory: {} has an endpoint outside the subcategory",
              parent.name(m)));
        }
        in_mor[m] = true;
      }
      for (ObjectId x = 0; x < parent.num_objects(); ++x) {
        if (in_obj[x]) {
          in_mor[parent.identity(x)] = true;
        }
      }
    } else {
      for (MorphismId m = 0; m < parent.num_morphisms(); ++m) {
        in_mor[m] = in_obj[parent.dom(m)] && in_obj[parent.cod(m)];
      }
    }

    Subcategory sub;
    std::vector<ObjectId> obj_index(parent.num_objects(), 0);
    for (ObjectId x = 0; x < parent.num_objects(); ++x) {
      if (in_obj[x]) {
        obj_index[x] = static_cast<ObjectId>(sub.objects.size());
        sub.objects.push_back(x);
      }
    }
    std::vector<MorphismId> mor_index(parent.num_morphisms(), kNoMorphism);
    for (MorphismId m = 0; m < parent.num_morphisms(); ++m) {
      if (in_mor[m]) {
        mor_index[m] = static_cast<MorphismId>(sub.morphisms.size());
        sub.morphisms.push_back(m);
      }
    }

    std::vector<std::string>  names;
    std::vector<MorphismInfo> infos;
    std::vector<MorphismId>   ids;
    for (ObjectId x : sub.objects) {
      names.push_back(parent.object_name(x));
      ids.push_back(mor_index[parent.identity(x)]);
    }
    for (MorphismId m : sub.morphisms) {
      infos.push_back(
          {parent.name(m), obj_index[parent.dom(m)], obj_index[parent.cod(m)]});
    }
    std::size_t const       n = sub.morphisms.size();
    std::vector<MorphismId> table(n * n, kNoMorphism);
    for (MorphismId g = 0; g < n; ++g) {
      for (MorphismId f = 0; f < n; ++f) {
        MorphismId const pg = sub.morphisms[g];
        MorphismId const pf = sub.morphisms[f];
        if (!parent.composable(pg, pf)) {
          continue;
        }
        MorphismId const pgf = parent.compose_unchecked(pg, pf);
        if (mor_index[pgf] == kNoMorphism) {
          throw ValidationError(
              fmt::format("subcategory is not closed under composition: {}∘{}",
                          parent.name(pg),
                          parent.name(pf)));
        }
        table[g * n + f] = mor_index[pgf];
      }
    }
    sub.cat = FinCat::from_table(
        std::move(names), std::move(infos), std::move(ids), std::move(table));
    return sub;
  }

  MorphismSet restrict_to(Subcategory const& sub, MorphismSet const& parent) {
    MorphismSet out(sub.morphisms.size());
    for (MorphismId i = 0; i < sub.morphisms.size(); ++i) {
      if (parent.contains(sub.morphisms[i])) {
        out.insert(i);
      }
    }
    return out;
  }

}  // namespace hocat
