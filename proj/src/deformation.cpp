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

#include "hocat/deformation.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  namespace {

    bool same_stage(Stage const& a, Stage const& b) {
      return a.objects == b.objects && a.morphisms == b.morphisms;
    }

    Stage full_stage(FinCat const& cat, std::vector<ObjectId> objects) {
      std::sort(objects.begin(), objects.end());
      objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
      Stage s{std::move(objects), MorphismSet(cat.num_morphisms())};
      for (ObjectId a : s.objects) {
        for (ObjectId b : s.objects) {
          for (MorphismId m : cat.hom(a, b)) {
            s.morphisms.insert(m);
          }
        }
      }
      return s;
    }

    Stage resolve_stage(FinCat const& cat, RawSubcategory const& raw) {
      Stage s;
      s.objects = resolve_objects(cat, raw.objects);
      std::sort(s.objects.begin(), s.objects.end());
      s.objects.erase(std::unique(s.objects.begin(), s.objects.end()), s.objects.end());
      if (!raw.morphisms) {
        return full_stage(cat, s.objects);
      }
      s.morphisms = resolve_morphisms(cat, *raw.morphisms);
      for (ObjectId x : s.objects) {
        s.morphisms.insert(cat.identity(x));
      }
      return s;
    }

    Zigzag concat(std::vector<Zigzag const*> const& parts) {
      std::vector<Step> steps;
      for (Zigzag const* z : parts) {
        steps.insert(steps.end(), z->steps().begin(), z->steps().end());
      }
      return Zigzag::unchecked(parts.front()->source(), parts.back()->target(),
                               std::move(steps));
    }

    std::string object_label(FinCat const& cat, ObjectId x) {
      return cat.object_name(x);
    }

  }  // namespace

  bool Stage::has_object(ObjectId x) const {
    return std::binary_search(objects.begin(), objects.end(), x);
  }

  Stage whole_stage(FinCat const& cat) {
    Stage s;
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      s.objects.push_back(x);
    }
    s.morphisms = MorphismSet(cat.num_morphisms());
    for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
      s.morphisms.insert(m);
    }
    return s;
  }

  Subcategory stage_category(FinCat const& cat, Stage const& stage) {
    return make_subcategory(cat, stage.objects, stage.morphisms.members());
  }

  Deformation validate_deformation(FinCat const&          cat,
                                   MorphismSet const&     weq,
                                   Stage const&           source,
                                   Stage const&           target,
                                   DeformationData const& data) {
    std::size_t const nobj = cat.num_objects();
    std::size_t const nmor = cat.num_morphisms();
    for (ObjectId x : target.objects) {
      if (!source.has_object(x)) {
        throw ValidationError(fmt::format(
            "deformation target object {} is outside the source", cat.object_name(x)));
      }
    }
    if (!target.morphisms.is_subset_of(source.morphisms)) {
      throw ValidationError("deformation target morphisms are outside the source");
    }
    stage_category(cat, target);

    Deformation d;
    d.direction = data.direction;
    d.source    = source;
    d.target    = target;
    d.on_objects.assign(nobj, kNoObject);
    d.on_morphisms.assign(nmor, kNoMorphism);
    d.theta.assign(nobj, kNoMorphism);
    bool const left = data.direction == Side::left;

    for (ObjectId x : source.objects) {
      std::string const xn = object_label(cat, x);
      ObjectId const rx = x < data.on_objects.size() ? data.on_objects[x] : kNoObject;
      if (rx == kNoObject) {
        throw ValidationError(fmt::format("r is undefined on object {}", xn));
      }
      if (!target.has_object(rx)) {
        throw ValidationError(fmt::format(
            "r({}) = {} is outside the target subcategory", xn, cat.object_name(rx)));
      }
      MorphismId const t = x < data.theta.size() ? data.theta[x] : kNoMorphism;
      if (t == kNoMorphism) {
        throw ValidationError(fmt::format("theta is undefined on object {}", xn));
      }
      if (!weq.contains(t)) {
        throw ValidationError(fmt::format(
            "theta_{} = {}: θ not a weak equivalence", xn, cat.name(t)));
      }
      ObjectId const want_dom = left ? rx : x;
      ObjectId const want_cod = left ? x : rx;
      if (cat.dom(t) != want_dom || cat.cod(t) != want_cod) {
        throw ValidationError(fmt::format(
            "theta_{} = {} must go {} -> {}", xn, cat.name(t),
            cat.object_name(want_dom), cat.object_name(want_cod)));
      }
      if (!source.morphisms.contains(t)) {
        throw ValidationError(fmt::format(
            "theta_{} = {} is outside the source subcategory", xn, cat.name(t)));
      }
      d.on_objects[x] = rx;
      d.theta[x]      = t;
    }

    for (MorphismId f : source.morphisms.members()) {
      std::string const& fn = cat.name(f);
      MorphismId rf = f < data.on_morphisms.size() ? data.on_morphisms[f] : kNoMorphism;
      if (rf == kNoMorphism) {
        if (!cat.is_identity(f)) {
          throw ValidationError(fmt::format("r is undefined on morphism {}", fn));
        }
        rf = cat.identity(d.on_objects[cat.dom(f)]);
      }
      ObjectId const x = cat.dom(f);
      ObjectId const y = cat.cod(f);
      if (!target.morphisms.contains(rf)) {
        throw ValidationError(fmt::format(
            "r({}) = {} is outside the target subcategory", fn, cat.name(rf)));
      }
      if (cat.dom(rf) != d.on_objects[x] || cat.cod(rf) != d.on_objects[y]) {
        throw ValidationError(fmt::format(
            "r({}) = {} must go r({}) -> r({})", fn, cat.name(rf),
            cat.object_name(x), cat.object_name(y)));
      }
      bool const commutes
          = left ? cat.compose(f, d.theta[x]) == cat.compose(d.theta[y], rf)
                 : cat.compose(d.theta[y], f) == cat.compose(rf, d.theta[x]);
      if (!commutes) {
        throw ValidationError(fmt::format("naturality square fails at {}", fn));
      }
      if (weq.contains(rf) != weq.contains(f)) {
        throw ValidationError(fmt::format(
            "r({}) = {} must be a weak equivalence exactly when {} is", fn,
            cat.name(rf), fn));
      }
      d.on_morphisms[f] = rf;
    }

    d.functorial = true;
    for (ObjectId x : source.objects) {
      if (d.on_morphisms[cat.identity(x)] != cat.identity(d.on_objects[x])) {
        d.functorial = false;
      }
    }
    auto const members = source.morphisms.members();
    for (MorphismId f : members) {
      for (MorphismId g : members) {
        if (d.functorial && cat.composable(g, f)
            && d.on_morphisms[cat.compose_unchecked(g, f)]
                   != cat.compose_unchecked(d.on_morphisms[g], d.on_morphisms[f])) {
          d.functorial = false;
        }
      }
    }
    if (data.declared_functorial.value_or(false) && !d.functorial) {
      throw ValidationError("deformation declared functorial but r is not a functor");
    }
    return d;
  }

  Deformation identity_deformation(FinCat const& cat) {
    Deformation d;
    d.direction = Side::left;
    d.source = d.target = whole_stage(cat);
    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      d.on_objects.push_back(x);
      d.theta.push_back(cat.identity(x));
    }
    for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
      d.on_morphisms.push_back(m);
    }
    d.functorial = true;
    return d;
  }

  bool DeformationChain::functorial() const {
    return std::all_of(links.begin(), links.end(),
                       [](Deformation const& d) { return d.functorial; });
  }

  DeformationChain compose_chain(FinCat const&            cat,
                                 MorphismSet const&       weq,
                                 std::vector<Deformation> links) {
    DeformationChain chain;
    Stage            at = whole_stage(cat);
    for (std::size_t k = 0; k < links.size(); ++k) {
      if (!same_stage(links[k].source, at)) {
        throw ValidationError(fmt::format(
            "deformation link {} does not start where the previous one ends", k + 1));
      }
      at = links[k].target;
    }
    chain.links  = std::move(links);
    chain.target = at;

    for (ObjectId x = 0; x < cat.num_objects(); ++x) {
      ObjectId          rx = x;
      std::vector<Step> steps;
      for (Deformation const& d : chain.links) {
        steps.push_back({d.theta[rx], d.direction == Side::left ? Direction::forward
                                                                : Direction::backward});
        rx = d.on_objects[rx];
      }
      std::reverse(steps.begin(), steps.end());
      chain.on_objects.push_back(rx);
      chain.theta.emplace_back(cat, weq, rx, x, std::move(steps));
    }
    for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
      MorphismId rf = f;
      for (Deformation const& d : chain.links) {
        rf = d.on_morphisms[rf];
      }
      chain.on_morphisms.push_back(rf);
    }
    return chain;
  }

  DeformationChain load_chain(FinCat const&      cat,
                              MorphismSet const& weq,
                              RawCategory const& raw) {
    std::vector<Deformation> links;
    Stage                    source = whole_stage(cat);
    auto object = [&](std::string const& n) {
      auto x = cat.find_object(n);
      if (!x) {
        throw ParseError(fmt::format("deformation: unknown object \"{}\"", n));
      }
      return *x;
    };
    auto morphism = [&](std::string const& n) {
      auto m = cat.find_morphism(n);
      if (!m) {
        throw ParseError(fmt::format("deformation: unknown morphism \"{}\"", n));
      }
      return *m;
    };

    for (std::size_t k = 0; k < raw.deformation.size(); ++k) {
      RawDeformationLink const& link = raw.deformation[k];
      DeformationData           data;
      data.direction = link.direction == "right" ? Side::right : Side::left;
      data.on_objects.assign(cat.num_objects(), kNoObject);
      data.on_morphisms.assign(cat.num_morphisms(), kNoMorphism);
      data.theta.assign(cat.num_objects(), kNoMorphism);
      data.declared_functorial = link.functorial;
      std::vector<ObjectId> image;
      for (auto const& [x, rx] : link.on_objects) {
        data.on_objects[object(x)] = object(rx);
        if (source.has_object(object(x))) {
          image.push_back(object(rx));
        }
      }
      for (auto const& [f, rf] : link.on_morphisms) {
        data.on_morphisms[morphism(f)] = morphism(rf);
      }
      for (auto const& [x, t] : link.theta) {
        data.theta[object(x)] = morphism(t);
      }

      Stage target;
      if (link.target) {
        target = resolve_stage(cat, *link.target);
      } else if (k + 1 == raw.deformation.size() && raw.subcategory) {
        target = resolve_stage(cat, *raw.subcategory);
      } else {
        target = full_stage(cat, image);
      }
      links.push_back(validate_deformation(cat, weq, source, target, data));
      source = links.back().target;
    }
    return compose_chain(cat, weq, std::move(links));
  }

  Zigzag map_zigzag(FinCat const&      cat,
                    MorphismSet const& weq,
                    Deformation const& d,
                    Zigzag const&      p) {
    auto image = [&](ObjectId x) {
      if (x >= d.on_objects.size() || d.on_objects[x] == kNoObject) {
        throw PreconditionError(fmt::format(
            "zigzag leaves the deformation source at {}", cat.object_name(x)));
      }
      return d.on_objects[x];
    };
    std::vector<Step> steps;
    for (Step const& s : p.steps()) {
      MorphismId const rf = d.on_morphisms.at(s.morphism);
      if (rf == kNoMorphism) {
        throw PreconditionError(fmt::format(
            "zigzag leaves the deformation source at {}", cat.name(s.morphism)));
      }
      steps.push_back({rf, s.direction});
    }
    return Zigzag(cat, weq, image(p.source()), image(p.target()), std::move(steps));
  }

  Zigzag map_zigzag(FinCat const&           cat,
                    MorphismSet const&      weq,
                    DeformationChain const& chain,
                    Zigzag const&           p) {
    Zigzag z = p;
    for (Deformation const& d : chain.links) {
      z = map_zigzag(cat, weq, d, z);
    }
    return z;
  }

  Zigzag reversed(Zigzag const& z) {
    std::vector<Step> steps(z.steps().rbegin(), z.steps().rend());
    for (Step& s : steps) {
      s.direction = s.direction == Direction::forward ? Direction::backward
                                                      : Direction::forward;
    }
    return Zigzag::unchecked(z.target(), z.source(), std::move(steps));
  }

  HoCr build_ho_cr(FinCat const&               cat,
                   MorphismSet const&          weq,
                   DeformationChain const&     chain,
                   WhiteheadCertificate const& cert0) {
    for (std::size_t k = 0; k < chain.links.size(); ++k) {
      if (!chain.links[k].functorial) {
        throw PreconditionError(fmt::format(
            "Ho(C, r) requires a functorial chain; link {} is only pointwise",
            k + 1));
      }
    }
    HoCr out;
    out.c0     = stage_category(cat, chain.target);
    out.c0_weq = restrict_to(out.c0, weq);
    if (cert0.congruence.universe() != out.c0.cat.num_morphisms()) {
      throw PreconditionError("certificate does not belong to the target subcategory");
    }
    out.c0_congruence = cert0.congruence;
    FinCat const&     c0 = out.c0.cat;
    Congruence const& L  = out.c0_congruence;

    std::vector<ObjectId>   obj_in_c0(cat.num_objects(), kNoObject);
    std::vector<MorphismId> mor_in_c0(cat.num_morphisms(), kNoMorphism);
    for (ObjectId i = 0; i < out.c0.objects.size(); ++i) {
      obj_in_c0[out.c0.objects[i]] = i;
    }
    for (MorphismId i = 0; i < out.c0.morphisms.size(); ++i) {
      mor_in_c0[out.c0.morphisms[i]] = i;
    }
    auto r_obj = [&](ObjectId x) { return obj_in_c0[chain.on_objects[x]]; };

    std::size_t const nobj = cat.num_objects();
    std::vector<MorphismInfo>                                             infos;
    std::vector<MorphismId>                                               identities(nobj);
    std::map<std::tuple<ObjectId, ObjectId, std::size_t>, MorphismId> index;
    for (ObjectId x = 0; x < nobj; ++x) {
      for (ObjectId y = 0; y < nobj; ++y) {
        MorphismId const rid = c0.identity(r_obj(x));
        for (MorphismId m : c0.hom(r_obj(x), r_obj(y))) {
          std::size_t const c = L.class_of(m);
          if (index.contains({x, y, c})) {
            continue;
          }
          auto const id = static_cast<MorphismId>(infos.size());
          index.emplace(std::tuple{x, y, c}, id);
          out.representative.push_back(L.classes()[c].front());
          bool const is_id = x == y && L.related(m, rid);
          if (is_id) {
            identities[x] = id;
          }
          infos.push_back(
              {is_id ? identity_name(cat.object_name(x))
                     : fmt::format("[{}]:{}->{}", c0.name(L.classes()[c].front()),
                                   cat.object_name(x), cat.object_name(y)),
               x, y});
        }
      }
    }

    std::size_t const       n = infos.size();
    std::vector<MorphismId> table(n * n, kNoMorphism);
    for (MorphismId g = 0; g < n; ++g) {
      for (MorphismId f = 0; f < n; ++f) {
        if (infos[f].cod != infos[g].dom) {
          continue;
        }
        auto const& fs = L.classes()[L.class_of(out.representative[f])];
        auto const& gs = L.classes()[L.class_of(out.representative[g])];
        std::size_t const c = L.class_of(
            c0.compose_unchecked(out.representative[g], out.representative[f]));
        for (MorphismId a : fs) {
          for (MorphismId b : gs) {
            if (L.class_of(c0.compose_unchecked(b, a)) != c) {
              throw InternalError(fmt::format(
                  "composition in Ho(C, r) depends on representatives: {}∘{}",
                  c0.name(b), c0.name(a)));
            }
          }
        }
        table[g * n + f] = index.at({infos[f].dom, infos[g].cod, c});
      }
    }

    std::vector<std::string> objects = cat.objects();
    out.category = FinCat::from_table(std::move(objects), std::move(infos),
                                      std::move(identities), std::move(table));
    for (ObjectId x = 0; x < nobj; ++x) {
      out.gamma_r.on_objects.push_back(x);
    }
    for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
      MorphismId const rf = mor_in_c0[chain.on_morphisms[f]];
      out.gamma_r.on_morphisms.push_back(
          index.at({cat.dom(f), cat.cod(f), L.class_of(rf)}));
    }
    return out;
  }

  InversionCheck check_inverts_w(HoCr const& hocr, MorphismSet const& weq) {
    FinCat const& h = hocr.category;
    for (MorphismId w : weq.members()) {
      MorphismId const m      = hocr.gamma_r.on_morphisms.at(w);
      bool             inverse = false;
      for (MorphismId g : h.hom(h.cod(m), h.dom(m))) {
        if (h.is_identity(h.compose_unchecked(g, m))
            && h.is_identity(h.compose_unchecked(m, g))) {
          inverse = true;
          break;
        }
      }
      if (!inverse) {
        return {false, w};
      }
    }
    return {};
  }

  namespace {

    ConjugationReport certified_conjugation(FinCat const&               cat,
                                            DeformationChain const&     chain,
                                            HoCr const&                 hocr,
                                            WhiteheadCertificate const& cert) {
      ConjugationReport out;
      out.certified_route = true;
      QuotientResult const q  = quotient(cat, cert.congruence);
      FinCat const&        Q  = q.quotient;
      FinCat const&        H  = hocr.category;
      auto fail = [&](std::string why) {
        out.failure = std::move(why);
        out.holds   = false;
        return out;
      };

      CatFunctor phi;
      CatFunctor psi;
      for (ObjectId x = 0; x < cat.num_objects(); ++x) {
        phi.on_objects.push_back(x);
        psi.on_objects.push_back(x);
      }
      phi.on_morphisms.assign(Q.num_morphisms(), kNoMorphism);
      for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
        MorphismId const c     = q.projection.on_morphisms[f];
        MorphismId const image = hocr.gamma_r.on_morphisms[f];
        if (phi.on_morphisms[c] == kNoMorphism) {
          phi.on_morphisms[c] = image;
        } else if (phi.on_morphisms[c] != image) {
          return fail(fmt::format("φ is not well defined on the class of {}",
                                  cat.name(f)));
        }
      }

      auto eval = [&](Zigzag const& z) {
        MorphismId acc = Q.identity(z.source());
        for (Step const& s : z.steps()) {
          MorphismId m = s.morphism;
          if (s.direction == Direction::backward) {
            m = cert.inverse_table.at(m);
          }
          acc = Q.compose(q.projection.on_morphisms[m], acc);
        }
        return acc;
      };
      for (MorphismId h = 0; h < H.num_morphisms(); ++h) {
        ObjectId const   x   = H.dom(h);
        ObjectId const   y   = H.cod(h);
        MorphismId const rep = hocr.c0.morphisms[hocr.representative[h]];
        Zigzag const     mid = Zigzag::of(cat, rep);
        Zigzag const     back = reversed(chain.theta[x]);
        psi.on_morphisms.push_back(eval(concat({&back, &mid, &chain.theta[y]})));
      }

      if (auto why = check_functor(Q, H, phi)) {
        return fail("φ is not a functor: " + *why);
      }
      if (auto why = check_functor(H, Q, psi)) {
        return fail("ψ is not a functor: " + *why);
      }
      for (MorphismId c = 0; c < Q.num_morphisms(); ++c) {
        if (psi.on_morphisms[phi.on_morphisms[c]] != c) {
          return fail(fmt::format("ψφ differs from the identity at {}", Q.name(c)));
        }
      }
      for (MorphismId h = 0; h < H.num_morphisms(); ++h) {
        if (phi.on_morphisms[psi.on_morphisms[h]] != h) {
          return fail(fmt::format("φψ differs from the identity at {}", H.name(h)));
        }
      }
      out.holds = true;
      out.phi   = std::move(phi);
      out.psi   = std::move(psi);
      return out;
    }

  }  // namespace

  ConjugationReport check_conjugation(FinCat const&               cat,
                                      MorphismSet const&          weq,
                                      DeformationChain const&     chain,
                                      HoCr const&                 hocr,
                                      WhiteheadCertificate const* cert,
                                      std::size_t                 budget) {
    if (cert != nullptr) {
      return certified_conjugation(cat, chain, hocr, *cert);
    }
    ConjugationReport out;
    out.holds = true;
    auto run  = [&](MorphismId f, Direction dir, Zigzag const& lhs, Zigzag const& rhs) {
      LemmaInstance inst{f, dir, LemmaOutcome::unknown,
                         bounded_equiv(cat, weq, lhs, rhs, budget)};
      if (inst.search.equivalent) {
        inst.outcome = LemmaOutcome::equivalent;
      } else {
        out.holds = false;
      }
      out.instances.push_back(std::move(inst));
    };
    for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
      ObjectId const x  = cat.dom(f);
      ObjectId const y  = cat.cod(f);
      MorphismId const rf = chain.on_morphisms[f];
      Zigzag const fwd = Zigzag::of(cat, rf);
      Zigzag const bx  = reversed(chain.theta[x]);
      run(f, Direction::forward, Zigzag::of(cat, f),
          concat({&bx, &fwd, &chain.theta[y]}));
      if (weq.contains(f)) {
        Zigzag const by = reversed(chain.theta[y]);
        Zigzag const bwd
            = Zigzag::unchecked(cat.cod(rf), cat.dom(rf), {{rf, Direction::backward}});
        run(f, Direction::backward,
            Zigzag::unchecked(y, x, {{f, Direction::backward}}),
            concat({&by, &bwd, &chain.theta[x]}));
      }
    }
    return out;
  }

}  // namespace hocat
