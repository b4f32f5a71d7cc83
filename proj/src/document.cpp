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

#include "hocat/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "hocat/errors.hpp"

namespace hocat {

  using nlohmann::json;

  namespace {

    json const& field(json const& obj, char const* key, std::string_view ctx) {
      if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(fmt::format("{}: missing field \"{}\"", ctx, key));
      }
      return obj.at(key);
    }

    std::string as_string(json const& j, std::string_view ctx) {
      if (!j.is_string()) {
        throw ParseError(fmt::format("{}: expected a string", ctx));
      }
      return j.get<std::string>();
    }

    std::vector<std::string> as_string_list(json const& j, std::string_view ctx) {
      if (!j.is_array()) {
        throw ParseError(fmt::format("{}: expected a list of strings", ctx));
      }
      std::vector<std::string> out;
      for (auto const& item : j) {
        out.push_back(as_string(item, ctx));
      }
      return out;
    }

    std::map<std::string, std::string> as_string_map(json const&      j,
                                                     std::string_view ctx) {
      if (!j.is_object()) {
        throw ParseError(fmt::format("{}: expected an object of strings", ctx));
      }
      std::map<std::string, std::string> out;
      for (auto const& [k, v] : j.items()) {
        out.emplace(k, as_string(v, ctx));
      }
      return out;
    }

    RawSubcategory parse_subcategory(json const& j, std::string_view ctx) {
      RawSubcategory sub;
      sub.objects = as_string_list(field(j, "objects", ctx), ctx);
      if (j.contains("morphisms")) {
        sub.morphisms = as_string_list(j.at("morphisms"), ctx);
      }
      return sub;
    }

    RawDeformationLink parse_link(json const& j) {
      constexpr std::string_view ctx = "deformation";
      RawDeformationLink         link;
      link.direction = as_string(field(j, "direction", ctx), ctx);
      if (link.direction != "left" && link.direction != "right") {
        throw ParseError(fmt::format(
            "deformation: direction must be \"left\" or \"right\", got \"{}\"",
            link.direction));
      }
      link.on_objects = as_string_map(field(j, "on_objects", ctx), ctx);
      if (j.contains("on_morphisms")) {
        link.on_morphisms = as_string_map(j.at("on_morphisms"), ctx);
      }
      link.theta = as_string_map(field(j, "theta", ctx), ctx);
      if (j.contains("functorial")) {
        if (!j.at("functorial").is_boolean()) {
          throw ParseError("deformation: functorial must be a boolean");
        }
        link.functorial = j.at("functorial").get<bool>();
      }
      if (j.contains("target")) {
        link.target = parse_subcategory(j.at("target"), "deformation target");
      }
      return link;
    }

    void check_names(std::set<std::string> const&  known,
                     std::span<std::string const>  names,
                     std::string_view              what,
                     std::string_view              ctx) {
      for (auto const& nm : names) {
        if (!known.contains(nm)) {
          throw ParseError(
              fmt::format("{}: reference to undeclared {} \"{}\"", ctx, what, nm));
        }
      }
    }

    void check_subcategory(RawSubcategory const&        sub,
                           std::set<std::string> const& objs,
                           std::set<std::string> const& mors,
                           std::string_view             ctx) {
      check_names(objs, sub.objects, "object", ctx);
      if (sub.morphisms) {
        check_names(mors, *sub.morphisms, "morphism", ctx);
      }
    }

  }  // namespace

  RawCategory load_spec(json const& doc) {
    if (!doc.is_object()) {
      throw ParseError("document must be an object");
    }
    RawCategory raw;
    raw.objects = as_string_list(field(doc, "objects", "document"), "objects");

    std::set<std::string> objs;
    for (auto const& x : raw.objects) {
      if (!objs.insert(x).second) {
        throw ParseError(fmt::format("duplicate object \"{}\"", x));
      }
    }

    std::vector<RawMorphism> declared;
    if (doc.contains("morphisms")) {
      json const& ms = doc.at("morphisms");
      if (!ms.is_array()) {
        throw ParseError("morphisms: expected a list");
      }
      for (auto const& m : ms) {
        declared.push_back({as_string(field(m, "name", "morphism"), "morphism name"),
                            as_string(field(m, "dom", "morphism"), "morphism dom"),
                            as_string(field(m, "cod", "morphism"), "morphism cod")});
      }
    }

    std::set<std::string> mors;
    for (auto const& x : raw.objects) {
      raw.morphisms.push_back({identity_name(x), x, x});
      mors.insert(identity_name(x));
    }
    std::set<std::string> seen;
    for (auto const& m : declared) {
      if (!seen.insert(m.name).second) {
        throw ParseError(fmt::format("duplicate morphism \"{}\"", m.name));
      }
      if (!objs.contains(m.dom) || !objs.contains(m.cod)) {
        throw ParseError(fmt::format(
            "morphism \"{}\": reference to undeclared object \"{}\"",
            m.name,
            objs.contains(m.dom) ? m.cod : m.dom));
      }
      if (m.name.starts_with(kIdentityPrefix)) {
        // A declared identity must be exactly the reserved one.
        std::string const obj = m.name.substr(kIdentityPrefix.size());
        if (!objs.contains(obj) || m.dom != obj || m.cod != obj) {
          throw ParseError(fmt::format(
              "morphism \"{}\" uses the reserved identity prefix", m.name));
        }
        continue;
      }
      raw.morphisms.push_back(m);
      mors.insert(m.name);
    }

    if (doc.contains("composition")) {
      json const& cs = doc.at("composition");
      if (!cs.is_array()) {
        throw ParseError("composition: expected a list");
      }
      std::set<std::pair<std::string, std::string>> keys;
      for (auto const& c : cs) {
        RawComposite e{as_string(field(c, "after", "composition"), "after"),
                       as_string(field(c, "before", "composition"), "before"),
                       as_string(field(c, "equals", "composition"), "equals")};
        std::vector<std::string> const refs{e.after, e.before, e.equals};
        check_names(mors, refs, "morphism", "composition");
        if (!keys.insert({e.after, e.before}).second) {
          throw ParseError(fmt::format(
              "composition: duplicate entry for {} after {}", e.after, e.before));
        }
        raw.composition.push_back(std::move(e));
      }
    }

    if (doc.contains("weak_equivalences")) {
      raw.weak_equivalences
          = as_string_list(doc.at("weak_equivalences"), "weak_equivalences");
      check_names(mors, raw.weak_equivalences, "morphism", "weak_equivalences");
    }

    if (doc.contains("subcategory")) {
      raw.subcategory = parse_subcategory(doc.at("subcategory"), "subcategory");
      check_subcategory(*raw.subcategory, objs, mors, "subcategory");
    }

    if (doc.contains("deformation")) {
      json const& d = doc.at("deformation");
      if (d.is_array()) {
        for (auto const& link : d) {
          raw.deformation.push_back(parse_link(link));
        }
      } else {
        raw.deformation.push_back(parse_link(d));
      }
      for (auto const& link : raw.deformation) {
        for (auto const& [k, v] : link.on_objects) {
          check_names(objs, std::vector{k, v}, "object", "deformation on_objects");
        }
        for (auto const& [k, v] : link.on_morphisms) {
          check_names(
              mors, std::vector{k, v}, "morphism", "deformation on_morphisms");
        }
        for (auto const& [k, v] : link.theta) {
          check_names(objs, std::vector{k}, "object", "deformation theta");
          check_names(mors, std::vector{v}, "morphism", "deformation theta");
        }
        if (link.target) {
          check_subcategory(*link.target, objs, mors, "deformation target");
        }
      }
    }
    return raw;
  }

  RawCategory load_spec_text(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(fmt::format("malformed document: {}", e.what()));
    }
    return load_spec(doc);
  }

  RawCategory load_spec_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(fmt::format("cannot read {}", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec_text(buf.str());
  }

  FinCat validate_category(RawCategory const& raw) {
    std::map<std::string, ObjectId> obj_ids;
    for (ObjectId x = 0; x < raw.objects.size(); ++x) {
      obj_ids.emplace(raw.objects[x], x);
    }
    std::map<std::string, MorphismId> mor_ids;
    std::vector<MorphismInfo>         infos;
    for (auto const& m : raw.morphisms) {
      auto d = obj_ids.find(m.dom);
      auto c = obj_ids.find(m.cod);
      if (d == obj_ids.end() || c == obj_ids.end()) {
        throw ValidationError(
            fmt::format("morphism {} has an undeclared endpoint", m.name));
      }
      if (!mor_ids.emplace(m.name, static_cast<MorphismId>(infos.size())).second) {
        throw ValidationError(fmt::format("duplicate morphism {}", m.name));
      }
      infos.push_back({m.name, d->second, c->second});
    }
    std::vector<MorphismId> ids;
    for (auto const& x : raw.objects) {
      auto it = mor_ids.find(identity_name(x));
      if (it == mor_ids.end()) {
        throw ValidationError(fmt::format("object {} has no identity", x));
      }
      ids.push_back(it->second);
    }

    std::size_t const       n = infos.size();
    std::vector<MorphismId> table(n * n, kNoMorphism);
    auto                    lookup = [&](std::string const& nm) {
      auto it = mor_ids.find(nm);
      if (it == mor_ids.end()) {
        throw ValidationError(fmt::format("undeclared morphism {}", nm));
      }
      return it->second;
    };
    for (auto const& e : raw.composition) {
      MorphismId const g  = lookup(e.after);
      MorphismId const f  = lookup(e.before);
      MorphismId const gf = lookup(e.equals);
      if (infos[f].cod != infos[g].dom) {
        throw ValidationError(fmt::format(
            "composition entry {} after {}: not composable", e.after, e.before));
      }
      if (infos[gf].dom != infos[f].dom || infos[gf].cod != infos[g].cod) {
        throw ValidationError(fmt::format(
            "composition entry {} after {} = {}: wrong endpoints",
            e.after,
            e.before,
            e.equals));
      }
      table[g * n + f] = gf;
    }
    // Identity laws fill in (or must agree with) the identity composites.
    for (MorphismId f = 0; f < n; ++f) {
      MorphismId const src = ids[infos[f].dom];
      MorphismId const tgt = ids[infos[f].cod];
      for (std::size_t slot : {f * n + src, tgt * n + f}) {
        if (table[slot] == kNoMorphism) {
          table[slot] = f;
        } else if (table[slot] != f) {
          throw ValidationError(
              fmt::format("identity law fails for {}", infos[f].name));
        }
      }
    }
    return FinCat::from_table(
        raw.objects, std::move(infos), std::move(ids), std::move(table));
  }

  MorphismSet resolve_morphisms(FinCat const&                cat,
                                std::span<std::string const> names) {
    MorphismSet out(cat.num_morphisms());
    for (auto const& nm : names) {
      auto m = cat.find_morphism(nm);
      if (!m) {
        throw ParseError(fmt::format("unknown morphism \"{}\"", nm));
      }
      out.insert(*m);
    }
    return out;
  }

  std::vector<ObjectId> resolve_objects(FinCat const&                cat,
                                        std::span<std::string const> names) {
    std::vector<ObjectId> out;
    for (auto const& nm : names) {
      auto x = cat.find_object(nm);
      if (!x) {
        throw ParseError(fmt::format("unknown object \"{}\"", nm));
      }
      out.push_back(*x);
    }
    return out;
  }

  json to_document(FinCat const& cat, MorphismSet const* weq) {
    json doc;
    doc["objects"] = cat.objects();
    json ms        = json::array();
    for (MorphismId m = 0; m < cat.num_morphisms(); ++m) {
      if (cat.is_identity(m)) {
        continue;
      }
      ms.push_back({{"name", cat.name(m)},
                    {"dom", cat.object_name(cat.dom(m))},
                    {"cod", cat.object_name(cat.cod(m))}});
    }
    doc["morphisms"] = std::move(ms);
    json comp        = json::array();
    for (MorphismId g = 0; g < cat.num_morphisms(); ++g) {
      for (MorphismId f = 0; f < cat.num_morphisms(); ++f) {
        if (!cat.composable(g, f) || cat.is_identity(g) || cat.is_identity(f)) {
          continue;
        }
        comp.push_back({{"after", cat.name(g)},
                        {"before", cat.name(f)},
                        {"equals", cat.name(cat.compose_unchecked(g, f))}});
      }
    }
    doc["composition"] = std::move(comp);
    if (weq != nullptr) {
      json ws = json::array();
      for (MorphismId m : weq->members()) {
        if (!cat.is_identity(m)) {
          ws.push_back(cat.name(m));
        }
      }
      doc["weak_equivalences"] = std::move(ws);
    }
    return doc;
  }

}  // namespace hocat
