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

#include "hocat/cli.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "hocat/errors.hpp"
#include "hocat/report.hpp"
#include "hocat/zigzag.hpp"

namespace hocat {

  namespace {

    std::set<std::string> split_list(std::string const& text) {
      std::set<std::string> out;
      std::stringstream     in(text);
      std::string           item;
      while (std::getline(in, item, ',')) {
        if (!item.empty()) {
          out.insert(item);
        }
      }
      return out;
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError(fmt::format("cannot read {}", path));
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    ReportFormat parse_format(std::string const& f) {
      return f == "json" ? ReportFormat::json : ReportFormat::text;
    }

    int cmd_quotient(std::string const& file, std::ostream& out) {
      RawCategory const raw    = load_spec_file(file);
      FinCat const      cat    = validate_category(raw);
      WeqFamily const   family = check_weq_axioms(cat, resolve_morphisms(cat, raw.weak_equivalences));
      nlohmann::json    doc;
      if (!family.report.category_with_weak_equivalences()) {
        doc["certified"] = false;
        doc["error"]     = "two-out-of-three fails";
        out << doc.dump(2) << "\n";
        return kExitOk;
      }
      WhiteheadVerdict const v = certify_whitehead(cat, family);
      QuotientResult const   q = quotient(cat, v.congruence);
      MorphismSet            image(q.quotient.num_morphisms());
      for (MorphismId w : family.members.members()) {
        image.insert(q.projection.on_morphisms[w]);
      }
      doc["certified"] = v.status == WhiteheadStatus::certified;
      doc["whitehead"] = to_string(v.status);
      doc["category"]  = to_document(q.quotient, &image);
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    int cmd_zigzag(std::string const&              file,
                   std::string const&              from,
                   std::string const&              to,
                   std::vector<std::string> const& equiv,
                   std::size_t                     budget,
                   std::ostream&                   out) {
      RawCategory const raw    = load_spec_file(file);
      FinCat const      cat    = validate_category(raw);
      WeqFamily const   family = check_weq_axioms(cat, resolve_morphisms(cat, raw.weak_equivalences));
      require_weak_equivalences(family);
      MorphismSet const& weq = family.members;
      auto object = [&](std::string const& n) {
        auto x = cat.find_object(n);
        if (!x) {
          throw ParseError(fmt::format("unknown object \"{}\"", n));
        }
        return *x;
      };
      ObjectId const x = object(from);
      ObjectId const y = object(to);

      if (equiv.empty()) {
        if (auto z = find_zigzag(cat, weq, x, y)) {
          out << "zigzag: " << format_zigzag(cat, *z) << "\n";
        } else {
          out << "no zigzag from " << from << " to " << to << "\n";
        }
        WhiteheadVerdict const v = certify_whitehead(cat, family);
        if (v.certificate) {
          auto const classes = ho_hom(cat, *v.certificate, x, y);
          out << fmt::format("Ho(C)({}, {}) has {} element(s)\n", from, to, classes.size());
          for (auto const& cls : classes) {
            std::string line;
            for (MorphismId m : cls) {
              line += (line.empty() ? "" : ", ") + cat.name(m);
            }
            out << "  {" << line << "}\n";
          }
        } else {
          out << "Ho(C) is not certified as a quotient (" << to_string(v.status) << ")\n";
        }
        return kExitOk;
      }

      Zigzag const z1 = parse_zigzag(cat, weq, x, y, read_file(equiv[0]));
      Zigzag const z2 = parse_zigzag(cat, weq, x, y, read_file(equiv[1]));
      EquivalenceResult const r = bounded_equiv(cat, weq, z1, z2, budget);
      if (r.equivalent) {
        out << fmt::format("equivalent ({} moves, {} zigzags explored)\n",
                           r.trace.moves.size(), r.explored);
        Zigzag z = z1;
        out << "  0. " << format_zigzag(cat, z) << "\n";
        for (std::size_t k = 0; k < r.trace.moves.size(); ++k) {
          z = apply_move(cat, weq, z, r.trace.moves[k]);
          out << fmt::format("  {}. {}  =>  {}\n", k + 1,
                             format_move(cat, r.trace.moves[k]), format_zigzag(cat, z));
        }
      } else {
        out << fmt::format("unknown within {} moves ({} zigzags explored)\n", budget,
                           r.explored);
      }
      return kExitOk;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homotopy categories of finite categories with weak equivalences", "hocat"};
    app.require_subcommand(1);

    std::string file;
    std::size_t budget = default_budget();
    std::string format = "text";
    std::string stages;

    auto* analyze = app.add_subcommand("analyze", "Run the full analysis pipeline");
    analyze->add_option("file", file, "Category description")->required();
    analyze->add_option("--budget", budget, "Zigzag move budget");
    analyze->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--stages", stages, "Comma separated stages to run");

    auto* quot = app.add_subcommand("quotient", "Print the homotopy quotient category");
    quot->add_option("file", file, "Category description")->required();

    std::string              from;
    std::string              to;
    std::vector<std::string> equiv;
    auto* zz = app.add_subcommand("zigzag", "Find or compare zigzags");
    zz->add_option("file", file, "Category description")->required();
    zz->add_option("--from", from, "Source object")->required();
    zz->add_option("--to", to, "Target object")->required();
    zz->add_option("--equiv", equiv, "Two zigzag files to compare")->expected(2);
    zz->add_option("--budget", budget, "Zigzag move budget");

    auto* deform = app.add_subcommand("deform", "Analyse the deformation chain");
    deform->add_option("file", file, "Category description")->required();
    deform->add_option("--budget", budget, "Zigzag move budget");
    deform->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kExitParse;
    }

    try {
      if (analyze->parsed()) {
        AnalysisOptions opts{budget, split_list(stages)};
        out << render_report(run_analysis(file, opts), parse_format(format));
      } else if (quot->parsed()) {
        return cmd_quotient(file, out);
      } else if (zz->parsed()) {
        return cmd_zigzag(file, from, to, equiv, budget, out);
      } else if (deform->parsed()) {
        AnalysisOptions opts{budget, {"whitehead", "deformation"}};
        AnalysisReport const r = run_analysis(file, opts);
        if (!r.deformation) {
          err << "hocat: " << file << " has no deformation data\n";
          return kExitValidation;
        }
        out << render_report(r, parse_format(format));
      }
    } catch (ParseError const& e) {
      err << "hocat: " << e.what() << "\n";
      return kExitParse;
    } catch (PreconditionError const& e) {
      err << "hocat: " << e.what() << "\n";
      return kExitParse;
    } catch (ValidationError const& e) {
      err << "hocat: " << e.what() << "\n";
      return kExitValidation;
    }
    return kExitOk;
  }

}  // namespace hocat
