// Command-line front end: scenario verification, ad-hoc Groebner bases,
// corpus listing and entity inspection.

#include <CLI11.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "m21/chow.hpp"
#include "m21/error.hpp"
#include "m21/parallel.hpp"
#include "m21/parse.hpp"
#include "m21/scenario.hpp"
#include "m21/version.hpp"

namespace fs = std::filesystem;
using namespace m21;

namespace {

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout));
}

int cmd_verify(const std::string& file, const std::string& filter, const std::string& report_path,
               const std::string& format) {
  suite::Scenario s = suite::load_scenario(file);
  suite::Report rep = suite::run_checks(s, filter);
  if (format == "json") {
    std::cout << suite::report_json(rep).dump(2) << "\n";
  } else {
    std::cout << suite::report_text(rep, use_color());
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) fail(Errc::Usage, "cannot write report to '" + report_path + "'");
    out << suite::report_json(rep).dump(2) << "\n";
  }
  return rep.failed == 0 ? 0 : 1;
}

int cmd_gb(const std::string& ring_spec, const std::string& ideal_text,
           const std::string& order_spec, uint64_t budget) {
  Ring ring = parse_ring(ring_spec);
  std::vector<Polynomial> gens;
  std::string cur;
  std::istringstream in(ideal_text);
  while (std::getline(in, cur, ';')) {
    if (cur.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    gens.push_back(parse_poly(cur, ring));
  }
  MonomialOrder order = MonomialOrder::wdegrevlex();
  if (order_spec.rfind("elim:", 0) == 0) {
    std::string k = order_spec.substr(5);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::Usage, "elim:k needs a nonnegative integer, got '" + k + "'");
    order = MonomialOrder::elimination(std::stoul(k));
  } else if (order_spec != "grevlex") {
    fail(Errc::Usage, "unknown order '" + order_spec + "' (grevlex or elim:k)");
  }
  GroebnerOptions opts;
  opts.step_budget = budget;
  GroebnerBasis G = groebner_basis(IdealPresentation::make(ring, std::move(gens)), order, opts);
  std::cout << "ring " << ring->str() << ", order " << order.str() << ", "
            << (G.strength == BasisStrength::StrongZ ? "strong basis over Z"
                                                     : "reduced basis over Q")
            << " (" << G.basis.size() << " elements)\n";
  for (const auto& b : G.basis) std::cout << b.str() << "\n";
  return 0;
}

int cmd_list(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".scn") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      suite::Scenario s = suite::load_scenario(f.string());
      std::cout << f.filename().string() << "  " << s.id;
      if (!s.datasets.empty()) {
        std::cout << "  [";
        for (size_t i = 0; i < s.datasets.size(); ++i)
          std::cout << (i ? " " : "") << s.datasets[i];
        std::cout << "]";
      }
      std::cout << "  rings:" << s.rings.size() << " maps:" << s.maps.size()
                << " checks:" << s.checks.size();
      if (!s.description.empty()) std::cout << "  -- " << s.description;
      std::cout << "\n";
    } catch (const Error& e) {
      std::cout << f.filename().string() << "  (unreadable: " << e.what() << ")\n";
    }
  }
  return 0;
}

int cmd_show(const std::string& file, const std::string& name) {
  suite::Scenario s = suite::load_scenario(file);
  if (const auto* r = s.find_ring(name)) {
    std::cout << "ring " << r->name << " = " << r->ring->str() << "\n";
    if (r->relations.generators.empty()) {
      std::cout << "  (no relations)\n";
    } else {
      std::cout << "  relations:\n";
      for (const auto& g : r->relations.generators) std::cout << "    " << g.str() << "\n";
    }
    for (const auto& [v, doc] : r->generator_docs)
      std::cout << "  " << v << ": " << doc << "\n";
    return 0;
  }
  if (const auto* m = s.find_map(name)) {
    std::cout << "map " << name << ": " << m->map.source->str() << " -> " << m->map.target.name
              << "\n";
    for (size_t i = 0; i < m->map.images.size(); ++i)
      std::cout << "  " << m->map.source->var_name(i) << " -> " << m->map.images[i].str() << "\n";
    return 0;
  }
  if (const auto* c = s.find_class(name)) {
    std::cout << "class " << name << " in " << c->ring_name << ":\n  " << c->value.str() << "\n";
    return 0;
  }
  if (const auto* o = s.find_operator(name)) {
    if (const auto* sp = std::get_if<chow::SurjectivePullback>(&o->op)) {
      std::cout << "operator " << name << ": surjective-pullback pushforward into "
                << sp->into.name << ", unit image " << sp->unit_image.str() << "\n";
    } else {
      const auto& qt = std::get<chow::QuadraticTransfer>(o->op);
      std::cout << "operator " << name << ": quadratic transfer into " << qt.into.name
                << ", push(1) = " << qt.push_unit.str() << ", push(tau) = " << qt.push_tau.str()
                << "\n";
    }
    return 0;
  }
  fail(Errc::UnresolvedName, "no entity named '" + name + "' in " + file);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded-ring calculus and verification scenario runner"};
  app.set_version_flag("--version", M21_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "worker cap for parallel kernels (1 = serial)");

  auto* verify = app.add_subcommand("verify", "run a scenario's checks");
  std::string vfile, vfilter = "*", vreport, vformat = "text";
  uint64_t vbudget = 0;
  verify->add_option("file", vfile, "scenario file")->required();
  verify->add_option("--check", vfilter, "glob filter on check names");
  verify->add_option("--report", vreport, "write the JSON report here");
  verify->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--budget", vbudget, "reduction step budget for all checks");

  auto* gb = app.add_subcommand("gb", "strong/reduced Groebner basis of an ad-hoc ideal");
  std::string gring, gideal, gorder = "grevlex";
  uint64_t gbudget = 10'000'000;
  gb->add_option("--ring", gring, "ring spec, e.g. Z[x:1,y:2]")->required();
  gb->add_option("--ideal", gideal, "semicolon-separated generators")->required();
  gb->add_option("--order", gorder, "grevlex or elim:k");
  gb->add_option("--budget", gbudget, "reduction step budget");

  auto* list = app.add_subcommand("list", "enumerate scenario files in a directory");
  std::string ldir;
  list->add_option("dir", ldir, "directory")->required();

  auto* show = app.add_subcommand("show", "print one named entity of a scenario");
  std::string sfile, sname;
  show->add_option("file", sfile, "scenario file")->required();
  show->add_option("name", sname, "entity name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (jobs > 0) par::set_max_threads(jobs);

  try {
    if (*verify) {
      if (vbudget > 0) GroebnerOptions::set_default_step_budget(vbudget);
      return cmd_verify(vfile, vfilter, vreport, vformat);
    }
    if (*gb) return cmd_gb(gring, gideal, gorder, gbudget);
    if (*list) return cmd_list(ldir);
    if (*show) return cmd_show(sfile, sname);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnknownVariable:
      case Errc::RationalInIntegerRing:
      case Errc::UnresolvedName:
      case Errc::TypeMismatch:
      case Errc::Usage:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
