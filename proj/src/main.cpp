#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeinf/catalog.hpp"
#include "skeinf/coloring.hpp"
#include "skeinf/diagram.hpp"
#include "skeinf/invariants.hpp"
#include "skeinf/ratfun.hpp"
#include "skeinf/refvalues.hpp"
#include "skeinf/selftest.hpp"
#include "skeinf/skein.hpp"

namespace {

using skeinf::Catalog;
using skeinf::Diagram;
using skeinf::RatFun;

struct Options {
  std::string link, pd, colors, type, catalog, id1, id2, path;
  std::vector<std::string> types;
  int loops = 0;
  int threads = 1;
  bool json = false;
};

// User catalog entries shadow bundled ones of the same id.
Diagram lookup(const std::string& id, const std::optional<Catalog>& user) {
  if (user && user->has(id)) return user->at(id).diagram();
  return skeinf::bundled().at(id).diagram();
}

Diagram resolve(const Options& o, const std::optional<Catalog>& user) {
  if (!o.link.empty() && !o.pd.empty()) {
    throw std::invalid_argument("give --link or --pd, not both");
  }
  Diagram d = !o.pd.empty() ? skeinf::parse_pd(o.pd)
              : !o.link.empty()
                  ? lookup(o.link, user)
                  : throw std::invalid_argument("need --link or --pd");
  if (o.loops < 0) throw std::invalid_argument("--loops must be >= 0");
  if (o.loops > 0) d = Diagram(d.crossings(), d.free_loops() + o.loops);
  return d;
}

int cmd_eval(const Options& o, const std::optional<Catalog>& user) {
  Diagram d = resolve(o, user);
  skeinf::Coloration col = skeinf::parse_colors(o.colors, d.n_components());
  RatFun v = skeinf::eval_colored(d, col);
  std::cout << (o.json ? v.json() : v.text()) << "\n";
  return 0;
}

int cmd_multiset(const Options& o, const std::optional<Catalog>& user) {
  Diagram d = resolve(o, user);
  skeinf::FMultiset m =
      skeinf::f_multiset(d, skeinf::parse_type(o.type), o.threads);
  std::cout << (o.json ? m.json() + "\n" : m.text());
  return 0;
}

int cmd_compare(const Options& o, const std::optional<Catalog>& user) {
  Diagram d1 = lookup(o.id1, user);
  Diagram d2 = lookup(o.id2, user);
  std::vector<skeinf::PartitionType> types;
  if (o.types.empty()) {
    types = skeinf::all_types(d1.n_components());
  } else {
    for (const auto& t : o.types) types.push_back(skeinf::parse_type(t));
  }
  skeinf::PairReport rep =
      skeinf::compare_pair(o.id1, d1, o.id2, d2, types, o.threads);
  std::cout << (o.json ? rep.json() + "\n" : rep.text());
  return rep.distinguished ? 1 : 0;
}

int cmd_conjecture(const Options& o, const std::optional<Catalog>& user) {
  Diagram d1 = lookup(o.id1, user);
  Diagram d2 = lookup(o.id2, user);
  auto [met, residual] = skeinf::conjecture_residual(d1, d2, o.threads);
  if (o.json) {
    nlohmann::json j;
    j["precondition_met"] = met;
    j["residual"] = residual.text();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "precondition met: " << (met ? "yes" : "no") << "\n"
              << "residual: " << residual.text() << "\n";
  }
  return 0;
}

int cmd_table(const Options& o) {
  const Catalog& cat = skeinf::bundled();
  namespace rv = skeinf::refvalues;

  const auto& rows = rv::simple_rows();
  std::vector<RatFun> simple_vals(rows.size());
  skeinf::parallel_for(
      static_cast<int>(rows.size()), o.threads, [&](int i) {
        Diagram d = cat.at(rows[i].link).diagram();
        simple_vals[i] = skeinf::eval_colored(
            d, skeinf::parse_colors(rows[i].colors, d.n_components()));
      });

  std::vector<std::string> f3_ids, f2_ids;
  for (const auto& [id, v] : rv::f3_table()) f3_ids.push_back(id);
  for (const auto& [id, v] : rv::f2_table()) f2_ids.push_back(id);
  std::vector<RatFun> f3_vals(f3_ids.size());
  std::vector<std::vector<RatFun>> f2_vals(f2_ids.size());
  skeinf::parallel_for(
      static_cast<int>(f3_ids.size()), o.threads, [&](int i) {
        Diagram d = cat.at(f3_ids[i]).diagram();
        f3_vals[i] =
            skeinf::f_multiset(d, skeinf::PartitionType{1, 1, 1}).values[0];
      });
  skeinf::parallel_for(
      static_cast<int>(f2_ids.size()), o.threads, [&](int i) {
        Diagram d = cat.at(f2_ids[i]).diagram();
        f2_vals[i] =
            skeinf::f_multiset(d, skeinf::PartitionType{2, 1}).values;
      });

  if (o.json) {
    nlohmann::json j;
    j["simple"] = nlohmann::json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      j["simple"].push_back({{"id", rows[i].id},
                             {"link", rows[i].link},
                             {"colors", rows[i].colors},
                             {"value", simple_vals[i].text()}});
    }
    j["f3"] = nlohmann::json::object();
    for (size_t i = 0; i < f3_ids.size(); ++i) {
      j["f3"][f3_ids[i]] = f3_vals[i].text();
    }
    j["f2"] = nlohmann::json::object();
    for (size_t i = 0; i < f2_ids.size(); ++i) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : f2_vals[i]) a.push_back(v.text());
      j["f2"][f2_ids[i]] = a;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "simple colored links\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string id = rows[i].id, link = rows[i].link, cols = rows[i].colors;
    id.resize(5, ' ');
    link.resize(10, ' ');
    cols.resize(7, ' ');
    std::cout << "  " << id << link << cols << simple_vals[i].text() << "\n";
  }
  std::cout << "\nthree different colors\n";
  for (size_t i = 0; i < f3_ids.size(); ++i) {
    std::cout << "  " << f3_ids[i] << "\n    " << f3_vals[i].text() << "\n";
  }
  std::cout << "\ntwo colors, type (2,1)\n";
  for (size_t i = 0; i < f2_ids.size(); ++i) {
    std::cout << "  " << f2_ids[i] << "\n";
    for (const auto& v : f2_vals[i]) std::cout << "    " << v.text() << "\n";
  }
  return 0;
}

int cmd_selftest(const Options& o) {
  skeinf::SelftestReport rep = skeinf::run_selftest(o.threads);
  std::cout << (o.json ? rep.json() + "\n" : rep.text());
  return rep.all_pass ? 0 : 1;
}

int cmd_ingest(const Options& o) {
  Catalog c = skeinf::ingest(o.path);
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : c.entries()) {
      j.push_back({{"id", e.id},
                   {"components", e.components},
                   {"pd", e.pd},
                   {"note", e.note}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ok: " << c.size() << " entries\n";
    for (const auto& e : c.entries()) {
      std::cout << "  " << e.id << "  (" << e.components << " components, "
                << e.diagram().crossings().size() << " crossings)\n";
    }
  }
  return 0;
}

void add_diagram_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--link", o.link, "catalog id of the diagram");
  cmd->add_option("--pd", o.pd, "PD code, e.g. \"PD[X[1,3,2,4], X[4,2,3,1]]\"");
  cmd->add_option("--loops", o.loops, "extra crossingless circles");
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--catalog", o.catalog,
                  "extra catalog file (CSV/JSON/PD list) consulted first");
  cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact three-variable invariant of colored links"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "F of one colored diagram");
  add_diagram_flags(eval, o);
  eval->add_option("--colors", o.colors, "coloration, e.g. 0,0,1")->required();
  add_common_flags(eval, o);

  CLI::App* multiset =
      app.add_subcommand("multiset", "F over all colorations of one type");
  add_diagram_flags(multiset, o);
  multiset->add_option("--type", o.type, "partition type, e.g. 2,1")
      ->required();
  add_common_flags(multiset, o);

  CLI::App* compare =
      app.add_subcommand("compare", "compare two links across types");
  compare->add_option("id1", o.id1, "first catalog id")->required();
  compare->add_option("id2", o.id2, "second catalog id")->required();
  compare->add_option("--types", o.types,
                      "partition types to compare (default: all)");
  add_common_flags(compare, o);

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "sum-difference residual of a pair");
  conjecture->add_option("id1", o.id1, "first catalog id")->required();
  conjecture->add_option("id2", o.id2, "second catalog id")->required();
  add_common_flags(conjecture, o);

  CLI::App* table =
      app.add_subcommand("table", "recompute the reference tables");
  add_common_flags(table, o);

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the verification suite");
  add_common_flags(selftest, o);

  CLI::App* ing = app.add_subcommand("ingest", "validate a catalog file");
  ing->add_option("file", o.path, "catalog file")->required();
  add_common_flags(ing, o);

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Catalog> user;
    if (!o.catalog.empty()) user = skeinf::ingest(o.catalog);
    if (*eval) return cmd_eval(o, user);
    if (*multiset) return cmd_multiset(o, user);
    if (*compare) return cmd_compare(o, user);
    if (*conjecture) return cmd_conjecture(o, user);
    if (*table) return cmd_table(o);
    if (*selftest) return cmd_selftest(o);
    if (*ing) return cmd_ingest(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
