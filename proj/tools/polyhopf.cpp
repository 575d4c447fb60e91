#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyhopf/io.hpp"
#include "polyhopf/suites.hpp"

namespace fs = std::filesystem;
using namespace polyhopf;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::vector<std::string> names;
  std::vector<std::string> suites;
  int conductor = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::string format = "md";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

/// A catalog name, or a JSON file produced by `build`.
CatalogEntry load(const std::string& name, const RunConfig& cfg) {
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
    const json j = read_json(name);
    CatalogEntry e;
    try {
      e.H = std::make_shared<HopfQ>(hopf_from_json(j));
    } catch (const ImportError& ex) {
      throw UsageError(name + ": " + ex.what());
    }
    e.name = e.H->name.empty() ? fs::path(name).stem().string() : e.H->name;
    e.kind = "imported";
    if (j.contains("alpha") && j["alpha"].size() == 4)
      for (const auto& row : j["alpha"]) {
        Vec<CycNumber> v = e.H->zero_vec();
        for (const auto& t : row) v.at(t.at(0).get<int>()) = e.H->field.parse(t.at(1).get<std::string>());
        e.alpha.push_back(std::move(v));
      }
    return e;
  }
  try {
    return catalog(name, cfg.conductor, cfg.seed);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

std::string sanitize(const std::string& name) {
  std::string s;
  for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

int cmd_build(const RunConfig& cfg) {
  std::vector<CatalogEntry> entries;
  for (const auto& n : cfg.names) entries.push_back(load(n, cfg));
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  for (const auto& e : entries) {
    json j = entry_json(e);
    j["commutative"] = e.H->is_commutative();
    j["cocommutative"] = e.H->is_cocommutative();
    const fs::path file = dir / (sanitize(e.name) + ".json");
    std::ofstream f(file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + file.string());
    f << j.dump(1) << "\n";
    std::cout << e.name << ": dim " << e.H->dim << ", " << (e.H->is_commutative() ? "commutative" : "noncommutative")
              << ", " << (e.H->is_cocommutative() ? "cocommutative" : "noncocommutative") << " -> " << file.string()
              << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite " + s);
  std::vector<std::string> names = cfg.names;
  std::sort(names.begin(), names.end());
  std::vector<CatalogEntry> entries;
  for (const auto& n : names) entries.push_back(load(n, cfg));
  std::vector<std::future<std::vector<SuiteResult>>> jobs;
  for (const auto& e : entries)
    jobs.push_back(std::async(std::launch::async, [&e, &suites, &cfg] {
      std::vector<SuiteResult> out;
      for (const auto& s : suites) {
        if (e.kind == "imported" && (s == "exact" || s == "sl2")) {
          SuiteResult r{s, e.name, {}, {"needs catalog provenance; skipped for imported files"}};
          out.push_back(std::move(r));
          continue;
        }
        if (e.kind == "imported" && s != "axioms" && !verify_axioms(*e.H).all()) {
          out.push_back({s, e.name, {}, {"skipped: Hopf axioms fail"}});
          continue;
        }
        out.push_back(run_suite(s, e, cfg.seed, cfg.prime));
      }
      return out;
    }));
  bool ok = true;
  json j = json::array();
  std::string md;
  for (auto& f : jobs)
    for (const auto& r : f.get()) {
      ok = ok && r.pass();
      j.push_back(suite_json(r));
      md += suite_markdown(r);
    }
  if (cfg.format == "json")
    emit(cfg, j.dump(2) + "\n");
  else if (cfg.format == "csv") {
    std::string csv = "instance,suite,claim,pass,witness\n";
    for (const auto& r : j)
      for (const auto& c : r["claims"])
        csv += r["instance"].get<std::string>() + "," + r["suite"].get<std::string>() + ",\"" +
               c["claim"].get<std::string>() + "\"," + (c["pass"].get<bool>() ? "1" : "0") + ",\"" +
               c["witness"].get<std::string>() + "\"\n";
    emit(cfg, csv);
  } else {
    emit(cfg, md + (ok ? "\nall suites passed\n" : "\nverification FAILED\n"));
  }
  return ok ? kOk : kVerifyFailed;
}

GroupSpec parse_enumerate_target(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("enumerate: missing group");
  std::string s = args[0];
  if (s == "cyclic" || s == "dihedral") {
    if (args.size() != 2) throw UsageError("enumerate: " + s + " needs an order");
    s = (s == "cyclic" ? "Z" : "D") + args[1];
  } else if (args.size() != 1) {
    throw UsageError("enumerate: too many arguments");
  }
  if (s == "tetra") s = "A4";
  if (s == "octa") s = "S4";
  if (s == "icosa") s = "A5";
  if (s == "T") s = "A4";
  if (s == "O") s = "S4";
  if (s == "I") s = "A5";
  const auto g = parse_group_spec(s);
  if (!g || g->binary) throw UsageError("enumerate: invalid polyhedral group " + args[0]);
  if (g->kind == PolyKind::cyclic) throw UsageError("enumerate: cyclic groups are excluded");
  return *g;
}

int cmd_enumerate(const RunConfig& cfg) {
  const GroupSpec g = parse_enumerate_target(cfg.names);
  const Enumeration en = enumerate_deformations(g.kind, g.n, cfg.conductor, cfg.seed);
  std::vector<std::string> label(en.candidates.size());
  for (const auto& [l, idx] : detail::deformation_labels(en)) label[idx] += (label[idx].empty() ? "" : "=") + l;
  json rows = json::array();
  for (std::size_t i = 0; i < en.candidates.size(); ++i) {
    const auto& c = en.candidates[i];
    rows.push_back(json{{"class", c.class_index},
                        {"class_size", c.class_size},
                        {"fixed_order", c.fixed_order},
                        {"lift", c.lift_index},
                        {"stable", c.stable},
                        {"outcome", c.stable ? c.filter.reason() : c.error},
                        {"signature", c.signature ? c.signature->str() : ""},
                        {"label", label[i]}});
  }
  const std::string gamma = detail::group_label(en.ext.base);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"gamma", gamma}, {"passing", en.count()}, {"candidates", rows}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "class,class_size,fixed_order,lift,stable,outcome,label\n";
    for (const auto& r : rows)
      os << r["class"] << "," << r["class_size"] << "," << r["fixed_order"] << "," << r["lift"] << ","
         << (r["stable"].get<bool>() ? 1 : 0) << "," << r["outcome"].get<std::string>() << ","
         << r["label"].get<std::string>() << "\n";
  } else {
    os << "## Deformations over " << gamma << "\n\n| class | size | fixed | lift | outcome | label | signature |\n"
       << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      os << "| " << r["class"] << " | " << r["class_size"] << " | " << r["fixed_order"] << " | " << r["lift"] << " | "
         << r["outcome"].get<std::string>() << " | " << r["label"].get<std::string>() << " | "
         << r["signature"].get<std::string>() << " |\n";
    os << "\npassing: " << en.count() << "\n";
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_twist(const RunConfig& cfg) {
  if (cfg.names.empty()) throw UsageError("twist: expected A5 or D3xD5");
  std::ostringstream os;
  json j = json::array();
  for (const auto& raw : cfg.names) {
    const std::string name = raw == "A5" ? "TWA5" : raw == "D3xD5" ? "TWD3D5" : raw;
    if (name != "TWA5" && name != "TWD3D5") throw UsageError("twist: unknown group " + raw);
    const CatalogEntry e = catalog(name, cfg.conductor, cfg.seed);
    const TypeMultiset co = coalgebra_type(*e.H, cfg.seed, cfg.prime);
    const TypeMultiset al = algebra_type(*e.H, cfg.seed, cfg.prime);
    const std::string g = detail::group_label(grouplikes(*e.H).group);
    const bool axioms = verify_axioms(*e.H).all();
    j.push_back(json{{"name", name}, {"dim", e.H->dim}, {"axioms", axioms}, {"coalgebra_type", type_str(co)},
                     {"algebra_type", type_str(al)}, {"grouplikes", g}});
    os << name << ": dim " << e.H->dim << ", axioms " << (axioms ? "ok" : "FAIL") << ", coalgebra " << type_str(co)
       << ", algebra " << type_str(al) << ", G(H) = " << g << "\n";
  }
  emit(cfg, cfg.format == "json" ? j.dump(2) + "\n" : os.str());
  return kOk;
}

int cmd_report(const RunConfig& cfg) {
  emit(cfg, render_report(report_tables(cfg.seed, cfg.prime), cfg.format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhopf: semisimple Hopf algebras from binary polyhedral groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--conductor", cfg.conductor, "cyclotomic conductor (default: minimal)")->check(CLI::NonNegativeNumber);
    sub->add_option("--prime", cfg.prime, "prime for modular decomposition (default: smallest valid)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", cfg.out, "output file (directory for build)");
  };
  auto* build = app.add_subcommand("build", "build catalog algebras and write JSON with provenance");
  build->add_option("names", cfg.names, "catalog names")->required();
  common(build);
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 on any failure");
  verify->add_option("names", cfg.names, "catalog names or JSON files")->required();
  verify->add_option("--suite", cfg.suites, "axioms, types, fusion, fs, exact, sl2, theorems or all")->take_all();
  common(verify);
  auto* enumerate = app.add_subcommand("enumerate", "enumerate deformations over a polyhedral group");
  enumerate->add_option("gamma", cfg.names, "group: D<n>, A4, S4, A5, dihedral <n>, tetra, octa, icosa")->required();
  common(enumerate);
  auto* twist = app.add_subcommand("twist", "build the dimension-60 twists");
  twist->add_option("group", cfg.names, "A5 or D3xD5")->required();
  common(twist);
  auto* report = app.add_subcommand("report", "type tables (markdown, csv or json)");
  report->add_flag("--all", "include every table (default)");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*twist) return cmd_twist(cfg);
    if (*report) return cmd_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
