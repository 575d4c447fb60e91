#ifndef POLYHOPF_IO_HPP
#define POLYHOPF_IO_HPP

#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "constructions.hpp"
#include "hopf.hpp"
#include "reptheory.hpp"
#include "suites.hpp"
#include "wedderburn.hpp"

namespace polyhopf {

using json = nlohmann::ordered_json;

namespace detail {

inline json field_json(const CycField& f) { return json{{"type", "cyclotomic"}, {"conductor", f.conductor}}; }
inline json field_json(const PrimeField& f) { return json{{"type", "prime"}, {"q", f.q}}; }

}  // namespace detail

template <class F>
json to_json(const HopfAlg<F>& H) {
  json j;
  j["name"] = H.name;
  j["dim"] = H.dim;
  j["field"] = detail::field_json(H.field);
  j["split_exponent"] = H.split_exponent;
  json basis = json::array();
  for (int i = 0; i < H.dim; ++i) basis.push_back(i < static_cast<int>(H.labels.size()) ? H.labels[i] : "b" + std::to_string(i));
  j["basis"] = basis;
  json mult = json::array();
  for (int a = 0; a < H.dim; ++a)
    for (int b = 0; b < H.dim; ++b)
      for (const auto& [k, c] : H.m(a, b)) mult.push_back(json::array({a, b, k, c.str()}));
  j["mult"] = mult;
  json comult = json::array();
  for (int i = 0; i < H.dim; ++i)
    for (const auto& [a, b, c] : H.comult[i]) comult.push_back(json::array({i, a, b, c.str()}));
  j["comult"] = comult;
  json unit = json::array(), counit = json::array();
  for (const auto& c : H.unit) unit.push_back(c.str());
  for (const auto& c : H.counit) counit.push_back(c.str());
  j["unit"] = unit;
  j["counit"] = counit;
  json anti = json::array();
  for (int i = 0; i < H.dim; ++i)
    for (const auto& [k, c] : H.antipode[i]) anti.push_back(json::array({i, k, c.str()}));
  j["antipode"] = anti;
  return j;
}

inline json provenance_json(const Provenance& p) {
  return json{{"gamma", p.gamma}, {"theta", p.theta}, {"omega", p.tau}, {"omega_encoding", "tau_p(s,t) = i^omega[s*n+t]"},
              {"beta", p.beta}, {"c", p.c}};
}

inline json entry_json(const CatalogEntry& e) {
  json j = to_json(*e.H);
  j["name"] = e.name;
  j["kind"] = e.kind;
  if (e.provenance) j["provenance"] = provenance_json(*e.provenance);
  if (!e.alpha.empty()) {
    json a = json::array();
    for (const auto& v : e.alpha) {
      json row = json::array();
      for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (!v[k].is_zero()) row.push_back(json::array({k, v[k].str()}));
      a.push_back(row);
    }
    j["alpha"] = a;
  }
  return j;
}

class ImportError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int checked_index(const json& v, int dim, const char* what) {
  if (!v.is_number_integer()) throw ImportError(std::string(what) + ": index is not an integer");
  const int i = v.get<int>();
  if (i < 0 || i >= dim) throw ImportError(std::string(what) + ": index out of range");
  return i;
}

template <class F, class Field>
HopfAlg<F> hopf_from_json_impl(const json& j, const Field& field) {
  HopfAlg<F> H;
  for (const char* key : {"dim", "field", "basis", "mult", "comult", "unit", "counit", "antipode"})
    if (!j.contains(key)) throw ImportError(std::string("missing key '") + key + "'");
  H.dim = j.at("dim").get<int>();
  if (H.dim < 1) throw ImportError("dim must be positive");
  H.field = field;
  H.name = j.value("name", std::string{});
  H.split_exponent = j.value("split_exponent", 1);
  const int d = H.dim;
  auto parse = [&](const json& v) {
    if (!v.is_string()) throw ImportError("coefficient is not a string");
    try {
      return field.parse(v.get<std::string>());
    } catch (const std::exception& ex) {
      throw ImportError(std::string("bad coefficient: ") + ex.what());
    }
  };
  if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != d) throw ImportError("basis has wrong length");
  for (const auto& l : j["basis"]) H.labels.push_back(l.get<std::string>());
  H.mult.assign(static_cast<std::size_t>(d) * d, {});
  for (const auto& t : j["mult"]) {
    if (!t.is_array() || t.size() != 4) throw ImportError("mult entry must be [i, j, k, coeff]");
    const int a = checked_index(t[0], d, "mult"), b = checked_index(t[1], d, "mult"), k = checked_index(t[2], d, "mult");
    H.mult[static_cast<std::size_t>(a) * d + b].push_back({k, parse(t[3])});
  }
  H.comult.assign(d, {});
  for (const auto& t : j["comult"]) {
    if (!t.is_array() || t.size() != 4) throw ImportError("comult entry must be [i, j, k, coeff]");
    const int i = checked_index(t[0], d, "comult"), a = checked_index(t[1], d, "comult"),
              b = checked_index(t[2], d, "comult");
    H.comult[i].push_back({a, b, parse(t[3])});
  }
  if (static_cast<int>(j["unit"].size()) != d || static_cast<int>(j["counit"].size()) != d)
    throw ImportError("unit or counit has wrong length");
  for (const auto& c : j["unit"]) H.unit.push_back(parse(c));
  for (const auto& c : j["counit"]) H.counit.push_back(parse(c));
  H.antipode.assign(d, {});
  for (const auto& t : j["antipode"]) {
    if (!t.is_array() || t.size() != 3) throw ImportError("antipode entry must be [i, j, coeff]");
    const int i = checked_index(t[0], d, "antipode"), k = checked_index(t[1], d, "antipode");
    H.antipode[i].push_back({k, parse(t[2])});
  }
  H.canonicalize();
  return H;
}

}  // namespace detail

/// Import over Q(zeta_N); shape is validated, axioms are left to verify_axioms.
inline HopfQ hopf_from_json(const json& j) {
  if (!j.contains("field") || j["field"].value("type", "") != "cyclotomic")
    throw ImportError("field must be {type: cyclotomic, conductor}");
  return detail::hopf_from_json_impl<CycNumber>(j, CycField{j["field"].at("conductor").get<int>()});
}

inline HopfAlg<Fq> hopf_from_json_prime(const json& j) {
  if (!j.contains("field") || j["field"].value("type", "") != "prime") throw ImportError("field must be {type: prime, q}");
  return detail::hopf_from_json_impl<Fq>(j, PrimeField{j["field"].at("q").get<std::uint32_t>()});
}

// ---------------------------------------------------------------------------
// Tables

struct TypeRow {
  std::string name;
  std::string kind;  // "algebra" or "coalgebra"
  TypeMultiset type;
};

inline std::string csv_types(const std::vector<TypeRow>& rows) {
  std::ostringstream os;
  os << "name,kind,type\n";
  for (const auto& r : rows) os << r.name << "," << r.kind << ",\"" << type_str(r.type) << "\"\n";
  return os.str();
}

inline std::string markdown_types(const std::vector<TypeRow>& rows, const std::string& title) {
  std::ostringstream os;
  os << "## " << title << "\n\n| name | kind | type |\n|---|---|---|\n";
  for (const auto& r : rows) os << "| " << r.name << " | " << r.kind << " | " << type_str(r.type) << " |\n";
  return os.str();
}

inline json json_types(const std::vector<TypeRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    json t = json::array();
    for (const auto& [d, n] : r.type) t.push_back(json::array({d, n}));
    a.push_back(json{{"name", r.name}, {"kind", r.kind}, {"type", type_str(r.type)}, {"multiset", t}});
  }
  return a;
}

struct ReportSection {
  std::string title;
  std::vector<TypeRow> rows;
};

/// Type tables: k^Gamma coalgebra types, the deformations, and the twists.
/// Instances are computed concurrently; row order is fixed.
inline std::vector<ReportSection> report_tables(std::uint64_t seed = 0, std::uint32_t prime = 0) {
  struct Job {
    std::string name;
    bool algebra, coalgebra, dual_coalgebra;
  };
  std::vector<std::pair<std::string, std::vector<Job>>> plan;
  std::vector<Job> fun;
  for (int n = 2; n <= 8; ++n) fun.push_back({"FUND" + std::to_string(n), false, true, false});
  for (const char* g : {"FUNA4", "FUNS4", "FUNA5"}) fun.push_back({g, false, true, false});
  plan.emplace_back("Coalgebra types of k^Gamma", fun);
  std::vector<Job> def;
  for (int n = 2; n <= 8; ++n)
    for (const char* l : {"A", "B"}) def.push_back({std::string(l) + "2D" + std::to_string(n), true, true, false});
  for (const char* g : {"A2T", "B2T", "A2O", "B2O", "B2I"}) def.push_back({g, true, true, false});
  plan.emplace_back("Algebra and coalgebra types of the deformations", def);
  plan.emplace_back("Twists", std::vector<Job>{{"TWA5", false, true, true}, {"TWD3D5", false, true, false}});

  std::vector<ReportSection> out;
  for (const auto& [title, jobs] : plan) {
    std::vector<std::future<std::vector<TypeRow>>> fut;
    for (const auto& j : jobs)
      fut.push_back(std::async(std::launch::async, [j, seed, prime] {
        const CatalogEntry e = catalog(j.name, 0, seed);
        std::vector<TypeRow> rows;
        if (j.algebra) rows.push_back({j.name, "algebra", algebra_type(*e.H, seed, prime)});
        if (j.coalgebra) rows.push_back({j.name, "coalgebra", coalgebra_type(*e.H, seed, prime)});
        if (j.dual_coalgebra) rows.push_back({j.name + "*", "coalgebra", algebra_type(*e.H, seed, prime)});
        return rows;
      }));
    ReportSection sec{title, {}};
    for (auto& f : fut)
      for (auto& r : f.get()) sec.rows.push_back(std::move(r));
    out.push_back(std::move(sec));
  }
  return out;
}

inline std::string render_report(const std::vector<ReportSection>& secs, const std::string& format) {
  if (format == "csv") {
    std::vector<TypeRow> all;
    for (const auto& s : secs) all.insert(all.end(), s.rows.begin(), s.rows.end());
    return csv_types(all);
  }
  if (format == "json") {
    json j = json::array();
    for (const auto& s : secs) j.push_back(json{{"title", s.title}, {"rows", json_types(s.rows)}});
    return j.dump(2) + "\n";
  }
  std::string md = "# Type tables\n";
  for (const auto& s : secs) md += "\n" + markdown_types(s.rows, s.title);
  return md;
}

inline json suite_json(const SuiteResult& r) {
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(json{{"claim", c.claim}, {"pass", c.pass}, {"witness", c.witness}});
  return json{{"suite", r.suite}, {"instance", r.instance}, {"pass", r.pass()}, {"claims", claims}, {"notes", r.notes}};
}

inline std::string suite_markdown(const SuiteResult& r) {
  std::ostringstream os;
  os << "### " << r.instance << " / " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.claims) {
    os << "- [" << (c.pass ? "x" : " ") << "] " << c.claim;
    if (!c.witness.empty()) os << " (" << c.witness << ")";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "- note: " << n << "\n";
  return os.str();
}

inline json report_json(const TheoremReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(json{{"claim", c.claim}, {"pass", c.pass}, {"witness", c.witness}});
  return json{{"theorem", r.theorem}, {"instance", r.instance}, {"q", r.q}, {"pass", r.all()}, {"claims", claims}};
}

}  // namespace polyhopf

#endif  // POLYHOPF_IO_HPP
