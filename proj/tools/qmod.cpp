// Command-line front end: Euler characteristics of projectivized moduli of
// simple quiver representations, fixed-point component tables, cycle-class
// listings, non-emptiness checks, string representations, nullcone and
// simplicity tests, HH_0 tables, and the exhaustive self check.
//
// Exit codes: 0 success and everything consistent, 1 mathematical
// inconsistency detected, 2 input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qmod/hochschild.hpp"
#include "qmod/io.hpp"
#include "qmod/selfcheck.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInputError = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

int cmd_euler(const std::string& quiver_path, const std::string& dims, bool emit_json,
              const std::string& trace_format) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  qmod::DimVector d = qmod::parse_dimvector(q, dims);
  const std::int64_t direct = qmod::euler_direct(q, d);
  const std::int64_t localized = qmod::euler_localized(q, d);
  const int loops = qmod::loop_quiver_arity(q);
  std::optional<std::int64_t> necklace;
  if (loops >= 1 && d.degree() >= 1) necklace = qmod::necklace_count(loops, d[0]);

  const bool consistent = direct == localized && (!necklace || *necklace == direct);
  if (emit_json) {
    json out;
    out["direct"] = direct;
    out["localized"] = localized;
    if (necklace) out["necklace"] = *necklace;
    out["consistent"] = consistent;
    if (trace_format == "json") out["trace"] = qmod::trace_to_json(qmod::euler_localized_trace(q, d));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "direct=" << direct << " localized=" << localized;
    if (necklace) std::cout << " necklace=" << *necklace;
    std::cout << "\n";
    if (trace_format == "json")
      std::cout << qmod::trace_to_json(qmod::euler_localized_trace(q, d)).dump(2) << "\n";
  }
  if (trace_format == "dot") std::cout << qmod::trace_dot(qmod::euler_localized_trace(q, d));
  return consistent ? kExitOk : kExitInconsistent;
}

int cmd_components(const std::string& quiver_path, const std::string& dims, bool emit_json,
                   const std::string& dot_dir) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  qmod::DimVector d = qmod::parse_dimvector(q, dims);
  const auto comps = qmod::enumerate_components(q, d);
  if (emit_json) {
    json out = json::array();
    for (const qmod::Component& c : comps) out.push_back(qmod::component_summary_json(c));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << comps.size() << " component(s)\n";
    std::cout << "nu\tsupport\tdims\n";
    for (const qmod::Component& c : comps)
      std::cout << format_vector(c.nu.v) << "\t" << c.quiver.num_vertices() << "\t"
                << format_vector(c.dims.v) << "\n";
  }
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    int index = 0;
    for (const qmod::Component& c : comps) {
      std::ofstream out(std::filesystem::path(dot_dir) /
                        ("component_" + std::to_string(index++) + ".dot"));
      out << qmod::component_dot(c);
    }
  }
  return kExitOk;
}

int cmd_cycles(const std::string& quiver_path, const std::string& dims, bool primitive_only,
               bool emit_json) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  qmod::DimVector d = qmod::parse_dimvector(q, dims);
  json out = json::array();
  for (const qmod::CycleClass& c : qmod::enumerate_cycle_classes(q, d)) {
    if (primitive_only && !c.primitive) continue;
    std::vector<std::string> ids;
    for (int a : c.arrows) ids.push_back(q.arrow(a).label);
    if (emit_json) {
      json row;
      row["arrows"] = ids;
      row["weight"] = qmod::class_weight(q, c).v;
      row["period"] = c.period;
      row["primitive"] = c.primitive;
      out.push_back(row);
    } else {
      std::string line;
      for (std::size_t i = 0; i < ids.size(); ++i) line += (i ? "," : "") + ids[i];
      std::cout << line << "\t" << format_vector(qmod::class_weight(q, c).v) << "\t"
                << (c.primitive ? "primitive" : "power") << "\n";
    }
  }
  if (emit_json) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_nonempty(const std::string& quiver_path, const std::string& dims, bool emit_json) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  qmod::DimVector d = qmod::parse_dimvector(q, dims);
  const qmod::NonemptyVerdict v = qmod::nonempty_simple_verdict(q, d);
  const bool nonempty = qmod::verdict_nonempty(v);
  if (emit_json) {
    json out;
    out["nonempty"] = nonempty;
    out["clause"] = qmod::verdict_text(v);
    if (nonempty) {
      const qmod::ModuliDims md = qmod::moduli_dims(q, d);
      out["affine_dim"] = md.affine;
      out["projectivized_dim"] = md.projectivized;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (nonempty ? "non-empty" : "empty") << ": " << qmod::verdict_text(v) << "\n";
    if (nonempty) {
      const qmod::ModuliDims md = qmod::moduli_dims(q, d);
      std::cout << "affine dim " << md.affine << ", projectivized dim " << md.projectivized
                << "\n";
    }
  }
  return kExitOk;
}

int cmd_stringrep(const std::string& quiver_path, const std::string& cycle_arrows,
                  const std::string& field_text) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  std::vector<int> arrows;
  std::string cur;
  for (char ch : cycle_arrows + ",") {
    if (ch == ',') {
      if (!cur.empty()) arrows.push_back(q.arrow_by_label(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (arrows.empty()) throw std::invalid_argument("stringrep: empty cycle");
  const qmod::Cycle c = qmod::make_cycle(q, q.arrow(arrows.front()).src, arrows);
  const qmod::Representation r =
      qmod::string_rep(q, c, qmod::field_from_text(field_text));
  std::cout << qmod::representation_to_json(r).dump(2) << "\n";
  return kExitOk;
}

int cmd_nullcone(const std::string& rep_path, bool emit_json) {
  const qmod::Representation r = qmod::representation_from_json(load_json(rep_path));
  const bool nilpotent = qmod::is_nilpotent(r);
  std::optional<bool> traces;
  if (r.field.is_rational()) traces = qmod::traces_vanish_bounded(r);
  const bool consistent = !traces || *traces == nilpotent;
  if (emit_json) {
    json out;
    out["nilpotent"] = nilpotent;
    if (traces) out["traces_vanish"] = *traces;
    out["consistent"] = consistent;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (nilpotent ? "nilpotent" : "not nilpotent");
    if (traces)
      std::cout << "; bounded traces " << (*traces ? "vanish" : "do not vanish");
    std::cout << "\n";
  }
  return consistent ? kExitOk : kExitInconsistent;
}

int cmd_simple_check(const std::string& rep_path, std::int64_t prime, bool emit_json) {
  qmod::Representation r = qmod::representation_from_json(load_json(rep_path));
  if (r.field.is_rational()) {
    if (prime < 2)
      throw std::invalid_argument(
          "simple-check: representation is rational; pass -p <prime> to reduce");
    qmod::Representation reduced = qmod::Representation::zero(r.q, r.d, qmod::FieldTag{prime});
    auto mod_p = [&](qmod::int128 v) {
      const qmod::int128 m = v % prime;
      return static_cast<std::int64_t>(m < 0 ? m + prime : m);
    };
    for (int a = 0; a < r.q.num_arrows(); ++a)
      for (int row = 0; row < r.x[a].rows(); ++row)
        for (int col = 0; col < r.x[a].cols(); ++col) {
          const qmod::Scalar& s = r.x[a].at(row, col);
          const qmod::Scalar num = qmod::Scalar::fp(mod_p(s.num()), prime);
          const qmod::Scalar den = qmod::Scalar::fp(mod_p(s.den()), prime);
          reduced.x[a].at(row, col) = num / den;  // throws if den is 0 mod p
        }
    r = std::move(reduced);
  } else if (prime >= 2 && r.field.p != prime) {
    throw std::invalid_argument("simple-check: representation is over " + r.field.text() +
                                ", not Fp:" + std::to_string(prime));
  }
  const bool simple = qmod::is_simple_bruteforce(r);
  const std::int64_t endo = qmod::endomorphism_dim(r);
  if (emit_json) {
    json out;
    out["field"] = r.field.text();
    out["simple"] = simple;
    out["endomorphism_dim"] = endo;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (simple ? "simple" : "not simple") << " over " << r.field.text()
              << "; endomorphism dim " << endo << "\n";
  }
  return kExitOk;
}

int cmd_hh0(const std::string& quiver_path, int max_degree, bool emit_json) {
  qmod::Quiver q = qmod::quiver_from_json(load_json(quiver_path));
  json rows = json::array();
  if (!emit_json) std::cout << "d\t|C_d|\t|C_d^prim|\n";
  for (const qmod::DimVector& d : qmod::enumerate_dimvectors(q.num_vertices(), max_degree)) {
    const std::int64_t all = qmod::hh0_graded_dim(q, d);
    const std::int64_t prim = qmod::hh0_primitive_dim(q, d);
    if (all == 0 && prim == 0) continue;
    if (emit_json) {
      json row;
      row["d"] = d.v;
      row["classes"] = all;
      row["primitive"] = prim;
      rows.push_back(row);
    } else {
      std::cout << format_vector(d.v) << "\t" << all << "\t" << prim << "\n";
    }
  }
  if (emit_json) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_selfcheck(int max_vertices, int max_arrows, int max_degree, bool emit_json) {
  const qmod::CorpusReport corpus =
      qmod::run_corpus(max_vertices, max_arrows, max_degree, [](std::int64_t n) {
        std::cerr << "  ..." << n << " pairs\r";
      });
  const qmod::CorpusReport loops = qmod::run_loop_corpus(3, 6, 8);
  const bool ok = corpus.ok() && loops.ok();
  if (emit_json) {
    json out;
    out["pairs_checked"] = corpus.pairs_checked + loops.pairs_checked;
    out["euler_mismatches"] = corpus.euler_mismatches + loops.euler_mismatches;
    out["bijection_discrepancies"] =
        corpus.bijection_discrepancies + loops.bijection_discrepancies;
    out["necklace_mismatches"] = loops.necklace_mismatches;
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "checked " << corpus.pairs_checked << " quiver/dimension pairs plus "
              << loops.pairs_checked << " loop-quiver cases\n";
    for (const std::string& f : corpus.failures) std::cout << "FAIL " << f << "\n";
    for (const std::string& f : loops.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (ok ? "all consistent" : "INCONSISTENT") << "\n";
  }
  return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of projectivized moduli of simple quiver representations"};
  app.require_subcommand(1);

  std::string quiver_path, dims, rep_path, dot_dir, trace_format, cycle_arrows;
  std::string field_text = "Q";
  bool emit_json = false, primitive_only = false;
  std::int64_t prime = 0;
  int max_degree = 4, sc_vertices = 3, sc_arrows = 4, sc_degree = 5;

  auto* euler = app.add_subcommand("euler", "compare all Euler characteristic engines");
  euler->add_option("quiver", quiver_path)->required();
  euler->add_option("-d,--dims", dims)->required();
  euler->add_option("--trace", trace_format)->check(CLI::IsMember({"json", "dot"}));
  euler->add_flag("--json", emit_json);

  auto* components = app.add_subcommand("components", "list torus fixed-point components");
  components->add_option("quiver", quiver_path)->required();
  components->add_option("-d,--dims", dims)->required();
  components->add_option("--dot", dot_dir, "write one DOT file per component here");
  components->add_flag("--json", emit_json);

  auto* cycles = app.add_subcommand("cycles", "list cycle classes of a dimension vector");
  cycles->add_option("quiver", quiver_path)->required();
  cycles->add_option("-d,--dims", dims)->required();
  cycles->add_flag("--primitive", primitive_only, "only primitive classes");
  cycles->add_flag("--json", emit_json);

  auto* nonempty = app.add_subcommand("nonempty", "decide non-emptiness of the moduli");
  nonempty->add_option("quiver", quiver_path)->required();
  nonempty->add_option("-d,--dims", dims)->required();
  nonempty->add_flag("--json", emit_json);

  auto* stringrep = app.add_subcommand("stringrep", "print the string representation of a cycle");
  stringrep->add_option("quiver", quiver_path)->required();
  stringrep->add_option("-c,--cycle", cycle_arrows, "comma-separated arrow ids")->required();
  stringrep->add_option("--field", field_text, "Q or Fp:<prime>");

  auto* nullcone = app.add_subcommand("nullcone", "nilpotency / trace-vanishing test");
  nullcone->add_option("representation", rep_path)->required();
  nullcone->add_flag("--json", emit_json);

  auto* simple = app.add_subcommand("simple-check", "brute-force simplicity over a prime field");
  simple->add_option("representation", rep_path)->required();
  simple->add_option("-p,--prime", prime);
  simple->add_flag("--json", emit_json);

  auto* hh0 = app.add_subcommand("hh0", "graded dimensions of HH_0 of the path algebra");
  hh0->add_option("quiver", quiver_path)->required();
  hh0->add_option("--max-degree", max_degree);
  hh0->add_flag("--json", emit_json);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the full property corpus");
  selfcheck->add_option("--max-vertices", sc_vertices);
  selfcheck->add_option("--max-arrows", sc_arrows);
  selfcheck->add_option("--max-degree", sc_degree);
  selfcheck->add_flag("--json", emit_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (euler->parsed()) return cmd_euler(quiver_path, dims, emit_json, trace_format);
    if (components->parsed()) return cmd_components(quiver_path, dims, emit_json, dot_dir);
    if (cycles->parsed()) return cmd_cycles(quiver_path, dims, primitive_only, emit_json);
    if (nonempty->parsed()) return cmd_nonempty(quiver_path, dims, emit_json);
    if (stringrep->parsed()) return cmd_stringrep(quiver_path, cycle_arrows, field_text);
    if (nullcone->parsed()) return cmd_nullcone(rep_path, emit_json);
    if (simple->parsed()) return cmd_simple_check(rep_path, prime, emit_json);
    if (hh0->parsed()) return cmd_hh0(quiver_path, max_degree, emit_json);
    if (selfcheck->parsed()) return cmd_selfcheck(sc_vertices, sc_arrows, sc_degree, emit_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}
