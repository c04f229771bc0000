// Command-line front end: classify presentations, compute cohomology,
// evaluate product tables, verify properties, and fuzz.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hh/cohomology.hpp"
#include "hh/complex.hpp"
#include "hh/gerstenhaber.hpp"
#include "hh/harness.hpp"
#include "hh/parallel.hpp"
#include "hh/presentation.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hh::Presentation load(const std::string& path, const std::string& field_override) {
  hh::Presentation p = hh::parse_presentation(read_file(path));
  if (field_override.empty()) return p;
  return hh::Presentation::build(p.quiver().vertices, p.quiver().arrows, p.relations(),
                                 hh::Field::parse(field_override));
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json class_report_json(const hh::Presentation& p, const hh::ClassReport& r) {
  json w = json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  return json{{"format", 1},
              {"digest", p.digest()},
              {"field", p.field().name()},
              {"triangular", r.triangular},
              {"s2", r.s2},
              {"s3", r.s3},
              {"g1", r.g1},
              {"string", r.string_algebra},
              {"gentle", r.gentle},
              {"witnesses", w}};
}

int run_check(const std::string& file, bool as_json) {
  hh::Presentation p = hh::parse_presentation(read_file(file));
  hh::ClassReport r = hh::classify(p);
  if (as_json) {
    std::cout << class_report_json(p, r).dump(2) << "\n";
    return 0;
  }
  std::cout << "digest: " << p.digest() << "\n";
  std::cout << "field: " << p.field().name() << "\n";
  std::cout << "triangular: " << yesno(r.triangular) << "\n";
  std::cout << "s2: " << yesno(r.s2) << "\n";
  std::cout << "s3: " << yesno(r.s3) << "\n";
  std::cout << "g1: " << yesno(r.g1) << "\n";
  std::cout << "string: " << yesno(r.string_algebra) << "\n";
  std::cout << "gentle: " << yesno(r.gentle) << "\n";
  for (const auto& [k, v] : r.witnesses) std::cout << "witness[" << k << "]: " << v << "\n";
  return 0;
}

std::string support_text(const hh::Presentation& p, const hh::MinimalComplex& cx,
                         const hh::Cochain& c) {
  if (c.zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, v] : c.coeffs) {
    if (!first) out << " + ";
    first = false;
    out << hh::Field::str(v) << "*" << hh::element_label(p, cx.basis(c.degree)[i]);
  }
  return out.str();
}

int run_hh(const std::string& file, const std::string& field_override, int max_degree,
           bool as_json, bool dump_basis, bool dump_complex) {
  hh::Presentation p = load(file, field_override);
  hh::Algebra alg(p);
  hh::MinimalComplex cx(alg);
  hh::Cohomology H(cx);
  hh::HHSummary s = H.summary();

  int upto = static_cast<int>(s.dims.size()) - 1;
  if (max_degree >= 0) upto = max_degree;

  auto dim_at = [&](int n) {
    return n < static_cast<int>(s.dims.size()) ? s.dims[n] : 0;
  };

  if (as_json) {
    json dims = json::array();
    json gens = json::array();
    for (int n = 0; n <= upto; ++n) {
      dims.push_back(dim_at(n));
      if (n >= static_cast<int>(s.bases.size())) continue;
      for (const hh::CohomologyClass& cls : s.bases[n]) {
        json support = json::array();
        for (const auto& [i, v] : cls.representative.coeffs) {
          const hh::CochainBasisElement& e = cx.basis(n)[i];
          support.push_back(json::array(
              {p.chain_label(e.chain), p.label(e.value), hh::Field::str(v)}));
        }
        gens.push_back(json{{"degree", n}, {"support", support}});
      }
    }
    json out{{"format", 1},
             {"dims", dims},
             {"generators", gens},
             {"euler", s.euler},
             {"field", p.field().name()},
             {"digest", p.digest()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "digest: " << p.digest() << "\n";
    std::cout << "field: " << p.field().name() << "\n";
    std::cout << "top chain degree: " << cx.top_degree() << "\n";
    for (int n = 0; n <= upto; ++n)
      std::cout << "HH^" << n << ": dim " << dim_at(n) << "\n";
    for (int n = 0; n <= upto && n < static_cast<int>(s.bases.size()); ++n) {
      for (size_t i = 0; i < s.bases[n].size(); ++i) {
        std::cout << "generator HH^" << n << " #" << i << ": "
                  << support_text(p, cx, s.bases[n][i].representative) << "\n";
      }
    }
    std::cout << "euler: " << s.euler << "\n";
  }

  if (dump_basis) {
    for (int n = 0; n <= cx.top_degree() && (max_degree < 0 || n <= max_degree); ++n) {
      std::cout << "B^" << n << " (dim " << cx.dim(n) << "):\n";
      for (const hh::CochainBasisElement& e : cx.basis(n))
        std::cout << "  " << hh::element_label(p, e) << "\n";
    }
  }
  if (dump_complex) {
    for (int n = 0; n <= cx.top_degree() && (max_degree < 0 || n <= max_degree); ++n) {
      const hh::Matrix& d = cx.delta(n);
      std::cout << "delta^" << n << " (" << d.rows() << " x " << d.cols() << "):\n";
      for (const auto& [pos, v] : d.entries())
        std::cout << "  (" << pos.first << ", " << pos.second << ", " << hh::Field::str(v)
                  << ")\n";
    }
  }
  return 0;
}

std::string coords_text(const hh::Field& f, const hh::CohomologyClass& c) {
  if (c.zero()) return "0";
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < c.coordinates.size(); ++i) {
    if (i) out << ", ";
    out << hh::Field::str(c.coordinates[i]);
  }
  out << "]";
  (void)f;
  return out.str();
}

void print_table(const hh::Presentation& p, const hh::MinimalComplex& cx,
                 const hh::Cohomology& H, const hh::ProductTable& t, const std::string& name) {
  std::cout << name << ":\n";
  for (const auto& e : t.entries) {
    const hh::CohomologyClass& a = H.basis(e.deg_a)[e.idx_a];
    const hh::CohomologyClass& b = H.basis(e.deg_b)[e.idx_b];
    std::cout << "  HH^" << e.deg_a << "#" << e.idx_a << " ("
              << support_text(p, cx, a.representative) << ") x HH^" << e.deg_b << "#" << e.idx_b
              << " (" << support_text(p, cx, b.representative)
              << ") -> " << coords_text(p.field(), e.value) << "\n";
  }
}

json table_json(const hh::ProductTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json coords = json::array();
    if (!e.value.zero()) {
      for (const auto& c : e.value.coordinates) coords.push_back(hh::Field::str(c));
    }
    entries.push_back(json{{"a", json::array({e.deg_a, e.idx_a})},
                           {"b", json::array({e.deg_b, e.idx_b})},
                           {"value", coords}});
  }
  return json{{"variant", t.variant == hh::Variant::literal ? "literal" : "peeled"},
              {"trivial", t.trivial},
              {"entries", entries}};
}

int run_products(const std::string& file, const std::string& variant_name, bool as_json,
                 int jobs) {
  hh::Presentation p = hh::parse_presentation(read_file(file));
  hh::Algebra alg(p);
  hh::MinimalComplex cx(alg);
  hh::Cohomology H(cx);
  hh::Variant variant = hh::Variant::literal;
  if (variant_name == "peeled") variant = hh::Variant::peeled;

  hh::ProductTable cup_t = hh::ring_table(H, jobs);
  hh::ProductTable lie_t = hh::lie_table(H, variant, jobs);
  bool lie_deg1_trivial = hh::table_trivial_above(lie_t, 1);

  if (as_json) {
    json out{{"format", 1},
             {"digest", p.digest()},
             {"cup", table_json(cup_t)},
             {"bracket", table_json(lie_t)},
             {"cup-trivial", cup_t.trivial},
             {"bracket-trivial(deg>1)", lie_deg1_trivial}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_table(p, cx, H, cup_t, "cup table");
  print_table(p, cx, H, lie_t, std::string("bracket table (") + variant_name + ")");
  std::cout << "cup-trivial: " << yesno(cup_t.trivial) << "\n";
  std::cout << "bracket-trivial(deg>1): " << yesno(lie_deg1_trivial) << "\n";
  return 0;
}

const char* kind_name(hh::Finding::Kind k) {
  switch (k) {
    case hh::Finding::Kind::hard: return "hard";
    case hh::Finding::Kind::report: return "report";
    case hh::Finding::Kind::info: return "info";
  }
  return "?";
}

int run_verify(const std::string& file, const std::string& property, bool as_json) {
  hh::Presentation p = hh::parse_presentation(read_file(file));
  hh::VerdictReport r = hh::verify(p, property);
  if (as_json) {
    json findings = json::array();
    for (const hh::Finding& fd : r.findings)
      findings.push_back(json{{"kind", kind_name(fd.kind)}, {"message", fd.message}});
    json out{{"format", 1},
             {"property", r.property},
             {"digest", r.digest},
             {"verdict", hh::verdict_name(r.verdict)},
             {"findings", findings}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "property: " << r.property << "\n";
    std::cout << "digest: " << r.digest << "\n";
    std::cout << "verdict: " << hh::verdict_name(r.verdict) << "\n";
    for (const hh::Finding& fd : r.findings)
      std::cout << kind_name(fd.kind) << ": " << fd.message << "\n";
  }
  return r.failed() ? kExitFail : 0;
}

int run_random(const std::string& cls, int vertices, int arrows, double density,
               std::uint64_t seed, const std::string& emit) {
  auto target = hh::parse_target_class(cls);
  if (!target) {
    std::cerr << "error: unknown class '" << cls << "'\n";
    return kExitInvalid;
  }
  hh::RandomSpec spec;
  spec.target = *target;
  spec.vertices = vertices;
  spec.arrows = arrows;
  spec.density = density;
  spec.seed = seed;
  hh::Presentation p = hh::random_presentation(spec);
  if (emit.empty()) {
    std::cout << p.emit();
  } else {
    std::ofstream out(emit);
    if (!out) {
      std::cerr << "error: cannot write '" << emit << "'\n";
      return kExitInvalid;
    }
    out << p.emit();
    std::cout << "wrote " << emit << " (digest " << p.digest() << ")\n";
  }
  return 0;
}

int run_fuzz(const std::string& cls, const std::string& property, int count,
             std::uint64_t seed, int jobs, int vertices, int arrows, double density,
             const std::string& emit_dir, bool as_json) {
  auto target = hh::parse_target_class(cls);
  if (!target) {
    std::cerr << "error: unknown class '" << cls << "'\n";
    return kExitInvalid;
  }
  hh::RandomSpec spec;
  spec.target = *target;
  spec.vertices = vertices;
  spec.arrows = arrows;
  spec.density = density;
  spec.seed = seed;
  hh::FuzzResult r = hh::fuzz(spec, property, count, jobs, emit_dir);
  if (as_json) {
    json findings = json::array();
    for (const hh::VerdictReport& v : r.findings) {
      json fs = json::array();
      for (const hh::Finding& fd : v.findings)
        fs.push_back(json{{"kind", kind_name(fd.kind)}, {"message", fd.message}});
      findings.push_back(json{{"digest", v.digest},
                              {"verdict", hh::verdict_name(v.verdict)},
                              {"seed", v.seed},
                              {"replay", v.replay},
                              {"findings", fs}});
    }
    json out{{"format", 1},
             {"property", r.property},
             {"class", cls},
             {"count", r.count},
             {"passes", r.passes},
             {"failures", r.failures},
             {"reports", r.reports},
             {"findings", findings}};
    if (r.counterexample_file) out["counterexample_file"] = *r.counterexample_file;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "property: " << r.property << "\n";
    std::cout << "class: " << cls << "\n";
    std::cout << "count: " << r.count << "\n";
    std::cout << "passes: " << r.passes << "\n";
    std::cout << "failures: " << r.failures << "\n";
    std::cout << "reports: " << r.reports << "\n";
    for (const hh::VerdictReport& v : r.findings) {
      std::cout << hh::verdict_name(v.verdict) << " digest " << v.digest << " seed " << v.seed
                << "\n";
      for (const hh::Finding& fd : v.findings)
        std::cout << "  " << kind_name(fd.kind) << ": " << fd.message << "\n";
      std::cout << "  replay: " << v.replay << "\n";
    }
    if (r.counterexample_file)
      std::cout << "counterexample: " << *r.counterexample_file << "\n";
  }
  return r.failures > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of triangular quadratic monomial algebras"};
  app.require_subcommand(1);

  std::string file, field_override, cls = "string", property, variant = "literal", emit,
              emit_dir;
  int max_degree = -1, jobs = 1, vertices = 6, arrows = 8, count = 100;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool as_json = false, dump_basis = false, dump_complex = false;

  CLI::App* c_check = app.add_subcommand("check", "Parse and classify a presentation");
  c_check->add_option("file", file)->required();
  c_check->add_flag("--json", as_json);

  CLI::App* c_hh = app.add_subcommand("hh", "Compute cohomology groups");
  c_hh->add_option("file", file)->required();
  c_hh->add_option("--max-degree", max_degree);
  c_hh->add_option("--field", field_override, "Q or Fp, e.g. F5");
  c_hh->add_flag("--json", as_json);
  c_hh->add_flag("--dump-basis", dump_basis);
  c_hh->add_flag("--dump-complex", dump_complex);

  CLI::App* c_prod = app.add_subcommand("products", "Cup and bracket tables on classes");
  c_prod->add_option("file", file)->required();
  c_prod->add_option("--circ-variant", variant)->check(CLI::IsMember({"literal", "peeled"}));
  c_prod->add_option("--jobs", jobs);
  c_prod->add_flag("--json", as_json);

  CLI::App* c_verify = app.add_subcommand("verify", "Run a property suite");
  c_verify->add_option("file", file)->required();
  c_verify->add_option("--property", property)->required();
  c_verify->add_flag("--json", as_json);

  CLI::App* c_random = app.add_subcommand("random", "Generate a seeded presentation");
  c_random->add_option("--class", cls);
  c_random->add_option("--vertices", vertices);
  c_random->add_option("--arrows", arrows);
  c_random->add_option("--density", density);
  c_random->add_option("--seed", seed);
  c_random->add_option("--emit", emit);

  CLI::App* c_fuzz = app.add_subcommand("fuzz", "Verify a property on many random inputs");
  c_fuzz->add_option("--class", cls);
  c_fuzz->add_option("--property", property)->required();
  c_fuzz->add_option("--count", count);
  c_fuzz->add_option("--seed", seed);
  c_fuzz->add_option("--jobs", jobs);
  c_fuzz->add_option("--vertices", vertices);
  c_fuzz->add_option("--arrows", arrows);
  c_fuzz->add_option("--density", density);
  c_fuzz->add_option("--emit-dir", emit_dir);
  c_fuzz->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return run_check(file, as_json);
    if (c_hh->parsed())
      return run_hh(file, field_override, max_degree, as_json, dump_basis, dump_complex);
    if (c_prod->parsed()) return run_products(file, variant, as_json, jobs);
    if (c_verify->parsed()) return run_verify(file, property, as_json);
    if (c_random->parsed()) return run_random(cls, vertices, arrows, density, seed, emit);
    if (c_fuzz->parsed())
      return run_fuzz(cls, property, count, seed, jobs, vertices, arrows, density, emit_dir,
                      as_json);
  } catch (const hh::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const hh::GenerationExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInvalid;
}
