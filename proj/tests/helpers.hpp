// Shared test plumbing: cached fixture bundles and label-based cochain
// construction, so tests can say ("a2 a3", "b") instead of juggling indices.

#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hh/cohomology.hpp"
#include "hh/gerstenhaber.hpp"
#include "hh/harness.hpp"

namespace hhtest {

struct Bundle {
  hh::Presentation pres;
  hh::Algebra alg;
  hh::MinimalComplex cx;
  hh::Cohomology H;

  explicit Bundle(const std::string& text)
      : pres(hh::parse_presentation(text)), alg(pres), cx(alg), H(cx) {}
};

// One bundle per fixture name, built on first use.
inline Bundle& fixture_bundle(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Bundle>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, std::make_unique<Bundle>(hh::fixture(name))).first;
  }
  return *it->second;
}

inline Bundle& inline_bundle(const std::string& key, const std::string& text) {
  static std::map<std::string, std::unique_ptr<Bundle>> cache;
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<Bundle>(text)).first;
  }
  return *it->second;
}

// "a1 a2" -> Path of those arrows; "e_1" (or any single vertex id prefixed
// with e_) -> trivial path at that vertex.
inline hh::Path path_of(const hh::Presentation& p, const std::string& labels) {
  if (labels.rfind("e_", 0) == 0) {
    int v = p.quiver().vertex_index(labels.substr(2));
    if (v < 0) throw std::runtime_error("unknown vertex in " + labels);
    return hh::Path{v, {}};
  }
  std::istringstream in(labels);
  std::string id;
  hh::Path out;
  while (in >> id) {
    int a = p.quiver().arrow_index(id);
    if (a < 0) throw std::runtime_error("unknown arrow " + id);
    if (out.arrows.empty()) out.source = p.quiver().arrows[a].source;
    out.arrows.push_back(a);
  }
  return out;
}

// Unit cochain on the basis element (chain | value); fails the test fast if
// the pair is not in the basis.
inline hh::Cochain elem(const Bundle& b, int degree, const std::string& chain,
                        const std::string& value) {
  hh::Path c = path_of(b.pres, chain);
  hh::Path v = path_of(b.pres, value);
  int idx = b.cx.basis_index(degree, c, v);
  if (idx < 0) throw std::runtime_error("(" + chain + " | " + value + ") not in basis");
  return hh::cochain_unit(degree, idx, b.pres.field().from_int(1));
}

inline hh::Cochain scaled(const Bundle& b, long long k, const hh::Cochain& c) {
  return hh::cochain_scale(b.pres.field().from_int(k), c, b.pres.field());
}

// delta of the degree-0 unit at vertex id.
inline hh::Cochain unit_coboundary(const Bundle& b, const std::string& vertex) {
  hh::Path e = path_of(b.pres, "e_" + vertex);
  int idx = b.cx.basis_index(0, e, e);
  if (idx < 0) throw std::runtime_error("missing degree-0 unit e_" + vertex);
  return b.cx.apply_delta(hh::cochain_unit(0, idx, b.pres.field().from_int(1)));
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : hh::fixtures()) out.push_back(name);
  return out;
}

}  // namespace hhtest
