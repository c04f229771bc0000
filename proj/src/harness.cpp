#include "hh/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hh/cohomology.hpp"
#include "hh/complex.hpp"
#include "hh/gerstenhaber.hpp"
#include "hh/parallel.hpp"

namespace hh {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 1) return 0;
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

std::string target_class_name(TargetClass c) {
  switch (c) {
    case TargetClass::quadratic: return "quadratic";
    case TargetClass::quadratic_s3: return "quadratic-s3";
    case TargetClass::string_class: return "string";
    case TargetClass::gentle: return "gentle";
  }
  return "?";
}

std::optional<TargetClass> parse_target_class(const std::string& s) {
  if (s == "quadratic") return TargetClass::quadratic;
  if (s == "quadratic-s3") return TargetClass::quadratic_s3;
  if (s == "string") return TargetClass::string_class;
  if (s == "gentle") return TargetClass::gentle;
  return std::nullopt;
}

GenerationExhausted::GenerationExhausted(const RandomSpec& s)
    : std::runtime_error("generation exhausted after 10000 attempts (class=" +
                         target_class_name(s.target) + " vertices=" + std::to_string(s.vertices) +
                         " arrows=" + std::to_string(s.arrows) +
                         " density=" + std::to_string(s.density) +
                         " seed=" + std::to_string(s.seed) + ")"),
      spec(s) {}

namespace {

// One generation attempt: arrows point from lower to higher vertex index, so
// the result is acyclic by construction; relations are sampled per junction
// vertex under the target class's local constraints.
std::optional<Presentation> try_generate(const RandomSpec& spec, Rng& rng) {
  const int nv = spec.vertices;
  const bool capped =
      spec.target == TargetClass::string_class || spec.target == TargetClass::gentle;

  std::vector<std::string> vertices;
  for (int v = 1; v <= nv; ++v) vertices.push_back(std::to_string(v));

  std::vector<Arrow> arrows;
  if (capped) {
    // Degree-capped classes: start from the saturated doubled path (every
    // vertex at both its in and out cap), shuffle with degree-preserving
    // target swaps, then delete down to the requested count. Placing arrows
    // one at a time instead would almost never reach the saturated counts.
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < nv; ++v) {
      edges.emplace_back(v, v + 1);
      edges.emplace_back(v, v + 1);
    }
    if (static_cast<int>(edges.size()) < spec.arrows) return std::nullopt;
    int swaps = 4 * static_cast<int>(edges.size());
    for (int k = 0; k < swaps && edges.size() >= 2; ++k) {
      int i = rng.below(static_cast<int>(edges.size()));
      int j = rng.below(static_cast<int>(edges.size()));
      if (i == j) continue;
      if (edges[i].first < edges[j].second && edges[j].first < edges[i].second)
        std::swap(edges[i].second, edges[j].second);
    }
    while (static_cast<int>(edges.size()) > spec.arrows)
      edges.erase(edges.begin() + rng.below(static_cast<int>(edges.size())));
    for (size_t i = 0; i < edges.size(); ++i)
      arrows.push_back({"a" + std::to_string(i + 1), edges[i].first, edges[i].second});
  } else {
    int tries = 40 * spec.arrows + 40;
    while (static_cast<int>(arrows.size()) < spec.arrows && tries-- > 0) {
      int s = rng.below(nv);
      int t = rng.below(nv);
      if (s == t) continue;
      if (s > t) std::swap(s, t);
      arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t});
    }
    if (static_cast<int>(arrows.size()) < spec.arrows) return std::nullopt;
  }

  std::vector<std::vector<int>> ins(nv), outs(nv);
  for (size_t i = 0; i < arrows.size(); ++i) {
    outs[arrows[i].source].push_back(static_cast<int>(i));
    ins[arrows[i].target].push_back(static_cast<int>(i));
  }

  std::vector<std::pair<int, int>> relations;
  for (int v = 0; v < nv; ++v) {
    const auto& in = ins[v];
    const auto& out = outs[v];
    if (in.empty() || out.empty()) continue;
    switch (spec.target) {
      case TargetClass::quadratic:
        for (int x : in) {
          for (int u : out) {
            if (rng.chance(spec.density)) relations.emplace_back(x, u);
          }
        }
        break;
      case TargetClass::quadratic_s3:
      case TargetClass::string_class: {
        // Relation-free pairs must form a partial matching.
        std::vector<int> avail = out;
        std::vector<std::pair<int, int>> free_pairs;
        for (int x : in) {
          if (!avail.empty() && rng.chance(1.0 - spec.density)) {
            int k = rng.below(static_cast<int>(avail.size()));
            free_pairs.emplace_back(x, avail[k]);
            avail.erase(avail.begin() + k);
          }
        }
        for (int x : in) {
          for (int u : out) {
            if (std::find(free_pairs.begin(), free_pairs.end(), std::make_pair(x, u)) ==
                free_pairs.end())
              relations.emplace_back(x, u);
          }
        }
        break;
      }
      case TargetClass::gentle:
        // Both the relation pairs and the relation-free pairs must be
        // matchings, which pins everything except the 1-in/1-out case.
        if (in.size() == 1 && out.size() == 1) {
          if (rng.chance(spec.density)) relations.emplace_back(in[0], out[0]);
        } else if (in.size() == 1) {
          relations.emplace_back(in[0], out[rng.below(2)]);
        } else if (out.size() == 1) {
          relations.emplace_back(in[rng.below(2)], out[0]);
        } else {
          int flip = rng.below(2);
          relations.emplace_back(in[0], out[flip]);
          relations.emplace_back(in[1], out[1 - flip]);
        }
        break;
    }
  }
  return Presentation::build(std::move(vertices), std::move(arrows), std::move(relations));
}

bool class_ok(const Presentation& p, TargetClass target) {
  ClassReport r = classify(p);
  switch (target) {
    case TargetClass::quadratic: return true;
    case TargetClass::quadratic_s3: return r.s3;
    case TargetClass::string_class: return r.string_algebra;
    case TargetClass::gentle: return r.gentle;
  }
  return false;
}

}  // namespace

Presentation random_presentation(const RandomSpec& spec) {
  if (spec.vertices < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (spec.arrows < 0) throw std::invalid_argument("arrow count must be non-negative");
  if (spec.density < 0.0 || spec.density > 1.0)
    throw std::invalid_argument("density must lie in [0, 1]");
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::optional<Presentation> p = try_generate(spec, rng);
    if (p && class_ok(*p, spec.target)) return std::move(*p);
  }
  throw GenerationExhausted(spec);
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

namespace {

struct Ctx {
  const Presentation& p;
  ClassReport cls;
  Algebra alg;
  MinimalComplex cx;
  Cohomology H;
  std::vector<Finding> findings;

  explicit Ctx(const Presentation& pres)
      : p(pres), cls(classify(pres)), alg(pres), cx(alg), H(cx) {}

  const Field& field() const { return p.field(); }

  void hard(const std::string& msg) { findings.push_back({Finding::Kind::hard, msg}); }
  void report(const std::string& msg) { findings.push_back({Finding::Kind::report, msg}); }
  void info(const std::string& msg) { findings.push_back({Finding::Kind::info, msg}); }
};

std::string describe(const Ctx& c, const Cochain& f) {
  std::ostringstream out;
  out << "deg " << f.degree << ":";
  if (f.coeffs.empty()) out << " 0";
  for (const auto& [i, v] : f.coeffs) {
    out << " " << Field::str(v) << "*" << element_label(c.p, c.cx.basis(f.degree)[i]);
  }
  return out.str();
}

bool starts_with(const Path& w, int arrow) {
  return !w.trivial() && w.arrows.front() == arrow;
}
bool ends_with(const Path& w, int arrow) { return !w.trivial() && w.arrows.back() == arrow; }

// Support shapes of the one-sided normal forms. The two directions are not
// mirror images: the minus/plus classification gives minus precedence, so
// the left form may keep an a_1-initial path only as the degree-1 arrow
// itself, while the right form keeps every a_1-initial path (minus-type
// elements survive, including values that also end with a_n) and only
// forbids a_n-terminal paths that fail to start with a_1.
bool leq_form_ok(const Path& w, int first, int last) {
  if (!starts_with(w, first)) return true;
  return w.length() == 1 && ends_with(w, last);
}
bool geq_form_ok(const Path& w, int first, int last) {
  return !ends_with(w, last) || starts_with(w, first);
}

std::vector<Cochain> kernel_cocycles(const Ctx& c, int n) {
  std::vector<Cochain> out;
  const auto vecs = kernel_basis(c.cx.delta(n), c.field());
  for (const auto& v : vecs) {
    Cochain f;
    f.degree = n;
    for (size_t i = 0; i < v.size(); ++i) {
      if (!c.field().is_zero(v[i])) f.coeffs[static_cast<int>(i)] = v[i];
    }
    out.push_back(std::move(f));
  }
  return out;
}

void check_complex_valid(Ctx& c) {
  const Field& f = c.field();
  int top = c.cx.top_degree();
  for (int n = 0; n <= top; ++n) {
    const Matrix& d = c.cx.delta(n);
    for (const auto& [pos, v] : d.entries()) {
      if (!(v == 1 || v == -1)) {
        c.hard("delta^" + std::to_string(n) + " entry at (" + std::to_string(pos.first) + "," +
               std::to_string(pos.second) + ") is " + Field::str(v) + ", expected +-1");
      }
    }
    if (!multiply(c.cx.delta(n + 1), d, f).is_zero()) {
      c.hard("delta^" + std::to_string(n + 1) + " o delta^" + std::to_string(n) + " != 0");
    }
  }
  for (int n = 0; n <= top; ++n) {
    for (const CochainBasisElement& e : c.cx.basis(n)) {
      if (!c.p.valid_path(e.chain) || !c.p.valid_path(e.value) ||
          e.chain.source != e.value.source ||
          c.p.path_target(e.chain) != c.p.path_target(e.value)) {
        c.hard("malformed basis element " + element_label(c.p, e));
        continue;
      }
      TriType expect = TriType::zero;
      if (n >= 1 && starts_with(e.value, e.chain.arrows.front())) {
        expect = TriType::minus;
      } else if (n >= 1 && ends_with(e.value, e.chain.arrows.back())) {
        expect = TriType::plus;
      }
      if (e.tri_type != expect) c.hard("misclassified element " + element_label(c.p, e));
    }
  }
  for (const CochainBasisElement& e : c.cx.basis(1)) {
    if (e.tri_type == TriType::plus)
      c.hard("degree-1 plus-type element exists: " + element_label(c.p, e));
  }
}

void check_normalization(Ctx& c) {
  const Field& f = c.field();
  int top = c.cx.top_degree();
  for (int n = 1; n <= top; ++n) {
    const auto& basis = c.cx.basis(n);
    // Per-element shift maps: the difference must be an exact coboundary, and
    // for degree >= 2 under (S3) the result must match the closed form built
    // independently from chain extensions.
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
      const CochainBasisElement& e = basis[i];
      if (e.tri_type == TriType::zero) continue;
      bool is_minus = e.tri_type == TriType::minus;
      Cochain unit = cochain_unit(n, i, f.from_int(1));
      Cochain shifted = is_minus ? c.cx.shift_plus(n, i) : c.cx.shift_minus(n, i);
      Cochain diff = cochain_sub(unit, shifted, f);
      if (!c.H.is_coboundary(diff)) {
        c.hard(std::string(is_minus ? "shift_plus" : "shift_minus") + " of " +
               element_label(c.p, e) + " does not differ from it by a coboundary");
      }
      if (c.cls.s3 && n >= 2) {
        const PathBasis& pb = c.alg.basis();
        Cochain expect;
        expect.degree = n;
        Scalar sign = f.from_int((n + 1) % 2 == 0 ? 1 : -1);
        if (is_minus) {
          Path tail{c.p.quiver().arrows[e.chain.arrows.front()].target,
                    {e.chain.arrows.begin() + 1, e.chain.arrows.end()}};
          Path p_val{c.p.quiver().arrows[e.value.arrows.front()].target,
                     {e.value.arrows.begin() + 1, e.value.arrows.end()}};
          for (int x : c.p.rel_successors(e.chain.arrows.back())) {
            Path ext = tail;
            ext.arrows.push_back(x);
            if (c.alg.chain_index(n, ext) < 0) continue;
            Path xp{c.p.quiver().arrows[x].source, {x}};
            auto prod = pb.multiply(pb.index_of(p_val), pb.index_of(xp));
            if (!prod) continue;
            int bi = c.cx.basis_index(n, ext, pb.path(*prod));
            expect = cochain_add(expect, cochain_unit(n, bi, sign), f);
          }
        } else {
          Path head{e.chain.source, {e.chain.arrows.begin(), e.chain.arrows.end() - 1}};
          Path q_val{e.value.source, {e.value.arrows.begin(), e.value.arrows.end() - 1}};
          for (int x : c.p.rel_predecessors(e.chain.arrows.front())) {
            Path ext{c.p.quiver().arrows[x].source, {x}};
            ext.arrows.insert(ext.arrows.end(), head.arrows.begin(), head.arrows.end());
            if (c.alg.chain_index(n, ext) < 0) continue;
            Path xp{c.p.quiver().arrows[x].source, {x}};
            auto prod = pb.multiply(pb.index_of(xp), pb.index_of(q_val));
            if (!prod) continue;
            int bi = c.cx.basis_index(n, ext, pb.path(*prod));
            expect = cochain_add(expect, cochain_unit(n, bi, sign), f);
          }
        }
        if (!cochain_equal(shifted, expect)) {
          c.hard("closed form mismatch for " + element_label(c.p, e) + ": got " +
                 describe(c, shifted) + ", expected " + describe(c, expect));
        }
      }
    }

    // Whole-cochain normalization: single elements plus the all-ones combo.
    std::vector<Cochain> samples;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      samples.push_back(cochain_unit(n, i, f.from_int(1)));
    Cochain ones;
    ones.degree = n;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) ones.coeffs[i] = f.from_int(1);
    if (!ones.zero()) samples.push_back(ones);

    for (const Cochain& phi : samples) {
      auto [leq, h1] = c.cx.normalize_with_witness(phi, MinimalComplex::Direction::leq);
      auto [geq, h2] = c.cx.normalize_with_witness(phi, MinimalComplex::Direction::geq);
      if (!cochain_equal(cochain_sub(phi, leq, f), c.cx.apply_delta(h1)))
        c.hard("phi - phi_leq is not the coboundary of its witness");
      if (!cochain_equal(cochain_sub(phi, geq, f), c.cx.apply_delta(h2)))
        c.hard("phi - phi_geq is not the coboundary of its witness");
      if (!c.cls.s3) continue;
      for (const auto& [i, v] : leq.coeffs) {
        (void)v;
        const CochainBasisElement& e = c.cx.basis(n)[i];
        if (!leq_form_ok(e.value, e.chain.arrows.front(), e.chain.arrows.back()))
          c.hard("leq support shape violated at " + element_label(c.p, e));
        if (n >= 2 && e.tri_type == TriType::minus)
          c.hard("phi_leq keeps a minus component at " + element_label(c.p, e));
      }
      for (const auto& [i, v] : geq.coeffs) {
        (void)v;
        const CochainBasisElement& e = c.cx.basis(n)[i];
        if (!geq_form_ok(e.value, e.chain.arrows.front(), e.chain.arrows.back()))
          c.hard("geq support shape violated at " + element_label(c.p, e));
        if (n >= 2 && e.tri_type == TriType::plus)
          c.hard("phi_geq keeps a plus component at " + element_label(c.p, e));
      }
    }

    // Annihilation against chain extensions, for every cocycle.
    if (!c.cls.s3) continue;
    const PathBasis& pb = c.alg.basis();
    for (const Cochain& z : kernel_cocycles(c, n)) {
      Cochain leq = c.cx.normalize(z, MinimalComplex::Direction::leq);
      Cochain geq = c.cx.normalize(z, MinimalComplex::Direction::geq);
      for (const Path& chain : c.alg.chains(n)) {
        PathCombo lv = c.cx.evaluate(leq, chain);
        for (int x : c.p.rel_successors(chain.arrows.back())) {
          Path xp{c.p.quiver().arrows[x].source, {x}};
          for (const auto& [pi, cv] : lv.terms) {
            (void)cv;
            if (pb.multiply(pi, pb.index_of(xp))) {
              c.hard("phi_leq(" + c.p.label(chain) + ") survives right multiplication by " +
                     c.p.quiver().arrows[x].id);
            }
          }
        }
        PathCombo gv = c.cx.evaluate(geq, chain);
        for (int x : c.p.rel_predecessors(chain.arrows.front())) {
          Path xp{c.p.quiver().arrows[x].source, {x}};
          for (const auto& [pi, cv] : gv.terms) {
            (void)cv;
            if (pb.multiply(pb.index_of(xp), pi)) {
              c.hard("phi_geq(" + c.p.label(chain) + ") survives left multiplication by " +
                     c.p.quiver().arrows[x].id);
            }
          }
        }
      }
    }
  }
}

void check_cup_trivial(Ctx& c) {
  const Field& f = c.field();
  int top = c.cx.top_degree();

  // Unit action is exact at the cochain level.
  Cochain unit;
  unit.degree = 0;
  for (int i = 0; i < c.cx.dim(0); ++i) unit.coeffs[i] = f.from_int(1);
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; i < c.cx.dim(n); ++i) {
      Cochain e = cochain_unit(n, i, f.from_int(1));
      if (!cochain_equal(cup(c.cx, unit, e), e) || !cochain_equal(cup(c.cx, e, unit), e)) {
        c.hard("unit law fails on " + element_label(c.p, c.cx.basis(n)[i]));
      }
    }
  }

  // Positive-degree products on cohomology.
  ProductTable t = ring_table(c.H);
  for (const auto& e : t.entries) {
    if (e.value.zero()) continue;
    std::string msg = "nonzero cup product of classes (" + std::to_string(e.deg_a) + "," +
                      std::to_string(e.idx_a) + ") and (" + std::to_string(e.deg_b) + "," +
                      std::to_string(e.idx_b) + ")";
    if (c.cls.s3) {
      c.hard(msg);
    } else {
      c.report(msg + " [outside (S3); conjecture-relevant]");
    }
  }

  // The vanishing mechanism behind the theorem: one-sided normal forms of
  // cocycles multiply to the zero cochain.
  if (c.cls.s3) {
    for (int n = 1; n <= top; ++n) {
      auto zn = kernel_cocycles(c, n);
      for (int m = 1; m <= top; ++m) {
        auto zm = kernel_cocycles(c, m);
        for (const Cochain& a : zn) {
          Cochain al = c.cx.normalize(a, MinimalComplex::Direction::leq);
          for (const Cochain& b : zm) {
            Cochain bg = c.cx.normalize(b, MinimalComplex::Direction::geq);
            Cochain prod = cup(c.cx, al, bg);
            if (!prod.zero())
              c.hard("phi_leq cup psi_geq nonzero in degrees (" + std::to_string(n) + "," +
                     std::to_string(m) + "): " + describe(c, prod));
          }
        }
      }
    }
  }
}

void check_bracket_gentle_cochain(Ctx& c) {
  if (!c.cls.gentle) {
    c.info("presentation is not gentle; nothing to check");
    return;
  }
  const Field& f = c.field();
  int top = c.cx.top_degree();
  for (int n = 2; n <= top; ++n) {
    for (int i = 0; i < c.cx.dim(n); ++i) {
      Cochain fe = cochain_unit(n, i, f.from_int(1));
      for (int m = 2; m <= top; ++m) {
        for (int j = 0; j < c.cx.dim(m); ++j) {
          Cochain ge = cochain_unit(m, j, f.from_int(1));
          for (int slot = 1; slot <= n; ++slot) {
            Cochain lit = circ_at(c.cx, fe, ge, slot, Variant::literal);
            if (!lit.zero()) {
              c.hard("literal circle product nonzero: " +
                     element_label(c.p, c.cx.basis(n)[i]) + " o_" + std::to_string(slot) + " " +
                     element_label(c.p, c.cx.basis(m)[j]) + " = " + describe(c, lit));
            }
            Cochain pe = circ_at(c.cx, fe, ge, slot, Variant::peeled);
            if (!cochain_equal(lit, pe)) {
              c.report("variant disagreement at " + element_label(c.p, c.cx.basis(n)[i]) + " o_" +
                       std::to_string(slot) + " " + element_label(c.p, c.cx.basis(m)[j]) +
                       ": peeled = " + describe(c, pe));
            }
          }
        }
      }
    }
  }
}

void check_bracket_gentle(Ctx& c) {
  if (!c.cls.gentle) {
    c.info("presentation is not gentle; nothing to check");
    return;
  }
  for (Variant v : {Variant::literal, Variant::peeled}) {
    ProductTable t = lie_table(c.H, v);
    for (const auto& e : t.entries) {
      if (e.deg_a <= 1 || e.deg_b <= 1) continue;
      if (!e.value.zero()) {
        c.hard("nonzero induced bracket of degree-(>1) classes (" + std::to_string(e.deg_a) +
               "," + std::to_string(e.idx_a) + ") x (" + std::to_string(e.deg_b) + "," +
               std::to_string(e.idx_b) + ") under " +
               (v == Variant::literal ? "literal" : "peeled"));
      }
    }
  }
}

void check_hh1_bracket(Ctx& c) {
  const Field& f = c.field();
  int top = c.cx.top_degree();
  for (int n = 2; n <= top; ++n) {
    for (int i = 0; i < c.cx.dim(n); ++i) {
      const CochainBasisElement& e = c.cx.basis(n)[i];
      Cochain fe = cochain_unit(n, i, f.from_int(1));
      Cochain g = arrow_indicator(c.cx, e.chain.arrows.front());
      std::string label = element_label(c.p, e);
      if (!c.H.is_cocycle(g)) c.hard("first-arrow indicator for " + label + " is not a cocycle");
      if (!cochain_equal(circ(c.cx, fe, g), fe)) c.hard("f o g != f for " + label);
      if (!circ(c.cx, g, fe).zero()) c.hard("g o f != 0 for " + label);
      if (!cochain_equal(bracket(c.cx, fe, g), fe)) c.hard("[f, g] != f for " + label);
      if (c.H.class_of(g).zero()) {
        c.report("indicator of arrow " + c.p.quiver().arrows[e.chain.arrows.front()].id +
                 " is a coboundary; its class cannot witness [HH^n, HH^1] = HH^n");
      }
    }
  }
}

void check_descent(Ctx& c) {
  const Field& f = c.field();
  int top = c.cx.top_degree();
  constexpr int kCap = 8;  // per-degree sample cap keeps fuzz runs bounded

  std::vector<std::vector<Cochain>> Z(top + 1), B(top + 1);
  for (int n = 0; n <= top; ++n) {
    Z[n] = kernel_cocycles(c, n);
    if (static_cast<int>(Z[n].size()) > kCap) Z[n].resize(kCap);
    if (n >= 1) {
      for (int j = 0; j < c.cx.dim(n - 1) && static_cast<int>(B[n].size()) < kCap; ++j) {
        Cochain b = c.cx.apply_delta(cochain_unit(n - 1, j, f.from_int(1)));
        if (!b.zero()) B[n].push_back(std::move(b));
      }
    }
  }

  auto expect_cocycle = [&](const Cochain& x, const std::string& what) {
    if (!c.H.is_cocycle(x)) c.hard(what + " is not a cocycle: " + describe(c, x));
  };
  auto expect_coboundary = [&](const Cochain& x, const std::string& what) {
    if (!c.H.is_coboundary(x)) c.hard(what + " is not a coboundary: " + describe(c, x));
  };

  for (int n = 0; n <= top; ++n) {
    for (int m = 0; m <= top; ++m) {
      for (const Cochain& a : Z[n]) {
        for (const Cochain& b : Z[m]) {
          expect_cocycle(cup(c.cx, a, b), "cup of cocycles");
          expect_cocycle(bracket(c.cx, a, b, Variant::literal), "literal bracket of cocycles");
          expect_cocycle(bracket(c.cx, a, b, Variant::peeled), "peeled bracket of cocycles");
        }
        for (const Cochain& b : B[m]) {
          expect_coboundary(cup(c.cx, a, b), "cocycle cup coboundary");
          expect_coboundary(cup(c.cx, b, a), "coboundary cup cocycle");
          expect_coboundary(bracket(c.cx, a, b, Variant::literal),
                            "literal bracket with coboundary");
          expect_coboundary(bracket(c.cx, b, a, Variant::literal),
                            "literal bracket with coboundary");
          expect_coboundary(bracket(c.cx, a, b, Variant::peeled),
                            "peeled bracket with coboundary");
          expect_coboundary(bracket(c.cx, b, a, Variant::peeled),
                            "peeled bracket with coboundary");
        }
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> ids = {
      "complex-valid", "normalization",  "cup-trivial", "bracket-gentle-cochain",
      "bracket-gentle", "hh1-bracket",   "descent",
  };
  return ids;
}

std::string verdict_name(VerdictReport::Verdict v) {
  switch (v) {
    case VerdictReport::Verdict::pass: return "pass";
    case VerdictReport::Verdict::fail: return "fail";
    case VerdictReport::Verdict::report_only: return "report-only";
  }
  return "?";
}

VerdictReport verify(const Presentation& p, const std::string& property) {
  Ctx c(p);
  if (property == "complex-valid") {
    check_complex_valid(c);
  } else if (property == "normalization") {
    check_normalization(c);
  } else if (property == "cup-trivial") {
    check_cup_trivial(c);
  } else if (property == "bracket-gentle-cochain") {
    check_bracket_gentle_cochain(c);
  } else if (property == "bracket-gentle") {
    check_bracket_gentle(c);
  } else if (property == "hh1-bracket") {
    check_hh1_bracket(c);
  } else if (property == "descent") {
    check_descent(c);
  } else {
    throw std::invalid_argument("unknown property '" + property + "'");
  }

  VerdictReport r;
  r.property = property;
  r.digest = p.digest();
  r.findings = std::move(c.findings);
  bool any_hard = false, any_report = false;
  for (const Finding& fd : r.findings) {
    any_hard |= fd.kind == Finding::Kind::hard;
    any_report |= fd.kind == Finding::Kind::report;
  }
  r.verdict = any_hard ? VerdictReport::Verdict::fail
                       : (any_report ? VerdictReport::Verdict::report_only
                                     : VerdictReport::Verdict::pass);
  if (r.verdict != VerdictReport::Verdict::pass) r.counterexample = p.emit();
  return r;
}

namespace {

std::uint64_t derive_seed(std::uint64_t base, int index) {
  Rng r(base ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(index + 1)));
  return r.next();
}

}  // namespace

FuzzResult fuzz(const RandomSpec& spec, const std::string& property, int count, int jobs,
                const std::string& emit_dir) {
  FuzzResult res;
  res.property = property;
  res.spec = spec;
  res.count = count;

  std::vector<VerdictReport> slots(count);
  std::vector<char> passed(count, 0);
  run_indexed(count, jobs, [&](int k) {
    std::uint64_t s = derive_seed(spec.seed, k);
    Rng r(s);
    RandomSpec it = spec;
    it.vertices = spec.vertices <= 2 ? spec.vertices : 2 + r.below(spec.vertices - 1);
    it.arrows = spec.arrows <= 1 ? spec.arrows : 1 + r.below(spec.arrows);
    if (it.target == TargetClass::string_class || it.target == TargetClass::gentle) {
      // Degree caps bound how many arrows an acyclic quiver can carry.
      int cap = 2 * (it.vertices - 1);
      if (it.arrows > cap) it.arrows = cap;
    }
    it.seed = r.next();
    VerdictReport rep;
    try {
      Presentation p = random_presentation(it);
      rep = verify(p, property);
    } catch (const GenerationExhausted& e) {
      rep.property = property;
      rep.verdict = VerdictReport::Verdict::fail;
      rep.findings.push_back({Finding::Kind::hard, e.what()});
    }
    rep.seed = it.seed;
    rep.replay = "hh random --class " + target_class_name(it.target) + " --vertices " +
                 std::to_string(it.vertices) + " --arrows " + std::to_string(it.arrows) +
                 " --density " + std::to_string(it.density) + " --seed " +
                 std::to_string(it.seed) + " --emit ce.quiver && hh verify ce.quiver --property " +
                 property;
    passed[k] = rep.verdict == VerdictReport::Verdict::pass ? 1 : 0;
    slots[k] = std::move(rep);
  });

  for (int k = 0; k < count; ++k) {
    if (passed[k]) {
      ++res.passes;
      continue;
    }
    if (slots[k].verdict == VerdictReport::Verdict::fail) {
      ++res.failures;
    } else {
      ++res.reports;
    }
    res.findings.push_back(std::move(slots[k]));
  }

  if (!emit_dir.empty()) {
    for (const VerdictReport& rep : res.findings) {
      if (rep.verdict != VerdictReport::Verdict::fail || rep.counterexample.empty()) continue;
      std::string path =
          emit_dir + "/counterexample-" + property + "-" + rep.digest + ".quiver";
      std::ofstream out(path);
      out << "# property: " << rep.property << "\n";
      out << "# seed: " << rep.seed << "\n";
      out << "# replay: " << rep.replay << "\n";
      out << rep.counterexample;
      res.counterexample_file = path;
      break;
    }
  }
  return res;
}

}  // namespace hh
