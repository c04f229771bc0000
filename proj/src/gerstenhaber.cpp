#include "hh/gerstenhaber.hpp"

#include <cassert>
#include <stdexcept>

#include "hh/parallel.hpp"

namespace hh {

namespace {

void accumulate(std::map<int, Scalar>& acc, int key, const Scalar& v, const Field& f) {
  auto it = acc.find(key);
  if (it == acc.end()) {
    if (!f.is_zero(v)) acc[key] = v;
    return;
  }
  it->second = f.add(it->second, v);
  if (f.is_zero(it->second)) acc.erase(it);
}

// Adds coeff * (combo of value paths) to `out` on the chain with index ci.
void add_on_chain(const MinimalComplex& cx, int degree, const Path& chain, const PathCombo& combo,
                  const Scalar& coeff, std::map<int, Scalar>& out, const Field& f) {
  const PathBasis& pb = cx.algebra().basis();
  for (const auto& [pi, c] : combo.terms) {
    int bi = cx.basis_index(degree, chain, pb.path(pi));
    assert(bi >= 0);
    accumulate(out, bi, f.mul(coeff, c), f);
  }
}

PathCombo combo_mul(const PathBasis& pb, const Field& f, const PathCombo& a, const PathCombo& b) {
  PathCombo out;
  for (const auto& [pa, ca] : a.terms) {
    for (const auto& [pb_i, cb] : b.terms) {
      auto prod = pb.multiply(pa, pb_i);
      if (!prod) continue;
      accumulate(out.terms, *prod, f.mul(ca, cb), f);
    }
  }
  return out;
}

PathCombo combo_of_path(int pi, const Field& f) {
  PathCombo out;
  out.terms[pi] = f.from_int(1);
  return out;
}

Path subpath(const Presentation& p, const Path& c, int begin, int end) {
  Path out;
  out.source = begin == 0 ? c.source : p.quiver().arrows[c.arrows[begin - 1]].target;
  out.arrows.assign(c.arrows.begin() + begin, c.arrows.begin() + end);
  return out;
}

Cochain from_acc(int degree, std::map<int, Scalar> acc) {
  Cochain out;
  out.degree = degree;
  out.coeffs = std::move(acc);
  return out;
}

}  // namespace

Cochain cup(const MinimalComplex& cx, const Cochain& f, const Cochain& g) {
  const Presentation& p = cx.algebra().pres();
  const Field& fld = p.field();
  const PathBasis& pb = cx.algebra().basis();
  int n = f.degree, m = g.degree;
  int N = n + m;
  std::map<int, Scalar> acc;
  for (const Path& c : cx.algebra().chains(N)) {
    Path left = subpath(p, c, 0, n);
    Path right = subpath(p, c, n, N);
    PathCombo fv = cx.evaluate(f, left);
    if (fv.zero()) continue;
    PathCombo gv = cx.evaluate(g, right);
    if (gv.zero()) continue;
    add_on_chain(cx, N, c, combo_mul(pb, fld, fv, gv), fld.from_int(1), acc, fld);
  }
  return from_acc(N, std::move(acc));
}

Cochain circ_at(const MinimalComplex& cx, const Cochain& f, const Cochain& g, int i,
                Variant variant) {
  const Presentation& p = cx.algebra().pres();
  const Field& fld = p.field();
  const PathBasis& pb = cx.algebra().basis();
  int n = f.degree, m = g.degree;
  if (i < 1 || i > n) throw std::out_of_range("slot index " + std::to_string(i));
  if (m == 0) return Cochain{n - 1, {}};  // a trivial-path factor is zero here

  int N = n + m - 1;
  std::map<int, Scalar> acc;
  const bool at_first = i == 1;
  const bool at_last = i == n;
  for (const Path& c : cx.algebra().chains(N)) {
    Path window = subpath(p, c, i - 1, i - 1 + m);
    PathCombo gv = cx.evaluate(g, window);
    for (const auto& [qi, cq] : gv.terms) {
      const Path& q = pb.path(qi);
      const bool peel = variant == Variant::peeled && (at_first || at_last);
      if (!peel && q.length() != 1) continue;

      int kept;            // the arrow that stays in the slot
      Path rest;           // the peeled-off factor (trivial when q is an arrow)
      bool rest_on_left;   // which side of f's value the factor multiplies
      if (!peel || !at_last) {
        // interior/literal, or the first slot: keep q's trailing arrow.
        kept = q.arrows.back();
        rest = subpath(p, q, 0, q.length() - 1);
        rest_on_left = true;
      } else {
        // last slot (including the one slot of a degree-1 f): keep the
        // leading arrow, peel the tail to the right.
        kept = q.arrows.front();
        rest = subpath(p, q, 1, q.length());
        rest_on_left = false;
      }

      Path spliced;
      spliced.source = at_first ? p.quiver().arrows[kept].source : c.source;
      spliced.arrows.assign(c.arrows.begin(), c.arrows.begin() + (i - 1));
      spliced.arrows.push_back(kept);
      spliced.arrows.insert(spliced.arrows.end(), c.arrows.begin() + (i - 1 + m), c.arrows.end());
      if (cx.algebra().chain_index(n, spliced) < 0) continue;

      PathCombo fv = cx.evaluate(f, spliced);
      if (fv.zero()) continue;
      if (!rest.trivial()) {
        int ri = pb.index_of(rest);
        assert(ri >= 0);
        PathCombo rc = combo_of_path(ri, fld);
        fv = rest_on_left ? combo_mul(pb, fld, rc, fv) : combo_mul(pb, fld, fv, rc);
        if (fv.zero()) continue;
      }
      add_on_chain(cx, N, c, fv, cq, acc, fld);
    }
  }
  return from_acc(N, std::move(acc));
}

Cochain circ(const MinimalComplex& cx, const Cochain& f, const Cochain& g, Variant variant) {
  const Field& fld = cx.algebra().pres().field();
  int n = f.degree, m = g.degree;
  Cochain out;
  out.degree = std::max(n + m - 1, 0);
  for (int i = 1; i <= n; ++i) {
    Cochain term = circ_at(cx, f, g, i, variant);
    if (((i - 1) * (m - 1)) % 2 != 0) term = cochain_scale(fld.from_int(-1), term, fld);
    out = cochain_add(out, term, fld);
  }
  return out;
}

Cochain bracket(const MinimalComplex& cx, const Cochain& f, const Cochain& g, Variant variant) {
  const Field& fld = cx.algebra().pres().field();
  int n = f.degree, m = g.degree;
  Cochain fg = circ(cx, f, g, variant);
  Cochain gf = circ(cx, g, f, variant);
  if (((n - 1) * (m - 1)) % 2 == 0) gf = cochain_scale(fld.from_int(-1), gf, fld);
  return cochain_add(fg, gf, fld);
}

Cochain arrow_indicator(const MinimalComplex& cx, int arrow) {
  const Presentation& p = cx.algebra().pres();
  Path a{p.quiver().arrows[arrow].source, {arrow}};
  int bi = cx.basis_index(1, a, a);
  assert(bi >= 0);
  return cochain_unit(1, bi, p.field().from_int(1));
}

CohomologyClass induced_cup(const Cohomology& H, const CohomologyClass& a,
                            const CohomologyClass& b) {
  return H.class_of(cup(H.complex(), a.representative, b.representative));
}

CohomologyClass induced_bracket(const Cohomology& H, const CohomologyClass& a,
                                const CohomologyClass& b, Variant variant) {
  return H.class_of(bracket(H.complex(), a.representative, b.representative, variant));
}

namespace {

ProductTable build_table(const Cohomology& H, ProductTable::Kind kind, Variant variant, int jobs) {
  ProductTable t;
  t.kind = kind;
  t.variant = variant;
  int top = H.top_degree();
  // Warm every lazy cache the workers will read; afterwards all shared state
  // is immutable.
  for (int d = 0; d <= 2 * top + 1; ++d) H.dim(d);

  for (int n = 1; n <= top; ++n) {
    for (int ai = 0; ai < H.dim(n); ++ai) {
      for (int m = 1; m <= top; ++m) {
        for (int bi = 0; bi < H.dim(m); ++bi) {
          ProductTable::Entry e;
          e.deg_a = n;
          e.idx_a = ai;
          e.deg_b = m;
          e.idx_b = bi;
          t.entries.push_back(std::move(e));
        }
      }
    }
  }
  run_indexed(static_cast<int>(t.entries.size()), jobs, [&](int k) {
    ProductTable::Entry& e = t.entries[k];
    const CohomologyClass& a = H.basis(e.deg_a)[e.idx_a];
    const CohomologyClass& b = H.basis(e.deg_b)[e.idx_b];
    e.value = kind == ProductTable::Kind::cup ? induced_cup(H, a, b)
                                              : induced_bracket(H, a, b, variant);
  });
  t.trivial = true;
  for (const auto& e : t.entries) {
    if (!e.value.zero()) {
      t.trivial = false;
      break;
    }
  }
  return t;
}

}  // namespace

ProductTable ring_table(const Cohomology& H, int jobs) {
  return build_table(H, ProductTable::Kind::cup, Variant::literal, jobs);
}

ProductTable lie_table(const Cohomology& H, Variant variant, int jobs) {
  return build_table(H, ProductTable::Kind::bracket, variant, jobs);
}

bool table_trivial_above(const ProductTable& t, int min_degree) {
  for (const auto& e : t.entries) {
    if (e.deg_a > min_degree && e.deg_b > min_degree && !e.value.zero()) return false;
  }
  return true;
}

}  // namespace hh
