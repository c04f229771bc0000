#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hh/complex.hpp"

using hh::Cochain;
using hh::Matrix;
using hh::MinimalComplex;
using hh::Scalar;
using hh::TriType;
using hhtest::elem;
using hhtest::fixture_bundle;
using hhtest::path_of;

namespace {

Cochain all_ones(const hhtest::Bundle& b, int n) {
  Cochain f;
  f.degree = n;
  for (int i = 0; i < b.cx.dim(n); ++i) {
    f = cochain_add(f, hh::cochain_unit(n, i, b.pres.field().from_int(1)), b.pres.field());
  }
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("complex");

TEST_CASE("cochain space dimensions") {
  auto dims = [](const char* name) {
    auto& b = fixture_bundle(name);
    std::vector<int> out;
    for (int n = 0; n <= b.cx.top_degree(); ++n) out.push_back(b.cx.dim(n));
    return out;
  };
  CHECK(dims("E5") == std::vector<int>{5, 6, 1, 1, 1});
  CHECK(dims("D3") == std::vector<int>{3, 3, 1});
  CHECK(dims("K2") == std::vector<int>{2, 4});
  CHECK(dims("A2") == std::vector<int>{2, 1});
  CHECK(dims("A3R") == std::vector<int>{3, 2, 0});
  CHECK(dims("SD3") == std::vector<int>{3, 5, 1});
  CHECK(dims("SD3M") == std::vector<int>{3, 5, 1});
}

TEST_CASE("the smallest differential, entry by entry") {
  auto& b = fixture_bundle("A2");
  const Matrix& d0 = b.cx.delta(0);
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 2);
  CHECK(d0.at(0, 0) == -1);  // (a|a) loses the source unit
  CHECK(d0.at(0, 1) == 1);   // and gains the target unit
}

TEST_CASE("differentials square to zero with sign entries") {
  for (const auto& name : hhtest::fixture_names()) {
    auto& b = fixture_bundle(name);
    for (int n = 0; n <= b.cx.top_degree(); ++n) {
      const Matrix& d = b.cx.delta(n);
      for (const auto& [pos, v] : d.entries()) CHECK((v == 1 || v == -1));
      Matrix dd = multiply(b.cx.delta(n + 1), d, b.pres.field());
      CHECK(dd.is_zero());
    }
  }
}

TEST_CASE("rank of the first differential of the running example") {
  auto& b = fixture_bundle("E5");
  CHECK(rank(b.cx.delta(0), b.pres.field()) == 4);
  CHECK(rank(b.cx.delta(1), b.pres.field()) == 0);
}

TEST_CASE("minus wins the value classification") {
  auto& e5 = fixture_bundle("E5");
  int i = e5.cx.basis_index(2, path_of(e5.pres, "a2 a3"), path_of(e5.pres, "b"));
  REQUIRE(i >= 0);
  CHECK(e5.cx.basis(2)[i].tri_type == TriType::zero);

  auto& k2 = fixture_bundle("K2");
  int diag = k2.cx.basis_index(1, path_of(k2.pres, "a"), path_of(k2.pres, "a"));
  int off = k2.cx.basis_index(1, path_of(k2.pres, "a"), path_of(k2.pres, "b"));
  CHECK(k2.cx.basis(1)[diag].tri_type == TriType::minus);  // both ends match, minus wins
  CHECK(k2.cx.basis(1)[off].tri_type == TriType::zero);

  auto& sd3 = fixture_bundle("SD3");
  int m = sd3.cx.basis_index(2, path_of(sd3.pres, "al be"), path_of(sd3.pres, "al de"));
  CHECK(sd3.cx.basis(2)[m].tri_type == TriType::minus);

  auto& sd3m = fixture_bundle("SD3M");
  int pl = sd3m.cx.basis_index(2, path_of(sd3m.pres, "al be"), path_of(sd3m.pres, "de be"));
  CHECK(sd3m.cx.basis(2)[pl].tri_type == TriType::plus);
}

TEST_CASE("degree-one values never end on the chain arrow alone") {
  // a plus-type pair (a, q a) would force the cycle q; triangularity forbids it
  for (const auto& name : hhtest::fixture_names()) {
    auto& b = fixture_bundle(name);
    for (const auto& e : b.cx.basis(1)) CHECK(e.tri_type != TriType::plus);
  }
}

TEST_CASE("evaluate reads off parallel values") {
  auto& b = fixture_bundle("E5");
  Cochain f2 = elem(b, 2, "a2 a3", "b");
  auto combo = b.cx.evaluate(f2, path_of(b.pres, "a2 a3"));
  REQUIRE(combo.terms.size() == 1);
  int bi = b.alg.basis().index_of(path_of(b.pres, "b"));
  CHECK(combo.terms.count(bi) == 1);
  CHECK(combo.terms.at(bi) == 1);
  CHECK(b.cx.evaluate(f2, path_of(b.pres, "a1 a2")).zero());
}

TEST_CASE("apply_delta agrees with the matrix") {
  auto& b = fixture_bundle("D3");
  for (int i = 0; i < b.cx.dim(1); ++i) {
    Cochain f = hh::cochain_unit(1, i, b.pres.field().from_int(1));
    Cochain df = b.cx.apply_delta(f);
    const Matrix& d = b.cx.delta(1);
    for (int r = 0; r < d.rows(); ++r) {
      Scalar want = d.at(r, i);
      Scalar got = df.coeffs.count(r) ? df.coeffs.at(r) : Scalar(0);
      CHECK(got == want);
    }
  }
}

TEST_CASE("one-sided shifts with known outcomes") {
  // parallel arrows: shifting (a|a) leaves exactly -(b|b)
  auto& k2 = fixture_bundle("K2");
  int i = k2.cx.basis_index(1, path_of(k2.pres, "a"), path_of(k2.pres, "a"));
  Cochain shifted = k2.cx.shift_plus(1, i);
  CHECK(cochain_equal(shifted, hhtest::scaled(k2, -1, elem(k2, 1, "b", "b"))));

  // the shift consumes the whole element when the value rides the chain
  auto& sd3 = fixture_bundle("SD3");
  int m = sd3.cx.basis_index(2, path_of(sd3.pres, "al be"), path_of(sd3.pres, "al de"));
  CHECK(sd3.cx.shift_plus(2, m).zero());

  auto& sd3m = fixture_bundle("SD3M");
  int pl = sd3m.cx.basis_index(2, path_of(sd3m.pres, "al be"), path_of(sd3m.pres, "de be"));
  CHECK(sd3m.cx.shift_minus(2, pl).zero());

  // wrong type is refused
  int off = k2.cx.basis_index(1, path_of(k2.pres, "a"), path_of(k2.pres, "b"));
  CHECK_THROWS_AS(k2.cx.shift_plus(1, off), std::invalid_argument);
  CHECK_THROWS_AS(k2.cx.shift_minus(1, off), std::invalid_argument);
}

TEST_CASE("shifts differ from their element by an exact coboundary") {
  for (const auto& name : hhtest::fixture_names()) {
    auto& b = fixture_bundle(name);
    for (int n = 1; n <= b.cx.top_degree(); ++n) {
      for (int i = 0; i < b.cx.dim(n); ++i) {
        const auto& e = b.cx.basis(n)[i];
        if (e.tri_type == TriType::minus) {
          Cochain f = hh::cochain_unit(n, i, b.pres.field().from_int(1));
          Cochain diff = cochain_sub(f, b.cx.shift_plus(n, i), b.pres.field());
          Cochain w;
          CHECK(fixture_bundle(name).H.is_coboundary(diff, &w));
        }
      }
    }
  }
}

TEST_CASE("normalization is a coboundary correction") {
  for (const auto& name : hhtest::fixture_names()) {
    auto& b = fixture_bundle(name);
    for (int n = 0; n <= b.cx.top_degree(); ++n) {
      Cochain phi = all_ones(b, n);
      for (auto dir : {MinimalComplex::Direction::leq, MinimalComplex::Direction::geq}) {
        auto [norm, h] = b.cx.normalize_with_witness(phi, dir);
        Cochain back = cochain_sub(phi, norm, b.pres.field());
        if (h.zero()) {
          CHECK(back.zero());
        } else {
          CHECK(cochain_equal(back, b.cx.apply_delta(h)));
        }
      }
    }
  }
}

TEST_CASE("normalized supports obey the one-sided forms") {
  // all fixtures admit one relation-free continuation per arrow at most, so
  // the support shapes hold at every degree past one
  for (const auto& name : hhtest::fixture_names()) {
    auto& b = fixture_bundle(name);
    for (int n = 2; n <= b.cx.top_degree(); ++n) {
      Cochain phi = all_ones(b, n);
      Cochain leq = b.cx.normalize(phi, MinimalComplex::Direction::leq);
      for (const auto& [i, c] : leq.coeffs) {
        CHECK(b.cx.basis(n)[i].tri_type != TriType::minus);
      }
      Cochain geq = b.cx.normalize(phi, MinimalComplex::Direction::geq);
      for (const auto& [i, c] : geq.coeffs) {
        CHECK(b.cx.basis(n)[i].tri_type != TriType::plus);
      }
    }
  }
}

TEST_CASE("labels render chain and value") {
  auto& b = fixture_bundle("E5");
  int i = b.cx.basis_index(2, path_of(b.pres, "a2 a3"), path_of(b.pres, "b"));
  CHECK(element_label(b.pres, b.cx.basis(2)[i]) == "(a2 a3 | b)");
  int j = b.cx.basis_index(0, path_of(b.pres, "e_1"), path_of(b.pres, "e_1"));
  CHECK(element_label(b.pres, b.cx.basis(0)[j]) == "(e_1 | e_1)");
}

TEST_SUITE_END();
