// Products on minimal cochains and the induced products on cohomology:
// cup, the circle products o_i, their signed sum o, and the bracket
// [f,g] = f o g - (-1)^{(n-1)(m-1)} g o f.
//
// o_i comes in two variants. `literal` substitutes an inserted value only
// when it is a single arrow whose splice is again a chain. `peeled` follows
// the comparison-morphism composite instead: at the first slot a longer
// inserted path q = q'b keeps b in the chain and moves q' out as a left
// factor, at the last slot q = b q' moves q' out to the right; interior
// slots never peel. On a degree-1 target the single slot peels its leading
// arrow. The variants agree whenever every inserted value is a single arrow.

#pragma once

#include "hh/cohomology.hpp"

namespace hh {

enum class Variant { literal, peeled };

Cochain cup(const MinimalComplex& cx, const Cochain& f, const Cochain& g);
// i is 1-based; throws std::out_of_range for i outside 1..deg f.
Cochain circ_at(const MinimalComplex& cx, const Cochain& f, const Cochain& g, int i,
                Variant variant = Variant::literal);
Cochain circ(const MinimalComplex& cx, const Cochain& f, const Cochain& g,
             Variant variant = Variant::literal);
Cochain bracket(const MinimalComplex& cx, const Cochain& f, const Cochain& g,
                Variant variant = Variant::literal);

// The degree-1 cochain a |-> a for one arrow; the mechanism behind the
// nonvanishing brackets [f, g] = f.
Cochain arrow_indicator(const MinimalComplex& cx, int arrow);

CohomologyClass induced_cup(const Cohomology& H, const CohomologyClass& a,
                            const CohomologyClass& b);
CohomologyClass induced_bracket(const Cohomology& H, const CohomologyClass& a,
                                const CohomologyClass& b, Variant variant = Variant::literal);

struct ProductTable {
  enum class Kind { cup, bracket };
  struct Entry {
    int deg_a = 0, idx_a = 0;
    int deg_b = 0, idx_b = 0;
    CohomologyClass value;
  };
  Kind kind = Kind::cup;
  Variant variant = Variant::literal;
  std::vector<Entry> entries;  // all ordered positive-degree basis-class pairs
  bool trivial = true;         // every entry is the zero-class
};

ProductTable ring_table(const Cohomology& H, int jobs = 1);
ProductTable lie_table(const Cohomology& H, Variant variant = Variant::literal, int jobs = 1);
// Triviality over the entries whose degrees are both > min_degree.
bool table_trivial_above(const ProductTable& t, int min_degree);

}  // namespace hh
