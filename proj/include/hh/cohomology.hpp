// Hochschild cohomology groups from the minimal complex: dimensions, class
// bases, and reduction of cocycles modulo coboundaries.

#pragma once

#include <stdexcept>
#include <vector>

#include "hh/complex.hpp"

namespace hh {

struct CohomologyClass {
  int degree = 0;
  Cochain representative;            // always a cocycle
  std::vector<Scalar> coordinates;   // against the session's class basis
  Cochain coboundary_witness;        // degree n-1 preimage when the class is zero

  bool zero() const {
    for (const auto& c : coordinates) {
      if (c != 0) return false;
    }
    return true;
  }
};

struct NotACocycle : std::runtime_error {
  Cochain boundary;  // the nonzero delta of the offending cochain
  explicit NotACocycle(Cochain b)
      : std::runtime_error("cochain is not a cocycle"), boundary(std::move(b)) {}
};

struct HHSummary {
  std::vector<int> dims;  // degrees 0 .. top+1 (the final entry is always 0)
  std::vector<std::vector<CohomologyClass>> bases;
  long long euler = 0;  // alternating sum of the cochain space dimensions
};

class Cohomology {
 public:
  explicit Cohomology(const MinimalComplex& cx);

  const MinimalComplex& complex() const { return *cx_; }
  int top_degree() const { return cx_->top_degree(); }

  int dim(int n) const;  // 0 past the top degree
  const std::vector<CohomologyClass>& basis(int n) const;

  bool is_cocycle(const Cochain& c) const;
  // Explicit coboundary coefficients when c is one.
  bool is_coboundary(const Cochain& c, Cochain* witness = nullptr) const;

  // Reduce a cocycle modulo the image; throws NotACocycle otherwise.
  CohomologyClass class_of(const Cochain& c) const;

  HHSummary summary() const;

 private:
  struct DegreeData {
    std::vector<CohomologyClass> classes;
    Matrix image_and_reps;  // columns: delta^{n-1}, then class representatives
    int image_cols = 0;
  };

  const MinimalComplex* cx_;
  mutable std::map<int, DegreeData> cache_;
  static const std::vector<CohomologyClass> no_classes_;

  const DegreeData& degree_data(int n) const;
};

}  // namespace hh
