#ifndef M21_IDEAL_HPP
#define M21_IDEAL_HPP

#include <vector>

#include "m21/polynomial.hpp"

namespace m21 {

/// A finitely generated ideal, presented by its generator list. Zero
/// generators are discarded at construction; `homogeneous` records whether
/// every surviving generator is homogeneous (required by the graded ops).
struct IdealPresentation {
  Ring ring;
  std::vector<Polynomial> generators;
  bool homogeneous = true;

  static IdealPresentation make(Ring ring, std::vector<Polynomial> gens);
};

} // namespace m21

#endif
