#pragma once

#include <string>
#include <vector>

#include "vgit/assignments.hpp"
#include "vgit/linearization.hpp"

namespace vgit {

// Identification of the chamber's compactification with known models.
struct ModelID {
  enum class Tag {
    Hassett,      // gamma > max(1/2, 1-c_i): the weighted space with weights c
    MbarN,        // Hassett with every pair c_i + c_j > 1: no collisions at all
    Boggi,        // d = n with sigma(I) = |I| for 2 <= |I| <= n-2
    TripleStyle,  // gamma <= 1/2 but no marks at singular points: multinodal
                  // degenerations only, the space-level Hassett lookalike
    Unidentified
  } tag = Tag::Unidentified;
  std::vector<Rational> hassett_weights;  // for Hassett / MbarN
  std::string summary;
};

std::string to_string(ModelID::Tag tag);

ModelID identify(const Linearization& L, const EnumLimits& lim = EnumLimits::from_env());

// Minimal degree d whose cross-section point gamma(d) = (d+1-sum c)/(d-1)
// clears max(1/2, 1-c_i), with the weights nudged inside their Hassett chamber
// when the exact point lands on a wall.
struct HassettDegree {
  int d = 0;
  Rational gamma;
  std::vector<Rational> weights;
  bool perturbed = false;
};
HassettDegree hassett_embedding_degree(const std::vector<Rational>& c,
                                       const EnumLimits& lim = EnumLimits::from_env());

// A generic point of the chamber contracting exactly the unmarked components:
// d = n, c_i = 1 - eps, gamma = (1 + d*eps)/(d-1), eps defaulting to 1/(10n)
// and shrinking until the point is generic with the full sigma identity.
Linearization boggi_params(int n, const EnumLimits& lim = EnumLimits::from_env());

}  // namespace vgit
