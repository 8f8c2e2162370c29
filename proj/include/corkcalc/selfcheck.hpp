#pragma once

#include <random>
#include <string>
#include <vector>

#include "corkcalc/laurent2.hpp"

namespace corkcalc {

// Deliberate corruptions, used to prove that the self-check notices them.
struct SelfCheckFaults {
  bool flip_g1_sign = false;
  bool flip_det_b = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the invariant suite in a fixed order with fixed seeds.
std::vector<CheckResult> run_selfcheck(const SelfCheckFaults& faults = {});

struct RandomPolyShape {
  int max_terms = 6;
  int min_exponent = -5;
  int max_exponent = 5;
  int max_numerator = 9;
  int max_denominator = 4;
};

// Random polynomial with up to shape.max_terms terms (possibly zero).
LaurentPoly2 random_laurent(std::mt19937_64& rng, const RandomPolyShape& shape = {});

}  // namespace corkcalc
