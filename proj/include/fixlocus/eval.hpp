// eval.hpp
// Batch evaluation kernels. The randomized identity checks (Schwartz-Zippel
// agreement, fiber-shift sampling) evaluate the same polynomial at many
// points; that loop is data-parallel, so it ships in two builds: a serial
// reference and an OpenMP version. The parallel kernel is the one callers
// use; the serial one is kept as the oracle the tests and the benchmark
// compare against. Results are exact rationals, so agreement means byte
// equality, not tolerance.
#pragma once

#include <span>
#include <vector>

#include "fixlocus/polynomial.hpp"

namespace fixlocus {

// Reference implementation: plain loop, no threading.
std::vector<Rational> evaluate_batch_serial(const Polynomial& p,
                                            std::span<const RationalPoint> points);

// OpenMP kernel; bit-identical to the serial reference.
std::vector<Rational> evaluate_batch(const Polynomial& p,
                                     std::span<const RationalPoint> points);

// Images of many points under a polynomial map (component-major loop).
std::vector<RationalPoint> map_batch_serial(std::span<const Polynomial> components,
                                            std::span<const RationalPoint> points);
std::vector<RationalPoint> map_batch(std::span<const Polynomial> components,
                                     std::span<const RationalPoint> points);

// True iff p and q agree at every point. Exact, parallel over points.
bool agree_on_points(const Polynomial& p, const Polynomial& q,
                     std::span<const RationalPoint> points);

}  // namespace fixlocus
