#pragma once

namespace hmmeb {

/// log2(e): converts nats to bits.
inline constexpr double kLog2E = 1.4426950408889634074;

/// Binary entropy h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Inverse of h restricted to [0, 1/2]; bracketed bisection to 1e-12.
double binary_entropy_inv(double t);

/// Binary convolution a*b = a(1-b) + b(1-a).
double convolve(double a, double b);

/// The MGL function phi(t) = h(alpha * h^{-1}(t)); nondecreasing and convex
/// in t for alpha in [0, 1/2].
double mgl_phi(double t, double alpha);

}  // namespace hmmeb
