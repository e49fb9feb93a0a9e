#pragma once

namespace projshape::tol {

// Scale-free thresholds; homogeneous coordinates carry no natural scale, so
// determinant and denominator tests are applied after unit-normalization.
inline constexpr double nonzero = 1e-12;        // minimum norm of a homogeneous vector
inline constexpr double unit = 1e-9;            // unit-norm / equality-mod-sign slack
inline constexpr double det = 1e-10;            // normalized determinants and denominators
inline constexpr double gap = 1e-8;             // spectral gap, relative to trace(J)
inline constexpr double invertible = 1e-12;     // min eigenvalue of G, relative to max
inline constexpr double pinv_rank = 1e-10;      // pseudo-inverse rank cutoff, relative
inline constexpr double rotation_angle = 1e-8;  // identity / near-pi rotation detection
inline constexpr double alignment = 0.1;        // concentration floor for sign alignment

}  // namespace projshape::tol
