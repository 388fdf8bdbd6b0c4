#pragma once

namespace csnd {

/// Relative threshold for all floating-point sign decisions on eigenvalues.
///
/// With s = scale(K) = max |entry| (1 for the zero matrix), an eigenvalue mu
/// counts as strictly negative iff mu < -rel_eps * s and as nonpositive iff
/// mu <= rel_eps * s. Every verdict is therefore invariant under rescaling
/// the kernel by a positive constant.
struct TolerancePolicy {
  double rel_eps = 1e-9;
};

}  // namespace csnd
