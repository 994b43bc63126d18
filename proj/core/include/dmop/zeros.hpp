#pragma once

#include <vector>

#include "dmop/bigfloat.hpp"
#include "dmop/polynomial.hpp"
#include "dmop/weights.hpp"

namespace dmop {

// Minimal complex value over BigFloat (std::complex is only specified for
// the built-in floating types).
struct Cplx {
  BigFloat re;
  BigFloat im;
};

BigFloat abs_c(const Cplx& z);

// All roots of p (with multiplicity) by the Aberth-Ehrlich simultaneous
// iteration at the given working precision, sorted by (re, im).
// Deterministic: fixed starting configuration, fixed sweep order. The
// iteration stops when every relative correction is below 2^(-bits/2); a
// root whose residual is already below 2^(-3 bits/4) at the evaluation
// scale is treated as converged (this is what terminates on root clusters).
// Throws InvalidParameter for the zero polynomial, NoConvergence when the
// iteration budget runs out.
std::vector<Cplx> find_zeros(const Polynomial& p, unsigned bits);

// Runs find_zeros at doubling precisions (start_bits, 2*start_bits, ...,
// <= max_bits) until two consecutive runs agree to agree_tol in every root,
// then returns the higher-precision run. Throws NoConvergence when the
// precision ladder is exhausted without agreement.
std::vector<Cplx> find_zeros_adaptive(const Polynomial& p, unsigned start_bits = 256,
                                      unsigned max_bits = 4096,
                                      const Scalar& agree_tol = Scalar(1) / pow_int(Scalar(10), 12));

struct ZeroInfo {
  BigFloat re;
  BigFloat im;
  bool is_real = false;  // |im| <= real_tol
  int hull = -1;         // index of the lattice hull containing re (real zeros only)
};

struct ZeroReport {
  std::vector<ZeroInfo> zeros;     // sorted by (re, im)
  std::vector<int> per_hull;       // real zeros inside each lattice hull
  int real_count = 0;
  int complex_count = 0;
  BigFloat max_im_real;            // largest |im| among zeros classified real
  bool conjugates_ok = false;      // nonreal zeros pair into conjugates
  BigFloat min_pair_distance;      // smallest distance between two zeros (simplicity margin)
};

// Classifies zeros against the system's lattice hulls. A zero is real when
// |im| <= real_tol; a real zero is attributed to the first hull containing
// its real part with real_tol slack on both endpoints.
ZeroReport zero_report(const std::vector<Cplx>& zeros, const WeightSystem& system,
                       const Scalar& real_tol);

}  // namespace dmop
