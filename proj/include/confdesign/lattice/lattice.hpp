#pragma once

#include <string>
#include <vector>

#include "confdesign/algebra/matrix.hpp"
#include "confdesign/qforms/qseries.hpp"
#include "confdesign/rootsys/rootsys.hpp"

namespace confdesign {

using IVec = std::vector<long>;

/// Lattice given by a symmetric positive definite Gram matrix; vectors are
/// integer coordinate vectors in the Gram basis.
struct Lattice {
  std::string name;
  QMatrix gram;

  int dim() const { return static_cast<int>(gram.rows()); }
  /// Throws std::domain_error unless gram is symmetric positive definite.
  void validate() const;
  Rat inner(const IVec& a, const IVec& b) const;
};

Lattice make_lattice(const std::string& name, const QMatrix& gram);
/// Text format: '#' comment lines, the dimension, then the rows.
Lattice load_lattice(const std::string& path);
/// The lattice with Gram matrix U G U^T (U unimodular).
Lattice base_change(const Lattice& l, const std::vector<IVec>& u);

struct Shell {
  Lattice lattice;
  Rat norm;
  std::vector<IVec> vectors;  // sorted

  bool negation_closed() const;
};

/// Every x with x^T G x = norm, by exact Fincke-Pohst enumeration.
Shell shell_enum(const Lattice& l, const Rat& norm, unsigned threads = 1);
/// All x with x^T G x <= bound, sorted.
std::vector<IVec> enumerate_ball(const Lattice& l, const Rat& bound, unsigned threads = 1);

/// Kernel basis of the Laplacian sum (G^{-1})_{ij} d_i d_j on homogeneous
/// polynomials of the given degree (G = identity when gram is empty).
std::vector<HarmonicPoly> harm_basis(int dim, int degree, const QMatrix& gram = {});
HarmonicPoly gram_laplacian(const HarmonicPoly& p, const QMatrix& gram_inverse);

/// Zonal harmonic of degree s with pole y, in lattice coordinates.
HarmonicPoly zonal_harmonic(const Lattice& l, int s, const IVec& y);

Rat harmonic_sum(const Shell& s, const HarmonicPoly& p);

/// Sum over pairs of the shell of the degree-s zonal kernel. This is the
/// squared norm of the degree-s harmonic projection, so it vanishes exactly
/// when every harmonic sum of degree s vanishes.
Rat zonal_pair_sum(const Shell& s, int degree);

struct DesignReport {
  int t = 0;
  int failed_degree = 0;  // 0 when t = t_max
  IVec witness_pole;      // zonal harmonic with nonzero sum over the shell
  Rat witness_sum;
};
/// Largest t <= t_max such that the shell is a spherical t-design.
DesignReport design_report(const Shell& s, int t_max);
int design_strength(const Shell& s, int t_max);

/// sum_x P(x) q^{(x,x)/2} with n coefficients. P must be harmonic for the
/// Gram Laplacian and the lattice even (std::domain_error otherwise).
QSeries harmonic_theta(const Lattice& l, const HarmonicPoly& p, std::size_t n);

}  // namespace confdesign
