#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "confdesign/algebra/matrix.hpp"
#include "confdesign/algebra/ratfunc.hpp"
#include "confdesign/algebra/upoly.hpp"
#include "confdesign/virasoro/partition.hpp"

namespace confdesign {

using PTerms = std::vector<std::pair<Partition, MPoly>>;

/// Action of the Virasoro modes on the PBW basis of a highest-weight module
/// with central charge `charge` and highest weight `weight`. With min_part 2
/// and weight 0 this is the vacuum quotient M(c,0)/M(c,1); with min_part 1
/// it is the Verma module M(c,h). Results are memoized; safe to share
/// between threads.
class VermaAction {
 public:
  VermaAction(MPoly charge, MPoly weight, int min_part);

  const MPoly& charge() const { return charge_; }
  const MPoly& weight() const { return weight_; }
  int min_part() const { return min_part_; }

  /// L_n applied to L_{-p} v, expanded in the PBW basis (no zero terms).
  const PTerms& apply(int n, const Partition& p) const;

 private:
  PTerms compute(int n, const Partition& p) const;

  MPoly charge_, weight_;
  int min_part_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, std::vector<int>>, PTerms> cache_;
};

/// Vector of a single highest-weight module.
struct VermaVector {
  RatFunc weight;
  int min_part = 2;
  std::map<Partition, RatFunc> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.coeffs == b.coeffs; }
  std::string to_string() const;
};

/// Requires a polynomial charge; the vector's weight and min_part select the
/// module.
VermaVector lmode_apply(int n, const VermaVector& v, const RatFunc& charge);

/// Contravariant form <L_{-mu} v, L_{-nu} v> on the degree-n slice, with
/// L_n adjoint to L_{-n} and <v, v> = 1. Rows and columns follow
/// partitions(n, min_part).
RMatrix gram_matrix(int n, int min_part, const RatFunc& charge, const RatFunc& weight);

struct FactoredPoly {
  Rat content;
  std::vector<UFactor> factors;  // integer-primitive, sorted
};

/// Determinant of the degree-n Gram matrix of the vacuum quotient as a
/// polynomial in c, factored over Q.
FactoredPoly kac_det_vacuum(int n);

/// Conformal weights h_{p,q}(c) = (((m+1)p - mq)^2 - 1) / (4m(m+1)) for the
/// two branches m = -1/2 +- 1/2 sqrt((25-c)/(1-c)).
struct KacData {
  int p, q;
  /// h_{p,q} as a function of m.
  Rat at_m(const Rat& m) const;
  /// Both branches (plus sign first) when (25-c)/(1-c) is a rational square;
  /// std::nullopt otherwise. Throws std::domain_error at the branch point c = 1.
  std::optional<std::pair<Rat, Rat>> at_c(const Rat& c) const;
};

KacData hpq(int p, int q);

/// Basis of the vectors of the given degree annihilated by L_1 and L_2.
std::vector<VermaVector> singular_vectors(const VermaAction& action, int degree);

}  // namespace confdesign
