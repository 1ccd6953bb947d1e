#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ssg/rootsys.hpp"

namespace ssg {

/// Weight -> multiplicity; the character of a finite-dimensional module.
using WeightMultiset = std::map<Weight, Int>;

/// Dominant highest weight -> multiplicity of that simple constituent.
using Decomposition = std::map<Weight, Int>;

/// prod over positive roots of (lam + rho, alpha) / (rho, alpha).
/// Throws std::invalid_argument for non-dominant input.
Int weyl_dim(const RootSystem& rs, const Weight& lam);

/// Multiplicities of the dominant weights of V(lam) (Freudenthal recursion).
std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lam);

/// The full character of V(lam): every dominant multiplicity spread over its Weyl orbit.
WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lam);

/// V(lam) ⊗ M for a module M given by its character: for each weight nu of
/// M, the dominant conjugate of lam + nu + rho contributes sign * mult(nu)
/// at (conjugate - rho); wall weights contribute nothing.
Decomposition brauer_klimyk(const RootSystem& rs, const Weight& lam, const WeightMultiset& other);

/// V(lam) ⊗ V(mu), expanding the factor of smaller dimension.
Decomposition tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu);

/// V(m) ⊗ V(n) = V(m+n) ⊕ V(m+n-2) ⊕ ... ⊕ V(|m-n|) for sl2.
Decomposition clebsch_gordan_sl2(Int m, Int n);

/// Dominant weights with coordinate sum <= bound, lexicographic.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, Int bound);

/// Total dimension of a decomposition: sum of mult * weyl_dim.
Int decomposition_dim(const RootSystem& rs, const Decomposition& d);

/// "3:1, 1:1", highest weights in decreasing lexicographic order.
std::string format_decomposition(const Decomposition& d);
std::string format_multiset(const WeightMultiset& m);

/// Thread-safe memo of characters and tensor products over one root system.
/// Entries are computed outside the lock and published whole, so readers
/// never see a partially built character.
class RepCache {
public:
  explicit RepCache(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& root_system() const { return rs_; }
  std::shared_ptr<const WeightMultiset> character(const Weight& lam);
  Int dim(const Weight& lam);
  std::shared_ptr<const Decomposition> tensor(const Weight& lam, const Weight& mu);

private:
  const RootSystem& rs_;
  std::mutex mu_;
  std::unordered_map<Weight, std::shared_ptr<const WeightMultiset>, WeightHash> chars_;
  std::unordered_map<Weight, Int, WeightHash> dims_;
  std::map<std::pair<Weight, Weight>, std::shared_ptr<const Decomposition>> tensors_;
};

}  // namespace ssg
