#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "legsurg/algebra/integer_matrix.hpp"

namespace legsurg::algebra {

// Isomorphism type Z^free_rank + Z/t1 + ... + Z/tk with 1 < t1 | t2 | ... | tk.
struct GroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  // "0", "Z", "Z^3", "Z + Z/5", ...
  std::string to_string() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Finitely generated abelian group given by generators and relations.
///
/// Each row of `relations` is one relation among the generators. The input is
/// stored as given; reduction happens inside the queries.
class AbelianGroupPresentation {
public:
  AbelianGroupPresentation(std::size_t generators, IntegerMatrix relations);

  static AbelianGroupPresentation free(std::size_t rank);

  std::size_t generators() const noexcept { return generators_; }
  const IntegerMatrix& relations() const noexcept { return relations_; }

  GroupStructure structure() const;

private:
  std::size_t generators_;
  IntegerMatrix relations_;
};

/// Divisibility of a class modulo torsion.
///
/// For a non-torsion class, d is the gcd of its values under all integer
/// functionals on the group. The zero class is reported as torsion.
class ClassInfo {
public:
  static ClassInfo torsion() { return ClassInfo(Integer(0)); }
  // Throws DomainError unless d >= 1.
  static ClassInfo non_torsion(Integer d);

  bool is_torsion() const noexcept { return sgn(d_) == 0; }
  // Only meaningful for non-torsion classes.
  const Integer& divisibility() const noexcept { return d_; }

  std::string to_string() const;

  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;

private:
  explicit ClassInfo(Integer d) : d_(std::move(d)) {}
  Integer d_;
};

ClassInfo class_divisibility(const AbelianGroupPresentation& group, std::span<const Integer> cls);

// H1 of the manifold obtained by integer surgery on a link in S^3 with the
// given linking matrix (framings on the diagonal). Meridians generate; rows relate.
AbelianGroupPresentation surgery_h1_s3(const IntegerMatrix& linking);

// H1 of the torus bundle with monodromy A in SL(2, Z): coker(A - I) + Z.
// The third generator is the circle direction.
AbelianGroupPresentation mapping_torus_h1(const IntegerMatrix& monodromy);

}  // namespace legsurg::algebra
