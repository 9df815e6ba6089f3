#include "legsurg/algebra/homology.hpp"

#include <numeric>

#include "legsurg/algebra/smith.hpp"
#include "legsurg/errors.hpp"

namespace legsurg::algebra {

std::string GroupStructure::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t generators, IntegerMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() == 0) {
    relations_ = IntegerMatrix(0, generators_);
  } else if (relations_.cols() != generators_) {
    throw UsageError("relation matrix has " + std::to_string(relations_.cols()) + " columns for " +
                     std::to_string(generators_) + " generators");
  }
}

AbelianGroupPresentation AbelianGroupPresentation::free(std::size_t rank) {
  return AbelianGroupPresentation(rank, IntegerMatrix(0, rank));
}

GroupStructure AbelianGroupPresentation::structure() const {
  GroupStructure g;
  if (relations_.empty()) {
    g.free_rank = generators_;
    return g;
  }
  const auto snf = smith_normal_form(relations_);
  const auto diag = snf.diagonal();
  std::size_t rank = 0;
  for (const auto& e : diag) {
    if (sgn(e) == 0) continue;
    ++rank;
    if (e != 1) g.torsion.push_back(e);
  }
  g.free_rank = generators_ - rank;
  return g;
}

ClassInfo ClassInfo::non_torsion(Integer d) {
  if (d < 1) throw DomainError("divisibility must be >= 1, got " + d.get_str());
  return ClassInfo(std::move(d));
}

std::string ClassInfo::to_string() const {
  return is_torsion() ? "torsion" : "non-torsion(d=" + d_.get_str() + ")";
}

ClassInfo class_divisibility(const AbelianGroupPresentation& group, std::span<const Integer> cls) {
  const std::size_t g = group.generators();
  if (cls.size() != g) {
    throw UsageError("class vector has length " + std::to_string(cls.size()) + " but the group has " +
                     std::to_string(g) + " generators");
  }
  // With U R V = D, the row vector k V expresses the class in a basis where
  // the coordinates past rank(D) are the free ones.
  std::vector<Integer> coords(cls.begin(), cls.end());
  std::size_t rank = 0;
  if (!group.relations().empty()) {
    const auto snf = smith_normal_form(group.relations());
    rank = snf.rank();
    for (std::size_t j = 0; j < g; ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i < g; ++i) acc += cls[i] * snf.v(i, j);
      coords[j] = std::move(acc);
    }
  }
  Integer d = 0;
  for (std::size_t j = rank; j < g; ++j) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), coords[j].get_mpz_t());
  if (sgn(d) == 0) return ClassInfo::torsion();
  return ClassInfo::non_torsion(std::move(d));
}

AbelianGroupPresentation surgery_h1_s3(const IntegerMatrix& linking) {
  if (!linking.is_square()) throw UsageError("linking matrix must be square");
  if (!linking.is_symmetric()) throw UsageError("linking matrix must be symmetric");
  return AbelianGroupPresentation(linking.rows(), linking);
}

AbelianGroupPresentation mapping_torus_h1(const IntegerMatrix& monodromy) {
  if (monodromy.rows() != 2 || monodromy.cols() != 2) throw UsageError("monodromy must be 2x2");
  const Integer det = monodromy.determinant();
  if (det != 1) throw DomainError("monodromy must have determinant 1, got " + det.get_str());
  // Abelianizing t x t^-1 = A x gives (A - I) x = 0 for each basis vector x.
  const IntegerMatrix shifted = (monodromy - IntegerMatrix::identity(2)).transpose();
  IntegerMatrix rel(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) rel(i, j) = shifted(i, j);
  return AbelianGroupPresentation(3, std::move(rel));
}

}  // namespace legsurg::algebra
