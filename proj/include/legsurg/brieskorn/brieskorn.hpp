#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "legsurg/torus/torus.hpp"

namespace legsurg::brieskorn {

/// The structure on -Sigma(2,3,6n-1) obtained from the m-th tight structure on
/// the torus bundle M(-1/2, 1/3, 1/6) by stabilizing the singular-fibre knot
/// n-m-1 times (p of them positive) and doing Legendrian surgery.
struct Candidate {
  long n;
  long m;
  long p;

  // Throws DomainError unless n >= 2, 1 <= m <= n-1, 0 <= p <= n-m-1.
  static Candidate make(long n, long m, long p);

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct TwistingData {
  long t;   // maximal twisting of a regular fibre, 1 - 6m
  long n1;  // 1 - 3m
  long n2;  // -2m
  torus::Slope slope_t3;  // -m/(6m-1), in the coordinates of T3
  torus::Slope slope_v3;  // m - n, in the coordinates of the solid torus V3
};

struct PairVerdict {
  enum class Kind { NotIsotopic, Unknown };
  enum class Reason { None, SameM, CPlusSeparates };

  Kind kind = Kind::Unknown;
  Reason reason = Reason::None;

  bool not_isotopic() const noexcept { return kind == Kind::NotIsotopic; }
  // "not-isotopic:same-m", "not-isotopic:c-plus", "unknown"
  std::string_view tag() const noexcept;

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

struct PairRecord {
  std::size_t a;  // indices into the candidate list, a < b
  std::size_t b;
  PairVerdict verdict;
};

// All candidates in lexicographic (m, p) order; n(n-1)/2 of them.
std::vector<Candidate> enumerate(long n);

// Throws DomainError unless n >= 2 and 1 <= m <= n-1.
TwistingData twisting_data(long n, long m);

// Throws UsageError for identical candidates or different n.
PairVerdict compare(const Candidate& a, const Candidate& b);

// Every unordered pair, in (a, b) lexicographic order. The OpenMP kernel and
// the serial reference produce identical output.
std::vector<PairRecord> compare_all_pairs(const std::vector<Candidate>& candidates);
std::vector<PairRecord> compare_all_pairs_serial(const std::vector<Candidate>& candidates);

/// Symmetric 0/1 adjacency over candidate indices; edges are NotIsotopic pairs.
class DistinguishabilityGraph {
public:
  DistinguishabilityGraph(std::size_t vertices, const std::vector<PairRecord>& pairs);

  std::size_t size() const noexcept { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }

  // Exact branch-and-bound; vertices are tried in index order, so the result
  // is the lexicographically first maximum clique.
  std::vector<std::size_t> maximum_clique() const;

private:
  std::size_t n_;
  std::vector<unsigned char> adj_;
};

// Size of a largest family of pairwise distinguished candidates.
long lower_bound(long n);

// Framing check: twisting -m stabilized n-m-1 times gives the -n surgery.
bool surgery_consistency(long n, long m);

struct Report {
  long n;
  std::vector<Candidate> candidates;
  std::vector<TwistingData> twisting;  // index m-1
  std::vector<PairRecord> pairs;
  std::vector<std::size_t> clique;
  long upper_bound;
  long lower_bound;
};

Report build_report(long n);

}  // namespace legsurg::brieskorn
