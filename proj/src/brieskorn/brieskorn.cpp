#include "legsurg/brieskorn/brieskorn.hpp"

#include <stdexcept>
#include <utility>

#include "legsurg/criterion/criterion.hpp"
#include "legsurg/errors.hpp"
#include "legsurg/legendrian/legendrian.hpp"

namespace legsurg::brieskorn {

namespace {

void require_n(long n) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
}

void require_m(long n, long m) {
  require_n(n);
  if (m < 1 || m > n - 1) {
    throw DomainError("m must lie in [1, n-1] = [1, " + std::to_string(n - 1) + "], got " + std::to_string(m));
  }
}

std::vector<std::pair<std::size_t, std::size_t>> pair_indices(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(count * (count - (count ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) out.emplace_back(i, j);
  return out;
}

void expand(const DistinguishabilityGraph& g, std::vector<std::size_t>& current,
            std::vector<std::size_t> candidates, std::vector<std::size_t>& best) {
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (current.size() + (candidates.size() - k) <= best.size()) return;
    const std::size_t v = candidates[k];
    std::vector<std::size_t> next;
    for (std::size_t l = k + 1; l < candidates.size(); ++l)
      if (g.adjacent(v, candidates[l])) next.push_back(candidates[l]);
    current.push_back(v);
    expand(g, current, std::move(next), best);
    current.pop_back();
  }
}

}  // namespace

Candidate Candidate::make(long n, long m, long p) {
  require_m(n, m);
  if (p < 0 || p > n - m - 1) {
    throw DomainError("p must lie in [0, n-m-1] = [0, " + std::to_string(n - m - 1) + "], got " +
                      std::to_string(p));
  }
  return Candidate{n, m, p};
}

std::string_view PairVerdict::tag() const noexcept {
  if (kind == Kind::Unknown) return "unknown";
  return reason == Reason::SameM ? "not-isotopic:same-m" : "not-isotopic:c-plus";
}

std::vector<Candidate> enumerate(long n) {
  require_n(n);
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (long m = 1; m <= n - 1; ++m)
    for (long p = 0; p <= n - m - 1; ++p) out.push_back(Candidate{n, m, p});
  return out;
}

TwistingData twisting_data(long n, long m) {
  require_m(n, m);
  TwistingData td{1 - 6 * m, 1 - 3 * m, -2 * m, torus::Slope(-m, 6 * m - 1), torus::Slope(m - n, 1)};

  // The interior torus slope seen from V3 must be the integer m - n, which
  // carries exactly n - m tight structures on the solid torus.
  const auto split = torus::brieskorn_splitting(n);
  if (torus::transform_slope(split.phi3.inverse(), td.slope_t3) != td.slope_v3) {
    throw std::logic_error("slope " + td.slope_t3.to_string() + " does not map to " + td.slope_v3.to_string());
  }
  if (torus::solid_torus_tight_count(td.slope_v3) != n - m) {
    throw std::logic_error("solid torus count disagrees with n - m");
  }
  return td;
}

PairVerdict compare(const Candidate& a, const Candidate& b) {
  if (a.n != b.n) throw UsageError("candidates live on different manifolds (n differs)");
  if (a.m == b.m && a.p == b.p) throw UsageError("cannot compare a candidate with itself");

  if (a.m == b.m) {
    // The torus bundle's filling is simply connected, so the knot class is
    // torsion in its H1 and any change in p is detected.
    const long s = a.n - a.m - 1;
    const criterion::ComponentComparison c(s, a.p, b.p, algebra::ClassInfo::torsion());
    const auto v = criterion::decide({c}, criterion::Hypothesis::WeaklyFillable);
    if (v.not_isotopic()) return {PairVerdict::Kind::NotIsotopic, PairVerdict::Reason::SameM};
    return {};
  }
  // Surgery maps c+ of the result back to c+ of xi_m, and xi_1, xi_2 have
  // different invariants.
  if ((a.m == 1 && b.m == 2) || (a.m == 2 && b.m == 1)) {
    return {PairVerdict::Kind::NotIsotopic, PairVerdict::Reason::CPlusSeparates};
  }
  return {};
}

std::vector<PairRecord> compare_all_pairs_serial(const std::vector<Candidate>& candidates) {
  std::vector<PairRecord> out;
  for (const auto& [i, j] : pair_indices(candidates.size())) {
    out.push_back({i, j, compare(candidates[i], candidates[j])});
  }
  return out;
}

std::vector<PairRecord> compare_all_pairs(const std::vector<Candidate>& candidates) {
  const auto index = pair_indices(candidates.size());
  std::vector<PairRecord> out(index.size());
  const auto total = static_cast<std::ptrdiff_t>(index.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto [i, j] = index[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = {i, j, compare(candidates[i], candidates[j])};
  }
  return out;
}

DistinguishabilityGraph::DistinguishabilityGraph(std::size_t vertices, const std::vector<PairRecord>& pairs)
    : n_(vertices), adj_(vertices * vertices, 0) {
  for (const auto& r : pairs) {
    if (r.a >= n_ || r.b >= n_) throw UsageError("pair index out of range");
    if (r.verdict.not_isotopic()) adj_[r.a * n_ + r.b] = adj_[r.b * n_ + r.a] = 1;
  }
}

std::vector<std::size_t> DistinguishabilityGraph::maximum_clique() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = i;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  expand(*this, current, std::move(all), best);
  return best;
}

long lower_bound(long n) {
  const auto cands = enumerate(n);
  const DistinguishabilityGraph g(cands.size(), compare_all_pairs(cands));
  return static_cast<long>(g.maximum_clique().size());
}

bool surgery_consistency(long n, long m) {
  require_m(n, m);
  const legendrian::FramedLegendrian knot{"singular fibre", -m, {}, "torus bundle"};
  return legendrian::surgery_framing(knot, legendrian::StabilizationProfile(n - m - 1, 0)) == -n;
}

Report build_report(long n) {
  Report r;
  r.n = n;
  r.candidates = enumerate(n);
  for (long m = 1; m <= n - 1; ++m) r.twisting.push_back(twisting_data(n, m));
  r.pairs = compare_all_pairs(r.candidates);
  r.clique = DistinguishabilityGraph(r.candidates.size(), r.pairs).maximum_clique();
  r.upper_bound = static_cast<long>(r.candidates.size());
  r.lower_bound = static_cast<long>(r.clique.size());
  return r;
}

}  // namespace legsurg::brieskorn
