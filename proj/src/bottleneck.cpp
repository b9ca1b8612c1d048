#include "cda/bottleneck.hpp"

#include <algorithm>

#include "cda/errors.hpp"

namespace cda {

namespace {

struct SplitBars {
  std::vector<Bar> finite;
  std::vector<Bar> infinite;  // sorted by birth
};

SplitBars split(const Barcode& barcode, int dim) {
  SplitBars out;
  for (const Bar& b : barcode.in_dim(dim)) {
    (b.is_infinite() ? out.infinite : out.finite).push_back(b);
  }
  std::sort(out.infinite.begin(), out.infinite.end(),
            [](const Bar& a, const Bar& b) { return a.birth < b.birth; });
  return out;
}

Rational pair_cost(const Bar& a, const Bar& b) {
  Rational db = rational_abs(Rational(a.birth - b.birth));
  Rational dd = rational_abs(Rational(*a.death - *b.death));
  return std::max(db, dd);
}

Rational half_length(const Bar& a) {
  return Rational(*a.death - a.birth) / 2;
}

// Perfect matching on the diagonal-augmented bipartite graph. Left vertices
// are the first diagram's bars then one diagonal slot per second-diagram
// bar; right vertices are the second diagram's bars then one diagonal slot
// per first-diagram bar. A real bar may use its own diagonal slot when its
// half-length fits; diagonal slots pair with each other freely. A perfect
// matching exists iff the finite parts admit a matching of cost <= eps.
struct DiagonalMatcher {
  const std::vector<Bar>& left_bars;
  const std::vector<Bar>& right_bars;
  const Rational& eps;
  std::size_t n1;
  std::size_t n2;
  std::vector<std::size_t> match_right;  // right vertex -> left vertex
  std::vector<bool> visited;

  DiagonalMatcher(const std::vector<Bar>& l, const std::vector<Bar>& r,
                  const Rational& e)
      : left_bars(l),
        right_bars(r),
        eps(e),
        n1(l.size()),
        n2(r.size()),
        match_right(n1 + n2, SIZE_MAX) {}

  bool edge(std::size_t l, std::size_t r) const {
    const bool l_real = l < n1;
    const bool r_real = r < n2;
    if (l_real && r_real) return pair_cost(left_bars[l], right_bars[r]) <= eps;
    if (l_real) {
      return r == n2 + l && half_length(left_bars[l]) <= eps;
    }
    if (r_real) {
      return l == n1 + r && half_length(right_bars[r]) <= eps;
    }
    return true;  // diagonal-diagonal
  }

  bool augment(std::size_t l) {
    for (std::size_t r = 0; r < n1 + n2; ++r) {
      if (visited[r] || !edge(l, r)) continue;
      visited[r] = true;
      if (match_right[r] == SIZE_MAX || augment(match_right[r])) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  }

  bool run() {
    for (std::size_t l = 0; l < n1 + n2; ++l) {
      visited.assign(n1 + n2, false);
      if (!augment(l)) return false;
    }
    return true;
  }
};

bool finite_feasible(const SplitBars& a, const SplitBars& b,
                     const Rational& eps,
                     std::vector<std::size_t>* match_out = nullptr) {
  DiagonalMatcher matcher(a.finite, b.finite, eps);
  if (!matcher.run()) return false;
  if (match_out) *match_out = matcher.match_right;
  return true;
}

}  // namespace

std::optional<Rational> bottleneck_distance(const Barcode& a, const Barcode& b,
                                            int dim) {
  const SplitBars sa = split(a, dim);
  const SplitBars sb = split(b, dim);

  // Infinite bars pair by sorted births, which minimizes the largest birth
  // shift; a count mismatch is an infinite distance.
  if (sa.infinite.size() != sb.infinite.size()) return std::nullopt;
  Rational floor(0);
  for (std::size_t i = 0; i < sa.infinite.size(); ++i) {
    Rational shift = rational_abs(
        Rational(sa.infinite[i].birth - sb.infinite[i].birth));
    if (shift > floor) floor = std::move(shift);
  }

  // The finite-part optimum is one of finitely many candidates: a pairwise
  // cost or a half-length (0 covers the no-finite-bars case). The largest
  // candidate dominates every half-length, so it is always feasible, and
  // feasibility is monotone in eps: binary search for the smallest.
  std::vector<Rational> candidates;
  candidates.push_back(Rational(0));
  for (const Bar& x : sa.finite) {
    for (const Bar& y : sb.finite) candidates.push_back(pair_cost(x, y));
    candidates.push_back(half_length(x));
  }
  for (const Bar& y : sb.finite) candidates.push_back(half_length(y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (finite_feasible(sa, sb, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max(floor, candidates[lo]);
}

BarMatching match_bars(const Barcode& a, const Barcode& b, const Rational& eps,
                       int dim) {
  if (eps < 0) throw ValidationError("matching tolerance must be >= 0");

  BarMatching result;
  result.eps = eps;

  const SplitBars sa = split(a, dim);
  const SplitBars sb = split(b, dim);

  if (sa.infinite.size() != sb.infinite.size()) return result;
  for (std::size_t i = 0; i < sa.infinite.size(); ++i) {
    Rational shift = rational_abs(
        Rational(sa.infinite[i].birth - sb.infinite[i].birth));
    if (shift > eps) return result;
  }

  std::vector<std::size_t> match_right;
  if (!finite_feasible(sa, sb, eps, &match_right)) return result;

  result.feasible = true;
  for (std::size_t i = 0; i < sa.infinite.size(); ++i) {
    result.pairs.emplace_back(sa.infinite[i], sb.infinite[i]);
  }
  const std::size_t n1 = sa.finite.size();
  const std::size_t n2 = sb.finite.size();
  for (std::size_t r = 0; r < n1 + n2; ++r) {
    const std::size_t l = match_right[r];
    const bool l_real = l < n1;
    const bool r_real = r < n2;
    if (l_real && r_real) {
      result.pairs.emplace_back(sa.finite[l], sb.finite[r]);
    } else if (l_real) {
      result.unmatched.emplace_back(sa.finite[l], 1);
    } else if (r_real) {
      result.unmatched.emplace_back(sb.finite[r], 2);
    }
  }
  return result;
}

}  // namespace cda
