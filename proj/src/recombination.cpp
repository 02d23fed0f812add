#include "absfact/recombination.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "absfact/errors.hpp"
#include "absfact/reconstruction.hpp"

namespace absfact {

namespace {

// Translate so the bounding box starts at the origin: keeps every candidate
// inside N^2 and makes the anchors Minkowski-additive, so the recovered
// factors multiply back to the input without a stray monomial.
LatticePolytope anchor(const LatticePolytope& P) {
  Vec2 low = P.vertices.front();
  for (auto& v : P.vertices) {
    low[0] = std::min(low[0], v[0]);
    low[1] = std::min(low[1], v[1]);
  }
  LatticePolytope out = P;
  for (auto& v : out.vertices) v = sub(v, low);
  return out;
}

std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& pool,
                                                   std::int64_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = pool.size(), k = static_cast<std::size_t>(d);
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = pool[idx[j]];
    out.push_back(std::move(pick));
    // next lexicographic k-combination
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t l = j; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    acc = acc * static_cast<unsigned __int128>(n - k + j);
    acc /= static_cast<unsigned __int128>(j);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binomial overflows 64 bits");
    }
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace

CandidateSummand degree_targets(const LatticePolytope& Q, const Fan& fan) {
  CandidateSummand cand;
  cand.Q = anchor(Q);
  cand.targets.resize(fan.size(), 0);
  cand.e.resize(fan.size(), 0);
  for (std::size_t i = 0; i < fan.size(); ++i) {
    cand.e[i] = -support_min(cand.Q, fan.rays[i]);
    if (fan.exterior_mask[i]) cand.targets[i] = min_face_count(cand.Q, fan.rays[i]);
  }
  return cand;
}

SelectionEnumerator::SelectionEnumerator(
    const std::vector<std::vector<std::size_t>>& available, const CandidateSummand& cand) {
  for (std::size_t i = 0; i < cand.targets.size(); ++i) {
    if (cand.targets[i] == 0) continue;
    auto choices = combinations(available[i], cand.targets[i]);
    if (choices.empty()) {
      feasible_ = false;
      done_ = true;
      return;
    }
    per_ray_choices_.push_back(std::move(choices));
  }
  odometer_.assign(per_ray_choices_.size(), 0);
}

bool SelectionEnumerator::next(std::vector<std::size_t>& out) {
  if (done_) return false;
  out.clear();
  for (std::size_t r = 0; r < per_ray_choices_.size(); ++r) {
    const auto& pick = per_ray_choices_[r][odometer_[r]];
    out.insert(out.end(), pick.begin(), pick.end());
  }
  std::sort(out.begin(), out.end());
  // advance, last ray fastest
  std::size_t r = per_ray_choices_.size();
  while (r > 0) {
    if (++odometer_[r - 1] < per_ray_choices_[r - 1].size()) return true;
    odometer_[r - 1] = 0;
    --r;
  }
  done_ = true;
  return true;
}

namespace {

struct Reconstructed {
  SparsePoly poly;
  SvCertificate cert;
};

// Solve the osculation system for the candidate; throws NoSolution/Ambiguous
// on a bad kernel and NoSolution when a vertex coefficient of Q vanished.
Reconstructed reconstruct(const CandidateSummand& cand,
                          const std::vector<std::size_t>& selection,
                          const std::vector<Branch>& branches, const Fan& fan,
                          double tol_solve) {
  FactorSystem system = assemble_system(selection, cand, branches, fan);
  Reconstructed rec;
  std::vector<Complex> coeffs = solve_null(system, tol_solve, &rec.cert);
  double top = 0.0;
  for (auto& c : coeffs) top = std::max(top, std::abs(c));
  for (std::size_t j = 0; j < coeffs.size(); ++j) rec.poly.set(system.columns[j], coeffs[j]);
  // every vertex of Q must actually appear in the factor
  for (auto& v : cand.Q.vertices) {
    auto it = rec.poly.terms.find(v);
    if (it == rec.poly.terms.end() || std::abs(it->second) <= 1e-6 * top) {
      throw NoSolution("reconstruct: kernel support misses a vertex of the candidate");
    }
  }
  return rec;
}

}  // namespace

SearchResult factor_search(const LatticePolytope& newton, const Fan& fan,
                           const std::vector<Branch>& branches,
                           const ResidueTable& table, const SearchConfig& config) {
  SearchResult result;
  std::vector<std::vector<std::size_t>> available(fan.size());
  for (std::size_t p = 0; p < branches.size(); ++p) {
    available[branches[p].ray_index].push_back(p);
  }
  for (auto& list : available) std::sort(list.begin(), list.end());

  std::vector<std::size_t> m_indices(table.m_points.size());
  std::iota(m_indices.begin(), m_indices.end(), 0);

  // The vanishing test depends only on the branch selection, never on the
  // candidate polytope, so cache outcomes for the whole search.
  std::map<std::vector<std::size_t>, bool> tested;

  LatticePolytope remaining = anchor(newton);
  bool budget_hit = false;

  while (!remaining.is_point()) {
    auto summands = minkowski_summands(remaining, config.summand_cap);
    std::vector<CandidateSummand> candidates;
    for (auto& Q : summands) {
      if (Q.is_point()) continue;
      candidates.push_back(degree_targets(Q, fan));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const CandidateSummand& a, const CandidateSummand& b) {
                auto ka = std::tuple(volume2(a.Q), a.target_total(), a.Q.vertices);
                auto kb = std::tuple(volume2(b.Q), b.target_total(), b.Q.vertices);
                return ka < kb;
              });

    bool extracted = false;
    for (auto& cand : candidates) {
      bool is_full = cand.Q == remaining;
      if (!is_full && budget_hit) continue;

      if (is_full) {
        // forced terminal step: the remaining branches determine the cofactor
        std::vector<std::size_t> sel;
        for (auto& list : available) sel.insert(sel.end(), list.begin(), list.end());
        Reconstructed rec = reconstruct(cand, sel, branches, fan, config.tol_solve);
        ExtractedFactor factor{cand.Q, sel, std::move(rec.poly), rec.cert.sigma_max,
                               rec.cert.sigma_second, rec.cert.sigma_min, budget_hit};
        result.factors.push_back(std::move(factor));
        remaining = LatticePolytope{{Vec2{0, 0}}};
        extracted = true;
        break;
      }

      SelectionEnumerator en(available, cand);
      if (!en.feasible()) continue;
      std::vector<std::size_t> sel;
      while (en.next(sel)) {
        auto it = tested.find(sel);
        bool pass;
        if (it != tested.end()) {
          pass = it->second;
        } else {
          if (result.vanishing_tests >= config.max_candidates) {
            budget_hit = true;
            result.complete = false;
            break;
          }
          ++result.vanishing_tests;
          if (config.probabilistic) {
            pass = random_combination_test(
                sel, table, m_indices, config.eps,
                config.seed + static_cast<std::uint64_t>(result.vanishing_tests));
          } else {
            pass = vanishing_test(sel, table, m_indices, config.eps, config.abs_floor).pass;
          }
          tested.emplace(sel, pass);
        }
        if (!pass) continue;

        Reconstructed rec;
        try {
          rec = reconstruct(cand, sel, branches, fan, config.tol_solve);
        } catch (const NoSolution&) {
          ++result.reconstruction_backtracks;
          continue;
        } catch (const Ambiguous&) {
          ++result.reconstruction_backtracks;
          continue;
        }

        ExtractedFactor factor{cand.Q, sel, std::move(rec.poly), rec.cert.sigma_max,
                               rec.cert.sigma_second, rec.cert.sigma_min, false};
        result.factors.push_back(std::move(factor));
        for (std::size_t i = 0; i < available.size(); ++i) {
          auto& list = available[i];
          list.erase(std::remove_if(list.begin(), list.end(),
                                    [&](std::size_t p) {
                                      return std::binary_search(sel.begin(), sel.end(), p);
                                    }),
                     list.end());
        }
        remaining = anchor(minkowski_diff(remaining, cand.Q));
        extracted = true;
        break;
      }
      if (extracted) break;
    }
    if (!extracted) {
      throw std::logic_error("factor_search: no candidate matched the remaining polytope");
    }
  }
  return result;
}

std::int64_t recombination_count(const LatticePolytope& P) {
  if (P.is_point()) return 2;
  auto edges = edge_multiset(P);
  std::int64_t n = 0;
  for (auto& [dir, mult] : edges) n = std::gcd(n, mult);
  if (n <= 1) return 2;
  for (auto& [dir, mult] : edges) mult /= n;
  LatticePolytope Q0 = polytope_from_edges(std::move(edges));
  std::vector<std::int64_t> lengths;
  for (auto& facet : exterior_facets(Q0)) lengths.push_back(facet.lattice_length);
  std::int64_t total = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    std::int64_t prod = 1;
    for (auto l : lengths) {
      unsigned __int128 next = static_cast<unsigned __int128>(prod) *
                               static_cast<unsigned __int128>(binomial(n * l, k * l));
      if (next > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
        throw std::overflow_error("recombination_count overflows 64 bits");
      }
      prod = static_cast<std::int64_t>(next);
    }
    total += prod;
  }
  return total;
}

std::int64_t dense_count(std::int64_t d) {
  if (d <= 1) return 2;
  std::int64_t total = 0;
  for (std::int64_t k = 1; k < d; ++k) {
    if (d % k == 0) total += binomial(d, k);
  }
  return total;
}

}  // namespace absfact
