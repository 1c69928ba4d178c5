// The exhaustive cross-verification corpus: every quiver with up to three
// vertices and up to four arrows, swept over all small dimension vectors,
// checking that the direct primitive-cycle count and the localization
// recursion agree, and that the cycle-class bijection balances component by
// component. Shared by the command-line self check and the acceptance suite.
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qmod/euler.hpp"

namespace qmod {

/// All quivers with nv vertices built from every multiset of at most
/// max_arrows ordered vertex pairs.
inline std::vector<Quiver> enumerate_quivers(int nv, int max_arrows) {
  std::vector<std::pair<int, int>> pair_types;
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) pair_types.emplace_back(s, t);
  std::vector<Quiver> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    {
      std::vector<Arrow> arrows;
      for (std::size_t k = 0; k < chosen.size(); ++k)
        arrows.push_back({chosen[k].first, chosen[k].second,
                          "a" + std::to_string(k)});
      out.emplace_back(nv, std::move(arrows));
    }
    if (left == 0) return;
    for (std::size_t t = from; t < pair_types.size(); ++t) {
      chosen.push_back(pair_types[t]);
      self(self, t, left - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, max_arrows);
  return out;
}

/// All dimension vectors on nv vertices with 1 <= |d| <= max_degree.
inline std::vector<DimVector> enumerate_dimvectors(int nv, int max_degree) {
  std::vector<DimVector> out;
  DimVector d = DimVector::zero(nv);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nv) {
      if (d.degree() >= 1) out.push_back(d);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[i] = x;
      self(self, i + 1, left - x);
    }
    d[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

struct CorpusReport {
  std::int64_t pairs_checked = 0;
  std::int64_t euler_mismatches = 0;
  std::int64_t bijection_discrepancies = 0;
  std::int64_t necklace_mismatches = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return euler_mismatches == 0 && bijection_discrepancies == 0 && necklace_mismatches == 0;
  }
};

inline std::string describe_pair(const Quiver& q, const DimVector& d) {
  std::string s = std::to_string(q.num_vertices()) + "v[";
  for (const Arrow& a : q.arrows())
    s += std::to_string(a.src) + ">" + std::to_string(a.tgt) + ",";
  s += "] d=(";
  for (int i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  s += ")";
  return s;
}

/// Sweeps every (Q, d) with <= max_vertices vertices, <= max_arrows arrows
/// and |d| <= max_degree. Both verifications are memoized on the
/// relabeling-canonical form of (Q, d), so isomorphic duplicates in the raw
/// corpus are checked once.
inline CorpusReport run_corpus(int max_vertices, int max_arrows, int max_degree,
                               const std::function<void(std::int64_t)>& progress = {}) {
  CorpusReport report;
  EulerMemo memo;
  std::set<std::string> verified;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    for (const Quiver& q : enumerate_quivers(nv, max_arrows)) {
      for (const DimVector& d : enumerate_dimvectors(nv, max_degree)) {
        ++report.pairs_checked;
        if (progress && report.pairs_checked % 2000 == 0) progress(report.pairs_checked);
        const std::string key = canonical_key(q, d);
        if (!verified.insert(key).second) continue;
        const std::int64_t direct = euler_direct(q, d);
        const std::int64_t localized = euler_localized(q, d, &memo);
        if (direct != localized) {
          ++report.euler_mismatches;
          report.failures.push_back("euler mismatch (" + std::to_string(direct) + " vs " +
                                    std::to_string(localized) + ") at " + describe_pair(q, d));
          continue;
        }
        const BijectionReport bij = verify_cycle_bijection(q, d);
        if (!bij.consistent()) {
          ++report.bijection_discrepancies;
          report.failures.push_back("bijection discrepancy at " + describe_pair(q, d));
        }
      }
    }
  }
  return report;
}

/// The loop-quiver side of the corpus: localization and the direct count
/// against the closed necklace formula.
inline CorpusReport run_loop_corpus(int max_loops, int max_degree_engines,
                                    int max_degree_necklace) {
  CorpusReport report;
  EulerMemo memo;
  for (int m = 1; m <= max_loops; ++m) {
    Quiver q = Quiver::loop_quiver(m);
    for (int n = 1; n <= max_degree_necklace; ++n) {
      ++report.pairs_checked;
      DimVector d({n});
      const std::int64_t direct = euler_direct(q, d);
      if (direct != necklace_count(m, n)) {
        ++report.necklace_mismatches;
        report.failures.push_back("necklace mismatch at m=" + std::to_string(m) +
                                  " d=" + std::to_string(n));
      }
      if (n <= max_degree_engines) {
        if (direct != euler_localized(q, d, &memo)) {
          ++report.euler_mismatches;
          report.failures.push_back("euler mismatch at m=" + std::to_string(m) +
                                    " d=" + std::to_string(n));
        }
        const BijectionReport bij = verify_cycle_bijection(q, d);
        if (!bij.consistent()) {
          ++report.bijection_discrepancies;
          report.failures.push_back("bijection discrepancy at m=" + std::to_string(m) +
                                    " d=" + std::to_string(n));
        }
      }
    }
  }
  return report;
}

}  // namespace qmod
