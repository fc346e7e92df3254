#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "cdkit/group.hpp"

namespace cdkit {

enum class IsoResult { No, Yes, Unknown };

inline constexpr long long kDefaultIsoBudget = 2'000'000;
inline constexpr long long kDefaultAutBudget = 50'000'000;

namespace detail {

// Backtracking search for multiplicative bijections G -> H. Generator images
// are chosen among elements with matching order and conjugacy-class size;
// each choice is propagated through an incremental right-multiplication
// closure that defines the map on the generated subgroup and rejects
// inconsistent or non-injective assignments early.
class IsoSearch {
 public:
  enum class Status { Exhausted, Stopped, Budget };

  IsoSearch(const Group& g, const Group& h, long long budget)
      : g_(g), h_(h), budget_(budget) {
    gens_ = g.generators();
    phi_.assign(g.order(), -1);
    used_.assign(h.order(), 0);
    phi_[0] = 0;
    used_[0] = 1;
    known_.push_back(0);
    for (int x = 1; x < h.order(); ++x)
      candidates_[{h.element_order(x), h.class_size(x)}].push_back(x);
  }

  // visit receives the complete map (G index -> H index) and returns false
  // to stop the search.
  template <class Visitor>
  Status run(Visitor&& visit) {
    return descend(0, visit);
  }

 private:
  template <class Visitor>
  Status descend(std::size_t level, Visitor&& visit) {
    if (level == gens_.size()) {
      if (static_cast<int>(known_.size()) != g_.order())
        return Status::Exhausted;  // generators failed to generate; defensive
      return visit(phi_) ? Status::Exhausted : Status::Stopped;
    }
    int gen = gens_[level];
    auto it = candidates_.find({g_.element_order(gen), g_.class_size(gen)});
    if (it == candidates_.end()) return Status::Exhausted;
    for (int image : it->second) {
      if (used_[image]) continue;
      if (++nodes_ > budget_) return Status::Budget;
      std::size_t mark = trail_.size();
      if (propagate(level, gen, image)) {
        Status st = descend(level + 1, visit);
        if (st != Status::Exhausted) {
          undo(mark);
          return st;
        }
      }
      undo(mark);
    }
    return Status::Exhausted;
  }

  void assign(int x, int v) {
    phi_[x] = v;
    used_[v] = 1;
    known_.push_back(x);
    trail_.push_back({x, v});
  }

  // After assigning gen -> image, re-establish the invariant that phi is
  // multiplicatively consistent on (known element, mapped generator) pairs.
  // Right-closure over a generating set extends to a full homomorphism
  // check because every element is a positive word in the generators.
  bool propagate(std::size_t level, int gen, int image) {
    std::size_t base = known_.size();
    assign(gen, image);
    for (std::size_t pos = 0; pos < known_.size(); ++pos) {
      std::size_t jlo = pos < base ? level : 0;
      for (std::size_t j = jlo; j <= level; ++j) {
        int x = known_[pos], s = gens_[j];
        int y = g_.mult(x, s);
        int v = h_.mult(phi_[x], phi_[s]);
        if (phi_[y] != -1) {
          if (phi_[y] != v) return false;
        } else {
          if (used_[v]) return false;
          assign(y, v);
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [x, v] = trail_.back();
      trail_.pop_back();
      phi_[x] = -1;
      used_[v] = 0;
      known_.pop_back();
    }
  }

  const Group& g_;
  const Group& h_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> gens_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<int> known_;
  std::vector<std::pair<int, int>> trail_;
  std::map<std::pair<int, int>, std::vector<int>> candidates_;
};

// Cheap isomorphism invariants; a mismatch proves non-isomorphism.
inline bool invariants_match(const Group& g, const Group& h) {
  if (g.order() != h.order()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  auto profile = [](const Group& x) {
    std::vector<std::pair<int, int>> p(x.order());
    for (int i = 0; i < x.order(); ++i) p[i] = {x.element_order(i), x.class_size(i)};
    std::sort(p.begin(), p.end());
    return p;
  };
  return profile(g) == profile(h);
}

}  // namespace detail

struct IsoOutcome {
  IsoResult result = IsoResult::Unknown;
  std::vector<int> map;  // G index -> H index, filled when result == Yes
};

// Backtracking isomorphism test with order/class-invariant pruning.
// Returns Unknown when the search does not complete within the node budget.
inline IsoOutcome is_isomorphic_map(const Group& g, const Group& h,
                                    long long budget = kDefaultIsoBudget) {
  IsoOutcome out;
  if (!detail::invariants_match(g, h)) {
    out.result = IsoResult::No;
    return out;
  }
  detail::IsoSearch search(g, h, budget);
  auto status = search.run([&](const std::vector<int>& phi) {
    out.map = phi;
    return false;  // first isomorphism suffices
  });
  switch (status) {
    case detail::IsoSearch::Status::Stopped:
      out.result = IsoResult::Yes;
      break;
    case detail::IsoSearch::Status::Exhausted:
      out.result = IsoResult::No;
      break;
    case detail::IsoSearch::Status::Budget:
      out.result = IsoResult::Unknown;
      break;
  }
  return out;
}

inline IsoResult is_isomorphic(const Group& g, const Group& h,
                               long long budget = kDefaultIsoBudget) {
  return is_isomorphic_map(g, h, budget).result;
}

enum class SearchStatus { Complete, Stopped, BudgetExceeded };

// Enumerates every automorphism of g, invoking visit on each complete map.
// visit returning false stops early (status Stopped). Complete means the
// whole automorphism group was covered within the budget.
template <class Visitor>
SearchStatus for_each_automorphism(const Group& g, Visitor&& visit,
                                   long long budget = kDefaultAutBudget) {
  detail::IsoSearch search(g, g, budget);
  auto status = search.run(visit);
  switch (status) {
    case detail::IsoSearch::Status::Exhausted:
      return SearchStatus::Complete;
    case detail::IsoSearch::Status::Stopped:
      return SearchStatus::Stopped;
    default:
      return SearchStatus::BudgetExceeded;
  }
}

}  // namespace cdkit
