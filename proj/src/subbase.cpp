#include "crbr/subbase.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "crbr/errors.hpp"

namespace crbr {

Subbase Subbase::full(int frame_size) {
  if (frame_size == 0) return Subbase(0);
  return Subbase(frame_size >= 64 ? ~Mask{0} : (Mask{1} << frame_size) - 1);
}

Subbase Subbase::from_indices(const std::vector<int>& indices, int frame_size) {
  Mask bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= frame_size) {
      throw InvalidFamily("index " + std::to_string(i) +
                          " is out of range for a base of size " +
                          std::to_string(frame_size));
    }
    const Mask bit = Mask{1} << i;
    if (bits & bit) {
      throw InvalidFamily("repeated index " + std::to_string(i) +
                          " in subbase");
    }
    bits |= bit;
  }
  return Subbase(bits);
}

int Subbase::cardinality() const { return std::popcount(bits_); }

std::vector<int> Subbase::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::vector<Formula> Subbase::formulas(const BeliefBase& base) const {
  std::vector<Formula> out;
  for (int i : indices()) out.push_back(base[i]);
  return out;
}

SubbaseFamily::SubbaseFamily(int frame_size, std::vector<Subbase> sets)
    : frame_size_(frame_size), sets_(std::move(sets)) {
  const Subbase frame = Subbase::full(frame_size_);
  for (Subbase s : sets_) {
    if (!s.subset_of(frame)) {
      throw InvalidFamily("subbase does not fit a base of size " +
                          std::to_string(frame_size_));
    }
  }
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SubbaseFamily::contains(Subbase s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
}

namespace {

// Maximal elements under set inclusion. Sorting by descending cardinality
// makes a single pass sufficient: any strict superset of a mask is strictly
// larger, so it has already been kept by the time the mask is considered.
std::vector<Subbase> maximal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::vector<Subbase> kept;
  for (Mask m : masks) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [m](Subbase k) {
          return (m & ~k.bits()) == 0 && m != k.bits();
        });
    if (!dominated) kept.push_back(Subbase(m));
  }
  return kept;
}

}  // namespace

SubbaseFamily enumerate_inclusion_maximal(const BeliefBase& base,
                                          const Formula& mu,
                                          const Limits& limits) {
  if (!is_satisfiable({mu}, limits)) {
    throw InconsistentInput("mu is unsatisfiable");
  }
  const int n = static_cast<int>(base.size());
  if (n > limits.max_base) {
    throw CapExceeded("base has " + std::to_string(n) + " formulas, cap is " +
                      std::to_string(limits.max_base));
  }

  const auto consistent_with_mu = [&](Mask bits) {
    std::vector<Formula> query = Subbase(bits).formulas(base);
    query.push_back(mu);
    return is_satisfiable(query, limits);
  };

  // Walk down the subset lattice from the full base. Nodes found satisfiable
  // are never expanded (their subsets cannot be maximal); nodes found
  // unsatisfiable are expanded one removed formula at a time. Every maximal
  // consistent subbase is reachable this way because all of its strict
  // supersets are inconsistent.
  std::unordered_set<Mask> visited;
  std::vector<Mask> satisfiable;
  std::vector<Mask> stack{Subbase::full(n).bits()};
  visited.insert(stack.back());

  while (!stack.empty()) {
    const Mask node = stack.back();
    stack.pop_back();
    if (consistent_with_mu(node)) {
      satisfiable.push_back(node);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(node & bit)) continue;
      const Mask child = node & ~bit;
      if (visited.insert(child).second) stack.push_back(child);
    }
  }

  return SubbaseFamily(n, maximal_masks(std::move(satisfiable)));
}

SubbaseFamily scan_inclusion_maximal(const BeliefBase& base, const Formula& mu,
                                     ScanMode mode, const Limits& limits) {
  const int n = static_cast<int>(base.size());
  if (n > limits.max_base) {
    throw CapExceeded("base has " + std::to_string(n) + " formulas, cap is " +
                      std::to_string(limits.max_base));
  }

  std::vector<Formula> roots = base.formulas();
  roots.push_back(mu);
  const auto names = variables(roots);
  if (static_cast<int>(names.size()) > limits.max_vars) {
    throw CapExceeded("query uses " + std::to_string(names.size()) +
                      " variables, cap is " + std::to_string(limits.max_vars));
  }

  std::map<std::string, int> var_index;
  int next = 0;
  for (const std::string& name : names) var_index.emplace(name, next++);

  // A subbase is consistent with mu exactly when some model of mu satisfies
  // all of its formulas, so the maximal consistent subbases are the maximal
  // masks in { formulas satisfied by A : A a model of mu }. One pass over the
  // assignment space finds them all.
  const std::int64_t total = std::int64_t{1} << names.size();
  const bool parallel = mode == ScanMode::kParallel;
  std::vector<Mask> satisfied_masks;
  bool mu_satisfiable = false;

#pragma omp parallel if (parallel)
  {
    std::unordered_set<Mask> local;
    Assignment assignment;
    for (const auto& [name, bit] : var_index) assignment[name] = false;

#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < total; ++a) {
      for (const auto& [name, bit] : var_index)
        assignment[name] = (a >> bit) & 1;
      if (!evaluate(mu, assignment)) continue;
      Mask satisfied = 0;
      for (int i = 0; i < n; ++i) {
        if (evaluate(base[i], assignment)) satisfied |= Mask{1} << i;
      }
      local.insert(satisfied);
    }

#pragma omp critical
    {
      if (!local.empty()) mu_satisfiable = true;
      satisfied_masks.insert(satisfied_masks.end(), local.begin(), local.end());
    }
  }

  if (!mu_satisfiable) throw InconsistentInput("mu is unsatisfiable");
  return SubbaseFamily(n, maximal_masks(std::move(satisfied_masks)));
}

SubbaseFamily filter_cardinality_maximal(const SubbaseFamily& family) {
  if (family.empty()) return family;
  const int best = family[0].cardinality();  // canonical order: largest first
  std::vector<Subbase> kept;
  for (Subbase s : family) {
    if (s.cardinality() == best) kept.push_back(s);
  }
  return SubbaseFamily(family.frame_size(), std::move(kept));
}

SubbaseFamily filter_inclusion_maximal(const SubbaseFamily& family) {
  std::vector<Mask> masks;
  for (Subbase s : family) masks.push_back(s.bits());
  return SubbaseFamily(family.frame_size(), maximal_masks(std::move(masks)));
}

SubbaseFamily all_intersections(const SubbaseFamily& family) {
  // Seed with the pairwise intersections of distinct members, then close
  // under intersection with members. Every nonempty intersection of a
  // sub-collection of size >= 2 arrives this way, and nothing else does.
  std::set<Mask> closure;
  const auto& members = family.sets();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Mask z = members[i].bits() & members[j].bits();
      if (z) closure.insert(z);
    }
  }

  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> snapshot(closure.begin(), closure.end());
    for (Mask d : snapshot) {
      for (Subbase y : members) {
        const Mask z = d & y.bits();
        if (z && closure.insert(z).second) grew = true;
      }
    }
  }

  std::vector<Subbase> sets;
  for (Mask m : closure) sets.push_back(Subbase(m));
  return SubbaseFamily(family.frame_size(), std::move(sets));
}

}  // namespace crbr
