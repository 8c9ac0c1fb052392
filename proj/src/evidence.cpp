#include "crbr/evidence.hpp"

#include "crbr/errors.hpp"

namespace crbr {

MassFunction::MassFunction(int frame_size,
                           std::map<Subbase, Rational, CanonicalLess> masses)
    : frame_size_(frame_size), masses_(std::move(masses)) {
  Rational sum = 0;
  const Subbase frame = Subbase::full(frame_size_);
  for (const auto& [focal, mass] : masses_) {
    if (focal.empty()) throw EmptySubbase("the empty set cannot be focal");
    if (!focal.subset_of(frame)) {
      throw Error("focal set does not fit a frame of size " +
                  std::to_string(frame_size_));
    }
    if (mass <= 0) throw Error("focal masses must be positive");
    sum += mass;
  }
  if (sum != 1) throw Error("masses must sum to 1");
}

Rational MassFunction::mass_of(Subbase s) const {
  const auto it = masses_.find(s);
  return it == masses_.end() ? Rational(0) : it->second;
}

MassFunction simple_bba(Subbase member, int frame_size) {
  if (member.empty()) {
    throw EmptySubbase("a simple support function needs a nonempty subbase");
  }
  const Rational weight(member.cardinality(), frame_size);
  const Subbase frame = Subbase::full(frame_size);
  std::map<Subbase, Rational, CanonicalLess> masses;
  if (member == frame) {
    masses[frame] = 1;
  } else {
    masses[member] = weight;
    masses[frame] = 1 - weight;
  }
  return MassFunction(frame_size, std::move(masses));
}

MassFunction dempster_combine(const MassFunction& lhs, const MassFunction& rhs,
                              Rational* conflict_out) {
  if (lhs.frame_size() != rhs.frame_size()) {
    throw Error("cannot combine mass functions over different frames");
  }

  std::map<Subbase, Rational, CanonicalLess> product;
  Rational conflict = 0;
  for (const auto& [x, mx] : lhs.masses()) {
    for (const auto& [y, my] : rhs.masses()) {
      const Subbase z = x.intersect(y);
      const Rational weight = mx * my;
      if (z.empty()) {
        conflict += weight;
      } else {
        product[z] += weight;
      }
    }
  }
  if (conflict == 1) {
    throw TotalConflict("the sources are in total conflict (k = 1)");
  }
  const Rational scale = 1 - conflict;
  for (auto& [focal, mass] : product) mass /= scale;

  if (conflict_out) *conflict_out = conflict;
  return MassFunction(lhs.frame_size(), std::move(product));
}

MassFunction combine_all(const std::vector<MassFunction>& sources,
                         Rational* global_conflict_out) {
  if (sources.empty()) {
    throw InvalidFamily("at least one mass function is required");
  }
  // Associativity makes the fold order irrelevant for the combined masses;
  // the global conflict of the single n-way combination is recovered from
  // the stepwise conflicts via 1 - k = prod_i (1 - k_i).
  MassFunction combined = sources.front();
  Rational agreement = 1;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    Rational step_conflict = 0;
    combined = dempster_combine(combined, sources[i], &step_conflict);
    agreement *= 1 - step_conflict;
  }
  if (global_conflict_out) *global_conflict_out = 1 - agreement;
  return combined;
}

Rational belief_of(const MassFunction& m, Subbase a) {
  Rational total = 0;
  for (const auto& [focal, mass] : m.masses()) {
    if (focal.subset_of(a)) total += mass;
  }
  return total;
}

Rational plausibility_of(const MassFunction& m, Subbase a) {
  const Subbase complement(Subbase::full(m.frame_size()).bits() & ~a.bits());
  return 1 - belief_of(m, complement);
}

CredibilityTable credibility_table(const SubbaseFamily& family) {
  if (family.empty()) {
    throw InvalidFamily("a credibility table needs at least one subbase");
  }
  for (Subbase member : family) {
    if (member.empty()) {
      throw EmptySubbase("family members must be nonempty");
    }
  }

  std::vector<MassFunction> sources;
  for (Subbase member : family) {
    sources.push_back(simple_bba(member, family.frame_size()));
  }

  CredibilityTable table;
  table.family = family;
  table.intersections = all_intersections(family);
  table.combined = combine_all(sources, &table.conflict);
  for (Subbase member : family) {
    table.member_mass.push_back(table.combined.mass_of(member));
    table.member_bel.push_back(belief_of(table.combined, member));
  }
  for (Subbase x : table.intersections) {
    table.intersection_mass.push_back(table.combined.mass_of(x));
    table.intersection_bel.push_back(belief_of(table.combined, x));
  }
  return table;
}

}  // namespace crbr
