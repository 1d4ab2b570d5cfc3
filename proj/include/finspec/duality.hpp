#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finspec/enumerate.hpp"
#include "finspec/lattice.hpp"
#include "finspec/poset.hpp"

// Finite Stone/Birkhoff duality.
//
// A finite spectral space is the same thing as a finite Priestley space with
// the discrete topology, so one Poset represents both sides and the
// correspondence between them is the identity.

namespace finspec {

/// Lattice whose elements are point sets of a poset, ordered by inclusion.
/// Element i is members[i]; members are in increasing mask order.
struct SetLattice {
  Lattice lattice;
  std::vector<PointSet> members;

  std::optional<Element> index_of(PointSet s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || *it != s) return std::nullopt;
    return static_cast<Element>(it - members.begin());
  }
};

namespace detail {

// `sets` must be sorted and every strict inclusion inside the family must be
// reachable by adding one point at a time (true for down-sets, up-sets and
// the constructible sets), so single-point steps generate the order.
inline SetLattice inclusion_lattice(std::vector<PointSet> sets) {
  std::vector<Relation> rel;
  for (Element a = 0; a < sets.size(); ++a) {
    for (Point x = 0; x < PointSet::kCapacity; ++x) {
      if (sets[a].contains(x)) continue;
      PointSet bigger = sets[a];
      bigger.insert(x);
      auto it = std::lower_bound(sets.begin(), sets.end(), bigger);
      if (it != sets.end() && *it == bigger) rel.emplace_back(a, static_cast<Element>(it - sets.begin()));
    }
  }
  Lattice l(sets.size(), rel);
  return SetLattice{std::move(l), std::move(sets)};
}

}  // namespace detail

/// The lattice of down-sets (compact opens) of P. Throws ResourceLimit above
/// `cap` elements.
inline SetLattice downset_lattice(const Poset& p, std::size_t cap = kDefaultSetCap) {
  return detail::inclusion_lattice(downsets(p, cap));
}

/// The lattice of up-sets of P (complements of compact opens), which is the
/// lattice of compact opens of the inverse space.
inline SetLattice qccl_lattice(const Poset& p, std::size_t cap = kDefaultSetCap) {
  return detail::inclusion_lattice(upsets(p, cap));
}

/// The spectrum of a lattice: its prime ideals ordered by inclusion, numbered
/// in increasing member-set order.
struct Spectrum {
  Poset poset;
  std::vector<LatticeIdeal> primes;
};

inline Spectrum spectrum(const Lattice& l) {
  std::vector<LatticeIdeal> primes = prime_ideals(l);
  PointSet::check_capacity(primes.size());
  std::vector<PointSet> up(primes.size());
  for (Point i = 0; i < primes.size(); ++i) {
    for (Point j = 0; j < primes.size(); ++j) {
      if (primes[i].is_subset_of(primes[j])) up[i].insert(j);
    }
  }
  return Spectrum{Poset::from_up_sets(std::move(up)), std::move(primes)};
}

inline Poset spec_poset(const Lattice& l) { return spectrum(l).poset; }

/// D(a): the primes not containing a. Its complement is V(a).
inline PointSet d_map(const Spectrum& s, Element a) {
  PointSet out;
  for (Point i = 0; i < s.primes.size(); ++i) {
    if (!s.primes[i].contains(a)) out.insert(i);
  }
  return out;
}

inline PointSet d_map(const Lattice& l, Element a) { return d_map(spectrum(l), a); }

/// Mutually inverse order isomorphism between two finite structures.
struct Isomorphism {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
};

/// The representation a ↦ D(a) into the down-set lattice of the spectrum,
/// returned when it is an isomorphism. Absent exactly for non-distributive
/// lattices.
inline std::optional<Isomorphism> stone_roundtrip(const Lattice& l) {
  const Spectrum s = spectrum(l);
  const SetLattice target = downset_lattice(s.poset);
  if (target.lattice.size() != l.size()) return std::nullopt;

  Isomorphism iso;
  iso.forward.resize(l.size());
  iso.backward.assign(l.size(), l.size());
  for (Element a = 0; a < l.size(); ++a) {
    const auto image = target.index_of(d_map(s, a));
    if (!image || iso.backward[*image] != l.size()) return std::nullopt;
    iso.forward[a] = *image;
    iso.backward[*image] = a;
  }
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) {
      if (l.leq(a, b) != target.lattice.leq(iso.forward[a], iso.forward[b])) return std::nullopt;
    }
  }
  return iso;
}

/// P is recovered, up to isomorphism, as the spectrum of its down-set lattice.
inline bool poset_roundtrip(const Poset& p, std::size_t cap = kDefaultSetCap) {
  return are_isomorphic(p, spec_poset(downset_lattice(p, cap).lattice));
}

/// The Boolean algebra generated by the down-set lattice (all constructible
/// sets) with the inclusion embedding of the down-sets.
struct BooleanEnvelope {
  SetLattice envelope;
  SetLattice downsets;
  /// embedding[i] is the envelope element equal to down-set i.
  std::vector<Element> embedding;
};

inline constexpr std::size_t kEnvelopeMaxPoints = 12;

inline BooleanEnvelope boolean_envelope(const Poset& p) {
  if (p.size() > kEnvelopeMaxPoints) {
    throw ResourceLimit("boolean envelope is capped at " + std::to_string(kEnvelopeMaxPoints) + " points");
  }
  std::vector<PointSet> all;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
    const PointSet s = PointSet::from_mask(m);
    if (is_constructible(p, s)) all.push_back(s);
  }
  BooleanEnvelope out{detail::inclusion_lattice(std::move(all)), downset_lattice(p), {}};
  for (PointSet d : out.downsets.members) {
    const auto idx = out.envelope.index_of(d);
    if (!idx) throw InvariantViolation("down-set " + to_string(d) + " is not constructible");
    out.embedding.push_back(*idx);
  }
  return out;
}

}  // namespace finspec
