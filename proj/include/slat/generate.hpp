#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

enum class InstanceKind { semilattice, lattice, distributive_lattice, bounded_semilattice };
enum class GenMethod { closure_system, exhaustive };

const char* kind_name(InstanceKind k);
InstanceKind kind_from_name(const std::string& name);

// Identical spec, identical instance, bit for bit.
struct InstanceSpec {
  InstanceKind kind = InstanceKind::semilattice;
  int size = 0;
  std::uint64_t seed = 0;
  GenMethod method = GenMethod::closure_system;

  std::string id() const;
};

// Closure-system sampler: random subsets of a ground set closed under
// intersection, ordered by inclusion. Bounded kinds adjoin the ground set as
// top. Throws SpecInfeasible on bad sizes or exhausted retries.
MeetSemilattice random_instance(const InstanceSpec& spec);

// One representative per isomorphism class of meet-semilattices on n
// elements, in canonical order. n <= 7.
std::vector<MeetSemilattice> exhaustive_instances(int n);

// Sizes 1..n concatenated, with stable ids "exhaustive:<size>:<index>".
std::vector<std::pair<std::string, MeetSemilattice>> exhaustive_family(int n);

}  // namespace slat
