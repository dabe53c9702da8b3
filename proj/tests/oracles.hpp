#pragma once

// Slow reference computations for tests. They only read multiplication and
// action tables and share no code with the library's algorithms.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "equirank/gset.hpp"

namespace oracle {

using equirank::Element;
using equirank::FiniteGroup;
using equirank::GSet;
using equirank::Point;

using ElementSet = std::set<Element>;
using Map = std::vector<Point>;

// Every subset closed under multiplication that contains the identity
// (2^|G| subsets, so |G| <= 12 or so).
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

// mu(H, K) as the alternating count of strict chains from H to K.
int chain_moebius(const std::vector<ElementSet>& subgroups, const ElementSet& h,
                  const ElementSet& k);

ElementSet conjugate(const FiniteGroup& g, const ElementSet& h, Element by);
bool conjugate_subgroups(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

ElementSet stabilizer(const GSet& x, Point p);
std::set<Point> orbit(const GSet& x, Point p);

// Orbits whose stabilizers are conjugate to h.
std::size_t direct_alpha(const GSet& x, const ElementSet& h);

// All equivariant self-maps, found by checking every one of the m^m arrays.
std::vector<Map> all_equivariant_maps(const GSet& x);

bool is_equivariant(const GSet& x, const Map& f);

// Smallest G-invariant equivalence relation containing (a, b), as a class
// label per point with labels in order of first appearance.
std::vector<std::uint32_t> invariant_closure(const GSet& x, Point a, Point b);
std::vector<std::uint32_t> kernel(const Map& f);

// Configuration tuples under (g.x)(h) = x(g^-1 h), with tuples indexed by the
// supplied element order.
std::vector<std::uint32_t> shift_tuple(const FiniteGroup& g,
                                       const std::vector<Element>& order,
                                       const std::vector<std::uint32_t>& x, Element by);

}  // namespace oracle
