#pragma once

#include "taxonet/network.hpp"

namespace taxonet::fixtures {

// The running-example source: nine terms a1..c3, eight hyperedges including
// ({b1,b2},a2), ({c2,c3},b2) and the cycle through ({b1,b3},c2).
Source star_source();

// star_source with the standard object base: c1->{o1}, c2->{o2}, c3->{o3},
// b3->{o4}.
Source star_source_with_objects();

// The same taxonomy partitioned over peers Pa/Pb/Pc; cross-peer edges become
// articulations. Flattening it yields star_source (qualified).
Network star_network();
Network star_network_with_objects();

// Overrides the star network's interpretation: map of local qualified name
// ("Pc:c2") to objects.
Network star_network_with(const std::map<std::string, std::vector<std::string>>& interp);

// The bird-watching source: Penguin/Pelican/Ostrich under Animal, Bird
// subsuming Penguin, Ostrich and Animal&FlyingObject; objects 1, 2, 3.
Source intro_source();

Term T(const std::string& name);
ObjectId O(const std::string& id);
TermSet terms(std::initializer_list<std::string> names);
ObjSet objects(std::initializer_list<std::string> ids);

}  // namespace taxonet::fixtures
