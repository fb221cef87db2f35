#ifndef SIGNEDFLIPS_ORACLE_HPP
#define SIGNEDFLIPS_ORACLE_HPP

#include <map>
#include <vector>

#include "signedflips/triangulation.hpp"

namespace sdf {

using SignState = std::map<Triangle, Sign>;

/// Brute-force signability check that never looks at the interaction graph:
/// every sign assignment of the start triangulation is propagated through the
/// sequence (a flip survives iff its removed pair shares a sign; the inserted
/// pair gets the opposite). True iff some initial assignment survives.
/// Throws TooLarge above 20 start triangles.
bool oracle_signable(const FlipSequence& s);

/// All surviving initial assignments, in canonical order.
std::vector<SignState> oracle_all_signings(const FlipSequence& s);

}  // namespace sdf

#endif
