#pragma once

#include <string>
#include <vector>

#include "plab/poisson.hpp"

namespace plab {

struct IdentityCheck {
    std::string description;
    bool passed = false;
    std::string detail;
};

/// A named structure plus the identity checklist that pins down its known
/// bracket relations. Construction evaluates every check; a failure raises,
/// so a handed-out entry always verified.
struct GalleryEntry {
    std::string name;
    PoissonStructure structure;
    std::vector<IdentityCheck> identities;
};

/// Builds a gallery entry by name:
///   "sl2"             matrix entries (a,b,c,d) with the standard quadratic bracket
///   "sln:<n>"         standard structure on the n-by-n matrix entries, 2 <= n <= 9
///   "borel-sl2"       upper-triangular Borel coordinates (alpha, beta)
///   "axis"            {x,y} = x with its algebraic canonical pair
///   "ab-family:<a>,<b>"  {x,y} = x^a y^b with its canonical pair (or none for 1,1)
///   "quadratic-xyz"   {x,y} = a z^2, {x,z} = b y^2, {y,z} = c x^2
GalleryEntry gallery(const std::string& name);

/// The fixed names plus parameterized templates, for help text.
std::vector<std::string> gallery_names();

} // namespace plab
