#pragma once

#include "patsforge/formula.hpp"
#include "patsforge/gadget.hpp"
#include "patsforge/painter.hpp"

namespace patsforge {

/// The reduced pattern P(phi): GADGET in the south-west block, the cyan
/// assignment band above it, and the joint + CIRCUIT to the east, painted at
/// the gadget's height. 11-colored and a pure function of the formula.
Pattern reduce(const Formula& f, const GadgetBlueprint& bp);

/// Convenience overload reusing an already assembled gadget pattern.
Pattern reduce(const Formula& f, const GadgetBlueprint& bp, const Pattern& gadget);

/// Seed whose x-axis hardcodes GADGET and the clause encoding and whose
/// y-axis hardcodes GADGET plus the assignment word.
LSeed build_seed(const Formula& f, const Assignment& a, const GadgetBlueprint& bp);

}  // namespace patsforge
