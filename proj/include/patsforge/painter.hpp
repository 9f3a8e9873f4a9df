#pragma once

#include "patsforge/core.hpp"
#include "patsforge/formula.hpp"

namespace patsforge {

/// Column plan for the joint + clause-encoding region east of GADGET.
/// Width (m+1) + (k+1) + k(h+m) + k(k-1)/2, height h+m+k.
struct CircuitLayout {
    enum class Kind { joint, clause_c, prepad, membership, postpad, trailing_c };
    struct Column {
        Kind kind;
        int clause = 0;   // 1-based clause j for block/c columns
        int offset = 0;   // joint index q, or offset o inside the clause block
        bool member = false;  // membership columns: variable occurs in clause
    };

    int h = 0, m = 0, k = 0;
    std::vector<Column> columns;

    int width() const { return (int)columns.size(); }
    int height() const { return h + m + k; }
};

CircuitLayout circuit_layout(const Formula& f, int h);

/// Paints the pattern CIRCUIT (plus its joint) directly from the layout.
/// Never consults an assignment: the result is what any satisfying
/// assignment assembles.
Pattern paint_circuit(const Formula& f, int h);

}  // namespace patsforge
