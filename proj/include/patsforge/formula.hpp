#pragma once

#include "patsforge/core.hpp"

#include <array>
#include <iosfwd>
#include <optional>

namespace patsforge {

/// Monotone 1-in-3-SAT instance: every clause is three distinct positive
/// variables out of 1..m.
struct Formula {
    int m = 0;
    std::vector<std::array<int, 3>> clauses;

    int k() const { return (int)clauses.size(); }
};

/// Boolean vector of length m; bits[i-1] is the value of variable v_i and
/// maps to seed glue T when true, F when false.
struct Assignment {
    std::vector<bool> bits;

    int size() const { return (int)bits.size(); }
    bool operator==(const Assignment& o) const { return bits == o.bits; }
};

/// Formula file: `p mono13 <m> <k>` then k lines `<i> <j> <l>`.
Formula read_formula(std::istream& in);
Formula parse_formula(const std::string& text);
Formula load_formula(const std::string& path);
void write_formula(std::ostream& out, const Formula& f);

/// Parses "FFTT", "0011" or "fftt" style strings.
Assignment parse_assignment(const std::string& text);
std::string to_string(const Assignment& a);

/// True iff every clause has exactly one true variable.
bool satisfies_1in3(const Formula& f, const Assignment& a);

/// Lexicographically least satisfying assignment (F < T), if any.
/// Enumeration oracle, feasible for m <= max_vars.
std::optional<Assignment> solve_1in3_bruteforce(const Formula& f, int max_vars = 24);

/// All satisfying assignments in lexicographic order. Same size guard.
std::vector<Assignment> enumerate_1in3(const Formula& f, int max_vars = 24);

/// Clause encoding along the x-axis: per clause j a `c`, h pre-pad `n`s,
/// m membership glues (v / n), j-1 post-pad `n`s; one final `c`.
/// Length (k+1) + k(h+m) + k(k-1)/2. Joint columns are not included.
std::vector<Glue> encode_x(const Formula& f, int h);

/// Assignment encoding along the y-axis: (F/T per bit) then F^k, bottom up.
std::vector<Glue> encode_y(const Assignment& a, int k);

/// Seed for simulating CIRCUIT without GADGET: the y-axis emulates GADGET's
/// east face (f below, one F at height h) before the assignment word.
LSeed build_circuit_seed(const Formula& f, const Assignment& a, int h);

}  // namespace patsforge
