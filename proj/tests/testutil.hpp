#pragma once

#include "patsforge/formula.hpp"

#include <random>

namespace patsforge::testutil {

inline Formula random_formula(std::mt19937& rng, int max_m = 8, int max_k = 4) {
    std::uniform_int_distribution<int> md(3, max_m);
    Formula f;
    f.m = md(rng);
    std::uniform_int_distribution<int> kd(1, max_k);
    int k = kd(rng);
    std::uniform_int_distribution<int> vd(1, f.m);
    for (int j = 0; j < k; ++j) {
        std::array<int, 3> cl;
        cl[0] = vd(rng);
        do cl[1] = vd(rng); while (cl[1] == cl[0]);
        do cl[2] = vd(rng); while (cl[2] == cl[0] || cl[2] == cl[1]);
        f.clauses.push_back(cl);
    }
    return f;
}

inline Formula random_satisfiable_formula(std::mt19937& rng, int max_m = 8, int max_k = 4) {
    for (;;) {
        Formula f = random_formula(rng, max_m, max_k);
        if (solve_1in3_bruteforce(f)) return f;
    }
}

inline Formula phi_ex() {
    Formula f;
    f.m = 4;
    f.clauses = {{1, 2, 3}, {1, 2, 4}};
    return f;
}

}  // namespace patsforge::testutil
