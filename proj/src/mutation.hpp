#pragma once

// Compile-time rule mutations used only by the mutant builds that check the
// verification suites are sensitive to single-rule changes. The shipped
// library is built with C2MOT_MUTATION == 0.

#define C2MOT_MUTATION_NONE 0
#define C2MOT_MUTATION_DROP_U2_KILL 1          // u^2 : B_{i+1} -> B_i keeps n < 2
#define C2MOT_MUTATION_DROP_POSITIVE_A_KILL 2  // E~C2 -> M keeps m > 0
#define C2MOT_MUTATION_TORSION_PRODUCTS 3      // torsion * torsion no longer 0

#ifndef C2MOT_MUTATION
#define C2MOT_MUTATION C2MOT_MUTATION_NONE
#endif
