#pragma once

// Small normalized PPI datafile: three binary interactions, one self
// interaction and two complexes (sizes 3 and 4) sharing node E. Z is
// declared but never interacts.
inline constexpr const char* kPpiFixture =
    "# did=5S\n"
    "INTERACTOR\tA\n"
    "INTERACTOR\tB\n"
    "INTERACTOR\tC\n"
    "INTERACTOR\tD\n"
    "INTERACTOR\tE\n"
    "INTERACTOR\tF\n"
    "INTERACTOR\tG\n"
    "INTERACTOR\tH\n"
    "INTERACTOR\tZ\n"
    "INTERACTION\tA;B\n"
    "INTERACTION\tB;C\n"
    "INTERACTION\tA;F\n"
    "INTERACTION\tD\n"
    "INTERACTION\tC;D;E\n"
    "INTERACTION\tE;F;G;H\n";
