#pragma once

#include <string>

#include "advshare/codefile.hpp"

namespace fixtures {

inline const char* kQubit422 =
    "p=2 n=4\n"
    "1 1 1 1 | 0 0 0 0\n"
    "0 0 0 0 | 1 1 1 1\n";

inline const char* kFiveQubit =
    "p=2 n=5\n"
    "1 0 0 1 0 | 0 1 1 0 0\n"
    "0 1 0 0 1 | 0 0 1 1 0\n"
    "1 0 1 0 0 | 0 0 0 1 1\n"
    "0 1 0 1 0 | 1 0 0 0 1\n";

inline const char* kQutrit422 =
    "p=3 n=4\n"
    "1 1 1 1 | 0 0 0 0\n"
    "0 0 0 0 | 1 2 1 2\n";

inline advshare::StabilizerCode qubit422() { return advshare::load_stabilizer(kQubit422); }
inline advshare::StabilizerCode five_qubit() { return advshare::load_stabilizer(kFiveQubit); }
inline advshare::StabilizerCode qutrit422() { return advshare::load_stabilizer(kQutrit422); }

}  // namespace fixtures
