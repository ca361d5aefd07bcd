#ifndef SDPEXACT_SDP_PROBLEM_HPP
#define SDPEXACT_SDP_PROBLEM_HPP

#include "numkit.hpp"

#include <vector>

namespace sdpexact {

// Standard primal form:  min C . X  s.t.  A_i . X = b_i,  X >= 0.
struct SdpProblem {
    int d = 0;
    std::vector<SymMatrix> A;
    Vec b;
    SymMatrix C;

    int l() const { return static_cast<int>(A.size()); }
    void validate() const;
};

}  // namespace sdpexact

#endif
