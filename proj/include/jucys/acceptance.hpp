#pragma once

#include <string>
#include <vector>

namespace jucys {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification suite (the exit gate) and returns one result per
// criterion.  Everything is exact; no tolerances appear anywhere.
std::vector<CriterionResult> run_acceptance();

}  // namespace jucys
