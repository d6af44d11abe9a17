#pragma once
// Error taxonomy shared by the whole library.  Everything derives from
// ps3::Error so callers that only care about "did it work" can catch one type;
// the command line tool maps the subtypes onto its exit codes.

#include <stdexcept>
#include <string>

namespace ps3 {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// invalid input data: malformed polynomials, bad slot lists, broken invariants
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& m) : Error(m) {}
};

// the map degenerates on [-1,1] or its branching collides
struct DegenerateBranching : Error {
  explicit DegenerateBranching(const std::string& m) : Error(m) {}
};

// a query hit a branch point where the answer is ill defined
struct AtBranchPoint : Error {
  explicit AtBranchPoint(const std::string& m) : Error(m) {}
};

// slot colors / cyclic order do not describe any admissible configuration
struct InconsistentColors : Error {
  explicit InconsistentColors(const std::string& m) : Error(m) {}
};

// the covering branch ([1,b] or [b,inf]) does not contain the lift
struct NoPreimageSegment : Error {
  explicit NoPreimageSegment(const std::string& m) : Error(m) {}
};

// a parameter (lambda, h, m, ...) left its admissible range
struct RangeViolation : Error {
  explicit RangeViolation(const std::string& m) : Error(m) {}
};

// an iterative numerical procedure failed to converge / is unsupported
struct SolverFailure : Error {
  explicit SolverFailure(const std::string& m) : Error(m) {}
};

// an evaluation point landed on the slot [-1,1] where the function jumps
struct OnSlot : Error {
  explicit OnSlot(const std::string& m) : Error(m) {}
};

// a secondary preimage z_k(x) fell onto [-1,1] (map not admissible there)
struct PreimageOnSlot : Error {
  explicit PreimageOnSlot(const std::string& m) : Error(m) {}
};

// the eigenvalue backend reported failure
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& m) : Error(m) {}
};

// every start of the moduli matcher failed (not a proof of nonexistence)
struct NoRoot : Error {
  explicit NoRoot(const std::string& m) : Error(m) {}
};

// source and target pants do not have the same conformal moduli
struct ModuliMismatch : Error {
  explicit ModuliMismatch(const std::string& m) : Error(m) {}
};

// the derivative of a conformal map vanished where it must not
struct MapDegenerate : Error {
  explicit MapDegenerate(const std::string& m) : Error(m) {}
};

// continuous tracking of a square-root branch broke down
struct BranchFailure : Error {
  explicit BranchFailure(const std::string& m) : Error(m) {}
};

}  // namespace ps3
