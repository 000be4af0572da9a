#pragma once

#include "g2hol/expr.hpp"
#include "g2hol/geometry.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2hol {

enum class SystemId { P1, T2B, T2C00, T2C10, T2C11, T3B, T4B0, T4B1 };

inline constexpr std::array<SystemId, 8> kAllSystems = {SystemId::P1,    SystemId::T2B,   SystemId::T2C00,
                                                        SystemId::T2C10, SystemId::T2C11, SystemId::T3B,
                                                        SystemId::T4B0,  SystemId::T4B1};

std::string to_string(SystemId s);
SystemId parse_system(const std::string& s);  // throws std::invalid_argument
// Catalogue label of the algebra the normal form targets, e.g. "2c(1,0)".
std::string system_algebra(SystemId s);

using FunctionBundle = std::map<std::string, Expr>;

struct SlotSchema {
  std::string name;
  std::vector<int> vars;  // admissible variables, 1-based
  int row, col;           // position in B, 0-based
};
const std::vector<SlotSchema>& schema(SystemId s);

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DependenceViolation : public std::domain_error {
 public:
  DependenceViolation(const std::string& slot, int var)
      : std::domain_error("slot '" + slot + "' depends on x" + std::to_string(var) + ", which is not admissible"),
        slot_(slot),
        var_(var) {}
  const std::string& slot() const { return slot_; }
  int var() const { return var_; }

 private:
  std::string slot_;
  int var_;
};

class SynthesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown slots -> SchemaError; forbidden dependence -> DependenceViolation.
void check_schema(SystemId s, const FunctionBundle& fns);
// Missing slots are zero, except f (P1) which defaults to 1.
Coframe build_coframe(SystemId s, const FunctionBundle& fns);

struct Residual {
  std::string tag;
  Expr value;
};
std::vector<Residual> residuals(SystemId s, const FunctionBundle& fns);
bool all_zero(const std::vector<Residual>& r);

// (q2)_x4x4 - 2 (q2)_x3x7
Expr check_integrability_2b(const Expr& q2);

// Names accepted by synthesize; *_const entries are integration constants (default 0).
const std::vector<SlotSchema>& free_schema(SystemId s);
FunctionBundle synthesize(SystemId s, const FunctionBundle& free_inputs);
// Inverse of synthesize: free slots and integration constants of a full bundle.
FunctionBundle extract_free(SystemId s, const FunctionBundle& full);
// Random low-degree free inputs satisfying the preconditions of synthesize.
FunctionBundle random_admissible(SystemId s, std::mt19937_64& rng);

}  // namespace g2hol
