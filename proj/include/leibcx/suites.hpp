#pragma once

// Named groups of checks run by `leibcx check`.

#include <string>
#include <vector>

#include "leibcx/algebra.hpp"
#include "leibcx/report.hpp"

namespace leibcx {

/// complex, subcomplex, dr, anticyclic, dual, all.
const std::vector<std::string>& suite_names();

/// Boundary identities of the free Lie and Loday complexes up to degree N.
std::vector<CheckResult> complex_suite(const LeibnizAlgebra& a, int max_degree);
/// ALP is a subcomplex, b = d^T in implicit coordinates, and HA^n = HA_n.
std::vector<CheckResult> subcomplex_suite(const LeibnizAlgebra& a, int max_degree);
std::vector<CheckResult> dr_suite(const LeibnizAlgebra& a, int max_degree);
/// Anti-cyclic characterizations in degrees 1-3, implicit round trips, and
/// agreement with anti-invariance of the double.
std::vector<CheckResult> anticyclic_suite(const LeibnizAlgebra& a, int max_degree);
/// b o b = 0, the tilde relation, structure tensors and dual brackets.
std::vector<CheckResult> dual_suite(const LeibnizAlgebra& a, int max_degree);

/// Throws InputError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name, const LeibnizAlgebra& a, int max_degree);

}  // namespace leibcx
