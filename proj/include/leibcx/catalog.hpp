#pragma once

#include <string>
#include <vector>

#include "leibcx/algebra.hpp"

namespace leibcx {

/// Names accepted by catalog(): abelian1..abelian4, L2, N3, B1, sl2, heis3, doubleL2.
const std::vector<std::string>& catalog_names();

/// Built-in algebras. B1 ([e1,e1] = e1) is deliberately not Leibniz; every
/// other entry is returned already validated.
LeibnizAlgebra catalog(const std::string& name);

/// The Leibniz entries (everything except B1).
std::vector<LeibnizAlgebra> leibniz_catalog();

}  // namespace leibcx
