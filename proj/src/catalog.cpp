#include "leibcx/catalog.hpp"

#include <algorithm>

namespace leibcx {

namespace {

struct Entry {
  int left, right, target;  // 1-based
  int value;
};

LeibnizAlgebra from_entries(const std::string& name, int dim, std::vector<std::string> names,
                            std::initializer_list<Entry> entries) {
  std::vector<Rational> s(static_cast<std::size_t>(dim) * dim * dim);
  for (const Entry& e : entries) {
    s[(static_cast<std::size_t>(e.left - 1) * dim + (e.right - 1)) * dim + (e.target - 1)] = e.value;
  }
  return LeibnizAlgebra(name, dim, std::move(names), std::move(s));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"abelian1", "abelian2", "abelian3", "abelian4", "L2",
                                              "N3",       "B1",       "sl2",      "heis3",    "doubleL2"};
  return names;
}

LeibnizAlgebra catalog(const std::string& name) {
  if (name.rfind("abelian", 0) == 0 && name.size() == 8 && name[7] >= '1' && name[7] <= '4') {
    const int m = name[7] - '0';
    return validated(from_entries(name, m, {}, {}));
  }
  if (name == "L2") return validated(from_entries(name, 2, {}, {{1, 1, 2, 1}}));
  if (name == "N3") return validated(from_entries(name, 3, {}, {{1, 1, 2, 1}, {1, 2, 3, 1}}));
  if (name == "B1") return from_entries(name, 1, {}, {{1, 1, 1, 1}});
  if (name == "sl2") {
    // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return validated(from_entries(name, 3, {"h", "e", "f"},
                                  {{1, 2, 2, 2},
                                   {2, 1, 2, -2},
                                   {1, 3, 3, -2},
                                   {3, 1, 3, 2},
                                   {2, 3, 1, 1},
                                   {3, 2, 1, -1}}));
  }
  if (name == "heis3") return validated(from_entries(name, 3, {}, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
  if (name == "doubleL2") {
    DoubleResult d = double_extension(ExtensionDatum(catalog("L2")));
    const std::vector<std::string> names = d.algebra.basis_names();
    return validated(LeibnizAlgebra("doubleL2", d.algebra.dim(), names, d.algebra.structure()));
  }
  throw InputError("unknown catalog algebra '" + name + "'");
}

std::vector<LeibnizAlgebra> leibniz_catalog() {
  std::vector<LeibnizAlgebra> out;
  for (const auto& name : catalog_names()) {
    if (name != "B1") out.push_back(catalog(name));
  }
  return out;
}

}  // namespace leibcx
