#include "leibcx/io.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "leibcx/catalog.hpp"

namespace leibcx {

namespace {

[[noreturn]] void fail_at(const std::string& pointer, const std::string& what) {
  throw InputError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void allow_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail_at(pointer, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail_at(pointer + "/" + key, "unknown key");
  }
}

int index_at(const Json& v, const std::string& pointer, int bound) {
  if (!v.is_number_integer()) fail_at(pointer, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 1 || i > bound) fail_at(pointer, "index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
  return static_cast<int>(i - 1);
}

Rational rational_at(const Json& v, const std::string& pointer) {
  if (!v.is_string()) fail_at(pointer, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail_at(pointer, e.what());
  }
}

}  // namespace

LeibnizAlgebra parse_algebra(const std::string& text, const std::string& fallback_name) {
  const Json doc = parse_json(text);
  allow_keys(doc, "", {"name", "dim", "basis", "brackets"});
  std::string name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail_at("/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dim")) fail_at("/dim", "missing");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 || doc["dim"].get<long long>() > 64) {
    fail_at("/dim", "expected an integer in 1..64");
  }
  const int m = doc["dim"].get<int>();
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const Json& b = doc["basis"];
    if (!b.is_array() || b.size() != static_cast<std::size_t>(m)) fail_at("/basis", "expected dim labels");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) fail_at("/basis/" + std::to_string(i), "expected a string");
      basis.push_back(b[i].get<std::string>());
    }
  }
  std::vector<Rational> s(static_cast<std::size_t>(m) * m * m);
  if (doc.contains("brackets")) {
    const Json& brackets = doc["brackets"];
    if (!brackets.is_array()) fail_at("/brackets", "expected an array");
    std::set<std::pair<int, int>> seen;
    for (std::size_t r = 0; r < brackets.size(); ++r) {
      const std::string p = "/brackets/" + std::to_string(r);
      const Json& rec = brackets[r];
      allow_keys(rec, p, {"left", "right", "value"});
      for (const char* key : {"left", "right", "value"}) {
        if (!rec.contains(key)) fail_at(p + "/" + key, "missing");
      }
      const int i = index_at(rec["left"], p + "/left", m);
      const int j = index_at(rec["right"], p + "/right", m);
      if (!seen.emplace(i, j).second) {
        fail_at(p, "duplicate bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      const Json& value = rec["value"];
      if (!value.is_array()) fail_at(p + "/value", "expected an array of [index, rational]");
      std::set<int> targets;
      for (std::size_t t = 0; t < value.size(); ++t) {
        const std::string q = p + "/value/" + std::to_string(t);
        if (!value[t].is_array() || value[t].size() != 2) fail_at(q, "expected [index, rational]");
        const int k = index_at(value[t][0], q + "/0", m);
        if (!targets.insert(k).second) fail_at(q, "duplicate target index");
        s[(static_cast<std::size_t>(i) * m + j) * m + k] = rational_at(value[t][1], q + "/1");
      }
    }
  }
  return LeibnizAlgebra(std::move(name), m, std::move(basis), std::move(s));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LeibnizAlgebra load_algebra(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog(source.substr(prefix.size()));
  const std::string text = read_file(source);
  try {
    return parse_algebra(text, std::filesystem::path(source).stem().string());
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json algebra_to_json(const LeibnizAlgebra& a) {
  const int m = a.dim();
  Json brackets = Json::array();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto& terms = a.bracket(i, j);
      if (terms.empty()) continue;
      Json value = Json::array();
      for (const auto& [k, c] : terms) value.push_back(Json::array({k + 1, to_string(c)}));
      brackets.push_back({{"left", i + 1}, {"right", j + 1}, {"value", value}});
    }
  }
  return {{"name", a.name()}, {"dim", m}, {"basis", a.basis_names()}, {"brackets", brackets}};
}

Cochain parse_cochain(const std::string& text, int alphabet) {
  const Json doc = parse_json(text);
  allow_keys(doc, "", {"degree", "coefficients"});
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) fail_at("/degree", "expected an integer");
  const auto degree = doc["degree"].get<long long>();
  if (degree < 0 || degree > 8) fail_at("/degree", "expected a degree in 0..8");
  Cochain c(alphabet, static_cast<int>(degree));
  if (!doc.contains("coefficients")) return c;
  const Json& list = doc["coefficients"];
  if (!list.is_array()) fail_at("/coefficients", "expected an array");
  std::set<Word> seen;
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string p = "/coefficients/" + std::to_string(t);
    const Json& entry = list[t];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array()) fail_at(p, "expected [[indices], rational]");
    if (entry[0].size() != static_cast<std::size_t>(c.arity())) {
      fail_at(p + "/0", "expected " + std::to_string(c.arity()) + " indices");
    }
    Word w;
    for (std::size_t k = 0; k < entry[0].size(); ++k) {
      w.push_back(index_at(entry[0][k], p + "/0/" + std::to_string(k), alphabet));
    }
    if (!seen.insert(w).second) fail_at(p, "duplicate word");
    c.set(w, rational_at(entry[1], p + "/1"));
  }
  return c;
}

Cochain load_cochain(const std::string& path, int alphabet) {
  const std::string text = read_file(path);
  try {
    return parse_cochain(text, alphabet);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

Json word_json(const Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(x + 1);
  return out;
}

}  // namespace

Json cochain_to_json(const Cochain& c) {
  Json coefficients = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c.at(i)) == 0) continue;
    coefficients.push_back(Json::array({word_json(word_from_index(i, c.arity(), c.alphabet())), to_string(c.at(i))}));
  }
  return {{"degree", c.degree()}, {"coefficients", coefficients}};
}

Json tensor_to_json(const TensorElement& t) {
  Json out = Json::array();
  for (const auto& [w, c] : t.terms()) out.push_back(Json::array({word_json(w), to_string(c)}));
  return out;
}

Json matrix_to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (const auto& [r, c, v] : m.triplets()) entries.push_back(Json::array({r + 1, c + 1, to_string(v)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InternalError("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace leibcx
