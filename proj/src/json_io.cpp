#include "mvsr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mvsr/error.hpp"

namespace mvsr {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorKind::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

Elem as_elem(const Json& j, const std::string& path, std::size_t bound) {
  const std::uint64_t v = as_uint(j, path);
  if (v >= bound) bad(path, "index " + std::to_string(v) + " out of range (size " + std::to_string(bound) + ")");
  return static_cast<Elem>(v);
}

std::size_t get_size(const Json& j, const std::string& key, const std::string& path) {
  return static_cast<std::size_t>(as_uint(field(j, key, path), path + "/" + key));
}

Table get_table(const Json& j, const std::string& key, std::size_t rows, std::size_t cols,
                std::size_t bound, const std::string& path) {
  const Json& t = field(j, key, path);
  const std::string p = path + "/" + key;
  if (!t.is_array() || t.size() != rows) bad(p, "expected " + std::to_string(rows) + " rows");
  Table out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string pr = p + "/" + std::to_string(r);
    if (!t[r].is_array() || t[r].size() != cols) bad(pr, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = as_elem(t[r][c], pr + "/" + std::to_string(c), bound);
  }
  return out;
}

std::vector<std::string> get_labels(const Json& j, std::size_t size, const std::string& path) {
  const auto it = j.find("labels");
  if (it == j.end()) return {};
  if (!it->is_array() || it->size() != size) bad(path + "/labels", "expected " + std::to_string(size) + " labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (!(*it)[i].is_string()) bad(path + "/labels/" + std::to_string(i), "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

void expect_kind(const Json& j, const std::string& kind, const std::string& path) {
  const Json& k = field(j, "kind", path);
  if (!k.is_string() || k.get<std::string>() != kind) bad(path + "/kind", "expected \"" + kind + "\"");
}

Json table_json(const Table& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (Elem v : t.row(r)) row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

template <typename Labelled>
Json labels_json(const Labelled& a, std::size_t size) {
  Json out = Json::array();
  for (Elem i = 0; i < size; ++i) out.push_back(a.label(i));
  return out;
}

FiniteSemiring semiring_at(const Json& j, const std::string& path) {
  expect_kind(j, "semiring", path);
  const std::size_t n = get_size(j, "size", path);
  if (n == 0) bad(path + "/size", "carrier must be nonempty");
  Table add = get_table(j, "add", n, n, n, path);
  Table mul = get_table(j, "mul", n, n, n, path);
  const Elem zero = as_elem(field(j, "zero", path), path + "/zero", n);
  const Elem one = as_elem(field(j, "one", path), path + "/one", n);
  return FiniteSemiring(n, std::move(add), std::move(mul), zero, one, get_labels(j, n, path));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const FiniteSemiring& s) {
  return Json{{"kind", "semiring"},      {"size", s.size()},
              {"add", table_json(s.add_table())}, {"mul", table_json(s.mul_table())},
              {"zero", s.zero()},         {"one", s.one()},
              {"labels", labels_json(s, s.size())}};
}

Json to_json(const MvAlgebra& a) {
  Json out{{"kind", "mv"},
           {"size", a.size()},
           {"oplus", table_json(a.oplus_table())},
           {"star", a.star_table()},
           {"zero", a.zero()},
           {"labels", labels_json(a, a.size())}};
  if (!a.values().empty()) {
    Json values = Json::array();
    for (const Rational& v : a.values()) values.push_back(to_string(v));
    out["values"] = std::move(values);
  }
  return out;
}

Json to_json(const FiniteSemimodule& m) {
  return Json{{"kind", "semimodule"},
              {"scalars", to_json(m.scalars())},
              {"size", m.size()},
              {"add", table_json(m.add_table())},
              {"zero", m.zero()},
              {"action", table_json(m.action_table())},
              {"labels", labels_json(m, m.size())}};
}

Json to_json(const SemiringMatrix& u) {
  return Json{{"kind", "matrix"},
              {"scalars", to_json(*u.scalars)},
              {"rows", u.rows},
              {"cols", u.cols},
              {"entries", table_json(u.entries)}};
}

FiniteSemiring semiring_from_json(const Json& j) { return semiring_at(j, ""); }

MvAlgebra mv_from_json(const Json& j) {
  expect_kind(j, "mv", "");
  const std::size_t n = get_size(j, "size", "");
  if (n == 0) bad("/size", "carrier must be nonempty");
  Table oplus = get_table(j, "oplus", n, n, n, "");
  const Json& star = field(j, "star", "");
  if (!star.is_array() || star.size() != n) bad("/star", "expected " + std::to_string(n) + " entries");
  std::vector<Elem> st;
  for (std::size_t i = 0; i < n; ++i) st.push_back(as_elem(star[i], "/star/" + std::to_string(i), n));
  const Elem zero = as_elem(field(j, "zero", ""), "/zero", n);
  std::vector<Rational> values;
  if (const auto it = j.find("values"); it != j.end()) {
    if (!it->is_array() || it->size() != n) bad("/values", "expected " + std::to_string(n) + " values");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) bad("/values/" + std::to_string(i), "expected a rational string");
      values.push_back(parse_rational((*it)[i].get<std::string>()));
    }
  }
  return MvAlgebra(n, std::move(oplus), std::move(st), zero, get_labels(j, n, ""), std::move(values));
}

SemiringPtr scalars_from_json(const Json& j, const std::string& path) {
  if (j.is_object()) return make_semiring(semiring_at(j, path));
  if (!j.is_string()) bad(path, "expected a semiring object or a reference string");
  const std::string ref = j.get<std::string>();
  if (ref == "boolean") return make_semiring(boolean_semiring());
  if (ref == "trivial") return make_semiring(trivial_semiring());
  if (ref.size() >= 2 && ref[0] == 'L') {
    const auto colon = ref.find(':');
    const std::string digits = ref.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
    const std::string which = colon == std::string::npos ? "vee_odot" : ref.substr(colon + 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() < 6) {
      const MvAlgebra chain = lukasiewicz_chain(std::stoul(digits));
      if (which == "vee_odot") return make_semiring(reduct_vee_odot(chain));
      if (which == "wedge_oplus") return make_semiring(reduct_wedge_oplus(chain));
    }
  }
  bad(path, "unknown scalar reference \"" + ref + "\"");
}

FiniteSemimodule semimodule_from_json(const Json& j) {
  expect_kind(j, "semimodule", "");
  SemiringPtr s = scalars_from_json(field(j, "scalars", ""));
  const std::size_t m = get_size(j, "size", "");
  if (m == 0) bad("/size", "carrier must be nonempty");
  Table add = get_table(j, "add", m, m, m, "");
  const Elem zero = as_elem(field(j, "zero", ""), "/zero", m);
  Table action = get_table(j, "action", s->size(), m, m, "");
  return FiniteSemimodule(std::move(s), m, std::move(add), zero, std::move(action), get_labels(j, m, ""));
}

SemiringMatrix matrix_from_json(const Json& j) {
  expect_kind(j, "matrix", "");
  SemiringPtr s = scalars_from_json(field(j, "scalars", ""));
  const std::size_t rows = get_size(j, "rows", ""), cols = get_size(j, "cols", "");
  Table entries = get_table(j, "entries", rows, cols, s->size(), "");
  return SemiringMatrix{std::move(s), rows, cols, std::move(entries)};
}

Algebra algebra_from_json(const Json& j) {
  const Json& k = field(j, "kind", "");
  if (!k.is_string()) bad("/kind", "expected a string");
  const std::string kind = k.get<std::string>();
  if (kind == "semiring") return semiring_from_json(j);
  if (kind == "mv") return mv_from_json(j);
  if (kind == "semimodule") return semimodule_from_json(j);
  if (kind == "matrix") return matrix_from_json(j);
  bad("/kind", "unknown kind \"" + kind + "\"");
}

}  // namespace mvsr
