#include "shifteq/json_io.hpp"

#include "shifteq/essential.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace shifteq {

namespace {

const BigInt kI64Min = std::numeric_limits<std::int64_t>::min();
const BigInt kI64Max = std::numeric_limits<std::int64_t>::max();

bool decimal_string(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Json json_of(const BigInt& n) {
  if (n >= kI64Min && n <= kI64Max)
    return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

Json json_of(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return json_of(num);
  return Json(num.str() + "/" + den.str());
}

Json json_of(const IntMatrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(json_of(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const RatMatrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(json_of(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const DimClass& c) {
  Json v = Json::array();
  for (std::size_t i = 0; i < c.v.rows(); ++i) v.push_back(json_of(c.v(i, 0)));
  return Json{{"v", std::move(v)}, {"k", c.k}};
}

Json json_of(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const RelationCheck& c : rep.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.residual) entry["residual"] = json_of(*c.residual);
    checks.push_back(std::move(entry));
  }
  return Json{{"ok", rep.ok()}, {"checks", std::move(checks)}};
}

Json json_of(const SEWitness& w) {
  return Json{{"A", json_of(w.A.matrix())},
              {"B", json_of(w.B.matrix())},
              {"R", json_of(w.R)},
              {"S", json_of(w.S)},
              {"m", w.m}};
}

BigInt bigint_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (decimal_string(s)) return BigInt(s);
  }
  throw DomainError(what + ": expected an integer");
}

IntMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw DomainError(what + ": expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw DomainError(what + ": rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw DomainError(what + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      M(i, c) = bigint_from_json(j[i][c], what);
  }
  return M;
}

IntMatrix column_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw DomainError(what + ": expected a nonempty array");
  IntMatrix v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i)
    v(i, 0) = bigint_from_json(j[i], what);
  return v;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(what + ": missing field '" + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const std::string& what) {
  BigInt n = bigint_from_json(j, what);
  if (n < 0 || n > 1'000'000) throw DomainError(what + ": out of range");
  return static_cast<std::size_t>(n);
}

}  // namespace

SEWitness witness_from_json(const Json& j) {
  const std::string w = "witness file";
  return SEWitness(EssentialMatrix(matrix_from_json(field(j, "A", w), w + " A")),
                   EssentialMatrix(matrix_from_json(field(j, "B", w), w + " B")),
                   matrix_from_json(field(j, "R", w), w + " R"),
                   matrix_from_json(field(j, "S", w), w + " S"),
                   size_from_json(field(j, "m", w), w + " m"));
}

RelaxedSEWitness relaxed_witness_from_json(const Json& j) {
  const std::string w = "witness file";
  return RelaxedSEWitness(
      EssentialMatrix(matrix_from_json(field(j, "A", w), w + " A")),
      EssentialMatrix(matrix_from_json(field(j, "B", w), w + " B")),
      matrix_from_json(field(j, "R", w), w + " R"),
      matrix_from_json(field(j, "S", w), w + " S"),
      matrix_from_json(field(j, "T", w), w + " T"),
      size_from_json(field(j, "m", w), w + " m"),
      size_from_json(field(j, "k", w), w + " k"));
}

GradedHomSpec homspec_from_json(const Json& j) {
  const std::string w = "homomorphism file";
  EssentialMatrix A(matrix_from_json(field(j, "A", w), w + " A"));
  EssentialMatrix B(matrix_from_json(field(j, "B", w), w + " B"));
  const Json& images = field(j, "images", w);
  if (!images.is_array())
    throw DomainError(w + ": 'images' must be an array");
  std::vector<DimClass> imgs;
  for (const Json& img : images) {
    IntMatrix v = column_from_json(field(img, "v", w), w + " image v");
    std::size_t l = size_from_json(field(img, "l", w), w + " image l");
    imgs.emplace_back(B, std::move(v), l);
  }
  return GradedHomSpec(std::move(A), std::move(B), std::move(imgs));
}

ChainData chain_from_json(const Json& j) {
  const std::string w = "chain file";
  ChainData d{matrix_from_json(field(j, "A", w), w + " A"),
              matrix_from_json(field(j, "B", w), w + " B"),
              {}};
  const Json& steps = field(j, "steps", w);
  if (!steps.is_array()) throw DomainError(w + ": 'steps' must be an array");
  for (const Json& s : steps)
    d.steps.push_back({matrix_from_json(field(s, "R", w), w + " step R"),
                       matrix_from_json(field(s, "S", w), w + " step S")});
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_file(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw DomainError("malformed JSON in file: " + path);
  return j;
}

}  // namespace shifteq
