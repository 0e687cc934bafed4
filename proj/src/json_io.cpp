#include "qlie/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qlie::json_io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(Errc::Parse, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing key \"" + key + "\"");
  return *it;
}

std::size_t dim_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 4)
    bad(path, "expected an integer dimension between 1 and 4");
  return j.get<std::size_t>();
}

}  // namespace

Field field_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a field name such as \"Q\" or \"GF(5)\"");
  std::string name = j.get<std::string>();
  try {
    return Field::parse(name);
  } catch (const Error&) {
    bad(path, "unknown field \"" + name + "\"");
  }
}

Scalar scalar_from_json(Field f, const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (!f.is_rationals() && (v < 0 || v >= static_cast<long long>(f.characteristic())))
      bad(path, "GF(p) elements are integers in [0, p)");
    return Scalar(f, static_cast<long>(v));
  }
  if (!j.is_string()) bad(path, "expected an integer or a \"p/q\" string");
  std::string text = j.get<std::string>();
  try {
    return Scalar::parse(f, text);
  } catch (const Error&) {
    bad(path, "cannot read \"" + text + "\" as an element of " + f.name());
  }
}

Mat mat_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string rp = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) bad(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(f, j[i][k], rp + "/" + std::to_string(k));
  }
  return m;
}

BraidedSpace space_from_json(const Json& j, const std::string& path) {
  Field f = field_from_json(member(j, "field", path), path + "/field");
  std::size_t n = dim_of(member(j, "dim", path), path + "/dim");
  Mat c = mat_from_json(f, member(j, "c", path), n * n, n * n, path + "/c");
  return BraidedSpace(n, c, false);
}

LiftedQLie lifted_from_json(const Json& j, const std::string& path) {
  BraidedSpace b = space_from_json(member(j, "space", path), path + "/space");
  Mat beta = mat_from_json(b.field(), member(j, "beta", path), b.dim(), b.dim() * b.dim(), path + "/beta");
  return LiftedQLie{b, beta};
}

TensorElem tensor_from_json(Field f, std::size_t dim, const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a list of terms");
  TensorElem t(f, dim);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string tp = path + "/" + std::to_string(i);
    const Json& w = member(j[i], "word", tp);
    if (!w.is_array()) bad(tp + "/word", "expected a list of letters");
    Word word;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!w[k].is_number_integer() || w[k].get<long long>() < 1 || w[k].get<long long>() > static_cast<long long>(dim))
        bad(tp + "/word/" + std::to_string(k), "letters are numbered 1.." + std::to_string(dim));
      word.push_back(static_cast<std::uint8_t>(w[k].get<int>() - 1));
    }
    t.add(word, scalar_from_json(f, member(j[i], "coeff", tp), tp + "/coeff"));
  }
  return t;
}

Presentation presentation_from_json(const Json& j, const std::string& path) {
  BraidedSpace b = space_from_json(member(j, "space", path), path + "/space");
  const Json& rels = member(j, "relations", path);
  if (!rels.is_array()) bad(path + "/relations", "expected a list of relations");
  std::vector<TensorElem> out;
  for (std::size_t i = 0; i < rels.size(); ++i)
    out.push_back(tensor_from_json(b.field(), b.dim(), rels[i], path + "/relations/" + std::to_string(i)));
  return Presentation{b, out};
}

OJson to_json(const Scalar& s) {
  if (s.field().is_rationals()) return s.str();
  return s.residue();
}

OJson to_json(const Mat& m) {
  OJson out = OJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OJson row = OJson::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

OJson to_json(const Poly& p) {
  OJson coeffs = OJson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return OJson{{"text", p.str("X")}, {"coeffs", coeffs}};
}

OJson to_json(const BraidedSpace& b) {
  return OJson{{"field", b.field().name()}, {"dim", b.dim()}, {"c", to_json(b.c())}};
}

OJson to_json(const LiftedQLie& q) { return OJson{{"space", to_json(q.space)}, {"beta", to_json(q.beta)}}; }

OJson to_json(const TensorElem& t) {
  OJson out = OJson::array();
  for (const auto& [w, s] : t.terms()) {
    OJson word = OJson::array();
    for (auto l : w) word.push_back(static_cast<int>(l) + 1);
    out.push_back(OJson{{"word", word}, {"coeff", to_json(s)}});
  }
  return out;
}

Json load(const std::string& path_or_inline) {
  std::string text;
  if (!path_or_inline.empty() && path_or_inline.front() == '{') {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) fail(Errc::Parse, "cannot read input file '" + path_or_inline + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::Parse, std::string("/: malformed JSON: ") + e.what());
  }
}

}  // namespace qlie::json_io
