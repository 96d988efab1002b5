#pragma once

// Versioned JSON encodings of tensors, pairs, triple systems, Lie algebras, flags,
// filtrations and Grassmannian points. Decoding errors name the offending JSON path.

#include <string>
#include <vector>

#include "flags.hpp"
#include "geom.hpp"
#include "jordan.hpp"
#include "liealg.hpp"
#include "report.hpp"

namespace jgl {

inline constexpr const char* kSchema = "jgl/1";

namespace detail {

/// Cursor into a JSON document that remembers its path for error messages.
class Reader {
 public:
  Reader(const Json& j, std::string path = "") : j_(&j), path_(std::move(path)) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& msg) const { throw Error("schema error at " + (path_.empty() ? "/" : path_) + ": " + msg); }

  Reader at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing key '" + key + "'");
    return Reader(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  Reader at(std::size_t i) const {
    if (!j_->is_array()) fail("expected an array");
    if (i >= j_->size()) fail("index " + std::to_string(i) + " out of range");
    return Reader((*j_)[i], path_ + "/" + std::to_string(i));
  }
  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  std::size_t index() const {
    if (!j_->is_number_unsigned() && !(j_->is_number_integer() && j_->get<long long>() >= 0)) fail("expected a non-negative integer");
    return j_->get<std::size_t>();
  }
  long long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long long>();
  }
  Scalar scalar(const Ring& ring) const {
    try {
      return ring.parse_scalar(str());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  Ring ring() const {
    try {
      return Ring::parse(str());
    } catch (const Error& e) {
      fail(e.what());
    }
  }

 private:
  const Json* j_;
  std::string path_;
};

inline void check_header(const Reader& r, const std::string& kind) {
  if (r.has("schema") && r.at("schema").str() != kSchema) r.at("schema").fail("unsupported schema version");
  if (r.has("kind") && r.at("kind").str() != kind) r.at("kind").fail("expected kind '" + kind + "'");
}

inline Json header(const std::string& kind, const Ring& ring) {
  return Json{{"schema", kSchema}, {"kind", kind}, {"ring", ring.name()}};
}

inline Json coeffs_json(const MultilinearMap& m) {
  Json a = Json::array();
  for (const auto& t : m.terms()) {
    Json e = Json::array();
    for (std::size_t s = 0; s < m.arity(); ++s) e.push_back(t.index[s]);
    e.push_back(t.target);
    e.push_back(t.coeff.to_string());
    a.push_back(e);
  }
  return a;
}

inline MultilinearMap coeffs_from(const Reader& r, const Ring& ring, const std::vector<std::size_t>& slot_dims,
                                  std::size_t target_dim) {
  std::vector<TensorTerm> terms;
  const auto arity = slot_dims.size();
  for (std::size_t n = 0; n < r.size(); ++n) {
    Reader e = r.at(n);
    if (e.size() != arity + 2) e.fail("expected " + std::to_string(arity + 2) + " entries");
    TensorTerm t;
    for (std::size_t s = 0; s < arity; ++s) {
      auto i = e.at(s).index();
      if (i >= slot_dims[s]) e.at(s).fail("index exceeds slot dimension " + std::to_string(slot_dims[s]));
      t.index[s] = static_cast<std::uint32_t>(i);
    }
    auto tg = e.at(arity).index();
    if (tg >= target_dim) e.at(arity).fail("target index exceeds " + std::to_string(target_dim));
    t.target = static_cast<std::uint32_t>(tg);
    t.coeff = e.at(arity + 1).scalar(ring);
    terms.push_back(t);
  }
  return MultilinearMap(ring, slot_dims, target_dim, std::move(terms));
}

inline Matrix matrix_from(const Reader& r, const Ring& ring) {
  std::vector<Vector> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Reader row = r.at(i);
    if (i == 0) cols = row.size();
    if (row.size() != cols) row.fail("ragged matrix");
    Vector v;
    for (std::size_t j = 0; j < cols; ++j) v.push_back(row.at(j).scalar(ring));
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(ring, rows, cols);
}

inline Vector vector_from(const Reader& r, const Ring& ring) {
  Vector v;
  for (std::size_t i = 0; i < r.size(); ++i) v.push_back(r.at(i).scalar(ring));
  return v;
}

inline Subspace subspace_from(const Reader& r, const Ring& ring, std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Vector v = vector_from(r.at(i), ring);
    if (v.size() != ambient) r.at(i).fail("vector length differs from ambient " + std::to_string(ambient));
    rows.push_back(std::move(v));
  }
  return Subspace::span(ring, ambient, rows);
}

}  // namespace detail

// ---------------------------------------------------------------- tensors

inline Json to_json(const MultilinearMap& m) {
  Json j = detail::header("tensor", m.ring());
  j["arity"] = m.arity();
  j["slot_dims"] = m.slot_dims();
  j["target_dim"] = m.target_dim();
  j["coeffs"] = detail::coeffs_json(m);
  return j;
}

inline MultilinearMap tensor_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "tensor");
  Ring ring = r.at("ring").ring();
  auto arity = r.at("arity").index();
  if (arity != 2 && arity != 3) r.at("arity").fail("arity must be 2 or 3");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < r.at("slot_dims").size(); ++i) dims.push_back(r.at("slot_dims").at(i).index());
  if (dims.size() != arity) r.at("slot_dims").fail("length differs from arity");
  return detail::coeffs_from(r.at("coeffs"), ring, dims, r.at("target_dim").index());
}

// ---------------------------------------------------------------- pairs and triple systems

inline Json to_json(const JordanPair& p) {
  Json j = detail::header("pair", p.ring());
  j["dims"] = Json{{"vplus", p.nplus()}, {"vminus", p.nminus()}};
  j["tplus"] = detail::coeffs_json(p.tplus());
  j["tminus"] = detail::coeffs_json(p.tminus());
  return j;
}

inline JordanPair pair_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "pair");
  Ring ring = r.at("ring").ring();
  auto np = r.at("dims").at("vplus").index(), nm = r.at("dims").at("vminus").index();
  if (np == 0 || nm == 0) r.at("dims").fail("dimensions must be positive");
  return JordanPair(detail::coeffs_from(r.at("tplus"), ring, {np, nm, np}, np),
                    detail::coeffs_from(r.at("tminus"), ring, {nm, np, nm}, nm));
}

inline Json to_json(const JordanTripleSystem& t) {
  Json j = detail::header("jts", t.ring());
  j["dim"] = t.dim();
  j["t"] = detail::coeffs_json(t.t());
  return j;
}

inline JordanTripleSystem jts_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "jts");
  Ring ring = r.at("ring").ring();
  auto n = r.at("dim").index();
  return JordanTripleSystem(detail::coeffs_from(r.at("t"), ring, {n, n, n}, n));
}

inline Json to_json(const LieTripleSystem& q) {
  Json j = detail::header("lts", q.ring());
  j["dim"] = q.dim();
  j["r"] = detail::coeffs_json(q.r());
  return j;
}

inline LieTripleSystem lts_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "lts");
  Ring ring = r.at("ring").ring();
  auto n = r.at("dim").index();
  return LieTripleSystem(detail::coeffs_from(r.at("r"), ring, {n, n, n}, n));
}

// ---------------------------------------------------------------- Lie algebras

inline Json to_json(const GradedLieAlgebra& g) {
  Json j = detail::header("lie", g.ring());
  j["dim"] = g.dim();
  j["bracket"] = detail::coeffs_json(g.bracket());
  j["grading"] = Json{{"modulus", g.grading().modulus}, {"degrees", g.grading().degree}};
  if (g.euler()) j["euler"] = to_json(*g.euler());
  return j;
}

inline GradedLieAlgebra lie_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "lie");
  Ring ring = r.at("ring").ring();
  auto n = r.at("dim").index();
  Grading gr;
  gr.modulus = static_cast<int>(r.at("grading").at("modulus").integer());
  auto deg = r.at("grading").at("degrees");
  if (deg.size() != n) deg.fail("expected " + std::to_string(n) + " degrees");
  for (std::size_t i = 0; i < n; ++i) gr.degree.push_back(static_cast<int>(deg.at(i).integer()));
  std::optional<Vector> euler;
  if (r.has("euler")) {
    euler = detail::vector_from(r.at("euler"), ring);
    if (euler->size() != n) r.at("euler").fail("wrong length");
  }
  return GradedLieAlgebra(detail::coeffs_from(r.at("bracket"), ring, {n, n}, n), gr, euler);
}

// ---------------------------------------------------------------- flags, filtrations, points

inline Json flag_to_json(const Flag& f) {
  Json j = to_json(f);
  Json out = detail::header("flag", f.chain.front().ring());
  out["ambient"] = j["ambient"];
  out["chain"] = j["chain"];
  return out;
}

inline Flag flag_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "flag");
  Ring ring = r.at("ring").ring();
  auto n = r.at("ambient").index();
  std::vector<Subspace> chain;
  for (std::size_t i = 0; i < r.at("chain").size(); ++i) chain.push_back(detail::subspace_from(r.at("chain").at(i), ring, n));
  try {
    return make_flag(std::move(chain));
  } catch (const Error& e) {
    r.at("chain").fail(e.what());
  }
}

inline Json filtration_to_json(const LieFiltration& f, const Ring& ring, std::size_t dim, const std::string& algebra) {
  Json j = detail::header("filtration", ring);
  j["algebra"] = algebra;
  j["ambient"] = dim;
  Json idx = Json::array(), chain = Json::array();
  for (int i = f.k; i >= -f.k; --i) {
    idx.push_back(i);
    chain.push_back(to_json(f.f(i, ring, dim)));
  }
  j["indices"] = idx;
  j["chain"] = chain;
  return j;
}

inline LieFiltration filtration_from_json(const Json& j) {
  detail::Reader r(j);
  detail::check_header(r, "filtration");
  Ring ring = r.at("ring").ring();
  auto n = r.at("ambient").index();
  auto idx = r.at("indices");
  LieFiltration f;
  f.k = static_cast<int>(idx.at(0).integer());
  if (idx.size() != static_cast<std::size_t>(2 * f.k + 1)) idx.fail("indices must run from k down to -k");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx.at(i).integer() != f.k - static_cast<long long>(i)) idx.at(i).fail("indices must run from k down to -k");
    f.members.push_back(detail::subspace_from(r.at("chain").at(i), ring, n));
  }
  return f;
}

inline Point point_from_json(const Json& j, const Ring& ring) {
  detail::Reader r(j);
  try {
    return make_point(detail::matrix_from(r.at("rep"), ring));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("schema error", 0) == 0) throw;
    r.at("rep").fail(e.what());
  }
}

inline DualPoint dual_from_json(const Json& j, const Ring& ring) {
  detail::Reader r(j);
  try {
    return make_dual(detail::matrix_from(r.at("rep"), ring));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("schema error", 0) == 0) throw;
    r.at("rep").fail(e.what());
  }
}

}  // namespace jgl
