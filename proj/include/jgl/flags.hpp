#pragma once

// Flags of a module, their crosswise transversality and the gradings behind it;
// inner filtrations of graded Lie algebras and the exp(f_1) action on them.

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "geom.hpp"
#include "liealg.hpp"

namespace jgl {

// ---------------------------------------------------------------- module flags

/// 0 = f_0 < f_1 < ... < f_k = E, stored as f_1..f_k.
struct Flag {
  std::size_t ambient = 0;
  std::vector<Subspace> chain;

  std::size_t length() const { return chain.size(); }
  /// f_i for 0 <= i <= k.
  Subspace member(std::size_t i) const {
    if (i == 0) return Subspace::zero(chain.front().ring(), ambient);
    return chain.at(i - 1);
  }
  std::vector<std::size_t> type() const {
    std::vector<std::size_t> t;
    for (const auto& s : chain) t.push_back(s.dim());
    return t;
  }
  friend bool operator==(const Flag&, const Flag&) = default;
  friend bool operator<(const Flag& a, const Flag& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    return a.chain < b.chain;
  }
};

inline Flag make_flag(std::vector<Subspace> chain) {
  if (chain.empty()) throw Error("flag: empty chain");
  Flag f{chain.front().ambient(), std::move(chain)};
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    f.chain.front().check(f.chain[i]);
    if (i > 0 && (f.chain[i].dim() <= f.chain[i - 1].dim() || !f.chain[i].contains(f.chain[i - 1]))) {
      throw Error("flag: inclusions must be strict");
    }
  }
  if (f.chain.front().dim() == 0) throw Error("flag: f_1 must be nonzero");
  if (f.chain.back().dim() != f.ambient) throw Error("flag: last member must be the whole space");
  return f;
}

struct ModuleGrading {
  std::vector<Subspace> blocks;
  friend bool operator==(const ModuleGrading&, const ModuleGrading&) = default;
};

inline void require_direct(const std::vector<Subspace>& blocks) {
  if (blocks.empty()) throw Error("grading: no blocks");
  std::size_t total = 0;
  Subspace s = Subspace::zero(blocks.front().ring(), blocks.front().ambient());
  for (const auto& b : blocks) {
    s.check(b);
    total += b.dim();
    s = sum(s, b);
  }
  if (s.dim() != total || total != s.ambient()) throw Error("grading: blocks are not a direct sum decomposition");
}

/// (f+(g), f-(g)) with f+_i = g_1 + ... + g_i and f-_(k-i) = g_(i+1) + ... + g_k.
inline std::pair<Flag, Flag> flags_from_grading(const ModuleGrading& g) {
  require_direct(g.blocks);
  const auto k = g.blocks.size();
  std::vector<Subspace> plus, minus;
  Subspace acc = Subspace::zero(g.blocks.front().ring(), g.blocks.front().ambient());
  for (std::size_t i = 0; i < k; ++i) plus.push_back(acc = sum(acc, g.blocks[i]));
  acc = Subspace::zero(acc.ring(), acc.ambient());
  for (std::size_t j = 1; j <= k; ++j) minus.push_back(acc = sum(acc, g.blocks[k - j]));
  return {make_flag(std::move(plus)), make_flag(std::move(minus))};
}

/// E = f_i (+) e_(k-i) for i = 1..k.
inline bool flag_transversal(const Flag& e, const Flag& f) {
  if (e.length() != f.length() || e.ambient != f.ambient) throw Error("flag_transversal: flags of different shape");
  const auto k = f.length();
  for (std::size_t i = 1; i <= k; ++i) {
    Subspace a = f.member(i), b = e.member(k - i);
    if (a.dim() + b.dim() != f.ambient || !direct_sum_check(a, b)) return false;
  }
  return true;
}

/// g_i = f_i meet e_(k-i+1); checks that flags_from_grading gives back (f, e).
inline ModuleGrading grading_from_transversal(const Flag& e, const Flag& f) {
  if (!flag_transversal(e, f)) throw Error("grading_from_transversal: flags are not transversal");
  const auto k = f.length();
  ModuleGrading g;
  for (std::size_t i = 1; i <= k; ++i) g.blocks.push_back(intersect(f.member(i), e.member(k - i + 1)));
  auto [fp, fm] = flags_from_grading(g);
  if (!(fp == f && fm == e)) throw Error("grading_from_transversal: round trip failed");
  return g;
}

/// Random decomposition of K^n into k nonzero blocks over a prime field.
inline ModuleGrading random_grading(const Ring& ring, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k < 1 || k > n) throw Error("random_grading: need 1 <= k <= n");
  Matrix m(ring, n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = ring.from_int(static_cast<long long>(rng() % ring.characteristic()));
  } while (rank(m) != n);
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  ModuleGrading g;
  std::size_t start = 0;
  for (auto c : cuts) {
    std::vector<Vector> cols;
    for (std::size_t j = start; j < c; ++j) cols.push_back(m.col(j));
    g.blocks.push_back(Subspace::span(ring, n, cols));
    start = c;
  }
  return g;
}

inline Check grading_roundtrip_check(const Ring& ring, std::size_t n, std::size_t max_k, std::uint64_t seed,
                                     std::size_t count) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t k = 1 + rng() % std::min(max_k, n);
    ModuleGrading g = random_grading(ring, n, k, rng);
    auto [fp, fm] = flags_from_grading(g);
    if (!flag_transversal(fm, fp) || !(grading_from_transversal(fm, fp) == g)) {
      return {"grading_roundtrip", false, Json{{"sample", t}, {"k", k}}, nullptr};
    }
  }
  return {"grading_roundtrip", true, nullptr,
          Json{{"ambient", n}, {"max_k", max_k}, {"seed", seed}, {"samples", count}}};
}

inline Json to_json(const Subspace& s) { return to_json(s.basis()); }

inline Json to_json(const Flag& f) {
  Json chain = Json::array();
  for (const auto& s : f.chain) chain.push_back(to_json(s));
  return Json{{"ambient", f.ambient}, {"chain", chain}};
}

// ---------------------------------------------------------------- Lie filtrations

inline void require_filtration_ring(const Ring& ring, int k) { ring.require_invertible_up_to(2 * k + 1, "inner 2k+1-filtrations"); }

/// Opposite filtration e_i = sum of g_j with j <= -i.
inline LieFiltration opposite_filtration_from_grading(const GradedLieAlgebra& g) {
  Grading neg = g.grading();
  for (auto& d : neg.degree) d = -d;
  return filtration_from_grading(g.with_grading(neg));
}

/// g = f_i (+) e_(1-i) for every i.
inline bool filtration_transversal(const GradedLieAlgebra& g, const LieFiltration& e, const LieFiltration& f) {
  if (e.k != f.k) throw Error("filtration_transversal: different lengths");
  for (int i = -f.k + 1; i <= f.k; ++i) {
    Subspace a = f.f(i, g.ring(), g.dim()), b = e.f(1 - i, g.ring(), g.dim());
    if (a.dim() + b.dim() != g.dim() || !direct_sum_check(a, b)) return false;
  }
  return true;
}

/// Euler operator for the blocks g_(-k)..g_k (listed from -k), if one exists.
inline EulerSolution euler_for_blocks(const GradedLieAlgebra& g, const std::vector<Subspace>& blocks, int k) {
  const auto n = g.dim();
  std::vector<Vector> rows_a;
  std::vector<Scalar> rhs;
  std::vector<Matrix> ad_basis;
  for (std::size_t i = 0; i < n; ++i) ad_basis.push_back(g.ad(g.basis(i)));
  for (int d = -k; d <= k; ++d) {
    for (const auto& v : blocks[static_cast<std::size_t>(d + k)].basis_vectors()) {
      // sum_c E_c [e_c, v] = d v
      std::vector<Vector> cols;
      for (std::size_t c = 0; c < n; ++c) cols.push_back(ad_basis[c].apply(v));
      for (std::size_t t = 0; t < n; ++t) {
        Vector row(n, g.ring().zero());
        for (std::size_t c = 0; c < n; ++c) row[c] = cols[c][t];
        rows_a.push_back(row);
        rhs.push_back(g.ring().from_int(d) * v[t]);
      }
    }
  }
  Matrix a = Matrix::from_rows(g.ring(), rows_a, n);
  Matrix b(g.ring(), rhs.size(), 1);
  for (std::size_t t = 0; t < rhs.size(); ++t) b(t, 0) = rhs[t];
  EulerSolution s;
  s.center = nullspace(a);
  if (auto x = solve(a, b)) s.particular = x->col(0);
  return s;
}

inline Check lie_grading_check(const GradedLieAlgebra& g, const std::vector<Subspace>& blocks, int k) {
  for (int i = -k; i <= k; ++i) {
    for (int j = -k; j <= k; ++j) {
      Subspace target = (i + j < -k || i + j > k) ? Subspace::zero(g.ring(), g.dim())
                                                  : blocks[static_cast<std::size_t>(i + j + k)];
      for (const auto& x : blocks[static_cast<std::size_t>(i + k)].basis_vectors()) {
        for (const auto& y : blocks[static_cast<std::size_t>(j + k)].basis_vectors()) {
          if (!target.contains(g.br(x, y))) return {"lie_grading", false, Json{{"i", i}, {"j", j}}, nullptr};
        }
      }
    }
  }
  return {"lie_grading", true, nullptr, nullptr};
}

struct InnerWitness {
  std::vector<Subspace> blocks;  // g_(-k)..g_k
  Vector euler;
  Matrix conjugator;  // automorphism carrying the reference grading to this one
};

struct InnerFiltrationResult {
  Report report;
  std::optional<InnerWitness> witness;
};

/// Looks for an inner grading inducing f among the elementary conjugates of the reference grading.
inline InnerFiltrationResult inner_filtration_check(const GradedLieAlgebra& g, const LieFiltration& f,
                                                    std::size_t max_word_length = 8) {
  const int k = g.grading().k();
  require_filtration_ring(g.ring(), k);
  InnerFiltrationResult out;
  if (f.k != k || f.members.size() != static_cast<std::size_t>(2 * k + 1)) {
    throw Error("inner_filtration_check: filtration length does not match the grading");
  }
  Check compat = filtration_compatible(g, f);
  out.report.add(compat);
  if (!compat.pass) {
    out.report.add("inner_witness", false, nullptr, Json{{"reason", "not a Lie filtration"}});
    return out;
  }
  Vector e0;
  if (g.euler()) {
    e0 = *g.euler();
  } else {
    auto s = find_euler(g);
    if (!s.particular) throw Error("inner_filtration_check: reference grading is not inner");
    e0 = *s.particular;
  }
  LieFiltration base = filtration_from_grading(g);
  std::map<LieFiltration, Matrix> seen{{base, Matrix::identity(g.ring(), g.dim())}};
  std::vector<LieFiltration> frontier{base};
  auto gens = g.ring().is_prime_field() ? elementary_generators(g) : std::vector<Matrix>{};
  std::size_t level = 0;
  while (!seen.count(f) && !frontier.empty() && level < max_word_length) {
    std::vector<LieFiltration> next;
    for (const auto& h : frontier) {
      for (const auto& m : gens) {
        LieFiltration img = apply_map(m, h);
        if (seen.count(img)) continue;
        seen.emplace(img, m * seen.at(h));
        require_within_cap(seen.size(), "inner filtration search");
        next.push_back(img);
      }
    }
    frontier = std::move(next);
    ++level;
  }
  auto it = seen.find(f);
  if (it == seen.end()) {
    out.report.add("inner_witness", false, nullptr,
                   Json{{"reason", "no conjugate found"}, {"searched", seen.size()}, {"word_length", level}});
    return out;
  }
  InnerWitness w;
  w.conjugator = it->second;
  w.euler = w.conjugator.apply(e0);
  for (int d = -k; d <= k; ++d) w.blocks.push_back(image(w.conjugator, g.block_space(d)));
  bool ok = true;
  for (int d = -k; d <= k && ok; ++d) {
    Subspace fi = Subspace::zero(g.ring(), g.dim());
    for (int j = d; j <= k; ++j) fi = sum(fi, w.blocks[static_cast<std::size_t>(j + k)]);
    ok = fi == f.f(d, g.ring(), g.dim());
    Matrix ad = g.ad(w.euler);
    for (const auto& x : w.blocks[static_cast<std::size_t>(d + k)].basis_vectors()) {
      ok = ok && ad.apply(x) == scale(g.ring().from_int(d), x);
    }
  }
  Json blocks = Json::array();
  for (const auto& b : w.blocks) blocks.push_back(to_json(b));
  out.report.add("inner_witness", ok, Json{{"euler", to_json(w.euler)}, {"blocks", blocks}}, Json{{"word_length", level}});
  if (ok) out.witness = std::move(w);
  return out;
}

struct FlagTheoremResult {
  Report report;
  bool transversal = false;
  std::vector<Subspace> blocks;  // g_(-k)..g_k when transversal
  std::optional<Vector> euler;
  Matrix euler_center;
};

/// Transversal iff e and f are the two filtrations of one grading; recovers that grading
/// as g_i = f_i meet e_(-i) and solves for its Euler operator.
inline FlagTheoremResult lie_flag_theorem_check(const GradedLieAlgebra& g, const LieFiltration& e,
                                                const LieFiltration& f) {
  const int k = f.k;
  require_filtration_ring(g.ring(), k);
  if (e.k != k) throw Error("lie_flag_theorem_check: filtrations of different length");
  FlagTheoremResult out;
  out.transversal = filtration_transversal(g, e, f);
  std::vector<Subspace> blocks;
  for (int i = -k; i <= k; ++i) blocks.push_back(intersect(f.f(i, g.ring(), g.dim()), e.f(-i, g.ring(), g.dim())));
  std::size_t total = 0;
  Subspace all = Subspace::zero(g.ring(), g.dim());
  for (const auto& b : blocks) {
    total += b.dim();
    all = sum(all, b);
  }
  bool direct = total == g.dim() && all.dim() == g.dim();
  bool reproduces = direct;
  for (int i = -k; i <= k && reproduces; ++i) {
    Subspace fp = Subspace::zero(g.ring(), g.dim()), fm = fp;
    for (int j = i; j <= k; ++j) fp = sum(fp, blocks[static_cast<std::size_t>(j + k)]);
    for (int j = -k; j <= -i; ++j) fm = sum(fm, blocks[static_cast<std::size_t>(j + k)]);
    reproduces = fp == f.f(i, g.ring(), g.dim()) && fm == e.f(i, g.ring(), g.dim());
  }
  out.report.add("transversal_iff_grading", out.transversal == reproduces, nullptr,
                 Json{{"transversal", out.transversal}, {"grading_reproduces_filtrations", reproduces}});
  if (!out.transversal) return out;
  out.blocks = blocks;
  Check lg = lie_grading_check(g, blocks, k);
  out.report.add(lg);
  auto sol = euler_for_blocks(g, blocks, k);
  out.euler = sol.particular;
  out.euler_center = sol.center;
  Json blocks_json = Json::array();
  for (const auto& b : blocks) blocks_json.push_back(to_json(b));
  Json details{{"blocks", blocks_json}, {"euler_ambiguity_dim", sol.center.cols()}};
  if (sol.particular) details["euler"] = to_json(*sol.particular);
  out.report.add("euler", sol.particular.has_value(), nullptr, details);
  return out;
}

/// exp(ad x) . e for x in f_1.
inline LieFiltration exp_action(const GradedLieAlgebra& g, const LieFiltration& f, const Vector& x,
                                const LieFiltration& e) {
  if (!f.f(1, g.ring(), g.dim()).contains(x)) throw Error("exp_action: x is not in f_1");
  return apply_map(exp_ad(g, x).m, e);
}

struct BijectionResult {
  Report report;
  std::size_t f1_size = 0;
  std::size_t transversal_size = 0;
};

/// f^T is enumerated as the members of the elementary orbit of the opposite base filtration
/// that are transversal to f; checks that x -> exp(x).e is a bijection f_1 -> f^T.
inline BijectionResult bijection_check(const GradedLieAlgebra& g, const LieFiltration& f,
                                       std::size_t max_word_length = 16) {
  if (!g.ring().is_prime_field()) throw Error("bijection_check: needs a prime field");
  require_filtration_ring(g.ring(), f.k);
  BijectionResult out;
  auto orbit = elementary_group_orbit(g, opposite_filtration_from_grading(g), max_word_length);
  std::vector<LieFiltration> ft;
  for (const auto& h : orbit.members) {
    if (filtration_transversal(g, h, f)) ft.push_back(h);
  }
  out.transversal_size = ft.size();
  Subspace f1 = f.f(1, g.ring(), g.dim());
  auto coeffs = all_vectors(g.ring(), f1.dim());
  out.f1_size = coeffs.size();
  if (ft.empty()) {
    out.report.add("exp_bijection", false, nullptr, Json{{"reason", "f has no transversal filtration in the orbit"}});
    return out;
  }
  const LieFiltration& e = ft.front();
  std::set<LieFiltration> images;
  bool inside = true;
  for (const auto& c : coeffs) {
    Vector x(g.dim(), g.ring().zero());
    auto basis = f1.basis_vectors();
    for (std::size_t t = 0; t < c.size(); ++t) x = add(x, scale(c[t], basis[t]));
    LieFiltration h = exp_action(g, f, x, e);
    inside = inside && std::binary_search(ft.begin(), ft.end(), h);
    images.insert(h);
  }
  bool injective = images.size() == coeffs.size();
  bool surjective = inside && images.size() == ft.size();
  out.report.add("exp_bijection", injective && surjective, nullptr,
                 Json{{"f1_size", out.f1_size}, {"transversal_size", out.transversal_size}, {"injective", injective},
                      {"surjective", surjective}, {"orbit_size", orbit.members.size()}, {"orbit_closed", orbit.closed}});
  return out;
}

// ---------------------------------------------------------------- orbit dictionary for gl(n)

/// n x n matrix of a gl(n) vector with basis E_ij at index i*n + j.
inline Matrix gl_matrix(const Vector& v, std::size_t n) {
  Matrix m(v.front().ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Sum of the images of the matrices in f_1.
inline Subspace gl_image_of_f1(const LieFiltration& f, const Ring& ring, std::size_t n) {
  std::vector<Vector> cols;
  for (const auto& x : f.f(1, ring, n * n).basis_vectors()) {
    Matrix m = gl_matrix(x, n);
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m.col(j));
  }
  return Subspace::span(ring, n, cols);
}

/// Elementary orbit of the base filtration of gl_3graded(a, b) versus the points of Gras_a(K^(a+b)).
inline Check orbit_grassmannian_dictionary(std::size_t a, std::size_t b, const Ring& ring) {
  auto g = catalog::gl_3graded(a, b, ring);
  auto orbit = elementary_group_orbit(g, filtration_from_grading(g), 64);
  const auto n = a + b;
  std::set<Point> hit;
  for (const auto& f : orbit.members) {
    Subspace s = gl_image_of_f1(f, ring, n);
    if (s.dim() != a) return {"orbit_dictionary", false, Json{{"image_dim", s.dim()}}, nullptr};
    hit.insert(point_from_subspace(s));
  }
  auto pts = all_points(GrassGeometry(ring, n, a));
  bool ok = hit.size() == orbit.members.size() && hit.size() == pts.size();
  return {"orbit_dictionary", ok, nullptr,
          Json{{"orbit_size", orbit.members.size()}, {"points", pts.size()}, {"distinct_images", hit.size()},
               {"gaussian_count", gaussian_binomial(ring.characteristic(), static_cast<unsigned>(n),
                                                    static_cast<unsigned>(a))}}};
}

// ---------------------------------------------------------------- flag geometries of K^n

/// Flags of type (d_1 < ... < d_(k-1)) in K^n against flags of the complementary type.
class FlagGeometry {
 public:
  FlagGeometry(const Ring& ring, std::size_t n, std::vector<std::size_t> type)
      : ring_(ring), n_(n), type_(std::move(type)) {
    if (!ring_.is_prime_field()) throw Error("flag geometry: needs a prime field");
    for (std::size_t i = 0; i < type_.size(); ++i) {
      if (type_[i] == 0 || type_[i] >= n_ || (i > 0 && type_[i] <= type_[i - 1])) throw Error("flag geometry: bad type");
    }
    for (auto it = type_.rbegin(); it != type_.rend(); ++it) cotype_.push_back(n_ - *it);
    ring_.require_invertible_up_to(static_cast<int>(type_.size() + 1), "flag geometry log/exp");
    points_ = all_flags(type_);
    duals_ = all_flags(cotype_);
    for (std::uint32_t i = 0; i < points_.size(); ++i) point_index_[points_[i]] = i;
  }

  const std::vector<Flag>& points() const { return points_; }
  const std::vector<Flag>& duals() const { return duals_; }
  std::uint32_t index(const Flag& f) const { return point_index_.at(f); }
  std::string name() const {
    std::string s = "Flag(";
    for (std::size_t i = 0; i < type_.size(); ++i) s += (i ? "," : "") + std::to_string(type_[i]);
    return s + ")(" + ring_.name() + "^" + std::to_string(n_) + ")";
  }

  bool transversal(const Flag& x, const Flag& alpha) const { return flag_transversal(alpha, x); }

  /// Unipotent u fixing alpha with u.x = y: on each block of x it is the projection
  /// onto the matching block of y along the next smaller member of alpha.
  Matrix unipotent(const Flag& alpha, const Flag& x, const Flag& y) const {
    auto gx = grading_from_transversal(alpha, x), gy = grading_from_transversal(alpha, y);
    const auto k = x.length();
    std::vector<Vector> src, dst;
    for (std::size_t i = 1; i <= k; ++i) {
      Subspace along = alpha.member(k - i);
      const Subspace& target = gy.blocks[i - 1];
      std::vector<Vector> cols = target.basis_vectors();
      for (const auto& v : along.basis_vectors()) cols.push_back(v);
      Matrix sys = Matrix::from_columns(ring_, n_, cols);
      for (const auto& v : gx.blocks[i - 1].basis_vectors()) {
        auto c = solve_vector(sys, v);
        if (!c) throw Error("flag geometry: projection failed");
        Vector img(n_, ring_.zero());
        for (std::size_t t = 0; t < target.dim(); ++t) img = add(img, scale((*c)[t], cols[t]));
        src.push_back(v);
        dst.push_back(img);
      }
    }
    Matrix s = Matrix::from_columns(ring_, n_, src), d = Matrix::from_columns(ring_, n_, dst);
    return d * *inverse(s);
  }

  Matrix log_unipotent(const Matrix& u) const {
    Matrix nmat = u - Matrix::identity(ring_, n_);
    Matrix out(ring_, n_, n_), pw = nmat;
    for (long long j = 1; !pw.is_zero(); ++j) {
      out += ring_.from_fraction(j % 2 ? 1 : -1, j) * pw;
      pw = pw * nmat;
    }
    return out;
  }

  Matrix exp_nilpotent(const Matrix& l) const {
    Matrix out = Matrix::identity(ring_, n_), term = out;
    for (long long j = 1; j <= static_cast<long long>(n_); ++j) {
      term = ring_.from_fraction(1, j) * (term * l);
      if (term.is_zero()) break;
      out += term;
    }
    return out;
  }

  Flag act(const Matrix& m, const Flag& x) const {
    Flag out{x.ambient, {}};
    for (const auto& s : x.chain) out.chain.push_back(image(m, s));
    return out;
  }

  /// Chart coordinate of y seen from (alpha, x): log of the unipotent carrying x to y.
  Matrix coordinate(const Flag& alpha, const Flag& x, const Flag& y) const { return log_unipotent(unipotent(alpha, x, y)); }

  Flag from_coordinate(const Flag& x, const Matrix& l) const { return act(exp_nilpotent(l), x); }

  /// y - z + w through origin x in the chart of alpha.
  std::uint32_t affine_combination(const Flag& alpha, const Flag& x, const Flag& y, const Flag& z, const Flag& w) const {
    Matrix l = coordinate(alpha, x, y) - coordinate(alpha, x, z) + coordinate(alpha, x, w);
    return index(from_coordinate(x, l));
  }

  std::vector<std::uint32_t> chart_members(const Flag& alpha) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < points_.size(); ++i)
      if (transversal(points_[i], alpha)) out.push_back(i);
    return out;
  }

 private:
  std::vector<Flag> all_flags(const std::vector<std::size_t>& type) const {
    std::vector<Flag> out;
    std::vector<Subspace> chain;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      if (level == type.size()) {
        auto c = chain;
        c.push_back(Subspace::full(ring_, n_));
        out.push_back(make_flag(std::move(c)));
        return;
      }
      for_each_subspace(ring_, n_, type[level], [&](const Subspace& s) {
        if (level > 0 && !s.contains(chain.back())) return;
        chain.push_back(s);
        rec(level + 1);
        chain.pop_back();
      });
    };
    rec(0);
    require_within_cap(out.size(), "flag enumeration");
    std::sort(out.begin(), out.end());
    return out;
  }

  Ring ring_;
  std::size_t n_;
  std::vector<std::size_t> type_, cotype_;
  std::vector<Flag> points_, duals_;
  std::map<Flag, std::uint32_t> point_index_;
};

/// Origin independence of y - z + w in a flag geometry, searched in a fixed order:
/// duals in sorted order, `origins` and `window` chart members taken at even strides.
inline Check flag_affine_independence(const FlagGeometry& fg, std::size_t max_duals, std::size_t origins,
                                      std::size_t window) {
  unsigned long long combos = 0;
  for (std::size_t al = 0; al < std::min(max_duals, fg.duals().size()); ++al) {
    const Flag& alpha = fg.duals()[al];
    auto ms = fg.chart_members(alpha);
    auto spread = [&](std::size_t count) {
      std::vector<std::uint32_t> out;
      count = std::min(count, ms.size());
      for (std::size_t i = 0; i < count; ++i) out.push_back(ms[i * ms.size() / count]);
      return out;
    };
    auto os = spread(origins), win = spread(window);
    std::vector<std::array<std::uint32_t, 3>> triples;
    for (auto y : win)
      for (auto z : win)
        for (auto w : win) triples.push_back({y, z, w});
    combos += static_cast<unsigned long long>(triples.size()) * os.size();
    require_within_cap(combos, "flag affine independence");
    auto combine = [&](std::size_t, std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
      const auto& p = fg.points();
      return fg.affine_combination(alpha, p[x], p[y], p[z], p[w]);
    };
    Check c = affine_independence_check("affine_independence", al, os, triples, combine);
    if (!c.pass) {
      const auto& p = fg.points();
      auto& wj = c.witness;
      c.witness["flags"] = Json{{"alpha", to_json(alpha)},
                                {"y", to_json(p[wj["y"].get<std::uint32_t>()])},
                                {"z", to_json(p[wj["z"].get<std::uint32_t>()])},
                                {"w", to_json(p[wj["w"].get<std::uint32_t>()])},
                                {"origin", to_json(p[wj["origin"].get<std::uint32_t>()])},
                                {"other_origin", to_json(p[wj["other_origin"].get<std::uint32_t>()])},
                                {"result", to_json(p[wj["result"].get<std::uint32_t>()])},
                                {"other_result", to_json(p[wj["other_result"].get<std::uint32_t>()])}};
      c.details = Json{{"geometry", fg.name()}, {"combinations", combos}};
      return c;
    }
  }
  return {"affine_independence", true, nullptr, Json{{"geometry", fg.name()}, {"combinations", combos}}};
}

}  // namespace jgl
