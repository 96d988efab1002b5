#pragma once

// Polynomial identity checking over named slots: basis (with automatic
// polarization), exhaustive over F_p, or seeded sampling.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "report.hpp"
#include "scalar.hpp"

namespace jgl {

/// Worker count used by the enumeration engines. Results never depend on it.
inline std::size_t& jobs_setting() {
  static std::size_t jobs = 1;
  return jobs;
}

/// Cap on enumerated domain sizes, from JGL_MAX_ENUM (default 10^7).
inline unsigned long long max_enum() {
  if (const char* env = std::getenv("JGL_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

inline void require_within_cap(unsigned long long count, const std::string& what) {
  if (count > max_enum()) {
    throw Error(what + ": enumeration of " + std::to_string(count) + " items exceeds JGL_MAX_ENUM=" +
                std::to_string(max_enum()));
  }
}

/// Smallest i in [0, n) with failing(i), scanning contiguous blocks in parallel.
template <class F>
std::optional<std::size_t> parallel_find_first(std::size_t n, F&& failing) {
  std::size_t jobs = std::max<std::size_t>(1, std::min(jobs_setting(), n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (failing(i)) return i;
    }
    return std::nullopt;
  }
  std::vector<std::optional<std::size_t>> found(jobs);
  std::atomic<std::size_t> best{n};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = n * w / jobs, hi = n * (w + 1) / jobs;
      for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
        if (failing(i)) {
          found[w] = i;
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

struct IdentitySlot {
  std::string name;
  std::size_t dim = 0;
  int degree = 1;  // homogeneous degree of the residual in this slot
};

/// residual(args) returns LHS - RHS; the identity holds iff it is always zero.
struct Identity {
  std::string name;
  std::vector<IdentitySlot> slots;
  std::function<Vector(const std::vector<Vector>&)> residual;
};

enum class Method { basis, exhaustive, sampled };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::basis:
      return "basis";
    case Method::exhaustive:
      return "exhaustive";
    case Method::sampled:
      return "sampled";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "basis") return Method::basis;
  if (s == "exhaustive") return Method::exhaustive;
  if (s == "sampled") return Method::sampled;
  throw Error("unknown method '" + s + "'");
}

struct CheckOptions {
  Method method = Method::basis;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
  /// Exhaustive mode: run degree-1 slots over basis vectors only (complete by linearity).
  bool linear_slots_on_basis = false;
};

namespace detail {

/// Nondecreasing index sequences of length d over [0, n).
inline std::vector<std::vector<std::size_t>> multisets(std::size_t n, int d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(static_cast<std::size_t>(d), 0);
  if (n == 0) return out;
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    std::size_t v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < d; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

struct SignedArg {
  bool negative;
  Vector arg;
};

/// Inclusion-exclusion expansion: f multilinear part = sum (-1)^(d-|S|) f(sum_S e).
inline std::vector<SignedArg> polarization_terms(const Ring& ring, std::size_t dim,
                                                 const std::vector<std::size_t>& ms) {
  const std::size_t d = ms.size();
  std::vector<SignedArg> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    Vector v(dim, ring.zero());
    std::size_t bits = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i)) {
        v[ms[i]] += ring.one();
        ++bits;
      }
    }
    out.push_back({((d - bits) % 2) == 1, std::move(v)});
  }
  return out;
}

inline Json index_json(const std::vector<std::size_t>& ms) {
  Json a = Json::array();
  for (auto i : ms) a.push_back(i);
  return a;
}

}  // namespace detail

inline Check check_basis(const Identity& id, const Ring& ring) {
  const std::size_t ns = id.slots.size();
  std::vector<std::vector<std::vector<std::size_t>>> domains;
  std::vector<std::vector<std::vector<detail::SignedArg>>> terms;
  unsigned long long total = 1;
  bool polarized = false;
  for (const auto& s : id.slots) {
    if (s.degree < 1) throw Error("identity slot degree must be >= 1");
    if (s.degree > 1) polarized = true;
    if (s.degree > 1 && !ring.inverts_up_to(s.degree)) {
      throw Error(id.name + ": polarization of degree " + std::to_string(s.degree) + " needs " +
                  std::to_string(s.degree) + "! invertible in " + ring.name());
    }
    domains.push_back(detail::multisets(s.dim, s.degree));
    std::vector<std::vector<detail::SignedArg>> t;
    for (const auto& ms : domains.back()) t.push_back(detail::polarization_terms(ring, s.dim, ms));
    terms.push_back(std::move(t));
    total *= domains.back().size();
    require_within_cap(total, id.name);
  }
  Json details;
  details["method"] = "basis";
  details["polarized"] = polarized;
  if (total == 0 || ns == 0) {
    if (ns == 0 && !is_zero(id.residual({}))) return {id.name, false, Json::object(), details};
    details["tuples"] = total;
    return {id.name, true, nullptr, details};
  }

  // Evaluates the polarized residual at one combination of multisets.
  auto value_at = [&](const std::vector<std::size_t>& pick) {
    std::vector<Vector> args(ns);
    Vector acc;
    std::function<void(std::size_t, bool)> rec = [&](std::size_t s, bool neg) {
      if (s == ns) {
        Vector r = id.residual(args);
        if (acc.empty()) acc.assign(r.size(), ring.zero());
        if (r.size() != acc.size()) throw Error("identity residual changed length");
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (neg) {
            acc[i] -= r[i];
          } else {
            acc[i] += r[i];
          }
        }
        return;
      }
      for (const auto& t : terms[s][pick[s]]) {
        args[s] = t.arg;
        rec(s + 1, neg != t.negative);
      }
    };
    rec(0, false);
    return acc;
  };

  // inner product size (all slots except the first)
  unsigned long long inner = total / domains[0].size();
  auto decode = [&](std::size_t outer, unsigned long long k) {
    std::vector<std::size_t> pick(ns);
    pick[0] = outer;
    for (std::size_t s = ns; s-- > 1;) {
      pick[s] = static_cast<std::size_t>(k % domains[s].size());
      k /= domains[s].size();
    }
    return pick;
  };
  auto first_fail_in = [&](std::size_t outer) -> std::optional<std::vector<std::size_t>> {
    for (unsigned long long k = 0; k < inner; ++k) {
      auto pick = decode(outer, k);
      if (!is_zero(value_at(pick))) return pick;
    }
    return std::nullopt;
  };
  auto hit = parallel_find_first(domains[0].size(), [&](std::size_t o) { return first_fail_in(o).has_value(); });
  if (!hit) {
    details["tuples"] = total;
    return {id.name, true, nullptr, details};
  }
  auto pick = *first_fail_in(*hit);
  Json w = Json::object();
  for (std::size_t s = 0; s < ns; ++s) w[id.slots[s].name] = detail::index_json(domains[s][pick[s]]);
  w["value"] = to_json(value_at(pick));
  return {id.name, false, w, details};
}

inline std::vector<Vector> all_vectors(const Ring& ring, std::size_t dim) {
  unsigned long long count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= ring.characteristic();
    require_within_cap(count, "vector enumeration");
  }
  std::vector<Vector> out;
  out.reserve(count);
  FpVectorOdometer odo(ring, dim);
  do {
    out.push_back(odo.value());
  } while (odo.next());
  return out;
}

inline std::vector<Vector> basis_vectors(const Ring& ring, std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(unit_vector(ring, dim, i));
  return out;
}

inline Check check_exhaustive(const Identity& id, const Ring& ring, bool linear_on_basis) {
  if (!ring.is_prime_field()) throw Error(id.name + ": exhaustive method requires a prime field");
  const std::size_t ns = id.slots.size();
  std::vector<std::vector<Vector>> domains;
  unsigned long long total = 1;
  for (const auto& s : id.slots) {
    domains.push_back(linear_on_basis && s.degree == 1 ? basis_vectors(ring, s.dim) : all_vectors(ring, s.dim));
    total *= domains.back().size();
    require_within_cap(total, id.name);
  }
  Json details;
  details["method"] = "exhaustive";
  details["tuples"] = total;
  if (ns == 0 || total == 0) return {id.name, true, nullptr, details};
  unsigned long long inner = total / domains[0].size();
  auto args_of = [&](std::size_t outer, unsigned long long k) {
    std::vector<Vector> args(ns);
    args[0] = domains[0][outer];
    for (std::size_t s = ns; s-- > 1;) {
      args[s] = domains[s][k % domains[s].size()];
      k /= domains[s].size();
    }
    return args;
  };
  auto first_fail_in = [&](std::size_t outer) -> std::optional<std::vector<Vector>> {
    for (unsigned long long k = 0; k < inner; ++k) {
      auto args = args_of(outer, k);
      if (!is_zero(id.residual(args))) return args;
    }
    return std::nullopt;
  };
  auto hit = parallel_find_first(domains[0].size(), [&](std::size_t o) { return first_fail_in(o).has_value(); });
  if (!hit) return {id.name, true, nullptr, details};
  auto args = *first_fail_in(*hit);
  Json w = Json::object();
  for (std::size_t s = 0; s < ns; ++s) w[id.slots[s].name] = to_json(args[s]);
  w["value"] = to_json(id.residual(args));
  return {id.name, false, w, details};
}

inline Check check_sampled(const Identity& id, const Ring& ring, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t dim) {
    Vector v;
    for (std::size_t i = 0; i < dim; ++i) {
      if (ring.is_prime_field()) {
        v.push_back(ring.from_int(static_cast<long long>(rng() % ring.characteristic())));
      } else {
        v.push_back(ring.from_int(static_cast<long long>(rng() % 7) - 3));
      }
    }
    return v;
  };
  std::optional<std::vector<Vector>> best;
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<Vector> args;
    for (const auto& s : id.slots) args.push_back(draw(s.dim));
    if (!is_zero(id.residual(args)) && (!best || args < *best)) best = args;
  }
  Json details;
  details["method"] = "sampled";
  details["seed"] = seed;
  details["samples"] = samples;
  if (!best) return {id.name, true, nullptr, details};
  Json w = Json::object();
  for (std::size_t s = 0; s < id.slots.size(); ++s) w[id.slots[s].name] = to_json((*best)[s]);
  w["value"] = to_json(id.residual(*best));
  return {id.name, false, w, details};
}

inline Check check_polynomial_identity(const Identity& id, const Ring& ring, const CheckOptions& opt = {}) {
  switch (opt.method) {
    case Method::basis:
      return check_basis(id, ring);
    case Method::exhaustive:
      return check_exhaustive(id, ring, opt.linear_slots_on_basis);
    case Method::sampled:
      if (!opt.seed) throw Error(id.name + ": sampled method requires an explicit seed");
      return check_sampled(id, ring, *opt.seed, opt.samples);
  }
  throw Error("unknown method");
}

}  // namespace jgl
