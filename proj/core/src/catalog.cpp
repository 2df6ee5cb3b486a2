#include "trigvee/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_set>

#include "trigvee/errors.hpp"
#include "trigvee/restriction.hpp"
#include "trigvee/veesystem.hpp"

namespace trigvee {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct FlatHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using Flat = std::vector<std::size_t>;
using FlatSet = std::unordered_set<Flat, FlatHash>;

Flat closure(const Configuration& cfg, const Flat& seed) {
  RowSpace rs(cfg.dim);
  for (auto i : seed) rs.add(cfg.covectors[i]);
  Flat out;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (rs.contains(cfg.covectors[i])) out.push_back(i);
  return out;
}

Flat image_of(const Symmetry& s, const Flat& f) {
  Flat out;
  out.reserve(f.size());
  for (auto i : f) out.push_back(s.perm[i]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Marks the whole orbit of f as seen.
void mark_orbit(const Flat& f, const std::vector<Symmetry>& syms, FlatSet& seen) {
  std::vector<Flat> stack{f};
  seen.insert(f);
  while (!stack.empty()) {
    Flat cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& s : syms) {
      Flat img = image_of(s, cur);
      if (seen.insert(img).second) stack.push_back(std::move(img));
    }
  }
}

struct Outcome {
  std::optional<CatalogEntry> entry;
  std::string error;
  std::exception_ptr fatal;
};

// Runs body(i) for i < n on up to `threads` threads, 0 meaning one per core.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(n, threads);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::string linear_invariant(const Configuration& cfg) {
  const RatMatrix k = pairing_matrix(cfg, invert(gram(cfg)));
  std::vector<std::string> rows;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    std::vector<std::pair<Rational, Rational>> others;
    for (std::size_t b = 0; b < cfg.size(); ++b)
      if (b != a) others.emplace_back(cfg.multiplicities[b], k(a, b).abs());
    std::sort(others.begin(), others.end());
    std::string row = cfg.multiplicities[a].str() + ":" + k(a, a).str() + "|";
    for (const auto& [c, x] : others) row += c.str() + "@" + x.str() + ",";
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "dim=" + std::to_string(cfg.dim) + ";";
  for (const auto& r : rows) out += r + ";";
  return out;
}

std::string digest(const Configuration& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(linear_invariant(cfg))));
  return buf;
}

std::vector<Symmetry> reflection_symmetries(const Configuration& cfg) {
  const RatMatrix k = pairing_matrix(cfg, invert(gram(cfg)));
  std::map<CoVec, std::size_t> index;
  for (std::size_t i = 0; i < cfg.size(); ++i) index.emplace(cfg.covectors[i], i);
  std::vector<Symmetry> out;
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (k(r, r).is_zero()) continue;
    Symmetry s{r, std::vector<std::size_t>(cfg.size())};
    bool ok = true;
    for (std::size_t b = 0; b < cfg.size() && ok; ++b) {
      CoVec img = sub(cfg.covectors[b], scale(cfg.covectors[r], Rational(2) * k(r, b) / k(r, r)));
      auto it = index.find(img);
      if (it == index.end()) {
        for (auto& x : img) x = -x;
        it = index.find(img);
      }
      if (it == index.end() || cfg.multiplicities[it->second] != cfg.multiplicities[b]) {
        ok = false;
      } else {
        s.perm[b] = it->second;
      }
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

Catalog build_catalog(const Configuration& cfg, std::size_t max_corank, std::size_t threads) {
  cfg.validate();
  const VeeReport parent = vee_check(cfg);
  if (!parent.is_vee || !parent.lambda_sq)
    throw InvalidConfiguration("catalog: the configuration is not a vee-system with a defined lambda");

  Catalog cat;
  cat.source = cfg.name;
  cat.parent = cfg;
  cat.parent_lambda_sq = *parent.lambda_sq;
  cat.max_corank = max_corank;

  std::map<std::string, CatalogEntry> by_digest;
  auto record = [&](CatalogEntry e) {
    auto it = by_digest.find(e.digest);
    if (it == by_digest.end()) {
      by_digest.emplace(e.digest, std::move(e));
    } else {
      ++it->second.sources;
    }
  };

  {
    CatalogEntry self;
    self.digest = digest(cfg);
    self.lambda_sq = *parent.lambda_sq;
    self.child_is_vee = true;
    self.covector_count = cfg.size();
    self.child_dim = cfg.dim;
    self.child = cfg;
    record(std::move(self));
    ++cat.orbit_representatives;
  }

  const std::size_t top = std::min(max_corank, cfg.dim - 1);
  const auto syms = reflection_symmetries(cfg);
  std::vector<Flat> reps{Flat{}};
  RestrictOptions ro;
  ro.verify_parent = false;
  for (std::size_t rank = 1; rank <= top; ++rank) {
    FlatSet seen;
    std::vector<Flat> next;
    for (const auto& f : reps) {
      std::vector<bool> in(cfg.size(), false);
      for (auto i : f) in[i] = true;
      for (std::size_t a = 0; a < cfg.size(); ++a) {
        if (in[a]) continue;
        Flat seed = f;
        seed.push_back(a);
        Flat g = closure(cfg, seed);
        if (seen.count(g)) continue;
        mark_orbit(g, syms, seen);
        next.push_back(std::move(g));
      }
    }
    std::vector<Outcome> results(next.size());
    parallel_for(next.size(), threads, [&](std::size_t i) {
      try {
        const RestrictionResult res = restrict(cfg, next[i], ro);
        const VeeReport child = vee_check(res.child);
        CatalogEntry e;
        e.corank = rank;
        e.members = next[i];
        e.digest = digest(res.child);
        e.child_is_vee = child.is_vee;
        if (child.lambda_sq) e.lambda_sq = *child.lambda_sq;
        e.covector_count = res.child.size();
        e.child_dim = res.child.dim;
        e.child = res.child;
        results[i].entry = std::move(e);
      } catch (const Error& err) {
        results[i].error = err.what();
      } catch (...) {
        results[i].fatal = std::current_exception();
      }
    });
    for (auto& r : results) {
      if (r.fatal) std::rethrow_exception(r.fatal);
      ++cat.orbit_representatives;
      if (r.entry) {
        record(std::move(*r.entry));
      } else {
        ++cat.skipped;
        cat.skipped_reasons.push_back(r.error);
      }
    }
    reps = std::move(next);
  }

  for (auto& [d, e] : by_digest) cat.entries.push_back(std::move(e));
  std::stable_sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.corank != b.corank ? a.corank < b.corank : a.digest < b.digest;
  });
  return cat;
}

Catalog build_catalog(const FamilySpec& spec, std::size_t max_corank, std::size_t threads) {
  Catalog c = build_catalog(generate(spec), max_corank, threads);
  c.source = c.parent.name;
  return c;
}

}  // namespace trigvee
