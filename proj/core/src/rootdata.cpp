#include "trigvee/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trigvee/errors.hpp"

namespace trigvee {

namespace {

SymMat chain_gram(std::size_t n) {
  SymMat g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

void link(SymMat& g, std::size_t i, std::size_t j, const Rational& v) { g(i, j) = g(j, i) = v; }

SymMat simple_gram_for(Family f, std::size_t n) {
  switch (f) {
    case Family::A:
      if (n < 1) throw UnsupportedParams("A_N needs N >= 1");
      return chain_gram(n);
    case Family::B: {
      if (n < 2) throw UnsupportedParams("B_N needs N >= 2");
      SymMat g = chain_gram(n);
      g(n - 1, n - 1) = 1;
      return g;
    }
    case Family::C: {
      if (n < 2) throw UnsupportedParams("C_N needs N >= 2");
      SymMat g = chain_gram(n);
      g(n - 1, n - 1) = 4;
      link(g, n - 2, n - 1, -2);
      return g;
    }
    case Family::D: {
      if (n < 3) throw UnsupportedParams("D_N needs N >= 3");
      SymMat g = chain_gram(n);
      link(g, n - 2, n - 1, 0);
      link(g, n - 3, n - 1, -1);
      return g;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const std::size_t m = f == Family::E6 ? 6 : (f == Family::E7 ? 7 : 8);
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
      SymMat g(m, m);
      for (std::size_t i = 0; i < m; ++i) g(i, i) = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (std::size_t i = 2; i + 1 < m; ++i) link(g, i, i + 1, -1);
      return g;
    }
    case Family::F4: {
      // e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
      SymMat g(4, 4);
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      link(g, 0, 1, -1);
      link(g, 1, 2, -1);
      link(g, 2, 3, Rational(-1, 2));
      return g;
    }
    case Family::G2: {
      SymMat g(2, 2);
      g(0, 0) = 3;
      g(1, 1) = 1;
      link(g, 0, 1, Rational(-3, 2));
      return g;
    }
    default:
      throw UnsupportedParams("no root data for family " + to_string(f));
  }
}

Rational form(const SymMat& g, const std::vector<long>& a, const std::vector<long>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) s += g(i, j) * Rational(a[i] * b[j]);
  }
  return s;
}

std::vector<std::vector<long>> positive_roots(const SymMat& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<long>> roots;
  std::set<std::vector<long>> known;
  std::vector<std::vector<long>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> a(n, 0);
    a[i] = 1;
    level.push_back(a);
  }
  while (!level.empty()) {
    for (const auto& r : level) {
      roots.push_back(r);
      known.insert(r);
    }
    std::set<std::vector<long>> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        std::vector<long> ai(n, 0);
        ai[i] = 1;
        const Rational cartan = Rational(2) * form(g, beta, ai) / g(i, i);
        const Rational q = Rational(p) - cartan;
        if (q.sign() > 0) {
          std::vector<long> up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return roots;
}

}  // namespace

RootData root_data(Family family, std::size_t rank) {
  RootData rd;
  rd.family = family;
  if (family == Family::BC) {
    if (rank < 1) throw UnsupportedParams("BC_N needs N >= 1");
    rd.rank = rank;
    rd.census = {{Rational(1), rank, "r"}, {Rational(4), rank, "s"}, {Rational(2), rank * (rank - 1), "q"}};
    return rd;
  }
  switch (family) {
    case Family::E6: rank = 6; break;
    case Family::E7: rank = 7; break;
    case Family::E8: rank = 8; break;
    case Family::F4: rank = 4; break;
    case Family::G2: rank = 2; break;
    default: break;
  }
  rd.rank = rank;
  rd.simple_gram = simple_gram_for(family, rank);
  rd.positive_roots = positive_roots(rd.simple_gram);

  const bool simply_laced = family == Family::A || family == Family::D || family == Family::E6 ||
                            family == Family::E7 || family == Family::E8;
  std::map<Rational, std::size_t> by_norm;
  for (const auto& r : rd.positive_roots) ++by_norm[form(rd.simple_gram, r, r)];
  auto label_of = [&](const Rational& norm) -> std::string {
    if (simply_laced) return "t";
    return norm == by_norm.begin()->first ? "p" : "q";
  };
  for (const auto& [norm, count] : by_norm) rd.census.push_back({norm, count, label_of(norm)});
  for (std::size_t i = 0; i < rank; ++i) {
    rd.simple_norms.push_back(rd.simple_gram(i, i));
    rd.simple_labels.push_back(label_of(rd.simple_gram(i, i)));
  }
  // Roots are produced level by level, so the last one has maximal height.
  rd.highest = rd.positive_roots.back();
  rd.theta_norm = form(rd.simple_gram, rd.highest, rd.highest);
  return rd;
}

}  // namespace trigvee
