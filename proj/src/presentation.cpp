#include "kwsgp/presentation.hpp"

#include "kwsgp/principal.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kwsgp {

namespace {

Monomial uv_power(Int nvars, Int ue, Int ve) {
  Monomial m = mono_one(nvars);
  m.e[0] = ue;
  m.e[1] = ve;
  return m;
}

Monomial gen_var(Int nvars, Int i) {
  Monomial m = mono_one(nvars);
  m.e[2 + i] = 1;
  return m;
}

// Exchange relation between corners i < j (0-based): v^{y_i-y_j} u_i -
// u^{x_j-x_i} u_j. Adjacent ones are ideal generators; wider spans are the
// composite minors.
Binomial exchange_binomial(const KWCorners& c, Int i, Int j) {
  const Int nvars = static_cast<Int>(c.corners.size()) + 2;
  Monomial a = gen_var(nvars, i);
  a.e[1] = c.corners[i].second - c.corners[j].second;
  Monomial b = gen_var(nvars, j);
  b.e[0] = c.corners[j].first - c.corners[i].first;
  return make_binomial(a, b);
}

// The composite exchange relation splits one step at a time:
// span(i,j) = v^(step) * span(i,j-1) + u^(step) * span(j-1,j).
bool exchange_decomposes(const KWCorners& c, Int i, Int j) {
  const Int nvars = static_cast<Int>(c.corners.size()) + 2;
  const Poly lhs = poly_binomial(exchange_binomial(c, i, j));
  const Poly left =
      poly_mul(poly_mono(uv_power(nvars, 0,
                                  c.corners[j - 1].second -
                                      c.corners[j].second),
                         1),
               poly_binomial(exchange_binomial(c, i, j - 1)));
  const Poly right =
      poly_mul(poly_mono(uv_power(nvars,
                                  c.corners[j - 1].first -
                                      c.corners[i].first,
                                  0),
                         1),
               poly_binomial(exchange_binomial(c, j - 1, j)));
  return poly_add(left, right) == lhs;
}

struct DSU {
  std::vector<Int> parent;

  explicit DSU(Int n) : parent(n) {
    for (Int i = 0; i < n; ++i) parent[i] = i;
  }
  Int find(Int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Int a, Int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Int> grading_weights(const KWCorners& c) {
  std::vector<Int> w = {c.params.p, c.params.q};
  for (const auto& [x, y] : c.corners) {
    w.push_back(gap_value(c.params, x, y));
  }
  return w;
}

std::vector<Binomial> ideal_generators(const KWCorners& c) {
  if (c.variant != KWVariant::corner_member || c.corners.empty()) {
    throw Error(Errc::InvalidCorners,
                "ideal generators need a corner member with n >= 3");
  }
  const Int k = static_cast<Int>(c.corners.size());
  const Int nvars = k + 2;
  const Int p = c.params.p;
  const Int q = c.params.q;
  std::vector<Binomial> out;
  for (Int i = 0; i < k; ++i) {
    for (Int j = i; j < k; ++j) {
      Monomial lhs = gen_var(nvars, i);
      lhs.e[2 + j] += 1;
      const Monomial rhs =
          uv_power(nvars, q - c.corners[i].first - c.corners[j].first,
                   p - c.corners[i].second - c.corners[j].second);
      out.push_back(make_binomial(lhs, rhs));
    }
  }
  for (Int i = 0; i + 1 < k; ++i) {
    out.push_back(exchange_binomial(c, i, i + 1));
  }
  {
    const Monomial lhs = uv_power(nvars, 0, p - c.corners.front().second);
    Monomial rhs = gen_var(nvars, 0);
    rhs.e[0] = c.corners.front().first;
    out.push_back(make_binomial(lhs, rhs));
  }
  {
    Monomial lhs = gen_var(nvars, k - 1);
    lhs.e[1] = c.corners.back().second;
    const Monomial rhs = uv_power(nvars, q - c.corners.back().first, 0);
    out.push_back(make_binomial(lhs, rhs));
  }
  return out;
}

std::vector<DetMatrix> determinantal_matrices(const KWCorners& c) {
  if (c.variant != KWVariant::corner_member || c.corners.empty()) {
    throw Error(Errc::InvalidCorners,
                "determinantal matrices need a corner member with n >= 3");
  }
  const Int k = static_cast<Int>(c.corners.size());
  const Int nvars = k + 2;
  const Int p = c.params.p;
  const Int q = c.params.q;
  const auto& cs = c.corners;
  std::vector<DetMatrix> out;
  for (Int i = 0; i < k; ++i) {
    for (Int j = i + 1; j < k; ++j) {
      DetMatrix d;
      d.label = "A" + std::to_string(i + 1) + std::to_string(j + 1);
      d.m = {{gen_var(nvars, i),
              uv_power(nvars, q - 2 * cs[j].first,
                       p - cs[i].second - cs[j].second),
              gen_var(nvars, j)},
             {uv_power(nvars, cs[j].first - cs[i].first, 0), gen_var(nvars, j),
              uv_power(nvars, 0, cs[i].second - cs[j].second)}};
      out.push_back(std::move(d));
    }
  }
  {
    DetMatrix b;
    b.label = "B";
    b.m = {{uv_power(nvars, 0, cs.back().second),
            uv_power(nvars, q - cs.front().first - cs.back().first, 0),
            gen_var(nvars, 0)},
           {uv_power(nvars, cs.front().first, 0), gen_var(nvars, k - 1),
            uv_power(nvars, 0, p - cs.front().second - cs.back().second)}};
    out.push_back(std::move(b));
  }
  {
    DetMatrix d;
    d.label = "C";
    d.m = {{uv_power(nvars, q - cs.front().first - cs.back().first,
                     p - 2 * cs.front().second),
            gen_var(nvars, 0), gen_var(nvars, k - 1)},
           {gen_var(nvars, 0),
            uv_power(nvars, cs.back().first - cs.front().first, 0),
            uv_power(nvars, 0, cs.front().second - cs.back().second)}};
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Binomial> minors_2x2(const DetMatrix& d) {
  std::vector<Binomial> out;
  for (Int a = 0; a < 3; ++a) {
    for (Int b = a + 1; b < 3; ++b) {
      const Monomial lhs = mono_mul(d.m[0][a], d.m[1][b]);
      const Monomial rhs = mono_mul(d.m[0][b], d.m[1][a]);
      if (lhs == rhs) continue;
      out.push_back(make_binomial(lhs, rhs));
    }
  }
  return out;
}

std::vector<Binomial> dedup_minors(const std::vector<DetMatrix>& mats) {
  std::set<Binomial> seen;
  for (const auto& d : mats) {
    for (const auto& b : minors_2x2(d)) seen.insert(b);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Binomial> critical_binomials(const NumericalSemigroup& H) {
  const auto P = principal_matrix_bruteforce(H);
  const Int n = P.n();
  std::vector<Binomial> out;
  for (Int i = 0; i < n; ++i) {
    Monomial lhs = mono_one(n);
    lhs.e[i] = -P.entries[i][i];
    Monomial rhs = mono_one(n);
    for (Int j = 0; j < n; ++j) {
      if (j != i) rhs.e[j] = P.entries[i][j];
    }
    out.push_back(make_binomial(lhs, rhs));
  }
  return out;
}

std::vector<Int> BettiReport::degrees() const {
  std::vector<Int> out;
  out.reserve(elements.size());
  for (const auto& [deg, count] : elements) out.push_back(deg);
  return out;
}

BettiReport betti_elements(const NumericalSemigroup& H) {
  BettiReport rep;
  // Above F + min + max every factorization is joined within two steps to
  // one using the smallest generator, so the graph is connected and no new
  // generator can appear.
  const Int bound = H.frobenius + H.gens.front() + H.gens.back();
  for (Int t = 1; t <= bound; ++t) {
    if (!contains(H, t)) continue;
    const auto facts = factorizations(H, t);
    const Int m = static_cast<Int>(facts.size());
    if (m <= 1) continue;
    DSU dsu(m);
    for (Int a = 0; a < m; ++a) {
      for (Int b = a + 1; b < m; ++b) {
        bool shared = false;
        for (std::size_t g = 0; g < H.gens.size(); ++g) {
          if (facts[a].coeffs[g] > 0 && facts[b].coeffs[g] > 0) {
            shared = true;
            break;
          }
        }
        if (shared) dsu.unite(a, b);
      }
    }
    std::set<Int> roots;
    for (Int a = 0; a < m; ++a) roots.insert(dsu.find(a));
    const Int extra = static_cast<Int>(roots.size()) - 1;
    if (extra > 0) {
      rep.elements.emplace_back(t, extra);
      rep.mu += extra;
    }
  }
  return rep;
}

PresentationReport verify_presentation(const KWCorners& c) {
  const Int k = static_cast<Int>(c.corners.size());
  PresentationReport rep;
  rep.n = k + 2;
  // Midline test: 2x = q or 2y = p can only hold for the even parameter,
  // and with a lone corner it forces 2h = q*beta resp. p*alpha, a gluing.
  rep.complete_intersection =
      k == 1 && (2 * c.corners[0].first == c.params.q ||
                 2 * c.corners[0].second == c.params.p);
  rep.expected_mu =
      rep.complete_intersection ? rep.n - 1 : rep.n * (rep.n - 1) / 2;
  rep.expected_type = rep.complete_intersection ? 1 : rep.n - 1;

  const NumericalSemigroup H = build_kw(c);
  const auto betti = betti_elements(H);
  rep.mu = betti.mu;
  rep.betti_degrees = betti.degrees();
  rep.type = type_of(H);
  rep.mu_ok = rep.mu == rep.expected_mu;
  rep.type_ok = rep.type == rep.expected_type;

  const auto gens = ideal_generators(c);
  const auto weights = grading_weights(c);
  std::set<Int> gen_degrees;
  for (const auto& b : gens) gen_degrees.insert(binomial_degree(b, weights));
  rep.generator_degrees = {gen_degrees.begin(), gen_degrees.end()};
  rep.betti_degrees_ok =
      std::all_of(rep.betti_degrees.begin(), rep.betti_degrees.end(),
                  [&](Int d) { return gen_degrees.count(d) > 0; });

  const auto minors = dedup_minors(determinantal_matrices(c));
  const std::set<Binomial> minor_set(minors.begin(), minors.end());
  const std::set<Binomial> gen_set(gens.begin(), gens.end());
  bool gens_covered = std::all_of(gen_set.begin(), gen_set.end(),
                                  [&](const Binomial& b) {
                                    return minor_set.count(b) > 0;
                                  });
  bool extras_ok = true;
  for (const auto& b : minor_set) {
    if (gen_set.count(b) > 0) continue;
    rep.extra_minors.push_back(b);
    bool matched = false;
    for (Int i = 0; i < k && !matched; ++i) {
      for (Int j = i + 2; j < k && !matched; ++j) {
        if (exchange_binomial(c, i, j) == b) {
          matched = exchange_decomposes(c, i, j);
        }
      }
    }
    if (!matched) extras_ok = false;
  }
  rep.minors_ok = gens_covered && extras_ok;

  if (!rep.ok()) {
    std::string what = "presentation checks failed at (p,q)=(" +
                       std::to_string(c.params.p) + "," +
                       std::to_string(c.params.q) + ")";
    if (!rep.mu_ok) {
      what += " [mu " + std::to_string(rep.mu) + " != " +
              std::to_string(rep.expected_mu) + "]";
    }
    if (!rep.type_ok) {
      what += " [type " + std::to_string(rep.type) + " != " +
              std::to_string(rep.expected_type) + "]";
    }
    if (!rep.betti_degrees_ok) what += " [betti degrees]";
    if (!rep.minors_ok) what += " [minor set]";
    throw Error(Errc::TheoremViolation, what);
  }
  return rep;
}

}  // namespace kwsgp
