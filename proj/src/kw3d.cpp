#include "kwsgp/kw3d.hpp"

#include "kwsgp/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kwsgp {

namespace {

void check_params(const KW3Params& params) {
  if (params.p <= 1 || params.q <= params.p || params.r1 < 1 ||
      params.r2 < 1 || params.s < 2) {
    throw Error(Errc::InvalidSpec, "parameters need 1<p<q, r1,r2>=1, s>=2");
  }
  if (std::gcd(params.p, params.q) != 1) {
    throw Error(Errc::NonCoprime, "p and q must be coprime");
  }
  if (std::gcd(params.s, params.w) != 1) {
    throw Error(Errc::NonCoprime, "s and w = r1*p + r2*q must be coprime");
  }
}

}  // namespace

KW3Params make_kw3_params(Int p, Int q, Int r1, Int r2, Int s) {
  KW3Params params{p, q, r1, r2, s, r1 * p + r2 * q};
  check_params(params);
  return params;
}

Int frobenius_formula(const KW3Params& params) {
  return params.s * (params.p * params.q - params.p - params.q) +
         params.w * (params.s - 1);
}

Int gamma_value(const KW3Params& params, const GapPoint3& pt) {
  return frobenius_formula(params) - pt.x * params.s * params.p -
         pt.y * params.s * params.q - pt.z * params.w;
}

NumericalSemigroup base_semigroup(const KW3Params& params) {
  check_params(params);
  const NumericalSemigroup S =
      build(minimalize({params.s * params.p, params.s * params.q, params.w}));
  if (S.embdim != 3 || S.frobenius != frobenius_formula(params)) {
    throw Error(Errc::TheoremViolation,
                "base semigroup disagrees with the closed form");
  }
  if (static_cast<Int>(gaps(S).size()) != (S.frobenius + 1) / 2) {
    throw Error(Errc::TheoremViolation, "base semigroup is not symmetric");
  }
  return S;
}

GapPoint3 gap_rep(const KW3Params& params, Int t) {
  const NumericalSemigroup S = base_semigroup(params);
  if (t < 0 || contains(S, t)) {
    throw Error(Errc::NotAGap, std::to_string(t) + " is not a gap");
  }
  // Canonical domain: x below q and z below s (fixed by residues mod q and
  // mod s), y only bounded by positivity of the gamma value. Gaps of the
  // form F - s*p*q - w*z sit on the y = p face, so y is not capped at p.
  GapPoint3 found;
  Int count = 0;
  const Int ybound = frobenius_formula(params) / (params.s * params.q);
  for (Int x = 0; x < params.q; ++x) {
    for (Int y = 0; y <= ybound; ++y) {
      for (Int z = 0; z < params.s; ++z) {
        const GapPoint3 pt{x, y, z};
        if (gamma_value(params, pt) == t) {
          found = pt;
          ++count;
        }
      }
    }
  }
  if (count != 1) {
    throw Error(Errc::TheoremViolation,
                "gap " + std::to_string(t) + " has " + std::to_string(count) +
                    " canonical representations");
  }
  return found;
}

std::vector<GapPoint3> gap_cloud(const KW3Params& params) {
  const NumericalSemigroup S = base_semigroup(params);
  std::vector<GapPoint3> out;
  for (Int t : gaps(S)) out.push_back(gap_rep(params, t));
  std::sort(out.begin(), out.end());
  return out;
}

bool point_in_strict_box(const KW3Params& params, const GapPoint3& pt) {
  return pt.x >= 0 && pt.y >= 0 && pt.z >= 0 && 2 * pt.x <= params.q - 4 &&
         2 * pt.y <= params.p - 4 && pt.z <= params.s - 2;
}

KW3Semigroup build_kw3(const KW3Params& params,
                       const std::vector<GapPoint3>& points) {
  const NumericalSemigroup S = base_semigroup(params);
  KW3Semigroup K;
  K.params = params;
  K.points = points;
  K.strict_class = true;
  std::vector<Int> gens = {params.s * params.p, params.s * params.q,
                           params.w};
  for (const auto& pt : points) {
    if (pt.x < 0 || pt.x >= params.q || pt.y < 0 || pt.z < 0 ||
        pt.z >= params.s) {
      throw Error(Errc::InvalidSpec, "lattice point outside canonical box");
    }
    const Int h = gamma_value(params, pt);
    if (h < 0 || contains(S, h)) {
      throw Error(Errc::NotAGap,
                  "point gives " + std::to_string(h) + ", not a gap");
    }
    if (std::find(K.hs.begin(), K.hs.end(), h) != K.hs.end()) {
      throw Error(Errc::DuplicateGenerator,
                  "duplicate adjoined value " + std::to_string(h));
    }
    K.hs.push_back(h);
    gens.push_back(h);
    if (!point_in_strict_box(params, pt)) K.strict_class = false;
  }
  const GeneratorSet minimal = minimalize(gens);
  if (minimal.gens.size() != gens.size()) {
    throw Error(Errc::DuplicateGenerator,
                "adjoined value is not a minimal generator");
  }
  K.H = build(minimal);
  return K;
}

std::vector<GapPoint3> enumerate_valid_points(const KW3Params& params) {
  std::vector<GapPoint3> out;
  for (Int x = 0; 2 * x <= params.q - 3; ++x) {
    for (Int y = 0; 2 * y <= params.p - 3; ++y) {
      for (Int z = 0; z <= params.s - 2; ++z) {
        out.push_back(GapPoint3{x, y, z});
      }
    }
  }
  return out;
}

AperyIntersectionReport verify_apery_intersection(const KW3Semigroup& K) {
  AperyIntersectionReport rep;
  const std::vector<Int> base = {K.params.s * K.params.p,
                                 K.params.s * K.params.q, K.params.w};
  for (Int g : K.H.gens) {
    if (std::find(base.begin(), base.end(), g) == base.end()) {
      rep.expected.push_back(g);
    }
  }
  std::vector<std::vector<Int>> apery_sets;
  for (Int m : base) {
    auto a = apery(K.H, m).elements;
    std::sort(a.begin(), a.end());
    apery_sets.push_back(std::move(a));
  }
  std::vector<Int> inter = apery_sets[0];
  for (std::size_t i = 1; i < apery_sets.size(); ++i) {
    std::vector<Int> next;
    std::set_intersection(inter.begin(), inter.end(), apery_sets[i].begin(),
                          apery_sets[i].end(), std::back_inserter(next));
    inter = std::move(next);
  }
  for (Int t : inter) {
    if (t != 0) rep.intersection.push_back(t);
  }
  rep.ok = rep.expected == rep.intersection;
  return rep;
}

Type3Report verify_type3(const KW3Params& params, const GapPoint3& point) {
  Type3Report rep;
  rep.point = point;
  const KW3Semigroup K = build_kw3(params, {point});
  const Int f = frobenius_formula(params);
  rep.h = K.hs.front();
  rep.px = f - (point.x + 1) * params.s * params.p;
  rep.py = f - (point.y + 1) * params.s * params.q;
  rep.pz = f - (point.z + 1) * params.w;
  rep.strict = point_in_strict_box(params, point);
  rep.pz_in_h = rep.pz >= 0 && contains(K.H, rep.pz);
  rep.applicable = !rep.pz_in_h;
  rep.predicted = {rep.px, rep.py, rep.pz};
  std::sort(rep.predicted.begin(), rep.predicted.end());
  rep.actual = pseudo_frobenius(K.H).elements;
  rep.type = static_cast<Int>(rep.actual.size());
  rep.agrees = !rep.applicable || rep.predicted == rep.actual;
  return rep;
}

std::vector<SingleGapRow> single_gap_table(const KW3Params& params) {
  std::vector<SingleGapRow> rows;
  for (const auto& pt : enumerate_valid_points(params)) {
    const KW3Semigroup K = build_kw3(params, {pt});
    SingleGapRow row;
    row.point = pt;
    row.h = K.hs.front();
    row.type = type_of(K.H);
    row.mu = betti_elements(K.H).mu;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const SingleGapRow& a, const SingleGapRow& b) {
              return a.h < b.h;
            });
  return rows;
}

std::vector<TwoGapRow> two_gap_table(const KW3Params& params,
                                     const GapPoint3& first) {
  const NumericalSemigroup S = base_semigroup(params);
  const Int h0 = gamma_value(params, first);
  if (h0 < 0 || contains(S, h0)) {
    throw Error(Errc::NotAGap, "first point does not give a gap");
  }
  std::vector<TwoGapRow> rows;
  for (const auto& pt : enumerate_valid_points(params)) {
    const Int h1 = gamma_value(params, pt);
    if (h1 == h0 || h1 <= 0) continue;
    const GeneratorSet minimal = minimalize(
        {params.s * params.p, params.s * params.q, params.w, h0, h1});
    if (minimal.gens.size() != 5) continue;
    const NumericalSemigroup H = build(minimal);
    rows.push_back(TwoGapRow{h1, betti_elements(H).mu});
  }
  std::sort(rows.begin(), rows.end(),
            [](const TwoGapRow& a, const TwoGapRow& b) {
              return a.hprime < b.hprime;
            });
  return rows;
}

}  // namespace kwsgp
