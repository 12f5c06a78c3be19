#include "kwsgp/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace kwsgp {

namespace {

Monomial uvm(Int nvars, Int ue, Int ve, Int u1e = 0, Int u2e = 0) {
  Monomial m = mono_one(nvars);
  m.e[0] = ue;
  m.e[1] = ve;
  if (nvars > 2) m.e[2] = u1e;
  if (nvars > 3) m.e[3] = u2e;
  return m;
}

Poly pm(const Monomial& m) { return poly_mono(m, 1); }
Poly nm(const Monomial& m) { return poly_mono(m, -1); }
Poly bin(const Monomial& a, const Monomial& b) {
  return poly_add(pm(a), nm(b));
}

// Infers shifts[t+1] from shifts[t] and the entry degrees of maps[t];
// throws ComplexBroken on inhomogeneous entries or inconsistent columns.
void infer_shifts(GradedComplex& g) {
  g.shifts.assign(g.maps.size() + 1, {});
  g.shifts[0] = {0};
  for (std::size_t t = 0; t < g.maps.size(); ++t) {
    const PolyMatrix& m = g.maps[t];
    std::vector<Int> next(m.cols, 0);
    for (Int c = 0; c < m.cols; ++c) {
      bool found = false;
      for (Int r = 0; r < m.rows; ++r) {
        const Poly& e = m.at(r, c);
        if (e.is_zero()) continue;
        const PolyDegree d = poly_degree(e, g.weights);
        if (!d.is_homogeneous) {
          throw Error(Errc::ComplexBroken, "inhomogeneous entry in map " +
                                               std::to_string(t));
        }
        const Int shift = g.shifts[t][r] + d.degree;
        if (!found) {
          next[c] = shift;
          found = true;
        } else if (next[c] != shift) {
          throw Error(Errc::ComplexBroken,
                      "inconsistent column degrees in map " +
                          std::to_string(t));
        }
      }
      if (!found) {
        throw Error(Errc::ComplexBroken,
                    "zero column in map " + std::to_string(t));
      }
    }
    g.shifts[t + 1] = std::move(next);
  }
}

void require_complex(GradedComplex& g) {
  infer_shifts(g);
  for (std::size_t t = 0; t + 1 < g.maps.size(); ++t) {
    const PolyMatrix prod = poly_matmul(g.maps[t], g.maps[t + 1]);
    if (!poly_matrix_zero(prod)) {
      for (Int r = 0; r < prod.rows; ++r) {
        for (Int c = 0; c < prod.cols; ++c) {
          if (!prod.at(r, c).is_zero()) {
            throw Error(Errc::ComplexBroken,
                        "nonzero product entry (" + std::to_string(r) + "," +
                            std::to_string(c) + ") in maps " +
                            std::to_string(t) + "*" + std::to_string(t + 1) +
                            ": " + poly_string(prod.at(r, c)));
          }
        }
      }
    }
  }
}

}  // namespace

GradedComplex resolution_ed3(Int p, Int q, Int x1, Int y1) {
  const KWParams params = make_kw_params(p, q);
  validate_corners(KWCorners{params, {{x1, y1}}, KWVariant::corner_member});

  GradedComplex g;
  g.nvars = 3;
  g.weights = {p, q, gap_value(params, x1, y1)};
  g.ranks = {1, 3, 2};

  const Monomial U1 = uvm(3, 0, 0, 1);
  PolyMatrix d1 = poly_matrix(1, 3);
  d1.at(0, 0) = bin(uvm(3, 0, p - y1), mono_mul(uvm(3, x1, 0), U1));
  d1.at(0, 1) = bin(uvm(3, q - 2 * x1, p - 2 * y1), mono_mul(U1, U1));
  d1.at(0, 2) = bin(uvm(3, q - x1, 0), mono_mul(uvm(3, 0, y1), U1));

  PolyMatrix d2 = poly_matrix(3, 2);
  d2.at(0, 0) = pm(U1);
  d2.at(0, 1) = nm(uvm(3, q - 2 * x1, 0));
  d2.at(1, 0) = nm(uvm(3, x1, 0));
  d2.at(1, 1) = pm(uvm(3, 0, y1));
  d2.at(2, 0) = pm(uvm(3, 0, p - 2 * y1));
  d2.at(2, 1) = nm(U1);

  g.maps = {std::move(d1), std::move(d2)};
  require_complex(g);
  return g;
}

GradedComplex resolution_ed4(Int p, Int q, std::pair<Int, Int> c1,
                             std::pair<Int, Int> c2) {
  const KWParams params = make_kw_params(p, q);
  validate_corners(KWCorners{params, {c1, c2}, KWVariant::corner_member});
  const Int x1 = c1.first, y1 = c1.second;
  const Int x2 = c2.first, y2 = c2.second;
  if (2 * x1 < x2 || 2 * y2 < y1) {
    throw Error(Errc::InvalidCorners,
                "matrices need 2*x1 >= x2 and 2*y2 >= y1");
  }

  GradedComplex g;
  g.nvars = 4;
  g.weights = {p, q, gap_value(params, x1, y1), gap_value(params, x2, y2)};
  g.ranks = {1, 6, 8, 3};

  // Shorthand factors shared by the three maps.
  const Monomial m1 = uvm(4, x1, 0);
  const Monomial m2 = uvm(4, x2 - x1, 0);
  const Monomial m3 = uvm(4, q - 2 * x2, 0);
  const Monomial n1 = uvm(4, 0, y2);
  const Monomial n2 = uvm(4, 0, y1 - y2);
  const Monomial n3 = uvm(4, 0, p - 2 * y1);
  const Monomial w = uvm(4, 2 * x1 - x2, 0);
  const Monomial vp = uvm(4, 0, 2 * y2 - y1);
  const Monomial U1 = uvm(4, 0, 0, 1, 0);
  const Monomial U2 = uvm(4, 0, 0, 0, 1);
  const auto mul = [](std::initializer_list<Monomial> ms) {
    Monomial acc;
    bool first = true;
    for (const auto& m : ms) {
      acc = first ? m : mono_mul(acc, m);
      first = false;
    }
    return acc;
  };

  PolyMatrix a3 = poly_matrix(1, 6);
  a3.at(0, 0) = bin(mul({m2, m2, m3, n3}), mul({U1, U1}));
  a3.at(0, 1) = bin(mul({m2, m3, n2, n3}), mul({U1, U2}));
  a3.at(0, 2) = bin(mul({m3, n2, n2, n3}), mul({U2, U2}));
  a3.at(0, 3) = bin(mul({n2, U1}), mul({m2, U2}));
  a3.at(0, 4) = bin(mul({n1, U2}), mul({m1, m2, m3}));
  a3.at(0, 5) = bin(mul({m1, U1}), mul({n1, n2, n3}));

  PolyMatrix a2 = poly_matrix(6, 8);
  a2.at(0, 0) = nm(m1);
  a2.at(0, 1) = nm(mul({w, n2}));
  a2.at(0, 5) = nm(U2);
  a2.at(0, 6) = nm(n2);
  a2.at(1, 3) = nm(U2);
  a2.at(1, 5) = pm(U1);
  a2.at(1, 6) = pm(m2);
  a2.at(1, 7) = nm(n2);
  a2.at(2, 2) = pm(n1);
  a2.at(2, 3) = pm(U1);
  a2.at(2, 4) = pm(mul({vp, m2}));
  a2.at(2, 7) = pm(m2);
  a2.at(3, 0) = nm(mul({n1, n3}));
  a2.at(3, 1) = nm(mul({w, U1}));
  a2.at(3, 2) = nm(mul({m1, m3}));
  a2.at(3, 3) = nm(mul({m3, n2, n3}));
  a2.at(3, 4) = nm(mul({vp, U2}));
  a2.at(3, 5) = nm(mul({m2, m3, n3}));
  a2.at(3, 6) = nm(U1);
  a2.at(3, 7) = nm(U2);
  a2.at(4, 0) = nm(mul({m2, n3}));
  a2.at(4, 1) = nm(mul({n2, n3}));
  a2.at(4, 2) = pm(U2);
  a2.at(4, 4) = pm(U1);
  a2.at(5, 0) = nm(U1);
  a2.at(5, 1) = nm(U2);
  a2.at(5, 2) = pm(mul({m3, n2}));
  a2.at(5, 4) = pm(mul({m2, m3}));

  PolyMatrix a1 = poly_matrix(8, 3);
  a1.at(0, 0) = pm(U2);
  a1.at(0, 1) = nm(mul({m3, n2}));
  a1.at(1, 0) = nm(U1);
  a1.at(1, 1) = pm(mul({m2, m3}));
  a1.at(2, 0) = pm(mul({m2, n3}));
  a1.at(2, 1) = nm(U1);
  a1.at(3, 1) = pm(n1);
  a1.at(3, 2) = pm(m2);
  a1.at(4, 0) = nm(mul({n2, n3}));
  a1.at(4, 1) = pm(U2);
  a1.at(5, 0) = nm(m1);
  a1.at(5, 2) = nm(n2);
  a1.at(6, 0) = pm(mul({w, U1}));
  a1.at(6, 2) = pm(U2);
  a1.at(7, 1) = nm(mul({vp, U2}));
  a1.at(7, 2) = nm(U1);

  g.maps = {std::move(a3), std::move(a2), std::move(a1)};
  require_complex(g);
  return g;
}

ComplexReport verify_complex(const GradedComplex& g) {
  ComplexReport rep;
  rep.shapes_ok = g.maps.size() + 1 == g.ranks.size();
  for (std::size_t t = 0; rep.shapes_ok && t < g.maps.size(); ++t) {
    rep.shapes_ok =
        g.maps[t].rows == g.ranks[t] && g.maps[t].cols == g.ranks[t + 1];
  }
  if (!rep.shapes_ok) {
    rep.detail = "map shapes disagree with ranks";
    return rep;
  }

  rep.products_zero = true;
  for (std::size_t t = 0; t + 1 < g.maps.size(); ++t) {
    const PolyMatrix prod = poly_matmul(g.maps[t], g.maps[t + 1]);
    if (!poly_matrix_zero(prod)) {
      rep.products_zero = false;
      for (Int r = 0; r < prod.rows && rep.detail.empty(); ++r) {
        for (Int c = 0; c < prod.cols && rep.detail.empty(); ++c) {
          if (!prod.at(r, c).is_zero()) {
            rep.detail = "product of maps " + std::to_string(t) + "," +
                         std::to_string(t + 1) + " nonzero at (" +
                         std::to_string(r) + "," + std::to_string(c) +
                         "): " + poly_string(prod.at(r, c));
          }
        }
      }
    }
  }

  rep.homogeneous = g.shifts.size() == g.maps.size() + 1;
  for (std::size_t t = 0; rep.homogeneous && t < g.maps.size(); ++t) {
    const PolyMatrix& m = g.maps[t];
    for (Int r = 0; r < m.rows && rep.homogeneous; ++r) {
      for (Int c = 0; c < m.cols && rep.homogeneous; ++c) {
        const Poly& e = m.at(r, c);
        if (e.is_zero()) continue;
        const PolyDegree d = poly_degree(e, g.weights);
        if (!d.is_homogeneous ||
            g.shifts[t][r] + d.degree != g.shifts[t + 1][c]) {
          rep.homogeneous = false;
          rep.detail = "entry (" + std::to_string(r) + "," +
                       std::to_string(c) + ") of map " + std::to_string(t) +
                       " breaks the grading";
        }
      }
    }
  }

  const PolyMatrix& last = g.maps.back();
  const Int r = specialized_rank(last, g.nvars, 0x5eed);
  rep.last_map_full_rank = r == std::min(last.rows, last.cols);
  if (!rep.last_map_full_rank && rep.detail.empty()) {
    rep.detail = "last map specializes to rank " + std::to_string(r);
  }
  return rep;
}

std::string format_complex(const GradedComplex& g) {
  std::ostringstream os;
  os << "ranks:";
  for (Int r : g.ranks) os << " " << r;
  os << "\nweights:";
  for (Int w : g.weights) os << " " << w;
  os << "\n";
  for (std::size_t t = 0; t < g.maps.size(); ++t) {
    const PolyMatrix& m = g.maps[t];
    os << "map " << t << " (" << m.rows << "x" << m.cols << "), shifts";
    for (Int s : g.shifts[t + 1]) os << " " << s;
    os << ":\n";
    std::vector<std::size_t> width(m.cols, 0);
    std::vector<std::vector<std::string>> cells(m.rows);
    for (Int r = 0; r < m.rows; ++r) {
      for (Int c = 0; c < m.cols; ++c) {
        std::string s = poly_string(m.at(r, c));
        width[c] = std::max(width[c], s.size());
        cells[r].push_back(std::move(s));
      }
    }
    for (Int r = 0; r < m.rows; ++r) {
      os << "  [";
      for (Int c = 0; c < m.cols; ++c) {
        if (c) os << "  ";
        os << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
      }
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace kwsgp
