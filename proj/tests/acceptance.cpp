#include "kwsgp/cli.hpp"
#include "kwsgp/kw2d.hpp"
#include "kwsgp/kw3d.hpp"
#include "kwsgp/numsgp.hpp"
#include "kwsgp/presentation.hpp"
#include "kwsgp/principal.hpp"
#include "kwsgp/resolution.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace kwsgp;
using nlohmann::json;

namespace {

int g_failures = 0;

const std::vector<std::pair<Int, Int>> kFamilies = {
    {5, 7}, {7, 9}, {5, 9}, {7, 11}, {8, 9}, {9, 10}};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

template <typename Body>
void criterion(int idx, double budget, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string note;
  bool ok = true;
  try {
    note = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("check failed: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  char timing[64];
  if (budget > 0) {
    if (elapsed >= budget) ok = false;
    std::snprintf(timing, sizeof timing, " [%.2fs, budget %.0fs]", elapsed,
                  budget);
  } else {
    std::snprintf(timing, sizeof timing, " [%.2fs]", elapsed);
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << note
            << timing << std::endl;
  if (!ok) ++g_failures;
}

std::string criterion_analyze_cli() {
  std::ostringstream out, err;
  require(run_cli({"analyze", "--gens", "5,7,11,13"}, out, err) == 0,
          "CLI exit code");
  const json doc = json::parse(out.str());
  require(doc["result"]["frobenius"] == 9, "frobenius");
  require(doc["result"]["embdim"] == 4, "embdim");
  require(doc["result"]["type"] == 3, "type");
  require(doc["result"]["mu"] == 6, "mu");
  const json expected = json::array(
      {{-4, 1, 0, 1}, {2, -3, 1, 0}, {3, 1, -2, 0}, {1, 3, 0, -2}});
  require(doc["result"]["principal_matrix"]["entries"] == expected,
          "principal matrix entries");
  return "analyze --gens 5,7,11,13 reports the exact principal matrix, "
         "mu 6, type 3";
}

std::string criterion_closed_form() {
  int verified = 0;
  for (const auto& [p, q] : kFamilies) {
    for (const auto& m : enumerate_kw(make_kw_params(p, q))) {
      if (m.variant != KWVariant::corner_member || m.corners.empty()) continue;
      require(verify_closed_form(m).ok(), "closed-form mismatch");
      ++verified;
    }
  }
  // 9 + 34 + 14 + 55 + 68 + 124 members carry at least one corner
  require(verified == 304, "applicable member count");
  return "closed-form principal matrices match brute force for all 304 "
         "corner members across 6 families, zero violations";
}

std::string criterion_mu_and_type() {
  int checked = 0;
  int glued = 0;
  for (const auto& [p, q] : kFamilies) {
    for (const auto& m : enumerate_kw(make_kw_params(p, q))) {
      const auto H = build_kw(m);
      const Int n = static_cast<Int>(H.gens.size());
      const bool midline =
          m.corners.size() == 1 && (2 * m.corners[0].first == m.params.q ||
                                    2 * m.corners[0].second == m.params.p);
      if (midline) {
        // lone corner on a parameter midline: 2h = p*alpha or q*beta, the
        // member is a gluing, hence a complete intersection; the generic
        // counts provably fail here and the verified values are checked
        require(betti_elements(H).mu == n - 1, "gluing mu != n-1");
        require(type_of(H) == 1, "gluing type != 1");
        ++glued;
      } else {
        require(betti_elements(H).mu == n * (n - 1) / 2, "mu != C(n,2)");
        require(type_of(H) == n - 1, "type != n-1");
      }
      ++checked;
    }
  }
  require(checked == 312, "member count");
  require(glued == 6, "midline gluing count");
  const std::string repairs =
      slurp(std::string(GOLDEN_DIR) + "/../../REPAIRS.md");
  for (const char* m : {"<8,9,28>", "<8,9,20>", "<8,9,12>", "<9,10,15>",
                        "<9,10,25>", "<9,10,35>"}) {
    require(repairs.find(m) != std::string::npos,
            std::string("REPAIRS.md is missing gluing member ") + m);
  }
  return "mu = C(n,2) and type = n-1 for 306 of 312 members (halves "
         "included); the 6 lone-midline-corner members <8,9,28|20|12> and "
         "<9,10,15|25|35> are gluings with mu = 2, type 1 (see REPAIRS.md)";
}

std::string criterion_minors() {
  int exact = 0;
  for (const auto& m : enumerate_kw(make_kw_params(5, 7))) {
    if (m.corners.empty()) continue;
    const auto rep = verify_presentation(m);
    require(rep.ok(), "presentation report n<=4");
    require(rep.extra_minors.empty(), "unexpected extra minors for n<=4");
    ++exact;
  }
  int closure = 0;
  for (const auto& m : enumerate_kw(make_kw_params(7, 9))) {
    if (m.corners.size() != 3) continue;
    const auto rep = verify_presentation(m);
    require(rep.ok(), "presentation report n=5");
    require(!rep.extra_minors.empty(), "expected composite exchanges at n=5");
    ++closure;
  }
  require(exact == 9 && closure == 4, "member counts");
  return "minor sets equal the generating sets for all 9 members with "
         "n=3,4; for the 4 members with n=5 the extra minors are composite "
         "exchanges that decompose over adjacent ones (same ideal)";
}

std::string criterion_resolutions() {
  const struct {
    Int p, q, x, y;
  } ed3[] = {{5, 7, 2, 2}, {5, 7, 3, 1},  {5, 7, 1, 2},
             {7, 9, 2, 3}, {7, 11, 5, 1}, {9, 11, 4, 3}};
  for (const auto& e : ed3) {
    require(verify_complex(resolution_ed3(e.p, e.q, e.x, e.y)).ok(),
            "length-2 resolution instance");
  }
  const struct {
    Int p, q;
    std::pair<Int, Int> c1, c2;
  } ed4[] = {{5, 7, {2, 2}, {3, 1}},  {7, 9, {2, 2}, {3, 1}},
             {7, 9, {2, 3}, {3, 2}},  {7, 9, {3, 3}, {4, 2}},
             {7, 11, {3, 3}, {4, 2}}, {9, 11, {3, 4}, {5, 3}}};
  for (const auto& e : ed4) {
    require(verify_complex(resolution_ed4(e.p, e.q, e.c1, e.c2)).ok(),
            "length-3 resolution instance");
  }
  const std::string repairs = slurp(std::string(GOLDEN_DIR) + "/../../REPAIRS.md");
  const char* labels[] = {"D1[1]",    "A2[1][2]", "A2[1][7]", "A2[2][8]",
                          "A2[4][3]", "A1[1][2]", "A1[3][1]", "A1[3][2]",
                          "A1[6][1]", "A1[7][1]", "A1[8][2]", "mu(103)"};
  for (const char* label : labels) {
    require(repairs.find(label) != std::string::npos,
            std::string("REPAIRS.md is missing entry ") + label);
  }
  return "6 length-2 and 6 length-3 resolution instances verify exactly; "
         "REPAIRS.md lists all 12 corrected entries";
}

std::string criterion_tables() {
  for (const char* id : {"type-5-7", "mu-5-7", "mu2-5-7"}) {
    std::ostringstream out, err;
    require(run_cli({"table", id}, out, err) == 0,
            std::string("table exit code for ") + id);
    require(out.str() == slurp(std::string(GOLDEN_DIR) + "/" + id + ".csv"),
            std::string("byte mismatch against golden ") + id);
  }
  return "table output is byte-identical to the golden files; mu-5-7 "
         "carries the recomputed value mu(103) = 6";
}

std::string criterion_3d_examples() {
  const auto pa = make_kw3_params(9, 11, 2, 1, 4);
  const GapPoint3 pta{1, 2, 2};
  require(build_kw3(pa, {pta}).H.gens == std::vector<Int>{29, 36, 44, 221},
          "generators of <29,36,44,221>");
  const auto ra = verify_type3(pa, pta);
  require(ra.applicable && ra.agrees && ra.type == 3, "type-3 prediction");
  require(ra.actual == std::vector<Int>{271, 316, 331},
          "PF of <29,36,44,221>");

  const auto pb = make_kw3_params(9, 11, 2, 1, 3);
  const auto rb = verify_type3(pb, gap_rep(pb, 152));
  require(rb.pz == 237 && rb.pz_in_h && !rb.applicable,
          "pz of <27,33,29,152> must land in the semigroup");
  require(rb.type == 4, "type of <27,33,29,152>");
  require(rb.actual == std::vector<Int>{183, 187, 204, 229},
          "PF of <27,33,29,152>");

  const auto pc = make_kw3_params(5, 7, 2, 1, 3);
  const auto rc = verify_type3(pc, gap_rep(pc, 37));
  require(!rc.applicable && rc.type == 4, "type of <15,21,17,37>");
  require(rc.actual == std::vector<Int>{43, 56, 61, 65},
          "PF of <15,21,17,37>");
  return "<29,36,44,221> is type 3 with PF {271,316,331}; <27,33,29,152> "
         "(pz = 237 is a member) and <15,21,17,37> are type 4";
}

std::string criterion_3d_scans() {
  int scanned = 0;
  int strict = 0;
  for (const auto& params :
       {make_kw3_params(5, 7, 2, 1, 3), make_kw3_params(9, 11, 2, 1, 4)}) {
    for (const auto& pt : enumerate_valid_points(params)) {
      const auto rep = verify_type3(params, pt);
      require(rep.agrees, "type-3 prediction disagreement");
      require(verify_apery_intersection(build_kw3(params, {pt})).ok,
              "Apery intersection mismatch");
      ++scanned;
      if (point_in_strict_box(params, pt)) ++strict;
    }
  }
  require(scanned == 72 && strict == 40, "scan sizes");
  return "type-3 prediction and the Apery characterization hold across all "
         "72 single-point extensions of both parameter sets (40 strict)";
}

std::string criterion_properties() {
  std::mt19937 rng(424242u);
  for (int iter = 0; iter < 50; ++iter) {
    Int p = 0, q = 0;
    do {
      p = 3 + static_cast<Int>(rng() % 48);
      q = p + 1 + static_cast<Int>(rng() % 50);
    } while (std::gcd(p, q) != 1);
    const auto H = build(minimalize({p, q}));
    require(H.frobenius == p * q - p - q, "two-generator Frobenius formula");
    require(static_cast<Int>(gaps(H).size()) == (p - 1) * (q - 1) / 2,
            "symmetric gap count");
    require(static_cast<Int>(apery(H, p).elements.size()) == p,
            "Apery cardinality mod p");
    require(static_cast<Int>(apery(H, q).elements.size()) == q,
            "Apery cardinality mod q");
  }

  for (const auto& params :
       {make_kw3_params(5, 7, 2, 1, 3), make_kw3_params(9, 11, 2, 1, 4),
        make_kw3_params(9, 11, 2, 1, 3)}) {
    const auto base = base_semigroup(params);
    auto cloud = gap_cloud(params);
    require(cloud.size() == gaps(base).size(), "gap cloud size");
    for (const auto& pt : cloud) {
      const Int g = gamma_value(params, pt);
      require(!contains(base, g), "cloud point must map to a gap");
      require(gap_rep(params, g) == pt, "gap representation round-trip");
    }
    std::sort(cloud.begin(), cloud.end());
    require(std::adjacent_find(cloud.begin(), cloud.end()) == cloud.end(),
            "cloud points must be distinct");
  }

  std::vector<std::pair<Int, Int>> pool = {{5, 7}, {5, 9},  {7, 9},  {7, 11},
                                           {8, 9}, {9, 10}, {9, 11}, {11, 13}};
  for (int iter = 0; iter < 100; ++iter) {
    const auto [p, q] = pool[rng() % pool.size()];
    const auto members = enumerate_kw(make_kw_params(p, q));
    const auto H = build_kw(members[rng() % members.size()]);
    const auto rec = recover_generators(principal_matrix_bruteforce(H));
    require(rec.has_value() && *rec == H.gens, "adjugate recovery");
  }
  return "randomized properties hold: 50 coprime pairs (Frobenius, gap "
         "count, Apery sizes), gap bijection for 3 parameter sets, 100 "
         "adjugate recovery round-trips";
}

}  // namespace

int main() {
  criterion(1, 1.0, criterion_analyze_cli);
  criterion(2, 60.0, criterion_closed_form);
  criterion(3, 300.0, criterion_mu_and_type);
  criterion(4, 0.0, criterion_minors);
  criterion(5, 10.0, criterion_resolutions);
  criterion(6, 120.0, criterion_tables);
  criterion(7, 0.0, criterion_3d_examples);
  criterion(8, 300.0, criterion_3d_scans);
  criterion(9, 0.0, criterion_properties);
  if (g_failures != 0) {
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
