#include "kwsgp/cli.hpp"

#include "kwsgp/kw2d.hpp"
#include "kwsgp/kw3d.hpp"
#include "kwsgp/numsgp.hpp"
#include "kwsgp/presentation.hpp"
#include "kwsgp/principal.hpp"
#include "kwsgp/resolution.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace kwsgp {

namespace {

using nlohmann::json;

constexpr Int kDefaultCap = 100000;

struct Options {
  std::string gens;
  std::string kw;
  std::string corners;
  std::string kw3;
  std::string points;
  std::string theorem;
  std::string table_id;
  std::string out_file;
  Int apery_modulus = 0;
  Int cap = 0;  // resolved later: flag > env > default
  bool csv = false;
  bool json_flag = false;
};

std::vector<Int> parse_int_list(const std::string& text, char sep) {
  std::vector<Int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    std::size_t pos = 0;
    const Int v = std::stoll(item, &pos);
    if (pos != item.size()) {
      throw Error(Errc::InvalidSpec, "bad integer '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::InvalidSpec, "empty list");
  return out;
}

std::vector<std::pair<Int, Int>> parse_corners(const std::string& text) {
  std::vector<std::pair<Int, Int>> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto parts = parse_int_list(item, ':');
    if (parts.size() != 2) {
      throw Error(Errc::InvalidSpec, "corner needs x:y, got '" + item + "'");
    }
    out.emplace_back(parts[0], parts[1]);
  }
  return out;
}

std::vector<GapPoint3> parse_points(const std::string& text) {
  std::vector<GapPoint3> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto parts = parse_int_list(item, ':');
    if (parts.size() != 3) {
      throw Error(Errc::InvalidSpec, "point needs x:y:z, got '" + item + "'");
    }
    out.push_back(GapPoint3{parts[0], parts[1], parts[2]});
  }
  return out;
}

Int resolve_cap(const Options& opt) {
  if (opt.cap > 0) return opt.cap;
  if (const char* env = std::getenv("KWSGP_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

json matrix_json(const PrincipalMatrix& P) {
  json entries = json::array();
  json diagonal = json::array();
  for (Int i = 0; i < P.n(); ++i) {
    entries.push_back(P.entries[i]);
    diagonal.push_back(P.entries[i][i]);
  }
  return json{{"diagonal", diagonal},
              {"entries", entries},
              {"generators", P.generator_order}};
}

json binomial_json(const Binomial& b) {
  return json{{"plus", b.plus.e}, {"minus", b.minus.e}};
}

json point_json(const GapPoint3& pt) {
  return json::array({pt.x, pt.y, pt.z});
}

json corners_json(const KWCorners& c) {
  json arr = json::array();
  for (const auto& [x, y] : c.corners) arr.push_back(json::array({x, y}));
  return arr;
}

const char* variant_name(KWVariant v) {
  switch (v) {
    case KWVariant::corner_member: return "corners";
    case KWVariant::half_p: return "half-p";
    case KWVariant::half_q: return "half-q";
  }
  return "?";
}

void emit(const std::string& payload, const Options& opt, std::ostream& out) {
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) {
      throw Error(Errc::InvalidSpec, "cannot open " + opt.out_file);
    }
    f << payload;
    return;
  }
  out << payload;
}

void emit_json(const json& doc, const Options& opt, std::ostream& out) {
  emit(doc.dump(2) + "\n", opt, out);
}

// Deterministic worker-pool map: results come back in input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& xs, F f)
    -> std::vector<decltype(f(xs.front()))> {
  using R = decltype(f(xs.front()));
  std::vector<R> results(xs.size());
  if (xs.empty()) return results;
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            xs.size());
  std::vector<std::future<void>> futs;
  futs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers) {
        results[i] = f(xs[i]);
      }
    }));
  }
  for (auto& fu : futs) fu.get();
  return results;
}

json analyze_semigroup(const NumericalSemigroup& H, Int apery_modulus) {
  json result;
  result["generators"] = H.gens;
  result["frobenius"] = H.frobenius;
  result["multiplicity"] = H.multiplicity;
  result["embdim"] = H.embdim;
  result["gap_count"] = gaps(H).size();
  const auto pf = pseudo_frobenius(H);
  result["pf"] = pf.elements;
  result["type"] = pf.elements.size();
  result["principal_matrix"] = matrix_json(principal_matrix_bruteforce(H));
  const auto betti = betti_elements(H);
  json betti_json = json::array();
  for (const auto& [deg, count] : betti.elements) {
    betti_json.push_back(json::array({deg, count}));
  }
  result["betti"] = betti_json;
  result["mu"] = betti.mu;
  if (apery_modulus > 0) {
    result["apery"] = json{{"modulus", apery_modulus},
                           {"elements", apery(H, apery_modulus).elements}};
  }
  return result;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  json doc;
  doc["schema"] = "kwsgp/1";
  doc["command"] = "analyze";
  json inputs;
  json result;

  if (!opt.gens.empty()) {
    const auto raw = parse_int_list(opt.gens, ',');
    inputs["gens"] = raw;
    const NumericalSemigroup H = build(minimalize(raw));
    result = analyze_semigroup(H, opt.apery_modulus);
  } else if (!opt.kw.empty()) {
    const auto pq = parse_int_list(opt.kw, ',');
    if (pq.size() != 2) throw Error(Errc::InvalidSpec, "--kw needs p,q");
    const KWParams params = make_kw_params(pq[0], pq[1]);
    KWCorners c{params, parse_corners(opt.corners),
                KWVariant::corner_member};
    std::sort(c.corners.begin(), c.corners.end());
    validate_corners(c);
    inputs["kw"] = json{{"p", params.p}, {"q", params.q}};
    inputs["corners"] = corners_json(c);
    const NumericalSemigroup H = build_kw(c);
    result = analyze_semigroup(H, opt.apery_modulus);
    json kw;
    kw["variant"] = variant_name(c.variant);
    if (!c.corners.empty()) {
      const AlphaBeta ab = alpha_beta(c);
      const CaseTag tag = classify_case(ab);
      kw["alpha"] = ab.alphas;
      kw["beta"] = ab.betas;
      kw["case"] = case_tag_name(tag);
      const PrincipalMatrix closed =
          (tag == CaseTag::even_p_exception ||
           tag == CaseTag::even_q_exception)
              ? exceptional_matrix(ab, tag)
              : standard_matrix(ab);
      kw["closed_form"] = matrix_json(closed);
      const auto rec = recover_generators(closed);
      kw["recovered"] = rec ? json(*rec) : json(nullptr);
    }
    result["kw"] = kw;
  } else if (!opt.kw3.empty()) {
    const auto ps = parse_int_list(opt.kw3, ',');
    if (ps.size() != 5) {
      throw Error(Errc::InvalidSpec, "--kw3 needs p,q,r1,r2,s");
    }
    const KW3Params params = make_kw3_params(ps[0], ps[1], ps[2], ps[3],
                                             ps[4]);
    const auto points = parse_points(opt.points);
    inputs["kw3"] = json{{"p", params.p}, {"q", params.q}, {"r1", params.r1},
                         {"r2", params.r2}, {"s", params.s}, {"w", params.w}};
    json pts = json::array();
    for (const auto& pt : points) pts.push_back(point_json(pt));
    inputs["points"] = pts;
    const KW3Semigroup K = build_kw3(params, points);
    result = analyze_semigroup(K.H, opt.apery_modulus);
    json kw3;
    const NumericalSemigroup S = base_semigroup(params);
    kw3["base"] = json{{"generators", S.gens}, {"frobenius", S.frobenius}};
    kw3["adjoined"] = K.hs;
    kw3["strict_class"] = K.strict_class;
    const auto ap = verify_apery_intersection(K);
    kw3["apery_intersection"] = json{{"expected", ap.expected},
                                     {"intersection", ap.intersection},
                                     {"ok", ap.ok}};
    if (points.size() == 1) {
      const Type3Report t3 = verify_type3(params, points.front());
      kw3["type3"] = json{{"agrees", t3.agrees},
                          {"applicable", t3.applicable},
                          {"actual_pf", t3.actual},
                          {"predicted_pf", t3.predicted},
                          {"pz_in_semigroup", t3.pz_in_h},
                          {"strict", t3.strict}};
    }
    result["kw3"] = kw3;
  } else {
    throw Error(Errc::InvalidSpec, "analyze needs --gens, --kw or --kw3");
  }

  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["status"] = "ok";
  emit_json(doc, opt, out);
  return 0;
}

struct MemberOutcome {
  std::string key;
  std::string status;  // pass / fail / not-applicable
  std::string detail;
};

std::string corner_key(const KWCorners& c) {
  if (c.variant != KWVariant::corner_member) return variant_name(c.variant);
  std::string key;
  for (const auto& [x, y] : c.corners) {
    if (!key.empty()) key += ",";
    key += std::to_string(x) + ":" + std::to_string(y);
  }
  return key.empty() ? "<none>" : key;
}

int finish_verify(json& doc, const std::vector<MemberOutcome>& outcomes,
                  const Options& opt, std::ostream& out) {
  Int passed = 0, failed = 0, skipped = 0;
  json members = json::array();
  json first_failure;
  for (const auto& o : outcomes) {
    json m{{"member", o.key}, {"status", o.status}};
    if (!o.detail.empty()) m["detail"] = o.detail;
    members.push_back(m);
    if (o.status == "pass") ++passed;
    else if (o.status == "fail") {
      if (failed == 0) first_failure = m;
      ++failed;
    } else {
      ++skipped;
    }
  }
  doc["result"] = json{{"members", members},
                       {"passed", passed},
                       {"failed", failed},
                       {"not_applicable", skipped}};
  if (failed > 0) doc["result"]["first_failure"] = first_failure;
  doc["status"] = failed == 0 ? "pass" : "fail";
  emit_json(doc, opt, out);
  return failed == 0 ? 0 : 1;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  json doc;
  doc["schema"] = "kwsgp/1";
  doc["command"] = "verify";
  const Int cap = resolve_cap(opt);

  if (!opt.kw.empty()) {
    const auto pq = parse_int_list(opt.kw, ',');
    if (pq.size() != 2) throw Error(Errc::InvalidSpec, "--kw needs p,q");
    const KWParams params = make_kw_params(pq[0], pq[1]);
    if (opt.theorem != "principal" && opt.theorem != "presentation") {
      throw Error(Errc::InvalidSpec,
                  "--theorem must be principal or presentation for --kw");
    }
    doc["inputs"] = json{{"kw", json{{"p", params.p}, {"q", params.q}}},
                         {"theorem", opt.theorem},
                         {"cap", cap}};
    const auto members = enumerate_kw(params);
    if (static_cast<Int>(members.size()) > cap) {
      throw Error(Errc::CapExceeded,
                  "family has " + std::to_string(members.size()) +
                      " members, cap " + std::to_string(cap));
    }
    const bool principal = opt.theorem == "principal";
    const auto outcomes = parallel_map(members, [&](const KWCorners& c) {
      MemberOutcome o;
      o.key = corner_key(c);
      if (c.variant != KWVariant::corner_member || c.corners.empty()) {
        o.status = "not-applicable";
        return o;
      }
      try {
        if (principal) {
          verify_closed_form(c);
        } else {
          const auto rep = verify_presentation(c);
          if (rep.complete_intersection) {
            o.detail = "gluing: mu = n-1 = " + std::to_string(rep.mu) +
                       ", type 1";
          }
        }
        o.status = "pass";
      } catch (const Error& e) {
        o.status = "fail";
        o.detail = e.what();
      }
      return o;
    });
    return finish_verify(doc, outcomes, opt, out);
  }

  if (!opt.kw3.empty()) {
    const auto ps = parse_int_list(opt.kw3, ',');
    if (ps.size() != 5) {
      throw Error(Errc::InvalidSpec, "--kw3 needs p,q,r1,r2,s");
    }
    const KW3Params params = make_kw3_params(ps[0], ps[1], ps[2], ps[3],
                                             ps[4]);
    if (opt.theorem != "type3" && opt.theorem != "apery") {
      throw Error(Errc::InvalidSpec,
                  "--theorem must be type3 or apery for --kw3");
    }
    doc["inputs"] = json{
        {"kw3", json{{"p", params.p}, {"q", params.q}, {"r1", params.r1},
                     {"r2", params.r2}, {"s", params.s}}},
        {"theorem", opt.theorem},
        {"cap", cap}};
    std::vector<GapPoint3> points;
    for (const auto& pt : enumerate_valid_points(params)) {
      if (point_in_strict_box(params, pt)) points.push_back(pt);
    }
    if (static_cast<Int>(points.size()) > cap) {
      throw Error(Errc::CapExceeded,
                  "family has " + std::to_string(points.size()) +
                      " members, cap " + std::to_string(cap));
    }
    const bool type3 = opt.theorem == "type3";
    const auto outcomes = parallel_map(points, [&](const GapPoint3& pt) {
      MemberOutcome o;
      o.key = std::to_string(pt.x) + ":" + std::to_string(pt.y) + ":" +
              std::to_string(pt.z);
      try {
        if (type3) {
          const Type3Report rep = verify_type3(params, pt);
          if (!rep.applicable) {
            o.status = "not-applicable";
            o.detail = "pz in semigroup, actual type " +
                       std::to_string(rep.type);
          } else {
            o.status = rep.agrees ? "pass" : "fail";
            if (!rep.agrees) o.detail = "predicted PF disagrees with oracle";
          }
        } else {
          const auto rep = verify_apery_intersection(build_kw3(params, {pt}));
          o.status = rep.ok ? "pass" : "fail";
          if (!rep.ok) o.detail = "apery intersection mismatch";
        }
      } catch (const Error& e) {
        o.status = "fail";
        o.detail = e.what();
      }
      return o;
    });
    return finish_verify(doc, outcomes, opt, out);
  }

  throw Error(Errc::InvalidSpec, "verify needs --kw or --kw3");
}

int cmd_table(const Options& opt, std::ostream& out) {
  std::ostringstream csv;
  if (opt.table_id == "type-5-7" || opt.table_id == "mu-5-7") {
    const KW3Params params = make_kw3_params(5, 7, 2, 1, 3);
    const auto rows = single_gap_table(params);
    if (opt.table_id == "type-5-7") {
      csv << "h,t\n";
      for (const auto& r : rows) csv << r.h << "," << r.type << "\n";
    } else {
      csv << "h,mu\n";
      for (const auto& r : rows) csv << r.h << "," << r.mu << "\n";
    }
  } else if (opt.table_id == "mu2-5-7") {
    const KW3Params params = make_kw3_params(5, 7, 2, 1, 3);
    // The two-gap table keeps the first adjoined gap fixed at 73.
    const auto rows = two_gap_table(params, gap_rep(params, 73));
    csv << "hprime,mu\n";
    for (const auto& r : rows) csv << r.hprime << "," << r.mu << "\n";
  } else {
    throw Error(Errc::UnknownTable, "unknown table '" + opt.table_id + "'");
  }
  emit(csv.str(), opt, out);
  return 0;
}

std::string render_svg(const KWCorners& c) {
  const PathDescription path = render_path(c);
  const Int cell = 40;
  const Int margin = 30;
  const Int width = path.width * cell + 2 * margin;
  const Int height = path.height * cell + 2 * margin;
  const auto px = [&](Int x) { return margin + x * cell; };
  const auto py = [&](Int y) { return margin + (path.height - y) * cell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << " " << height << "\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
      << height << "\" fill=\"white\"/>\n";
  for (Int x = 0; x <= path.width; ++x) {
    svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(x) << "\" y2=\"" << py(path.height)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  for (Int y = 0; y <= path.height; ++y) {
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(path.width) << "\" y2=\"" << py(y)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  svg << "  <rect x=\"" << px(0) << "\" y=\"" << py(path.height)
      << "\" width=\"" << path.width * cell << "\" height=\""
      << path.height * cell
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"#0057b8\" stroke-width=\"3\" "
         "points=\"";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << px(path.vertices[i].first) << "," << py(path.vertices[i].second);
  }
  svg << "\"/>\n";
  for (const auto& [x, y] : path.corners) {
    svg << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
        << "\" r=\"5\" fill=\"#d62828\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int cmd_render(const Options& opt, std::ostream& out) {
  if (!opt.kw.empty()) {
    const auto pq = parse_int_list(opt.kw, ',');
    if (pq.size() != 2) throw Error(Errc::InvalidSpec, "--kw needs p,q");
    const KWParams params = make_kw_params(pq[0], pq[1]);
    KWCorners c{params, parse_corners(opt.corners),
                KWVariant::corner_member};
    std::sort(c.corners.begin(), c.corners.end());
    validate_corners(c);
    emit(render_svg(c), opt, out);
    return 0;
  }
  if (!opt.kw3.empty()) {
    const auto ps = parse_int_list(opt.kw3, ',');
    if (ps.size() != 5) {
      throw Error(Errc::InvalidSpec, "--kw3 needs p,q,r1,r2,s");
    }
    const KW3Params params = make_kw3_params(ps[0], ps[1], ps[2], ps[3],
                                             ps[4]);
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["command"] = "render";
    doc["inputs"] = json{{"kw3", json{{"p", params.p}, {"q", params.q},
                                      {"r1", params.r1}, {"r2", params.r2},
                                      {"s", params.s}}}};
    json result;
    result["box"] = json::array({params.q, params.p, params.s});
    result["plane"] = json{
        {"coefficients", json::array({params.s * params.p,
                                      params.s * params.q, params.w})},
        {"rhs", frobenius_formula(params)}};
    json cloud = json::array();
    for (const auto& pt : gap_cloud(params)) cloud.push_back(point_json(pt));
    result["gaps"] = cloud;
    const auto points = parse_points(opt.points);
    if (!points.empty()) {
      const KW3Semigroup K = build_kw3(params, points);
      json pts = json::array();
      for (const auto& pt : points) pts.push_back(point_json(pt));
      result["points"] = pts;
      json pf_points = json::array();
      for (Int g : pseudo_frobenius(K.H).elements) {
        const GapPoint3 rep = gap_rep(params, g);
        pf_points.push_back(json{{"point", point_json(rep)}, {"value", g}});
      }
      result["pf_points"] = pf_points;
      const auto ap = verify_apery_intersection(K);
      result["apery_intersection"] = json{{"expected", ap.expected},
                                          {"intersection", ap.intersection},
                                          {"ok", ap.ok}};
    }
    doc["result"] = result;
    doc["status"] = "ok";
    emit_json(doc, opt, out);
    return 0;
  }
  throw Error(Errc::InvalidSpec, "render needs --kw or --kw3");
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const Int cap = resolve_cap(opt);
  if (!opt.kw.empty()) {
    const auto pq = parse_int_list(opt.kw, ',');
    if (pq.size() != 2) throw Error(Errc::InvalidSpec, "--kw needs p,q");
    const KWParams params = make_kw_params(pq[0], pq[1]);
    const auto members = enumerate_kw(params);
    if (static_cast<Int>(members.size()) > cap) {
      throw Error(Errc::CapExceeded,
                  "family has " + std::to_string(members.size()) +
                      " members, cap " + std::to_string(cap));
    }
    if (opt.csv) {
      std::ostringstream csv;
      csv << "corners,gens,embdim,variant\n";
      for (const auto& c : members) {
        const NumericalSemigroup H = build_kw(c);
        std::string cs, gs;
        for (const auto& [x, y] : c.corners) {
          if (!cs.empty()) cs += " ";
          cs += std::to_string(x) + ":" + std::to_string(y);
        }
        for (Int g : H.gens) {
          if (!gs.empty()) gs += " ";
          gs += std::to_string(g);
        }
        csv << cs << "," << gs << "," << H.embdim << ","
            << variant_name(c.variant) << "\n";
      }
      emit(csv.str(), opt, out);
      return 0;
    }
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["command"] = "enumerate";
    doc["inputs"] = json{{"kw", json{{"p", params.p}, {"q", params.q}}},
                         {"cap", cap}};
    json arr = json::array();
    for (const auto& c : members) {
      const NumericalSemigroup H = build_kw(c);
      arr.push_back(json{{"corners", corners_json(c)},
                         {"embdim", H.embdim},
                         {"generators", H.gens},
                         {"variant", variant_name(c.variant)}});
    }
    doc["result"] = json{{"count", members.size()}, {"members", arr}};
    doc["status"] = "ok";
    emit_json(doc, opt, out);
    return 0;
  }
  if (!opt.kw3.empty()) {
    const auto ps = parse_int_list(opt.kw3, ',');
    if (ps.size() != 5) {
      throw Error(Errc::InvalidSpec, "--kw3 needs p,q,r1,r2,s");
    }
    const KW3Params params = make_kw3_params(ps[0], ps[1], ps[2], ps[3],
                                             ps[4]);
    const auto points = enumerate_valid_points(params);
    if (static_cast<Int>(points.size()) > cap) {
      throw Error(Errc::CapExceeded,
                  "family has " + std::to_string(points.size()) +
                      " members, cap " + std::to_string(cap));
    }
    if (opt.csv) {
      std::ostringstream csv;
      csv << "x,y,z,h,strict\n";
      for (const auto& pt : points) {
        csv << pt.x << "," << pt.y << "," << pt.z << ","
            << gamma_value(params, pt) << ","
            << (point_in_strict_box(params, pt) ? 1 : 0) << "\n";
      }
      emit(csv.str(), opt, out);
      return 0;
    }
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["command"] = "enumerate";
    doc["inputs"] = json{
        {"kw3", json{{"p", params.p}, {"q", params.q}, {"r1", params.r1},
                     {"r2", params.r2}, {"s", params.s}}},
        {"cap", cap}};
    json arr = json::array();
    for (const auto& pt : points) {
      arr.push_back(json{{"point", point_json(pt)},
                         {"value", gamma_value(params, pt)},
                         {"strict", point_in_strict_box(params, pt)}});
    }
    doc["result"] = json{{"count", points.size()}, {"members", arr}};
    doc["status"] = "ok";
    emit_json(doc, opt, out);
    return 0;
  }
  throw Error(Errc::InvalidSpec, "enumerate needs --kw or --kw3");
}

void attach_common(CLI::App* sub, Options& opt) {
  sub->add_option("--gens", opt.gens, "comma-separated generators");
  sub->add_option("--kw", opt.kw, "p,q");
  sub->add_option("--corners", opt.corners, "x:y,... corner list");
  sub->add_option("--kw3", opt.kw3, "p,q,r1,r2,s");
  sub->add_option("--points", opt.points, "x:y:z,... lattice points");
  sub->add_flag("--json", opt.json_flag, "JSON output (default)");
  sub->add_flag("--csv", opt.csv, "CSV output where supported");
  sub->add_option("--out", opt.out_file, "write output to a file");
  sub->add_option("--cap", opt.cap,
                  "enumeration cap (overrides KWSGP_CAP, default 100000)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"exact arithmetic for gap-adjoined numerical semigroups"};
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one semigroup");
  attach_common(analyze, opt);
  analyze->add_option("--apery", opt.apery_modulus,
                      "include the Apery set for this modulus");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive family checks");
  attach_common(verify, opt);
  verify->add_option("--theorem", opt.theorem,
                     "principal | presentation | type3 | apery")
      ->required();

  CLI::App* table = app.add_subcommand("table", "reference tables as CSV");
  attach_common(table, opt);
  table->add_option("id", opt.table_id, "type-5-7 | mu-5-7 | mu2-5-7")
      ->required();

  CLI::App* render = app.add_subcommand("render", "SVG path or 3D point data");
  attach_common(render, opt);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list family members");
  attach_common(enumerate, opt);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["error"] = json{{"code", "InvalidSpec"}, {"message", e.what()}};
    err << doc.dump(2) << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (table->parsed()) return cmd_table(opt, out);
    if (render->parsed()) return cmd_render(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    throw Error(Errc::InvalidSpec, "no subcommand");
  } catch (const Error& e) {
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
    err << doc.dump(2) << "\n";
    return e.code() == Errc::TheoremViolation ? 1 : 2;
  } catch (const std::exception& e) {
    json doc;
    doc["schema"] = "kwsgp/1";
    doc["error"] = json{{"code", "InvalidSpec"}, {"message", e.what()}};
    err << doc.dump(2) << "\n";
    return 2;
  }
}

}  // namespace kwsgp
