#include "qforge/report.hpp"

#include <algorithm>
#include <sstream>

#include "qforge/dsl.hpp"
#include "qforge/error.hpp"
#include "qforge/extensions.hpp"

namespace qforge {

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

Json to_json(const FiniteAlgebra& a) {
  Json constants = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Json terms = Json::array();
      for (const auto& [k, c] : a.product(i, j)) terms.push_back({k, c.to_string()});
      constants.push_back({i, j, terms});
    }
  Json out = {{"dim", a.dim()},
              {"basis", a.labels()},
              {"parity", a.parity()},
              {"unit", to_json(a.unit())},
              {"structure_constants", constants}};
  if (a.degrees()) out["degrees"] = *a.degrees();
  return out;
}

namespace {

Json tensors(const std::vector<Tensor>& ts, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const Tensor& t : ts) out.push_back(t.to_string(names));
  return out;
}

Json presentation_json(const QuadraticPresentation& p) {
  return {{"generators", p.generators()}, {"relations", tensors(p.relations().basis(), p.generators())}};
}

Json valued_relations(const std::vector<Tensor>& rels, const Vec& values, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rels.size(); ++i)
    out.push_back({{"relation", rels[i].to_string(names)}, {"value", values.at(i).to_string()}});
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json certificate_json(const IsoCertificate& c) {
  return {{"unital", c.unital},
          {"multiplicative", c.multiplicative},
          {"bijective", c.bijective},
          {"pairs_checked", c.pairs_checked},
          {"valid", c.valid()}};
}

Json elements(const FiniteAlgebra& a, const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const Vec& v : vs) out.push_back(a.format_element(v));
  return out;
}

struct Theta {
  std::string name;
  Vec listed;
  Vec echelon;
};

Theta resolve_theta(const PresentationFile& f, const QuadraticPresentation& p, const CommandOptions& o) {
  if (!o.theta) fail(ErrorCode::UsageError, "--theta NAME is required for " + o.command);
  Theta t{*o.theta, {}, {}};
  bool defined = false;
  for (const auto& [n, v] : f.clifford) defined = defined || n == *o.theta;
  t.listed = (!defined && *o.theta == "zero") ? Vec(f.relations.size()) : f.clifford_values(*o.theta);
  t.echelon = theta_from_listed(p, f.relations, t.listed);
  return t;
}

Json theta_json(const Theta& t, const PresentationFile& f, const QuadraticPresentation& p) {
  return {{"name", t.name},
          {"listed", valued_relations(f.relations, t.listed, f.generators)},
          {"echelon", valued_relations(p.relations().basis(), t.echelon, p.generators())}};
}

HypersurfaceInput hypersurface(const PresentationFile& f, const CommandOptions& o) {
  if (!o.central) fail(ErrorCode::UsageError, "--central NAME is required for " + o.command);
  return HypersurfaceInput{f.presentation(), f.central_element(*o.central), f.asserts(std::string(kFlagKoszul)),
                           f.asserts(std::string(kFlagAsRegular)), f.asserts(std::string(kFlagGldim))};
}

Json deformation_summary(const Deformation& d) {
  Z2Split split = z2_components(d.algebra);
  return {{"dim", d.algebra.dim()},
          {"even_dim", split.even},
          {"odd_dim", split.odd},
          {"graded_dims", d.graded_dims},
          {"top_degree", d.top_degree}};
}

Json pbw_json(const PbwReport& r) {
  return {{"top_degree", r.top_degree},
          {"expected", r.expected},
          {"dim_at_n_plus_1", r.at_n1},
          {"dim_at_n_plus_2", r.at_n2},
          {"pass", r.pass()}};
}

// check: how far to look for a vanishing degree unless --max-degree says otherwise.
constexpr std::size_t kDefaultDegreeSearch = 8;

std::size_t series_degree(const CommandOptions& o, std::size_t fallback) { return o.max_degree.value_or(fallback); }

Json run(const CommandOptions& o, const PresentationFile& f, Json& hyp, Json& context, bool& ok) {
  const QuadraticPresentation p = f.presentation();
  const auto& names = p.generators();
  const Limits& lim = o.limits;
  const std::string& cmd = o.command;

  if (cmd == "check") {
    Json r = {{"name", f.name},
              {"listed_relations", tensors(f.relations, names)},
              {"echelon_relations", tensors(p.relations().basis(), names)},
              {"relation_dim", p.relations().dim()},
              {"hilbert_series", hilbert_series(p, series_degree(o, 4), lim)}};
    Limits search = lim;
    if (!search.degree_cap) search.degree_cap = kDefaultDegreeSearch;
    try {
      r["top_degree"] = top_degree(p, search);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFiniteDimensional) throw;
      r["top_degree"] = nullptr;
      r["nonvanishing_through_degree"] = *search.degree_cap + 1;
    }
    Json cl = Json::array();
    for (const auto& [n, v] : f.clifford)
      cl.push_back({{"name", n}, {"clifford", clifford_condition(p, theta_from_listed(p, f.relations, v)).holds}});
    r["clifford"] = cl;
    Json ce = Json::array();
    SliceTower tower(p, 3, lim);
    for (const auto& [n, z] : f.central) {
      Vec zc = tower.reduce(z);
      ce.push_back({{"name", n},
                    {"element", z.to_string(names)},
                    {"nonzero", !is_zero(zc)},
                    {"central", !is_zero(zc) && is_central_degree2(tower, zc)}});
    }
    r["central"] = ce;
    r["round_trip"] = print_presentation(parse_presentation(print_presentation(f))) == print_presentation(f);
    return r;
  }
  if (cmd == "hilbert") {
    if (!o.maxdeg) fail(ErrorCode::UsageError, "--maxdeg N is required for hilbert");
    return {{"maxdeg", *o.maxdeg}, {"series", hilbert_series(p, *o.maxdeg, lim)}};
  }
  if (cmd == "dual") {
    QuadraticPresentation d = quadratic_dual(p);
    return {{"dual", presentation_json(d)},
            {"file", print_presentation(to_file(d, f.name + "_dual"))},
            {"hilbert_series", hilbert_series(d, series_degree(o, 4), lim)}};
  }
  if (cmd == "overlap") {
    Subspace ov = overlap_space(p);
    return {{"dim", ov.dim()}, {"basis", tensors(ov.basis(), names)}};
  }
  if (cmd == "clifford-space") {
    auto space = clifford_map_space(p);
    Json basis = Json::array();
    for (const Vec& th : space)
      basis.push_back({{"echelon", to_json(th)}, {"listed", to_json(theta_on_listed(p, f.relations, th))}});
    return {{"dim", space.size()},
            {"echelon_relations", tensors(p.relations().basis(), names)},
            {"listed_relations", tensors(f.relations, names)},
            {"basis", basis}};
  }
  if (cmd == "center") {
    if (o.degree != 2) fail(ErrorCode::UsageError, "only --degree 2 is supported");
    SliceTower tower(p, 2, lim);
    Json basis = Json::array();
    for (const Vec& v : central_degree2(p, lim)) basis.push_back(tower.lift(v, 2).to_string(names));
    return {{"degree", 2}, {"dim", basis.size()}, {"basis", basis}};
  }
  if (cmd == "theta-from-central") {
    HypersurfaceInput h = hypersurface(f, o);
    CliffordMap th = theta_from_central(h, lim);
    const auto& e = th.presentation();
    hyp["verified"] = {{"central", true}, {"nonzero", true}};
    return {{"central", {{"name", *o.central}, {"element", h.z.to_string(names)}}},
            {"lift", canonical_lift(p, h.z, lim).to_string(names)},
            {"dual", presentation_json(e)},
            {"theta", valued_relations(e.relations().basis(), th.values(), e.generators())},
            {"clifford", clifford_condition(e, th.values()).holds}};
  }
  if (cmd == "deform" || cmd == "frobenius" || cmd == "semisimple" || cmd == "even-part") {
    Theta t = resolve_theta(f, p, o);
    Json r = {{"theta", theta_json(t, f, p)}};
    const bool skip = cmd == "deform" && o.skip_clifford_check;
    if (!skip) CliffordMap(p, t.echelon);  // NotClifford
    PbwReport pbw = pbw_check(p, t.echelon, lim);
    if (cmd == "deform") r["pbw"] = pbw_json(pbw);
    if (!pbw.pass())
      fail(ErrorCode::PBWFailure, "truncated quotient dimensions " + std::to_string(pbw.at_n1) + ", " +
                                      std::to_string(pbw.at_n2) + " differ from dim E = " +
                                      std::to_string(pbw.expected));
    Deformation d = skip ? build_deformation_unchecked(p, t.echelon, lim) : build_deformation(CliffordMap(p, t.echelon), lim);
    r["deformation"] = deformation_summary(d);
    if (cmd == "deform") {
      r["algebra"] = to_json(d.algebra);
      r["even_part"] = to_json(even_part_algebra(d.algebra));
      r["checks"] = {{"associative", d.algebra.is_associative()},
                     {"unital", d.algebra.is_unital()},
                     {"parity_homogeneous", d.algebra.is_parity_homogeneous()}};
      ok = r["checks"]["associative"] && r["checks"]["unital"] && r["checks"]["parity_homogeneous"];
    } else if (cmd == "frobenius") {
      BilinearForm form = frobenius_form(d);
      r["form"] = {{"basis", d.algebra.labels()},
                   {"gram", matrix_json(form.gram)},
                   {"parity", form.parity},
                   {"rank", form.rank},
                   {"top_word", form.top_word.to_string(names)}};
    } else if (cmd == "semisimple") {
      RadicalReport rad = jacobson_radical(d.algebra);
      r["radical"] = {{"dim", rad.dim},
                      {"basis", elements(d.algebra, rad.basis)},
                      {"ideal", rad.ideal},
                      {"nilpotent", rad.nilpotent},
                      {"nilpotency_index", rad.nilpotency_index},
                      {"homogeneous", rad.homogeneous}};
      r["graded_semisimple"] = graded_semisimple(d.algebra);
      r["strongly_graded"] = strong_grading_check(d.algebra);
      ok = rad.ideal && rad.nilpotent;
    } else {
      FiniteAlgebra even = even_part_algebra(d.algebra);
      r["even_part"] = to_json(even);
      r["semisimple"] = graded_semisimple(even);
      ok = even.is_associative() && even.is_unital();
      r["checks"] = {{"associative", even.is_associative()}, {"unital", even.is_unital()}};
    }
    return r;
  }
  if (cmd == "verdict") {
    HypersurfaceInput h = hypersurface(f, o);
    Json r;
    context = {{"clifford_space_dim", clifford_map_space(p).size()},
                    {"dual_clifford_space_dim", clifford_map_space(quadratic_dual(p)).size()}};
    SingularityVerdict v = singularity_verdict(h, lim);
    const auto e = quadratic_dual(p);
    r["central"] = {{"name", *o.central}, {"element", h.z.to_string(names)}};
    r["theta"] = valued_relations(e.relations().basis(), v.theta, e.generators());
    r["semisimple"] = v.semisimple;
    r["radical_dim"] = v.radical_dim;
    r["conclusion"] = v.conclusion();
    r["isolated_singularity"] = v.isolated();
    hyp["verified"] = {{"central", v.central_verified},
                       {"koszul_numeric", {{"pass", v.koszul_numeric}, {"degree", v.koszul_degree}}},
                       {"regular", {{"pass", v.regular_upto_bound}, {"bound", v.regularity_bound}}}};
    return r;
  }
  if (cmd == "corner-crosscheck") {
    if (!o.central) fail(ErrorCode::UsageError, "--central NAME is required for corner-crosscheck");
    Json r;
    CornerCrosscheck cc;
    if (o.direct) {
      Tensor w = f.central_element(*o.central);
      r["route"] = "direct";
      r["B"] = presentation_json(p);
      r["w"] = w.to_string(names);
      cc = localization_corner_crosscheck(p, w, lim);
    } else {
      HypersurfaceDualData data = hypersurface_dual_data(hypersurface(f, o), lim);
      r["route"] = "hypersurface dual";
      r["B"] = presentation_json(data.a_dual);
      r["w"] = data.w_lift.to_string(data.a_dual.generators());
      cc = localization_corner_crosscheck(data.a_dual, data.w_lift, lim);
    }
    r["m"] = cc.m;
    r["top_degree"] = cc.top_degree;
    r["dim"] = cc.dim;
    r["theta"] = to_json(cc.theta);
    r["certificate"] = certificate_json(cc.certificate);
    ok = cc.pass();
    return r;
  }
  if (cmd == "ext") {
    if (o.times != 1 && o.times != 2) fail(ErrorCode::UsageError, "--times must be 1 or 2");
    Json r;
    r["times"] = o.times;
    if (o.central) {
      DoubleCover dc = double_branched_cover_dual(hypersurface(f, o), o.times, lim);
      const auto& cp = dc.cover.ambient;
      r["cover"] = {{"ambient", presentation_json(cp)}, {"central", dc.cover.z.to_string(cp.generators())}};
      r["theta_cover"] = to_json(dc.theta_cover.values());
      r["theta_extended"] = to_json(dc.theta_extended.values());
      r["relations_agree"] = dc.relations_agree;
      r["theta_agree"] = dc.theta_agree;
      ok = dc.theta_agree;
      return r;
    }
    Theta t = resolve_theta(f, p, o);
    r["theta"] = theta_json(t, f, p);
    Json steps = Json::array();
    CliffordMap current(p, t.echelon);
    ok = true;
    for (int step = 0; step < o.times; ++step) {
      TildeIso iso = tilde_iso_check(current, lim);
      CliffordMap next = extend_clifford_map(current);
      const auto& ep = next.presentation();
      steps.push_back({{"presentation", presentation_json(ep)},
                       {"theta", valued_relations(ep.relations().basis(), next.values(), ep.generators())},
                       {"clifford", clifford_condition(ep, next.values()).holds},
                       {"hilbert_series", hilbert_series(ep, top_degree(ep, lim) + 1, lim)},
                       {"dims", {{"extended", iso.extended.algebra.dim()}, {"base", iso.base.algebra.dim()}}},
                       {"certificate", certificate_json(iso.certificate)}});
      ok = ok && iso.certificate.valid();
      current = next;
    }
    r["steps"] = steps;
    return r;
  }
  if (cmd == "knorrer") {
    Theta t = resolve_theta(f, p, o);
    KnorrerWitness w = knorrer_corner_witness(CliffordMap(p, t.echelon), lim);
    Json r = {{"theta", theta_json(t, f, p)},
              {"base_dim", w.base_dim},
              {"ambient_dim", w.ambient_dim},
              {"corner_dim", w.corner_dim},
              {"chi", certificate_json(w.chi)},
              {"idempotent", {{"coordinates", to_json(w.idempotent)},
                              {"even", w.idempotent_even},
                              {"proper_idempotent", w.idempotent_ok}}},
              {"corner", certificate_json(w.corner)},
              {"full", w.full},
              {"pass", w.pass()}};
    ok = w.pass();
    return r;
  }
  if (cmd == "transfer") {
    Theta t = resolve_theta(f, p, o);
    SemisimpleTransfer tr = knorrer_semisimple_transfer(CliffordMap(p, t.echelon), lim);
    Json r = {{"theta", theta_json(t, f, p)},
              {"in_hypothesis", tr.in_hypothesis},
              {"base_semisimple", tr.base_semisimple},
              {"extended_semisimple", tr.extended_semisimple},
              {"agree", tr.agree()},
              {"pass", tr.pass()}};
    if (!tr.in_hypothesis) r["gate"] = tr.gate_reason;
    ok = tr.pass();
    return r;
  }
  fail(ErrorCode::UsageError, "unknown command '" + cmd + "'");
}

// Arrays nested only from primitives print on one line.
bool is_inline(const Json& v) {
  return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), is_inline));
}

std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + inline_value(v[i]);
  return s + "]";
}

void render_text(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!is_inline(v)) {
        out << pad << k << ":\n";
        render_text(out, v, indent + 1);
        continue;
      }
      const std::string s = inline_value(v);
      if (s.find('\n') == std::string::npos) {
        out << pad << k << ": " << s << "\n";
        continue;
      }
      out << pad << k << ":\n";
      std::istringstream lines(s);
      for (std::string line; std::getline(lines, line);) out << pad << "  " << line << "\n";
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_inline(v)) {
        out << pad << "- " << inline_value(v) << "\n";
      } else {
        out << pad << "-\n";
        render_text(out, v, indent + 1);
      }
    }
  } else {
    out << pad << inline_value(j) << "\n";
  }
}

}  // namespace

Json run_command(const CommandOptions& options) {
  Json report = {{"command", options.command}, {"file", options.file_name}};
  Json context = Json::object();
  try {
    PresentationFile f = parse_presentation(options.file_text);
    report["conventions"] = {{"generators", f.generators},
                             {"word_order", "deglex"},
                             {"pivot", "largest word"},
                             {"field", std::string(field_name(f.field))},
                             {"theta_coordinates", "echelon basis of the relation space; listed values echo the file"}};
    Json hyp = {{"asserted", f.assertions}};
    bool ok = true;
    report["result"] = run(options, f, hyp, context, ok);
    report["hypotheses"] = hyp;
    report["status"] = ok ? "ok" : "failed";
  } catch (const Error& e) {
    Json err = error_report(options.command, e.code(), e.what());
    report["status"] = err["status"];
    report["error"] = err["error"];
  }
  if (!context.empty()) report["context"] = context;
  return report;
}

Json error_report(const std::string& command, ErrorCode code, const std::string& message) {
  return {{"command", command},
          {"status", "error"},
          {"error",
           {{"code", std::string(error_code_name(code))},
            {"kind", is_input_error(code) ? "input" : "mathematical"},
            {"message", message}}}};
}

int exit_code(const Json& report) {
  const std::string status = report.value("status", "error");
  if (status == "ok") return 0;
  if (status == "failed") return 1;
  return report["error"].value("kind", "input") == "input" ? 2 : 1;
}

std::string emit_report(const Json& report, bool as_json) {
  if (as_json) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(out, report, 0);
  return out.str();
}

}  // namespace qforge
