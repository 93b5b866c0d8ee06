#include "eigenop/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace eigenop {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

std::string format_number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const TruncatedSeries& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const PhiSpec& phi) {
  Json poly = Json::array();
  for (const auto& c : phi.poly()) poly.push_back(to_json(c));
  return {{"poly", poly}, {"b", to_json(phi.b())}, {"builtin", std::string(to_string(phi.builtin()))}};
}

Json to_json(const EigenOp& op) { return {{"lambda", to_json(op.lambda())}, {"phi", to_json(op.phi())}}; }

Json to_json(const Verdict& v) { return {{"verdict", v.yes}, {"citation", v.citation}, {"note", v.note}}; }

Json to_json(const Classification& c) {
  return {{"hc", to_json(c.hc)}, {"sc", to_json(c.sc)}, {"hc_inf", to_json(c.hc_inf)}, {"sc_inf", to_json(c.sc_inf)}};
}

Json to_json(const OrbitRecord& r) {
  Json seminorms = Json::array();
  for (const auto& s : r.seminorms) seminorms.push_back(s.name());
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"n", e.n},
                       {"scalar", to_json(e.scalar)},
                       {"seminorms", e.seminorm_values},
                       {"seminorms_upper", e.seminorm_upper},
                       {"target_distances", e.target_distances}});
  }
  return {{"op", to_json(r.op)},      {"start", to_json(r.start)},     {"projective", r.projective},
          {"seminorms", seminorms},   {"targets", r.target_ids},       {"entries", entries}};
}

Json to_json(const ConstructionReport& r) {
  Json schedule = Json::array();
  for (const auto& s : r.schedule) {
    schedule.push_back({{"target", s.target_id},
                        {"k", s.k},
                        {"mu", to_json(s.mu)},
                        {"achieved_distance", s.achieved_distance},
                        {"basis_degree", s.basis_degree}});
  }
  return {{"vector", to_json(r.vector)},
          {"schedule", schedule},
          {"tolerance", r.tolerance},
          {"seminorm", r.seminorm.name()}};
}

Json to_json(const LemmaReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"lemma", r.lemma},         {"parameters", params},         {"thresholds", r.thresholds},
          {"sampling", r.sampling},   {"checked", r.checked},         {"violations", r.violations},
          {"worst_margin", r.worst_margin}, {"passed", r.passed()}};
}

Json error_envelope(std::string_view code, int exit_status, const std::string& message) {
  return {{"error", {{"code", std::string(code)}, {"exit_status", exit_status}, {"message", message}}}};
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad("expected a complex number as [re, im] or a real number, got " + j.dump());
}

TruncatedSeries series_from_json(const Json& j) {
  if (j.is_object()) {
    if (j.contains("coeffs")) return series_from_json(j.at("coeffs"));
    if (j.contains("vector")) return series_from_json(j.at("vector"));
    bad("series object needs a \"coeffs\" or \"vector\" field");
  }
  if (!j.is_array() || j.empty()) bad("series must be a nonempty array of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(complex_from_json(x));
  return TruncatedSeries(std::move(c));
}

PhiSpec phi_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poly")) bad("phi must be an object with a \"poly\" field");
  const auto& poly_json = j.at("poly");
  if (!poly_json.is_array()) bad("phi.poly must be an array");
  std::vector<cplx> poly;
  for (const auto& x : poly_json) poly.push_back(complex_from_json(x));
  const cplx b = j.contains("b") ? complex_from_json(j.at("b")) : cplx{};
  Builtin builtin = Builtin::none;
  if (j.contains("builtin")) {
    if (!j.at("builtin").is_string()) bad("phi.builtin must be a string");
    builtin = parse_builtin(j.at("builtin").get<std::string>());
  }
  return PhiSpec(std::move(poly), b, builtin);
}

EigenOp op_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("phi")) {
    bad("operator must be an object with \"lambda\" and \"phi\" fields");
  }
  return EigenOp(complex_from_json(j.at("lambda")), phi_from_json(j.at("phi")));
}

void write_orbit_csv(std::ostream& out, const OrbitRecord& r) {
  out << "n,scalar_re,scalar_im";
  for (const auto& s : r.seminorms) {
    out << ',' << s.name();
    if (s.kind == Seminorm::Kind::sup_disk) out << ',' << s.name() << "_upper";
  }
  for (const auto& id : r.target_ids) out << ",dist_" << id;
  out << '\n';
  for (const auto& e : r.entries) {
    out << e.n << ',' << format_number(e.scalar.real()) << ',' << format_number(e.scalar.imag());
    for (std::size_t i = 0; i < r.seminorms.size(); ++i) {
      out << ',' << format_number(e.seminorm_values[i]);
      if (r.seminorms[i].kind == Seminorm::Kind::sup_disk) out << ',' << format_number(e.seminorm_upper[i]);
    }
    for (double dist : e.target_distances) out << ',' << format_number(dist);
    out << '\n';
  }
}

}  // namespace eigenop
