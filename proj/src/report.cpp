#include "nilkur/kuranishi.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace nilkur {

namespace {

using nlohmann::json;

json polys_to_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::vector<Polynomial> polys_from_json(const json& a) {
  std::vector<Polynomial> out;
  for (const auto& s : a) out.push_back(parse_polynomial(s.get<std::string>()));
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string to_json(const KuranishiReport& r, int indent) {
  json j;
  j["name"] = r.name;
  j["input"] = r.input;
  j["structure"] = r.structure;
  j["dim"] = r.dim;
  j["nu"] = r.nu;
  j["hodge_numbers"] = r.hodge_numbers;
  j["theta_dims"] = r.theta_dims;
  j["h1_theta"] = r.theta_dims.size() > 1 ? r.theta_dims[1] : 0;
  j["free_verdict"] = r.free_verdict;
  j["lambda2_singular"] = r.lambda2_singular;
  j["recursion_degree"] = r.recursion_degree;
  j["generators"] = polys_to_json(r.generators);
  j["quadratic_generators"] = polys_to_json(r.quadratic_generators);
  j["max_generator_degree"] = r.max_generator_degree;
  j["cylinder_dim"] = r.cylinder_dim;
  j["central_directions"] = r.central_directions;
  j["smooth"] = r.smooth;
  j["kuranishi_dim"] = r.kuranishi_dim;
  j["mc_residual_zero"] = r.mc_residual_zero;
  j["closedness_notes"] = r.closedness_notes;
  json d = json::array();
  for (const auto& x : r.discrepancies)
    d.push_back({{"tag", x.tag}, {"quantity", x.quantity}, {"computed", x.computed}, {"paper", x.paper}, {"note", x.note}});
  j["discrepancies"] = d;
  return j.dump(indent);
}

KuranishiReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  KuranishiReport r;
  r.name = j.at("name").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.structure = j.at("structure").get<std::string>();
  r.dim = j.at("dim").get<std::size_t>();
  r.nu = j.at("nu").get<std::size_t>();
  r.hodge_numbers = j.at("hodge_numbers").get<std::vector<std::size_t>>();
  r.theta_dims = j.at("theta_dims").get<std::vector<std::size_t>>();
  r.free_verdict = j.at("free_verdict").get<std::string>();
  r.lambda2_singular = j.at("lambda2_singular").get<bool>();
  r.recursion_degree = j.at("recursion_degree").get<unsigned>();
  r.generators = polys_from_json(j.at("generators"));
  r.quadratic_generators = polys_from_json(j.at("quadratic_generators"));
  r.max_generator_degree = j.at("max_generator_degree").get<int>();
  r.cylinder_dim = j.at("cylinder_dim").get<std::size_t>();
  r.central_directions = j.at("central_directions").get<std::size_t>();
  r.smooth = j.at("smooth").get<bool>();
  r.kuranishi_dim = j.at("kuranishi_dim").get<long long>();
  r.mc_residual_zero = j.at("mc_residual_zero").get<bool>();
  r.closedness_notes = j.at("closedness_notes").get<std::vector<std::string>>();
  for (const auto& x : j.at("discrepancies"))
    r.discrepancies.push_back({x.at("tag").get<std::string>(), x.at("quantity").get<std::string>(),
                               x.at("computed").get<long long>(), x.at("paper").get<long long>(),
                               x.at("note").get<std::string>()});
  return r;
}

std::string to_text(const KuranishiReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(20) << key << value << '\n';
  };
  row("algebra", r.name.empty() ? r.input : r.name);
  if (!r.name.empty() && r.input != r.name) row("input", r.input);
  row("structure", r.structure);
  row("dim", std::to_string(r.dim));
  row("nu", std::to_string(r.nu));
  row("h^{0,q}", join(r.hodge_numbers));
  row("h^q(Theta)", join(r.theta_dims));
  row("h1(Theta)", std::to_string(r.theta_dims.size() > 1 ? r.theta_dims[1] : 0));
  row("smooth", r.smooth ? "yes" : "no");
  if (r.kuranishi_dim >= 0) row("dim Kur", std::to_string(r.kuranishi_dim));
  if (!r.free_verdict.empty()) row("free 2-step", r.free_verdict);
  row("lambda2", r.lambda2_singular ? "singular" : "-");
  row("recursion degree", std::to_string(r.recursion_degree));
  row("generators", std::to_string(r.generators.size()) +
                        (r.generators.empty() ? "" : " (max degree " + std::to_string(r.max_generator_degree) + ")"));
  for (const auto& g : r.generators) os << "    " << g.to_string() << '\n';
  if (r.structure == "parallelisable") {
    row("quadratic part", std::to_string(r.quadratic_generators.size()));
    row("d", std::to_string(r.cylinder_dim));
    row("central dirs", std::to_string(r.central_directions));
  }
  row("MC residual", r.mc_residual_zero ? "0" : "nonzero");
  for (const auto& note : r.closedness_notes) os << "note: " << note << '\n';
  for (const auto& d : r.discrepancies)
    os << d.tag << ": " << d.quantity << " computed " << d.computed << ", paper " << d.paper << " (" << d.note
       << ")\n";
  return os.str();
}

}  // namespace nilkur
