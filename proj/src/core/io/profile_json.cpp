#include "profile_json.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "../errors.hpp"

namespace helmscat::io {

using nlohmann::json;

namespace {

double need_number(const json& j, const char* field) {
  if (!j.contains(field))
    throw ParseError(std::string("profile: missing field \"") + field + "\"");
  const auto& v = j.at(field);
  if (!v.is_number())
    throw ParseError(std::string("profile.") + field + ": expected a number");
  return v.get<double>();
}

std::vector<double> need_array(const json& j, const char* field) {
  if (!j.contains(field))
    throw ParseError(std::string("profile: missing field \"") + field + "\"");
  const auto& v = j.at(field);
  if (!v.is_array())
    throw ParseError(std::string("profile.") + field + ": expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      throw ParseError(std::string("profile.") + field + "[" +
                       std::to_string(i) + "]: expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace

Profile profile_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("profile JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("profile JSON: expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("profile.kind: expected a string");
  const std::string kind = j.at("kind").get<std::string>();
  const double tail_tol =
      j.contains("tail_tol") ? need_number(j, "tail_tol") : 1e-12;
  if (!(tail_tol > 0.0)) throw ParseError("profile.tail_tol: must be positive");

  if (kind == "constant") return Profile::constant();
  if (kind == "slab") {
    const double xl = need_number(j, "x_left"), xr = need_number(j, "x_right");
    if (!(xl < xr))
      throw ParseError("profile.x_left: must be smaller than x_right");
    return Profile::slab(need_number(j, "c"), xl, xr, tail_tol);
  }
  if (kind == "bump")
    return Profile::bump(need_number(j, "amplitude"), need_number(j, "center"),
                         need_number(j, "width"), tail_tol);
  if (kind == "piecewise_linear") {
    if (!j.contains("knots") || !j.at("knots").is_array())
      throw ParseError("profile.knots: expected an array of [x, c] pairs");
    std::vector<std::pair<double, double>> knots;
    const auto& arr = j.at("knots");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& kn = arr[i];
      if (!kn.is_array() || kn.size() != 2 || !kn[0].is_number() ||
          !kn[1].is_number())
        throw ParseError("profile.knots[" + std::to_string(i) +
                         "]: expected [x, c]");
      knots.emplace_back(kn[0].get<double>(), kn[1].get<double>());
    }
    return Profile::piecewise_linear(std::move(knots), tail_tol);
  }
  if (kind == "samples")
    return Profile::samples(need_array(j, "xs"), need_array(j, "cs"), tail_tol);
  if (kind == "piecewise_constant")
    return Profile::piecewise_constant(need_array(j, "interfaces"),
                                       need_array(j, "speeds"), tail_tol);
  throw ParseError("profile.kind: unknown kind \"" + kind + "\"");
}

Profile profile_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return profile_from_json(ss.str());
}

std::string profile_to_json(const Profile& p) {
  json j;
  j["tail_tol"] = p.tail_tol();
  switch (p.kind()) {
    case ProfileKind::Constant:
      j["kind"] = "constant";
      break;
    case ProfileKind::Slab:
      j["kind"] = "slab";
      j["c"] = p.layer_speeds()[1];
      j["x_left"] = p.layer_interfaces().front();
      j["x_right"] = p.layer_interfaces().back();
      break;
    case ProfileKind::PiecewiseConstant:
      j["kind"] = "piecewise_constant";
      j["interfaces"] = p.layer_interfaces();
      j["speeds"] = p.layer_speeds();
      break;
    case ProfileKind::Bump:
      j["kind"] = "bump";
      j["amplitude"] = p.bump_amplitude();
      j["center"] = p.bump_center();
      j["width"] = p.bump_width();
      break;
    case ProfileKind::PiecewiseLinear: {
      j["kind"] = "piecewise_linear";
      json arr = json::array();
      for (const auto& kn : p.knots()) arr.push_back({kn.first, kn.second});
      j["knots"] = arr;
      break;
    }
    case ProfileKind::Samples:
      j["kind"] = "samples";
      j["xs"] = p.sample_xs();
      j["cs"] = p.sample_cs();
      break;
  }
  return j.dump(2) + "\n";
}

}  // namespace helmscat::io
