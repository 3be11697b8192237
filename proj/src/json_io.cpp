#include "rac/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rac {

namespace {

using nlohmann::json;

std::string coord_to_string(const Coord& c) {
  if (c.exact) return to_fraction_string(c.value);
  return to_decimal_string(to_double(c.value));
}

Coord coord_from_string(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw InvalidDrawing("bad coordinate string: " + s);
  bool exact = s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
               s.find('E') == std::string::npos;
  return Coord{*r, exact};
}

json point_to_json(const Point& p) {
  return json{{"x", coord_to_string(p.x)}, {"y", coord_to_string(p.y)}};
}

Point point_from_json(const json& j) {
  return Point{coord_from_string(j.at("x").get<std::string>()),
               coord_from_string(j.at("y").get<std::string>())};
}

}  // namespace

std::string drawing_to_json(const Drawing& d) {
  json j;
  j["bend_limit"] = d.bend_limit;
  if (d.allow_self_loops) j["allow_self_loops"] = true;
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) {
    json jv = point_to_json(v.pos);
    jv["id"] = v.id;
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& e : d.edges) {
    json je;
    je["id"] = e.id;
    je["source"] = e.source;
    je["target"] = e.target;
    je["bends"] = json::array();
    for (const auto& b : e.bends) je["bends"].push_back(point_to_json(b));
    je["auxiliary"] = e.auxiliary;
    j["edges"].push_back(je);
  }
  return j.dump(2);
}

Drawing drawing_from_json(const std::string& text) {
  json j = json::parse(text);
  Drawing d;
  d.bend_limit = j.value("bend_limit", 1);
  d.allow_self_loops = j.value("allow_self_loops", false);
  for (const auto& jv : j.at("vertices")) {
    d.vertices.push_back({jv.at("id").get<std::string>(), point_from_json(jv)});
  }
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.id = je.at("id").get<std::string>();
    e.source = je.at("source").get<std::string>();
    e.target = je.at("target").get<std::string>();
    if (je.contains("bends"))
      for (const auto& jb : je.at("bends")) e.bends.push_back(point_from_json(jb));
    e.auxiliary = je.value("auxiliary", false);
    d.edges.push_back(std::move(e));
  }
  return d;
}

Drawing load_drawing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDrawing("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return drawing_from_json(ss.str());
}

void save_drawing(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidDrawing("cannot write " + path);
  out << drawing_to_json(d) << "\n";
}

}  // namespace rac
