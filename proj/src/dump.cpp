#include "ndiag/dump.hpp"

#include <algorithm>
#include <sstream>

#include "ndiag/errors.hpp"

namespace ndiag {

Json to_json(const ExponentVector& alpha) {
  Json out = Json::array();
  for (int v : alpha) out.push_back(v);
  return out;
}

Json to_json(const NodeRecord& node) {
  return Json{{"alpha", to_json(node.position)},
              {"kind", to_string(node.kind)},
              {"geometry", to_string(node.geometry)}};
}

Json diagram_json(const NewtonDiagram& d) {
  Json points = Json::array();
  for (const auto& [alpha, s] : d.support())
    points.push_back(Json{{"alpha", to_json(alpha)}, {"sign", std::string(1, sign_char(s))}});
  Json node_list = Json::array();
  for (const auto& node : nodes(d)) node_list.push_back(to_json(node));
  return Json{{"dimension", d.dimension()},
              {"points", std::move(points)},
              {"size", d.size()},
              {"nodes", std::move(node_list)}};
}

NewtonDiagram diagram_from_json(const Json& j) {
  try {
    int n = j.at("dimension").get<int>();
    NewtonDiagram::SupportMap support;
    for (const auto& pt : j.at("points")) {
      ExponentVector alpha(pt.at("alpha").get<std::vector<int>>());
      std::string s = pt.at("sign").get<std::string>();
      if (s != "P" && s != "N") throw InputError("point sign must be \"P\" or \"N\"");
      support[alpha] = s == "P" ? Sign::P : Sign::N;
    }
    return NewtonDiagram(n, std::move(support));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what());
  }
}

namespace {

void render_row(std::ostringstream& out, const NewtonDiagram& d, ExponentVector alpha, int axis,
                int count) {
  for (int p = 0; p < count; ++p) {
    if (p) out << ' ';
    alpha[axis] = p;
    out << sign_char(d.at(alpha));
  }
}

}  // namespace

std::string render_ascii(const NewtonDiagram& d) {
  std::ostringstream out;
  const int n = d.dimension();
  if (d.empty()) return "(empty)\n";
  const int top = d.top_degree();
  if (n == 1) {
    out << "x1: ";
    render_row(out, d, ExponentVector(1), 0, top + 1);
    out << '\n';
    return out.str();
  }
  for (int r = top; r >= 0; --r) {
    if (n == 2) {
      out << r << " | ";
      for (int p = 0; p <= r; ++p) {
        if (p) out << ' ';
        out << sign_char(d.at(ExponentVector{p, r - p}));
      }
      out << '\n';
    } else if (n == 3) {
      out << "degree " << r << ":\n";
      for (int c = r; c >= 0; --c) {
        out << "  x3=" << c << " | ";
        for (int b = 0; b <= r - c; ++b) {
          if (b) out << ' ';
          out << sign_char(d.at(ExponentVector{r - c - b, b, c}));
        }
        out << '\n';
      }
    } else {
      out << "degree " << r << ":";
      for (const auto& [alpha, s] : d.support())
        if (alpha.total() == r) out << ' ' << sign_char(s) << alpha.to_string();
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace ndiag
