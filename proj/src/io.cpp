#include "flatsurf/io.hpp"

#include <fstream>
#include <sstream>

namespace flatsurf {

namespace {

std::pair<std::string, int> parse_edge_token(const std::string& tok) {
  auto dotpos = tok.rfind('.');
  if (dotpos == std::string::npos)
    throw Error("parse-error", "expected <poly>.<index>, got '" + tok + "'");
  std::string id = tok.substr(0, dotpos);
  int idx;
  try {
    idx = std::stoi(tok.substr(dotpos + 1));
  } catch (const std::exception&) {
    throw Error("parse-error", "bad edge index in '" + tok + "'");
  }
  return {id, idx};
}

}  // namespace

Surface parse_surface(std::istream& in) {
  Surface s;
  struct PendingEdge {
    std::string pa, pb;
    int ea, eb, sign;
  };
  std::vector<PendingEdge> pending;
  std::vector<std::pair<std::string, int>> pending_marks, pending_polemarks;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb)) continue;
    try {
      if (verb == "surface") {
        ls >> s.name;
      } else if (verb == "polygon") {
        Polygon p;
        if (!(ls >> p.id)) throw Error("parse-error", "polygon without id");
        std::string xs, ys;
        while (ls >> xs) {
          if (!(ls >> ys)) throw Error("parse-error", "odd coordinate count in polygon " + p.id);
          p.edges.push_back(Vec{parse_rat(xs), parse_rat(ys)});
        }
        s.polys.push_back(std::move(p));
      } else if (verb == "glue") {
        std::string ta, tb, mode;
        if (!(ls >> ta >> tb >> mode)) throw Error("parse-error", "glue needs two edges and a mode");
        auto [pa, ea] = parse_edge_token(ta);
        auto [pb, eb] = parse_edge_token(tb);
        int sign;
        if (mode == "trans")
          sign = 1;
        else if (mode == "flip")
          sign = -1;
        else
          throw Error("parse-error", "glue mode must be trans or flip, got '" + mode + "'");
        pending.push_back({pa, pb, ea, eb, sign});
      } else if (verb == "mark") {
        std::string t;
        if (!(ls >> t)) throw Error("parse-error", "mark needs a corner");
        pending_marks.push_back(parse_edge_token(t));
      } else if (verb == "polemark") {
        std::string t;
        if (!(ls >> t)) throw Error("parse-error", "polemark needs a corner");
        pending_polemarks.push_back(parse_edge_token(t));
      } else {
        throw Error("parse-error", "unknown directive '" + verb + "'");
      }
    } catch (const std::runtime_error& e) {
      throw Error("parse-error", "line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  auto resolve = [&](const std::string& id, int lineno_hint) {
    int pi = s.poly_index(id);
    if (pi < 0) throw Error("parse-error", "unknown polygon '" + id + "'");
    (void)lineno_hint;
    return pi;
  };
  for (const auto& g : pending)
    s.gluings.push_back(
        Gluing{{resolve(g.pa, 0), g.ea}, {resolve(g.pb, 0), g.eb}, g.sign});
  for (const auto& [id, c] : pending_marks) s.marked.insert({resolve(id, 0), c});
  for (const auto& [id, c] : pending_polemarks) s.pole_marked.insert({resolve(id, 0), c});
  s.assign_fresh_roots();
  return s;
}

Surface parse_surface_string(const std::string& text) {
  std::istringstream in(text);
  return parse_surface(in);
}

Surface load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open " + path);
  return parse_surface(in);
}

std::string serialize_surface(const Surface& s) {
  std::ostringstream os;
  os << "surface " << (s.name.empty() ? "unnamed" : s.name) << "\n";
  for (const auto& p : s.polys) {
    os << "polygon " << p.id;
    for (const auto& e : p.edges)
      os << " " << to_string(e.x) << " " << to_string(e.y);
    os << "\n";
  }
  for (const auto& g : s.gluings) {
    os << "glue " << s.polys[g.a.poly].id << "." << g.a.edge << " "
       << s.polys[g.b.poly].id << "." << g.b.edge << " "
       << (g.sign == 1 ? "trans" : "flip") << "\n";
  }
  for (const auto& m : s.marked)
    os << "mark " << s.polys[m.poly].id << "." << m.corner << "\n";
  for (const auto& m : s.pole_marked)
    os << "polemark " << s.polys[m.poly].id << "." << m.corner << "\n";
  return os.str();
}

void save_surface(const Surface& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io-error", "cannot write " + path);
  out << serialize_surface(s);
}

}  // namespace flatsurf
