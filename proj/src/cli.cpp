#include "ndiag/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ndiag/crmap.hpp"
#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"
#include "ndiag/faces2d.hpp"
#include "ndiag/oracle.hpp"
#include "ndiag/symmetric.hpp"
#include "ndiag/whitney.hpp"

namespace ndiag::cli {

namespace {

Json rational_json(const Rational& r) {
  if (r.is_integer()) return std::stol(r.to_string());
  return r.to_string();
}

Json node_counts_json(const FaceNodeCount& c) {
  return Json{{"facial", c.facial}, {"edge", c.edge}, {"corner", c.corner}, {"height", c.height},
              {"weighted", c.weighted()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Polynomial files may carry '#' comments and span lines.
std::string strip_comments(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out += line + ' ';
  }
  return out;
}

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json verdicts = Json::object();
  Json data = Json::object();
  Json fixtures = Json::array();

  Json to_json(std::optional<double> millis) const {
    Json j{{"schema", 1}, {"command", command}, {"inputs", inputs}, {"verdicts", verdicts},
           {"data", data}, {"fixtures", fixtures}};
    if (millis) j["timings"] = Json{{"total_ms", *millis}};
    return j;
  }
};

// Shared polynomial input: positional text or --file, plus --dim.
struct PolyInput {
  std::string text;
  std::string file;
  int dim = 0;
  bool is_quotient = false;

  void attach(CLI::App* sub, bool quotient_flag) {
    sub->add_option("polynomial", text, "polynomial text, e.g. \"x^3+3*x*y+y^3\"");
    sub->add_option("--file", file, "read the polynomial from a file");
    sub->add_option("--dim", dim, "number of variables n")->required();
    if (quotient_flag) sub->add_flag("--is-quotient", is_quotient, "the input is q itself, not p");
  }

  Polynomial read(Report& report) const {
    if (text.empty() == file.empty()) throw InputError("give exactly one of a polynomial or --file");
    std::string source = text;
    if (!file.empty()) {
      source = strip_comments(read_file(file));
      report.fixtures.push_back(file);
      report.inputs["file"] = file;
    } else {
      report.inputs["polynomial"] = text;
    }
    report.inputs["dim"] = dim;
    return parse_polynomial(source, dim);
  }

  NewtonDiagram diagram(Report& report, std::ostream& out, bool human) const {
    Polynomial p = read(report);
    report.inputs["is_quotient"] = is_quotient;
    Polynomial q = is_quotient ? p : hyperplane_quotient(p);
    if (!is_quotient && human) out << "q = " << q.to_string() << '\n';
    report.data["quotient"] = q.to_string();
    return NewtonDiagram::from_quotient(q);
  }
};

void print_nodes(std::ostream& out, const NewtonDiagram& d) {
  for (const auto& node : nodes(d))
    out << "  " << node.position.to_string() << ' ' << to_string(node.kind) << ' '
        << to_string(node.geometry) << '\n';
}

Json bound_json(const DegreeBoundReport& r) {
  return Json{{"n", r.n}, {"d", r.d}, {"N", r.terms}, {"bound", rational_json(r.bound)}, {"tight", r.tight}};
}

// ---------------------------------------------------------------------------

struct Command {
  CLI::App* app = nullptr;
  std::function<int(Report&, std::ostream&, bool human)> run;
};

Command make_check(CLI::App& root, PolyInput& in) {
  Command c;
  c.app = root.add_subcommand("check", "membership in H, quotient and degree bound");
  in.attach(c.app, false);
  c.run = [&in](Report& report, std::ostream& out, bool human) {
    Polynomial p = in.read(report);
    auto membership = is_in_H(p);
    report.data["polynomial"] = p.to_string();
    report.verdicts["in_H"] = membership.member;
    if (human) out << "p = " << p.to_string() << "\nin H: " << (membership.member ? "true" : "false") << '\n';
    if (membership.negative_term) {
      const auto& [alpha, c] = *membership.negative_term;
      report.data["negative_term"] = Json{{"alpha", to_json(alpha)}, {"coefficient", rational_json(c)}};
      if (human) out << "  negative coefficient " << c << " at " << alpha.to_string() << '\n';
    }
    if (membership.off_hyperplane_witness) {
      Json pt = Json::array();
      std::string text;
      for (const auto& v : *membership.off_hyperplane_witness) {
        pt.push_back(rational_json(v));
        text += (text.empty() ? "" : ",") + v.to_string();
      }
      Rational value = p.evaluate(*membership.off_hyperplane_witness);
      report.data["witness"] = Json{{"point", pt}, {"value", rational_json(value)}};
      if (human) out << "  p(" << text << ") = " << value << " on the hyperplane\n";
    }
    if (!membership.member) return kInputError;

    Polynomial q = hyperplane_quotient(p);
    report.data["quotient"] = q.to_string();
    if (human) out << "q = " << q.to_string() << '\n';
    if (p.dimension() >= 2 && p.degree().value_or(0) >= 1) {
      auto bound = check_degree_bound(p);
      bool sharp = is_sharp_whitney(p);
      report.data["bound"] = bound_json(bound);
      report.verdicts["bound_holds"] = true;
      report.verdicts["tight"] = bound.tight;
      report.verdicts["sharp_whitney"] = sharp;
      if (human)
        out << "n=" << bound.n << " d=" << bound.d << " N=" << bound.terms << " bound=" << bound.bound
            << " tight=" << (bound.tight ? "true" : "false") << "\nsharp Whitney: " << (sharp ? "true" : "false")
            << '\n';
    } else if (human) {
      out << "degree bound: not applicable (needs n >= 2 and nonconstant p)\n";
    }
    return kOk;
  };
  return c;
}

Command make_quotient(CLI::App& root, PolyInput& in) {
  Command c;
  c.app = root.add_subcommand("quotient", "divide p - 1 by s - 1");
  in.attach(c.app, false);
  c.run = [&in](Report& report, std::ostream& out, bool human) {
    Polynomial p = in.read(report);
    auto division = divide_by_hyperplane(p);
    report.data["quotient"] = division.quotient.to_string();
    report.data["remainder"] = division.remainder.to_string();
    report.verdicts["divisible"] = division.remainder.is_zero();
    if (human) out << "q = " << division.quotient.to_string() << "\nr = " << division.remainder.to_string() << '\n';
    return kOk;
  };
  return c;
}

Command make_diagram(CLI::App& root, PolyInput& in) {
  Command c;
  c.app = root.add_subcommand("diagram", "Newton diagram of q, its nodes and an ASCII grid");
  in.attach(c.app, true);
  c.run = [&in](Report& report, std::ostream& out, bool human) {
    NewtonDiagram d = in.diagram(report, out, human);
    bool structure = check_sink_source_structure(d);
    report.data["diagram"] = diagram_json(d);
    report.data["node_count"] = node_count(d);
    report.verdicts["unique_source_at_origin"] = structure;
    if (human) {
      out << render_ascii(d) << "size " << d.size() << ", #(D) = " << node_count(d) << '\n';
      print_nodes(out, d);
      out << "unique source at origin: " << (structure ? "true" : "false") << '\n';
    }
    return kOk;
  };
  return c;
}

struct ViewArgs {
  int from = 0;
  int to = 0;
  int size = -1;
};

Command make_view(CLI::App& root, PolyInput& in, ViewArgs& args) {
  Command c;
  c.app = root.add_subcommand("view", "view V(D,k,m) along an edge");
  in.attach(c.app, true);
  c.app->add_option("--from", args.from, "axis k (1-based)")->required();
  c.app->add_option("--to", args.to, "axis m (1-based)")->required();
  c.app->add_option("--size", args.size, "expected size of D");
  c.run = [&in, &args](Report& report, std::ostream& out, bool human) {
    NewtonDiagram d = in.diagram(report, out, human);
    report.inputs["from"] = args.from;
    report.inputs["to"] = args.to;
    if (args.size >= 0) {
      report.inputs["size"] = args.size;
      if (d.size() != args.size)
        throw InputError("diagram has size " + std::to_string(d.size()) + ", expected " + std::to_string(args.size));
    }
    const int k = args.from - 1, m = args.to - 1;
    NewtonDiagram v = view(d, k, m);
    std::size_t hidden = count_hidden_nodes(d, k, m);
    report.data["diagram"] = diagram_json(d);
    report.data["view"] = diagram_json(v);
    report.data["hidden_nodes"] = hidden;
    report.verdicts["view_not_larger"] = true;
    report.verdicts["view_unique_source"] = check_sink_source_structure(v);
    if (human) {
      out << "V(D," << args.from << ',' << args.to << "):\n" << render_ascii(v);
      out << "#(D) = " << node_count(d) << ", #(V) = " << node_count(v) << ", hidden " << hidden << '\n';
      print_nodes(out, v);
    }
    return kOk;
  };
  return c;
}

struct WhitneyArgs {
  int dim = 0;
  int degree = 0;
  std::string chooser = "lex";
  std::vector<std::string> moves;
};

Command make_whitney(CLI::App& root, WhitneyArgs& args) {
  Command c;
  c.app = root.add_subcommand("whitney", "build a sharp generalized Whitney polynomial");
  c.app->add_option("--dim", args.dim, "number of variables n")->required();
  c.app->add_option("--degree", args.degree, "target degree d");
  c.app->add_option("--chooser", args.chooser, "lex or seed:<u64>");
  c.app->add_option("--move", args.moves, "explicit monomial to move (repeatable, in order)");
  c.run = [&args](Report& report, std::ostream& out, bool human) {
    report.inputs["dim"] = args.dim;
    WhitneyTrace trace;
    if (!args.moves.empty()) {
      std::vector<ExponentVector> moves;
      for (const auto& m : args.moves) {
        Polynomial mono = parse_polynomial(m, args.dim);
        if (mono.term_count() != 1) throw InputError("move '" + m + "' is not a single monomial");
        moves.push_back(mono.terms().begin()->first);
      }
      report.inputs["moves"] = args.moves;
      trace = generate_from_moves(args.dim, moves);
      if (args.degree && args.degree != static_cast<int>(moves.size()) + 1)
        throw InputError("--degree disagrees with the number of moves");
    } else {
      if (args.degree < 1) throw InputError("--degree is required without --move");
      WhitneyChooser chooser = WhitneyChooser::parse(args.chooser);
      report.inputs["degree"] = args.degree;
      report.inputs["chooser"] = chooser.to_string();
      trace = generate(args.dim, args.degree, chooser);
    }
    const Polynomial& p = trace.result;
    auto bound = check_degree_bound(p);
    bool sharp = is_sharp_whitney(p);
    NewtonDiagram d = NewtonDiagram::from_quotient(hyperplane_quotient(p));
    Json moves = Json::array();
    for (const auto& m : trace.moves) moves.push_back(to_json(m));
    report.data["polynomial"] = p.to_string();
    report.data["moves"] = moves;
    report.data["bound"] = bound_json(bound);
    report.data["node_count"] = node_count(d);
    report.verdicts["in_H"] = true;
    report.verdicts["sharp_whitney"] = sharp;
    report.verdicts["tight"] = bound.tight;
    if (human) {
      out << p.to_string() << '\n';
      out << "n=" << bound.n << " d=" << bound.d << " N=" << bound.terms << " bound=" << bound.bound
          << " tight=" << (bound.tight ? "true" : "false") << " sharp=" << (sharp ? "true" : "false")
          << " #(D)=" << node_count(d) << '\n';
    }
    return sharp ? kOk : kContradiction;
  };
  return c;
}

struct MapArgs {
  std::string file;
  int dim = 0;
};

Command make_crmap(CLI::App& root, MapArgs& args) {
  Command c;
  c.app = root.add_subcommand("crmap", "properness and degree bound for a monomial map");
  c.app->add_option("--file", args.file, "map file: '<|c|^2> : <monomial in z>' per line")->required();
  c.app->add_option("--dim", args.dim, "source dimension n (default: largest index used)");
  c.run = [&args](Report& report, std::ostream& out, bool human) {
    report.inputs["file"] = args.file;
    report.fixtures.push_back(args.file);
    if (args.dim) report.inputs["dim"] = args.dim;
    MonomialMap f = parse_monomial_map(read_file(args.file), args.dim);
    Polynomial p = squared_norm(f);
    bool proper = is_proper(f);
    report.data["squared_norm"] = p.to_string();
    report.verdicts["proper"] = proper;
    if (human) out << "||f||^2 = " << p.to_string() << "\nproper: " << (proper ? "true" : "false") << '\n';
    if (!proper) return kInputError;
    auto r = corollary_report(f);
    report.data["report"] = Json{{"n", r.n}, {"N", r.components}, {"d", r.d}, {"bound", rational_json(r.bound)},
                                 {"holds", r.holds}, {"tight", r.tight}};
    report.verdicts["holds"] = r.holds;
    if (human)
      out << "n=" << r.n << " N=" << r.components << " d=" << r.d << " bound=" << r.bound
          << " holds=" << (r.holds ? "true" : "false") << " tight=" << (r.tight ? "true" : "false") << '\n';
    return kOk;
  };
  return c;
}

struct SearchArgs {
  int dim = 0;
  int size = 0;
  unsigned workers = 1;
  std::string dump;
  bool symmetric = false;
  bool audit = false;
};

Command make_search(CLI::App& root, SearchArgs& args) {
  Command c;
  c.app = root.add_subcommand("search", "exhaustive minimum node count over unique-source diagrams");
  c.app->add_option("--dim", args.dim, "dimension n");
  c.app->add_option("--size", args.size, "largest diagram size d")->required();
  c.app->add_option("--workers", args.workers, "worker threads");
  c.app->add_option("--dump-minimizers", args.dump, "write minimizers as diagram JSON");
  c.app->add_flag("--symmetric", args.symmetric, "check the symmetric 2-D dichotomy up to degree --size");
  c.app->add_flag("--audit", args.audit, "hidden-node audit (n >= 4)");
  c.run = [&args](Report& report, std::ostream& out, bool human) {
    report.inputs["size"] = args.size;
    if (args.symmetric) {
      report.inputs["symmetric"] = true;
      auto r = symmetric_dichotomy(args.size);
      report.data["symmetric"] = Json{{"max_degree", r.max_degree}, {"diagrams", r.diagrams},
                                      {"single_point", r.single_point}, {"hidden_two", r.hidden_two},
                                      {"dehomogenized_mismatch", r.dehomogenized_mismatch}};
      report.verdicts["dichotomy"] = true;
      report.verdicts["dehomogenized_counts_agree"] = r.dehomogenized_mismatch == 0;
      if (human)
        out << "symmetric diagrams of degree <= " << r.max_degree << ": " << r.diagrams << " checked, "
            << r.single_point << " with #(D)=3 (single point), " << r.hidden_two << " with a view hiding >= 2\n"
            << "dehomogenized node-count mismatches: " << r.dehomogenized_mismatch << '\n';
      return r.dehomogenized_mismatch == 0 ? kOk : kContradiction;
    }
    if (args.dim < 1) throw InputError("--dim is required");
    report.inputs["dim"] = args.dim;
    EnumerationOptions options{true, args.workers};
    if (args.audit) {
      report.inputs["audit"] = true;
      auto r = hidden_node_audit(args.dim, args.size, options);
      Json failures = Json::array();
      for (const auto& f : r.failures)
        failures.push_back(Json{{"clause", f.clause}, {"best_deficit", f.best_deficit}, {"diagram", diagram_json(f.diagram)}});
      report.data["audit"] = Json{{"diagrams", r.diagrams}, {"clause2_triggered", r.clause2_triggered},
                                  {"facial_triggers", r.facial_triggers}, {"top_face_triggers", r.top_face_triggers},
                                  {"clause1_failures", r.clause1_failures}, {"clause2_failures", r.clause2_failures},
                                  {"failures", failures}};
      report.verdicts["deficit_at_least_size"] = r.clause1_failures == 0;
      report.verdicts["deficit_at_least_size_plus_one"] = r.clause2_failures == 0;
      if (human)
        out << "audited " << r.diagrams << " diagrams; clause 1 failures " << r.clause1_failures
            << "; clause 2 triggered " << r.clause2_triggered << " (facial " << r.facial_triggers << ", top face "
            << r.top_face_triggers << "), failures " << r.clause2_failures << '\n';
      return r.failure_count == 0 ? kOk : kContradiction;
    }

    auto r = verify_bound(args.dim, args.size, options);
    Json sizes = Json::array();
    Json dump = Json::array();
    bool all_oppd = true;
    for (const auto& [size, c] : r.by_size) {
      Json entry{{"size", size}, {"valid", c.valid}, {"min_nodes", c.min_nodes}};
      entry["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
      entry["minimizers"] = c.minimizers;
      entry["one_point_per_degree"] = c.one_point_per_degree;
      sizes.push_back(entry);
      if (size == args.size) all_oppd = c.one_point_per_degree == c.minimizers;
      for (const auto& m : c.minimizer_diagrams) {
        Json j = diagram_json(m);
        j["one_point_per_degree"] = is_one_point_per_degree(m);
        dump.push_back(std::move(j));
      }
      if (human) {
        out << "size " << size << ": valid " << c.valid << ", min #(D) = " << c.min_nodes;
        if (c.bound) out << " (bound " << *c.bound << ")";
        out << ", minimizers " << c.minimizers << ", one point per degree " << c.one_point_per_degree << '\n';
      }
    }
    report.data["points"] = r.points;
    report.data["assignments"] = r.assignments;
    report.data["leaves"] = r.leaves;
    report.data["by_size"] = sizes;
    report.verdicts["bound_verified"] = true;
    report.verdicts["all_minimizers_one_point_per_degree"] = all_oppd;
    if (!args.dump.empty()) {
      std::ofstream f(args.dump);
      if (!f) throw InputError("cannot write '" + args.dump + "'");
      f << dump.dump(2) << '\n';
      report.fixtures.push_back(args.dump);
    }
    if (human)
      out << "searched " << r.leaves << " complete assignments of 3^" << r.points << " = " << r.assignments
          << "\nbound verified\n";
    return kOk;
  };
  return c;
}

struct LemmaArgs {
  int height = 3;
  int width = 3;
  std::uint64_t random = 1000;
  std::uint64_t seed = 1;
};

Command make_lemma(CLI::App& root, LemmaArgs& args) {
  Command c;
  c.app = root.add_subcommand("lemma42", "2f+e+c >= height+1 and fill on simple diagrams");
  c.app->add_option("--height", args.height, "rows of the enumeration box");
  c.app->add_option("--width", args.width, "positions per row of the enumeration box");
  c.app->add_option("--random", args.random, "additional random simple diagrams");
  c.app->add_option("--seed", args.seed, "seed for the random diagrams");
  c.run = [&args](Report& report, std::ostream& out, bool human) {
    report.inputs = Json{{"height", args.height}, {"width", args.width}, {"random", args.random}, {"seed", args.seed}};
    auto r = lemma_check(args.height, args.width, args.random, args.seed);
    report.data = Json{{"enumerated", r.enumerated}, {"random", r.random}, {"fill_steps", r.fill_steps},
                       {"min_slack", r.min_slack},
                       {"sign_change_shortfalls", r.sign_change_shortfalls}};
    report.verdicts["inequality"] = true;
    report.verdicts["fill_non_increasing"] = true;
    if (human)
      out << r.enumerated << " enumerated and " << r.random << " random simple diagrams pass; "
          << r.fill_steps << " fill steps; min slack " << r.min_slack << "; " << r.sign_change_shortfalls
          << " filled diagrams below the sign-change count\n";
    return kOk;
  };
  return c;
}

Command make_faces(CLI::App& root, PolyInput& in) {
  Command c;
  c.app = root.add_subcommand("faces", "faces, complete simple sets and face node counts");
  in.attach(c.app, true);
  c.run = [&in](Report& report, std::ostream& out, bool human) {
    NewtonDiagram d = in.diagram(report, out, human);
    Json face_list = Json::array();
    for (const auto& f : faces(d)) {
      Json axes = Json::array();
      for (int a : f.axes) axes.push_back(a + 1);
      Json pts = Json::array();
      for (const auto& p : f.points) pts.push_back(to_json(p));
      Json fn = Json::array();
      for (const auto& p : face_nodes(d, f)) fn.push_back(to_json(p));
      Json j{{"kind", f.kind == Face::Kind::Vertical ? "vertical" : "horizontal"}, {"axes", axes}};
      if (f.kind == Face::Kind::Horizontal) j["degree"] = f.degree;
      j["points"] = pts;
      j["nodes"] = fn;
      face_list.push_back(std::move(j));
      if (human) {
        out << (f.kind == Face::Kind::Vertical ? "vertical" : "horizontal") << " face (";
        for (std::size_t i = 0; i < f.axes.size(); ++i) out << (i ? "," : "") << f.axes[i] + 1;
        out << "): " << f.points.size() << " points, " << fn.size() << " nodes\n";
      }
    }
    report.data["faces"] = face_list;
    bool structure = check_sink_source_structure(d);
    report.verdicts["unique_source_at_origin"] = structure;
    if (!structure || d.dimension() < 2) return kOk;
    Json sets = Json::array();
    bool heights_ok = true;
    for (int k = 0; k < d.dimension(); ++k) {
      for (int m = k + 1; m < d.dimension(); ++m) {
        Json parts = Json::array();
        int total = 0;
        for (const auto& f : complete_simple_set(d, k, m)) {
          Json j = diagram_json(f.diagram());
          j["height"] = f.height();
          j["counts"] = node_counts_json(face_node_count(f));
          parts.push_back(std::move(j));
          total += f.height();
        }
        heights_ok &= total == d.size();
        sets.push_back(Json{{"edge", Json::array({k + 1, m + 1})}, {"simple_diagrams", parts}});
        if (human) out << "edge (" << k + 1 << ',' << m + 1 << "): " << parts.size() << " simple diagrams, heights sum " << total << '\n';
      }
    }
    report.data["complete_simple_sets"] = sets;
    report.verdicts["heights_sum_to_size"] = heights_ok;
    return heights_ok ? kOk : kContradiction;
  };
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton diagrams of (p-1)/(s-1) and sharp degree bounds", "ndiag"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool timings = false;
  app.add_flag("--json", json, "print the JSON report instead of text");
  app.add_flag("--timings", timings, "include wall-clock timings");

  PolyInput poly;
  ViewArgs view_args;
  WhitneyArgs whitney_args;
  MapArgs map_args;
  SearchArgs search_args;
  LemmaArgs lemma_args;
  std::vector<Command> commands{
      make_check(app, poly),         make_quotient(app, poly),       make_diagram(app, poly),
      make_view(app, poly, view_args), make_whitney(app, whitney_args), make_crmap(app, map_args),
      make_search(app, search_args), make_lemma(app, lemma_args),     make_faces(app, poly),
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto& command : commands) {
    if (!command.app->parsed()) continue;
    Report report;
    report.command = command.app->get_name();
    auto start = std::chrono::steady_clock::now();
    int code = kOk;
    std::ostringstream text;
    try {
      code = command.run(report, text, !json);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return kInputError;
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const TheoremContradiction& e) {
      err << "contradiction: " << e.what() << '\n' << e.dump() << '\n';
      return kContradiction;
    } catch (const BudgetExceeded& e) {
      err << "refused: " << e.what() << '\n';
      return kBudget;
    }
    std::optional<double> millis;
    if (timings)
      millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (json) {
      out << report.to_json(millis).dump(2) << '\n';
    } else {
      out << text.str();
      if (millis) out << "time: " << *millis << " ms\n";
    }
    return code;
  }
  return kInputError;
}

}  // namespace ndiag::cli
