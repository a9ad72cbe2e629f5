#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qps/checks.hpp"
#include "qps/expr.hpp"
#include "qps/hopf.hpp"
#include "qps/symplectic.hpp"

using json = nlohmann::ordered_json;
using namespace qps;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json scalar_json(const Scalar& s) {
  return json{{"r0", s.r0().get_str()}, {"r1", s.r1().get_str()}};
}

json element_json(const Presentation& p, const Element& e) {
  json terms = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    terms.push_back(json{{"monomial", p.print(Monomial(it->first))},
                         {"coeff", scalar_json(it->second)}});
  return json{{"text", p.print(e)}, {"terms", terms}};
}

std::string field_text(const VectorField& v) {
  const Presentation& Q = SpaceCatalog::instance().Q();
  const char* names[4] = {"Dx", "Dy", "Dpx", "Dpy"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (v.f[i].is_zero()) continue;
    std::string coeff = Q.print(v.f[i]);
    std::string part;
    if (coeff == "1")
      part = names[i];
    else if (coeff == "-1")
      part = std::string("-") + names[i];
    else if (v.f[i].size() > 1 || coeff.find(" + ") != std::string::npos ||
             coeff.find(" - ") != std::string::npos)
      part = "(" + coeff + ")*" + names[i];
    else
      part = coeff + "*" + names[i];
    if (out.empty())
      out = part;
    else if (part[0] == '-')
      out += " - " + part.substr(1);
    else
      out += " + " + part;
  }
  return out.empty() ? "0" : out;
}

json field_json(const VectorField& v) {
  const Presentation& Q = SpaceCatalog::instance().Q();
  json comps = json::object();
  const char* names[4] = {"Dx", "Dy", "Dpx", "Dpy"};
  for (int i = 0; i < 4; ++i) comps[names[i]] = element_json(Q, v.f[i]);
  return json{{"text", field_text(v)}, {"components", comps}};
}

json tensor_json(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms())
    terms.push_back(json{{"left", t.left()->print(Monomial(k.first))},
                         {"right", t.right()->print(Monomial(k.second))},
                         {"coeff", scalar_json(c)}});
  return json{{"text", print_tensor(t)}, {"terms", terms}};
}

const Presentation& named_presentation(const std::string& name) {
  const Presentation* p = SpaceCatalog::instance().by_name(name);
  if (!p) throw UsageError("unknown presentation '" + name + "' (use M, Q, OmegaM, OmegaQ, F, MF)");
  return *p;
}

Element parse_in(const std::string& text, const Presentation& p) {
  return eval(parse(text), p);
}

Element parse_inferred(const std::string& text, const Presentation** used) {
  Expr e = parse(text);
  const Presentation& p = infer_presentation(e);
  if (used) *used = &p;
  return eval(e, p);
}

struct Output {
  std::string command;
  std::string input;
  std::string presentation = "-";
  std::string text;      // text-mode body (may be multiline)
  json result;           // json-mode "result" field
  int exit_code = 0;
};

Output cmd_normalize(const std::vector<std::string>& args) {
  if (args.empty() || args.size() > 2) throw UsageError("usage: normalize [<alg>] <expr>");
  Output out;
  out.command = "normalize";
  const Presentation* p = nullptr;
  Element e;
  if (args.size() == 2) {
    p = &named_presentation(args[0]);
    out.input = args[1];
    e = parse_in(args[1], *p);
  } else {
    out.input = args[0];
    e = parse_inferred(args[0], &p);
  }
  out.presentation = p->name();
  out.text = p->print(e);
  out.result = element_json(*p, e);
  return out;
}

Output cmd_d(const std::vector<std::string>& args) {
  if (args.size() != 1) throw UsageError("usage: d <expr>");
  const Presentation& O = SpaceCatalog::instance().OmegaQ();
  Element e = parse_in(args[0], O);
  Element de = Calculus::instance().d(e);
  return {"d", args[0], O.name(), O.print(de), element_json(O, de)};
}

Output cmd_partial(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: partial <var> <expr>");
  const Presentation& Q = SpaceCatalog::instance().Q();
  int i = Q.index_of(args[0]);
  if (i < 0) throw UsageError("unknown variable '" + args[0] + "' (use x, y, px, py)");
  Element f = parse_in(args[1], Q);
  Element df = Calculus::instance().partial(i, f);
  return {"partial", args[0] + " " + args[1], Q.name(), Q.print(df), element_json(Q, df)};
}

Output cmd_bracket(const std::vector<std::string>& args, const char* name) {
  if (args.size() != 2) throw UsageError(std::string("usage: ") + name + " <f> <g>");
  const Presentation& Q = SpaceCatalog::instance().Q();
  Element f = parse_in(args[0], Q), g = parse_in(args[1], Q);
  Element b = Symplectic::instance().poisson(f, g);
  return {name, args[0] + " " + args[1], Q.name(), Q.print(b), element_json(Q, b)};
}

Output cmd_xfield(const std::vector<std::string>& args) {
  if (args.size() != 1) throw UsageError("usage: xfield <f>");
  const Presentation& Q = SpaceCatalog::instance().Q();
  VectorField v = Symplectic::instance().hamiltonian_vf(parse_in(args[0], Q));
  return {"xfield", args[0], Q.name(), field_text(v), field_json(v)};
}

Output cmd_pair(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: pair <form> <field>");
  const SpaceCatalog& c = SpaceCatalog::instance();
  OneForm w = Calculus::instance().left_expand(parse_in(args[0], c.OmegaQ()));
  VectorField v = eval_field(parse(args[1]));
  Element r = Calculus::instance().pair(w, v);
  return {"pair", args[0] + " ; " + args[1], c.Q().name(), c.Q().print(r),
          element_json(c.Q(), r)};
}

Output cmd_act(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: act <h> <m>");
  const SpaceCatalog& c = SpaceCatalog::instance();
  Element h = parse_in(args[0], c.F());
  const Presentation* p = nullptr;
  Element m = parse_inferred(args[1], &p);
  Element r = HopfStructure::instance().act(h, m, *p);
  return {"act", args[0] + " ; " + args[1], p->name(), p->print(r), element_json(*p, r)};
}

Output cmd_rform(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: rform <f> <h>");
  const Presentation& F = SpaceCatalog::instance().F();
  Scalar s = HopfStructure::instance().rform(parse_in(args[0], F), parse_in(args[1], F));
  return {"rform", args[0] + " ; " + args[1], F.name(), s.str(),
          json{{"text", s.str()}, {"scalar", scalar_json(s)}}};
}

Output cmd_coact(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: coact <alg> <expr>");
  const Presentation& p = named_presentation(args[0]);
  Element e = parse_in(args[1], p);
  TensorElement t = (&p == &SpaceCatalog::instance().MF())
                        ? HopfStructure::instance().smash_coaction(e)
                        : HopfStructure::instance().coact(e, p);
  return {"coact", args[1], p.name(), print_tensor(t), tensor_json(t)};
}

Output cmd_omega_eval(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("usage: omega-eval <X> <Y>");
  const Presentation& Q = SpaceCatalog::instance().Q();
  VectorField x = eval_field(parse(args[0])), y = eval_field(parse(args[1]));
  Element r = Symplectic::instance().eval_omega(x, y);
  return {"omega-eval", args[0] + " ; " + args[1], Q.name(), Q.print(r), element_json(Q, r)};
}

Output cmd_dims(const std::vector<std::string>& args) {
  if (args.size() != 1) throw UsageError("usage: dims <alg>");
  const Presentation& p = named_presentation(args[0]);
  size_t total = p.basis().size();
  json grades = json::object();
  std::string text = std::to_string(total);
  bool graded = false;
  for (int g = 0; g <= 4; ++g) {
    size_t n = p.basis(g).size();
    if (g > 0 && n > 0) graded = true;
    if (n > 0) grades[std::to_string(g)] = n;
  }
  if (graded) {
    text += " (by grade:";
    for (auto& [k, v] : grades.items()) text += " " + k + ":" + std::to_string(v.get<size_t>());
    text += ")";
  }
  return {"dims", args[0], p.name(), text, json{{"dimension", total}, {"by_grade", grades}}};
}

Output cmd_check(const std::vector<std::string>& args) {
  if (args.size() != 1) throw UsageError("usage: check <suite|all>");
  std::vector<CheckReport> reports =
      args[0] == "all" ? run_all_checks() : run_check_suite(args[0]);
  Output out;
  out.command = "check";
  out.input = args[0];
  json suites = json::array();
  long failed = 0;
  for (const auto& r : reports) {
    failed += r.failed;
    std::string line = r.name + ": " + (r.passed() ? "PASS" : "FAIL") + " (" +
                       std::to_string(r.checked) + " checks";
    if (r.failed) line += ", " + std::to_string(r.failed) + " failed";
    line += ")";
    out.text += (out.text.empty() ? "" : "\n") + line;
    for (const auto& f : r.failures) out.text += "\n  " + f;
    json jr{{"suite", r.name}, {"checked", r.checked}, {"failed", r.failed}};
    if (r.seed) jr["seed"] = r.seed;
    if (!r.failures.empty()) jr["failures"] = r.failures;
    suites.push_back(std::move(jr));
  }
  out.result = json{{"suites", suites}, {"failed", failed}};
  out.exit_code = failed ? 1 : 0;
  return out;
}

Output cmd_help() {
  Output out;
  out.command = "help";
  out.text =
      "usage: qps [--format text|json] <command> [args]\n"
      "commands:\n"
      "  normalize [<alg>] <expr>   canonical form in M, Q, OmegaM, OmegaQ, F, or MF\n"
      "  d <expr>                   exterior differential (in OmegaQ)\n"
      "  partial <var> <expr>       twisted partial derivative, var in x y px py\n"
      "  bracket <f> <g>            Poisson bracket {f, g}\n"
      "  xfield <f>                 Hamiltonian vector field of f\n"
      "  pair <form> <field>        <1-form, vector field> pairing\n"
      "  act <h> <m>                quantum-group action of h on m\n"
      "  coact <alg> <expr>         coaction (right coaction when alg is MF)\n"
      "  rform <f> <h>              universal r-form on F\n"
      "  omega-eval <X> <Y>         symplectic form on two vector fields\n"
      "  evolve <f> <h>             time derivative of f under Hamiltonian h\n"
      "  dims <alg>                 dimension (and grade dimensions) of an algebra\n"
      "  check <suite|all>          run verification suites\n"
      "vector fields are written f*Dx + g*Dy + h*Dpx + k*Dpy";
  out.result = json{{"text", out.text}};
  return out;
}

int run(int argc, char** argv) {
  std::string format = "text";
  std::string command;
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok == "--format") {
      if (i + 1 >= argc) throw UsageError("--format requires a value");
      format = argv[++i];
    } else if (tok.rfind("--format=", 0) == 0) {
      format = tok.substr(9);
    } else if (tok == "--help" || tok == "-h") {
      command = "help";
    } else if (command.empty()) {
      command = tok;
    } else {
      args.push_back(tok);
    }
  }
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (command.empty() || command == "help") {
    Output h = cmd_help();
    std::cout << h.text << "\n";
    return command.empty() ? 2 : 0;
  }

  Output out;
  if (command == "normalize")
    out = cmd_normalize(args);
  else if (command == "d")
    out = cmd_d(args);
  else if (command == "partial")
    out = cmd_partial(args);
  else if (command == "bracket")
    out = cmd_bracket(args, "bracket");
  else if (command == "evolve")
    out = cmd_bracket(args, "evolve");
  else if (command == "xfield")
    out = cmd_xfield(args);
  else if (command == "pair")
    out = cmd_pair(args);
  else if (command == "act")
    out = cmd_act(args);
  else if (command == "rform")
    out = cmd_rform(args);
  else if (command == "coact")
    out = cmd_coact(args);
  else if (command == "omega-eval")
    out = cmd_omega_eval(args);
  else if (command == "dims")
    out = cmd_dims(args);
  else if (command == "check")
    out = cmd_check(args);
  else
    throw UsageError("unknown command '" + command + "' (see qps --help)");

  if (format == "json") {
    json j{{"command", out.command},
           {"input", out.input},
           {"result", out.result},
           {"presentation", out.presentation}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
