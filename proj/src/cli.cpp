#include "sqsym/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <regex>

#include "sqsym/errors.hpp"
#include "sqsym/format.hpp"
#include "sqsym/hopf.hpp"
#include "sqsym/io.hpp"
#include "sqsym/realize.hpp"
#include "sqsym/shuffles.hpp"
#include "sqsym/superschur.hpp"

namespace sqsym::cli {

namespace {

enum class Format { Plain, Latex, Json };

/// A parse error already rendered with the offending argument and a caret.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parse_arg(const std::string& label, const std::string& text, F&& f) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    std::string msg = "cannot parse " + label + ": " + e.what() + "\n  " + text + "\n  " +
                      std::string(std::min(e.position(), text.size()), ' ') + "^";
    throw ArgumentError(msg);
  }
}

Composition composition_arg(const std::string& label, const std::string& text) {
  return parse_arg(label, text, [](const std::string& s) { return Composition::parse(s); });
}

/// A bare composition in `basis`, or a full expression carrying its own basis tag.
Expr operand_arg(const std::string& label, const std::string& text, Basis basis) {
  return parse_arg(label, text, [&](const std::string& s) {
    if (!s.empty() && s.front() == '[') return Expr(basis, Composition::parse(s));
    return parse_expr(s);
  });
}

Superpartition superpartition_arg(const std::string& label, const std::string& text) {
  return parse_arg(label, text, [](const std::string& s) { return Superpartition::parse(s); });
}

std::string render(const Expr& e, Format f) {
  switch (f) {
    case Format::Plain: return to_plain(e);
    case Format::Latex: return to_latex(e);
    case Format::Json: return expr_to_json(e).dump();
  }
  return {};
}

std::string render(const TensorExpr& t, Format f) {
  switch (f) {
    case Format::Plain: return to_plain(t);
    case Format::Latex: return to_latex(t);
    case Format::Json: return tensor_to_json(t).dump();
  }
  return {};
}

std::string polynomial_latex(const SuperPolynomial& p) {
  std::string s = p.to_string();
  s = std::regex_replace(s, std::regex(R"(theta\[(\d+)\])"), R"(\theta_{$1})");
  s = std::regex_replace(s, std::regex(R"(x\[(\d+)\]\^(\d+))"), "x_{$1}^{$2}");
  s = std::regex_replace(s, std::regex(R"(x\[(\d+)\])"), "x_{$1}");
  s = std::regex_replace(s, std::regex(R"((\d+)/(\d+)\*)"), R"(\frac{$1}{$2})");
  return std::regex_replace(s, std::regex(R"(\*)"), " ");
}

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string comp_string(const Composition& a, Format f) {
  return f == Format::Latex ? a.to_latex() : a.to_string();
}

Basis basis_arg(const std::string& name) {
  return parse_arg("basis", name, [](const std::string& s) { return parse_basis(s); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasisymmetric functions in superspace", "sqsym"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}));

  std::string a_text, b_text, basis_name_text = "M";
  const auto basis_check = CLI::IsMember({"M", "L"});

  auto* product_cmd = app.add_subcommand("product", "Product of two compositions or expressions");
  bool trace = false;
  product_cmd->add_option("A", a_text)->required();
  product_cmd->add_option("B", b_text)->required();
  product_cmd->add_option("--basis", basis_name_text, "M or L")->check(basis_check);
  product_cmd->add_flag("--trace", trace, "List the lattice paths behind a product of two compositions");

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct");
  coproduct_cmd->add_option("A", a_text)->required();
  coproduct_cmd->add_option("--basis", basis_name_text, "M or L")->check(basis_check);

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode");
  std::string via = "columns";
  antipode_cmd->add_option("A", a_text)->required();
  antipode_cmd->add_option("--basis", basis_name_text, "M or L")->check(basis_check);
  antipode_cmd->add_option("--via", via, "Algorithm for the L basis")
      ->check(CLI::IsMember({"columns", "monomial"}));

  auto* convert_cmd = app.add_subcommand("convert", "Change of basis");
  std::string from = "L", to = "M";
  convert_cmd->add_option("A", a_text)->required();
  auto* from_opt =
      convert_cmd->add_option("--from", from, "M, L or Lbar")->check(CLI::IsMember({"M", "L", "Lbar"}));
  convert_cmd->add_option("--to", to, "M or L")->check(basis_check);

  auto* orders_cmd = app.add_subcommand("orders", "Compare two compositions in both orders");
  orders_cmd->add_option("A", a_text)->required();
  orders_cmd->add_option("B", b_text)->required();

  auto* schur_cmd = app.add_subcommand("schur", "Expand a (skew) Schur function in the L basis");
  std::string skew;
  bool show_tableaux = false;
  schur_cmd->add_option("LAMBDA", a_text, "Superpartition such as (3,0;5,3,2)")->required();
  schur_cmd->add_option("--skew", skew, "Inner superpartition");
  schur_cmd->add_flag("--show-tableaux", show_tableaux, "Print the dot-standard tableaux");

  auto* realize_cmd = app.add_subcommand("realize", "Expand an expression as a polynomial");
  int vars = 0;
  realize_cmd->add_option("EXPR", a_text, "Expression such as 2*M[1,d2] - L[3]")->required();
  realize_cmd->add_option("--vars", vars, "Number of variables")->required()->check(CLI::Range(0, 16));

  auto* verify_cmd = app.add_subcommand("verify", "Run the Hopf axiom suite");
  VerifyOptions opts;
  verify_cmd->add_option("--max-degree", opts.max_size, "Bound on n+m")->check(CLI::Range(0, 8));
  verify_cmd->add_option("--max-fermionic", opts.max_fermionic, "Bound on m")->check(CLI::Range(0, 8));

  std::vector<std::string> argv_store{"sqsym"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  const Format fmt = format_name == "json"    ? Format::Json
                     : format_name == "latex" ? Format::Latex
                                              : Format::Plain;

  try {
    if (product_cmd->parsed()) {
      const Basis basis = basis_arg(basis_name_text);
      const Expr a = operand_arg("A", a_text, basis);
      const Expr b = operand_arg("B", b_text, basis);
      const Expr result = product(a, b);
      if (!trace) {
        out << render(result, fmt) << "\n";
        return kOk;
      }
      if (a.terms().size() != 1 || b.terms().size() != 1 || a.basis() != b.basis()) {
        throw DomainError("--trace needs two single compositions in the same basis");
      }
      const Composition& alpha = a.terms().begin()->first;
      const Composition& beta = b.terms().begin()->first;
      Json paths = Json::array();
      std::vector<std::string> lines;
      if (a.basis() == Basis::M) {
        for (const auto& s : overlapping_shuffles(alpha, beta)) {
          paths.push_back({{"path", path_to_string(s.path)},
                           {"gamma", composition_to_json(s.gamma)},
                           {"sign", s.sign}});
          lines.push_back(path_to_string(s.path) + "  " + comp_string(s.gamma, fmt) + "  " +
                          (s.sign > 0 ? "+" : "-"));
        }
      } else {
        for (const auto& p : fundamental_paths(alpha, beta)) {
          paths.push_back(path_to_json(p));
          lines.push_back(path_to_string(p.path) + "  " + p.pi.to_string() + "  " +
                          comp_string(p.gamma, fmt) + "  " + (p.sign > 0 ? "+" : "-"));
        }
      }
      if (fmt == Format::Json) {
        out << Json{{"paths", paths}, {"result", expr_to_json(result)}}.dump() << "\n";
      } else {
        for (const auto& l : lines) out << l << "\n";
        out << "= " << render(result, fmt) << "\n";
      }
      return kOk;
    }
    if (coproduct_cmd->parsed()) {
      out << render(coproduct(operand_arg("A", a_text, basis_arg(basis_name_text))), fmt) << "\n";
      return kOk;
    }
    if (antipode_cmd->parsed()) {
      const Expr a = operand_arg("A", a_text, basis_arg(basis_name_text));
      const auto route = via == "monomial" ? AntipodeRoute::Monomial : AntipodeRoute::Columns;
      out << render(antipode(a, route), fmt) << "\n";
      return kOk;
    }
    if (convert_cmd->parsed()) {
      const Expr a = operand_arg("A", a_text, basis_arg(from));
      if (from_opt->count() > 0 && basis_name(a.basis()) != from) {
        throw BasisMismatch("expression is in basis " + basis_name(a.basis()) + ", not " + from);
      }
      out << render(convert(a, basis_arg(to)), fmt) << "\n";
      return kOk;
    }
    if (orders_cmd->parsed()) {
      const Composition a = composition_arg("A", a_text);
      const Composition b = composition_arg("B", b_text);
      const DefSets sa = def_sets(a), sb = def_sets(b);
      if (fmt == Format::Json) {
        out << Json{{"A", {{"comp", composition_to_json(a)}, {"sets", def_sets_to_json(sa)}}},
                    {"B", {{"comp", composition_to_json(b)}, {"sets", def_sets_to_json(sb)}}},
                    {"strong", {{"A<=B", strong_leq(a, b)}, {"B<=A", strong_leq(b, a)}}},
                    {"weak", {{"A<=B", weak_leq(a, b)}, {"B<=A", weak_leq(b, a)}}}}
                   .dump()
            << "\n";
        return kOk;
      }
      auto sets_line = [&](const char* name, const Composition& c, const DefSets& s) {
        out << name << " = " << comp_string(c, fmt) << "  D=" << set_string(s.D)
            << " E=" << set_string(s.E) << " F=" << set_string(s.F)
            << " F-=" << set_string(s.Fminus) << "\n";
      };
      auto verdict = [](bool v) { return v ? "yes" : "no"; };
      sets_line("A", a, sa);
      sets_line("B", b, sb);
      out << "strong A<=B: " << verdict(strong_leq(a, b)) << "\n"
          << "strong B<=A: " << verdict(strong_leq(b, a)) << "\n"
          << "weak A<=B: " << verdict(weak_leq(a, b)) << "\n"
          << "weak B<=A: " << verdict(weak_leq(b, a)) << "\n";
      return kOk;
    }
    if (schur_cmd->parsed()) {
      const Superpartition outer = superpartition_arg("LAMBDA", a_text);
      const Superpartition inner = skew.empty() ? Superpartition{} : superpartition_arg("OMEGA", skew);
      const Expr result = schur_to_L(outer, inner);
      if (!show_tableaux) {
        out << render(result, fmt) << "\n";
        return kOk;
      }
      const auto tableaux = dot_standard_tableaux(outer, inner);
      if (fmt == Format::Json) {
        Json ts = Json::array();
        for (const auto& t : tableaux) {
          Json j = tableau_to_json(t);
          j["comp"] = composition_to_json(comp_of_tableau(t));
          ts.push_back(std::move(j));
        }
        out << Json{{"tableaux", ts}, {"result", expr_to_json(result)}}.dump() << "\n";
        return kOk;
      }
      for (const auto& t : tableaux) {
        out << t.render() << "comp " << comp_string(comp_of_tableau(t), fmt) << "  sign "
            << (inv_sign(t) > 0 ? "+" : "-") << "\n\n";
      }
      out << "= " << render(result, fmt) << "\n";
      return kOk;
    }
    if (realize_cmd->parsed()) {
      const Expr e = operand_arg("EXPR", a_text, Basis::M);
      const SuperPolynomial p = realize(e, vars);
      switch (fmt) {
        case Format::Plain: out << p.to_string() << "\n"; break;
        case Format::Latex: out << polynomial_latex(p) << "\n"; break;
        case Format::Json: out << polynomial_to_json(p).dump() << "\n"; break;
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const HopfReport report = verify_hopf(opts);
      if (fmt == Format::Json) {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        for (const auto& c : report.checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.universe << "]";
          if (!c.passed) out << "  " << c.counterexample;
          out << "\n";
        }
      }
      return report.passed() ? kOk : kVerifyFailed;
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace sqsym::cli
