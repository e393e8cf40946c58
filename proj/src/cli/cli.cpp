#include "cobord/cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cobord/cli/golden.hpp"
#include "cobord/diagram/term.hpp"
#include "cobord/faithfulness/faithfulness.hpp"
#include "cobord/frobenius/algebra.hpp"
#include "cobord/tqft/evaluator.hpp"

namespace cobord::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

frobenius::FrobeniusAlgebra load_algebra(const std::string& selector) {
  if (selector == "qz5") return frobenius::qz5();
  if (selector == "zqs3") return frobenius::zqs3();
  if (selector == "A") return frobenius::qz5_zqs3();
  if (selector.rfind("file:", 0) == 0) {
    try {
      return frobenius::algebra_from_json(read_json_file(selector.substr(5)));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("algebra file: " + std::string(e.what()));
    } catch (const std::invalid_argument& e) {
      throw UsageError("algebra file: " + std::string(e.what()));
    }
  }
  throw UsageError("unknown algebra '" + selector + "' (expected qz5, zqs3, A or file:<path>)");
}

std::optional<tqft::AlgebraTag> tag_of(const std::string& selector) {
  if (selector == "qz5") return tqft::AlgebraTag::QZ5;
  if (selector == "zqs3") return tqft::AlgebraTag::ZQS3;
  if (selector == "A") return tqft::AlgebraTag::A;
  return std::nullopt;
}

surface::Cobordism load_cobordism(const std::string& path) {
  try {
    return surface::cobordism_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

void report_parse_error(std::ostream& err, const std::string& text, const diagram::ParseError& e) {
  err << "error: at position " << e.position() << ": " << e.message() << "\n"
      << "  " << text << "\n"
      << "  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 2-cobordism and 2TQFT evaluation"};
  app.require_subcommand(1);

  std::string algebra = "A";
  std::string term;
  std::string cobordism_path;
  auto* eval = app.add_subcommand("eval", "Evaluate a cobordism under an algebra (matrix JSON)");
  eval->add_option("--algebra", algebra, "qz5 | zqs3 | A | file:<path>");
  auto* term_opt = eval->add_option("--term", term, "generator word, e.g. \"delta ; mu\"");
  auto* cob_opt = eval->add_option("--cobordism", cobordism_path, "cobordism JSON file");
  term_opt->excludes(cob_opt);

  surface::Genus genus = 0;
  auto* invariant = app.add_subcommand("invariant", "Closed genus-k invariant as p/q");
  invariant->add_option("--algebra", algebra, "qz5 | zqs3 | A | file:<path>");
  invariant->add_option("--genus", genus)->required();

  auto* verify = app.add_subcommand("verify", "Check the commutative Frobenius axioms");
  verify->add_option("--algebra", algebra, "qz5 | zqs3 | A | file:<path>");

  auto* golden = app.add_subcommand("golden", "Rebuild the reference matrices and diff them");

  surface::EnumerationBounds bounds;
  int workers = 0;
  std::string output;
  auto* scan = app.add_subcommand("scan", "Exhaustive faithfulness scan, emits a certificate");
  scan->add_option("--algebra", algebra, "qz5 | zqs3 | A | file:<path>");
  scan->add_option("--max-circles", bounds.max_circles, "circles per side")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  scan->add_option("--max-genus", bounds.max_genus, "genus of each boundary-touching component")
      ->capture_default_str();
  scan->add_option("--max-closed", bounds.max_closed, "number of closed pieces")->capture_default_str();
  scan->add_option("--max-closed-genus", bounds.max_closed_genus, "genus of each closed piece")
      ->capture_default_str();
  scan->add_option("--workers", workers, "OpenMP threads (0 = runtime default)");
  scan->add_option("--output", output, "write the certificate here instead of stdout");

  unsigned long za = 0, zb = 0, zn = 0;
  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisor of a^n + b^n");
  zsig->add_option("--a", za)->required();
  zsig->add_option("--b", zb)->required();
  zsig->add_option("--n", zn)->required();

  std::string left_path, right_path;
  auto* separate = app.add_subcommand("separate", "Closed-surface reduction of two distinct cobordisms");
  separate->add_option("--left", left_path)->required();
  separate->add_option("--right", right_path)->required();

  auto* normal = app.add_subcommand("normal-form", "Normal form JSON and canonical word of a term");
  normal->add_option("--term", term)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      if (term.empty() && cobordism_path.empty()) throw UsageError("eval needs --term or --cobordism");
      surface::Cobordism k;
      if (!term.empty()) {
        try {
          k = diagram::elaborate(*diagram::parse(term));
        } catch (const diagram::ParseError& e) {
          report_parse_error(err, term, e);
          return kUsage;
        }
      } else {
        k = load_cobordism(cobordism_path);
      }
      const tqft::Evaluator ev(load_algebra(algebra));
      out << tqft::to_json(ev.evaluate(k)).dump() << "\n";
      return kOk;
    }

    if (invariant->parsed()) {
      if (auto tag = tag_of(algebra)) {
        out << tqft::closed_invariant(*tag, genus).to_string() << "\n";
      } else {
        const tqft::Evaluator ev(load_algebra(algebra));
        out << ev.closed_scalar(genus).to_string() << "\n";
      }
      return kOk;
    }

    if (verify->parsed()) {
      const auto report = frobenius::verify_frobenius(load_algebra(algebra));
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : report.checks) checks.push_back({{"axiom", c.name}, {"passed", c.passed}});
      out << nlohmann::json{{"algebra", algebra}, {"checks", checks}, {"all_passed", report.all_passed()}}.dump(2)
          << "\n";
      return report.all_passed() ? kOk : kFailed;
    }

    if (golden->parsed()) {
      bool all = true;
      for (const auto& c : golden::run()) {
        out << (c.match ? "match    " : "MISMATCH ") << c.name << "\n";
        if (!c.match) out << "  expected " << c.expected << "\n  actual   " << c.actual << "\n";
        all = all && c.match;
      }
      return all ? kOk : kFailed;
    }

    if (scan->parsed()) {
      const tqft::Evaluator ev(load_algebra(algebra));
      const auto cert = faithfulness::faithfulness_scan(ev, bounds, algebra, workers);
      const std::string text = faithfulness::to_json(cert).dump(2) + "\n";
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output);
        if (!file) throw UsageError("cannot write '" + output + "'");
        file << text;
      }
      return cert.distinct() ? kOk : kFailed;
    }

    if (zsig->parsed()) {
      const auto w = faithfulness::zsigmondy_witness(za, zb, zn);
      if (w.is_exception()) {
        out << "exception: (n,a,b) = (3,2,1) has no primitive prime divisor\n";
        return kFailed;
      }
      out << w.prime->get_str() << "\n";
      return kOk;
    }

    if (separate->parsed()) {
      const auto s = faithfulness::separating_closure(load_cobordism(left_path), load_cobordism(right_path));
      out << nlohmann::json{{"case", faithfulness::to_string(s.which)},
                            {"closure_genus", s.closure_genus},
                            {"left", faithfulness::to_json(s.left)},
                            {"right", faithfulness::to_json(s.right)},
                            {"left_invariant", faithfulness::multiset_invariant(s.left).to_string()},
                            {"right_invariant", faithfulness::multiset_invariant(s.right).to_string()}}
                 .dump(2)
          << "\n";
      return kOk;
    }

    if (normal->parsed()) {
      try {
        const auto k = diagram::elaborate(*diagram::parse(term));
        out << nlohmann::json{{"cobordism", surface::to_json(k)}, {"word", diagram::format(k)}}.dump(2) << "\n";
      } catch (const diagram::ParseError& e) {
        report_parse_error(err, term, e);
        return kUsage;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tqft::AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace cobord::cli
