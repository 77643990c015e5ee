#include "commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "bluescheme/models.hpp"
#include "bluescheme/parser.hpp"
#include "bluescheme/printer.hpp"
#include "bluescheme/proj.hpp"
#include "poset_document.hpp"

namespace bluescheme::cli {
namespace {

int code_for(const BlueprintError& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const DuplicateGeneratorError*>(&e)) return kParseError;
  if (dynamic_cast<const InhomogeneousRelationError*>(&e)) return kParseError;
  if (dynamic_cast<const EnumerationGuardError*>(&e)) {
    return kEnumerationGuard;
  }
  if (dynamic_cast<const UngradedError*>(&e)) return kUngradedInput;
  if (dynamic_cast<const UnknownGeneratorError*>(&e)) {
    return kUnknownGenerator;
  }
  if (dynamic_cast<const UnsupportedDegreeError*>(&e)) {
    return kUnknownGenerator;
  }
  if (dynamic_cast<const NonPrimeModulusError*>(&e)) return kNonPrimeModulus;
  return kUsageError;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const BlueprintError& e) {
    err << "bluescheme: " << e.what() << "\n";
    return code_for(e);
  }
}

// Loads the input presentation from --builtin or --file (exactly one).
BlueprintPresentation load_input(const CommandOptions& opts) {
  if (opts.builtin.has_value() == opts.file.has_value()) {
    throw BlueprintError("exactly one of --builtin or --file is required");
  }
  if (opts.builtin) {
    auto pres = builtin_presentation(*opts.builtin);
    if (!pres) {
      std::string names;
      for (const std::string& n : builtin_names()) {
        names += names.empty() ? n : ", " + n;
      }
      throw BlueprintError("unknown builtin '" + *opts.builtin +
                           "' (available: " + names + ")");
    }
    return std::move(*pres);
  }
  std::ifstream in(*opts.file);
  if (!in) {
    throw ParseError(0, 0, "cannot read file '" + *opts.file + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_blueprint(text.str());
}

std::string histogram_string(const std::vector<std::size_t>& counts) {
  if (counts.empty()) return "-";
  std::string out;
  for (std::size_t c : counts) {
    if (!out.empty()) out += "/";
    out += std::to_string(c);
  }
  return out;
}

void emit_artifacts(const CommandOptions& opts,
                    const BlueprintPresentation& pres,
                    const SpectrumPoset& poset, const std::string& kind) {
  if (!opts.dot_path && !opts.json_path) return;
  const PosetDocument doc =
      PosetDocument::from_poset(pres, poset, pres.name(), kind);
  if (opts.dot_path) {
    std::ofstream out(*opts.dot_path);
    if (!out) throw BlueprintError("cannot write '" + *opts.dot_path + "'");
    out << doc.to_dot();
  }
  if (opts.json_path) {
    std::ofstream out(*opts.json_path);
    if (!out) throw BlueprintError("cannot write '" + *opts.json_path + "'");
    out << doc.to_json();
  }
}

void report_line(std::ostream& out, const std::string& name,
                 const SpectrumPoset& poset, const char* noun) {
  out << name << ": " << poset.size() << " " << noun << "; ranks "
      << histogram_string(poset.rank_histogram()) << "; "
      << poset.closed_points().size() << " closed; "
      << poset.generic_points().size() << " generic\n";
}

}  // namespace

int run_spec(const CommandOptions& opts, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const BlueprintPresentation pres = load_input(opts);
    const SpectrumPoset poset =
        specialization_order(enumerate_primes(pres, false, opts.budget));
    report_line(out, pres.name(), poset, "primes");
    emit_artifacts(opts, pres, poset, "spec");
    return kOk;
  });
}

int run_proj(const CommandOptions& opts, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const BlueprintPresentation pres = load_input(opts);
    const ProjSpace proj = make_proj(pres, opts.budget);
    report_line(out, pres.name(), proj.points(), "points");
    emit_artifacts(opts, pres, proj.points(), "proj");
    return kOk;
  });
}

int run_chart(const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.at) {
      throw BlueprintError("chart requires --at GENERATOR");
    }
    const BlueprintPresentation pres = load_input(opts);
    const ProjSpace proj = make_proj(pres, opts.budget);
    const DegreeZeroChart& chart = proj.chart(*opts.at);

    out << "# chart of " << pres.name() << " at " << chart.inverted << "\n";
    for (const ChartGenerator& g : chart.generators) {
      out << "# " << g.name << " = " << g.fraction << "\n";
    }
    if (chart.presentation.generator_count() == 5) {
      const ChartMatch match = chart_matches_model(proj, *opts.at);
      if (match.matched) {
        out << "# model: "
            << (match.twisted ? "twisted-2x2-matrices" : "2x2-matrices")
            << "\n";
      }
    }
    out << print_blueprint(chart.presentation);
    return kOk;
  });
}

int run_count(const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (opts.qs.empty()) {
      throw BlueprintError("count requires --q N[,N...]");
    }
    const CountingPolynomial poly = grassmannian_counting_polynomial();
    int code = kOk;
    for (std::uint64_t q : opts.qs) {
      const std::uint64_t value = eval_counting_polynomial(poly, q);
      out << "q=" << q << ": N(q)=" << value;
      try {
        const std::uint64_t oracle =
            count_subspaces_bruteforce(2, 4, static_cast<unsigned>(q));
        out << " oracle=" << oracle
            << (oracle == value ? " ok" : " MISMATCH") << "\n";
        if (oracle != value) code = kUsageError;
      } catch (const NonPrimeModulusError&) {
        out << " oracle=skipped (q not prime)\n";
        code = kNonPrimeModulus;
      } catch (const BlueprintError&) {
        out << " oracle=skipped (outside oracle range)\n";
        code = kNonPrimeModulus;
      }
    }
    return code;
  });
}

}  // namespace bluescheme::cli
