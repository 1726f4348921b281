#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughprob/document.hpp"
#include "roughprob/laws.hpp"
#include "roughprob/measure.hpp"
#include "roughprob/space.hpp"
#include "roughprob/variable.hpp"

namespace {

// Exit codes are part of the tool's contract:
//   0 success, 2 parse/schema/flag error, 3 unknown name,
//   4 internal identity violation, 5 law counterexample found.
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kUnknownName = 3;
constexpr int kInternal = 4;
constexpr int kCounterexample = 5;

roughprob::SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw roughprob::Error(roughprob::Errc::syntax_error,
                           "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return roughprob::parse_space_document(buffer.str());
}

/// Resolves --event: a named event from the document, otherwise a
/// comma-separated element list ("" is the empty event).
roughprob::Event resolve_event(const roughprob::SpaceDocument& doc,
                               const std::string& text) {
  if (doc.has_event(text)) return doc.event(text);
  std::vector<std::string> labels;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = token.find_last_not_of(" \t");
    labels.push_back(token.substr(begin, end - begin + 1));
  }
  return doc.space().event_of_labels(labels);
}

int run_approx(const std::string& path, const std::string& event_text) {
  const roughprob::SpaceDocument doc = [&] {
    try {
      return load_document(path);
    } catch (const roughprob::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kUsage);
    }
  }();

  const roughprob::Event a = [&] {
    try {
      return resolve_event(doc, event_text);
    } catch (const roughprob::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kUnknownName);
    }
  }();

  const auto& space = doc.space();
  const roughprob::Event plus = lower_inverse(space, a);
  const roughprob::Event minus = upper_inverse(space, a);
  const bool exact = is_exact(space, a);

  std::cout << "A = " << a.str() << "\n";
  std::cout << "T+(A) = " << plus.str() << "\n";
  std::cout << "T-1(A) = " << minus.str() << "\n";
  std::cout << "exact = " << (exact ? "true" : "false") << "\n";
  std::cout << "P(A) = " << space.measure().of(a).str() << "\n";
  std::cout << "P*(A) = " << rough_prob(space, a).str() << "\n";
  return kOk;
}

void print_cdf_component(const char* name,
                         const std::vector<roughprob::CdfStep>& steps) {
  std::cout << name << ":";
  if (steps.empty()) {
    std::cout << " 0 for all u\n";
    return;
  }
  std::cout << "\n";
  std::cout << "  0 for u < " << steps.front().at.str() << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::cout << "  " << steps[i].value.str() << " for ";
    if (i + 1 < steps.size()) {
      std::cout << steps[i].at.str() << " <= u < " << steps[i + 1].at.str();
    } else {
      std::cout << "u >= " << steps[i].at.str();
    }
    std::cout << "\n";
  }
}

int run_report(const std::string& path, const std::string& variable_name,
               const std::string& cdf_mode) {
  const roughprob::SpaceDocument doc = [&] {
    try {
      return load_document(path);
    } catch (const roughprob::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kUsage);
    }
  }();

  const roughprob::RoughVariable* var = nullptr;
  try {
    var = &doc.variable(variable_name);
  } catch (const roughprob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownName;
  }

  const roughprob::CdfMode mode = cdf_mode == "event"
                                      ? roughprob::CdfMode::event
                                      : roughprob::CdfMode::singleton_sum;

  std::cout << "variable " << variable_name << " on X = "
            << roughprob::Event::full(doc.space().universe()).str() << "\n\n";

  const auto rows = singleton_table(*var);
  std::size_t level_width = 1;
  std::size_t lower_width = 9;
  for (const auto& row : rows) {
    level_width = std::max(level_width, row.level.str().size());
    lower_width = std::max(lower_width, row.lower.str().size());
  }
  std::cout << "u" << std::string(level_width, ' ') << "P_low(U=u)"
            << std::string(lower_width - 8, ' ') << "P_up(U=u)\n";
  for (const auto& row : rows) {
    const std::string level = row.level.str();
    const std::string lower = row.lower.str();
    std::cout << level << std::string(level_width - level.size() + 1, ' ')
              << lower << std::string(lower_width - lower.size() + 2, ' ')
              << row.upper.str() << "\n";
  }
  std::cout << "\n";
  std::cout << "c = sum of lower masses = " << var->lower_mass_total().str()
            << "\n";
  std::cout << "d = sum of upper masses = " << var->upper_mass_total().str()
            << "\n\n";

  std::cout << "rough cdf ("
            << (mode == roughprob::CdfMode::event ? "event" : "singleton-sum")
            << " mode)\n";
  const auto profile = cdf_profile(*var, mode);
  print_cdf_component("F_low(u)", profile.lower);
  print_cdf_component("F_up(u)", profile.upper);
  std::cout << "\n";

  std::cout << "E*(U) = " << expectation(*var).str() << "\n";
  const roughprob::RoughPair direct = variance_direct(*var);
  const roughprob::RoughPair closed = variance_formula(*var);
  if (direct != closed) {
    std::cerr << "internal error: direct variance " << direct.str()
              << " differs from closed form " << closed.str() << "\n";
    return kInternal;
  }
  std::cout << "V*(U) = " << direct.str() << " (direct = closed form)\n";

  if (!doc.notes().empty()) {
    std::cout << "\nnotes:\n";
    for (const auto& note : doc.notes()) {
      std::cout << "- " << note << "\n";
    }
  }
  return kOk;
}

int run_verify(const roughprob::SuiteConfig& config) {
  try {
    const auto reports = roughprob::run_suite(config);
    std::cout << roughprob::format_reports(reports, config);
    return roughprob::all_laws_hold(reports) ? kOk : kCounterexample;
  } catch (const roughprob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "roughprob: exact rough-probability calculus on finite stochastic "
      "approximation spaces"};
  app.require_subcommand(1);

  std::string approx_file;
  std::string approx_event;
  auto* approx = app.add_subcommand(
      "approx", "Approximation operators and rough probability of an event");
  approx->add_option("file", approx_file, "space document (JSON)")->required();
  approx->add_option("--event", approx_event,
                     "event name from the document, or a comma-separated "
                     "element list (empty for the empty event)")
      ->required();

  std::string report_file;
  std::string report_variable;
  std::string report_cdf_mode = "singleton-sum";
  auto* report = app.add_subcommand(
      "report",
      "Singleton mass table, rough cdf, expectation and variance of a "
      "variable");
  report->add_option("file", report_file, "space document (JSON)")->required();
  report->add_option("--variable", report_variable, "variable name")
      ->required();
  report->add_option("--cdf-mode", report_cdf_mode, "cdf reading")
      ->check(CLI::IsMember({"singleton-sum", "event"}))
      ->capture_default_str();

  roughprob::SuiteConfig config;
  auto* verify = app.add_subcommand(
      "verify", "Sweep the law catalog over all small spaces");
  verify->add_option("--n-max", config.n_max,
                     "largest universe size to enumerate (exhaustive, <= 3; "
                     "4 with --allow-large)")
      ->capture_default_str();
  verify->add_option("--seeds", config.seeds,
                     "seeds for extra random measures (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--variables", config.variables_per_space,
                     "random variables per space beside the identity")
      ->capture_default_str();
  verify->add_flag("--include-cover-variant", config.include_cover_variant,
                   "also check the cover variant of L2.6.8 (a control law "
                   "expected to fail)");
  verify->add_flag("--include-negative-controls",
                   config.include_negative_controls,
                   "also check the fabricated control laws (expected to fail)");
  verify->add_flag("--allow-large", config.allow_large,
                   "permit --n-max 4 (50625 maps; slow)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (approx->parsed()) return run_approx(approx_file, approx_event);
  if (report->parsed())
    return run_report(report_file, report_variable, report_cdf_mode);
  return run_verify(config);
}
