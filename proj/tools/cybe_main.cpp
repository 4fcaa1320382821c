#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cybe/errors.hpp"
#include "cybe/json_io.hpp"

namespace {

constexpr const char* kVersion = "cybe 0.1.0";

struct CommonOpts {
  std::string field_spec;
  std::string format = "json";
};

cybe::FieldPtr resolve_field(const CommonOpts& opts) {
  if (opts.field_spec.empty()) return nullptr;
  return cybe::parse_field_spec(opts.field_spec);
}

void emit(const cybe::Json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << kVersion << "\n";
    for (const auto& [key, value] : doc.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
  }
}

// Resolves the input to canonical parameters, rewriting the tensor into the
// recognized basis when the algebra came as a raw tableau.
std::pair<cybe::CanonicalParams, cybe::Tensor2> to_canonical(const cybe::AlgebraInput& input,
                                                             const cybe::Tensor2& r) {
  if (input.canonical.has_value()) return {*input.canonical, r};
  const cybe::Recognition rec = cybe::recognize_lemma11(*input.algebra);
  return {rec.params, cybe::transform_coefficients(r, rec.basis.inverse())};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CYBE_BUDGET")) return std::stoull(env);
  return 10'000'000;
}

int cmd_check(const CommonOpts& opts, const std::string& algebra_spec,
              const std::string& tensor_spec) {
  const cybe::FieldPtr field = resolve_field(opts);
  const cybe::AlgebraInput input = cybe::parse_algebra_spec(algebra_spec, field);
  const cybe::Tensor2 r = cybe::parse_tensor_spec(tensor_spec, input.field);
  const cybe::LieAlgebra algebra =
      input.canonical.has_value() ? cybe::canonical_algebra(*input.canonical) : *input.algebra;
  const cybe::Tensor3 residual = cybe::cybe_residual(algebra, r);
  const auto nz = residual.first_nonzero();
  cybe::Json doc{{"solution", !nz.has_value()}};
  if (nz.has_value()) {
    const auto& [i, j, m, value] = *nz;
    doc["first_nonzero"] = cybe::Json{{"component", "C(" + std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + "," +
                                                        std::to_string(m + 1) + ")"},
                                      {"value", value.str()}};
  } else {
    doc["first_nonzero"] = nullptr;
  }
  emit(doc, opts.format);
  return nz.has_value() ? 1 : 0;
}

int cmd_classify(const CommonOpts& opts, const std::string& algebra_spec,
                 const std::string& tensor_spec) {
  const cybe::FieldPtr field = resolve_field(opts);
  const cybe::AlgebraInput input = cybe::parse_algebra_spec(algebra_spec, field);
  const cybe::Tensor2 r = cybe::parse_tensor_spec(tensor_spec, input.field);
  const auto [params, moved] = to_canonical(input, r);
  const cybe::Verdict v = cybe::classify(params, moved);
  emit(cybe::verdict_to_json(v), opts.format);
  return v.is_solution ? 0 : 1;
}

int cmd_bialgebra(const CommonOpts& opts, const std::string& algebra_spec,
                  const std::string& tensor_spec) {
  const cybe::FieldPtr field = resolve_field(opts);
  const cybe::AlgebraInput input = cybe::parse_algebra_spec(algebra_spec, field);
  const cybe::Tensor2 r = cybe::parse_tensor_spec(tensor_spec, input.field);
  const auto [params, moved] = to_canonical(input, r);
  const cybe::BialgebraVerdict v = cybe::is_triangular(params, moved);
  emit(cybe::bialgebra_verdict_to_json(v), opts.format);
  return v.triangular ? 0 : 1;
}

int cmd_normalize(const CommonOpts& opts, const std::string& algebra_spec) {
  const cybe::FieldPtr field = resolve_field(opts);
  const cybe::AlgebraInput input = cybe::parse_algebra_spec(algebra_spec, field);
  cybe::Recognition rec;
  if (input.canonical.has_value()) {
    rec.basis = cybe::Matrix3::identity(input.field);
    rec.params = *input.canonical;
  } else {
    rec = cybe::recognize_lemma11(*input.algebra);
  }
  const cybe::EigenForm eigen = cybe::eigen_normalize(rec.params);
  emit(cybe::Json{{"recognition", cybe::recognition_to_json(rec)},
                  {"eigen", cybe::eigenform_to_json(eigen)}},
       opts.format);
  return 0;
}

cybe::EquivalenceReport run_job(const cybe::FieldPtr& field,
                                const std::vector<cybe::CanonicalParams>& tuples,
                                cybe::TensorFilter filter, std::uint64_t budget, int threads,
                                const std::string& predicate) {
  const auto which = cybe::parse_named_predicate(predicate);
  if (!which.has_value())
    throw cybe::ParseError("unknown predicate '" + predicate +
                           "' (use thm2.1, thm3.1, thm4.1-i, thm4.1-iii)");
  cybe::EnumerationJob job;
  job.field = field;
  job.tuples = tuples;
  job.filter = filter;
  job.budget = budget;
  job.threads = threads;
  return cybe::run_equivalence(job, *which);
}

int cmd_enumerate(const CommonOpts& opts, const std::string& predicate, bool all_tuples,
                  const std::vector<std::string>& tuple_specs, const std::string& filter_name,
                  std::uint64_t budget, int threads) {
  const cybe::FieldPtr field = resolve_field(opts);
  if (!field) throw cybe::ParseError("enumerate requires --field");
  std::vector<cybe::CanonicalParams> tuples;
  if (all_tuples) {
    tuples = cybe::all_valid_tuples(field);
  } else {
    for (const auto& spec : tuple_specs) {
      cybe::Json arr = cybe::Json::array();
      std::size_t start = 0;
      while (true) {
        const std::size_t pos = spec.find(',', start);
        arr.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      tuples.push_back(cybe::params_from_json(arr, field));
    }
  }
  if (tuples.empty()) throw cybe::ParseError("no parameter tuples: use --all-tuples or --tuple");
  cybe::TensorFilter filter = cybe::TensorFilter::All;
  if (filter_name == "im(1-tau)" || filter_name == "im") filter = cybe::TensorFilter::ImOneMinusTau;
  else if (filter_name == "zero") filter = cybe::TensorFilter::ZeroOnly;
  else if (filter_name != "all") throw cybe::ParseError("unknown filter '" + filter_name + "'");
  const cybe::EquivalenceReport rep = run_job(field, tuples, filter, budget, threads, predicate);
  emit(cybe::report_to_json(field, filter, predicate, rep), opts.format);
  return rep.mismatch_count == 0 ? 0 : 1;
}

int cmd_report(const CommonOpts& opts, const std::string& jobs_path) {
  std::ifstream in(jobs_path);
  if (!in.good()) throw cybe::ParseError("cannot open '" + jobs_path + "'");
  cybe::Json doc;
  try {
    doc = cybe::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw cybe::ParseError("'" + jobs_path + "': " + e.what());
  }
  if (!doc.contains("jobs") || !doc.at("jobs").is_array())
    throw cybe::ParseError("batch document needs a 'jobs' array");
  cybe::Json reports = cybe::Json::array();
  std::uint64_t mismatches = 0;
  for (const auto& jobdoc : doc.at("jobs")) {
    const cybe::FieldPtr field = cybe::field_from_json(jobdoc.at("field"));
    std::vector<cybe::CanonicalParams> tuples;
    const auto& tuples_doc = jobdoc.at("tuples");
    if (tuples_doc.is_string() && tuples_doc.get<std::string>() == "all") {
      tuples = cybe::all_valid_tuples(field);
    } else {
      for (const auto& t : tuples_doc) tuples.push_back(cybe::params_from_json(t, field));
    }
    cybe::TensorFilter filter = cybe::TensorFilter::All;
    if (jobdoc.value("filter", "all") == std::string("im(1-tau)"))
      filter = cybe::TensorFilter::ImOneMinusTau;
    const std::string predicate = jobdoc.at("predicate").get<std::string>();
    const cybe::EquivalenceReport rep =
        run_job(field, tuples, filter, jobdoc.value("budget", default_budget()),
                jobdoc.value("threads", 1), predicate);
    mismatches += rep.mismatch_count;
    reports.push_back(cybe::report_to_json(field, filter, predicate, rep));
  }
  emit(cybe::Json{{"reports", reports}}, opts.format);
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CYBE residuals, classification and Lie-bialgebra checks for "
               "3-dimensional Lie algebras with 2-dimensional derived algebra"};
  app.require_subcommand(1);
  app.fallthrough(true);

  CommonOpts opts;
  app.add_option("--field", opts.field_spec, "Field spec: q, gf:p, gf:p^2[:modulus=c0,c1]");
  app.add_option("--format", opts.format, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string algebra_spec, tensor_spec = "0", predicate = "thm2.1";
  std::string filter_name = "all", jobs_path;
  std::vector<std::string> tuple_specs;
  bool all_tuples = false;
  std::uint64_t budget = default_budget();
  int threads = 1;

  auto* check = app.add_subcommand("check", "Evaluate the CYBE residual of a tensor");
  check->add_option("--algebra", algebra_spec, "canonical:a,b,g,d or a JSON document path")
      ->required();
  check->add_option("--tensor", tensor_spec, "0, aliases p=..,s=.., or a JSON document path");

  auto* classify = app.add_subcommand("classify", "Closed-form classification of a tensor");
  classify->add_option("--algebra", algebra_spec)->required();
  classify->add_option("--tensor", tensor_spec);

  auto* bialg = app.add_subcommand("bialgebra", "Coboundary/triangular verdict for r in Im(1-tau)");
  bialg->add_option("--algebra", algebra_spec)->required();
  bialg->add_option("--tensor", tensor_spec);

  auto* normalize = app.add_subcommand("normalize", "Canonical basis recognition and eigen form");
  normalize->add_option("--algebra", algebra_spec)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Oracle sweep against a named predicate");
  enumerate->add_option("--predicate", predicate, "thm2.1, thm3.1, thm4.1-i, thm4.1-iii");
  enumerate->add_flag("--all-tuples", all_tuples, "Sweep every tuple with nonzero determinant");
  enumerate->add_option("--tuple", tuple_specs, "Parameter tuple a,b,g,d (repeatable)");
  enumerate->add_option("--filter", filter_name, "all, im(1-tau), or zero");
  enumerate->add_option("--budget", budget, "Residual evaluations allowed per tuple");
  enumerate->add_option("--threads", threads, "Partitions processed in parallel");

  auto* report = app.add_subcommand("report", "Batch sweep over a jobs document");
  report->add_option("--jobs", jobs_path, "JSON file with a 'jobs' array")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(opts, algebra_spec, tensor_spec);
    if (classify->parsed()) return cmd_classify(opts, algebra_spec, tensor_spec);
    if (bialg->parsed()) return cmd_bialgebra(opts, algebra_spec, tensor_spec);
    if (normalize->parsed()) return cmd_normalize(opts, algebra_spec);
    if (enumerate->parsed())
      return cmd_enumerate(opts, predicate, all_tuples, tuple_specs, filter_name, budget, threads);
    if (report->parsed()) return cmd_report(opts, jobs_path);
  } catch (const cybe::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cybe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
