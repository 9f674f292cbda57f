#include "tfs/cli.hpp"

#include <sstream>

#include "tfs/errors.hpp"
#include "tfs/jobfile.hpp"
#include "tfs/series.hpp"

namespace tfs {

namespace {

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void emit(std::ostream& out, bool machine) const {
    for (const auto& [key, value] : fields)
      out << key << (machine ? "=" : ": ") << value << "\n";
  }
};

struct Options {
  std::string verb;
  std::string job_path;
  bool machine = false;
  std::uint64_t seed = 0x5eed;
};

Ordinal count_of(const Ordinal& top) { return top.is_finite() ? top : successor(top); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string pairing_string(const std::vector<std::pair<Ordinal, Ordinal>>& pairing) {
  std::vector<std::string> parts;
  for (const auto& [r, s] : pairing) parts.push_back(format(r) + ":" + format(s));
  return join(parts, ",");
}

std::string series_terms(const Series& series) {
  std::vector<std::string> parts;
  if (std::holds_alternative<FiniteSeries>(series)) {
    for (const auto& g : std::get<FiniteSeries>(series).chain())
      parts.push_back(std::to_string(g.order()));
    return join(parts, ",");
  }
  const TowerSeries& tower = std::get<TowerSeries>(series);
  if (!tower.is_enumerated()) {
    for (const auto& s : tower.explicit_supports()) parts.push_back(format(s));
    return join(parts, "; ");
  }
  for (const auto& seg : tower.enumeration().segments()) parts.push_back(format(seg));
  return "enumeration " + join(parts, " ");
}

void report_validation(Report& report, const std::string& prefix, const ValidationReport& vr) {
  report.add(prefix + ".valid", vr.ok() ? "yes" : "no");
  std::size_t k = 0;
  for (const auto& v : vr.violations)
    report.add(prefix + ".violation." + std::to_string(++k),
               "index " + format(v.index) + ": " + v.clause + " (" + v.detail + ")");
  if (!vr.limit_indices_checked.empty()) {
    std::vector<std::string> checked;
    for (const auto& idx : vr.limit_indices_checked) checked.push_back(format(idx));
    report.add(prefix + ".limit-checks", join(checked, ","));
  }
}

int require_series(const JobSpec& job, std::size_t count, std::ostream& err) {
  if (job.series.size() == count) return 0;
  err << "error: this verb needs exactly " << count << " series section(s), job has "
      << job.series.size() << "\n";
  return 2;
}

int cmd_validate(const JobSpec& job, const Options& opt, std::ostream& out, std::ostream& err) {
  if (job.series.empty()) {
    err << "error: validate needs at least one series section\n";
    return 2;
  }
  Report report;
  bool all_ok = true;
  for (std::size_t k = 0; k < job.series.size(); ++k) {
    ValidationReport vr = validate(job.series[k], opt.seed);
    report_validation(report, "series" + std::to_string(k + 1), vr);
    all_ok = all_ok && vr.ok();
  }
  report.add("verdict", all_ok ? "valid" : "invalid");
  report.emit(out, opt.machine);
  return all_ok ? 0 : 1;
}

int cmd_refine(const JobSpec& job, const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_series(job, 2, err)) return rc;
  Report report;
  if (job.is_perm()) {
    const auto& first = std::get<FiniteSeries>(job.series[0]);
    const auto& second = std::get<FiniteSeries>(job.series[1]);
    FiniteRefinement refinement = schreier_refine(first, second);
    report.add("refined1.length", format(refinement.first_order_type));
    report.add("refined2.length", format(refinement.second_order_type));
    report.add("refined1.orders", series_terms(Series(refinement.refined_first)));
    report.add("refined2.orders", series_terms(Series(refinement.refined_second)));
    report.add("refined1.is-refinement",
               is_refinement(refinement.refined_first, first) ? "yes" : "no");
    report.add("refined2.is-refinement",
               is_refinement(refinement.refined_second, second) ? "yes" : "no");
    report.add("pairing", pairing_string(refinement.pairing));
    std::vector<std::string> factors;
    for (const auto& row : refinement.factor_table) factors.push_back(row.factor.name());
    report.add("factors", join(factors, ","));
  } else {
    const auto& first = std::get<TowerSeries>(job.series[0]);
    const auto& second = std::get<TowerSeries>(job.series[1]);
    TowerRefinement refinement = schreier_refine(first, second);
    report.add("refined1.length", format(count_of(refinement.first_order_type)));
    report.add("refined2.length", format(count_of(refinement.second_order_type)));
    std::vector<std::string> pairs;
    for (std::uint64_t k = 1; k <= 3 && Ordinal(k) < first.top_index(); ++k)
      pairs.push_back(format(Ordinal(k)) + ":" + format(refinement.pair_step(Ordinal(k))));
    report.add("pairing-sample", join(pairs, ","));
  }
  report.add("verdict", "refined");
  report.emit(out, opt.machine);
  return 0;
}

int cmd_zassenhaus(const JobSpec& job, const Options& opt, std::ostream& out, std::ostream& err) {
  if (!job.zassenhaus) {
    err << "error: zassenhaus needs a zassenhaus section\n";
    return 2;
  }
  const auto& z = *job.zassenhaus;
  ZassenhausResult result =
      zassenhaus(z.first_outer, z.first_inner, z.second_outer, z.second_inner);
  Report report;
  report.add("first.upper.order", std::to_string(result.first_upper.order()));
  report.add("first.lower.order", std::to_string(result.first_lower.order()));
  report.add("second.upper.order", std::to_string(result.second_upper.order()));
  report.add("second.lower.order", std::to_string(result.second_lower.order()));
  report.add("factor", result.factor.name());
  report.add("factor.order", std::to_string(result.factor.order));
  report.add("isomorphic", "yes");
  report.emit(out, opt.machine);
  return 0;
}

int cmd_factors(const JobSpec& job, const Options& opt, std::ostream& out, std::ostream& err) {
  if (job.series.empty()) {
    err << "error: factors needs a series section\n";
    return 2;
  }
  const Series& series = job.series.front();
  Report report;
  ValidationReport vr = validate(series, opt.seed);
  report_validation(report, "series1", vr);
  if (!vr.ok()) {
    report.add("verdict", "invalid");
    report.emit(out, opt.machine);
    return 1;
  }
  CompositionCertificate cert = is_composition_series(series);
  std::size_t k = 0;
  for (const auto& entry : cert.entries)
    report.add("factor." + std::to_string(++k),
               "index " + format(entry.index) + ": " + entry.factor +
                   (entry.simple ? " (simple)" : " (not simple)"));
  report.add("composition", cert.is_composition ? "yes" : "no");
  report.add("verdict", "ok");
  report.emit(out, opt.machine);
  return 0;
}

void report_verdict(Report& report, const JordanHolderVerdict& verdict) {
  report.add("length1", format(verdict.first_count));
  report.add("length2", format(verdict.second_count));
  report.add("top1", format(verdict.first_top));
  report.add("top2", format(verdict.second_top));
  report.add("lengths-equal", verdict.tops_equal ? "yes" : "no");
  report.add("cardinality-equal", verdict.same_cardinality ? "yes" : "no");
  report.add("isomorphic", verdict.isomorphic ? "yes" : "no");
  report.add("factors", join(verdict.factors, ","));
  report.add("pairing", pairing_string(verdict.pairing));
}

int cmd_jh_check(const JobSpec& job, const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_series(job, 2, err)) return rc;
  JordanHolderVerdict verdict = jordan_holder_check(job.series[0], job.series[1]);
  Report report;
  report_verdict(report, verdict);
  report.add("verdict", verdict.isomorphic ? "isomorphic" : "not-isomorphic");
  report.emit(out, opt.machine);
  return verdict.isomorphic ? 0 : 1;
}

int cmd_demo(const Options& opt, std::ostream& out) {
  // One tower group, two enumerations: the identity order and the order with
  // position 0 moved behind everything else. Lengths w+1 and w+2.
  TowerGroup group(Ordinal::omega(),
                   {{{Ordinal(0), Ordinal(1)}, SimpleLabel::cyclic(3)},
                    {{Ordinal(1), Ordinal::omega()}, SimpleLabel::cyclic(2)}});
  TowerSeries first =
      series_from_bijection(group, PositionBijection::identity(Ordinal::omega()));
  TowerSeries second = series_from_bijection(
      group,
      PositionBijection::from_moves(Ordinal::omega(), {parse_tower_move("[0,1) end")}));

  Report report;
  report.add("group.bound", format(group.bound()));
  std::vector<std::string> labels;
  for (const auto& [iv, label] : group.pieces())
    labels.push_back(format(iv) + " " + label.name());
  report.add("group.labels", join(labels, ", "));
  report.add("series1.order", series_terms(Series(first)));
  report.add("series2.order", series_terms(Series(second)));
  report.add("series1.length", format(first.term_count()));
  report.add("series2.length", format(second.term_count()));

  ValidationReport v1 = validate(first, opt.seed);
  ValidationReport v2 = validate(second, opt.seed);
  report_validation(report, "series1", v1);
  report_validation(report, "series2", v2);
  report.add("series1.composition", is_composition_series(first).is_composition ? "yes" : "no");
  report.add("series2.composition", is_composition_series(second).is_composition ? "yes" : "no");

  JordanHolderVerdict verdict = jordan_holder_check(first, second);
  report_verdict(report, verdict);

  bool pass = v1.ok() && v2.ok() && verdict.isomorphic && !verdict.tops_equal &&
              verdict.same_cardinality;
  report.add("verdict", pass ? "isomorphic, n!=m, |n|=|m|" : "demonstration failed");
  report.emit(out, opt.machine);
  return pass ? 0 : 1;
}

int dispatch(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.verb == "demo-transfinite") return cmd_demo(opt, out);
  bool known = opt.verb == "validate" || opt.verb == "refine" || opt.verb == "zassenhaus" ||
               opt.verb == "factors" || opt.verb == "jh-check";
  if (!known) {
    err << "error: unknown verb '" << opt.verb << "'\n";
    return 2;
  }
  if (opt.job_path.empty()) {
    err << "error: verb '" << opt.verb << "' needs a job file\n";
    return 2;
  }
  // Anything wrong with the job file itself (unreadable, syntax, unresolved
  // references) is an input error.
  std::optional<JobSpec> job;
  try {
    job = load_job(opt.job_path);
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  if (opt.verb == "validate") return cmd_validate(*job, opt, out, err);
  if (opt.verb == "refine") return cmd_refine(*job, opt, out, err);
  if (opt.verb == "zassenhaus") return cmd_zassenhaus(*job, opt, out, err);
  if (opt.verb == "factors") return cmd_factors(*job, opt, out, err);
  return cmd_jh_check(*job, opt, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto flag_value = [&](const std::string& name) -> std::optional<std::string> {
      if (arg == name) {
        if (i + 1 >= args.size()) return std::nullopt;
        return args[++i];
      }
      if (arg.rfind(name + "=", 0) == 0) return arg.substr(name.size() + 1);
      return std::nullopt;
    };
    if (arg == "--format" || arg.rfind("--format=", 0) == 0) {
      auto value = flag_value("--format");
      if (!value || (*value != "text" && *value != "machine")) {
        err << "error: --format takes 'text' or 'machine'\n";
        return 2;
      }
      opt.machine = *value == "machine";
    } else if (arg == "--seed" || arg.rfind("--seed=", 0) == 0) {
      auto value = flag_value("--seed");
      if (!value) {
        err << "error: --seed takes a natural number\n";
        return 2;
      }
      try {
        opt.seed = std::stoull(*value);
      } catch (...) {
        err << "error: --seed takes a natural number\n";
        return 2;
      }
    } else if (!arg.empty() && arg[0] == '-') {
      err << "error: unknown flag '" << arg << "'\n";
      return 2;
    } else {
      positional.push_back(arg);
    }
  }
  if (positional.empty()) {
    err << "usage: tfseries <validate|refine|zassenhaus|factors|jh-check|demo-transfinite>"
           " [job-file] [--format text|machine] [--seed <nat>]\n";
    return 2;
  }
  opt.verb = positional[0];
  if (positional.size() > 1) opt.job_path = positional[1];
  if (positional.size() > 2) {
    err << "error: too many arguments\n";
    return 2;
  }

  try {
    return dispatch(opt, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    out << (opt.machine ? "verdict=error\nreason=" : "verdict: error\nreason: ") << e.what()
        << "\n";
    return 1;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tfs
