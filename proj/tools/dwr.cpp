// dwr: radii, bounds, block bounds, shell sampling, verification sweeps and
// the printed-example table from the command line.
//
// Exit codes: 0 success, 1 violations or regression mismatch, 2 bad input
// (usage, parse, dimension or domain error), 3 I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwr/dwr.hpp"

namespace {

using dwr::Json;

enum Exit { ok = 0, violated = 1, bad_input = 2, io_failure = 3 };

void emit(const Json& j) { std::cout << dwr::to_canonical_json(j); }

std::string num(double v) { return dwr::format_double(v); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------

struct RadiusArgs {
  std::string input;
  std::string what = "all";
  std::vector<std::string> tuple;
  std::optional<double> p;
  int restarts = 64;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::string format = "json";
};

int cmd_radius(const RadiusArgs& a) {
  const dwr::SphereRadiusOptions opt{a.restarts, a.seed, a.tol};
  std::vector<dwr::Matrix> tuple;
  for (const auto& path : a.tuple) tuple.push_back(dwr::load_matrix(path));
  std::optional<dwr::Matrix> s;
  if (!a.input.empty()) s = dwr::load_matrix(a.input);

  const bool want_single = a.what != "we";
  if (want_single && !s) throw dwr::ParseError("radius: --input is required for --what " + a.what);
  if (a.what == "we" && tuple.empty()) {
    if (!s) throw dwr::ParseError("radius: --what we needs --tuple or --input");
    tuple.push_back(*s);
  }

  Json out = Json::object();
  if (s) out["input"] = a.input;
  if (a.what == "w" || a.what == "all") out["w"] = dwr::radius_to_json(dwr::numerical_radius(*s));
  if (a.what == "norm" || a.what == "all") out["norm"] = Json{{"value", dwr::operator_norm(*s)}};
  if (a.what == "dw" || a.what == "all") out["dw"] = dwr::radius_to_json(dwr::dw_radius(*s, opt));
  if (!tuple.empty() && (a.what == "we" || a.what == "all")) {
    out["tuple"] = a.tuple;
    if (a.p && *a.p != 2.0) {
      Json r = dwr::radius_to_json(dwr::gen_radius_p(tuple, *a.p, opt));
      r["p"] = *a.p;
      out["wp"] = std::move(r);
    } else {
      out["we"] = dwr::radius_to_json(dwr::euclid_radius(tuple, opt));
    }
  }

  if (a.format == "json") {
    emit(out);
  } else {
    for (const char* key : {"w", "norm", "dw", "we", "wp"}) {
      if (!out.contains(key)) continue;
      const Json& r = out[key];
      std::cout << key << ' ' << num(r["value"].get<double>());
      if (r.contains("theta")) std::cout << " theta=" << num(r["theta"].get<double>());
      if (r.contains("restarts_used")) std::cout << " restarts=" << r["restarts_used"].get<int>();
      std::cout << '\n';
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::string input;
  double alpha = 0.5;
  double r = 2.0;
  double p = 1.0;
  int restarts = 256;
  std::uint64_t seed = 1;
  std::string format = "json";
};

int cmd_bounds(const BoundsArgs& a) {
  dwr::ChainOptions opt;
  opt.restarts = a.restarts;
  opt.seed = a.seed;
  const auto rep = dwr::bounds_report(dwr::load_matrix(a.input), a.alpha, a.r, a.p, opt);
  if (a.format == "json") {
    emit(dwr::bounds_report_to_json(rep));
  } else {
    std::printf("dw_est %s\n", num(rep.dw_est).c_str());
    for (const auto& c : rep.records)
      std::printf("%-40s %-8s %-24s %-24s %s\n", c.key().c_str(), dwr::to_string(c.kind), num(c.bound).c_str(),
                  num(c.estimate).c_str(), c.satisfied ? "ok" : "VIOLATED");
    std::printf("chain_ok %s\n", rep.chain_ok ? "true" : "false");
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct BlockArgs {
  std::string spec;
  std::string rule = "thm8";
  std::string format = "json";
};

Json reduction_to_json(const dwr::ReductionMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_block(const BlockArgs& a) {
  const dwr::BlockMatrixSpec spec = dwr::load_block_spec(a.spec);
  Json out{{"rule", a.rule}, {"n", spec.n()}};
  if (a.rule == "cor5") {
    out["reduction"] = reduction_to_json(dwr::reduction_matrix(spec, dwr::ReductionRule::thm9));
    out["dw_upper"] = dwr::dw_2x2_cor5(spec);
  } else {
    const auto rule = dwr::parse_reduction_rule(a.rule);
    if (!rule) throw dwr::ParseError("block: unknown rule '" + a.rule + "'");
    out["reduction"] = reduction_to_json(dwr::reduction_matrix(spec, *rule));
    switch (*rule) {
      case dwr::ReductionRule::thm8:
        out["dw_upper"] = dwr::dw_block_upper_thm8(spec);
        if (spec.n() == 2) out["closed_form"] = dwr::cor2_closed_form(spec);
        break;
      case dwr::ReductionRule::thm9: {
        const auto b = dwr::dw_block_sandwich_thm9(spec);
        out["dw_lower"] = b.lower;
        out["dw_upper"] = b.upper;
        break;
      }
      default: out["w_upper"] = dwr::w_block_upper(spec, *rule); break;
    }
  }
  if (a.format == "json") {
    emit(out);
  } else {
    std::cout << "rule " << a.rule << '\n';
    for (const auto& row : out["reduction"]) {
      for (const auto& v : row) std::cout << ' ' << num(v.get<double>());
      std::cout << '\n';
    }
    for (const char* key : {"w_upper", "dw_lower", "dw_upper", "closed_form"})
      if (out.contains(key)) std::cout << key << ' ' << num(out[key].get<double>()) << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct ShellArgs {
  std::string input;
  std::size_t count = 100000;
  std::uint64_t seed = 7;
  std::string out;
};

int cmd_shell(const ShellArgs& a) {
  const auto pts = dwr::sample_shell(dwr::load_matrix(a.input), a.count, a.seed);
  if (a.out.empty()) {
    dwr::write_shell_csv(std::cout, pts);
  } else {
    std::ostringstream os;
    dwr::write_shell_csv(os, pts);
    dwr::write_text_file(a.out, os.str());
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string ensemble;
  std::size_t dim = 4;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string report;
  std::string bounds = "all";
  int restarts = 256;
};

int cmd_verify(const VerifyArgs& a) {
  const auto kind = dwr::parse_ensemble(a.ensemble);
  if (!kind) throw dwr::ParseError("verify: unknown ensemble '" + a.ensemble + "'");
  const dwr::EnsembleConfig cfg{*kind, a.dim, a.count, a.seed};
  dwr::ChainOptions opt;
  opt.restarts = a.restarts;
  if (a.bounds != "all") opt.families = split_commas(a.bounds);

  const auto rep = dwr::run_chain(dwr::generate(cfg), opt);
  const Json config{{"ensemble", a.ensemble}, {"dim", a.dim},  {"count", a.count},
                    {"seed", a.seed},         {"options", dwr::options_to_json(opt)}};
  const std::string text = dwr::to_canonical_json(dwr::chain_report_to_json(rep, config));
  if (a.report.empty())
    std::cout << text;
  else
    dwr::write_text_file(a.report, text);

  std::cerr << a.count << " matrices, " << rep.violations << " violations\n";
  for (const auto& [id, n] : rep.violations_by_id) std::cerr << "  " << id << ": " << n << '\n';
  return rep.violations == 0 ? ok : violated;
}

// ---------------------------------------------------------------------------

int cmd_paper(const std::string& format) {
  const auto rep = dwr::paper_regression();
  if (format == "json") {
    emit(dwr::regression_to_json(rep));
  } else {
    std::printf("%-26s %-12s %-20s %-10s %s\n", "anchor", "printed", "computed", "|delta|", "status");
    for (const auto& r : rep.rows)
      std::printf("%-26s %-12.6g %-20.12g %-10.2e %s%s%s\n", r.anchor.c_str(), r.printed, r.computed, r.delta,
                  dwr::to_string(r.status), r.note.empty() ? "" : "  ", r.note.c_str());
  }
  return rep.ok() ? ok : violated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and Davis-Wielandt radii of complex matrices"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "text"};

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Numerical radius, norm, Davis-Wielandt and tuple radii");
  radius->add_option("--input", ra.input, "MatrixFile");
  radius->add_option("--what", ra.what)->check(CLI::IsMember({"w", "norm", "dw", "we", "all"}));
  radius->add_option("--tuple", ra.tuple, "MatrixFiles forming a tuple");
  radius->add_option("--p", ra.p, "exponent of w_p (with --what we)");
  radius->add_option("--restarts", ra.restarts)->check(CLI::PositiveNumber);
  radius->add_option("--seed", ra.seed);
  radius->add_option("--tol", ra.tol);
  radius->add_option("--format", ra.format)->check(CLI::IsMember(formats));

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Every single-matrix bound against the radius estimates");
  bounds->add_option("--input", ba.input, "MatrixFile")->required();
  bounds->add_option("--alpha", ba.alpha);
  bounds->add_option("--r", ba.r);
  bounds->add_option("--p", ba.p);
  bounds->add_option("--restarts", ba.restarts)->check(CLI::PositiveNumber);
  bounds->add_option("--seed", ba.seed);
  bounds->add_option("--format", ba.format)->check(CLI::IsMember(formats));

  BlockArgs bla;
  auto* block = app.add_subcommand("block", "Block-matrix reduction bounds");
  block->add_option("--spec", bla.spec, "BlockFile")->required();
  block->add_option("--rule", bla.rule)
      ->check(CLI::IsMember({"eq3.1a", "eq3.1b", "eq3.1c", "thm7", "thm8", "thm9", "cor5"}));
  block->add_option("--format", bla.format)->check(CLI::IsMember(formats));

  ShellArgs sa;
  auto* shell = app.add_subcommand("shell", "Sample the Davis-Wielandt shell to CSV");
  shell->add_option("--input", sa.input, "MatrixFile")->required();
  shell->add_option("--count", sa.count)->check(CLI::PositiveNumber);
  shell->add_option("--seed", sa.seed);
  shell->add_option("--out", sa.out, "CSV path (stdout when omitted)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check every bound on a random ensemble");
  verify->add_option("--ensemble", va.ensemble)->required();
  verify->add_option("--dim", va.dim);
  verify->add_option("--count", va.count);
  verify->add_option("--seed", va.seed);
  verify->add_option("--report", va.report, "report path (stdout when omitted)");
  verify->add_option("--bounds", va.bounds, "comma-separated bound families or 'all'");
  verify->add_option("--restarts", va.restarts)->check(CLI::PositiveNumber);

  std::string pformat = "text";
  auto* paper = app.add_subcommand("paper", "Recompute the printed example values");
  paper->add_option("--format", pformat)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (*radius) return cmd_radius(ra);
    if (*bounds) return cmd_bounds(ba);
    if (*block) return cmd_block(bla);
    if (*shell) return cmd_shell(sa);
    if (*verify) return cmd_verify(va);
    if (*paper) return cmd_paper(pformat);
  } catch (const dwr::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const dwr::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const dwr::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return bad_input;
  } catch (const dwr::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return bad_input;
  } catch (const dwr::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return violated;
  }
  return bad_input;
}
