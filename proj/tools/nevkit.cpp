// nevkit command-line front end. Exit codes: 0 pass, 1 property failure
// (witness on stderr), 2 usage or input error.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nevkit/blaschke.hpp"
#include "nevkit/covering.hpp"
#include "nevkit/divided_differences.hpp"
#include "nevkit/errors.hpp"
#include "nevkit/generators.hpp"
#include "nevkit/interpolator.hpp"
#include "nevkit/io.hpp"
#include "nevkit/pipeline.hpp"
#include "nevkit/separation.hpp"

using namespace nevkit;

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string majorant;
  std::string grid;
  std::string chain;
  int n = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  unsigned threads = 0;
  std::string kind = "radial_exponential";
  GeneratorParams gen;
  std::vector<double> z;
  int grid_size = 0;
};

class PropertyFailure : public std::exception {
 public:
  PropertyFailure(Json report, std::string message, std::vector<std::size_t> witness)
      : report_(std::move(report)), message_(std::move(message)), witness_(std::move(witness)) {}
  const char* what() const noexcept override { return message_.c_str(); }
  const Json& report() const { return report_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Json report_;
  std::string message_;
  std::vector<std::size_t> witness_;
};

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << dump(j);
  } else {
    write_text_file(o.out, dump(j));
  }
}

LabeledSequence load_sequence(const Options& o) {
  if (o.input.empty()) throw InvalidInput("--input is required");
  return sequence_from_json(read_json_file(o.input));
}

HarmonicMajorant load_majorant(const Options& o) {
  if (o.majorant.empty()) return HarmonicMajorant(kLog3);
  auto h = majorant_from_json(read_json_file(o.majorant));
  if (h.max_weight() > kMaxAtomWeight) throw InvalidInput("majorant atom weight above 1e3");
  return h;
}

std::optional<HarmonicMajorant> load_optional_majorant(const Options& o) {
  if (o.majorant.empty()) return std::nullopt;
  return load_majorant(o);
}

Json index_array(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

void cmd_gen(const Options& o) {
  auto kind = parse_sequence_kind(o.kind);
  if (!kind) throw InvalidInput("unknown --kind '" + o.kind + "'");
  emit(o, to_json(generate_sequence(*kind, o.gen, o.seed)));
}

void cmd_check_sep(const Options& o) {
  const auto seq = load_sequence(o);
  const auto h = load_majorant(o);
  const auto sep = weakly_separated(seq.points(), h);
  const auto count = count_condition(seq.points(), h);
  Json j{{"weakly_separated", sep.separated},
         {"count", count.max_count},
         {"count_witness", count.witness},
         {"majorant", to_json(h)}};
  if (sep.violation) {
    j["violation"] = Json::array({sep.violation->first, sep.violation->second});
    throw PropertyFailure(j, "sequence is not weakly separated",
                          {sep.violation->first, sep.violation->second});
  }
  emit(o, j);
}

void cmd_partition(const Options& o) {
  const auto seq = load_sequence(o);
  const auto h = load_majorant(o);
  const auto result = partition_weakly_separated(seq.points(), h, o.n);
  Json j = to_json(result, seq);
  if (!result.verified) throw PropertyFailure(j, "a part failed the separation check", {});
  emit(o, j);
}

void cmd_cover(const Options& o) {
  const auto seq = load_sequence(o);
  const auto parts = seq.part_points();
  const auto h = load_optional_majorant(o).value_or(fit_separation_majorant(parts));
  CoveringOptions opts;
  const auto cov = build_covering(parts, h, opts);
  const auto rep = verify_covering(cov, parts);
  Json j{{"covering", to_json(cov)}, {"report", to_json(rep)}};
  if (!rep.all_passed()) throw PropertyFailure(j, "covering failed verification", {});
  emit(o, j);
}

void cmd_divdiff(const Options& o) {
  const auto seq = load_sequence(o);
  const auto h = load_majorant(o);
  XnOptions xo;
  xo.budget = o.budget;
  xo.threads = o.threads;
  emit(o, to_json(xn_statistic(seq, o.n, h, xo)));
}

void cmd_margin(const Options& o) {
  const auto seq = load_sequence(o);
  const auto& pts = seq.points();
  const auto h = load_majorant(o);
  Json entries = Json::array();
  std::optional<std::size_t> first_fail;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto m = interpolation_margin(pts, i, h);
    entries.push_back(Json{{"index", i},
                           {"margin", m.margin},
                           {"log_margin", std::isfinite(m.log_margin) ? Json(m.log_margin) : Json()},
                           {"margin_one_minus_abs", m.margin_one_minus_abs},
                           {"log_threshold", m.log_threshold},
                           {"satisfied", m.satisfied},
                           {"satisfied_one_minus_abs", m.satisfied_one_minus_abs}});
    if (!m.satisfied && !first_fail) first_fail = i;
  }
  const auto grid = o.grid.empty() ? MajorantGrid::standard() : grid_from_json(read_json_file(o.grid));
  const auto found = search_majorant(grid, [&](const HarmonicMajorant& cand) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!interpolation_margin(pts, i, cand).satisfied) return false;
    }
    return true;
  });
  Json j{{"majorant", to_json(h)},
         {"satisfied", !first_fail},
         {"entries", entries},
         {"grid_majorant", found ? to_json(*found) : Json("no witness found")}};
  if (first_fail) throw PropertyFailure(j, "margin below e^{-H} at point " + std::to_string(*first_fail), {*first_fail});
  emit(o, j);
}

void cmd_interpolate(const Options& o) {
  const auto seq = load_sequence(o);
  const auto& values = seq.require_values();
  const auto idx = seq.part_indices();
  std::vector<std::vector<DiskPoint>> parts;
  std::vector<std::vector<Complex>> omega;
  for (const auto& p : idx) {
    auto& pp = parts.emplace_back();
    auto& ww = omega.emplace_back();
    for (auto i : p) {
      pp.push_back(seq.points()[i]);
      ww.push_back(values[i]);
    }
  }
  const auto h = load_optional_majorant(o).value_or(
      combine(fit_separation_majorant(parts), 1.0, std::log(2.0)));
  const auto chain = chained_solve(parts, omega, h);
  Json j = to_json(chain);
  j["residual"] = max_node_residual(chain, omega);
  j["stage_bounds"] = to_json(stage_bound_report(chain, h));
  emit(o, j);
}

void cmd_eval(const Options& o) {
  if (o.chain.empty() && o.input.empty()) throw InvalidInput("--chain is required");
  const auto chain = chain_from_json(read_json_file(o.chain.empty() ? o.input : o.chain));
  Json values = Json::array();
  auto one = [&](const DiskPoint& z) {
    const Complex f = chain.evaluate(z);
    values.push_back(Json{{"z", to_json(z)}, {"f", to_json(f)}});
  };
  if (!o.z.empty()) {
    if (o.z.size() != 2) throw InvalidInput("--z takes re im");
    one(DiskPoint(o.z[0], o.z[1]));
  }
  if (o.grid_size > 0) {
    const int g = o.grid_size;
    for (int a = 0; a < g; ++a) {
      for (int b = 0; b < g; ++b) {
        const double re = -1.0 + (2.0 * a + 1.0) / g;
        const double im = -1.0 + (2.0 * b + 1.0) / g;
        if (std::hypot(re, im) < 1.0 - 1e-9) one(DiskPoint(re, im));
      }
    }
  }
  emit(o, Json{{"values", values}});
}

void cmd_verify_main(const Options& o, bool from_generator) {
  LabeledSequence seq;
  if (from_generator) {
    auto kind = parse_sequence_kind(o.kind);
    if (!kind) throw InvalidInput("unknown --kind '" + o.kind + "'");
    seq = generate_sequence(*kind, o.gen, o.seed);
  } else {
    seq = load_sequence(o);
  }
  const auto h = load_majorant(o);
  MainTheoremOptions mo;
  mo.n = o.n;
  mo.budget = o.budget;
  mo.seed = o.seed;
  mo.threads = o.threads;
  Json j = verify_main_theorem(seq, h, mo);
  if (!report_passed(j)) throw PropertyFailure(j, "verification failed", {});
  emit(o, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nevkit: interpolation toolkit for finite sequences in the unit disk"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--input,-i", o.input, "input JSON");
    c->add_option("--out,-o", o.out, "output JSON (default stdout)");
    c->add_option("--majorant", o.majorant, "majorant JSON (default constant log 3)");
    c->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  };
  auto add_gen = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "radial_exponential | random_union | clustered");
    c->add_option("--m", o.gen.m, "point count");
    c->add_option("--parts", o.gen.n, "parts (random_union) or points per cluster (clustered)");
    c->add_option("--clusters", o.gen.clusters, "cluster count");
    c->add_option("--intra", o.gen.intra, "cluster diameter");
    c->add_option("--separation", o.gen.separation, "minimum rho inside a part");
    c->add_option("--max-radius", o.gen.max_radius, "sampling radius");
  };

  auto* gen = app.add_subcommand("gen", "generate a sequence");
  add_common(gen);
  add_gen(gen);
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--n", o.gen.n, "alias for --parts");

  auto* check = app.add_subcommand("check-sep", "weak separation and count condition");
  add_common(check);

  auto* part = app.add_subcommand("partition", "split into n weakly separated parts");
  add_common(part);
  part->add_option("--n", o.n, "number of parts")->required();

  auto* cover = app.add_subcommand("cover", "disk covering of a labeled union");
  add_common(cover);

  auto* divdiff = app.add_subcommand("divdiff", "divided-difference statistic");
  add_common(divdiff);
  divdiff->add_option("--n", o.n, "tuple length")->required();
  divdiff->add_option("--budget", o.budget, "cap on |Lambda|^n");

  auto* margin = app.add_subcommand("margin", "interpolation margins");
  add_common(margin);
  margin->add_option("--grid", o.grid, "majorant search grid JSON");

  auto* interp = app.add_subcommand("interpolate", "chained interpolation on a labeled union");
  add_common(interp);

  auto* eval = app.add_subcommand("eval", "evaluate a stored chain");
  add_common(eval);
  eval->add_option("--chain", o.chain, "chain JSON");
  eval->add_option("--z", o.z, "point re im")->expected(2);
  eval->add_option("--grid-size", o.grid_size, "evaluate on a g x g grid clipped to the disk");

  auto* verify = app.add_subcommand("verify-main", "end-to-end verification");
  add_common(verify);
  add_gen(verify);
  verify->add_option("--n", o.n, "number of parts")->required();
  verify->add_option("--seed", o.seed, "seed for generator and random data");
  verify->add_option("--budget", o.budget, "cap on |Lambda|^n per statistic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) cmd_gen(o);
    else if (*check) cmd_check_sep(o);
    else if (*part) cmd_partition(o);
    else if (*cover) cmd_cover(o);
    else if (*divdiff) cmd_divdiff(o);
    else if (*margin) cmd_margin(o);
    else if (*interp) cmd_interpolate(o);
    else if (*eval) cmd_eval(o);
    else if (*verify) cmd_verify_main(o, o.input.empty());
  } catch (const PropertyFailure& e) {
    if (!o.out.empty()) write_text_file(o.out, dump(e.report()));
    std::cerr << "property failure: " << e.what() << "\n" << dump(Json{{"witness", index_array(e.witness())}, {"report", e.report()}});
    return 1;
  } catch (const PropertyViolation& e) {
    std::cerr << "property failure: " << e.what() << "\n" << dump(Json{{"witness", index_array(e.witness())}});
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
