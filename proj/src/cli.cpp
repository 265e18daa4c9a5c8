#include "geninv/cli.hpp"

#include "geninv/census.hpp"
#include "geninv/errors.hpp"
#include "geninv/inverse.hpp"
#include "geninv/literal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <thread>

namespace geninv::cli {

namespace {

RingSpec parse_cli_ring(std::string_view text) {
  RingSpec ring = parse_ring(text);
  if (ring.dim() > kMaxCliDimension)
    throw CapExceeded("matrix dimension " + std::to_string(ring.dim()) + " exceeds the CLI limit of " +
                      std::to_string(kMaxCliDimension));
  return ring;
}

std::string render_certificate(const PolynomialCertificate& cert) {
  std::string poly = cert.polynomial.to_string('a');
  if (cert.denominator == 1) return poly;
  return "(" + poly + ")/" + cert.denominator.get_str();
}

/// Runs a command body, mapping library errors onto exit code 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const TheoremViolation& e) {
    err << "violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int classify(std::string_view ring_text, std::string_view element_text, const Options& opts, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const RingSpec ring = parse_cli_ring(ring_text);
    const Element a = parse_element(ring, element_text);
    const InverseReport r = classify(a);

    if (opts.json) {
      nlohmann::json j = {{"ring", ring.to_string()}, {"element", format_element(a)}};
      nlohmann::json d = {{"exists", r.has_drazin ? nlohmann::json(*r.has_drazin) : nlohmann::json(nullptr)}};
      if (r.drazin) {
        d["inverse"] = format_element(r.drazin->inverse);
        d["index"] = r.drazin->index;
      }
      nlohmann::json s = {{"exists", r.has_strongly_drazin}};
      if (r.strongly_drazin) s["inverse"] = format_element(r.strongly_drazin->inverse);
      nlohmann::json h = {{"exists", r.has_hirano}};
      if (r.hirano) h["inverse"] = format_element(r.hirano->inverse);
      j["drazin"] = d;
      j["strongly_drazin"] = s;
      j["hirano"] = h;
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    out << "ring:            " << ring.to_string() << '\n';
    out << "element:         " << format_element(a) << '\n';
    out << "drazin:          ";
    if (!r.has_drazin)
      out << "undecided (integer matrix outside the Hirano case)\n";
    else if (r.drazin)
      out << "yes  b = " << format_element(r.drazin->inverse) << "  index " << r.drazin->index << '\n';
    else
      out << "no\n";
    out << "strongly_drazin: ";
    if (r.strongly_drazin)
      out << "yes  b = " << format_element(r.strongly_drazin->inverse) << '\n';
    else
      out << "no   (a - a^2 is not nilpotent)\n";
    out << "hirano:          ";
    if (r.hirano)
      out << "yes  b = " << format_element(r.hirano->inverse) << '\n';
    else
      out << "no   (a - a^3 is not nilpotent)\n";
    return kExitOk;
  });
}

int decompose(std::string_view ring_text, std::string_view element_text, const Options& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const RingSpec ring = parse_cli_ring(ring_text);
    const Element a = parse_element(ring, element_text);
    const TripotentDecomposition d = tripotent_decomposition(a);
    if (opts.json) {
      nlohmann::json j = {
          {"ring", ring.to_string()},
          {"element", format_element(a)},
          {"p", format_element(d.tripotent)},
          {"w", format_element(d.nilpotent_part)},
          {"w_nilpotency_index", d.nilpotent_witness.index},
          {"e", format_element(d.e)},
          {"f", format_element(d.f)},
          {"p_polynomial", render_certificate(d.tripotent_certificate)},
          {"e_polynomial", render_certificate(d.e_certificate)},
          {"f_polynomial", render_certificate(d.f_certificate)},
      };
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "ring:    " << ring.to_string() << '\n';
    out << "element: " << format_element(a) << '\n';
    out << "p = " << format_element(d.tripotent) << "   (p^3 = p)   p = " << render_certificate(d.tripotent_certificate)
        << '\n';
    out << "w = " << format_element(d.nilpotent_part) << "   (nilpotent, index " << d.nilpotent_witness.index << ")\n";
    out << "e = " << format_element(d.e) << "   e = " << render_certificate(d.e_certificate) << '\n';
    out << "f = " << format_element(d.f) << "   f = " << render_certificate(d.f_certificate) << '\n';
    return kExitOk;
  });
}

int census(std::string_view ring_text, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RingSpec ring = parse_cli_ring(ring_text);
    CensusOptions co;
    co.workers = opts.workers;
    co.max_ring_size = opts.max_ring_size;
    if (opts.seed) co.seed = *opts.seed;
    if (opts.samples) co.sampled_cross_checks = *opts.samples;
    const CensusReport report = run_census(ring, co);
    if (opts.json) {
      out << to_json(report).dump(2) << '\n';
      return kExitOk;
    }
    const CensusCounts& c = report.counts;
    out << "ring: " << ring.to_string() << '\n';
    out << "  total            " << c.total << '\n';
    out << "  nilpotent        " << c.nilpotent << '\n';
    out << "  idempotent       " << c.idempotent << '\n';
    out << "  tripotent        " << c.tripotent << '\n';
    out << "  unit             " << c.unit << '\n';
    out << "  drazin           " << c.drazin << '\n';
    out << "  strongly_drazin  " << c.strongly_drazin << '\n';
    out << "  hirano           " << c.hirano << '\n';
    out << "strongly 2-nil-clean: " << (report.is_strongly_2_nil_clean ? "yes" : "no") << '\n';
    for (const auto& w : report.witnesses)
      out << "witness " << w.inclusion << ": " << format_element(w.element) << "  (" << w.reason << ")\n";
    out << "cross-check: " << report.cross_checked << " elements against brute force ("
        << (report.cross_check_exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(report.cross_check_seed))
        << ")\n";
    return kExitOk;
  });
}

int verify(std::string_view theorem, std::string_view ring_text, const Options& opts, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    const RingSpec ring = parse_cli_ring(ring_text);
    VerifyOptions vo;
    vo.max_ring_size = opts.max_ring_size;
    vo.workers = opts.workers;
    if (opts.exhaustive) {
      vo.strategy = Strategy{StrategyKind::exhaustive};
    } else if (opts.seed || opts.samples) {
      Strategy s{StrategyKind::sampled};
      if (opts.seed) s.seed = *opts.seed;
      if (opts.samples) s.samples = *opts.samples;
      vo.strategy = s;
    }
    const TheoremReport report = verify_theorem(theorem, ring, vo);
    if (opts.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      const bool sampled = report.strategy.kind == StrategyKind::sampled;
      out << "theorem " << report.theorem << " on " << ring.to_string() << ": "
          << (sampled ? "sampled (seed " + std::to_string(report.strategy.seed) + ")" : std::string("exhaustive"))
          << ", " << report.candidates << " candidates, " << report.instances << " instances, "
          << report.violations.size() << " violations\n";
      for (const auto& v : report.violations) out << "  violation: " << v.instance << ": " << v.detail << '\n';
      for (const auto& n : report.notes) out << "  note: " << n << '\n';
    }
    return report.verified() ? kExitOk : kExitViolation;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drazin, strongly Drazin and Hirano inverses over Z, Z/n and matrix rings"};
  app.require_subcommand(1);

  Options opts;
  std::string ring, element, theorem;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  auto* classify_cmd = app.add_subcommand("classify", "Decide and construct the inverses of one element");
  classify_cmd->add_option("ring", ring, "Ring literal, e.g. M2(Z/3)")->required();
  classify_cmd->add_option("element", element, "Element literal, e.g. [[0,1],[1,1]]")->required();
  classify_cmd->add_flag("--json", opts.json, "Emit JSON");

  auto* decompose_cmd = app.add_subcommand("decompose", "Tripotent + nilpotent decomposition (needs 1/2)");
  decompose_cmd->add_option("ring", ring)->required();
  decompose_cmd->add_option("element", element)->required();
  decompose_cmd->add_flag("--json", opts.json, "Emit JSON");

  auto* census_cmd = app.add_subcommand("census", "Classify every element of a finite ring");
  census_cmd->add_option("ring", ring)->required();
  census_cmd->add_flag("--json", opts.json, "Emit JSON");
  census_cmd->add_option("--seed", opts.seed, "Seed for sampled brute-force cross-checks");
  census_cmd->add_option("--samples", opts.samples, "Number of sampled cross-checks on large rings");
  census_cmd->add_option("--max-ring-size", opts.max_ring_size, "Refuse rings with more elements");
  census_cmd->add_option("--workers", opts.workers, "Worker threads")->default_val(hw);

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on every (or sampled) instance in a ring");
  verify_cmd->add_option("theorem", theorem, "Theorem id, e.g. 5.1")->required();
  verify_cmd->add_option("ring", ring)->required();
  verify_cmd->add_flag("--json", opts.json, "Emit JSON");
  verify_cmd->add_option("--seed", opts.seed, "Seed for sampled scans (implies sampling)");
  verify_cmd->add_option("--samples", opts.samples, "Tuples per sampled scan (implies sampling)");
  verify_cmd->add_flag("--exhaustive", opts.exhaustive, "Force an exhaustive scan");
  verify_cmd->add_option("--max-ring-size", opts.max_ring_size, "Refuse rings with more elements");
  verify_cmd->add_option("--workers", opts.workers, "Worker threads")->default_val(hw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (*classify_cmd) return classify(ring, element, opts, out, err);
  if (*decompose_cmd) return decompose(ring, element, opts, out, err);
  if (*census_cmd) return census(ring, opts, out, err);
  return verify(theorem, ring, opts, out, err);
}

}  // namespace geninv::cli
