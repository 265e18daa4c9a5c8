#include "geninv/census.hpp"

#include "geninv/calculus.hpp"
#include "geninv/enumerate.hpp"
#include "geninv/errors.hpp"
#include "geninv/inverse.hpp"
#include "geninv/literal.hpp"
#include "geninv/nilpotent.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <unordered_set>

namespace geninv {

namespace {

enum ElementFlag : unsigned {
  kNilpotent = 1u << 0,
  kIdempotent = 1u << 1,
  kTripotent = 1u << 2,
  kUnit = 1u << 3,
  kDrazin = 1u << 4,
  kStronglyDrazin = 1u << 5,
  kHirano = 1u << 6,
};

std::uint64_t checked_ring_size(const RingSpec& ring, std::uint64_t cap) {
  const std::uint64_t size = enumerable_size(ring);
  if (size > cap)
    throw CapExceeded(ring.to_string() + " has " + std::to_string(size) +
                      " elements, above the cap of " + std::to_string(cap));
  return size;
}

void cross_check(const Element& a, unsigned flags) {
  const BruteForceInverses brute = brute_force_inverses(a);
  const auto fail = [&a](const std::string& what) {
    throw InternalDefect("census cross-check failed at " + format_element(a) + " in " +
                         a.ring().to_string() + ": " + what);
  };
  if (brute.hirano.empty() == ((flags & kHirano) != 0)) fail("Hirano criterion disagrees with brute force");
  if (brute.strongly_drazin.empty() == ((flags & kStronglyDrazin) != 0))
    fail("strongly Drazin criterion disagrees with brute force");
  if (brute.drazin.size() != 1 || !(brute.drazin.front() == drazin_finite(a).inverse))
    fail("Drazin inverse is not the unique brute-force solution");
}

}  // namespace

CensusReport run_census(const RingSpec& ring, const CensusOptions& options) {
  const std::uint64_t size = checked_ring_size(ring, options.max_ring_size);

  CensusReport report{ring, {}, {}, false};
  std::vector<bool> cross_check_mask;
  if (size <= options.exhaustive_cross_check_limit) {
    cross_check_mask.assign(size, true);
    report.cross_checked = size;
  } else {
    report.cross_check_exhaustive = false;
    report.cross_check_seed = options.seed;
    cross_check_mask.assign(size, false);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (std::uint64_t i = 0; i < options.sampled_cross_checks; ++i) cross_check_mask[pick(rng)] = true;
    report.cross_checked =
        static_cast<std::uint64_t>(std::count(cross_check_mask.begin(), cross_check_mask.end(), true));
  }

  std::vector<unsigned> flags(size, 0);
  detail::parallel_chunks(size, options.workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Element a = element_at(ring, i);
      unsigned f = 0;
      if (is_nilpotent(a)) f |= kNilpotent;
      if (is_idempotent(a)) f |= kIdempotent;
      if (is_tripotent(a)) f |= kTripotent;
      if (is_unit(a)) f |= kUnit;
      drazin_finite(a);  // throws if the power formula ever fails
      f |= kDrazin;
      if (has_strongly_drazin(a)) f |= kStronglyDrazin;
      if (has_hirano(a)) f |= kHirano;
      if (cross_check_mask[i]) cross_check(a, f);
      flags[i] = f;
    }
  });

  CensusCounts& c = report.counts;
  c.total = size;
  std::optional<std::uint64_t> hirano_not_sd, drazin_not_hirano;
  for (std::uint64_t i = 0; i < size; ++i) {
    const unsigned f = flags[i];
    c.nilpotent += (f & kNilpotent) != 0;
    c.idempotent += (f & kIdempotent) != 0;
    c.tripotent += (f & kTripotent) != 0;
    c.unit += (f & kUnit) != 0;
    c.drazin += (f & kDrazin) != 0;
    c.strongly_drazin += (f & kStronglyDrazin) != 0;
    c.hirano += (f & kHirano) != 0;
    if ((f & kHirano) && !(f & kStronglyDrazin) && !hirano_not_sd) hirano_not_sd = i;
    if ((f & kDrazin) && !(f & kHirano) && !drazin_not_hirano) drazin_not_hirano = i;
  }
  if (hirano_not_sd)
    report.witnesses.push_back({"strongly_drazin < hirano", element_at(ring, *hirano_not_sd),
                                "a - a^3 is nilpotent but a - a^2 is not"});
  if (drazin_not_hirano)
    report.witnesses.push_back({"hirano < drazin", element_at(ring, *drazin_not_hirano),
                                "a - a^3 is not nilpotent; Drazin inverse exists in a finite ring"});
  report.is_strongly_2_nil_clean = c.hirano == c.total;
  return report;
}

nlohmann::json to_json(const CensusReport& report) {
  const CensusCounts& c = report.counts;
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"inclusion", w.inclusion}, {"element", format_element(w.element)}, {"reason", w.reason}});
  nlohmann::json cross = {{"strategy", report.cross_check_exhaustive ? "exhaustive" : "sampled"},
                          {"checked", report.cross_checked}};
  cross["seed"] = report.cross_check_exhaustive ? nlohmann::json(nullptr) : nlohmann::json(report.cross_check_seed);
  return {
      {"ring", report.ring.to_string()},
      {"counts",
       {{"total", c.total},
        {"nilpotent", c.nilpotent},
        {"idempotent", c.idempotent},
        {"tripotent", c.tripotent},
        {"unit", c.unit},
        {"drazin", c.drazin},
        {"strongly_drazin", c.strongly_drazin},
        {"hirano", c.hirano}}},
      {"witnesses", witnesses},
      {"is_strongly_2_nil_clean", report.is_strongly_2_nil_clean},
      {"cross_check", cross},
  };
}

// -- theorem verification ----------------------------------------------------

namespace {

struct Context {
  RingSpec ring;
  std::uint64_t size;
  bool use_oracle;
  Element one;
  Element zero;
};

/// Result of checking one tuple.
struct Outcome {
  bool applicable = false;
  std::optional<std::string> violation;
  std::optional<std::string> note;
};

using Check = std::function<Outcome(std::span<const Element>, const Context&)>;

struct Part {
  unsigned arity;
  Check check;
};

/// Ring-level conclusion computed from the per-instance tallies of part 0.
using Finish = std::function<std::optional<std::string>(const Context&, std::uint64_t applicable)>;

struct TheoremDef {
  std::vector<Part> parts;
  Finish finish;
  bool needs_half = false;
};

Outcome applies() { return Outcome{true}; }

Outcome violated(std::string why) {
  Outcome o{true};
  o.violation = std::move(why);
  return o;
}

std::string show(const Element& x) { return format_element(x); }

std::string show_all(const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + show(xs[i]);
  return out + "}";
}

// 2.1: a Hirano inverse is a Drazin inverse.
Outcome check_2_1(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  if (!has_hirano(a)) return {};
  const Element b = hirano(a).inverse;
  if (!check_drazin(a, b)) return violated("a^H = " + show(b) + " fails the Drazin axioms");
  if (!(drazin_finite(a).inverse == b)) return violated("a^H differs from the power-formula Drazin inverse");
  return applies();
}

// 2.2: at most one Hirano inverse, equal to the Drazin inverse.
Outcome check_2_2(std::span<const Element> t, const Context& ctx) {
  const Element& a = t[0];
  const Element d = drazin_finite(a).inverse;
  if (ctx.use_oracle) {
    const auto all = brute_force_hirano(a);
    if (all.size() > 1) return violated("several Hirano inverses " + show_all(all));
    if (all.size() == 1) {
      if (!(all.front() == hirano(a).inverse)) return violated("brute force and construction disagree");
      if (!(all.front() == d)) return violated("Hirano inverse is not the Drazin inverse");
    }
    return applies();
  }
  if (has_hirano(a) && !(hirano(a).inverse == d)) return violated("Hirano inverse is not the Drazin inverse");
  return applies();
}

// 2.4: a Hirano iff a^2 strongly Drazin, with (a^2)^sD = (a^H)^2 and a^H = a (a^2)^sD.
Outcome check_2_4(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  const Element a2 = a * a;
  const bool h = has_hirano(a);
  if (h != has_strongly_drazin(a2)) return violated("Hirano and strongly Drazin of a^2 disagree");
  if (!h) return applies();
  const Element b = hirano(a).inverse;
  const Element s = strongly_drazin(a2).inverse;
  if (!(s == b * b)) return violated("(a^2)^sD = " + show(s) + " but (a^H)^2 = " + show(b * b));
  if (!(b == a * s)) return violated("a^H != a (a^2)^sD");
  if (!(hirano_via_square(a).inverse == b)) return violated("hirano_via_square disagrees");
  return applies();
}

// 3.1: a Hirano iff a - a^3 nilpotent.
Outcome check_3_1(std::span<const Element> t, const Context& ctx) {
  const Element& a = t[0];
  const bool criterion = has_hirano(a);
  if (ctx.use_oracle) {
    if (criterion == brute_force_hirano(a).empty())
      return violated(std::string("criterion says ") + (criterion ? "yes" : "no") + ", brute force disagrees");
  } else if (criterion) {
    hirano(a);
  }
  return applies();
}

// 3.2: (a^H)^H = a^2 a^H.
Outcome check_3_2(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  if (!has_hirano(a)) return {};
  hirano_of_hirano(hirano(a));
  return applies();
}

// 3.3: with 1/2, a Hirano iff a = p + w with p^3 = p in comm^2(a), w nilpotent.
Outcome check_3_3(std::span<const Element> t, const Context& ctx) {
  const Element& a = t[0];
  if (!has_hirano(a)) {
    if (ctx.use_oracle && !brute_force_tripotent_parts(a).empty())
      return violated("non-Hirano element has a commuting tripotent part");
    return applies();
  }
  const TripotentDecomposition d = tripotent_decomposition(a);
  if (!is_tripotent(d.tripotent) || !is_nilpotent(a - d.tripotent) || !d.tripotent_certificate.certifies(d.tripotent))
    return violated("decomposition output invalid");
  if (ctx.use_oracle) {
    const auto parts = brute_force_tripotent_parts(a);
    if (std::find(parts.begin(), parts.end(), d.tripotent) == parts.end())
      return violated("p = " + show(d.tripotent) + " not among brute-force tripotent parts " + show_all(parts));
    for (const Element& y : enumerate(ctx.ring))
      if (commute(a, y) && !commute(d.tripotent, y))
        return violated("p fails to commute with " + show(y) + ", which commutes with a");
  }
  return applies();
}

// 3.4 forward: a Hirano gives a = b - c, b, c commuting and strongly Drazin.
Outcome check_3_4_forward(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  if (!has_hirano(a)) return {};
  sd_difference_decomposition(a);
  return applies();
}

// 3.4 converse: commuting strongly Drazin b, c give a Hirano b - c.
Outcome check_3_4_converse(std::span<const Element> t, const Context&) {
  const Element& b = t[0];
  const Element& c = t[1];
  if (!commute(b, c) || !has_strongly_drazin(b) || !has_strongly_drazin(c)) return {};
  if (!has_hirano(b - c)) return violated("b - c = " + show(b - c) + " is not Hirano");
  return applies();
}

// 3.6 per element: a commuting tripotent + nilpotent split implies Hirano.
Outcome check_3_6(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  const bool split = !brute_force_tripotent_parts(a).empty();
  if (split && !has_hirano(a)) return violated("tripotent + nilpotent element is not Hirano");
  Outcome o;
  o.applicable = split;
  return o;
}

std::optional<std::string> finish_3_6(const Context& ctx, std::uint64_t split_count) {
  std::uint64_t hirano_count = 0;
  for (const Element& a : enumerate(ctx.ring)) hirano_count += has_hirano(a);
  const bool clean = split_count == ctx.size;
  const bool all_hirano = hirano_count == ctx.size;
  if (clean != all_hirano)
    return std::string("strongly 2-nil-clean is ") + (clean ? "true" : "false") + " but all-Hirano is " +
           (all_hirano ? "true" : "false");
  return std::nullopt;
}

// 4.1: Cline's formula under aba = aca.
Outcome check_4_1(std::span<const Element> t, const Context& ctx) {
  const Element &a = t[0], &b = t[1], &c = t[2];
  if (!(a * b * a == a * c * a)) return {};
  const Element ac = a * c, ba = b * a;
  const bool left = has_hirano(ac);
  if (left != has_hirano(ba)) return violated("existence of (ac)^H and (ba)^H disagree");
  if (!left) return applies();
  const HiranoCertificate cert = cline(a, b, c, hirano(ac));
  if (ctx.use_oracle) {
    const auto all = brute_force_hirano(ba);
    if (all.size() != 1 || !(all.front() == cert.inverse))
      return violated("Cline inverse " + show(cert.inverse) + " vs brute force " + show_all(all));
  }
  return applies();
}

// 4.2: the c = b case, cross-checked against the direct construction.
Outcome check_4_2(std::span<const Element> t, const Context&) {
  const Element &a = t[0], &b = t[1];
  const Element ab = a * b, ba = b * a;
  const bool left = has_hirano(ab);
  if (left != has_hirano(ba)) return violated("existence of (ab)^H and (ba)^H disagree");
  if (!left) return applies();
  const HiranoCertificate cert = cline(a, b, b, hirano(ab));
  if (!(cert.inverse == hirano(ba).inverse)) return violated("b ((ab)^H)^2 a differs from (ba)^H");
  return applies();
}

// 4.3: (ab)^k Hirano implies (ba)^k Hirano, k = 1, 2, 3.
Outcome check_4_3(std::span<const Element> t, const Context&) {
  for (std::uint64_t k = 1; k <= 3; ++k) power_transfer(t[0], t[1], k);
  return applies();
}

// 4.4: (ab)^H = a^H b^H for commuting Hirano a, b.
Outcome check_4_4(std::span<const Element> t, const Context&) {
  const Element &a = t[0], &b = t[1];
  if (!commute(a, b) || !has_hirano(a) || !has_hirano(b)) return {};
  const HiranoCertificate ha = hirano(a), hb = hirano(b);
  const HiranoCertificate prod = commuting_product(ha, hb);
  if (!(ha.inverse * hb.inverse == hb.inverse * ha.inverse)) return violated("a^H and b^H do not commute");
  if (!(prod.inverse == hirano(a * b).inverse)) return violated("a^H b^H differs from (ab)^H");
  return applies();
}

// 4.5: (a^n)^H = (a^H)^n, n = 1..4.
Outcome check_4_5(std::span<const Element> t, const Context&) {
  const Element& a = t[0];
  if (!has_hirano(a)) return {};
  const HiranoCertificate ha = hirano(a);
  for (std::uint64_t n = 1; n <= 4; ++n)
    if (!(power_formula(ha, n).inverse == hirano(pow(a, n)).inverse))
      return violated("(a^H)^" + std::to_string(n) + " differs from (a^" + std::to_string(n) + ")^H");
  return applies();
}

// 5.1: 1 + ac Hirano iff 1 + ba Hirano under aba = aca.
Outcome check_5_1(std::span<const Element> t, const Context&) {
  const Element &a = t[0], &b = t[1], &c = t[2];
  if (!(a * b * a == a * c * a)) return {};
  jacobson_transfer(a, b, c);
  return applies();
}

// 5.2: 1 + ab Hirano iff 1 + ba Hirano.
Outcome check_5_2(std::span<const Element> t, const Context&) {
  jacobson_transfer(t[0], t[1], t[1]);
  return applies();
}

// 5.4: (a + b)^H = a^H + b^H when ab = ba = 0.
Outcome check_5_4(std::span<const Element> t, const Context&) {
  const Element &a = t[0], &b = t[1];
  if (!(a * b).is_zero() || !(b * a).is_zero() || !has_hirano(a) || !has_hirano(b)) return {};
  const HiranoCertificate sum = orthogonal_sum(hirano(a), hirano(b));
  if (!(sum.inverse == hirano(a + b).inverse)) return violated("a^H + b^H differs from (a+b)^H");
  return applies();
}

// 5.5: a^2 = b^2 = 0, ab strongly Drazin: (a+b)^H = a (ba)^H + b (ab)^H.
Outcome check_5_5(std::span<const Element> t, const Context&) {
  const Element &a = t[0], &b = t[1];
  if (!(a * a).is_zero() || !(b * b).is_zero() || !has_strongly_drazin(a * b)) return {};
  const SquareZeroSum result = square_zero_sum(a, b);
  Outcome o{true};
  if (!result.statement_verified)
    o.violation = "a (ba)^H + b (ab)^H = " + show(result.statement_candidate) + " is not the Hirano inverse";
  if (result.forms_differ())
    o.note = "a = " + show(a) + ", b = " + show(b) + ": a (ba)^D + b (ab)(ab)^D = " +
             show(result.proof_candidate) + (result.proof_verified ? " (verifies)" : " (fails)") +
             " differs from a (ba)^H + b (ab)^H = " + show(result.statement_candidate);
  return o;
}

const std::map<std::string, TheoremDef, std::less<>>& registry() {
  static const std::map<std::string, TheoremDef, std::less<>> defs = {
      {"2.1", {{{1, check_2_1}}}},
      {"2.2", {{{1, check_2_2}}}},
      {"2.4", {{{1, check_2_4}}}},
      {"3.1", {{{1, check_3_1}}}},
      {"3.2", {{{1, check_3_2}}}},
      {"3.3", {{{1, check_3_3}}, {}, true}},
      {"3.4", {{{1, check_3_4_forward}, {2, check_3_4_converse}}, {}, true}},
      {"3.6", {{{1, check_3_6}}, finish_3_6}},
      {"4.1", {{{3, check_4_1}}}},
      {"4.2", {{{2, check_4_2}}}},
      {"4.3", {{{2, check_4_3}}}},
      {"4.4", {{{2, check_4_4}}}},
      {"4.5", {{{1, check_4_5}}}},
      {"5.1", {{{3, check_5_1}}}},
      {"5.2", {{{2, check_5_2}}}},
      {"5.4", {{{2, check_5_4}}}},
      {"5.5", {{{2, check_5_5}}}},
  };
  return defs;
}

std::uint64_t power_or_cap(std::uint64_t base, unsigned exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

std::string describe_tuple(std::span<const Element> t) {
  static constexpr const char* kNames[] = {"a", "b", "c"};
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? ", " : "") + std::string(kNames[i]) + " = " + format_element(t[i]);
  return out;
}

struct ChunkResult {
  std::uint64_t candidates = 0;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

void run_tuple(const Part& part, std::span<const Element> tuple, const Context& ctx, ChunkResult& out) {
  ++out.candidates;
  Outcome o;
  try {
    o = part.check(tuple, ctx);
  } catch (const TheoremViolation& v) {
    o = violated(v.detail());
  } catch (const InternalDefect& d) {
    o = violated(std::string("internal check failed: ") + d.what());
  }
  if (o.applicable) ++out.instances;
  if (o.violation) out.violations.push_back({describe_tuple(tuple), *o.violation});
  if (o.note) out.notes.push_back(*o.note);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, def] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

TheoremReport verify_theorem(std::string_view id, const RingSpec& ring, const VerifyOptions& options) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw PreconditionError("unknown theorem id '" + std::string(id) + "'");
  const TheoremDef& def = it->second;
  const auto started = std::chrono::steady_clock::now();

  const std::uint64_t size = checked_ring_size(ring, options.max_ring_size);
  if (def.needs_half && *ring.modulus() % 2 == 0)
    throw PreconditionError("theorem " + std::string(id) + " needs 2 to be a unit; " +
                            ring.scalar_ring().to_string() + " has even modulus");
  const Context ctx{ring, size, size <= options.oracle_limit, identity(ring), zero(ring)};

  unsigned max_arity = 0;
  for (const Part& p : def.parts) max_arity = std::max(max_arity, p.arity);
  Strategy strategy;
  if (options.strategy) {
    strategy = *options.strategy;
  } else {
    strategy.kind = power_or_cap(size, max_arity, options.auto_exhaustive_limit) <= options.auto_exhaustive_limit
                        ? StrategyKind::exhaustive
                        : StrategyKind::sampled;
  }

  TheoremReport report{std::string(id), ring, strategy};
  std::uint64_t first_part_instances = 0;
  for (std::size_t part_index = 0; part_index < def.parts.size(); ++part_index) {
    const Part& part = def.parts[part_index];
    std::uint64_t count = 0;
    std::vector<std::uint64_t> sampled;  // flattened index tuples
    if (strategy.kind == StrategyKind::exhaustive) {
      count = power_or_cap(size, part.arity, options.max_exhaustive_tuples);
      if (count > options.max_exhaustive_tuples)
        throw CapExceeded("exhaustive scan of " + ring.to_string() + "^" + std::to_string(part.arity) +
                          " exceeds " + std::to_string(options.max_exhaustive_tuples) + " tuples");
    } else {
      count = strategy.samples;
      std::mt19937_64 rng(strategy.seed + part_index);
      std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
      sampled.resize(count * part.arity);
      for (auto& v : sampled) v = pick(rng);
    }

    std::vector<ChunkResult> chunks(std::max(1u, options.workers));
    detail::parallel_chunks(count, options.workers, [&](std::uint64_t begin, std::uint64_t end, unsigned c) {
      std::vector<Element> tuple;
      tuple.reserve(part.arity);
      for (std::uint64_t i = begin; i < end; ++i) {
        tuple.clear();
        if (strategy.kind == StrategyKind::exhaustive) {
          std::uint64_t rest = i;
          std::vector<std::uint64_t> digits(part.arity);
          for (unsigned d = part.arity; d-- > 0;) {
            digits[d] = rest % size;
            rest /= size;
          }
          for (auto d : digits) tuple.push_back(element_at(ring, d));
        } else {
          for (unsigned d = 0; d < part.arity; ++d) tuple.push_back(element_at(ring, sampled[i * part.arity + d]));
        }
        run_tuple(part, tuple, ctx, chunks[c]);
      }
    });
    for (auto& chunk : chunks) {
      report.candidates += chunk.candidates;
      report.instances += chunk.instances;
      if (part_index == 0) first_part_instances += chunk.instances;
      std::move(chunk.violations.begin(), chunk.violations.end(), std::back_inserter(report.violations));
      std::move(chunk.notes.begin(), chunk.notes.end(), std::back_inserter(report.notes));
    }
  }
  if (def.finish) {
    if (strategy.kind != StrategyKind::exhaustive)
      report.notes.push_back("ring-level conclusion skipped: needs an exhaustive scan");
    else if (auto v = def.finish(ctx, first_part_instances))
      report.violations.push_back({ring.to_string(), *v});
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"instance", v.instance}, {"detail", v.detail}});
  const bool sampled = report.strategy.kind == StrategyKind::sampled;
  nlohmann::json out = {
      {"theorem", report.theorem},
      {"ring", report.ring.to_string()},
      {"strategy", sampled ? "sampled" : "exhaustive"},
      {"candidates", report.candidates},
      {"instances", report.instances},
      {"violations", violations},
      {"notes", report.notes},
      {"elapsed_ms", report.elapsed_ms},
  };
  out["seed"] = sampled ? nlohmann::json(report.strategy.seed) : nlohmann::json(nullptr);
  out["samples"] = sampled ? nlohmann::json(report.strategy.samples) : nlohmann::json(nullptr);
  return out;
}

}  // namespace geninv
