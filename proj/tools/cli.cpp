#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "ffc/criteria.hpp"
#include "ffc/error.hpp"
#include "ffc/quad_field.hpp"
#include "ffc/survey.hpp"
#include "ffc/wendt.hpp"
#include "json_io.hpp"

namespace ffc::cli {

namespace {

struct GlobalFlags {
  OutputFormat format = OutputFormat::Human;
  u64 n_max = kDefaultSearchCap;
  bool quiet = false;
};

std::string join(const std::vector<u64>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

// Single-row payloads: Json prints the object, Csv a header plus one row
// in key order, Human "key: value" lines.
void emit_object(std::ostream& out, OutputFormat format, const ordered_json& j) {
  auto scalar = [](const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += v[i].dump();
      }
      return s;
    }
    if (v.is_null()) return std::string();
    return v.dump();
  };
  switch (format) {
    case OutputFormat::Json:
      out << j.dump() << '\n';
      break;
    case OutputFormat::Csv: {
      std::string header, row;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it != j.begin()) {
          header += ',';
          row += ',';
        }
        header += it.key();
        row += scalar(it.value());
      }
      out << header << '\n' << row << '\n';
      break;
    }
    case OutputFormat::Human:
      for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << ": " << scalar(it.value()) << '\n';
      }
      break;
  }
}

ordered_json outcome_payload(ordered_json head, const CriterionOutcome& outcome) {
  head.update(ordered_json(outcome));
  return head;
}

int cmd_wendt(const GlobalFlags& g, std::ostream& out, u64 n, std::optional<u64> mod) {
  if (!mod) {
    const BigInt value = wendt_exact(n);
    emit_object(out, g.format, ordered_json{{"n", n}, {"value", value.str()}});
    return kExitOk;
  }
  const auto eval = evaluate_wendt_mod(n, *mod);
  const u64 residue = std::get<WendtResidue>(eval.value).residue;
  emit_object(out, g.format,
              ordered_json{{"n", n}, {"q", *mod}, {"residue", residue}, {"divides", residue == 0}});
  return kExitOk;
}

int cmd_class_number(const GlobalFlags& g, std::ostream& out, i64 d) {
  const auto field = make_field(d);
  emit_object(out, g.format,
              ordered_json{{"d", d},
                           {"discriminant", field.discriminant()},
                           {"class_number", field.class_number()}});
  return kExitOk;
}

int cmd_theorem1(const GlobalFlags& g, std::ostream& out, i64 d, u64 p, std::optional<u64> n) {
  const auto field = make_field(d);
  ordered_json j{{"criterion", "theorem1"}, {"d", d}, {"p", p}};
  if (n) {
    j.update(ordered_json(theorem1_check(field, p, *n)));
    if (!j.contains("n")) j["n"] = *n;
    emit_object(out, g.format, j);
    return kExitOk;
  }
  const u64 cap = theorem1_search_cap(p, g.n_max);
  CriterionOutcome outcome;
  bool exhausted = false;
  if (field.class_number() % p == 0) {
    outcome.reason = Reason::ClassNumberDivisible;
  } else if (auto witness = theorem1_search(field, p, g.n_max)) {
    outcome = {Verdict::Established, Reason::Witness, witness};
  } else {
    outcome.reason = Reason::Exhausted;
    exhausted = true;
  }
  j.update(ordered_json(outcome));
  j["cap"] = cap;
  j["exhausted"] = exhausted;
  emit_object(out, g.format, j);
  return kExitOk;
}

int cmd_condition1(const GlobalFlags& g, std::ostream& out, u64 p, bool witnesses) {
  if (witnesses) {
    emit_object(out, g.format, ordered_json(condition1_check(p)));
  } else {
    emit_object(out, g.format, ordered_json{{"p", p}, {"holds", condition1_holds(p)}});
  }
  return kExitOk;
}

std::pair<i64, i64> parse_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    fail(ErrorKind::InvalidArgument, std::string(flag) + " expects <a>,<b>, got '" + text + "'");
  }
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const i64 x = std::stoll(a, &used_a), y = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidArgument, std::string(flag) + " expects integers, got '" + text + "'");
  }
}

u64 positive(i64 v, const char* what) {
  if (v <= 0) fail(ErrorKind::InvalidArgument, std::string(what) + " must be positive");
  return static_cast<u64>(v);
}

struct FieldFlags {
  std::optional<i64> quadratic;
  std::optional<std::string> pure;
  std::optional<u64> totally_ramified;
  std::optional<std::string> asserted;
};

int cmd_theorem2(const GlobalFlags& g, std::ostream& out, u64 p, const FieldFlags& f) {
  const int given = f.quadratic.has_value() + f.pure.has_value() +
                    f.totally_ramified.has_value() + f.asserted.has_value();
  if (given != 1) {
    fail(ErrorKind::InvalidArgument,
         "exactly one of --quadratic, --pure, --totally-ramified, --asserted is required");
  }
  FieldHypothesis field;
  ordered_json desc;
  if (f.quadratic) {
    field = QuadraticField{*f.quadratic};
    desc = {{"kind", "quadratic"}, {"d", *f.quadratic}};
  } else if (f.pure) {
    const auto [d, n] = parse_pair(*f.pure, "--pure");
    field = PureField{d, positive(n, "n")};
    desc = {{"kind", "pure"}, {"d", d}, {"n", n}};
  } else if (f.totally_ramified) {
    field = TotallyRamifiedField{*f.totally_ramified};
    desc = {{"kind", "totally_ramified"}, {"degree", *f.totally_ramified}};
  } else {
    const auto [e, fd] = parse_pair(*f.asserted, "--asserted");
    field = AssertedPrime{positive(e, "e"), positive(fd, "f")};
    desc = {{"kind", "asserted"}, {"e", e}, {"f", fd}};
  }
  ordered_json j{{"criterion", "theorem2"}, {"p", p}};
  if (g.format == OutputFormat::Json) {
    j["field"] = desc;
  } else {
    for (auto it = desc.begin(); it != desc.end(); ++it) j["field_" + it.key()] = it.value();
  }
  j.update(ordered_json(theorem2_check(field, p)));
  emit_object(out, g.format, j);
  return kExitOk;
}

// Streams records (unless quiet), then the totals block.
class RecordSink {
 public:
  RecordSink(const GlobalFlags& g, std::ostream& out, std::vector<std::string> columns)
      : g_(g), out_(out), columns_(std::move(columns)) {}

  void record(const ordered_json& j) {
    if (g_.quiet) return;
    switch (g_.format) {
      case OutputFormat::Json:
        out_ << j.dump() << '\n';
        break;
      case OutputFormat::Csv:
        if (!header_done_) {
          out_ << join_columns() << '\n';
          header_done_ = true;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          if (i) out_ << ',';
          if (j.contains(columns_[i])) {
            const auto& v = j.at(columns_[i]);
            out_ << (v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump());
          }
        }
        out_ << '\n';
        break;
      case OutputFormat::Human:
        for (auto it = j.begin(); it != j.end(); ++it) {
          if (it != j.begin()) out_ << ' ';
          out_ << it.key() << '=' << (it.value().is_string() ? it.value().get<std::string>()
                                                            : it.value().dump());
        }
        out_ << '\n';
        break;
    }
    out_.flush();
  }

  void totals(const ordered_json& j) {
    if (g_.format == OutputFormat::Csv && header_done_) out_ << '\n';
    emit_object(out_, g_.format, j);
  }

 private:
  std::string join_columns() const {
    std::string s;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) s += ',';
      s += columns_[i];
    }
    return s;
  }

  const GlobalFlags& g_;
  std::ostream& out_;
  std::vector<std::string> columns_;
  bool header_done_ = false;
};

int cmd_survey_table(const GlobalFlags& g, std::ostream& out, u64 p_max) {
  const auto table = qi_smallest_n_table(p_max, g.n_max);
  switch (g.format) {
    case OutputFormat::Csv:
      out << "p,n\n";
      for (const auto& e : table) {
        out << e.p << ',' << (e.n ? std::to_string(*e.n) : std::string()) << '\n';
      }
      break;
    case OutputFormat::Json:
      for (const auto& e : table) out << ordered_json(e).dump() << '\n';
      break;
    case OutputFormat::Human:
      for (const auto& e : table) {
        out << '(' << e.p << ',' << (e.n ? std::to_string(*e.n) : std::string("none")) << ")\n";
      }
      break;
  }
  return kExitOk;
}

struct SurveyFlags {
  std::optional<std::string> checkpoint;
  unsigned jobs = 1;
  double checkpoint_seconds = 10.0;
};

SurveyOptions survey_options(const GlobalFlags& g, const SurveyFlags& s) {
  SurveyOptions options;
  if (s.checkpoint) options.checkpoint = std::filesystem::path(*s.checkpoint);
  options.jobs = std::max(1u, s.jobs);
  options.n_max = g.n_max;
  options.checkpoint_interval =
      std::chrono::milliseconds(static_cast<std::int64_t>(s.checkpoint_seconds * 1000.0));
  return options;
}

int cmd_survey_qi(const GlobalFlags& g, std::ostream& out, u64 p_max, const SurveyFlags& s) {
  RecordSink sink(g, out, {"p", "verdict", "n", "ms"});
  auto options = survey_options(g, s);
  options.on_record = [&](const SurveyRecord& r) { sink.record(ordered_json(r)); };
  const auto result = qi_full_scan(p_max, options);
  ordered_json totals(result.totals);
  if (g.format == OutputFormat::Csv) totals["failures"] = join(result.totals.failures, ';');
  sink.totals(totals);
  return kExitOk;
}

int cmd_survey_census(const GlobalFlags& g, std::ostream& out, u64 bound, const SurveyFlags& s,
                      bool direct) {
  RecordSink sink(g, out, {"p", "verdict", "ms"});
  auto options = survey_options(g, s);
  options.on_record = [&](const SurveyRecord& r) { sink.record(ordered_json(r)); };
  const auto result = condition1_census(
      bound, options, direct ? CensusMethod::Direct : CensusMethod::QuotientSieve);
  sink.totals(ordered_json(result.totals));
  return kExitOk;
}

OutputFormat parse_format(const std::string& s) {
  static const std::map<std::string, OutputFormat> kFormats{
      {"human", OutputFormat::Human}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  return kFormats.at(s);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-case Fermat criteria over number fields"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--nmax", g.n_max, "Cap on n for witness searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Only print totals for surveys");

  std::function<int()> action;

  u64 wendt_n = 0;
  std::optional<u64> wendt_mod_q;
  auto* wendt = app.add_subcommand("wendt", "Exact W_n, or its residue modulo a prime");
  wendt->add_option("n", wendt_n)->required()->check(CLI::PositiveNumber);
  wendt->add_option("--mod", wendt_mod_q, "Prime q with n | q - 1");
  wendt->callback([&] { action = [&] { return cmd_wendt(g, out, wendt_n, wendt_mod_q); }; });

  i64 cn_d = 0;
  auto* cn = app.add_subcommand("class-number", "Class number of Q(sqrt(d)), d < 0");
  cn->add_option("d", cn_d)->required();
  cn->callback([&] { action = [&] { return cmd_class_number(g, out, cn_d); }; });

  i64 t1_d = 0;
  u64 t1_p = 0;
  std::optional<u64> t1_n;
  auto* t1 = app.add_subcommand("theorem1", "Wendt-type criterion: check one n, or search");
  t1->add_option("--d", t1_d)->required();
  t1->add_option("--p", t1_p)->required();
  t1->add_option("--n", t1_n);
  t1->callback([&] { action = [&] { return cmd_theorem1(g, out, t1_d, t1_p, t1_n); }; });

  i64 sg_d = 0;
  u64 sg_p = 0;
  auto* sg = app.add_subcommand("germain", "Sophie Germain analogue (n = 2)");
  sg->add_option("--d", sg_d)->required();
  sg->add_option("--p", sg_p)->required();
  sg->callback([&] {
    action = [&] {
      const auto outcome = sophie_germain_check(make_field(sg_d), sg_p);
      emit_object(out, g.format,
                  outcome_payload({{"criterion", "germain"}, {"d", sg_d}, {"p", sg_p}}, outcome));
      return kExitOk;
    };
  });

  u64 c2_p = 0;
  auto* c2 = app.add_subcommand("corollary2", "Q(i) with n in {4, 8, 16}");
  c2->add_option("--p", c2_p)->required();
  c2->callback([&] {
    action = [&] {
      emit_object(out, g.format,
                  outcome_payload({{"criterion", "corollary2"}, {"p", c2_p}}, corollary2_check(c2_p)));
      return kExitOk;
    };
  });

  u64 c1_p = 0;
  bool c1_witnesses = false;
  auto* c1 = app.add_subcommand("condition1", "1 + a^p != (1+a)^p mod p^2 for a <= (p-3)/2");
  c1->add_option("--p", c1_p)->required();
  c1->add_flag("--witnesses", c1_witnesses, "List every violating a");
  c1->callback([&] { action = [&] { return cmd_condition1(g, out, c1_p, c1_witnesses); }; });

  u64 t2_p = 0;
  FieldFlags t2_field;
  auto* t2 = app.add_subcommand("theorem2", "condition1 plus a degree-one prime above p");
  t2->add_option("--p", t2_p)->required();
  t2->add_option("--quadratic", t2_field.quadratic, "Q(sqrt(d))");
  t2->add_option("--pure", t2_field.pure, "Q(d^(1/n)) as d,n");
  t2->add_option("--totally-ramified", t2_field.totally_ramified, "degree of a field totally ramified at p");
  t2->add_option("--asserted", t2_field.asserted, "a prime above p with e,f");
  t2->callback([&] { action = [&] { return cmd_theorem2(g, out, t2_p, t2_field); }; });

  auto* survey = app.add_subcommand("survey", "Batch runs");
  survey->require_subcommand(1);

  u64 table_pmax = 0;
  auto* table = survey->add_subcommand("table", "Smallest n over Q(i) for p < pmax");
  table->add_option("--pmax", table_pmax)->required();
  table->callback([&] { action = [&] { return cmd_survey_table(g, out, table_pmax); }; });

  auto add_survey_flags = [](CLI::App* sub, SurveyFlags& flags) {
    sub->add_option("--checkpoint", flags.checkpoint, "Checkpoint file (resumed if present)");
    sub->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--checkpoint-interval", flags.checkpoint_seconds, "Seconds between checkpoints")
        ->check(CLI::NonNegativeNumber);
  };

  u64 qi_pmax = 0;
  SurveyFlags qi_flags;
  auto* qi = survey->add_subcommand("qi", "theorem1 search over Q(i) for every p <= pmax");
  qi->add_option("--pmax", qi_pmax)->required();
  add_survey_flags(qi, qi_flags);
  qi->callback([&] { action = [&] { return cmd_survey_qi(g, out, qi_pmax, qi_flags); }; });

  u64 census_bound = 0;
  bool census_direct = false;
  SurveyFlags census_flags;
  auto* census = survey->add_subcommand("census", "condition1 over primes p = 2 mod 3, p < bound");
  census->add_option("--bound", census_bound)->required();
  census->add_flag("--direct", census_direct, "Per-a exponentiation instead of the quotient sieve");
  add_survey_flags(census, census_flags);
  census->callback([&] {
    action = [&] { return cmd_survey_census(g, out, census_bound, census_flags, census_direct); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.format = parse_format(format);
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::Io) return kExitIo;
    return is_capability_error(e.kind()) ? kExitCapability : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ffc::cli
