#include "heights/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heights/coeffs.hpp"
#include "heights/error.hpp"
#include "heights/git_binary.hpp"
#include "heights/json_io.hpp"
#include "heights/pencils.hpp"
#include "heights/random_gen.hpp"
#include "heights/semistability.hpp"
#include "heights/verify.hpp"

namespace heights::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open input '" + source + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer");
    }
  }
  return gen::kDefaultSeed;
}

void print_suite(std::ostream& out, const verify::SuiteResult& r, bool quiet, bool as_json) {
  if (as_json) {
    out << json{{"suite", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"notes", r.notes}, {"failures", r.failures}}
               .dump(2)
        << "\n";
    return;
  }
  out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
  if (quiet) return;
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  for (const auto& f : r.failures) out << "  failure: " << f << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heights, semistability, and identity checks for pencils of hypersurfaces", "heights"};
  app.require_subcommand(1);
  std::string format = "json";
  bool quiet = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_flag("--quiet", quiet, "Only print verdict lines");

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Closed-form coefficients");
  std::vector<int> fstab_args, w_args, g_args, check_args;
  int eq_n = 0;
  std::vector<int> eq_mults;
  coeff->add_option("--fstab", fstab_args, "F_stab(d, N)")->expected(2);
  coeff->add_option("--w", w_args, "w_{N,delta}")->expected(2);
  coeff->add_option("--g", g_args, "g_N(delta)")->expected(2);
  coeff->add_option("--check", check_args, "check F(d,N) = F_stab(d,N)")->expected(2);
  auto* eq_opt = coeff->add_option("--equality", eq_n, "equality-case classification for N");
  coeff->add_option("--mult", eq_mults, "singular point multiplicities")->delimiter(',');

  auto* griffiths = app.add_subcommand("griffiths", "Height report for a pencil descriptor");
  std::string griffiths_input;
  griffiths->add_option("input", griffiths_input, "JSON file, inline JSON, or - for stdin")->required();

  auto* git = app.add_subcommand("git-height", "GIT height of a pencil of binary cubics or quartics");
  std::string git_input;
  bool with_profile = false;
  git->add_option("input", git_input, "JSON file, inline JSON, or - for stdin")->required();
  git->add_flag("--profile", with_profile, "Append the fiber semistability profile");

  auto* semistable = app.add_subcommand("semistable", "Semistability of a form or singularity profile");
  std::string semistable_input;
  std::string method = "auto";
  semistable->add_option("input", semistable_input, "JSON file, inline JSON, or - for stdin")->required();
  semistable->add_option("--method", method, "Decision method for forms")
      ->check(CLI::IsMember({"auto", "torus", "binary"}));

  auto* verify_cmd = app.add_subcommand("verify", "Machine-check coefficient identities and the contact identity");
  verify_cmd->require_subcommand(1);
  std::string n_range = "1..12", d_range = "2..50", delta_range = "2..200";
  std::optional<std::uint64_t> seed;
  verify::ContactOptions contact_opts;
  auto* v_ident = verify_cmd->add_subcommand("identities", "F = F_stab grid and (1/12)Z membership");
  v_ident->add_option("--N", n_range);
  v_ident->add_option("--d", d_range);
  auto* v_mono = verify_cmd->add_subcommand("monotonicity", "Monotonicity of g_N");
  v_mono->add_option("--N", n_range);
  v_mono->add_option("--delta", delta_range);
  auto* v_contact = verify_cmd->add_subcommand("contact", "Contact identity on random binary pencils");
  v_contact->add_option("--seed", seed);
  v_contact->add_option("--quartics", contact_opts.quartics);
  v_contact->add_option("--cubics", contact_opts.cubics);
  v_contact->add_option("--max-m-quartic", contact_opts.max_m_quartic);
  v_contact->add_option("--max-m-cubic", contact_opts.max_m_cubic);

  auto* sweep_cmd = app.add_subcommand("sweep", "Table of F_stab(d,N) and w_{N,d}");
  std::string sweep_d = "2..8", sweep_n = "1..6";
  sweep_cmd->add_option("--d", sweep_d);
  sweep_cmd->add_option("--N", sweep_n);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*coeff) {
      json result = json::object();
      std::vector<std::pair<std::string, std::string>> rows;
      auto emit = [&](const std::string& key, const std::string& value) {
        result[key] = value;
        rows.emplace_back(key, value);
      };
      if (!fstab_args.empty()) emit("fstab", coeffs::f_stab(fstab_args[0], fstab_args[1]).str());
      if (!w_args.empty()) emit("w", coeffs::w(w_args[0], w_args[1]).str());
      if (!g_args.empty()) emit("g", coeffs::g(g_args[0], g_args[1]).str());
      if (!check_args.empty()) emit("check", yes_no(coeffs::check_f_equals_fstab(check_args[0], check_args[1])));
      if (*eq_opt) emit("equality", yes_no(coeffs::classify_equality_case(eq_n, eq_mults)));
      if (rows.empty()) throw UsageError("coeff needs one of --fstab, --w, --g, --check, --equality");
      // A single requested value prints bare.
      if (rows.size() == 1 && format != "table") out << rows.front().second << "\n";
      else if (as_json) out << result.dump(2) << "\n";
      else print_table(out, rows);
      return kExitOk;
    }
    if (*griffiths) {
      const PencilDescriptor p = descriptor_from_json(read_input(griffiths_input));
      const HeightReport r = pencils::full_report(p);
      if (as_json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        const auto budget = pencils::singularity_budget(p);
        print_table(out, {{"ht_int", r.htInt.str()},
                          {"ht_GK,stab", r.htGKStab.str()},
                          {"F_stab * ht_int", r.bound.str()},
                          {"equality case", yes_no(r.equalityCase)},
                          {"singularity budget", yes_no(r.singularityBudgetOk) + " (" + budget.lhs.str() +
                                                     " vs " + budget.rhs.str() + ")"},
                          {"generization condition", yes_no(r.generizationConditionOk)},
                          {"genericity bound", r.genericityBoundOk ? yes_no(*r.genericityBoundOk) : "n/a"}});
        if (!r.singularityBudgetOk) out << "warning: descriptor violates the singularity budget; ht_GK,stab is extrapolated\n";
      }
      return kExitOk;
    }
    if (*git) {
      const BinaryPencil p = binary_pencil_from_json(read_input(git_input));
      const GitHeightReport r = git_height(p);
      json j = to_json(r);
      std::vector<FiberLocus> profile;
      if (with_profile) {
        profile = fiber_semistability_profile(p);
        json arr = json::array();
        for (const auto& l : profile) arr.push_back(to_json(l));
        j["profile"] = arr;
      }
      if (as_json) {
        out << j.dump(2) << "\n";
      } else {
        print_table(out, {{"ht_GIT", r.htGIT.str()},
                          {"ht_int", r.htInt.str()},
                          {"contact length", std::to_string(r.contactLength)},
                          {"delta", std::to_string(r.delta)},
                          {"all fibers semistable", yes_no(r.allFibersSemistable)}});
        for (const auto& l : profile) {
          const std::string where = l.kind == FiberLocus::Kind::Affine     ? "roots of " + l.factor.str()
                                    : l.kind == FiberLocus::Kind::Infinity ? "s = 0"
                                                                           : "every fiber";
          out << "  " << where << ": " << to_string(l.verdict.status) << " (" << l.verdict.rule << ")\n";
        }
      }
      return kExitOk;
    }
    if (*semistable) {
      const json input = read_input(semistable_input);
      StabilityVerdict v;
      if (input.contains("profile")) {
        v = criteria_engine(profile_from_json(input.at("profile")));
      } else {
        const json& fj = input.contains("form") ? input.at("form") : input;
        const auto f = form_from_json(fj);
        std::string m = method;
        if (m == "auto") m = f.num_vars() == 2 ? "binary" : "torus";
        if (m == "binary") v = binary_semistable(f);
        else v = torus_semistable(f);
      }
      if (as_json) {
        out << to_json(v).dump(2) << "\n";
      } else {
        std::string cert = "none";
        if (v.certificate) {
          cert.clear();
          for (long x : v.certificate->entries()) cert += (cert.empty() ? "" : " ") + std::to_string(x);
        }
        print_table(out, {{"status", std::string(to_string(v.status))}, {"rule", v.rule}, {"certificate", cert}});
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      verify::SuiteResult r;
      if (*v_ident) {
        r = verify::identities(verify::Range::parse(n_range), verify::Range::parse(d_range));
      } else if (*v_mono) {
        r = verify::monotonicity(verify::Range::parse(n_range), verify::Range::parse(delta_range));
      } else {
        contact_opts.seed = resolve_seed(seed);
        r = verify::contact(contact_opts);
      }
      print_suite(out, r, quiet, as_json);
      return r.pass ? kExitOk : kExitDomain;
    }
    if (*sweep_cmd) {
      const auto rows = verify::sweep(verify::Range::parse(sweep_d), verify::Range::parse(sweep_n));
      if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back({{"d", row.d}, {"N", row.N}, {"fstab", row.f_stab}, {"w", row.w}});
        out << arr.dump(2) << "\n";
      } else if (format == "csv") {
        out << "d,N,F_stab,w_N_d\n";
        for (const auto& row : rows) out << row.d << "," << row.N << "," << row.f_stab << "," << row.w << "\n";
      } else {
        std::size_t wf = 6, ww = 7;
        for (const auto& row : rows) {
          wf = std::max(wf, row.f_stab.str().size());
          ww = std::max(ww, row.w.str().size());
        }
        out << std::right << std::setw(4) << "d" << std::setw(4) << "N" << "  " << std::setw(static_cast<int>(wf))
            << "F_stab" << "  " << std::setw(static_cast<int>(ww)) << "w_{N,d}" << "\n";
        for (const auto& row : rows) {
          out << std::setw(4) << row.d << std::setw(4) << row.N << "  " << std::setw(static_cast<int>(wf))
              << row.f_stab.str() << "  " << std::setw(static_cast<int>(ww)) << row.w.str() << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    json obj{{"kind", "domain"}, {"message", e.what()}};
    if (!e.field().empty()) obj["field"] = e.field();
    err << json{{"error", obj}}.dump() << "\n";
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << json{{"error", {{"kind", "invariant"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace heights::cli
