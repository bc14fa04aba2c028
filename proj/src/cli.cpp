#include "qteleport/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qteleport/errors.hpp"
#include "qteleport/json_io.hpp"
#include "qteleport/schedule.hpp"
#include "qteleport/teleport.hpp"
#include "qteleport/verify.hpp"

namespace qtele::cli {

namespace {

struct Options {
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::string state = "random";
  std::string out;
  std::string format;
  std::size_t trials = 100;
};

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // from_chars rejects a leading '+'
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<Amplitude> parse_token(std::string_view tok) {
  tok = trim(tok);
  if (tok.empty()) return std::nullopt;
  if (tok.back() != 'i') {
    auto re = parse_double(tok);
    if (!re) return std::nullopt;
    return Amplitude{*re, 0.0};
  }
  tok.remove_suffix(1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = tok.size(); k-- > 1;) {
    if ((tok[k] == '+' || tok[k] == '-') && tok[k - 1] != 'e' &&
        tok[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    std::optional<double> im =
        (tok.empty() || tok == "+") ? 1.0 : tok == "-" ? -1.0 : parse_double(tok);
    if (!im) return std::nullopt;
    return Amplitude{0.0, *im};
  }
  auto re = parse_double(tok.substr(0, split));
  std::string_view im_text = tok.substr(split);
  std::optional<double> im = im_text == "+"   ? 1.0
                             : im_text == "-" ? -1.0
                                              : parse_double(im_text);
  if (!re || !im) return std::nullopt;
  return Amplitude{*re, *im};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure(kIoError, "cannot read state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CliFailure(kIoError, "error reading '" + path + "'");
  return buf.str();
}

std::vector<Amplitude> load_state(const Options& opt, bool& from_random) {
  from_random = false;
  if (opt.state == "random") {
    from_random = true;
    std::seed_seq seq{opt.seed, std::uint64_t{1}};
    Rng rng(seq);
    const StateVector s = random_state(opt.n, rng);
    return {s.amplitudes().begin(), s.amplitudes().end()};
  }
  if (auto literal = parse_amplitude_list(opt.state)) return *literal;

  const std::string text = read_file(opt.state);
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw CliFailure(kIoError, "state file '" + opt.state +
                                     "' is not valid JSON: " + e.what());
    }
    try {
      const StateVector s = state_from_json(j);
      return {s.amplitudes().begin(), s.amplitudes().end()};
    } catch (const UsageError& e) {
      throw CliFailure(kIoError, "state file '" + opt.state + "': " + e.what());
    }
  }
  if (auto literal = parse_amplitude_list(body)) return *literal;
  throw CliFailure(kIoError, "state file '" + opt.state +
                                 "' holds neither state JSON nor an "
                                 "amplitude list");
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
  if (!file) throw CliFailure(kIoError, "cannot write '" + opt.out + "'");
  file << text;
  file.flush();
  if (!file) throw CliFailure(kIoError, "error writing '" + opt.out + "'");
}

void require_format(const Options& opt, const char* fallback,
                    std::string& format) {
  format = opt.format.empty() ? fallback : opt.format;
  if (format != "json" && format != "text") {
    throw CliFailure(kUsage, "--format must be json or text");
  }
}

std::string amplitude_text(const Amplitude& a) {
  std::ostringstream s;
  s << std::setprecision(17) << a.real() << (a.imag() < 0 ? "-" : "+")
    << std::abs(a.imag()) << "i";
  return s.str();
}

int cmd_teleport(const Options& opt, std::ostream& out, std::ostream& err) {
  std::string format;
  require_format(opt, "json", format);
  if (3 * opt.n > max_qubits()) {
    throw CliFailure(kUsage, "--n " + std::to_string(opt.n) + " needs " +
                                 std::to_string(3 * opt.n) +
                                 " qubits; capacity is " +
                                 std::to_string(max_qubits()));
  }

  bool from_random = false;
  std::vector<Amplitude> amps = load_state(opt, from_random);
  const std::size_t want = std::size_t{1} << opt.n;
  if (amps.size() != want) {
    throw CliFailure(kUsage, "state has " + std::to_string(amps.size()) +
                                 " amplitudes; --n " + std::to_string(opt.n) +
                                 " needs " + std::to_string(want));
  }
  for (const Amplitude& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw CliFailure(kNotNormalized, "state has non-finite amplitudes");
    }
  }
  StateVector psi = StateVector::from_amplitudes(std::move(amps));
  const double ns = psi.norm_squared();
  if (!(std::abs(ns - 1.0) <= kInputNormTolerance)) {
    throw CliFailure(kNotNormalized,
                     "input state is not normalized: |psi|^2 = " +
                         std::to_string(ns));
  }
  const bool renormalized = ns != 1.0;
  if (renormalized) psi = psi.normalized();

  const TeleportTrace trace = teleport(psi, opt.seed);
  const bool ok = trace.fidelity_to_input >= 1.0 - kVerifyTolerance;

  if (format == "json") {
    nlohmann::json j = to_json(trace);
    j["input_renormalized"] = renormalized;
    emit(opt, dump(j), out);
  } else {
    std::ostringstream s;
    s << std::setprecision(17);
    s << "n: " << trace.n << "\n";
    s << "seed: " << opt.seed << "\n";
    s << "input: " << (from_random ? "random" : "given")
      << (renormalized ? " (renormalized)" : "") << "\n";
    s << "outcome: " << trace.outcome.bits.to_string() << "\n";
    s << "probability: " << trace.outcome.probability << "\n";
    s << "fidelity: " << trace.fidelity_to_input << "\n";
    s << "max deviation: " << trace.max_deviation_to_input << "\n";
    s << "bob after correction:";
    for (const Amplitude& a : trace.bob_post_correction.amplitudes()) {
      s << ' ' << amplitude_text(a);
    }
    s << "\n";
    emit(opt, s.str(), out);
  }
  if (!ok) {
    err << "teleportation fidelity " << trace.fidelity_to_input
        << " below threshold\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::string format;
  require_format(opt, "text", format);
  if (opt.n > kMaxVerifyQubits) {
    throw CliFailure(kUsage, "verify supports --n 1.." +
                                 std::to_string(kMaxVerifyQubits));
  }
  if (3 * opt.n > max_qubits()) {
    throw CliFailure(kUsage, "--n " + std::to_string(opt.n) +
                                 " exceeds the qubit capacity");
  }
  const VerificationReport report =
      verify_protocol(opt.n, opt.trials, opt.seed);

  if (format == "json") {
    emit(opt, dump(to_json(report)), out);
  } else {
    std::ostringstream s;
    s << "verify n=" << report.n << " seed=" << report.seed << " ("
      << (report.exhaustive ? "exhaustive" : "sampled") << ", "
      << report.inputs_checked << " inputs)\n";
    s << std::scientific << std::setprecision(3);
    for (const auto& st : report.stages) {
      s << (st.max_deviation < kVerifyTolerance ? "PASS  " : "FAIL  ")
        << std::left << std::setw(44) << st.name << st.max_deviation << "\n";
    }
    s << (report.max_branch_deviation < kVerifyTolerance ? "PASS  "
                                                         : "FAIL  ")
      << std::left << std::setw(44)
      << ("branches (" + std::to_string(report.branches_checked) + ")")
      << report.max_branch_deviation << "\n";
    if (report.fixtures) {
      const auto& f = *report.fixtures;
      s << (f.matched == f.total ? "PASS  " : "FAIL  ") << f.name
        << " fixtures: " << f.matched << "/" << f.total << "\n";
    }
    for (const auto& e : report.errors) s << "ERROR " << e << "\n";
    s << (report.passed ? "PASS" : "FAIL") << "\n";
    emit(opt, s.str(), out);
  }
  return report.passed ? kOk : kFailed;
}

int cmd_circuit(const Options& opt, std::ostream& out) {
  emit(opt, to_text(circuit_schedule(opt.n)), out);
  return kOk;
}

void apply_capacity_env() {
  const char* env = std::getenv("QTELEPORT_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return;
  unsigned v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0 ||
      v > kHardMaxQubits) {
    throw CliFailure(kUsage, "QTELEPORT_MAX_QUBITS must be an integer in 1.." +
                                 std::to_string(kHardMaxQubits));
  }
  set_max_qubits(v);
}

}  // namespace

std::optional<std::vector<Amplitude>> parse_amplitude_list(
    std::string_view text) {
  std::vector<Amplitude> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    auto amp = parse_token(tok);
    if (!amp) return std::nullopt;
    out.push_back(*amp);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"N-qubit quantum teleportation simulator and verifier",
               "qteleport"};
  app.require_subcommand(1);
  Options opt;

  auto* tele = app.add_subcommand("teleport", "Teleport an N-qubit state");
  tele->add_option("--n", opt.n, "Number of qubits to teleport")
      ->required()
      ->check(CLI::Range(1u, kHardMaxQubits));
  tele->add_option("--seed", opt.seed, "Seed for input sampling and measurement");
  tele->add_option("--state", opt.state,
                   "'random', a comma-separated amplitude list (re or re+imi), "
                   "or a file holding either form or state JSON");
  tele->add_option("--out", opt.out, "Write output here instead of stdout");
  tele->add_option("--format", opt.format, "json (default) or text");

  auto* ver = app.add_subcommand("verify", "Check the simulator against closed forms");
  ver->add_option("--n", opt.n, "Number of teleported qubits (1..5)")
      ->required()
      ->check(CLI::Range(1u, kMaxVerifyQubits));
  ver->add_option("--seed", opt.seed, "Seed for random inputs");
  ver->add_option("--trials", opt.trials, "Random inputs to check");
  ver->add_option("--out", opt.out, "Write output here instead of stdout");
  ver->add_option("--format", opt.format, "text (default) or json");

  auto* circ = app.add_subcommand("circuit", "Print the teleportation circuit");
  circ->add_option("--n", opt.n, "Number of teleported qubits")
      ->required()
      ->check(CLI::Range(1u, kHardMaxQubits));
  circ->add_option("--out", opt.out, "Write the schedule here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_capacity_env();
    if (tele->parsed()) return cmd_teleport(opt, out, err);
    if (ver->parsed()) return cmd_verify(opt, out);
    if (circ->parsed()) return cmd_circuit(opt, out);
  } catch (const CliFailure& e) {
    err << "qteleport: " << e.what() << "\n";
    return e.code();
  } catch (const UsageError& e) {
    err << "qteleport: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "qteleport: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "qteleport: internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace qtele::cli
