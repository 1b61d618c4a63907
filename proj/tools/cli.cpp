#include "cli.hpp"

#include "jetcalc/actions.hpp"
#include "jetcalc/codec.hpp"
#include "jetcalc/contact.hpp"
#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"
#include "jetcalc/sampling.hpp"
#include "jetcalc/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace jetcalc::cli {

namespace {

using codec::json;
using codec::ValueKind;

/// Unreadable input or a value of the wrong kind.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot read \"" + path + "\"");
    buf << file.rdbuf();
  }
  return buf.str();
}

// One JSON document, or JSON Lines.
std::vector<json> read_values(const std::string& path, std::istream& in) {
  const std::string text = read_text(path, in);
  if (json::accept(text)) return {codec::parse(text)};
  std::vector<json> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); })) continue;
    out.push_back(codec::parse(line));
  }
  if (out.empty()) throw InputError("\"" + path + "\" contains no JSON value");
  return out;
}

json read_single(const std::string& path, std::istream& in) {
  auto values = read_values(path, in);
  if (values.size() != 1) throw InputError("\"" + path + "\" must contain exactly one value");
  return std::move(values.front());
}

void emit(const Io& io, const json& j) { io.out << codec::dump(j, io.pretty) << '\n'; }

[[noreturn]] void wrong_kind(const char* command, ValueKind kind) {
  throw InputError(std::string(command) + ": unsupported value kind \"" + std::string(codec::to_string(kind)) + "\"");
}

// --- commands ---------------------------------------------------------------

int cmd_gen(const Io& io, const std::string& kind, int m, std::optional<int> n_opt, std::uint64_t seed,
            std::size_t count) {
  static const std::vector<std::string> kinds = {"velocity",      "double",    "group",   "principal",
                                                 "semiholonomic", "holonomic", "vertical"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) throw InputError("gen: unknown kind \"" + kind + "\"");
  if (m < 1) throw InputError("gen: m must be at least 1");
  const int n = n_opt.value_or(m + 2);
  const bool needs_n = kind != "group" && kind != "principal";
  if (needs_n && n < m) throw InputError("gen: this kind needs n >= m");
  const Dims d = needs_n ? Dims(m, n) : Dims(m, m);

  Sampler s(seed);
  for (std::size_t k = 0; k < count; ++k) {
    if (kind == "velocity") emit(io, codec::encode(s.velocity(d)));
    else if (kind == "double") emit(io, codec::encode(s.double_velocity(d)));
    else if (kind == "group") emit(io, codec::encode(s.jet_group(m)));
    else if (kind == "principal") emit(io, codec::encode(s.principal(m)));
    else if (kind == "semiholonomic") emit(io, codec::encode(s.semiholonomic(d)));
    else if (kind == "holonomic") emit(io, codec::encode(s.holonomic(d)));
    else emit(io, codec::encode(s.vertical(d)));
  }
  return kExitOk;
}

int cmd_act(const Io& io, const std::string& value_path, const std::string& element_path) {
  const json element = read_single(element_path, io.in);
  const ValueKind ek = codec::detect(element);
  for (const json& value : read_values(value_path, io.in)) {
    const ValueKind vk = codec::detect(value);
    if (vk == ValueKind::double_velocity && ek == ValueKind::principal)
      emit(io, codec::encode(act_P_double(codec::decode_double_velocity(value), codec::decode_principal(element))));
    else if (vk == ValueKind::velocity && ek == ValueKind::jet_group)
      emit(io, codec::encode(act_L_velocity(codec::decode_velocity(value), codec::decode_jet_group(element))));
    else
      throw InputError("act: expects a double velocity with a principal element, or a velocity with a jet group "
                       "element (got " + std::string(codec::to_string(vk)) + " and " +
                       std::string(codec::to_string(ek)) + ")");
  }
  return kExitOk;
}

int cmd_compose(const Io& io, const std::string& first, const std::string& second) {
  const json a = read_single(first, io.in);
  const json b = read_single(second, io.in);
  const ValueKind ka = codec::detect(a);
  if (ka != codec::detect(b)) throw InputError("compose: operands are of different kinds");
  switch (ka) {
    case ValueKind::principal:
      emit(io, codec::encode(compose_P(codec::decode_principal(a), codec::decode_principal(b))));
      break;
    case ValueKind::jet_group:
      emit(io, codec::encode(compose_L(codec::decode_jet_group(a), codec::decode_jet_group(b))));
      break;
    case ValueKind::second_order:
      emit(io, codec::encode(compose_second_order_jets(codec::decode_second_order(a), codec::decode_second_order(b))));
      break;
    default:
      wrong_kind("compose", ka);
  }
  return kExitOk;
}

int cmd_exchange(const Io& io, const std::string& path) {
  for (const json& value : read_values(path, io.in)) {
    const ValueKind k = codec::detect(value);
    if (k == ValueKind::double_velocity) emit(io, codec::encode(exchange(codec::decode_double_velocity(value))));
    else if (k == ValueKind::principal) emit(io, codec::encode(exchange_P(codec::decode_principal(value))));
    else wrong_kind("exchange", k);
  }
  return kExitOk;
}

int cmd_canon(const Io& io, const std::string& path, double tol) {
  for (const json& value : read_values(path, io.in)) {
    const ValueKind k = codec::detect(value);
    switch (k) {
      case ValueKind::velocity:
        emit(io, codec::encode(contact_of(codec::decode_velocity(value), tol)));
        break;
      case ValueKind::double_velocity:
        emit(io, codec::encode(double_contact_of(codec::decode_double_velocity(value), tol)));
        break;
      case ValueKind::contact:
        emit(io, codec::encode(codec::decode_contact(value)));
        break;
      case ValueKind::double_contact:
        emit(io, codec::encode(double_contact_of(representative(codec::decode_double_contact(value)), tol)));
        break;
      default:
        wrong_kind("canon", k);
    }
  }
  return kExitOk;
}

int cmd_decompose(const Io& io, const std::string& path, double tol, bool check) {
  int status = kExitOk;
  for (const json& value : read_values(path, io.in)) {
    const ValueKind k = codec::detect(value);
    if (k == ValueKind::double_velocity) {
      const DoubleVelocity dv = codec::decode_double_velocity(value);
      if (!is_semiholonomic(dv, tol)) throw DomainError("decompose: double velocity is not semiholonomic (Ui != Uo)");
      const auto [h, c] = split_semiholonomic(dv, tol);
      emit(io, {{"holonomic", codec::encode(h)}, {"curvature", codec::encode(c)}});
      if (check && !(distance(affine_add_vertical(h, c, tol), dv) <= tol)) {
        io.err << "decompose: parts do not recombine to the input\n";
        status = kExitFailure;
      }
    } else if (k == ValueKind::double_contact) {
      const DoubleContactElement d = codec::decode_double_contact(value);
      const auto [h, c] = decompose_contact(d, tol);
      emit(io, {{"holonomic", codec::encode(h)}, {"curvature", codec::encode(c)}});
      if (check && !(distance(affine_add_contact(h, c, tol), d) <= tol)) {
        io.err << "decompose: parts do not recombine to the input\n";
        status = kExitFailure;
      }
    } else {
      wrong_kind("decompose", k);
    }
  }
  return status;
}

int cmd_verify(const Io& io, const std::string& suite, const verify::Config& config) {
  const verify::Report report = verify::run_suite(suite, config);
  io.err << verify::summary(report);
  emit(io, verify::to_json(report));
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double velocities, principal jet groups and double contact elements"};
  app.name("jetcalc");
  app.require_subcommand(1);

  Io io{in, out, err};
  double tol = kDefaultTol;

  std::string kind;
  int m = 2;
  std::optional<int> n;
  std::uint64_t seed = 42;
  std::size_t count = 1;
  auto* gen = app.add_subcommand("gen", "Emit random values as JSON Lines");
  gen->add_option("--kind", kind, "velocity|double|group|principal|semiholonomic|holonomic|vertical")->required();
  gen->add_option("--m", m, "Source dimension");
  gen->add_option("--n", n, "Target dimension (default m+2)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--count", count, "Number of values");
  gen->add_flag("--pretty", io.pretty, "Indent the output");

  std::string value_path, element_path;
  auto* act = app.add_subcommand("act", "Act on double velocities (or velocities) from the right");
  act->add_option("value", value_path, "Value file, or - for standard input")->required();
  act->add_option("element", element_path, "Group element file")->required();
  act->add_flag("--pretty", io.pretty, "Indent the output");

  std::string first, second;
  auto* compose = app.add_subcommand("compose", "Multiply two group elements");
  compose->add_option("first", first, "Left factor")->required();
  compose->add_option("second", second, "Right factor")->required();
  compose->add_flag("--pretty", io.pretty, "Indent the output");

  std::string path;
  auto* exch = app.add_subcommand("exchange", "Apply the exchange involution");
  exch->add_option("input", path, "Input file, or - for standard input")->required();
  exch->add_flag("--pretty", io.pretty, "Indent the output");

  auto* canon = app.add_subcommand("canon", "Canonical (double) contact element");
  canon->add_option("input", path, "Input file, or - for standard input")->required();
  canon->add_option("--tol", tol, "Tolerance");
  canon->add_flag("--pretty", io.pretty, "Indent the output");

  bool check = false;
  auto* decompose = app.add_subcommand("decompose", "Split a semiholonomic value into holonomic and curvature parts");
  decompose->add_option("input", path, "Input file, or - for standard input")->required();
  decompose->add_option("--tol", tol, "Tolerance");
  decompose->add_flag("--check", check, "Re-add the parts and compare with the input");
  decompose->add_flag("--pretty", io.pretty, "Indent the output");

  std::string suite = "all";
  verify::Config config;
  std::optional<int> vm, vn;
  auto* ver = app.add_subcommand("verify", "Run randomized property suites");
  ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--m", vm, "Source dimension (default 2)");
  ver->add_option("--n", vn, "Target dimension (default m+2)");
  ver->add_option("--trials", config.trials, "Trials per property");
  ver->add_option("--seed", config.seed, "Random seed");
  ver->add_option("--tol", config.tol, "Tolerance");
  ver->add_flag("--pretty", io.pretty, "Indent the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*gen) return cmd_gen(io, kind, m, n, seed, count);
    if (*act) return cmd_act(io, value_path, element_path);
    if (*compose) return cmd_compose(io, first, second);
    if (*exch) return cmd_exchange(io, path);
    if (*canon) return cmd_canon(io, path, tol);
    if (*decompose) return cmd_decompose(io, path, tol, check);
    if (*ver) {
      config.m = vm.value_or(2);
      config.n = vn.value_or(config.m + 2);
      return cmd_verify(io, suite, config);
    }
  } catch (const std::exception& e) {
    err << "jetcalc: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace jetcalc::cli
