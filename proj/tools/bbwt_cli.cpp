// Command-line front end: transforms, measures, macro schemes, rotation
// optimization and reachability.
//
// Exit codes: 0 success, 1 semantic failure, 2 usage or input error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbwt/macro_scheme.hpp"
#include "bbwt/measures.hpp"
#include "bbwt/reachability.hpp"
#include "bbwt/rotation_opt.hpp"
#include "bbwt/transforms.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;

// Bad input that should map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;  // empty: standard input
  std::string output;
  bool strip_newline = false;
  std::size_t max_size = std::size_t{1} << 26;
};

void add_input_options(CLI::App* cmd, InputOptions& o, bool with_output) {
  cmd->add_option("-i,--input", o.input, "Input file (default: standard input)");
  if (with_output) cmd->add_option("-o,--output", o.output, "Output file (default: standard output)");
  cmd->add_flag("--strip-newline", o.strip_newline, "Drop one trailing newline from the input");
  cmd->add_option("--max-size", o.max_size, "Reject inputs longer than this many bytes")
      ->capture_default_str();
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ios::sync_with_stdio(false);
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const InputOptions& o) {
  std::string text = read_all(o.input);
  if (o.strip_newline && !text.empty() && text.back() == '\n') {
    text.pop_back();
    if (!text.empty() && text.back() == '\r') text.pop_back();
  }
  if (text.empty()) throw InputError("empty input");
  if (text.size() > o.max_size)
    throw InputError("input has " + std::to_string(text.size()) + " bytes, limit is " +
                     std::to_string(o.max_size) + " (see --max-size)");
  return text;
}

void write_all(const std::string& path, std::string_view bytes) {
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

// Parikh vector syntax: "a:2,b:2"; a symbol may be written \xNN.
bbwt::ParikhVector parse_parikh(std::string_view text) {
  std::array<std::size_t, 256> counts{};
  std::array<bool, 256> given{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) throw InputError("bad Parikh item '" + std::string(item) + "'");
    const auto sym = item.substr(0, colon), num = item.substr(colon + 1);
    unsigned value = 0;
    if (sym.size() == 1) {
      value = static_cast<unsigned char>(sym[0]);
    } else if (sym.size() == 4 && sym[0] == '\\' && (sym[1] == 'x' || sym[1] == 'X')) {
      const auto [p, ec] = std::from_chars(sym.data() + 2, sym.data() + 4, value, 16);
      if (ec != std::errc{} || p != sym.data() + 4) throw InputError("bad symbol '" + std::string(sym) + "'");
    } else {
      throw InputError("bad symbol '" + std::string(sym) + "'");
    }
    std::size_t count = 0;
    const auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
    if (num.empty() || ec != std::errc{} || p != num.data() + num.size())
      throw InputError("bad count '" + std::string(num) + "'");
    if (given[value]) throw InputError("symbol listed twice in Parikh vector");
    given[value] = true;
    counts[value] = count;
    pos = comma + 1;
  }
  try {
    return bbwt::ParikhVector(counts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// ---- transform ----

struct TransformArgs {
  InputOptions io;
  std::string mode;
  std::string csa;
};

int run_transform(const TransformArgs& a) {
  const std::string text = read_text(a.io);
  std::string out;
  const bbwt::TransformResult* with_csa = nullptr;
  bbwt::TransformResult result;
  if (a.mode == "bwt" || a.mode == "bbwt") {
    result = a.mode == "bwt" ? bbwt::bwt(text) : bbwt::bbwt(text);
    out = result.output;
    with_csa = &result;
  } else if (a.mode == "ibbwt") {
    out = bbwt::bbwt_inverse(text);
  } else {
    for (const auto& item : bbwt::bwt_inverse_multiset(text).items) {
      out += item;
      out += '\n';
    }
  }
  if (!a.csa.empty()) {
    if (!with_csa) throw InputError("--csa is only available for bwt and bbwt");
    std::string lines;
    for (std::size_t v : with_csa->csa) lines += std::to_string(v) + '\n';
    write_all(a.csa, lines);
  }
  write_all(a.io.output, out);
  return kOk;
}

// ---- measure ----

struct MeasureArgs {
  InputOptions io;
  std::optional<std::size_t> fib;
  std::string id;
  bool porcelain = false;
  std::size_t rotation_limit = 4096;
};

int run_measure(const MeasureArgs& a) {
  std::string text;
  std::string id = a.id;
  if (a.fib) {
    try {
      text = bbwt::fibonacci_word(*a.fib, a.io.max_size);
    } catch (const std::length_error&) {
      throw InputError("Fibonacci word exceeds --max-size");
    }
    if (id.empty()) id = "fib" + std::to_string(*a.fib);
  } else {
    text = read_text(a.io);
    if (id.empty()) id = a.io.input.empty() ? "-" : a.io.input;
  }
  const auto m = bbwt::measure_report(text);
  std::string shift = "na", best_rb = "na";
  if (text.size() <= a.rotation_limit) {
    const auto best = bbwt::best_rotation(text);
    shift = std::to_string(best.shift);
    best_rb = std::to_string(best.r_b);
  }
  const std::vector<std::pair<std::string, std::string>> fields{
      {"input_id", id},
      {"n", std::to_string(m.n)},
      {"r", std::to_string(m.r)},
      {"rB", std::to_string(m.r_b)},
      {"ell", std::to_string(m.ell)},
      {"total_factors", std::to_string(m.total_factors)},
      {"z", std::to_string(m.z)},
      {"bms_phrases", std::to_string(m.bms_phrases)},
      {"best_rotation_shift", shift},
      {"best_rotation_rB", best_rb},
      {"ratio_rB_over_zlog2n", format_double(m.ratio_rb_over_zlog2n)},
  };
  std::string out;
  for (const auto& [k, v] : fields) {
    if (a.porcelain && !out.empty()) out += ' ';
    out += k + '=' + v;
    if (!a.porcelain) out += '\n';
  }
  if (a.porcelain) out += '\n';
  write_all(a.io.output, out);
  return kOk;
}

// ---- bms ----

struct BmsArgs {
  InputOptions io;
  std::string scheme;
};

int run_bms_build(const BmsArgs& a) {
  write_all(a.io.output, bbwt::to_string(bbwt::induce_bms(read_text(a.io))));
  return kOk;
}

int run_bms_verify(const BmsArgs& a) {
  const std::string text = read_text(a.io);
  std::ifstream in(a.scheme, std::ios::binary);
  if (!in) throw InputError("cannot open '" + a.scheme + "'");
  bbwt::MacroScheme m;
  try {
    m = bbwt::read_bms(in);
  } catch (const bbwt::SchemeError& e) {
    throw InputError(std::string("malformed scheme: ") + e.what());
  }
  const auto r = bbwt::validate_bms(m, text);
  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::string out = "well_formed=" + yes_no(r.well_formed) + "\nacyclic=" + yes_no(r.acyclic) +
                    "\ndecodes=" + yes_no(r.decodes) + "\nphrases=" + std::to_string(r.phrase_count) +
                    "\nbound=" + std::to_string(r.bound) + "\nbound_ok=" + yes_no(r.bound_ok) +
                    "\nresult=" + (r.passed() ? "pass" : "fail") + '\n';
  write_all(a.io.output, out);
  return r.passed() ? kOk : kSemantic;
}

// ---- rotopt / lynrot ----

int run_rotopt(const InputOptions& io, bool table) {
  const std::string text = read_text(io);
  std::string out;
  if (table) {
    const auto t = bbwt::rotation_rb_table(text);
    std::size_t best = 0;
    for (std::size_t k = 1; k < t.size(); ++k)
      if (t[k] < t[best]) best = k;
    out = "shift=" + std::to_string(best) + "\nrB=" + std::to_string(t[best]) + "\ntable=";
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
    out += '\n';
  } else {
    const auto b = bbwt::best_rotation(text);
    out = "shift=" + std::to_string(b.shift) + "\nrB=" + std::to_string(b.r_b) + '\n';
  }
  write_all(io.output, out);
  return kOk;
}

int run_lynrot(const InputOptions& io) {
  const auto sizes = bbwt::all_rotation_factorization_sizes(read_text(io));
  std::string out;
  for (const auto& s : sizes.by_start) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(s.total_factors) + ',' + std::to_string(s.necklace_count) + ')';
  }
  out += '\n';
  write_all(io.output, out);
  return kOk;
}

// ---- reach ----

struct ReachArgs {
  std::string parikh;
  std::string from, to;
  std::string x;
  bool to_smallest = false;
  std::size_t budget = bbwt::kDefaultOrbitBudget;
};

int run_check_orbit(const ReachArgs& a) {
  const auto r = bbwt::orbit_connected(parse_parikh(a.parikh), a.budget);
  std::cout << "class_size=" << r.class_size << "\norbit_count=" << r.orbit_count
            << "\nconnected=" << (r.connected ? "true" : "false") << '\n';
  if (r.witness) std::cout << "witness=" << r.witness->first << ',' << r.witness->second << '\n';
  return r.connected ? kOk : kSemantic;
}

int run_path(const ReachArgs& a) {
  if (a.from.size() != a.to.size() || a.from.empty() ||
      !(bbwt::parikh(a.from) == bbwt::parikh(a.to)))
    throw InputError("FROM and TO must be nonempty with equal Parikh vectors");
  const auto s = bbwt::find_path(a.from, a.to, a.budget);
  if (s.outcome == bbwt::PathSearch::Outcome::counterexample) {
    std::cout << "unreachable\n";
    return kSemantic;
  }
  std::cout << bbwt::to_string(s.path) << '\n';
  return kOk;
}

int run_descend(const ReachArgs& a) {
  if (a.x.empty()) throw InputError("empty string");
  if (a.to_smallest) {
    try {
      std::cout << bbwt::to_string(bbwt::transform_to_smallest(a.x)) << '\n';
    } catch (const bbwt::UnsupportedCase& e) {
      throw InputError(e.what());
    }
    return kOk;
  }
  try {
    std::cout << bbwt::descent_step(a.x) << '\n';
  } catch (const bbwt::DescentError& e) {
    if (e.reason() == bbwt::DescentError::Reason::not_necklace) throw InputError(e.what());
    std::cerr << "bbwt_cli: " << e.what() << '\n';
    return kSemantic;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijective Burrows-Wheeler transform toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a transform to raw bytes");
  transform->add_option("-m,--mode", ta.mode, "bwt, ibwt-multiset, bbwt or ibbwt")
      ->required()
      ->check(CLI::IsMember({"bwt", "ibwt-multiset", "bbwt", "ibbwt"}));
  transform->add_option("--csa", ta.csa, "Write the circular suffix array to this file");
  add_input_options(transform, ta.io, true);
  transform->callback([&] { action = [&] { return run_transform(ta); }; });

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "Report r, rB, ell, z and related counts");
  add_input_options(measure, ma.io, true);
  measure->add_option("--fib", ma.fib, "Measure the Fibonacci word F_K instead of the input");
  measure->add_option("--id", ma.id, "Value of the input_id field");
  measure->add_flag("--porcelain", ma.porcelain, "Single-line output with a fixed field order");
  measure->add_option("--rotation-limit", ma.rotation_limit,
                      "Skip the best-rotation search above this length")
      ->capture_default_str();
  measure->callback([&] { action = [&] { return run_measure(ma); }; });

  BmsArgs ba;
  auto* bms = app.add_subcommand("bms", "Build or verify a macro scheme");
  bms->require_subcommand(1);
  auto* build = bms->add_subcommand("build", "Write the scheme induced by the BBWT");
  add_input_options(build, ba.io, true);
  build->callback([&] { action = [&] { return run_bms_build(ba); }; });
  auto* verify = bms->add_subcommand("verify", "Check a scheme against its text");
  verify->add_option("-s,--scheme", ba.scheme, "Scheme file")->required();
  add_input_options(verify, ba.io, true);
  verify->callback([&] { action = [&] { return run_bms_verify(ba); }; });

  InputOptions ro;
  bool table = false;
  auto* rotopt = app.add_subcommand("rotopt", "Rotation with the fewest BBWT runs");
  add_input_options(rotopt, ro, true);
  rotopt->add_flag("--table", table, "Also print rB for every shift");
  rotopt->callback([&] { action = [&] { return run_rotopt(ro, table); }; });

  InputOptions lo;
  auto* lynrot = app.add_subcommand("lynrot", "Lyndon factorization sizes of all rotations");
  add_input_options(lynrot, lo, true);
  lynrot->callback([&] { action = [&] { return run_lynrot(lo); }; });

  ReachArgs ra;
  auto* reach = app.add_subcommand("reach", "Reachability under rotation and BBWT");
  reach->require_subcommand(1);
  auto* orbit = reach->add_subcommand("check-orbit", "Is a Parikh class one orbit?");
  orbit->add_option("parikh", ra.parikh, "e.g. a:2,b:2 or \\x00:3,\\xff:1")->required();
  orbit->add_option("--budget", ra.budget, "Largest class to enumerate")->capture_default_str();
  orbit->callback([&] { action = [&] { return run_check_orbit(ra); }; });
  auto* path = reach->add_subcommand("path", "Shortest operation path between two strings");
  path->add_option("from", ra.from)->required();
  path->add_option("to", ra.to)->required();
  path->add_option("--budget", ra.budget, "Most strings to store")->capture_default_str();
  path->callback([&] { action = [&] { return run_path(ra); }; });
  auto* descend = reach->add_subcommand("descend", "One descent step from a necklace");
  descend->add_option("x", ra.x)->required();
  descend->add_flag("--to-smallest", ra.to_smallest,
                    "Print a full path to the smallest string of the class instead");
  descend->callback([&] { action = [&] { return run_descend(ra); }; });

  std::size_t fib_k = 0;
  InputOptions fo;
  auto* fib = app.add_subcommand("fib", "Write the Fibonacci word F_K");
  fib->add_option("k", fib_k)->required();
  fib->add_option("-o,--output", fo.output, "Output file (default: standard output)");
  fib->add_option("--max-size", fo.max_size)->capture_default_str();
  fib->callback([&] {
    action = [&] {
      try {
        write_all(fo.output, bbwt::fibonacci_word(fib_k, fo.max_size));
      } catch (const std::length_error&) {
        throw InputError("Fibonacci word exceeds --max-size");
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "bbwt_cli: " << e.what() << '\n';
  } catch (const bbwt::BudgetExceeded& e) {
    std::cerr << "bbwt_cli: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "bbwt_cli: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    std::cerr << "bbwt_cli: " << e.what() << '\n';
  }
  return kUsage;
}
