// pb: command-line front end for the polybern shared library. All
// computation happens behind the C API; this file only parses arguments
// and renders output.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polybern.h"

namespace {

constexpr long kDefaultMaxN = 64;

// Exit codes: 0 success, 1 verification failure, 2 usage/parameter error.
[[noreturn]] void fail_with(pb_status status) {
  std::cerr << "error: " << pb_last_error_message() << " ["
            << pb_status_name(status) << "]\n";
  std::exit(status == PB_ERR_VERIFY_FAILED ? 1 : 2);
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(pb_status status) {
  if (status != PB_OK) fail_with(status);
}

// Owns a string returned across the C boundary.
struct CStr {
  char* ptr = nullptr;
  ~CStr() { pb_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

struct TableHandle {
  pb_table* ptr = nullptr;
  ~TableHandle() { pb_table_free(ptr); }
};

struct PolyHandle {
  pb_poly* ptr = nullptr;
  ~PolyHandle() { pb_poly_free(ptr); }
};

struct GraphHandle {
  pb_graph* ptr = nullptr;
  ~GraphHandle() { pb_graph_free(ptr); }
};

long max_n_cap() {
  const char* env = std::getenv("POLYBERN_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 0)
    usage_error("POLYBERN_MAX_N must be a non-negative integer");
  return v;
}

void enforce_cap(long v, const std::string& name) {
  long cap = max_n_cap();
  if (v > cap)
    usage_error(name + "=" + std::to_string(v) + " exceeds POLYBERN_MAX_N=" +
                std::to_string(cap));
}

struct Range {
  long lo = 0;
  long hi = 0;
};

// "lo..hi" inclusive, or a single value.
Range parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      long v = std::stol(text);
      return {v, v};
    }
    long lo = std::stol(text.substr(0, pos));
    long hi = std::stol(text.substr(pos + 2));
    if (lo > hi) usage_error("empty range \"" + text + "\"");
    return {lo, hi};
  } catch (const std::logic_error&) {
    usage_error("cannot parse range \"" + text + "\"");
  }
}

void emit(const std::string& text, const std::string& destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(destination, std::ios::binary);
  if (!out) usage_error("cannot open output file \"" + destination + "\"");
  out << text;
}

bool is_integer_literal(const std::string& value) {
  return value.find('/') == std::string::npos;
}

// ---- rendering ---------------------------------------------------------

struct Sequence {
  std::vector<long> index;
  std::vector<std::string> values;
};

std::string render_sequence(const Sequence& seq, const std::string& format) {
  std::ostringstream os;
  if (format == "plain") {
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      if (i > 0) os << ", ";
      os << seq.values[i];
    }
    os << "\n";
  } else if (format == "csv") {
    os << "n,value\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      os << seq.index[i] << "," << seq.values[i] << "\n";
  } else if (format == "bfile") {
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      if (!is_integer_literal(seq.values[i]))
        usage_error("bfile format requires integer values; got " + seq.values[i] +
                    " at n=" + std::to_string(seq.index[i]));
      os << seq.index[i] << " " << seq.values[i] << "\n";
    }
  } else if (format == "json") {
    nlohmann::json j;
    j["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      j["values"].push_back({{"n", seq.index[i]}, {"value", seq.values[i]}});
    os << j.dump() << "\n";
  } else if (format == "markdown") {
    os << "| n | value |\n| --- | --- |\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      os << "| " << seq.index[i] << " | " << seq.values[i] << " |\n";
  } else {
    usage_error("unknown format \"" + format + "\"");
  }
  return os.str();
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::ostringstream os;
  os << "|";
  for (const auto& cell : cells) os << " " << cell << " |";
  os << "\n";
  return os.str();
}

std::string render_table(const pb_table* table, const std::string& format) {
  int64_t rows = pb_table_rows(table);
  int64_t cols = pb_table_cols(table);
  auto cell = [&](int64_t r, int64_t c) -> std::string {
    if (pb_table_defined(table, r, c) == 0) return "";
    CStr s;
    check(pb_table_entry(table, r, c, &s.ptr));
    return s.str();
  };

  std::ostringstream os;
  if (format == "plain") {
    for (int64_t r = 0; r < rows; ++r) {
      bool first = true;
      for (int64_t c = 0; c < cols; ++c) {
        if (pb_table_defined(table, r, c) == 0) continue;
        if (!first) os << " ";
        os << cell(r, c);
        first = false;
      }
      os << "\n";
    }
  } else if (format == "csv") {
    os << "n\\k";
    for (int64_t c = 0; c < cols; ++c) os << "," << c;
    os << "\n";
    for (int64_t r = 0; r < rows; ++r) {
      os << r;
      for (int64_t c = 0; c < cols; ++c) os << "," << cell(r, c);
      os << "\n";
    }
  } else if (format == "markdown") {
    std::vector<std::string> header = {"n\\k"};
    for (int64_t c = 0; c < cols; ++c) header.push_back(std::to_string(c));
    os << markdown_row(header);
    os << markdown_row(std::vector<std::string>(header.size(), "---"));
    for (int64_t r = 0; r < rows; ++r) {
      std::vector<std::string> line = {std::to_string(r)};
      for (int64_t c = 0; c < cols; ++c) line.push_back(cell(r, c));
      os << markdown_row(line);
    }
  } else if (format == "json") {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (int64_t r = 0; r < rows; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int64_t c = 0; c < cols && pb_table_defined(table, r, c) != 0; ++c)
        row.push_back(cell(r, c));
      j["rows"].push_back(row);
    }
    os << j.dump() << "\n";
  } else {
    usage_error("format \"" + format + "\" is not available for triangles");
  }
  return os.str();
}

std::string render_poly(const pb_poly* poly, const std::string& format) {
  std::ostringstream os;
  int64_t degree = pb_poly_degree(poly);
  auto coeff = [&](int64_t i) {
    CStr s;
    check(pb_poly_coeff(poly, i, &s.ptr));
    return s.str();
  };
  if (format == "plain") {
    CStr s;
    check(pb_poly_str(poly, &s.ptr));
    os << s.str() << "\n";
  } else if (format == "json") {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    for (int64_t i = 0; i <= std::max<int64_t>(degree, 0); ++i)
      j["coeffs"].push_back(coeff(i));
    os << j.dump() << "\n";
  } else if (format == "csv") {
    os << "i,coeff\n";
    for (int64_t i = 0; i <= std::max<int64_t>(degree, 0); ++i)
      os << i << "," << coeff(i) << "\n";
  } else if (format == "bfile") {
    for (int64_t i = 0; i <= std::max<int64_t>(degree, 0); ++i) {
      std::string c = coeff(i);
      if (!is_integer_literal(c))
        usage_error("bfile format requires integer coefficients; got " + c);
      os << i << " " << c << "\n";
    }
  } else if (format == "markdown") {
    os << "| i | coeff |\n| --- | --- |\n";
    for (int64_t i = 0; i <= std::max<int64_t>(degree, 0); ++i)
      os << "| " << i << " | " << coeff(i) << " |\n";
  } else {
    usage_error("unknown format \"" + format + "\"");
  }
  return os.str();
}

// ---- subcommand wiring ---------------------------------------------------

struct StirlingArgs {
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> rows;
  std::string x;  // weighted
  long r = 0;     // r-Stirling
  long m = 0;     // mstirling
  std::string format = "plain";
  std::string output = "-";
};

void run_triangle_or_value(const std::string& kind, const StirlingArgs& args,
                           const char* extra_arg) {
  if (args.rows) {
    enforce_cap(*args.rows, "rows");
    TableHandle table;
    check(pb_table_create(kind.c_str(), *args.rows, extra_arg, &table.ptr));
    emit(render_table(table.ptr, args.format), args.output);
    return;
  }
  if (!args.n || !args.k)
    usage_error("need --n and --k for a single value, or --rows for a triangle");
  enforce_cap(*args.n, "n");
  CStr value;
  if (kind == "first") {
    check(pb_stirling_first(*args.n, *args.k, &value.ptr));
  } else if (kind == "second") {
    check(pb_stirling_second(*args.n, *args.k, &value.ptr));
  } else if (kind == "weighted") {
    check(pb_weighted_stirling(*args.n, *args.k, extra_arg, &value.ptr));
  } else if (kind == "r") {
    check(pb_r_stirling(*args.n, *args.k, args.r, &value.ptr));
  } else if (kind == "mstirling") {
    check(pb_m_stirling(*args.n, *args.k, args.m, &value.ptr));
  }
  Sequence seq{{*args.n}, {value.str()}};
  emit(render_sequence(seq, args.format), args.output);
}

void add_stirling_family(CLI::App& app) {
  auto make = [&](const std::string& name, const std::string& description) {
    auto* cmd = app.add_subcommand(name, description);
    auto args = std::make_shared<StirlingArgs>();
    cmd->add_option("--n", args->n, "row index n");
    cmd->add_option("--k", args->k, "column index k");
    cmd->add_option("--rows", args->rows, "emit the whole triangle for n = 0..rows");
    cmd->add_option("--format", args->format,
                    "plain, csv, json, markdown or bfile (default plain)");
    cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
    return std::make_pair(cmd, args);
  };

  {
    auto [cmd, args] = make("first", "signed Stirling numbers of the first kind");
    auto a = args;
    cmd->callback([a]() { run_triangle_or_value("first", *a, nullptr); });
  }
  {
    auto [cmd, args] = make("second", "Stirling numbers of the second kind");
    auto a = args;
    cmd->callback([a]() { run_triangle_or_value("second", *a, nullptr); });
  }
  {
    auto [cmd, args] = make("weighted", "weighted Stirling numbers at rational x");
    cmd->add_option("--x", args->x, "weight x as \"p/q\"")->required();
    auto a = args;
    cmd->callback([a]() { run_triangle_or_value("weighted", *a, a->x.c_str()); });
  }
  {
    auto [cmd, args] = make("r", "r-Stirling numbers {n+r, k+r}_r");
    cmd->add_option("--r", args->r, "number of distinguished elements r")->required();
    auto a = args;
    cmd->callback([a]() {
      std::string r = std::to_string(a->r);
      run_triangle_or_value("r", *a, r.c_str());
    });
  }
  {
    auto* cmd = app.add_subcommand("lah", "Lah numbers");
    auto args = std::make_shared<StirlingArgs>();
    cmd->add_option("--m", args->n, "row index m");
    cmd->add_option("--k", args->k, "column index k");
    cmd->add_option("--rows", args->rows, "emit the triangle for m = 0..rows");
    cmd->add_option("--format", args->format, "plain, csv, json, markdown or bfile");
    cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
    cmd->callback([args]() {
      if (args->rows) {
        enforce_cap(*args->rows, "rows");
        TableHandle table;
        check(pb_table_create("lah", *args->rows, nullptr, &table.ptr));
        emit(render_table(table.ptr, args->format), args->output);
        return;
      }
      if (!args->n || !args->k) usage_error("need --m and --k, or --rows");
      enforce_cap(*args->n, "m");
      CStr value;
      check(pb_lah(*args->n, *args->k, &value.ptr));
      emit(render_sequence({{*args->n}, {value.str()}}, args->format), args->output);
    });
  }
  {
    auto [cmd, args] = make("mstirling", "m-Stirling numbers of the second kind");
    cmd->add_option("--m", args->m, "shift parameter m")->required();
    auto a = args;
    cmd->callback([a]() {
      enforce_cap(a->m, "m");
      std::string m = std::to_string(a->m);
      run_triangle_or_value("mstirling", *a, m.c_str());
    });
  }
}

void add_polybern(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "polybern", "Hurwitz type poly-Bernoulli numbers (m-generalized)");
  struct Args {
    std::string n = "0";
    long m = 0;
    long k = 0;
    std::string a;
    std::string algorithm = "explicit";
    bool negative = false;
    std::string format = "plain";
    std::string output = "-";
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("--n", args->n, "index n or inclusive range lo..hi")->required();
  cmd->add_option("--m", args->m, "shift parameter m (default 0)");
  cmd->add_option("--k", args->k, "upper index k (any sign)")->required();
  cmd->add_option("--a", args->a, "Hurwitz parameter a as \"p/q\"")->required();
  cmd->add_option("--algorithm", args->algorithm, "explicit, form2 or matrix");
  cmd->add_flag("--negative", args->negative,
                "compute the (-k) value via the m-Stirling formula (k >= 0)");
  cmd->add_option("--format", args->format, "plain, csv, json, markdown or bfile");
  cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
  cmd->callback([args]() {
    Range range = parse_range(args->n);
    if (range.lo < 0) usage_error("n must be non-negative");
    enforce_cap(range.hi, "n");
    enforce_cap(args->m, "m");
    if (args->negative && args->k < 0)
      usage_error("--negative expects a non-negative --k (it computes the -k value)");
    Sequence seq;
    for (long n = range.lo; n <= range.hi; ++n) {
      CStr value;
      if (args->negative)
        check(pb_m_hpb_negative(n, args->m, args->k, args->a.c_str(), &value.ptr));
      else
        check(pb_m_hpb(n, args->m, args->k, args->a.c_str(),
                       args->algorithm.c_str(), &value.ptr));
      seq.index.push_back(n);
      seq.values.push_back(value.str());
    }
    emit(render_sequence(seq, args->format), args->output);
  });
}

void add_poly(CLI::App& app) {
  auto* cmd =
      app.add_subcommand("poly", "Hurwitz type poly-Bernoulli polynomials in x");
  struct Args {
    long n = 0;
    long m = 0;
    long k = 0;
    std::string a;
    std::string algorithm = "convolution";
    std::string format = "plain";
    std::string output = "-";
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("--n", args->n, "degree index n")->required();
  cmd->add_option("--m", args->m, "shift parameter m (default 0)");
  cmd->add_option("--k", args->k, "upper index k")->required();
  cmd->add_option("--a", args->a, "Hurwitz parameter a as \"p/q\"")->required();
  cmd->add_option("--algorithm", args->algorithm,
                  "convolution, explicit or negative");
  cmd->add_option("--format", args->format, "plain, csv, json, markdown or bfile");
  cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
  cmd->callback([args]() {
    if (args->n < 0) usage_error("n must be non-negative");
    enforce_cap(args->n, "n");
    enforce_cap(args->m, "m");
    PolyHandle poly;
    if (args->algorithm == "negative") {
      if (args->k < 0)
        usage_error("--algorithm negative expects a non-negative --k");
      check(pb_hpb_poly_negative(args->n, args->m, args->k, args->a.c_str(),
                                 &poly.ptr));
    } else {
      check(pb_hpb_poly(args->n, args->m, args->k, args->a.c_str(),
                        args->algorithm.c_str(), &poly.ptr));
    }
    emit(render_poly(poly.ptr, args->format), args->output);
  });
}

void add_chromatic(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "chromatic", "chromatic polynomial of a small graph (edge-list input)");
  struct Args {
    std::string file;
    bool use_pbar = false;
    std::string eval;
    std::string format = "plain";
    std::string output = "-";
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("file", args->file, "edge-list file, \"-\" for stdin")->required();
  cmd->add_flag("--pbar", args->use_pbar,
                "compute (-1)^n P(-x) (acyclic-orientation count) instead of P");
  cmd->add_option("--eval", args->eval, "evaluate at a rational instead of printing");
  cmd->add_option("--format", args->format, "plain, csv, json, markdown or bfile");
  cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
  cmd->callback([args]() {
    std::string text;
    if (args->file == "-") {
      std::ostringstream buffer;
      buffer << std::cin.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream in(args->file, std::ios::binary);
      if (!in) usage_error("cannot open graph file \"" + args->file + "\"");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    GraphHandle graph;
    check(pb_graph_parse(text.c_str(), &graph.ptr));
    PolyHandle poly;
    if (args->use_pbar)
      check(pb_graph_pbar(graph.ptr, &poly.ptr));
    else
      check(pb_graph_chromatic(graph.ptr, &poly.ptr));
    if (!args->eval.empty()) {
      CStr value;
      check(pb_poly_eval(poly.ptr, args->eval.c_str(), &value.ptr));
      emit(value.str() + "\n", args->output);
      return;
    }
    emit(render_poly(poly.ptr, args->format), args->output);
  });
}

std::string render_verify_plain(const nlohmann::json& report) {
  // One line per suite: "<suite>: <passing>/<total> exact".
  std::map<std::string, std::pair<int, int>> by_suite;
  for (const auto& c : report.at("checks")) {
    std::string name = c.at("name").get<std::string>();
    std::string suite = name.substr(0, name.find('/'));
    auto& [passed, total] = by_suite[suite];
    ++total;
    if (c.at("passed").get<bool>()) ++passed;
  }
  std::ostringstream os;
  for (const auto& [suite, counts] : by_suite) {
    os << suite << ": " << counts.first << "/" << counts.second;
    os << (counts.first == counts.second ? " exact" : " FAILING");
    os << "\n";
  }
  if (!report.at("passed").get<bool>()) {
    for (const auto& c : report.at("checks")) {
      if (c.at("passed").get<bool>()) continue;
      const auto& f = c.at("failures").at(0);
      os << "first failure: " << c.at("name").get<std::string>() << " at "
         << f.at("point").get<std::string>() << ": expected "
         << f.at("expected").get<std::string>() << ", got "
         << f.at("got").get<std::string>() << "\n";
      break;
    }
  }
  return os.str();
}

void add_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand("verify", "run the identity-verification suites");
  struct Args {
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::string format = "plain";
    std::string output = "-";
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("suite", args->suite,
                  "all, duality, egf, formulas, graphs, polynomials or tables");
  cmd->add_option("--seed", args->seed, "seed for the randomized property checks");
  cmd->add_option("--format", args->format, "plain or json");
  cmd->add_option("--output", args->output, "output path, \"-\" for stdout");
  cmd->callback([args]() {
    CStr json_report;
    pb_status status = pb_verify(args->suite.c_str(), args->seed, &json_report.ptr);
    if (status != PB_OK && status != PB_ERR_VERIFY_FAILED) fail_with(status);
    if (args->format == "json") {
      emit(json_report.str() + "\n", args->output);
    } else if (args->format == "plain") {
      nlohmann::json report = nlohmann::json::parse(json_report.str());
      emit(render_verify_plain(report), args->output);
    } else {
      usage_error("verify supports plain or json output");
    }
    if (status == PB_ERR_VERIFY_FAILED) std::exit(1);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stirling / poly-Bernoulli toolkit (libpolybern front end)"};
  app.require_subcommand(1);

  add_stirling_family(app);
  add_polybern(app);
  add_poly(app);
  add_chromatic(app);
  add_verify(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}
