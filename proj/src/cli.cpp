#include "adinkra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "adinkra/error.hpp"
#include "adinkra/graph.hpp"
#include "adinkra/monodromy.hpp"
#include "adinkra/report_json.hpp"

namespace adinkra::cli {

namespace {

using monodromy::AnalysisReport;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_rainbow(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "rainbow entries must be integers: '" + text + "'");
    }
  }
  return out;
}

// Writes to --out when given, otherwise to the stream.
void emit(const CliConfig& config, std::ostream& out, const std::string& text) {
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) throw Error(Errc::parse_error, "cannot write '" + *config.out + "'");
    file << text;
  } else {
    out << text;
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string describe_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "N: " << r.n << "\n"
     << "k: " << r.k << "\n"
     << "d: " << r.d << "\n"
     << "generators: " << (r.generators.empty() ? "-" : join(r.generators, ",")) << "\n"
     << "h1 in C: " << (r.h1_in_code ? "yes" : "no") << "\n"
     << "genus: " << r.genus << "\n"
     << "K: " << monodromy::to_string(r.k_tag) << "\n"
     << "chi0: " << r.chi0 << "\n"
     << "|H|: " << r.h_order << " (G_" << r.h_structure << ")\n"
     << "|Sigma|: " << r.sigma_order << (r.sigma_elementary_abelian ? " (elementary abelian)" : "") << "\n"
     << "|M|: " << r.m_order << "\n"
     << "relation: ";
  if (r.relation_witness) {
    os << r.relation_witness->word << " = " << (r.relation_witness->sign > 0 ? "+" : "-") << "1\n";
  } else {
    os << "none\n";
  }
  os << "components: " << r.components << "\n";
  return os.str();
}

AnalysisReport analyze_with_rainbow(const graph::Adinkra& base, const std::optional<std::vector<int>>& rainbow) {
  graph::Adinkra a = rainbow ? graph::relabel_colors(base, *rainbow) : base;
  auto report = monodromy::analyze(a);
  if (rainbow) report.rainbow_applied = *rainbow;
  return report;
}

struct CodeCheck {
  int n = 0;
  bool h1_in_code = false;
  bool dashing = false;
  bool analysis = false;
  bool snake = false;
  bool gr = false;
  std::optional<bool> relation;
  bool gauge = false;
  std::string failure;
};

CodeCheck check_code(const gf2::LinearCode& code) {
  CodeCheck c;
  c.n = code.length();
  c.h1_in_code = gf2::contains(code, gf2::BinaryWord::all_ones(c.n));
  try {
    const auto a = graph::build_quotient(code);
    c.dashing = graph::validate(a).ok();
    const auto g = monodromy::gar_matrices(a);
    c.gr = monodromy::gr_relations_hold(g);
    if (c.n % 2 == 0) c.relation = monodromy::find_relation(g).has_value() == c.h1_in_code;
    const auto r = monodromy::analyze(a);
    c.analysis = true;
    const std::size_t k_size = r.k_tag == monodromy::KTag::trivial ? 1 : 2;
    c.snake = r.sigma_order * k_size == std::size_t{2} << r.k;
    const auto s = monodromy::analyze(graph::switch_vertex(a, {graph::Side::fermion, 0}));
    c.gauge = s.chi0 == r.chi0 && s.h_order == r.h_order && s.sigma_order == r.sigma_order &&
              s.m_order == r.m_order;
  } catch (const Error& e) {
    c.failure = e.what();
  }
  return c;
}

std::vector<CodeCheck> check_all(const std::vector<gf2::LinearCode>& codes) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CodeCheck> results(codes.size());
  for (std::size_t start = 0; start < codes.size(); start += workers) {
    std::vector<std::future<CodeCheck>> batch;
    const std::size_t end = std::min(codes.size(), start + workers);
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, check_code, std::cref(codes[i])));
    }
    for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
  }
  return results;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t total = 0;

  void add(bool ok) {
    ++total;
    pass += ok ? 1 : 0;
  }
  bool ok() const { return pass == total; }
};

}  // namespace

int exit_code_for(const Error& e) {
  return e.code() == Errc::theorem_violation ? kExitViolation : kExitInput;
}

gf2::LinearCode load_code(const CliConfig& config) {
  if (config.code_file && config.gens) throw Error(Errc::parse_error, "give either --code or --gens, not both");
  if (config.code_file) return gf2::LinearCode::parse(read_file(*config.code_file));
  if (config.gens) {
    std::string text = *config.gens;
    std::replace(text.begin(), text.end(), ',', '\n');
    return gf2::LinearCode::parse(text);
  }
  throw Error(Errc::parse_error, "a code is required: use --code <file> or --gens <w1,w2,...>");
}

int run_analyze(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    AnalysisReport report;
    if (config.from_report) {
      const auto j = nlohmann::json::parse(read_file(*config.from_report), nullptr, false);
      if (j.is_discarded()) throw Error(Errc::parse_error, "report is not valid JSON");
      report = monodromy::analyze(adinkra_from_report(j));
      report.rainbow_applied = j.at("rainbow_applied").get<std::vector<int>>();
    } else {
      report = analyze_with_rainbow(graph::build_quotient(load_code(config)), config.rainbow);
    }
    const Format format = config.format.value_or(Format::json);
    if (format == Format::dot) throw Error(Errc::parse_error, "analyze writes json or text");
    emit(config, out, format == Format::json ? to_json(report).dump(2) + "\n" : describe_text(report));
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const int n = config.n;
    const auto codes = gf2::enumerate_doubly_even_codes(n, config.kmax.value_or(n));
    std::vector<AnalysisReport> reports;
    for (const auto& code : codes) reports.push_back(monodromy::analyze(graph::build_quotient(code)));

    const Format format = config.format.value_or(Format::text);
    if (format == Format::json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : reports) rows.push_back(to_json(r));
      emit(config, out, rows.dump(2) + "\n");
      return kExitOk;
    }
    if (format == Format::dot) throw Error(Errc::parse_error, "enumerate writes json or text");
    std::ostringstream os;
    os << std::left << std::setw(28) << "generators" << std::setw(4) << "k" << std::setw(6) << "d"
       << std::setw(7) << "genus" << std::setw(6) << "h1" << std::setw(6) << "chi0" << std::setw(6)
       << "|H|" << std::setw(6) << "H" << std::setw(8) << "|Sigma|" << "|M|\n";
    for (const auto& r : reports) {
      os << std::setw(28) << (r.generators.empty() ? "-" : join(r.generators, ",")) << std::setw(4) << r.k
         << std::setw(6) << r.d << std::setw(7) << r.genus << std::setw(6) << (r.h1_in_code ? "yes" : "no")
         << std::setw(6) << r.chi0 << std::setw(6) << r.h_order << std::setw(6)
         << ("G_" + std::to_string(r.h_structure)) << std::setw(8) << r.sigma_order << r.m_order << "\n";
    }
    emit(config, out, os.str());
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.nmax < 2 || config.nmax > gf2::kMaxEnumerationLength) {
    err << "error (size-guard): --nmax must be in [2, 8]\n";
    return kExitInput;
  }
  Tally dashing, theorem_out, theorem_in, gr, relation, snake, gauge, cube;
  std::ostringstream os;
  for (int n = 2; n <= config.nmax; ++n) {
    const auto codes = gf2::enumerate_doubly_even_codes(n, n);
    const auto checks = check_all(codes);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      dashing.add(c.dashing);
      (c.h1_in_code ? theorem_in : theorem_out).add(c.analysis);
      gr.add(c.gr);
      if (n % 2 == 0) relation.add(c.relation.value_or(false));
      snake.add(c.snake);
      gauge.add(c.gauge);
      if (!c.failure.empty()) {
        const auto& gens = codes[i].generators();
        std::vector<std::string> words;
        for (const auto& g : gens) words.push_back(g.to_string());
        os << "FAIL N=" << n << " <" << join(words, ",") << ">: " << c.failure << "\n";
      }
    }
    cube.add(graph::validate(graph::build_cubical(n)).ok());
    os << "N=" << n << ": " << codes.size() << " doubly-even codes\n";
  }
  auto line = [&](const std::string& name, const Tally& t) {
    os << name << ": ";
    if (t.total == 0) {
      os << "0 cases\n";
    } else {
      os << t.pass << "/" << t.total << (t.ok() ? " pass" : " FAIL") << "\n";
    }
  };
  line("odd-dashing solver", dashing);
  line("cube dashing formula", cube);
  line("main theorem (h1 not in C)", theorem_out);
  line("main theorem (h1 in C)", theorem_in);
  line("GR(d,N) algebra", gr);
  line("relation theorem (even N)", relation);
  line("snake lemma |Sigma| = 2|C|/|K|", snake);
  line("gauge invariance", gauge);
  const bool all = dashing.ok() && cube.ok() && theorem_out.ok() && theorem_in.ok() && gr.ok() &&
                   relation.ok() && snake.ok() && gauge.ok();
  os << "result: " << (all ? "PASS" : "FAIL") << "\n";
  out << os.str();
  return all ? kExitOk : kExitViolation;
}

int run_export(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto a = graph::build_quotient(load_code(config));
    if (config.rainbow) a = graph::relabel_colors(a, *config.rainbow);
    emit(config, out, graph::export_dot(a));
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "analyze") return run_analyze(config, out, err);
  if (config.subcommand == "enumerate") return run_enumerate(config, out, err);
  if (config.subcommand == "verify") return run_verify(config, out, err);
  if (config.subcommand == "export") return run_export(config, out, err);
  err << "unknown subcommand '" << config.subcommand << "'\n";
  return kExitInput;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adinkra signed monodromy toolkit"};
  app.require_subcommand(1);
  CliConfig config;
  std::string rainbow;
  std::string format;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}, {"dot", Format::dot}};
  auto add_code_options = [&](CLI::App* sub) {
    sub->add_option("--code", config.code_file, "file with one generator word per line");
    sub->add_option("--gens", config.gens, "comma-separated generator words");
    sub->add_option("--rainbow", rainbow, "color order as a comma-separated permutation of 1..N");
    sub->add_option("--out", config.out, "output path");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze the Adinkra of a doubly-even code");
  add_code_options(analyze);
  analyze->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--from-report", config.from_report, "rebuild the Adinkra recorded in a JSON report");

  auto* enumerate = app.add_subcommand("enumerate", "analyze every doubly-even code of length N");
  enumerate->add_option("--n", config.n, "code length N")->required();
  enumerate->add_option("--kmax", config.kmax, "maximum code dimension");
  enumerate->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  enumerate->add_option("--out", config.out, "output path");

  auto* verify = app.add_subcommand("verify", "check the structure theorems over all codes up to N_max");
  verify->add_option("--nmax", config.nmax, "largest code length (<= 8)");

  auto* export_cmd = app.add_subcommand("export", "write the Adinkra as DOT");
  add_code_options(export_cmd);
  export_cmd->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (!format.empty()) config.format = formats.at(format);
  try {
    if (!rainbow.empty()) config.rainbow = parse_rainbow(rainbow);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInput;
  }
  return run(config, out, err);
}

}  // namespace adinkra::cli
