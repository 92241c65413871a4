#include "cesaro/panel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <regex>
#include <sstream>
#include <system_error>

#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_double(const std::string& text, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ConfigError("invalid number '" + text + "' for key '" + key + "'");
  return v;
}

std::size_t parse_size(const std::string& text, const std::string& key) {
  const double v = parse_double(text, key);
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e15)
    throw ConfigError("expected a nonnegative integer for key '" + key + "', got '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& key) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_size(item, key));
  return out;
}

// "a:b, c:d"
std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw ConfigError("pairs: expected alpha:beta, got '" + item + "'");
    out.emplace_back(parse_double(parts[0], "pairs"), parse_double(parts[1], "pairs"));
  }
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

}  // namespace

PanelConfig default_panel() {
  PanelConfig cfg;
  auto add = [&cfg](std::string name, std::string expr) {
    cfg.measures.push_back(PanelMeasure{std::move(name), expr, expr});
  };
  add("lebesgue", "lebesgue");
  add("atom_0.5", "atom(0.5,1)");
  add("atom_0.9", "atom(0.9,1)");
  add("powlaw_critical", "powlaw(c=1,gamma={s-1},delta=0)");
  add("powlaw_half", "powlaw(c=1,gamma={s-0.5},delta=2)");
  add("powlaw_quarter", "powlaw(c=1,gamma={s-0.75},delta=0)");
  add("mix_critical", "atom(0.9,0.5) + powlaw(c=2,gamma={s-1},delta=0.5)");
  add("mix_heavy", "lebesgue + powlaw(c=1,gamma={s-1.25},delta=0) + atom(0.25,1)");
  cfg.pairs = {{1.0, 1.0}, {0.5, 1.5}, {1.5, 0.5}, {1.2, 0.8}, {0.8, 1.2}};
  return cfg;
}

std::string substitute_s(std::string_view expr, double s) {
  static const std::regex placeholder(R"(\{\s*s\s*(?:([+-])\s*([0-9]*\.?[0-9]+)\s*)?\})");
  std::string out;
  const std::string src(expr);
  auto it = std::sregex_iterator(src.begin(), src.end(), placeholder);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out.append(src, last, static_cast<std::size_t>(m.position()) - last);
    double value = s;
    if (m[1].matched) {
      const double d = std::stod(m[2].str());
      value = m[1].str() == "+" ? s + d : s - d;
    }
    out += format_decimal(value);
    last = static_cast<std::size_t>(m.position() + m.length());
  }
  out.append(src, last, std::string::npos);
  return out;
}

Subject instantiate(const PanelMeasure& m, double s) {
  return Subject{m.name, parse_measure(substitute_s(m.tail_expr, s)), parse_measure(substitute_s(m.moment_expr, s))};
}

PanelConfig parse_panel_config(std::istream& in) {
  PanelConfig cfg;
  cfg.pairs = default_panel().pairs;
  PanelMeasure* current = nullptr;
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& msg) -> ConfigError {
    return ConfigError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw fail("unterminated section header");
      const std::string header = trim(std::string_view(text).substr(1, text.size() - 2));
      if (header.rfind("measure", 0) != 0) throw fail("unknown section '" + header + "'");
      const std::string name = trim(std::string_view(header).substr(7));
      if (!valid_name(name)) throw fail("measure names use letters, digits, '_', '-' or '.'");
      for (const auto& m : cfg.measures)
        if (m.name == name) throw fail("duplicate measure '" + name + "'");
      cfg.measures.push_back(PanelMeasure{name, "", ""});
      current = &cfg.measures.back();
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw fail("expected key = value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    try {
      if (current) {
        if (key == "expr") current->tail_expr = current->moment_expr = value;
        else if (key == "tail") current->tail_expr = value;
        else if (key == "moments") current->moment_expr = value;
        else throw ConfigError("unknown measure key '" + key + "'");
        continue;
      }
      auto& e = cfg.engine;
      if (key == "pairs") cfg.pairs = parse_pairs(value);
      else if (key == "sizes") e.sizes = parse_size_list(value, key);
      else if (key == "tol") e.norm.tol = parse_double(value, key);
      else if (key == "max_iter") e.norm.max_iter = static_cast<int>(parse_size(value, key));
      else if (key == "dense_limit") e.norm.dense_limit = parse_size(value, key);
      else if (key == "grid_depth") e.grid_depth = static_cast<int>(parse_size(value, key));
      else if (key == "n_max") e.n_max = parse_size(value, key);
      else if (key == "plateau_tol") e.plateau_tol = parse_double(value, key);
      else if (key == "compact_size") e.compact_size = parse_size(value, key);
      else if (key == "compact_rows") e.compact_rows = parse_size_list(value, key);
      else if (key == "compact_tol") e.compact_tol = parse_double(value, key);
      else throw ConfigError("unknown key '" + key + "'");
    } catch (const ConfigError& err) {
      throw fail(err.what());
    }
  }
  validate(cfg);
  return cfg;
}

PanelConfig load_panel_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  return parse_panel_config(in);
}

void validate(const PanelConfig& cfg) {
  if (cfg.pairs.empty()) throw ConfigError("no (alpha, beta) pairs configured");
  for (const auto& [a, b] : cfg.pairs) {
    if (!(a > 0.0 && a < 2.0 && b > 0.0 && b < 2.0))
      throw ConfigError("pair (" + format_number(a) + ", " + format_number(b) +
                        ") is outside (0,2)x(0,2)");
  }
  const auto& e = cfg.engine;
  if (e.sizes.size() < 3) throw ConfigError("sizes: need at least three section sizes");
  for (std::size_t i = 0; i < e.sizes.size(); ++i) {
    if (e.sizes[i] == 0 || (i > 0 && e.sizes[i] <= e.sizes[i - 1]))
      throw ConfigError("sizes must be positive and strictly increasing");
  }
  if (!(e.norm.tol > 0.0)) throw ConfigError("tol must be positive");
  if (e.norm.max_iter < 1) throw ConfigError("max_iter must be positive");
  if (e.grid_depth < 8) throw ConfigError("grid_depth must be at least 8");
  if (e.n_max < 64) throw ConfigError("n_max must be at least 64");
  if (!(e.plateau_tol > 0.0)) throw ConfigError("plateau_tol must be positive");
  if (!(e.compact_tol > 0.0)) throw ConfigError("compact_tol must be positive");
  if (e.compact_rows.size() < 2) throw ConfigError("compact_rows: need at least two rows");
  for (std::size_t i = 1; i < e.compact_rows.size(); ++i)
    if (e.compact_rows[i] <= e.compact_rows[i - 1]) throw ConfigError("compact_rows must be strictly increasing");
  if (e.compact_rows.back() >= e.compact_size) throw ConfigError("compact_rows must stay below compact_size");
  if (cfg.measures.empty()) throw ConfigError("no measures configured");
  for (const auto& m : cfg.measures) {
    if (m.tail_expr.empty() || m.moment_expr.empty())
      throw ConfigError("measure '" + m.name + "' needs expr, or both tail and moments");
    for (const auto& [a, b] : cfg.pairs) {
      try {
        (void)instantiate(m, carleson_exponent(a, b));
      } catch (const std::exception& err) {
        throw ConfigError("measure '" + m.name + "': " + err.what());
      }
    }
  }
}

std::vector<EquivalenceReport> run_panel(const PanelConfig& cfg, unsigned threads) {
  validate(cfg);
  struct Job {
    const PanelMeasure* measure;
    double alpha;
    double beta;
  };
  std::vector<Job> jobs;
  for (const auto& m : cfg.measures)
    for (const auto& [a, b] : cfg.pairs) jobs.push_back(Job{&m, a, b});
  std::vector<EquivalenceReport> reports(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const auto& job = jobs[i];
    const Subject subject = instantiate(*job.measure, carleson_exponent(job.alpha, job.beta));
    reports[i] = check_equivalence(subject, job.alpha, job.beta, cfg.engine);
  });
  std::stable_sort(reports.begin(), reports.end(), [](const auto& x, const auto& y) {
    if (x.measure != y.measure) return x.measure < y.measure;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.beta < y.beta;
  });
  return reports;
}

}  // namespace cesaro
