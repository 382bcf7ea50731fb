#include "cgrp/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cgrp/errors.hpp"
#include "cgrp/spline.hpp"

namespace cgrp {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::map<std::string, Section> tokenize(const std::string& text) {
  static const std::set<std::string> known = {"gas",       "left",  "right",
                                              "interface", "time",  "output"};
  std::map<std::string, Section> out;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string stripped =
        trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (stripped.empty()) continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']')
        throw ParseError(line, "unterminated section header '" + stripped +
                                   "'");
      section = trim(stripped.substr(1, stripped.size() - 2));
      if (!known.count(section))
        throw ParseError(line, "unknown section [" + section + "]");
      out[section];
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError(line, "expected 'key = value', got '" + stripped + "'");
    if (section.empty())
      throw ParseError(line, "key outside of any [section]");
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) throw ParseError(line, "empty key");
    Section& sec = out[section];
    if (sec.count(key))
      throw ParseError(line, "duplicate key '" + key + "' in [" + section +
                                 "]");
    sec[key] = Entry{trim(stripped.substr(eq + 1)), line, false};
  }
  return out;
}

double parse_double(const Entry& e, const std::string& name) {
  const char* s = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !std::isfinite(v))
    throw ParseError(e.line, name + ": not a number: '" + e.value + "'");
  return v;
}

int parse_int(const Entry& e, const std::string& name) {
  const double v = parse_double(e, name);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ParseError(e.line, name + ": not an integer: '" + e.value + "'");
  return static_cast<int>(v);
}

std::vector<double> parse_list(const Entry& e, const std::string& name) {
  std::vector<double> out;
  std::istringstream in(e.value);
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
      throw ParseError(e.line, name + ": not a number: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(e.line, name + ": empty list");
  return out;
}

class SectionReader {
 public:
  SectionReader(std::map<std::string, Section>& all, const std::string& name)
      : name_(name) {
    const auto it = all.find(name);
    if (it == all.end())
      throw ParseError(0, "missing required section [" + name + "]");
    sec_ = &it->second;
  }

  Entry* find(const std::string& key) {
    const auto it = sec_->find(key);
    if (it == sec_->end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  Entry& require(const std::string& key) {
    Entry* e = find(key);
    if (!e)
      throw ParseError(0, "missing key '" + key + "' in [" + name_ + "]");
    return *e;
  }

  double number(const std::string& key) {
    return parse_double(require(key), name_ + "." + key);
  }
  int integer(const std::string& key) {
    return parse_int(require(key), name_ + "." + key);
  }
  std::vector<double> list(const std::string& key) {
    return parse_list(require(key), name_ + "." + key);
  }

  void reject_unused() const {
    for (const auto& [key, entry] : *sec_)
      if (!entry.used)
        throw ParseError(entry.line,
                         "unknown key '" + key + "' in [" + name_ + "]");
  }

 private:
  std::string name_;
  Section* sec_;
};

DomainConfig read_domain(std::map<std::string, Section>& all,
                         const std::string& name) {
  SectionReader sec(all, name);
  DomainConfig d;
  d.x_min = sec.number("x_min");
  d.x_max = sec.number("x_max");
  d.base_cells = sec.integer("base_cells");
  d.state = PrimState{sec.number("rho"), sec.number("u"), sec.number("p")};
  Entry* nodes = sec.find("bump_nodes");
  Entry* values = sec.find("bump_values");
  if (!nodes != !values)
    throw ParseError((nodes ? nodes : values)->line,
                     "bump_nodes and bump_values must appear together");
  if (nodes) {
    BumpSpec bump;
    bump.nodes = parse_list(*nodes, name + ".bump_nodes");
    bump.values = parse_list(*values, name + ".bump_values");
    d.rho_bump = std::move(bump);
  }
  sec.reject_unused();
  return d;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

void validate_domain(const DomainConfig& d, const std::string& name) {
  check(d.x_max > d.x_min, name + ": x_max must exceed x_min");
  check(d.base_cells >= 1, name + ": base_cells must be >= 1");
  check(d.state.rho > 0.0, name + ": rho must be positive");
  check(d.state.p > 0.0, name + ": p must be positive");
  if (d.rho_bump) {
    const BumpSpec& b = *d.rho_bump;
    check(b.nodes.size() == b.values.size() && b.nodes.size() >= 3,
          name + ": bump table needs >= 3 matching nodes/values");
    check(std::is_sorted(b.nodes.begin(), b.nodes.end()),
          name + ": bump nodes must be ascending");
    check(b.nodes.front() >= d.x_min && b.nodes.back() <= d.x_max,
          name + ": bump support must lie inside the domain");
  }
}

}  // namespace

SimConfig parse_config(const std::string& text) {
  auto sections = tokenize(text);
  SimConfig cfg;

  {
    SectionReader gas(sections, "gas");
    cfg.gas.gamma = gas.number("gamma");
    cfg.gas.r_sgc = gas.number("r_sgc");
    gas.reject_unused();
  }
  cfg.left = read_domain(sections, "left");
  cfg.right = read_domain(sections, "right");
  {
    SectionReader iface(sections, "interface");
    const Entry& kind = iface.require("outtake");
    if (kind.value == "constant") {
      cfg.outtake.kind = OuttakeSpec::Kind::constant;
      cfg.outtake.value = iface.number("value");
    } else if (kind.value == "piecewise_linear" ||
               kind.value == "periodic_spline") {
      cfg.outtake.kind = kind.value == "piecewise_linear"
                             ? OuttakeSpec::Kind::piecewise_linear
                             : OuttakeSpec::Kind::periodic_spline;
      cfg.outtake.nodes = iface.list("nodes");
      cfg.outtake.values = iface.list("values");
    } else {
      throw ParseError(kind.line, "outtake must be constant, "
                                  "piecewise_linear or periodic_spline");
    }
    iface.reject_unused();
  }
  {
    SectionReader time(sections, "time");
    cfg.t_end = time.number("t_end");
    cfg.c_cfl = time.number("c_cfl");
    cfg.level = time.integer("level");
    time.reject_unused();
  }
  if (sections.count("output")) {
    SectionReader output(sections, "output");
    if (Entry* dir = output.find("dir")) cfg.output_dir = dir->value;
    if (Entry* iv = output.find("snapshot_interval"))
      cfg.snapshot_interval = parse_double(*iv, "output.snapshot_interval");
    output.reject_unused();
  }

  check(cfg.gas.gamma > 1.0, "gas: gamma must exceed 1");
  check(cfg.gas.r_sgc > 0.0, "gas: r_sgc must be positive");
  validate_domain(cfg.left, "left");
  validate_domain(cfg.right, "right");
  check(cfg.left.x_max == 0.0, "left: domain must end at the interface x = 0");
  check(cfg.right.x_min == 0.0,
        "right: domain must start at the interface x = 0");
  check(cfg.t_end >= 0.0, "time: t_end must be nonnegative");
  check(cfg.c_cfl > 0.0 && cfg.c_cfl <= 1.0, "time: c_cfl must lie in (0, 1]");
  check(cfg.level >= 0, "time: level must be nonnegative");
  check(cfg.snapshot_interval >= 0.0,
        "output: snapshot_interval must be nonnegative");
  if (cfg.outtake.kind != OuttakeSpec::Kind::constant) {
    check(cfg.outtake.nodes.size() == cfg.outtake.values.size() &&
              cfg.outtake.nodes.size() >= 2,
          "interface: outtake table needs >= 2 matching nodes/values");
    check(std::is_sorted(cfg.outtake.nodes.begin(), cfg.outtake.nodes.end()),
          "interface: outtake nodes must be ascending");
    for (double v : cfg.outtake.values)
      check(v >= 0.0, "interface: outtake values must be nonnegative");
  } else {
    check(cfg.outtake.value >= 0.0,
          "interface: outtake value must be nonnegative");
  }
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

OuttakeProfile make_outtake(const OuttakeSpec& spec) {
  switch (spec.kind) {
    case OuttakeSpec::Kind::constant:
      return OuttakeProfile::constant(spec.value);
    case OuttakeSpec::Kind::piecewise_linear:
      return OuttakeProfile::piecewise_linear(spec.nodes, spec.values);
    case OuttakeSpec::Kind::periodic_spline:
      return OuttakeProfile::periodic_spline(spec.nodes, spec.values);
  }
  throw ValidationError("unreachable outtake kind");
}

TwoDomainState build_state(const SimConfig& cfg, int level) {
  check(level >= 0, "level must be nonnegative");
  const int scale = 1 << level;

  auto build = [&](const DomainConfig& d, Side side) {
    DomainGrid grid{d.x_min, d.x_max, d.base_cells * scale, side};
    std::optional<PeriodicSpline> bump;
    if (d.rho_bump)
      bump.emplace(d.rho_bump->nodes, d.rho_bump->values);
    const PrimState w = d.state;
    const double gm1 = cfg.gas.gamma - 1.0;
    auto avg = [w, gm1, &bump](double a, double b) {
      double rho = w.rho;
      if (bump) rho += bump->integral(a, b) / (b - a);
      return ConsState{rho, rho * w.u, w.p / gm1 + 0.5 * rho * w.u * w.u};
    };
    return make_domain(grid, avg, cfg.gas);
  };

  auto pinned = [&](const DomainConfig& d, double x_far) {
    PrimState w = d.state;
    if (d.rho_bump)
      w.rho += PeriodicSpline(d.rho_bump->nodes, d.rho_bump->values)(x_far);
    return FarFieldSpec{w};
  };

  TwoDomainState s;
  s.left = build(cfg.left, Side::left);
  s.right = build(cfg.right, Side::right);
  s.far_left = pinned(cfg.left, cfg.left.x_min);
  s.far_right = pinned(cfg.right, cfg.right.x_max);
  return s;
}

std::vector<double> snapshot_schedule(const SimConfig& cfg) {
  std::vector<double> times;
  if (cfg.snapshot_interval <= 0.0) return times;
  for (double t = cfg.snapshot_interval; t < cfg.t_end * (1.0 - 1e-12);
       t += cfg.snapshot_interval)
    times.push_back(t);
  return times;
}

}  // namespace cgrp
