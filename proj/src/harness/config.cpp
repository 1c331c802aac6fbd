#include "msm/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace msm {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> kKeys = {
    {"grid", {"n", "length"}},
    {"time", {"dt", "T", "stride", "snapshot_stride"}},
    {"ensemble", {"count", "seed", "amplitude", "decay", "bandwidth"}},
    {"experiment", {"id", "s", "q", "delta", "epsilon", "draws", "input"}},
};

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number for " + key + ": " + text);
  }
  if (used != text.size()) throw std::invalid_argument("bad number for " + key + ": " + text);
  return v;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad integer for " + key + ": " + text);
  }
  return std::stoull(text);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::size_t ExperimentConfig::steps() const {
  return static_cast<std::size_t>(std::llround(horizon / dt));
}

double parse_length(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    const std::string factor = trim(t.substr(0, t.size() - 2));
    return (factor.empty() ? 1.0 : to_double("length", factor)) * std::numbers::pi;
  }
  return to_double("length", t);
}

void validate(const ExperimentConfig& c) {
  (void)c.grid();
  if (!(c.q > 4.0)) throw std::invalid_argument("q must exceed 4");
  if (!(c.dt > 0.0) || !(c.horizon >= 0.0)) throw std::invalid_argument("dt must be positive and T nonnegative");
  if (c.stride == 0) throw std::invalid_argument("stride must be positive");
  if (!(c.amplitude >= 0.0)) throw std::invalid_argument("amplitude must be nonnegative");
  if (!(c.bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  if (!(c.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (c.deltas.empty()) throw std::invalid_argument("delta list is empty");
  for (const double d : c.deltas) {
    if (!(d >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  }
  if (c.draws == 0) throw std::invalid_argument("draws must be positive");
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config syntax: ") + e.what());
  }
  ExperimentConfig c;
  for (const auto& [section, body] : tree) {
    const auto known = kKeys.find(section);
    if (known == kKeys.end()) throw std::invalid_argument("unknown config section [" + section + "]");
    for (const auto& [key, node] : body) {
      if (!known->second.contains(key)) {
        throw std::invalid_argument("unknown config key " + section + "." + key);
      }
      const std::string v = trim(node.get_value<std::string>());
      const std::string name = section + "." + key;
      if (key == "n") c.n = to_unsigned(name, v);
      else if (key == "length") c.length = parse_length(v);
      else if (key == "dt") c.dt = to_double(name, v);
      else if (key == "T") c.horizon = to_double(name, v);
      else if (key == "stride") c.stride = to_unsigned(name, v);
      else if (key == "snapshot_stride") c.snapshot_stride = to_unsigned(name, v);
      else if (key == "count") c.count = to_unsigned(name, v);
      else if (key == "seed") c.seed = to_unsigned(name, v);
      else if (key == "amplitude") c.amplitude = to_double(name, v);
      else if (key == "decay") c.decay = to_double(name, v);
      else if (key == "bandwidth") c.bandwidth = to_double(name, v);
      else if (key == "id") c.id = v;
      else if (key == "s") c.s = to_double(name, v);
      else if (key == "q") c.q = to_double(name, v);
      else if (key == "epsilon") c.epsilon = to_double(name, v);
      else if (key == "draws") c.draws = to_unsigned(name, v);
      else if (key == "input") c.input = v;
      else if (key == "delta") {
        c.deltas.clear();
        std::stringstream list(v);
        std::string item;
        while (std::getline(list, item, ',')) c.deltas.push_back(to_double(name, trim(item)));
      }
    }
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  return parse_config(in);
}

std::string to_ini(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[grid]\nn = " << c.n << "\nlength = " << number(c.length) << "\n\n";
  out << "[time]\ndt = " << number(c.dt) << "\nT = " << number(c.horizon) << "\nstride = " << c.stride
      << "\nsnapshot_stride = " << c.snapshot_stride << "\n\n";
  out << "[ensemble]\ncount = " << c.count << "\nseed = " << c.seed << "\namplitude = " << number(c.amplitude)
      << "\ndecay = " << number(c.decay) << "\nbandwidth = " << number(c.bandwidth) << "\n\n";
  out << "[experiment]\nid = " << c.id << "\ns = " << number(c.s) << "\nq = " << number(c.q) << "\ndelta = ";
  for (std::size_t i = 0; i < c.deltas.size(); ++i) out << (i ? ", " : "") << number(c.deltas[i]);
  out << "\nepsilon = " << number(c.epsilon) << "\ndraws = " << c.draws << "\n";
  if (!c.input.empty()) out << "input = " << c.input << "\n";
  return out.str();
}

std::string config_hash(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : to_ini(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace msm
