#include "daanneal/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace daanneal {

InstanceFormatError::InstanceFormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

InstanceFormatError::InstanceFormatError(const std::string& source, const InstanceFormatError& inner)
    : std::runtime_error(source + ": " + inner.what()), line_(inner.line()) {}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InstanceFormatError(line, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

double parse_value(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || !std::isfinite(v))
    throw InstanceFormatError(line, "expected a finite number, got '" + tok + "'");
  return v;
}

std::string format_double(double v) {
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

}  // namespace

IsingInstance parse_instance_text(std::string_view text) {
  std::size_t n = 0;
  std::vector<double> fields;
  std::vector<bool> field_seen;
  std::vector<Coupling> couplings;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    const std::string& tag = tok[0];
    auto vertex = [&](const std::string& t) {
      const auto v = parse_index(t, line_no);
      if (v >= n)
        throw InstanceFormatError(line_no, "vertex " + t + " out of range for n = " + std::to_string(n));
      return v;
    };
    if (tag == "n") {
      if (n != 0) throw InstanceFormatError(line_no, "repeated header");
      if (tok.size() != 2) throw InstanceFormatError(line_no, "header must be 'n <count>'");
      n = parse_index(tok[1], line_no);
      if (n == 0) throw InstanceFormatError(line_no, "vertex count must be positive");
      fields.assign(n, 0.0);
      field_seen.assign(n, false);
      continue;
    }
    if (n == 0) throw InstanceFormatError(line_no, "entry before the 'n <count>' header");
    if (tag == "h") {
      if (tok.size() != 3) throw InstanceFormatError(line_no, "field must be 'h <x> <value>'");
      const auto x = vertex(tok[1]);
      if (field_seen[x]) throw InstanceFormatError(line_no, "duplicate field on vertex " + tok[1]);
      field_seen[x] = true;
      fields[x] = parse_value(tok[2], line_no);
    } else if (tag == "J") {
      if (tok.size() != 4) throw InstanceFormatError(line_no, "coupling must be 'J <x> <y> <value>'");
      const auto x = vertex(tok[1]);
      const auto y = vertex(tok[2]);
      if (x == y) throw InstanceFormatError(line_no, "self-loop on vertex " + tok[1]);
      if (!pairs.emplace(std::min(x, y), std::max(x, y)).second)
        throw InstanceFormatError(line_no, "duplicate coupling (" + tok[1] + "," + tok[2] + ")");
      couplings.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y), parse_value(tok[3], line_no)});
    } else {
      throw InstanceFormatError(line_no, "unknown entry '" + tag + "'");
    }
  }
  if (n == 0) throw InstanceFormatError(0, "missing 'n <count>' header");
  return IsingInstance(n, std::move(couplings), std::move(fields));
}

IsingInstance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError(0, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_text(buf.str());
  } catch (const InstanceFormatError& e) {
    throw InstanceFormatError(path, e);
  }
}

std::string format_instance(const IsingInstance& instance) {
  std::string out = "n " + std::to_string(instance.size()) + "\n";
  for (Vertex x = 0; x < instance.size(); ++x)
    if (instance.field(x) != 0.0)
      out += "h " + std::to_string(x) + " " + format_double(instance.field(x)) + "\n";
  for (const auto& c : instance.couplings())
    out += "J " + std::to_string(c.x) + " " + std::to_string(c.y) + " " + format_double(c.value) + "\n";
  return out;
}

void write_instance(const std::string& path, const IsingInstance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_instance(instance);
}

SpinConfiguration parse_spins(std::string_view text) {
  std::vector<int> spins;
  for (char c : text) {
    if (c == '+' || c == '1')
      spins.push_back(1);
    else if (c == '-' || c == '0')
      spins.push_back(-1);
    else
      throw std::invalid_argument(std::string("spin string: unexpected character '") + c + "'");
  }
  return SpinConfiguration::from_spins(spins);
}

std::string format_spins(const SpinConfiguration& sigma) {
  std::string out(sigma.size(), '-');
  for (Vertex x = 0; x < sigma.size(); ++x)
    if (sigma.is_up(x)) out[x] = '+';
  return out;
}

}  // namespace daanneal
