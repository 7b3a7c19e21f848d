#include "daanneal/schedules.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace daanneal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("schedule: " + what);
}

// Shortest text that parses back to the same double.
std::string number(double v) {
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), "not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_values(std::istream& in) {
  std::vector<double> values;
  std::string token;
  while (in >> token) values.push_back(parse_number(token));
  return values;
}

}  // namespace

CoolingSchedule::CoolingSchedule(Family family) : family_(std::move(family)) {
  std::visit(overloaded{
                 [](const schedule::Constant& f) {
                   require(f.beta > 0 && std::isfinite(f.beta), "constant beta must be positive");
                 },
                 [](const schedule::Logarithmic& f) {
                   require(f.gamma > 0 && std::isfinite(f.gamma), "log gamma must be positive");
                   require(f.k0 >= 0 && std::isfinite(f.k0), "log k0 must be nonnegative");
                 },
                 [](const schedule::Geometric& f) {
                   require(f.beta0 > 0 && std::isfinite(f.beta0), "geom beta0 must be positive");
                   require(f.ratio > 1 && std::isfinite(f.ratio), "geom ratio must exceed 1");
                 },
                 [](const schedule::Linear& f) {
                   require(f.beta0 > 0 && std::isfinite(f.beta0), "linear beta0 must be positive");
                   require(f.slope > 0 && std::isfinite(f.slope), "linear slope must be positive");
                 },
                 [](const schedule::Table& f) {
                   require(!f.values.empty(), "table is empty");
                   for (std::size_t i = 0; i < f.values.size(); ++i) {
                     require(f.values[i] > 0 && std::isfinite(f.values[i]),
                             "table entry " + std::to_string(i + 1) + " is not positive");
                     require(i == 0 || f.values[i] >= f.values[i - 1],
                             "table decreases at entry " + std::to_string(i + 1));
                   }
                 },
             },
             family_);
}

std::string CoolingSchedule::describe() const {
  return std::visit(
      overloaded{
          [](const schedule::Constant& f) { return "const:beta=" + number(f.beta); },
          [](const schedule::Logarithmic& f) {
            return "log:gamma=" + number(f.gamma) + ",k0=" + number(f.k0);
          },
          [](const schedule::Geometric& f) {
            return "geom:beta0=" + number(f.beta0) + ",r=" + number(f.ratio);
          },
          [](const schedule::Linear& f) {
            return "linear:beta0=" + number(f.beta0) + ",slope=" + number(f.slope);
          },
          [](const schedule::Table& f) {
            std::string out = "table:=";
            for (std::size_t i = 0; i < f.values.size(); ++i)
              out += (i ? "," : "") + number(f.values[i]);
            return out;
          },
      },
      family_);
}

double beta_at(const CoolingSchedule& schedule, std::uint64_t k) {
  if (k == 0) throw std::out_of_range("beta_at: steps are numbered from 1");
  const double kk = static_cast<double>(k);
  return std::visit(
      overloaded{
          [](const schedule::Constant& f) { return f.beta; },
          [kk](const schedule::Logarithmic& f) { return std::log(kk + f.k0) / f.gamma; },
          [kk](const schedule::Geometric& f) { return f.beta0 * std::pow(f.ratio, kk - 1.0); },
          [kk](const schedule::Linear& f) { return f.beta0 + f.slope * (kk - 1.0); },
          [k](const schedule::Table& f) {
            if (k > f.values.size())
              throw std::out_of_range("beta_at: step " + std::to_string(k) +
                                      " is past the end of the table");
            return f.values[k - 1];
          },
      },
      schedule.family());
}

bool is_valid_prefix(const CoolingSchedule& schedule, std::uint64_t prefix) {
  double previous = 0.0;
  for (std::uint64_t k = 1; k <= prefix; ++k) {
    const double b = beta_at(schedule, k);
    if (!(b > 0.0) || b < previous) return false;
    previous = b;
  }
  return true;
}

std::string_view to_string(Divergence d) {
  switch (d) {
    case Divergence::Diverges: return "Diverges";
    case Divergence::Converges: return "Converges";
    case Divergence::Unknown: return "Unknown";
  }
  return "Unknown";
}

Divergence classify_condition(const CoolingSchedule& schedule, double gamma_star) {
  if (!(gamma_star >= 0.0) || !std::isfinite(gamma_star))
    throw std::invalid_argument("classify_condition: gamma* must be a nonnegative real");
  return std::visit(
      overloaded{
          [](const schedule::Table&) { return Divergence::Unknown; },
          [gamma_star](const schedule::Constant&) {
            (void)gamma_star;
            return Divergence::Diverges;
          },
          // Terms are (k + k0)^(-gamma*/gamma): a p-series with p = gamma*/gamma.
          [gamma_star](const schedule::Logarithmic& f) {
            return f.gamma >= gamma_star ? Divergence::Diverges : Divergence::Converges;
          },
          [gamma_star](const auto&) {
            return gamma_star == 0.0 ? Divergence::Diverges : Divergence::Converges;
          },
      },
      schedule.family());
}

double partial_sum(const CoolingSchedule& schedule, double gamma_star, std::uint64_t steps) {
  if (!(gamma_star >= 0.0)) throw std::invalid_argument("partial_sum: gamma* must be nonnegative");
  double sum = 0.0;
  for (std::uint64_t k = 1; k <= steps; ++k) sum += std::exp(-beta_at(schedule, k) * gamma_star);
  return sum;
}

CoolingSchedule parse_schedule(std::string_view text) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, "expected <family>:<parameters> in '" +
                                               std::string(text) + "'");
  const std::string kind(text.substr(0, colon));
  const std::string rest(text.substr(colon + 1));

  if (kind == "table") {
    schedule::Table table;
    if (!rest.empty() && rest.front() == '=') {
      std::string inline_values = rest.substr(1);
      for (auto& c : inline_values)
        if (c == ',') c = ' ';
      std::istringstream in(inline_values);
      table.values = parse_values(in);
    } else {
      std::ifstream in(rest);
      require(in.good(), "cannot open table file '" + rest + "'");
      table.values = parse_values(in);
    }
    return CoolingSchedule(std::move(table));
  }

  std::map<std::string, double> params;
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    require(eq != std::string::npos, "expected key=value, got '" + item + "'");
    const auto key = item.substr(0, eq);
    require(params.count(key) == 0, "repeated parameter '" + key + "'");
    params[key] = parse_number(item.substr(eq + 1));
  }
  auto take = [&](const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
      require(fallback.has_value(), kind + " schedule needs '" + key + "'");
      return *fallback;
    }
    const double v = it->second;
    params.erase(it);
    return v;
  };

  std::optional<CoolingSchedule> out;
  if (kind == "const") {
    out.emplace(schedule::Constant{take("beta")});
  } else if (kind == "log") {
    const double gamma = take("gamma");
    out.emplace(schedule::Logarithmic{gamma, take("k0", 1.0)});
  } else if (kind == "geom") {
    const double beta0 = take("beta0");
    out.emplace(schedule::Geometric{beta0, take("r")});
  } else if (kind == "linear") {
    const double beta0 = take("beta0");
    out.emplace(schedule::Linear{beta0, take("slope")});
  } else {
    require(false, "unknown family '" + kind + "'");
  }
  require(params.empty(), "unexpected parameter '" + (params.empty() ? "" : params.begin()->first) + "'");
  return *out;
}

}  // namespace daanneal
