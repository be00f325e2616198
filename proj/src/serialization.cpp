#include "serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sharpyoung {

std::string format_double(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string to_csv(const GridFunction& f) {
  std::string out = "x,value\n";
  const Grid& g = f.grid();
  for (int i = 0; i < f.size(); ++i) {
    out += format_double(g.x(i));
    out += ',';
    out += format_double(f[i]);
    out += '\n';
  }
  return out;
}

GridFunction from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "x,value") throw std::runtime_error("csv: header row 'x,value' required");

  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("csv: malformed row '" + line + "'");
    double x, v;
    auto r1 = std::from_chars(line.data(), line.data() + comma, x);
    auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), v);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != line.data() + comma ||
        r2.ptr != line.data() + line.size())
      throw std::runtime_error("csv: malformed row '" + line + "'");
    xs.push_back(x);
    vs.push_back(v);
  }
  if (xs.size() < 2) throw std::runtime_error("csv: needs at least two rows");
  const int n = static_cast<int>(xs.size());
  const double step = (xs.back() - xs.front()) / (n - 1);
  if (!(step > 0.0)) throw std::runtime_error("csv: x must be strictly increasing");
  for (int i = 0; i < n; ++i)
    if (std::abs(xs[i] - (xs.front() + step * i)) > 1e-9 * std::max(1.0, std::abs(xs[i])))
      throw std::runtime_error("csv: x must be uniform");
  return GridFunction(Grid{xs.front(), xs.back(), n}, std::move(vs));
}

std::string to_json(const GridFunction& f) {
  nlohmann::ordered_json j;
  j["lo"] = f.grid().lo;
  j["hi"] = f.grid().hi;
  j["n"] = f.grid().n;
  j["values"] = std::vector<double>(f.values().begin(), f.values().end());
  return j.dump();
}

GridFunction from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const double lo = j.at("lo").get<double>();
  const double hi = j.at("hi").get<double>();
  const int n = j.at("n").get<int>();
  auto values = j.at("values").get<std::vector<double>>();
  return GridFunction(Grid{lo, hi, n}, std::move(values));
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GridFunction read_function_file(const std::string& path) {
  const std::string text = slurp(path);
  if (ends_with(path, ".json")) return from_json(text);
  return from_csv(text);
}

void write_function_file(const GridFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << (ends_with(path, ".json") ? to_json(f) : to_csv(f));
}

}  // namespace sharpyoung
