#include "dunkl/io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "dunkl/error.hpp"

namespace dunkl {

using detail::require;

void write_csv(std::ostream& out, const SampledFunction& f) {
  char buf[4][32];
  out << "node,weight,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v[4] = {f.grid().node(i), f.grid().weight(i), f[i].real(), f[i].imag()};
    for (int c = 0; c < 4; ++c) {
      auto r = std::to_chars(buf[c], buf[c] + sizeof buf[c], v[c]);
      *r.ptr = '\0';
    }
    out << buf[0] << ',' << buf[1] << ',' << buf[2] << ',' << buf[3] << '\n';
  }
}

namespace {
double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  auto r = std::from_chars(b, e, v);
  require(r.ec == std::errc() && r.ptr == e, "read_csv: bad number on line " + std::to_string(line));
  return v;
}
}  // namespace

SampledFunction read_csv(std::istream& in, const MultiplicityParam& m) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "read_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  require(line == "node,weight,re,im", "read_csv: expected header node,weight,re,im");
  std::vector<double> nodes, weights;
  std::vector<cplx> values;
  std::size_t no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty() || line == "\r") continue;
    std::stringstream ss(line);
    std::string cell;
    double v[4];
    int c = 0;
    while (std::getline(ss, cell, ',')) {
      require(c < 4, "read_csv: too many columns on line " + std::to_string(no));
      v[c++] = parse_double(cell, no);
    }
    require(c == 4, "read_csv: expected 4 columns on line " + std::to_string(no));
    nodes.push_back(v[0]);
    weights.push_back(v[1]);
    values.emplace_back(v[2], v[3]);
  }
  require(!nodes.empty(), "read_csv: no rows");
  return SampledFunction(share(QuadratureGrid::from_nodes(std::move(nodes), std::move(weights))), m,
                         std::move(values));
}

std::string to_json(const SampledFunction& f, int indent) {
  nlohmann::ordered_json j;
  j["k"] = f.multiplicity().values();
  std::vector<double> re(f.size()), im(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    re[i] = f[i].real();
    im[i] = f[i].imag();
  }
  j["nodes"] = std::vector<double>(f.grid().nodes().begin(), f.grid().nodes().end());
  j["weights"] = std::vector<double>(f.grid().weights().begin(), f.grid().weights().end());
  j["re"] = re;
  j["im"] = im;
  return j.dump(indent);
}

SampledFunction from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    auto k = j.at("k").get<std::vector<double>>();
    auto nodes = j.at("nodes").get<std::vector<double>>();
    auto weights = j.at("weights").get<std::vector<double>>();
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    require(re.size() == nodes.size() && im.size() == nodes.size(), "from_json: column length mismatch");
    std::vector<cplx> v(re.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(re[i], im[i]);
    return SampledFunction(share(QuadratureGrid::from_nodes(std::move(nodes), std::move(weights))),
                           MultiplicityParam(std::move(k)), std::move(v));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("from_json: ") + e.what());
  }
}

}  // namespace dunkl
