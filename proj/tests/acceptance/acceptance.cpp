// Runs the acceptance criteria and prints one line per criterion.
#include <CLI11.hpp>
#include <cstdio>
#include <dunkl/verify.hpp>
#include <exception>
#include <fstream>
#include <string>

using namespace dunkl;

namespace {

// first failing row, or the first row
const CheckResult* headline(const VerificationReport& r) {
  for (const auto& c : r.checks())
    if (!c.passed()) return &c;
  return r.checks().empty() ? nullptr : &r.checks().front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  std::string json;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, criterion_count));
  app.add_flag("-v,--verbose", verbose, "print every check");
  app.add_option("--json", json, "write the combined report here");
  CLI11_PARSE(app, argc, argv);

  VerificationReport all("acceptance");
  bool ok = true;
  for (int n = 1; n <= criterion_count; ++n) {
    if (only && n != only) continue;
    VerificationReport r;
    try {
      r = verify_criterion(n);
    } catch (const std::exception& e) {
      std::printf("criterion %2d FAIL  %-22s error: %s\n", n, criterion_title(n), e.what());
      ok = false;
      continue;
    }
    const bool pass = r.all_passed();
    ok = ok && pass;
    const CheckResult* h = headline(r);
    std::printf("criterion %2d %s  %-22s %zu/%zu checks", n, pass ? "PASS" : "FAIL", criterion_title(n),
                r.count(Status::pass), r.checks().size());
    if (h && !pass)
      std::printf("; %s: measured %.3g vs threshold %.3g", h->name.c_str(), h->measured, h->threshold);
    std::printf(" (%.1f s)\n", r.wall_time());
    if (verbose)
      for (const auto& c : r.checks())
        std::printf("    [%s] %s: %.6g (threshold %.6g)\n", to_string(c.status), c.name.c_str(), c.measured,
                    c.threshold);
    all.append(r);
  }
  if (!json.empty()) {
    std::ofstream out(json);
    out << all.to_json() << '\n';
  }
  return ok ? 0 : 1;
}
