// Acceptance suite: runs every verification check, including the slow n=7
// abelianizations and the 512-coset kernel computation, and prints one
// pass/fail line per check. Exits nonzero on any failure.
#include <cstdio>
#include <cstring>

#include "km/verify.hpp"

int main(int argc, char** argv) {
    km::verify::Options opts;
    opts.include_slow = true;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--fast") == 0) opts.include_slow = false;

    std::vector<km::CheckLine> lines = km::verify::run_all(opts);
    int failures = 0;
    double total_ms = 0;
    for (const km::CheckLine& line : lines) {
        total_ms += line.ms;
        if (line.pass) {
            std::printf("PASS  %-45s %s (%.2fs)\n", line.name.c_str(), line.actual.c_str(),
                        line.ms / 1000.0);
        } else {
            ++failures;
            std::printf("FAIL  %-45s expected=%s actual=%s (%.2fs)\n", line.name.c_str(),
                        line.expected.c_str(), line.actual.c_str(), line.ms / 1000.0);
        }
    }
    std::printf("%d/%zu checks passed (%.1fs total)\n", static_cast<int>(lines.size()) - failures,
                lines.size(), total_ms / 1000.0);
    return failures == 0 ? 0 : 1;
}
