// Acceptance suite: runs the thirteen verification criteria and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <cstring>
#include <string>

#include "strz/verify.hpp"

int main(int argc, char** argv) {
    using namespace strz::verify;
    Profile profile = Profile::quick;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--profile") == 0 && i + 1 < argc) {
            const std::string p = argv[++i];
            if (p == "full")
                profile = Profile::full;
            else if (p != "quick") {
                std::fprintf(stderr, "unknown profile: %s\n", p.c_str());
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: acceptance [--profile quick|full]\n");
            return 2;
        }
    }

    int failures = 0;
    double total = 0.0;
    auto progress = [&](const CheckResult& r) {
        std::printf("[%s] %-36s %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.pass) ++failures;
        total += r.seconds;
    };
    run_all(profile, progress);
    std::printf("%d/13 criteria passed in %.1fs (%s profile)\n", 13 - failures, total,
                profile == Profile::full ? "full" : "quick");
    return failures == 0 ? 0 : 1;
}
