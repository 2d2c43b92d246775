// Acceptance runner: executes the numbered verification criteria and
// prints one PASS/FAIL line per criterion.  Exit code is the number of
// failures.  Usage:
//   dzlab_acceptance [--suite all|quick|1,4,9] [--threads N]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "dzlab/verify.hpp"

namespace {

std::vector<int> parse_suite(const std::string& s) {
    if (s == "all") return {};
    if (s == "quick") return {1, 2, 3, 6, 7, 8, 9};
    std::vector<int> ids;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) ids.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return ids;
}

}  // namespace

int main(int argc, char** argv) {
    std::string suite = "all";
    unsigned threads = dzlab::default_threads();
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--suite") && i + 1 < argc) {
            suite = argv[++i];
        } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
            threads = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            std::fprintf(stderr,
                         "usage: %s [--suite all|quick|id,id,...] [--threads N]\n",
                         argv[0]);
            return 2;
        }
    }
    dzlab::AcceptanceSuite acc(threads);
    return acc.run_suite(parse_suite(suite)) == 0 ? 0 : 1;
}
