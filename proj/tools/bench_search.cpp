#include <CLI11.hpp>
#include <chrono>
#include <cstdio>

#include "cyccover/cover.hpp"

using namespace cyccover;
using clk = std::chrono::steady_clock;

// Times the OpenMP band-search kernel against the serial reference on the
// same instances and checks they agree.
int main(int argc, char** argv) {
    CLI::App app{"band-search benchmark: parallel kernel vs serial reference"};
    long q = 2;
    int n = 9, threads = 0, repeat = 3;
    long long budget = kDefaultBudget;
    app.add_option("--q", q);
    app.add_option("--n", n);
    app.add_option("--threads", threads, "0 = all cores");
    app.add_option("--repeat", repeat);
    app.add_option("--budget", budget);
    CLI11_PARSE(app, argc, argv);

    double best_par = 1e99, best_ser = 1e99;
    CoverResult rp, rs;
    for (int i = 0; i < repeat; ++i) {
        auto t0 = clk::now();
        rp = h_search(q, n, threads, budget);
        auto t1 = clk::now();
        rs = h_search_reference(q, n, budget);
        auto t2 = clk::now();
        best_par = std::min(best_par, std::chrono::duration<double>(t1 - t0).count());
        best_ser = std::min(best_ser, std::chrono::duration<double>(t2 - t1).count());
    }
    bool agree = rp.h == rs.h && rp.witness == rs.witness &&
                 rp.candidates_tested == rs.candidates_tested;
    printf("h_%ld(%d) = %d  candidates=%lld\n", q, n, rp.h, rp.candidates_tested);
    printf("parallel:  %.6f s\n", best_par);
    printf("serial:    %.6f s  (x%.2f)\n", best_ser, best_ser / best_par);
    printf("agreement: %s\n", agree ? "ok" : "MISMATCH");
    return agree ? 0 : 1;
}
