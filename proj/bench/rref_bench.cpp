// Compares the parallel row-reduction kernel against the serial reference on
// random rational matrices, asserting identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

using namespace leibniz;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int rows = 60, cols = 80, trials = 3;
    unsigned long seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const long value = std::strtol(argv[i + 1], nullptr, 10);
        if (flag == "--rows")
            rows = static_cast<int>(value);
        else if (flag == "--cols")
            cols = static_cast<int>(value);
        else if (flag == "--trials")
            trials = static_cast<int>(value);
        else if (flag == "--seed")
            seed = static_cast<unsigned long>(value);
        else {
            std::fprintf(stderr, "usage: rref_bench [--rows N] [--cols N] [--trials N] [--seed N]\n");
            return 2;
        }
    }
    if (rows < 1 || cols < 1 || trials < 1) {
        std::fprintf(stderr, "rows, cols and trials must be positive\n");
        return 2;
    }

    RationalSampler sampler(seed);
    double parallel_total = 0.0, serial_total = 0.0;
    for (int t = 0; t < trials; ++t) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = sampler.next();

        auto t0 = std::chrono::steady_clock::now();
        RrefResult par = rref(m);
        const double par_s = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        RrefResult ser = rref_serial(m);
        const double ser_s = seconds_since(t0);

        if (!(par.mat == ser.mat) || par.pivots != ser.pivots || par.rank != ser.rank) {
            std::fprintf(stderr, "mismatch between parallel and serial reduction on trial %d\n", t);
            return 1;
        }
        parallel_total += par_s;
        serial_total += ser_s;
        std::printf("trial=%d rank=%d parallel=%.4fs serial=%.4fs\n", t, par.rank, par_s, ser_s);
    }
    std::printf("rows=%d cols=%d trials=%d parallel_total=%.4fs serial_total=%.4fs speedup=%.2f\n",
                rows, cols, trials, parallel_total, serial_total,
                parallel_total > 0 ? serial_total / parallel_total : 0.0);
    return 0;
}
