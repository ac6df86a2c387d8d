// Compares the serial reference kernels against the OpenMP versions:
// derivation-constraint assembly and block-standard product evaluation.
#include "quivinv/filtrep.hpp"
#include "quivinv/invariants.hpp"
#include "quivinv/quiver.hpp"
#include "quivinv/tableaux.hpp"

#include <chrono>
#include <cstdio>

using namespace quivinv;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool bench_assembly(int n, int degree) {
    Quiver comet = make_comet({1, 1});
    GeneralRep rep = build_general_rep(comet, RepConfig{n, 0});
    std::vector<Derivation> derivs = superdiagonal_derivations(rep);
    std::vector<Monomial> basis = monomials_of_degree(rep.coordinate_vars(), degree);
    std::printf("assembly n=%d deg=%d: %zu derivations x %zu monomials\n", n, degree,
                derivs.size(), basis.size());

    auto t0 = std::chrono::steady_clock::now();
    DerivationConstraints serial = assemble_constraints_serial(derivs, basis);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    DerivationConstraints parallel = assemble_constraints_parallel(derivs, basis);
    double tp = seconds_since(t0);

    bool same = serial.cols == parallel.cols;
    std::printf("  serial   %.3fs\n  parallel %.3fs  (%.2fx)\n  identical: %s\n", ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    return same;
}

bool bench_products(int n, int m, int degree) {
    FramedQuiver fq = FramedQuiver::frame(make_equioriented_a(2), 1);
    GeneralRep rep = build_general_rep(fq, RepConfig{n, m});
    std::printf("block-standard products n=%d m=%d d=%d\n", n, m, degree);

    auto t0 = std::chrono::steady_clock::now();
    auto serial = enumerate_block_standard_detailed(fq, rep, degree, false);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = enumerate_block_standard_detailed(fq, rep, degree, true);
    double tp = seconds_since(t0);

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].value == parallel[i].value;
    std::printf("  %zu products\n  serial   %.3fs\n  parallel %.3fs  (%.2fx)\n  identical: %s\n",
                serial.size(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    return same;
}

} // namespace

int main() {
    bool ok = true;
    ok = bench_assembly(3, 3) && ok;
    ok = bench_assembly(4, 4) && ok;
    ok = bench_products(3, 3, 8) && ok;
    return ok ? 0 : 1;
}
