/* Microbenchmarks for the exact elimination kernels: the fraction-free
 * Bareiss determinant against the classical fraction-Gauss baseline, and the
 * serial reference sweep against the OpenMP row-update path.  Inputs are
 * deterministic (seeded) integer and small-polynomial matrices. */

#include <benchmark/benchmark.h>

#include "torsionlab/generator.hpp"

using namespace torsionlab;

namespace {

const FieldDescriptor QQ{BaseField::rationals, ""};
const FieldDescriptor QT{BaseField::rationals, "t"};

// Dense integer matrix with entries in [-9, 9].
ExactMatrix int_matrix(std::size_t n, const std::string& tag) {
    Rng rng = rng_from_tag(tag);
    std::uniform_int_distribution<long> entry(-9, 9);
    ExactMatrix m(QQ, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = FieldElement::from_int(QQ, entry(rng));
    return m;
}

// Dense matrix of degree-one polynomials a + b t with a, b in [-3, 3].
ExactMatrix poly_matrix(std::size_t n, const std::string& tag) {
    Rng rng = rng_from_tag(tag);
    std::uniform_int_distribution<long> entry(-3, 3);
    ExactMatrix m(QT, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = FieldElement::from_int(QT, entry(rng)) +
                         FieldElement::variable(QT) * FieldElement::from_int(QT, entry(rng));
    return m;
}

void BM_det_bareiss_int(benchmark::State& state) {
    const ExactMatrix m = int_matrix(state.range(0), "bench-det-int");
    for (auto _ : state) benchmark::DoNotOptimize(det(m, Exec::serial));
}

void BM_det_fraction_gauss_int(benchmark::State& state) {
    const ExactMatrix m = int_matrix(state.range(0), "bench-det-int");
    for (auto _ : state) benchmark::DoNotOptimize(det_fraction_gauss(m, Exec::serial));
}

void BM_det_bareiss_poly(benchmark::State& state) {
    const ExactMatrix m = poly_matrix(state.range(0), "bench-det-poly");
    for (auto _ : state) benchmark::DoNotOptimize(det(m, Exec::serial));
}

void BM_det_fraction_gauss_poly(benchmark::State& state) {
    const ExactMatrix m = poly_matrix(state.range(0), "bench-det-poly");
    for (auto _ : state) benchmark::DoNotOptimize(det_fraction_gauss(m, Exec::serial));
}

void BM_rref_serial(benchmark::State& state) {
    const ExactMatrix m = int_matrix(state.range(0), "bench-rref");
    for (auto _ : state) benchmark::DoNotOptimize(rref(m, Exec::serial));
}

void BM_rref_parallel(benchmark::State& state) {
    const ExactMatrix m = int_matrix(state.range(0), "bench-rref");
    for (auto _ : state) benchmark::DoNotOptimize(rref(m, Exec::parallel));
}

void BM_kernel_basis_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    Rng rng = rng_from_tag("bench-kernel");
    UnimodularPair u = random_unimodular(QQ, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(u.g, Exec::serial));
}

void BM_kernel_basis_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    Rng rng = rng_from_tag("bench-kernel");
    UnimodularPair u = random_unimodular(QQ, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(u.g, Exec::parallel));
}

} // namespace

BENCHMARK(BM_det_bareiss_int)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_det_fraction_gauss_int)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_det_bareiss_poly)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_det_fraction_gauss_poly)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_rref_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_rref_parallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_kernel_basis_serial)->Arg(32)->Arg(64);
BENCHMARK(BM_kernel_basis_parallel)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
