// Hot paths: expression jets, torsion evaluation, pullbacks, spectral points and a whole manifest.
#include "haantjes/catalog.hpp"
#include "haantjes/chart.hpp"
#include "haantjes/lift.hpp"
#include "haantjes/manifest.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"
#include <benchmark/benchmark.h>

using namespace haantjes;

namespace {

OperatorField random_field(std::size_t dim, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::string> vars;
    for(std::size_t i = 0; i < dim; i++) vars.push_back("x" + std::to_string(i));
    std::vector<Expr> e;
    for(std::size_t i = 0; i < dim * dim; i++) e.push_back(random_polynomial(vars, rng));
    return OperatorField::from_entries("L", dim, e, {});
}

std::vector<double> point(std::size_t dim)
{
    std::vector<double> x(dim);
    for(std::size_t i = 0; i < dim; i++) x[i] = 0.1 * static_cast<double>(i + 1);
    return x;
}

void BM_ExprJet(benchmark::State& state)
{
    const System sys = System::bind(get_system("drach-holt"));
    const ScalarField H2 = sys.field("H2");
    const std::vector<double> x = {0.3, 1.2, 0.7, -0.4};
    for(auto _ : state) benchmark::DoNotOptimize(H2.jet(x));
}
BENCHMARK(BM_ExprJet);

void BM_OperatorJet(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const OperatorField L = random_field(n, 1);
    const auto x = point(n);
    for(auto _ : state) benchmark::DoNotOptimize(L.jet(x));
}
BENCHMARK(BM_OperatorJet)->Arg(4)->Arg(6);

void BM_Nijenhuis(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const OperatorJet j = random_field(n, 2).jet(point(n));
    for(auto _ : state) benchmark::DoNotOptimize(nijenhuis_torsion(j));
}
BENCHMARK(BM_Nijenhuis)->Arg(4)->Arg(6);

void BM_Haantjes(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto method = state.range(1) == 0 ? HaantjesMethod::Definitional : HaantjesMethod::Coordinate;
    const OperatorJet j = random_field(n, 3).jet(point(n));
    for(auto _ : state) benchmark::DoNotOptimize(haantjes_torsion(j, method));
}
BENCHMARK(BM_Haantjes)->ArgsProduct({{4, 6}, {0, 1}});

void BM_PullbackElliptic(benchmark::State& state)
{
    const System sys = System::bind(get_system("sw1"));
    const OperatorField K = sys.op("K3", "elliptic");
    const Points pts = sys.sample("elliptic", 42, 1);
    for(auto _ : state) benchmark::DoNotOptimize(K.jet(pts[0]));
}
BENCHMARK(BM_PullbackElliptic);

void BM_SpectralPoint(benchmark::State& state)
{
    const System sys = System::bind(get_system("aniso-rosochatius"));
    const Points pts = sys.sample(sys.operator_chart("K2"), 42, 1);
    const Eigen::MatrixXd K = sys.op("K2").value(pts[0]);
    for(auto _ : state) benchmark::DoNotOptimize(spectral_point(K));
}
BENCHMARK(BM_SpectralPoint);

void BM_Lift(benchmark::State& state)
{
    const std::vector<std::string> v = {"q1", "q2", "p1", "p2"};
    auto f = [&](const char* s) { return ScalarField::from_expr(s, Expr::parse(s, v), {}); };
    const ConfigOperator2 A{f("2 + q1^2 + q2"), f("q1*q2"), f("1 + q2^2/2"), f("-1 + q1 - q2^2")};
    const OperatorField L = generalized_lift(A, f("q1*q2"));
    const std::vector<double> x = {0.2, -0.3, 0.5, 0.7};
    for(auto _ : state) benchmark::DoNotOptimize(normalized_haantjes(L.jet(x)));
}
BENCHMARK(BM_Lift);

void BM_Manifest(benchmark::State& state)
{
    const SystemDefinition def = get_system(catalog_names()[static_cast<std::size_t>(state.range(0))]);
    state.SetLabel(def.name);
    for(auto _ : state) benchmark::DoNotOptimize(run_manifest(def));
}
BENCHMARK(BM_Manifest)->DenseRange(0, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
