#include "gda/session.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace gda;

namespace {

std::string data(const std::string& f) { return std::string(GDA_SOURCE_DIR) + "/data/" + f; }

void BM_DeriveTree(benchmark::State& state)
{
	static const char* labels[] = {"(00)", "(II)", "(000)", "(I0I)"};
	const std::string text = read_file(data("orthogonality.gda"));
	for (auto _ : state) {
		state.PauseTiming();
		auto s = Session::load_text(text);
		const Condition start = s->find_condition(labels[state.range(0)])->condition;
		state.ResumeTiming();
		benchmark::DoNotOptimize(derive_tree(start, s->config.derive(), s->symbols, s->ideals));
	}
	state.SetLabel(labels[state.range(0)]);
}
BENCHMARK(BM_DeriveTree)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyCocycle(benchmark::State& state)
{
	auto s = Session::load_file(data("cocycle.gda"));
	const ClassDecl& c = s->classes.at("GV");
	const Term cls = build_class(Term::of(c.phi), c.completions, DiffKind::delta, s->config.verify());
	for (auto _ : state)
		benchmark::DoNotOptimize(verify_cocycle(cls, DiffKind::delta, s->hypotheses, s->ideals, s->config.verify()));
}
BENCHMARK(BM_VerifyCocycle)->Unit(benchmark::kMicrosecond);

void BM_VerifyIndependence(benchmark::State& state)
{
	auto s = Session::load_file(data("cocycle.gda"));
	const ClassDecl& c = s->classes.at("GV");
	const Factor eta = make_factor(s->symbols.get("eta"));
	for (auto _ : state)
		benchmark::DoNotOptimize(
		    verify_independence(c.phi, eta, c.completions, DiffKind::delta, s->hypotheses, s->ideals, s->config.verify()));
}
BENCHMARK(BM_VerifyIndependence)->Unit(benchmark::kMillisecond);

void BM_ApplyDifferential(benchmark::State& state)
{
	SymbolRegistry reg;
	std::vector<Term> factors;
	for (int i = 0; i < state.range(0); ++i)
		factors.push_back(make_generator(reg, "x" + std::to_string(i), {i % 3 - 1, 1, 0}));
	const Term t = multiply(factors);
	for (auto _ : state) benchmark::DoNotOptimize(apply_differential(DiffKind::delta, t, SignMode::koszul));
}
BENCHMARK(BM_ApplyDifferential)->RangeMultiplier(2)->Range(2, 16);

void BM_LoadSession(benchmark::State& state)
{
	const std::string text = read_file(data("cocycle.gda"));
	for (auto _ : state) benchmark::DoNotOptimize(Session::load_text(text));
}
BENCHMARK(BM_LoadSession)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
