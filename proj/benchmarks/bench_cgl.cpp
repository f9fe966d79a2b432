#include <string>

#include <benchmark/benchmark.h>

#include "cgl/character_table.hpp"
#include "cgl/families.hpp"
#include "cgl/group.hpp"
#include "cgl/pcp.hpp"
#include "cgl/report.hpp"

namespace {

const char *const kFamilies[] = {"dihedral(2,6)", "quaternion(2,6)",
                                 "wreath(3)", "extraspecial(5,3,+)",
                                 "abelian(3,[1,1,1,1,1])"};

std::string sample_text(std::string_view name) {
  for (const auto &s : cgl::bundled_samples())
    if (s.name == name)
      return std::string(s.text);
  return {};
}

void BM_CharacterTable(benchmark::State &state) {
  const cgl::Group g = cgl::build_family(
      cgl::parse_family_spec(kFamilies[state.range(0)]));
  state.SetLabel(g.descriptor());
  for (auto _ : state)
    benchmark::DoNotOptimize(cgl::character_table(g));
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CharacterTableSample(benchmark::State &state) {
  const cgl::Group g =
      cgl::realize_pcp(cgl::parse_pcp(sample_text("maxclass_243_28")));
  for (auto _ : state)
    benchmark::DoNotOptimize(cgl::character_table(g));
}
BENCHMARK(BM_CharacterTableSample)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State &state) {
  const cgl::Group g = cgl::build_family(
      cgl::parse_family_spec(kFamilies[state.range(0)]));
  state.SetLabel(g.descriptor());
  for (auto _ : state)
    benchmark::DoNotOptimize(cgl::normal_subgroups(g));
}
BENCHMARK(BM_NormalSubgroups)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RealizePcp(benchmark::State &state) {
  const auto pres = cgl::parse_pcp(sample_text("maxclass_243_25"));
  for (auto _ : state)
    benchmark::DoNotOptimize(cgl::realize_pcp(pres));
}
BENCHMARK(BM_RealizePcp)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
