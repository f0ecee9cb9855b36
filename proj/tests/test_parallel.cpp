#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur_ample/parallel.hpp"
#include "schur_ample/universal.hpp"

using namespace schur_ample;

TEST_CASE("map_indexed lanes agree on a pure function") {
  auto fn = [](std::size_t i) { return static_cast<long>(i * i + 7); };
  auto serial = map_indexed<long>(1000, ExecMode::serial, fn);
  auto parallel = map_indexed<long>(1000, ExecMode::openmp, fn);
  CHECK(serial == parallel);
}

TEST_CASE("star sweeps are byte-identical across lanes") {
  SplitMix64 rng(2024);
  Instance inst(3, 2, 3, 1, 1);
  auto a = random_params<Rat>(inst, rng, 40);
  for (const auto& I : all_strata(inst.N)) {
    StratumLabel label{I, std::nullopt};
    auto serial = check_star<Rat>(inst, a, label, 40, 11, 40, ExecMode::serial);
    auto parallel = check_star<Rat>(inst, a, label, 40, 11, 40, ExecMode::openmp);
    CHECK(serial.to_json().dump() == parallel.to_json().dump());
  }
}

TEST_CASE("rank-oracle jobs are lane independent") {
  Instance inst(3, 1, 2, 1, 1);
  StratumLabel label{{0}, std::vector<int>{}};
  SplitMix64 rng(5);
  auto job = [&](std::size_t i) -> long {
    SplitMix64 local = rng.split(i);
    auto fr = sample_sigma<Rat>(inst, label, local, 30);
    return rank_via_sparse(phi_eta_matrix(inst, fr));
  };
  auto serial = map_indexed<long>(24, ExecMode::serial, job);
  auto parallel = map_indexed<long>(24, ExecMode::openmp, job);
  CHECK(serial == parallel);
  for (long r : serial) CHECK(r == rank_formula(1, 2, 3, 2));
}
