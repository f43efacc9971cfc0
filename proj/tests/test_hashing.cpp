#include <doctest.h>

#include <set>

#include "recsort/hashing.hpp"
#include "test_util.hpp"

using namespace recsort;

namespace {

const std::vector<std::uint64_t> kGoldenKeys{45, 3, 23, 88, 70, 92, 45, 43, 80, 32};

std::vector<DigitKey> golden_keys(const KeySpec& spec) {
  std::vector<DigitKey> keys;
  for (std::uint64_t k : kGoldenKeys) keys.push_back(DigitKey{k, spec});
  return keys;
}

std::size_t occupied_rows(const TraverseMaps& maps) {
  std::size_t n = 0;
  for (std::uint32_t r = 0; r < maps.rows(); ++r) n += maps.h_min(r).occupied;
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("hashing_cycle");

TEST_CASE("new_space starts empty") {
  const KeySpec spec{10, 2, 1};
  HashedSpace built = new_space(spec);
  CHECK(built.space.cell_limit() == 100);
  CHECK(built.space.sum_cells() == 0);
  CHECK(built.space.total_inserted() == 0);
  CHECK(built.maps.rows() == 10);
  for (std::uint32_t r = 0; r < 10; ++r) {
    CHECK_FALSE(built.maps.h_min(r).occupied);
    CHECK(built.maps.h_max(r) == -1);
  }
}

TEST_CASE("new_space handles the one-digit degenerate cube") {
  HashedSpace built = new_space(KeySpec{10, 1, 1});
  CHECK(built.space.cell_limit() == 10);
  CHECK(built.space.suffix_modulus() == 1);
}

TEST_CASE("new_space enforces the cell budget before allocating") {
  CHECK_FAILS_WITH(new_space(KeySpec{10, 9, 9}), errc::cell_budget_exceeded);
}

TEST_CASE("hash_insert updates counts and both maps") {
  const KeySpec spec{10, 2, 1};
  HashedSpace built = new_space(spec);

  hash_insert(built.space, built.maps, DigitKey{45, spec});
  hash_insert(built.space, built.maps, DigitKey{45, spec});
  CHECK(built.space.cell(45) == 2);
  CHECK(built.space.total_inserted() == 2);
  CHECK(built.maps.h_min(4).occupied);
  CHECK(built.maps.h_min(4).min_suffix == 5);
  CHECK(built.maps.h_max(4) == 5);

  hash_insert(built.space, built.maps, DigitKey{43, spec});
  CHECK(built.maps.h_min(4).min_suffix == 3);
  CHECK(built.maps.h_max(4) == 5);
}

TEST_CASE("the worked dataset occupies exactly rows 0,2,3,4,7,8,9") {
  const KeySpec spec{10, 2, 1};
  const auto keys = golden_keys(spec);
  HashedSpace built = build_count_space(keys, spec);
  const std::set<std::uint32_t> expected{0, 2, 3, 4, 7, 8, 9};
  for (std::uint32_t r = 0; r < 10; ++r) {
    CHECK(built.maps.h_min(r).occupied == (expected.count(r) == 1));
  }
  CHECK(built.space.total_inserted() == 10);
}

TEST_CASE("all-identical input loads a single cell") {
  const KeySpec spec{10, 2, 1};
  std::vector<DigitKey> keys(10, DigitKey{0, spec});
  HashedSpace built = build_count_space(keys, spec);
  CHECK(built.space.cell(0) == 10);
  CHECK(built.space.occupied_cells() == 1);
  CHECK(occupied_rows(built.maps) == 1);
}

TEST_CASE("maps equal brute-force row statistics on random keys") {
  Splitmix64 rng(0xbeef);
  const KeySpec spec{10, 3, 2};
  const auto keys = test_util::random_keys(rng, spec, 1000);
  HashedSpace built = build_count_space(keys, spec);

  const auto stats = test_util::brute_row_stats(keys, spec, keys.size());
  for (std::uint32_t r = 0; r < spec.radix; ++r) {
    REQUIRE(built.maps.h_min(r).occupied == stats[r].occupied);
    if (stats[r].occupied) {
      CHECK(built.maps.h_min(r).min_suffix == stats[r].min_suffix);
      CHECK(built.maps.h_max(r) ==
            static_cast<std::int64_t>(stats[r].max_suffix));
    } else {
      CHECK(built.maps.h_max(r) == -1);
    }
  }
}

TEST_CASE("I_Hash holds after every insertion") {
  Splitmix64 rng(0x1a5);
  for (int instance = 0; instance < 25; ++instance) {
    const KeySpec spec{10, instance % 2 == 0 ? 2u : 3u, 1};
    const auto keys =
        test_util::random_keys(rng, spec, 20 + test_util::rand_below(rng, 60));
    std::size_t seen = 0;
    build_count_space(
        keys, spec,
        [&](std::size_t inserted, const CountSpace& space,
            const TraverseMaps& maps) {
          seen = inserted;
          REQUIRE(space.sum_cells() == inserted);
          REQUIRE(space.occupied_cells() <= inserted);
          REQUIRE(occupied_rows(maps) <= inserted);
          const auto stats = test_util::brute_row_stats(keys, spec, inserted);
          for (std::uint32_t r = 0; r < spec.radix; ++r) {
            REQUIRE(maps.h_min(r).occupied == stats[r].occupied);
            if (stats[r].occupied) {
              REQUIRE(maps.h_min(r).min_suffix == stats[r].min_suffix);
              REQUIRE(maps.h_max(r) ==
                      static_cast<std::int64_t>(stats[r].max_suffix));
            }
          }
        });
    CHECK(seen == keys.size());
  }
}

TEST_CASE("each insertion touches exactly one count cell") {
  const KeySpec spec{10, 3, 3};
  HashedSpace built = new_space(spec);
  Splitmix64 rng(0xacc);
  for (int i = 0; i < 200; ++i) {
    const DigitKey k{test_util::rand_below(rng, spec.cell_count()), spec};
    const std::uint64_t before = built.space.cell_accesses();
    hash_insert(built.space, built.maps, k);
    CHECK(built.space.cell_accesses() - before == 1);
  }
}

TEST_CASE("keys from another spec are rejected") {
  const KeySpec spec{10, 2, 1};
  HashedSpace built = new_space(spec);
  CHECK_FAILS_WITH(hash_insert(built.space, built.maps, DigitKey{5, KeySpec{10, 3, 1}}),
                   errc::spec_mismatch);
  CHECK_FAILS_WITH(hash_insert(built.space, built.maps, DigitKey{1000, spec}),
                   errc::spec_mismatch);
}

TEST_SUITE_END();
