#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "weakutm/render.hpp"
#include "weakutm/rule110.hpp"

using namespace weakutm;

namespace {

// Hand transcription of the ether drawing, cells -15..12, black = 1.
// Rows c_0 .. c_7 (c_7 repeats c_0).
const char* const kEtherDrawing[] = {
    "0100110111110001001101111100",
    "1101111100010011011111000100",
    "1111000100110111110001001101",
    "0001001101111100010011011111",
    "0011011111000100110111110001",
    "0111110001001101111100010011",
    "1100010011011111000100110111",
    "0100110111110001001101111100",
};
constexpr CellRange kDrawingWindow{-15, 12};

std::vector<Cell> random_word(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::bernoulli_distribution bit(0.5);
  std::vector<Cell> w(len(rng));
  for (auto& c : w) c = to_cell(bit(rng));
  return w;
}

}  // namespace

TEST_CASE("update_cell matches the Rule 110 table", "[rule110]") {
  const int expected[2][2][2] = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 0}}};
  int ones = 0;
  for (int l = 0; l < 2; ++l) {
    for (int c = 0; c < 2; ++c) {
      for (int r = 0; r < 2; ++r) {
        const int got = to_int(update_cell(to_cell(l), to_cell(c), to_cell(r)));
        CHECK(got == expected[l][c][r]);
        CHECK(got == oracle::rule110(l, c, r));
        ones += got;
      }
    }
  }
  CHECK(ones == 5);
  STATIC_REQUIRE(update_cell(Cell::zero, Cell::zero, Cell::zero) == Cell::zero);
  STATIC_REQUIRE(update_cell(Cell::one, Cell::one, Cell::one) == Cell::zero);
  STATIC_REQUIRE(update_cell(Cell::zero, Cell::one, Cell::one) == Cell::one);
}

TEST_CASE("step agrees cell by cell with a wide-array oracle", "[rule110][property]") {
  std::mt19937 rng(110);
  std::uniform_int_distribution<Index> origin(-10, 10);
  std::uniform_int_distribution<int> steps(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Rule110Config c(random_word(rng, 1, 5), random_word(rng, 0, 10), origin(rng), random_word(rng, 1, 5));
    const int s = steps(rng);
    const CellRange check{-40, 40};
    const CellRange wide{check.first - s - 1, check.last + s + 1};
    std::vector<int> row;
    for (Index i = wide.first; i <= wide.last; ++i) row.push_back(to_int(c.cell(i)));
    const auto expect = oracle::evolve_array(row, s);
    const auto got = evolve(c, static_cast<std::uint64_t>(s));
    REQUIRE(got.timestep() == static_cast<std::uint64_t>(s));
    for (Index i = check.first; i <= check.last; ++i) {
      REQUIRE(to_int(got.cell(i)) == expect[static_cast<std::size_t>(i - wide.first)]);
    }
  }
}

TEST_CASE("step on special rows", "[rule110]") {
  SECTION("all zeros stay all zeros") {
    const auto z = Rule110Config::periodic({Cell::zero});
    CHECK(same_row(step(z), z));
    CHECK(step(z).tape().center().empty());
  }
  SECTION("purely periodic rows stay purely periodic") {
    const auto c = Rule110Config::periodic(cells("0011101"), 3);
    const auto n = step(c);
    CHECK(n.tape().center().empty());
    CHECK(n.tape().left_word().size() == 7);
    for (Index i = -30; i < 30; ++i) CHECK(n.cell(i) == n.cell(i + 7));
  }
  SECTION("a lone 1 grows leftward only") {
    const Rule110Config c({Cell::zero}, cells("1"), 0, {Cell::zero});
    CHECK(to_string(evolve(c, 3).cells({-4, 1})) == "011010");
  }
}

TEST_CASE("evolve is additive in time", "[rule110][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> t(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const Rule110Config c(random_word(rng, 1, 4), random_word(rng, 0, 8), 0, random_word(rng, 1, 4));
    const auto a = static_cast<std::uint64_t>(t(rng));
    const auto b = static_cast<std::uint64_t>(t(rng));
    REQUIRE(evolve(c, a + b) == evolve(evolve(c, a), b));
  }
  const auto c = ether_config(0);
  CHECK(evolve(c, 0) == c);
}

TEST_CASE("config equality ignores representation", "[rule110]") {
  const auto a = Rule110Config::periodic(cells("01"), 0);
  const Rule110Config b(cells("0101"), cells("01"), 4, cells("010101"));
  CHECK(same_row(a, b));
  CHECK(a == b);
  const Rule110Config c(cells("01"), cells("11"), 0, cells("01"));
  CHECK_FALSE(same_row(a, c));
  CHECK_FALSE(a == Rule110Config::periodic(cells("01"), 0, 1));
}

TEST_CASE("ether matches the hand transcription", "[rule110][ether]") {
  const auto rows = spacetime(ether_config(0), 7, kDrawingWindow);
  REQUIRE(rows.size() == 8);
  for (std::size_t s = 0; s < rows.size(); ++s) {
    INFO("row c_" << s);
    CHECK(to_string(rows[s]) == kEtherDrawing[s]);
  }
}

TEST_CASE("ether periods and textual anchors", "[rule110][ether]") {
  const auto c0 = ether_config(0);
  CHECK(same_row(evolve(c0, 7), c0));
  for (int s = 1; s < 7; ++s) CHECK_FALSE(same_row(evolve(c0, static_cast<std::uint64_t>(s)), c0));

  for (int phase = 0; phase < 7; ++phase) {
    for (Index i = -20; i < 20; ++i) CHECK(ether_row(phase, {i, i}) == ether_row(phase, {i + 14, i + 14}));
  }
  const auto rows = ether_rows();
  for (int p = 0; p < 7; ++p) CHECK(rows[static_cast<std::size_t>(p)] == ether_row(p, {0, 13}));

  CHECK(to_string(ether_row(1, {-7, -4})) == "0001");
  CHECK(to_string(ether_row(2, {-11, -8})) == "0001");
  CHECK(to_string(ether_row(3, {-15, -12})) == "0001");
  CHECK(to_string(ether_row(3, {5, 6})) == "11");
  CHECK(to_string(evolve(c0, 2).cells({1, 4})) == "1100");

  const auto c1 = step(c0);
  CHECK(to_string(c1.cells({-7, -4})) == "0001");
  CHECK(c1.tape().center().empty());
}

TEST_CASE("ether_row rejects bad arguments", "[rule110][ether]") {
  CHECK_THROWS_AS(ether_row(7, {0, 1}), std::out_of_range);
  CHECK_THROWS_AS(ether_row(-1, {0, 1}), std::out_of_range);
  CHECK_THROWS_AS(ether_row(0, {1, 0}), std::invalid_argument);
}

TEST_CASE("spacetime", "[rule110]") {
  const auto c = Rule110Config(cells("0"), cells("101"), 2, cells("1"));
  const auto rows = spacetime(c, 0, {0, 6});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == c.cells({0, 6}));

  const auto ether = spacetime(ether_config(0), 7, {0, 13});
  CHECK(ether.front() == ether.back());
  for (std::size_t k = 0; k < ether.size(); ++k) CHECK(ether[k] == evolve(ether_config(0), k).cells({0, 13}));
}

TEST_CASE("ascii render of the ether", "[render]") {
  CHECK(render_ascii({cells("00000")}) == ".....");
  CHECK(render_ascii({}).empty());
  CHECK(render_ascii({{}}).empty());

  // Ether rows c_0..c_6 over cells -5..8, copied square by square.
  const std::string figure =
      "##...#..##.###\n"
      ".#..##.#####..\n"
      "##.#####...#..\n"
      "####...#..##.#\n"
      "...#..##.#####\n"
      "..##.#####...#\n"
      ".#####...#..##";
  CHECK(render_ascii(spacetime(ether_config(0), 6, {-5, 8})) == figure);
  CHECK(render_ascii({cells("01")}, {true, -5}) == "-5 .#");
}

TEST_CASE("ppm render", "[render]") {
  const auto ppm = render_ppm({cells("01"), cells("10"), cells("11")});
  const std::string header = "P6\n2 3\n255\n";
  REQUIRE(ppm.size() == header.size() + 2 * 3 * 3);
  CHECK(ppm.substr(0, header.size()) == header);
  CHECK(static_cast<unsigned char>(ppm[header.size()]) == 0xff);
  CHECK(static_cast<unsigned char>(ppm[header.size() + 3]) == 0x00);
  CHECK(render_ppm({}).empty());
  CHECK_THROWS_AS(render_ppm({cells("01"), cells("1")}), std::invalid_argument);
}
