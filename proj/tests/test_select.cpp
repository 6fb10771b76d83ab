#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hnsw/select.hpp"

using namespace hnsw;

namespace {

// 1D helper: candidate ids index into `coords`, distances are to `base`.
std::vector<Neighbor> candidates_1d(const std::vector<double>& coords, double base) {
    std::vector<Neighbor> out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.push_back({static_cast<NodeId>(i), std::abs(coords[i] - base)});
    }
    return out;
}

auto between_1d(const std::vector<double>& coords) {
    return [&coords](NodeId a, NodeId b) { return std::abs(coords[a] - coords[b]); };
}

std::vector<NodeId> ids_of(const std::vector<Neighbor>& v) {
    std::vector<NodeId> out;
    for (const Neighbor& n : v) out.push_back(n.id);
    return out;
}

}  // namespace

TEST_CASE("simple selection keeps the M closest") {
    const std::vector<Neighbor> candidates{{0, 1.0}, {1, 2.0}, {2, 3.0}};
    CHECK(ids_of(select_neighbors_simple(candidates, 2)) == std::vector<NodeId>{0, 1});

    // Nothing to prune when the set already fits.
    CHECK(select_neighbors_simple(candidates, 5).size() == 3);
    CHECK(select_neighbors_simple(candidates, 3).size() == 3);
}

TEST_CASE("simple selection breaks distance ties by smaller id") {
    const std::vector<Neighbor> tied{{7, 1.0}, {3, 1.0}};
    CHECK(ids_of(select_neighbors_simple(tied, 1)) == std::vector<NodeId>{3});
}

TEST_CASE("heuristic dominance on a 1D line") {
    // base = 0, candidates at 1, 2, 3. Every farther same-side point is
    // closer to the nearest pick than to the base, so only 1 survives the
    // first pass.
    const std::vector<double> coords{1.0, 2.0, 3.0};
    const auto candidates = candidates_1d(coords, 0.0);

    const auto strict =
        select_neighbors_heuristic(candidates, 3, false, between_1d(coords));
    CHECK(ids_of(strict) == std::vector<NodeId>{0});

    // Back-fill re-admits the discards nearest-first up to M.
    const auto filled =
        select_neighbors_heuristic(candidates, 3, true, between_1d(coords));
    CHECK(ids_of(filled) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("heuristic admission requires strictly closer to base") {
    // d(e, r) == d(e, base): equality is dominated, e goes to the discards.
    const std::vector<double> coords{1.0, 2.0};
    const auto candidates = candidates_1d(coords, 0.0);
    const auto picked =
        select_neighbors_heuristic(candidates, 2, false, between_1d(coords));
    CHECK(ids_of(picked) == std::vector<NodeId>{0});
}

TEST_CASE("heuristic keeps an isolated far cluster reachable") {
    // One tight cluster near the base plus a single far element. The far
    // element is farther from every kept neighbor than from the base, so it
    // survives even though the whole near cluster sorts first.
    const std::vector<double> coords{0.2, 0.1, 0.0, 10.0};
    const auto candidates = candidates_1d(coords, 0.3);
    const auto picked =
        select_neighbors_heuristic(candidates, 4, false, between_1d(coords));
    CHECK(ids_of(picked) == std::vector<NodeId>{0, 3});
}

TEST_CASE("heuristic stops once M picks exist") {
    const std::vector<double> coords{1.0, -1.0, 2.5, -2.5};
    const auto candidates = candidates_1d(coords, 0.0);
    const auto picked =
        select_neighbors_heuristic(candidates, 1, false, between_1d(coords));
    CHECK(picked.size() == 1);
    CHECK(picked[0].id == 0);
}

TEST_CASE("first pass on 1D points picks exactly the two flanking neighbors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> coords(40);
        for (auto& c : coords) c = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

        for (std::size_t base = 0; base < coords.size(); ++base) {
            std::vector<Neighbor> candidates;
            std::vector<double> others;
            for (std::size_t i = 0; i < coords.size(); ++i) {
                if (i == base) continue;
                candidates.push_back(
                    {static_cast<NodeId>(others.size()), std::abs(coords[i] - coords[base])});
                others.push_back(coords[i]);
            }
            const auto picked = select_neighbors_heuristic(
                candidates, candidates.size(), false,
                [&](NodeId a, NodeId b) { return std::abs(others[a] - others[b]); });

            // Expected: nearest left and nearest right of the base (sorted
            // coords make those the adjacent entries).
            std::vector<double> expected;
            if (base > 0) expected.push_back(coords[base - 1]);
            if (base + 1 < coords.size()) expected.push_back(coords[base + 1]);

            std::vector<double> got;
            for (const Neighbor& n : picked) got.push_back(others[n.id]);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            REQUIRE(got == expected);
        }
    }
}
