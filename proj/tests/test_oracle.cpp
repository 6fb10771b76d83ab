#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hnsw/dataset.hpp"
#include "hnsw/oracle.hpp"

using namespace hnsw;

namespace {

Dataset dataset_1d(const std::vector<float>& values) {
    Dataset out(1, DistanceKind::Euclidean);
    for (const float v : values) out.push_back(std::vector<float>{v});
    return out;
}

}  // namespace

TEST_CASE("brute force returns a stored query first at distance zero") {
    const Dataset data = dataset_1d({4.0f, 1.0f, 9.0f});
    const auto result = brute_force_knn(data, data[1], 1);
    REQUIRE(result.size() == 1);
    CHECK(result[0].id == 1);
    CHECK(result[0].dist == 0.0);
}

TEST_CASE("brute force with K >= N returns everything sorted") {
    const Dataset data = dataset_1d({4.0f, 1.0f, 9.0f});
    const std::vector<float> q{3.0f};
    const auto result = brute_force_knn(data, q, 10);
    REQUIRE(result.size() == 3);
    CHECK(result[0].id == 0);  // |3-4| = 1
    CHECK(result[1].id == 1);  // |3-1| = 2
    CHECK(result[2].id == 2);  // |3-9| = 6
}

TEST_CASE("brute force on a small 1D example") {
    const Dataset data = dataset_1d({0.0f, 2.0f, 5.0f});
    const std::vector<float> q{1.4f};
    const auto result = brute_force_knn(data, q, 2);
    REQUIRE(result.size() == 2);
    CHECK(result[0].id == 1);
    CHECK(result[0].dist == Catch::Approx(0.6).margin(1e-6));
    CHECK(result[1].id == 0);
    CHECK(result[1].dist == Catch::Approx(1.4).margin(1e-6));
}

TEST_CASE("brute force error paths") {
    const Dataset data = dataset_1d({1.0f});
    const std::vector<float> wrong{1.0f, 2.0f};
    CHECK_THROWS_AS(brute_force_knn(data, wrong, 1), std::invalid_argument);
    const Dataset empty;
    CHECK_THROWS_AS(brute_force_knn(empty, std::vector<float>{1.0f}, 1), std::invalid_argument);
}

TEST_CASE("brute force agrees with an independent full sort") {
    std::mt19937_64 rng(19);
    Dataset data(4, DistanceKind::Euclidean);
    std::vector<float> point(4);
    for (int i = 0; i < 500; ++i) {
        for (auto& c : point) {
            c = static_cast<float>(static_cast<double>(rng() >> 11) * 0x1.0p-53);
        }
        data.push_back(point);
    }
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<float> q(4);
        for (auto& c : q) {
            c = static_cast<float>(static_cast<double>(rng() >> 11) * 0x1.0p-53);
        }
        // Test-local scan: distances computed here, full sort, not partial.
        std::vector<std::pair<double, NodeId>> all;
        for (std::size_t i = 0; i < data.size(); ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                const double diff = static_cast<double>(q[j]) - static_cast<double>(data[i][j]);
                acc += diff * diff;
            }
            all.emplace_back(std::sqrt(acc), static_cast<NodeId>(i));
        }
        std::sort(all.begin(), all.end());

        const auto got = brute_force_knn(data, q, 10);
        REQUIRE(got.size() == 10);
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].id == all[i].second);
            CHECK(got[i].dist == all[i].first);
        }
    }
}

TEST_CASE("recall is the overlap ratio") {
    const std::vector<NodeId> truth{1, 2, 3, 4};
    CHECK(recall(std::vector<NodeId>{1, 2, 3, 4}, truth) == 1.0);
    CHECK(recall(std::vector<NodeId>{5, 6, 7, 8}, truth) == 0.0);

    const std::vector<NodeId> truth10{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(recall(std::vector<NodeId>{0, 1, 2, 3, 4, 90, 91, 92, 93, 94}, truth10) == 0.5);
}

TEST_CASE("recall ignores ordering of both lists") {
    std::mt19937_64 rng(5);
    std::vector<NodeId> truth{3, 1, 4, 5, 9};
    std::vector<NodeId> found{9, 3, 77};
    const double base = recall(found, truth);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(truth.begin(), truth.end(), rng);
        std::shuffle(found.begin(), found.end(), rng);
        CHECK(recall(found, truth) == base);
    }
}

TEST_CASE("recall rejects malformed inputs") {
    CHECK_THROWS_AS(recall(std::vector<NodeId>{1}, std::vector<NodeId>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(recall(std::vector<NodeId>{1, 2}, std::vector<NodeId>{1}),
                    std::invalid_argument);
}

TEST_CASE("tie-tolerant recall accepts equal K-th distances") {
    // Two stored elements at exactly distance 1 from the query; the truth
    // list keeps the smaller id, but returning the other may not be scored
    // as a miss.
    Dataset data(1, DistanceKind::Euclidean);
    data.push_back(std::vector<float>{0.0f});  // id 0, the query itself
    data.push_back(std::vector<float>{1.0f});  // id 1, dist 1
    data.push_back(std::vector<float>{-1.0f});  // id 2, dist 1
    const std::vector<float> q{0.0f};

    const auto truth = brute_force_knn(data, q, 2);
    REQUIRE(truth[0].id == 0);
    REQUIRE(truth[1].id == 1);  // id tie-break

    const std::vector<Neighbor> found{{0, 0.0}, {2, 1.0}};
    CHECK(recall_tie_tolerant(found, truth) == 1.0);

    // Strict membership scoring would have counted a miss.
    const std::vector<NodeId> found_ids{0, 2};
    const std::vector<NodeId> truth_ids{0, 1};
    CHECK(recall(found_ids, truth_ids) == 0.5);
}

TEST_CASE("ground truth lists are sorted and sized min(K, N)") {
    const Dataset data = dataset_1d({0.0f, 1.0f, 2.0f});
    Dataset queries(1, DistanceKind::Euclidean);
    queries.push_back(std::vector<float>{0.9f});
    const GroundTruth gt = exact_ground_truth(data, Metric::euclidean(), queries, 5);
    REQUIRE(gt.lists.size() == 1);
    REQUIRE(gt.lists[0].size() == 3);
    CHECK(std::is_sorted(gt.lists[0].begin(), gt.lists[0].end(), CloserFirst{}));
    CHECK(gt.id_lists()[0] == std::vector<NodeId>{1, 0, 2});
}
