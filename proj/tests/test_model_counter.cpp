#include <gtest/gtest.h>

#include <set>

#include "uqg/error.hpp"
#include "uqg/model_counter.hpp"

using namespace uqg;

TEST(ModelCounter, TypeEAtEight) {
    PointCount c = count_tipoE(8, 3, Elem{1});
    EXPECT_EQ(c.points, 113u);
    EXPECT_EQ(c.genus, 3);
    EXPECT_TRUE(c.maximal);
    EXPECT_EQ(c.to_json(), R"({"N":113,"genus":3,"maximal":true})");
}

TEST(ModelCounter, TypeEAtNine) {
    PointCount c = count_tipoE(9, 5);
    EXPECT_EQ(c.points, 100u);
    EXPECT_EQ(c.genus, 1);
    EXPECT_TRUE(c.maximal);
}

TEST(ModelCounter, RationalQuotient) {
    PointCount c = count_tipoE(4, 5);
    EXPECT_EQ(c.points, 17u);
    EXPECT_EQ(c.genus, 0);
}

TEST(ModelCounter, LambdaValidation) {
    Elem bad = 1;  // 1^2 != -1 in characteristic 3
    EXPECT_THROW(count_tipoE(9, 5, bad), Error);
    try {
        count_tipoE(9, 5, bad);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "LambdaInvalid");
    }
    try {
        count_tipoE(1024, 5);
        FAIL() << "expected FieldTooLarge";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "FieldTooLarge");
    }
}

TEST(ModelCounter, NamedModels) {
    EXPECT_EQ(count_named_model(1, 4).points, 33u);
    EXPECT_EQ(count_named_model(2, 9).points, 298u);
    EXPECT_EQ(count_named_model(5, 4, {{"d", 15}}).points, 17u);
    for (uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        EXPECT_TRUE(count_named_model(1, q).maximal) << q;
        if (q % 2) EXPECT_TRUE(count_named_model(2, q).maximal) << q;
    }
}

TEST(ModelCounter, EveryTypeEModelIsMaximal) {
    for (uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u})
        for (uint64_t d = 2; d <= q + 1; ++d)
            if ((q + 1) % d == 0) EXPECT_TRUE(count_tipoE(q, d).maximal) << q << " " << d;
}

TEST(ModelCounter, CountDoesNotDependOnLambda) {
    for (uint32_t q : {4u, 8u, 9u, 16u, 27u}) {
        const auto lambdas = valid_lambdas(q);
        ASSERT_FALSE(lambdas.empty()) << q;
        for (uint64_t d = 2; d <= q + 1; ++d) {
            if ((q + 1) % d) continue;
            std::set<uint64_t> seen;
            for (Elem l : lambdas) seen.insert(count_tipoE(q, d, l, 1).points);
            EXPECT_EQ(seen.size(), 1u) << q << " " << d;
        }
    }
}
