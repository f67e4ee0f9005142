#include <gtest/gtest.h>

#include "uqg/error.hpp"
#include "uqg/field.hpp"
#include "uqg/poly.hpp"

using namespace uqg;

TEST(Field, CanonicalModuli) {
    EXPECT_EQ(Field::make(3, 2)->modulus(), (std::vector<uint32_t>{1, 0, 1}));
    EXPECT_EQ(Field::make(2, 1)->modulus(), (std::vector<uint32_t>{0, 1}));
    EXPECT_EQ(Field::make(5, 2)->modulus(), (std::vector<uint32_t>{2, 0, 1}));
    EXPECT_EQ(Field::make(2, 2)->modulus(), (std::vector<uint32_t>{1, 1, 1}));
}
