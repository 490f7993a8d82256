#include "brp/generator.hpp"
#include "brp/io.hpp"
#include "brp/rng.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace brp {
namespace {

// Reference values from an independent Python transcription of the documented generator.
TEST(Rng, MatchesReferenceStream)
{
    Xorshift64Star rng(42);
    EXPECT_EQ(rng.next(), 0x31b0ece7c4f697a2ULL);
    EXPECT_EQ(rng.next(), 0x9008a3b1cb686f03ULL);
    EXPECT_EQ(rng.next(), 0x7c7173abd97be16fULL);
}

TEST(Generator, MatchesReferenceLayouts)
{
    GeneratorParams p{3, 3, HeightPolicy::unlimited, 7, 2};
    EXPECT_EQ(generate(p, 1).initial_bay, Bay({{7, 2, 9}, {1, 6, 4}, {8, 3, 5}}));
    p.policy = HeightPolicy::h_plus_2;
    EXPECT_EQ(generate(p, 2).initial_bay, Bay({{7, 2, 8}, {9, 1, 6}, {3, 5, 4}}));
}

TEST(Generator, FullStacksAndExactPermutation)
{
    GeneratorParams p{3, 3, HeightPolicy::unlimited, 11, 5};
    for (const auto& inst : make_class(p)) {
        EXPECT_EQ(inst.n_containers, 9);
        EXPECT_TRUE(inst.h_max.is_unlimited());
        std::vector<int> all;
        for (int s = 1; s <= inst.width; ++s) {
            EXPECT_EQ(inst.initial_bay.height(s), 3);
            all.insert(all.end(), inst.initial_bay.stack(s).begin(), inst.initial_bay.stack(s).end());
        }
        std::sort(all.begin(), all.end());
        for (int i = 0; i < 9; ++i) {
            EXPECT_EQ(all[static_cast<std::size_t>(i)], i + 1);
        }
    }
}

TEST(Generator, HeightPolicyHPlus2)
{
    const auto inst = generate(GeneratorParams{10, 40, HeightPolicy::h_plus_2, 3, 1}, 1);
    EXPECT_EQ(inst.n_containers, 400);
    EXPECT_EQ(inst.h_max.raw(), 12);
}

TEST(Generator, DeterministicAndDistinct)
{
    GeneratorParams p{4, 5, HeightPolicy::h_plus_2, 99, 40};
    const auto a = make_class(p);
    const auto b = make_class(p);
    ASSERT_EQ(a.size(), 40u);
    EXPECT_EQ(a, b);
    std::set<std::string> texts;
    for (const auto& inst : a) {
        texts.insert(write_instance(inst));
    }
    EXPECT_EQ(texts.size(), 40u);
    EXPECT_EQ(write_instance(generate(p, 7)), write_instance(generate(p, 7)));
}

TEST(Generator, WideAndEmptyClasses)
{
    GeneratorParams wide{10, 100, HeightPolicy::unlimited, 1, 2};
    for (const auto& inst : make_class(wide)) {
        EXPECT_EQ(inst.n_containers, 1000);
    }
    wide.count = 0;
    EXPECT_TRUE(make_class(wide).empty());
}

TEST(Generator, PolicyNames)
{
    EXPECT_EQ(parse_height_policy("H+2"), HeightPolicy::h_plus_2);
    EXPECT_EQ(to_string(HeightPolicy::unlimited), "unlimited");
    EXPECT_THROW(parse_height_policy("tall"), std::invalid_argument);
}

TEST(InstanceFormat, Figure1RoundTrip)
{
    const auto inst = testing::figure1_instance();
    const std::string text = write_instance(inst);
    EXPECT_EQ(text, "3 5 3\n2 1 3\n2 2 4\n1 5\n");
    EXPECT_EQ(parse_instance(text), inst);
}

TEST(InstanceFormat, CommentsAndBlankLines)
{
    const auto inst = parse_instance("# bay\n3 5 0\n\n2 1 3\n# middle\n2 2 4\n1 5\n");
    EXPECT_TRUE(inst.h_max.is_unlimited());
    EXPECT_EQ(inst.initial_bay, testing::figure1_instance().initial_bay);
}

TEST(InstanceFormat, Diagnostics)
{
    auto error_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e;
        }
        ADD_FAILURE() << "no error for: " << text;
        return ParseError("", 0, 0);
    };

    auto e = error_of("2 5 0\n3 1 2 7\n2 3 4\n");
    EXPECT_NE(std::string(e.what()).find("unknown container 7"), std::string::npos);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);

    e = error_of("2 4 0\n2 1 2\n2 2 3\n");
    EXPECT_NE(std::string(e.what()).find("duplicate container 2"), std::string::npos);

    e = error_of("2 4 0\n2 1 2\n1 3\n");
    EXPECT_NE(std::string(e.what()).find("missing container 4"), std::string::npos);

    e = error_of("1 3 2\n3 1 2 3\n");
    EXPECT_NE(std::string(e.what()).find("exceeds H_max"), std::string::npos);

    e = error_of("2 3\n");
    EXPECT_NE(std::string(e.what()).find("header"), std::string::npos);

    e = error_of("1 1 0\n1 1");
    EXPECT_NE(std::string(e.what()).find("trailing newline"), std::string::npos);

    e = error_of("1 2 0\n3 1 2\n");
    EXPECT_NE(std::string(e.what()).find("containers listed"), std::string::npos);

    e = error_of("1 1 0\n1 x\n");
    EXPECT_EQ(e.column(), 3);

    e = error_of("1 1 0\n1 1\n0\n");
    EXPECT_NE(std::string(e.what()).find("after the last stack"), std::string::npos);
}

TEST(InstanceFormat, RoundTripOnGeneratedInstances)
{
    for (auto policy : {HeightPolicy::unlimited, HeightPolicy::h_plus_2}) {
        GeneratorParams p{4, 6, policy, 5, 50};
        for (const auto& inst : make_class(p)) {
            const auto text = write_instance(inst);
            const auto back = parse_instance(text);
            EXPECT_EQ(back, inst);
            EXPECT_EQ(write_instance(back), text);
        }
    }
}

TEST(LegacyFormat, SuppliedHeightLimit)
{
    const auto inst = parse_legacy_instance("3 5\n2 1 3\n2 2 4\n1 5", HeightLimit::bounded(3));
    EXPECT_EQ(inst, testing::figure1_instance());
    EXPECT_THROW(parse_legacy_instance("1 3\n3 1 2 3\n", HeightLimit::bounded(2)), ParseError);
}

TEST(SolutionFormat, RoundTripAndErrors)
{
    const auto sol = testing::table1_solution();
    const auto text = write_solution(sol, "example");
    EXPECT_EQ(text.substr(0, 10), "# example\n");
    EXPECT_EQ(parse_solution(text), sol);
    EXPECT_THROW(parse_solution("R 1\n"), ParseError);
    EXPECT_THROW(parse_solution("V 1 2\n"), ParseError);
    EXPECT_THROW(parse_solution("X 1\n"), ParseError);
}

} // namespace
} // namespace brp
