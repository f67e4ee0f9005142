#include <gtest/gtest.h>

#include "uqg/classifier.hpp"
#include "uqg/constructions.hpp"
#include "uqg/error.hpp"
#include "uqg/group.hpp"

using namespace uqg;

TEST(Geometry, CurvePointCounts) {
    for (ModelTag tag : {ModelTag::fermat, ModelTag::norm_trace, ModelTag::m3})
        for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
            auto model = HermitianModel::make(tag, q);
            EXPECT_EQ(curve_points(*model).size(), uint64_t{q} * q * q + 1) << model_name(tag) << " q=" << q;
        }
}

TEST(Constructions, PguClosureOrders) {
    for (uint32_t q : {2u, 3u, 4u, 5u})
        for (ModelTag tag : {ModelTag::norm_trace, ModelTag::fermat, ModelTag::m3}) {
            GeneratorSet g = pgu_generators(tag, q);
            EXPECT_EQ(closure_order(g.model, g.gens), pgu_order(q)) << "q=" << q << " " << model_name(tag);
        }
}

TEST(Constructions, TransportPreservesUnitarity) {
    auto fermat = HermitianModel::make(ModelTag::fermat, 7);
    auto m3 = HermitianModel::make(ModelTag::m3, 7);
    for (const Mat3& g : pgu_generators(ModelTag::fermat, 7).gens) {
        Mat3 t = transport(*fermat, *m3, g);
        EXPECT_TRUE(is_unitary(*m3, t));
        EXPECT_EQ(transport(*m3, *fermat, t), normalize(*fermat->field, g));
    }
}

TEST(Constructions, MqOrders) {
    GeneratorSet g3 = mq_generators(3);
    EXPECT_EQ(closure_order(g3.model, g3.gens), 96u);
    GeneratorSet g5 = mq_generators(5);
    EXPECT_EQ(closure_order(g5.model, g5.gens), 720u);
}

TEST(Constructions, MqComplement) {
    for (uint32_t q : {3u, 5u, 7u, 9u}) {
        auto model = HermitianModel::make(ModelTag::m3, q);
        EXPECT_TRUE(is_unitary(*model, mq_alpha(q)));
        EXPECT_EQ(proj_order(*model, mq_alpha(q)), q + 1u);
        EXPECT_EQ(classify(*model, mq_alpha(q)).type, EType::A);
        if (q > 3) EXPECT_FALSE(is_unitary(*model, mq_alpha_printed(q)));
    }
    // At q=3 the printed entry 1 + e^4 vanishes; the matrix is unitary but of order 8.
    auto m3 = HermitianModel::make(ModelTag::m3, 3);
    EXPECT_EQ(proj_order(*m3, mq_alpha_printed(3)), 8u);
    auto model = HermitianModel::make(ModelTag::m3, 5);
    Group C = closure(model, {mq_alpha(5)});
    EXPECT_EQ(census(C), (std::map<uint64_t, uint64_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
}

TEST(Constructions, Sl2Census) {
    GeneratorSet h = sl2_generators(3, 3);
    Group H = closure(h.model, h.gens);
    EXPECT_EQ(census(H), (std::map<uint64_t, uint64_t>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}));
}

TEST(Constructions, SingerElements) {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 16u, 29u}) {
        GeneratorSet s = singer(q);
        const uint64_t order = uint64_t{q} * q - q + 1;
        EXPECT_EQ(proj_order(*s.model, s.gens[0]), order) << "q=" << q;
        EXPECT_EQ(fixed_point_count(s.model->field, s.gens[0], s.model->field), 0u) << "q=" << q;
    }
    GeneratorSet n = singer_normalizer(5);
    EXPECT_EQ(closure_order(n.model, n.gens), 63u);
}

TEST(Classifier, ReferenceElements) {
    auto q5 = HermitianModel::make(ModelTag::fermat, 5);
    const Elem m1 = q5->field->neg(1);
    ElementClass a = classify(*q5, mat_diag(m1, 1, 1));
    EXPECT_EQ(a.type, EType::A);
    EXPECT_EQ(a.order, 2u);
    EXPECT_EQ(a.i, 6u);

    GeneratorSet el = elation(5);
    ElementClass c = classify(*el.model, el.gens[0]);
    EXPECT_EQ(c.type, EType::C);
    EXPECT_EQ(c.order, 5u);
    EXPECT_EQ(c.i, 7u);

    GeneratorSet b2 = b2_element(4, 3);
    ElementClass b = classify(*b2.model, b2.gens[0]);
    EXPECT_EQ(b.type, EType::B2);
    EXPECT_EQ(b.order, 3u);
    EXPECT_EQ(b.i, 2u);

    GeneratorSet s = singer(5);
    EXPECT_EQ(classify(*s.model, s.gens[0]).type, EType::B3);

    GeneratorSet e = e_element(5, 3);
    ElementClass ee = classify(*e.model, e.gens[0]);
    EXPECT_EQ(ee.type, EType::E);
    EXPECT_EQ(ee.order, 15u);
}

TEST(Classifier, IdentityRejected) {
    auto model = HermitianModel::make(ModelTag::fermat, 3);
    try {
        classify(*model, mat_identity());
        FAIL() << "identity accepted";
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), "IdentityElement");
    }
}

TEST(Classifier, AgreesWithTameOracleOnPgu) {
    for (uint32_t q : {2u, 3u, 4u}) {
        GeneratorSet g = pgu_generators(ModelTag::norm_trace, q);
        Group G = closure(g.model, g.gens);
        for (const Mat3& m : G.elements()) {
            if (m == mat_identity()) continue;
            ElementClass c = classify(*G.model(), m);
            if (c.order % g.model->p == 0) continue;
            EXPECT_EQ(tame_oracle(*G.model(), m), c.i) << "q=" << q << " " << etype_name(c.type);
        }
    }
}

TEST(Constructions, FamilyOrders) {
    auto order = [](const GeneratorSet& g) { return closure_order(g.model, g.gens); };
    EXPECT_EQ(order(unipotent_semidirect(9, 3, 2)), 6u);
    EXPECT_EQ(order(unipotent_semidirect(25, 5, 2)), 10u);
    EXPECT_EQ(order(cyclic_by_cyclic_split(9, 2, 5, true)), 10u);
    EXPECT_EQ(order(cyclic_by_cyclic_split(11, 5, 4, false)), 20u);
    EXPECT_EQ(order(cyclic_by_cyclic_nonsplit(5, 3, 2, false)), 6u);
    EXPECT_EQ(order(dicyclic(7, 2)), 8u);
    EXPECT_EQ(order(dicyclic(13, 3)), 12u);
    EXPECT_EQ(order(alternating4(5)), 12u);
    EXPECT_EQ(order(symmetric3(9)), 6u);
    EXPECT_EQ(order(cyclic_by_c3(13, 7)), 21u);
    EXPECT_EQ(order(subfield_pgu(2, 8)), 216u);
    EXPECT_EQ(order(dihedral(7, 4)), 8u);
}

TEST(Constructions, HostOrders) {
    for (uint32_t q : {3u, 4u, 5u})
        for (const std::string& name : host_names()) {
            GeneratorSet h = host(name, q);
            EXPECT_EQ(closure_order(h.model, h.gens), host_order(name, q)) << name << " q=" << q;
        }
}
