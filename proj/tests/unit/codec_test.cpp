#include "jetcalc/codec.hpp"
#include "jetcalc/sampling.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using codec::CodecError;
using codec::json;
using codec::ValueKind;
using testing::mat;
using testing::ten;
using testing::vec;

TEST(Codec, PrincipalLayout) {
  const PrincipalJetElement p(mat(1, 1, {2}), mat(1, 1, {3}), ten(1, 1, 1, {5}));
  const json j = codec::encode(p);
  EXPECT_EQ(j, json::parse(R"({"m":1,"Aphi":[[2.0]],"Asigma":[[3.0]],"B":[[[5.0]]]})"));
  EXPECT_EQ(codec::detect(j), ValueKind::principal);
}

TEST(Codec, DoubleVelocityLayout) {
  const DoubleVelocity dv(Dims{1, 2}, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6}));
  const json j = codec::encode(dv);
  EXPECT_EQ(j["Ui"], json::parse("[[1.0],[2.0]]"));
  EXPECT_EQ(j["W"], json::parse("[[[5.0]],[[6.0]]]"));
  EXPECT_EQ(codec::detect(j), ValueKind::double_velocity);
}

TEST(Codec, RoundTripIsExact) {
  Sampler s(9);
  const Dims d{2, 4};
  for (int k = 0; k < 10; ++k) {
    const DoubleVelocity dv = s.double_velocity(d);
    // Non-integer values exercise the round-trip precision.
    const PrincipalJetElement p = inverse_P(s.principal(2));
    const DoubleContactElement c = double_contact_of(s.chart_admissible(d));

    const auto dv2 = codec::decode_double_velocity(codec::parse(codec::dump(codec::encode(dv))));
    EXPECT_EQ(distance(dv2, dv), 0.0);
    const auto p2 = codec::decode_principal(codec::parse(codec::dump(codec::encode(p))));
    EXPECT_EQ(p2.B(), p.B());
    EXPECT_EQ(p2.Aphi(), p.Aphi());
    const auto c2 = codec::decode_double_contact(codec::parse(codec::dump(codec::encode(c), true)));
    EXPECT_EQ(c2.I(), c.I());
    EXPECT_EQ(c2.Z(), c.Z());
    EXPECT_EQ(c2.X(), c.X());
  }
}

TEST(Codec, DetectsEveryKind) {
  const Velocity v(Dims{1, 2}, vec({0, 0}), mat(2, 1, {1, 2}));
  const ContactElement c = contact_of(v);
  EXPECT_EQ(codec::detect(codec::encode(v)), ValueKind::velocity);
  EXPECT_EQ(codec::detect(codec::encode(c)), ValueKind::contact);
  EXPECT_EQ(codec::detect(codec::encode(JetGroupElement::identity(2))), ValueKind::jet_group);
  EXPECT_EQ(codec::detect(codec::encode(SecondOrderJetElement(mat(1, 1, {2}), ten(1, 1, 1, {1})))),
            ValueKind::second_order);
  EXPECT_EQ(codec::detect(codec::encode(VerticalVector(v, ten(2, 1, 1, {1, 1})))), ValueKind::vertical_vector);
  const QuotientVerticalVector q(c, {0}, ten(1, 1, 1, {1}));
  EXPECT_EQ(codec::detect(codec::encode(q)), ValueKind::quotient_vertical);
  EXPECT_EQ(codec::decode_quotient_vertical(codec::encode(q)).V(), q.V());
  EXPECT_THROW(codec::detect(json::parse(R"({"x":1})")), CodecError);
}

TEST(Codec, RejectsMalformedInput) {
  EXPECT_THROW(codec::parse("{not json"), CodecError);
  EXPECT_THROW(codec::decode_principal(json::parse(R"({"m":1,"Aphi":[[2]],"Asigma":[[3]]})")), CodecError);
  EXPECT_THROW(codec::decode_principal(json::parse(R"({"m":0,"Aphi":[],"Asigma":[],"B":[]})")), CodecError);
  EXPECT_THROW(codec::decode_principal(json::parse(R"({"m":1,"Aphi":[[2,1]],"Asigma":[[3]],"B":[[[5]]]})")),
               CodecError);
  EXPECT_THROW(codec::decode_principal(json::parse(R"({"m":1,"Aphi":[["a"]],"Asigma":[[3]],"B":[[[5]]]})")),
               CodecError);
  EXPECT_THROW(
      codec::decode_double_contact(json::parse(
          R"({"m":1,"n":2,"I":[2],"u":[0,0],"X":[[1]],"Y":[[1]],"Z":[[[0]]]})")),
      CodecError);
}

TEST(Codec, ValidationErrorsSurface) {
  // Well-formed but singular: the library's own error propagates.
  EXPECT_THROW(codec::decode_principal(json::parse(R"({"m":1,"Aphi":[[0]],"Asigma":[[3]],"B":[[[5]]]})")),
               Error);
}

}  // namespace
}  // namespace jetcalc
