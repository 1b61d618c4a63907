#include "jetcalc/codec.hpp"

#include <cmath>
#include <initializer_list>

namespace jetcalc::codec {

namespace {

json vec_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

json mat_json(const Matrix& M) {
  json out = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json tensor_json(const Tensor3& T) {
  json out = json::array();
  for (std::size_t a = 0; a < T.dim0(); ++a) {
    json slab = json::array();
    for (std::size_t i = 0; i < T.dim1(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < T.dim2(); ++j) row.push_back(T(a, i, j));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

json pivots_json(const PivotSet& I) {
  json out = json::array();
  for (std::size_t k : I) out.push_back(k);
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw CodecError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw CodecError(std::string("missing field \"") + name + "\"");
  return *it;
}

double number(const json& j) {
  if (!j.is_number()) throw CodecError("expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw CodecError("non-finite number");
  return x;
}

int positive_int(const json& j, const char* name) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw CodecError(std::string("field \"") + name + "\" must be a positive integer");
  return j.get<int>();
}

const json& array_of(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    throw CodecError(std::string(what) + ": expected an array of length " + std::to_string(size));
  return j;
}

Vector parse_vec(const json& j, std::size_t n, const char* what) {
  array_of(j, n, what);
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = number(j[k]);
  return v;
}

Matrix parse_mat(const json& j, std::size_t rows, std::size_t cols, const char* what) {
  array_of(j, rows, what);
  Matrix M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    array_of(j[r], cols, what);
    for (std::size_t c = 0; c < cols; ++c)
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = number(j[r][c]);
  }
  return M;
}

Tensor3 parse_tensor(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, const char* what) {
  array_of(j, d0, what);
  Tensor3 T(d0, d1, d2);
  for (std::size_t a = 0; a < d0; ++a) {
    array_of(j[a], d1, what);
    for (std::size_t i = 0; i < d1; ++i) {
      array_of(j[a][i], d2, what);
      for (std::size_t k = 0; k < d2; ++k) T(a, i, k) = number(j[a][i][k]);
    }
  }
  return T;
}

PivotSet parse_pivots(const json& j, std::size_t m) {
  array_of(j, m, "I");
  PivotSet I;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw CodecError("I: expected row indices");
    I.push_back(x.get<std::size_t>());
  }
  return I;
}

Dims parse_dims(const json& j) {
  try {
    return {positive_int(field(j, "m"), "m"), positive_int(field(j, "n"), "n")};
  } catch (const DimensionError& e) {
    throw CodecError(e.what());
  }
}

TensorKind parse_kind(const json& j) {
  if (!j.is_string()) throw CodecError("kind: expected a string");
  try {
    return tensor_kind_from_string(j.get<std::string>());
  } catch (const DomainError& e) {
    throw CodecError(e.what());
  }
}

bool has_all(const json& j, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (!j.contains(n)) return false;
  return true;
}

// Re-throws constructor invariant failures as codec errors.
template <typename F>
auto guarded(F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const CodecError&) {
    throw;
  } catch (const Error& e) {
    throw CodecError(e.what());
  } catch (const json::exception& e) {
    throw CodecError(e.what());
  }
}

}  // namespace

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::velocity: return "velocity";
    case ValueKind::double_velocity: return "double_velocity";
    case ValueKind::vertical_vector: return "vertical_vector";
    case ValueKind::jet_group: return "jet_group";
    case ValueKind::principal: return "principal";
    case ValueKind::second_order: return "second_order";
    case ValueKind::contact: return "contact";
    case ValueKind::double_contact: return "double_contact";
    case ValueKind::quotient_vertical: return "quotient_vertical";
  }
  return "unknown";
}

ValueKind detect(const json& j) {
  if (!j.is_object()) throw CodecError("expected a JSON object");
  if (has_all(j, {"base", "I", "V"})) return ValueKind::quotient_vertical;
  if (has_all(j, {"base", "K"})) return ValueKind::vertical_vector;
  if (has_all(j, {"I", "X", "Y", "Z"})) return ValueKind::double_contact;
  if (has_all(j, {"Ui", "Uo", "W"})) return ValueKind::double_velocity;
  if (has_all(j, {"Aphi", "Asigma", "B"})) return ValueKind::principal;
  if (has_all(j, {"A", "S"})) return ValueKind::second_order;
  if (has_all(j, {"u", "P"})) return ValueKind::contact;
  if (has_all(j, {"u", "U"})) return ValueKind::velocity;
  if (has_all(j, {"A"})) return ValueKind::jet_group;
  throw CodecError("unrecognized value: field names match no known encoding");
}

// --- encoders ----------------------------------------------------------------

json encode(const Velocity& v) {
  return {{"m", v.dims().m}, {"n", v.dims().n}, {"u", vec_json(v.u())}, {"U", mat_json(v.U())}};
}

json encode(const DoubleVelocity& dv) {
  return {{"m", dv.dims().m},       {"n", dv.dims().n},       {"u", vec_json(dv.u())},
          {"Ui", mat_json(dv.Ui())}, {"Uo", mat_json(dv.Uo())}, {"W", tensor_json(dv.W())}};
}

json encode(const VerticalVector& k) {
  return {{"base", encode(k.base())}, {"K", tensor_json(k.K())}, {"kind", std::string(to_string(k.kind()))}};
}

json encode(const JetGroupElement& g) { return {{"m", g.m()}, {"A", mat_json(g.A())}}; }

json encode(const PrincipalJetElement& p) {
  return {{"m", p.m()},
          {"Aphi", mat_json(p.Aphi())},
          {"Asigma", mat_json(p.Asigma())},
          {"B", tensor_json(p.B())}};
}

json encode(const SecondOrderJetElement& q) {
  return {{"m", q.m()}, {"A", mat_json(q.A())}, {"S", tensor_json(q.S())}};
}

json encode(const ContactElement& c) {
  return {{"m", c.dims().m}, {"n", c.dims().n}, {"u", vec_json(c.u())}, {"P", mat_json(c.P())}};
}

json encode(const DoubleContactElement& d) {
  return {{"m", d.dims().m},          {"n", d.dims().n},        {"I", pivots_json(d.I())},
          {"u", vec_json(d.u())},      {"X", mat_json(d.X())},   {"Y", mat_json(d.Y())},
          {"Z", tensor_json(d.Z())}};
}

json encode(const QuotientVerticalVector& q) {
  return {{"base", encode(q.base())},
          {"I", pivots_json(q.I())},
          {"V", tensor_json(q.V())},
          {"kind", std::string(to_string(q.kind()))}};
}

// --- decoders ----------------------------------------------------------------

Velocity decode_velocity(const json& j) {
  return guarded([&] {
    const Dims d = parse_dims(j);
    return Velocity(d, parse_vec(field(j, "u"), d.un(), "u"), parse_mat(field(j, "U"), d.un(), d.um(), "U"));
  });
}

DoubleVelocity decode_double_velocity(const json& j) {
  return guarded([&] {
    const Dims d = parse_dims(j);
    return DoubleVelocity(d, parse_vec(field(j, "u"), d.un(), "u"),
                          parse_mat(field(j, "Ui"), d.un(), d.um(), "Ui"),
                          parse_mat(field(j, "Uo"), d.un(), d.um(), "Uo"),
                          parse_tensor(field(j, "W"), d.un(), d.um(), d.um(), "W"));
  });
}

VerticalVector decode_vertical_vector(const json& j) {
  return guarded([&] {
    Velocity base = decode_velocity(field(j, "base"));
    const Dims d = base.dims();
    const TensorKind kind = j.contains("kind") ? parse_kind(j["kind"]) : TensorKind::general;
    return VerticalVector(std::move(base), parse_tensor(field(j, "K"), d.un(), d.um(), d.um(), "K"), kind);
  });
}

JetGroupElement decode_jet_group(const json& j) {
  return guarded([&] {
    const auto m = static_cast<std::size_t>(positive_int(field(j, "m"), "m"));
    return JetGroupElement(parse_mat(field(j, "A"), m, m, "A"));
  });
}

PrincipalJetElement decode_principal(const json& j) {
  return guarded([&] {
    const auto m = static_cast<std::size_t>(positive_int(field(j, "m"), "m"));
    return PrincipalJetElement(parse_mat(field(j, "Aphi"), m, m, "Aphi"),
                               parse_mat(field(j, "Asigma"), m, m, "Asigma"),
                               parse_tensor(field(j, "B"), m, m, m, "B"));
  });
}

SecondOrderJetElement decode_second_order(const json& j) {
  return guarded([&] {
    const auto m = static_cast<std::size_t>(positive_int(field(j, "m"), "m"));
    return SecondOrderJetElement(parse_mat(field(j, "A"), m, m, "A"), parse_tensor(field(j, "S"), m, m, m, "S"));
  });
}

ContactElement decode_contact(const json& j) {
  return guarded([&] {
    const Dims d = parse_dims(j);
    return ContactElement(d, parse_vec(field(j, "u"), d.un(), "u"), parse_mat(field(j, "P"), d.un(), d.um(), "P"));
  });
}

DoubleContactElement decode_double_contact(const json& j) {
  return guarded([&] {
    const Dims d = parse_dims(j);
    if (d.m >= d.n) throw CodecError("double contact element requires m < n");
    const std::size_t rest = d.un() - d.um();
    return DoubleContactElement(d, parse_pivots(field(j, "I"), d.um()), parse_vec(field(j, "u"), d.un(), "u"),
                                parse_mat(field(j, "X"), rest, d.um(), "X"),
                                parse_mat(field(j, "Y"), rest, d.um(), "Y"),
                                parse_tensor(field(j, "Z"), rest, d.um(), d.um(), "Z"));
  });
}

QuotientVerticalVector decode_quotient_vertical(const json& j) {
  return guarded([&] {
    ContactElement base = decode_contact(field(j, "base"));
    const Dims d = base.dims();
    const TensorKind kind = j.contains("kind") ? parse_kind(j["kind"]) : TensorKind::general;
    return QuotientVerticalVector(std::move(base), parse_pivots(field(j, "I"), d.um()),
                                  parse_tensor(field(j, "V"), d.un() - d.um(), d.um(), d.um(), "V"), kind);
  });
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw CodecError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace jetcalc::codec
