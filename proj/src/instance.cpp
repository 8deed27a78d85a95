#include "ccfusion/instance.hpp"

#include <fstream>
#include <sstream>

namespace ccfusion {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError("instance field '" + path + "': " + message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

template <FieldScalar Scalar>
Scalar scalar(const json& j, const std::string& path) {
  if constexpr (is_complex_v<Scalar>) {
    if (j.is_number()) return {number(j, path), 0.0};
    if (!j.is_array() || j.size() != 2) fail(path, "expected a complex entry [re, im]");
    return {number(j[0], index(path, 0)), number(j[1], index(path, 1))};
  } else {
    return number(j, path);
  }
}

template <FieldScalar Scalar>
Vector<Scalar> vector(const json& j, Eigen::Index n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of " + std::to_string(n) + " entries");
  if (static_cast<Eigen::Index>(j.size()) != n) {
    fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = scalar<Scalar>(j[static_cast<std::size_t>(i)], index(path, static_cast<std::size_t>(i)));
  }
  return v;
}

template <FieldScalar Scalar>
Matrix<Scalar> matrix(const json& j, Eigen::Index n, const std::string& path) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
    fail(path, "expected " + std::to_string(n) + " rows");
  }
  Matrix<Scalar> m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    m.row(r) = vector<Scalar>(j[static_cast<std::size_t>(r)], n, index(path, static_cast<std::size_t>(r)))
                   .transpose();
  }
  return m;
}

template <FieldScalar Scalar>
WeightedSubspaceFamily<Scalar> family(const json& j, Eigen::Index n, const std::string& path,
                                      const Tolerances& tol) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of subspaces");
  std::vector<WeightedSubspace<Scalar>> items;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = index(path, i);
    const json& basis = member(j[i], "basis", at);
    if (!basis.is_array() || basis.empty()) fail(join(at, "basis"), "expected a nonempty list of vectors");
    Matrix<Scalar> spanning(n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      spanning.col(static_cast<Eigen::Index>(k)) = vector<Scalar>(basis[k], n, index(join(at, "basis"), k));
    }
    const double weight = number(member(j[i], "weight", at), join(at, "weight"));
    if (!(weight > 0.0)) fail(join(at, "weight"), "must be positive");
    try {
      items.push_back({orthonormalize(spanning, tol), weight});
    } catch (const Error& e) {
      fail(join(at, "basis"), e.what());
    }
  }
  return WeightedSubspaceFamily<Scalar>(std::move(items));
}

template <FieldScalar Scalar>
ControlPair<Scalar> controls(const json& obj, Eigen::Index n, const std::string& path,
                             const Tolerances& tol) {
  Matrix<Scalar> c = matrix<Scalar>(member(obj, "C", path), n, join(path, "C"));
  Matrix<Scalar> cp = matrix<Scalar>(member(obj, "C_prime", path), n, join(path, "C_prime"));
  try {
    return ControlPair<Scalar>(std::move(c), std::move(cp), tol);
  } catch (const Error& e) {
    fail(path.empty() ? "C/C_prime" : join(path, "C/C_prime"), e.what());
  }
}

InstanceParams params(const json& j) {
  InstanceParams p;
  const std::string path = "params";
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("lambda1")) p.lambda1 = number(j["lambda1"], "params.lambda1");
  if (j.contains("lambda2")) p.lambda2 = number(j["lambda2"], "params.lambda2");
  if (j.contains("epsilon")) p.epsilon = number(j["epsilon"], "params.epsilon");
  if (j.contains("beta")) {
    const json& b = j["beta"];
    std::vector<double> beta;
    if (b.is_number()) {
      beta.push_back(number(b, "params.beta"));
    } else if (b.is_array()) {
      for (std::size_t i = 0; i < b.size(); ++i) beta.push_back(number(b[i], index("params.beta", i)));
    } else {
      fail("params.beta", "expected a number or an array of numbers");
    }
    p.beta = std::move(beta);
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("params.seed", "expected a nonnegative integer");
    p.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_unsigned()) fail("params.samples", "expected a nonnegative integer");
    p.samples = j["samples"].get<std::size_t>();
  }
  if (j.contains("transform_mode")) {
    const json& m = j["transform_mode"];
    if (m == "adjoint_commuting") {
      p.transform_mode = TransformMode::adjoint_commuting;
    } else if (m == "unitary_commuting") {
      p.transform_mode = TransformMode::unitary_commuting;
    } else {
      fail("params.transform_mode", "expected \"adjoint_commuting\" or \"unitary_commuting\"");
    }
  }
  return p;
}

template <FieldScalar Scalar>
Instance<Scalar> parse_typed(const json& doc, Eigen::Index n, const Tolerances& tol) {
  auto fam = family<Scalar>(member(doc, "subspaces", ""), n, "subspaces", tol);
  auto ctl = controls<Scalar>(doc, n, "", tol);
  Instance<Scalar> out{ControlledFusionFrame<Scalar>(std::move(fam), ctl), std::nullopt, std::nullopt, {}};
  if (doc.contains("second")) {
    const json& s = doc["second"];
    auto second_family = family<Scalar>(member(s, "subspaces", "second"), n, "second.subspaces", tol);
    const bool own_controls = s.is_object() && (s.contains("C") || s.contains("C_prime"));
    out.second = ControlledFusionFrame<Scalar>(
        std::move(second_family), own_controls ? controls<Scalar>(s, n, "second", tol) : ctl);
  }
  if (doc.contains("params")) {
    out.params = params(doc["params"]);
    if (doc["params"].contains("u")) out.u = matrix<Scalar>(doc["params"]["u"], n, "params.u");
  }
  return out;
}

template <FieldScalar Scalar>
nlohmann::ordered_json scalar_json(const Scalar& x) {
  if constexpr (is_complex_v<Scalar>) {
    return nlohmann::ordered_json::array({x.real(), x.imag()});
  } else {
    return x;
  }
}

template <FieldScalar Scalar>
nlohmann::ordered_json matrix_json(const Matrix<Scalar>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_json<Scalar>(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <FieldScalar Scalar>
nlohmann::ordered_json family_json(const WeightedSubspaceFamily<Scalar>& family) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& item : family.items()) {
    // basis vectors are the columns of Q, i.e. the rows of Q^T
    const Matrix<Scalar> rows = item.basis.columns().transpose();
    out.push_back({{"basis", matrix_json<Scalar>(rows)}, {"weight", item.weight}});
  }
  return out;
}

}  // namespace

AnyInstance parse_instance(const nlohmann::json& doc, const Tolerances& tol) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  const json& version = member(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kInstanceVersion) {
    fail("version", "unsupported format version (expected " + std::to_string(kInstanceVersion) + ")");
  }
  const json& dim = member(doc, "dim", "");
  if (!dim.is_number_unsigned() || dim.get<std::int64_t>() < 1) fail("dim", "expected a positive integer");
  const auto n = static_cast<Eigen::Index>(dim.get<std::int64_t>());
  const std::string field = doc.value("field", std::string("real"));
  if (field == "real") return parse_typed<double>(doc, n, tol);
  if (field == "complex") return parse_typed<Complex>(doc, n, tol);
  fail("field", "expected \"real\" or \"complex\"");
}

AnyInstance parse_instance_text(const std::string& text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() already carries line and column
    throw ParseError(std::string("malformed JSON (byte ") + std::to_string(e.byte) + "): " + e.what());
  }
  return parse_instance(doc, tol);
}

AnyInstance load_instance(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str(), tol);
}

template <FieldScalar Scalar>
nlohmann::ordered_json instance_to_json(const Instance<Scalar>& instance) {
  const auto& frame = instance.frame;
  nlohmann::ordered_json out;
  out["format"] = "ccfusion-instance";
  out["version"] = kInstanceVersion;
  out["field"] = field_name<Scalar>();
  out["dim"] = frame.dim();
  out["subspaces"] = family_json(frame.family());
  out["C"] = matrix_json<Scalar>(frame.controls().c());
  out["C_prime"] = matrix_json<Scalar>(frame.controls().c_prime());
  if (instance.second) {
    nlohmann::ordered_json second;
    second["subspaces"] = family_json(instance.second->family());
    second["C"] = matrix_json<Scalar>(instance.second->controls().c());
    second["C_prime"] = matrix_json<Scalar>(instance.second->controls().c_prime());
    out["second"] = std::move(second);
  }
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  const auto& ip = instance.params;
  if (ip.lambda1) p["lambda1"] = *ip.lambda1;
  if (ip.lambda2) p["lambda2"] = *ip.lambda2;
  if (ip.beta) p["beta"] = *ip.beta;
  if (ip.epsilon) p["epsilon"] = *ip.epsilon;
  if (ip.seed) p["seed"] = *ip.seed;
  if (ip.samples) p["samples"] = *ip.samples;
  if (instance.u) p["u"] = matrix_json<Scalar>(*instance.u);
  if (ip.transform_mode) p["transform_mode"] = to_string(*ip.transform_mode);
  if (!p.empty()) out["params"] = std::move(p);
  return out;
}

template nlohmann::ordered_json instance_to_json(const Instance<double>&);
template nlohmann::ordered_json instance_to_json(const Instance<Complex>&);

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ccfusion
