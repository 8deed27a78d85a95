#include "ccfusion/tolerances.hpp"

#include <cmath>

#include "ccfusion/errors.hpp"

namespace ccfusion {

namespace {

double* lookup(Tolerances& t, std::string_view name) {
  if (name == "orth") return &t.orth;
  if (name == "rank") return &t.rank;
  if (name == "herm") return &t.herm;
  if (name == "psd") return &t.psd;
  if (name == "inv") return &t.inv;
  if (name == "classify") return &t.classify;
  if (name == "hypothesis") return &t.hypothesis;
  if (name == "containment") return &t.containment;
  if (name == "qdual") return &t.qdual;
  if (name == "reconstruct") return &t.reconstruct;
  return nullptr;
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  double* slot = lookup(*this, name);
  if (slot == nullptr) {
    throw InvalidParams("unknown tolerance '" + std::string(name) + "'");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidParams("tolerance '" + std::string(name) +
                        "' must be finite and nonnegative");
  }
  *slot = value;
}

double Tolerances::get(std::string_view name) const {
  double* slot = lookup(const_cast<Tolerances&>(*this), name);
  if (slot == nullptr) {
    throw InvalidParams("unknown tolerance '" + std::string(name) + "'");
  }
  return *slot;
}

const std::vector<std::string>& Tolerances::names() {
  static const std::vector<std::string> all = {
      "orth",     "rank",       "herm",        "psd",   "inv",
      "classify", "hypothesis", "containment", "qdual", "reconstruct"};
  return all;
}

}  // namespace ccfusion
