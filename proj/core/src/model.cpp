#include "kal/model.hpp"

#include "kal/error.hpp"

namespace kal {

Rational dot(const Objective& c, const Point& x) {
  if (c.dim() != x.dim())
    throw ParamError("dot: dimension mismatch (" + std::to_string(c.dim()) + " vs " +
                     std::to_string(x.dim()) + ")");
  Rational acc;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (c.coeffs[i].is_zero()) continue;
    acc += c.coeffs[i] * x.coords[i];
  }
  return acc;
}

ValidationReport validate_instance(const KnapsackInstance& inst) {
  ValidationReport rep;
  rep.n = inst.n();
  rep.capacity = inst.capacity;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.weights[i].sign() < 0) {
      rep.ok = false;
      rep.errors.push_back("weight " + std::to_string(i) + " is negative (" + inst.weights[i].str() + ")");
    }
    rep.total_weight += inst.weights[i];
  }
  if (inst.capacity.sign() < 0) {
    rep.ok = false;
    rep.errors.push_back("capacity is negative (" + inst.capacity.str() + ")");
  }
  return rep;
}

void require_valid(const KnapsackInstance& inst) {
  const auto rep = validate_instance(inst);
  if (!rep.ok) throw ParamError("invalid knapsack instance: " + rep.errors.front());
}

ValidationReport validate_system(const DownMonotoneSystem& sys) {
  ValidationReport rep;
  rep.n = sys.n_vars;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& row = sys.rows[r];
    if (row.coeffs.size() != sys.n_vars) {
      rep.ok = false;
      rep.errors.push_back("row " + std::to_string(r) + " has wrong arity");
      continue;
    }
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      if (row.coeffs[i].sign() < 0) {
        rep.ok = false;
        rep.errors.push_back("row " + std::to_string(r) + " coefficient " + std::to_string(i) +
                             " is negative");
      }
    }
    if (row.rhs.sign() < 0) {
      rep.ok = false;
      rep.errors.push_back("row " + std::to_string(r) + " rhs is negative");
    }
  }
  return rep;
}

void require_valid(const DownMonotoneSystem& sys) {
  const auto rep = validate_system(sys);
  if (!rep.ok) throw ParamError("invalid down-monotone system: " + rep.errors.front());
}

Rational instance_weight(const KnapsackInstance& inst, const Point& x) {
  if (x.dim() != inst.n()) throw ParamError("instance_weight: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (x.coords[i].is_zero()) continue;
    acc += inst.weights[i] * x.coords[i];
  }
  return acc;
}

namespace {
bool in_unit_box(const Point& x) {
  for (const auto& v : x.coords) {
    if (v.sign() < 0 || v > Rational(1)) return false;
  }
  return true;
}
} // namespace

bool instance_feasible(const KnapsackInstance& inst, const Point& x) {
  if (x.dim() != inst.n()) return false;
  if (!in_unit_box(x)) return false;
  return instance_weight(inst, x) <= inst.capacity;
}

bool system_feasible(const DownMonotoneSystem& sys, const Point& x) {
  if (x.dim() != sys.n_vars) return false;
  if (!in_unit_box(x)) return false;
  for (const auto& row : sys.rows) {
    Rational acc;
    for (std::size_t i = 0; i < sys.n_vars; ++i) {
      if (x.coords[i].is_zero()) continue;
      acc += row.coeffs[i] * x.coords[i];
    }
    if (acc > row.rhs) return false;
  }
  return true;
}

} // namespace kal
