#pragma once

#include <doctest.h>

#include <functional>
#include <map>
#include <string>

#include "tracelab/error.hpp"
#include "tracelab/suite.hpp"
#include "tracelab/tracefield.hpp"

namespace testing {

using namespace tracelab;

inline const Workspace& example(const std::string& name) {
  static std::map<std::string, Workspace> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, catalog_workspace(name)).first;
  return it->second;
}

inline ModulePtr module_named(const Workspace& ws, const std::string& name) {
  for (const auto& m : ws.modules)
    if (m->name() == name) return m;
  FAIL("no module " << name);
  return nullptr;
}

inline FrobStructure frob(const std::string& name) {
  const Workspace& ws = example(name);
  return symmetric_frobenius(*ws.hopf, *ws.pivot, *ws.frobenius);
}

inline Workspace taft3() {
  const Field f = Field::prime(7);
  return taft_workspace("Taft3F7", f, 3, Scalar(f, 2));
}

inline ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace testing
