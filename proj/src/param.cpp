#include "kov/param.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kov {
namespace {

struct Registry {
  std::mutex mu;
  // deque keeps label references stable while the registry grows
  std::deque<std::string> labels;
  std::map<std::string, int, std::less<>> ids;

  Registry() {
    labels.emplace_back("eps");
    ids.emplace("eps", 0);
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Param intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.ids.find(name); it != r.ids.end()) return Param{it->second};
  const int id = static_cast<int>(r.labels.size());
  r.labels.emplace_back(name);
  r.ids.emplace(std::string(name), id);
  return Param{id};
}

bool lookup(std::string_view name, Param& out) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.ids.find(name);
  if (it == r.ids.end()) return false;
  out = Param{it->second};
  return true;
}

const std::string& label(Param p) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (p.id < 0 || p.id >= static_cast<int>(r.labels.size()))
    throw std::out_of_range("unknown parameter id " + std::to_string(p.id));
  return r.labels[static_cast<std::size_t>(p.id)];
}

int registry_size() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return static_cast<int>(r.labels.size());
}

}  // namespace kov
