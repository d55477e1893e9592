#include "muforge/formula.hpp"

#include <algorithm>
#include <functional>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

std::size_t hash_combine(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

std::size_t compute_hash(const Formula& f) {
  std::size_t h = std::hash<unsigned>{}(static_cast<unsigned>(f.kind));
  h = hash_combine(h, std::hash<std::string>{}(f.name));
  if (f.lhs) h = hash_combine(h, f.lhs->hashValue);
  if (f.rhs) h = hash_combine(h, f.rhs->hashValue);
  for (const auto& m : f.family) h = hash_combine(h, m->hashValue);
  return h;
}

FormulaRef make(FormulaKind k, std::string name, FormulaRef lhs, FormulaRef rhs,
                std::vector<FormulaRef> family = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  f->family = std::move(family);
  f->hashValue = compute_hash(*f);
  return f;
}

} // namespace

FormulaRef top() {
  static const FormulaRef t = make(FormulaKind::Top, "", nullptr, nullptr);
  return t;
}

FormulaRef bottom() {
  static const FormulaRef b = make(FormulaKind::Bottom, "", nullptr, nullptr);
  return b;
}

FormulaRef prop(std::string name) {
  return make(FormulaKind::Prop, std::move(name), nullptr, nullptr);
}

FormulaRef nprop(std::string name) {
  return make(FormulaKind::NegProp, std::move(name), nullptr, nullptr);
}

FormulaRef var(std::string name) {
  return make(FormulaKind::Var, std::move(name), nullptr, nullptr);
}

FormulaRef conj(FormulaRef a, FormulaRef b) {
  return make(FormulaKind::And, "", std::move(a), std::move(b));
}

FormulaRef disj(FormulaRef a, FormulaRef b) {
  return make(FormulaKind::Or, "", std::move(a), std::move(b));
}

FormulaRef modal(std::vector<FormulaRef> members) {
  std::sort(members.begin(), members.end(), FormulaLess{});
  members.erase(std::unique(members.begin(), members.end(),
                            [](const FormulaRef& a, const FormulaRef& b) { return equal(a, b); }),
                members.end());
  return make(FormulaKind::Modal, "", nullptr, nullptr, std::move(members));
}

FormulaRef mu(std::string name, FormulaRef body) {
  return make(FormulaKind::Mu, std::move(name), std::move(body), nullptr);
}

FormulaRef nu(std::string name, FormulaRef body) {
  return make(FormulaKind::Nu, std::move(name), std::move(body), nullptr);
}

FormulaRef dia(FormulaRef f) { return modal({std::move(f), top()}); }

FormulaRef box(FormulaRef f) { return disj(modal({std::move(f)}), modal({})); }

FormulaRef fold_or(const std::vector<FormulaRef>& fs) {
  if (fs.empty()) return bottom();
  FormulaRef r = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) r = disj(fs[i], r);
  return r;
}

FormulaRef fold_and(const std::vector<FormulaRef>& fs) {
  if (fs.empty()) return top();
  FormulaRef r = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) r = conj(fs[i], r);
  return r;
}

FormulaRef disj_of(std::vector<FormulaRef> fs) {
  std::sort(fs.begin(), fs.end(), FormulaLess{});
  fs.erase(std::unique(fs.begin(), fs.end(),
                       [](const FormulaRef& a, const FormulaRef& b) { return equal(a, b); }),
           fs.end());
  return fold_or(fs);
}

int compare(const Formula& a, const Formula& b) {
  if (&a == &b) return 0;
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  auto cmpRef = [](const FormulaRef& x, const FormulaRef& y) -> int {
    if (x == y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(*x, *y);
  };
  if (int c = cmpRef(a.lhs, b.lhs); c != 0) return c;
  if (int c = cmpRef(a.rhs, b.rhs); c != 0) return c;
  if (a.family.size() != b.family.size()) return a.family.size() < b.family.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.family.size(); ++i)
    if (int c = cmpRef(a.family[i], b.family[i]); c != 0) return c;
  return 0;
}

bool equal(const FormulaRef& a, const FormulaRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hashValue != b->hashValue) return false;
  return compare(*a, *b) == 0;
}

bool FormulaLess::operator()(const FormulaRef& a, const FormulaRef& b) const {
  if (a == b) return false;
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  return compare(*a, *b) < 0;
}

namespace {

void free_vars_rec(const FormulaRef& f, std::set<std::string>& out) {
  switch (f->kind) {
  case FormulaKind::Var:
    out.insert(f->name);
    return;
  case FormulaKind::And:
  case FormulaKind::Or:
    free_vars_rec(f->lhs, out);
    free_vars_rec(f->rhs, out);
    return;
  case FormulaKind::Modal:
    for (const auto& m : f->family) free_vars_rec(m, out);
    return;
  case FormulaKind::Mu:
  case FormulaKind::Nu: {
    std::set<std::string> inner;
    free_vars_rec(f->body(), inner);
    inner.erase(f->name);
    out.insert(inner.begin(), inner.end());
    return;
  }
  default:
    return;
  }
}

} // namespace

std::set<std::string> free_vars(const FormulaRef& f) {
  std::set<std::string> out;
  free_vars_rec(f, out);
  return out;
}

bool is_closed(const FormulaRef& f) { return free_vars(f).empty(); }

namespace {

struct Renamer {
  std::set<std::string> used;
  std::map<std::string, std::vector<std::string>> env;

  std::string fresh(const std::string& base) {
    if (used.count(base) == 0) return base;
    for (int n = 1;; ++n) {
      std::string cand = base + std::to_string(n);
      if (used.count(cand) == 0) return cand;
    }
  }

  FormulaRef walk(const FormulaRef& f) {
    switch (f->kind) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
    case FormulaKind::Prop:
    case FormulaKind::NegProp:
      return f;
    case FormulaKind::Var: {
      auto it = env.find(f->name);
      if (it != env.end() && !it->second.empty() && it->second.back() != f->name)
        return var(it->second.back());
      return f;
    }
    case FormulaKind::And:
      return conj(walk(f->lhs), walk(f->rhs));
    case FormulaKind::Or:
      return disj(walk(f->lhs), walk(f->rhs));
    case FormulaKind::Modal: {
      std::vector<FormulaRef> ms;
      ms.reserve(f->family.size());
      for (const auto& m : f->family) ms.push_back(walk(m));
      return modal(std::move(ms));
    }
    case FormulaKind::Mu:
    case FormulaKind::Nu: {
      std::string nn = fresh(f->name);
      used.insert(nn);
      env[f->name].push_back(nn);
      FormulaRef b = walk(f->body());
      env[f->name].pop_back();
      return f->kind == FormulaKind::Mu ? mu(nn, std::move(b)) : nu(nn, std::move(b));
    }
    }
    return f;
  }
};

} // namespace

FormulaRef rename_binders_unique(const FormulaRef& f) {
  Renamer r;
  r.used = free_vars(f);
  return r.walk(f);
}

namespace {

struct Validator {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  // Modal depth at which each visible binder sits; vectors handle shadowing.
  std::map<std::string, std::vector<int>> env;

  void walk(const FormulaRef& f, const std::string& path, int depth) {
    switch (f->kind) {
    case FormulaKind::Var: {
      auto it = env.find(f->name);
      if (it == env.end() || it->second.empty()) {
        out.push_back({"free variable '" + f->name + "'", path});
      } else if (it->second.back() == depth) {
        // No modality between the binder and this occurrence.
        out.push_back({"unguarded occurrence of '" + f->name + "'", path});
      }
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
      walk(f->lhs, path + "/left", depth);
      walk(f->rhs, path + "/right", depth);
      return;
    case FormulaKind::Modal:
      for (std::size_t i = 0; i < f->family.size(); ++i)
        walk(f->family[i], path + "/member" + std::to_string(i), depth + 1);
      return;
    case FormulaKind::Mu:
    case FormulaKind::Nu:
      if (!seen.insert(f->name).second)
        out.push_back({"duplicate binder name '" + f->name + "'", path});
      env[f->name].push_back(depth);
      walk(f->body(), path + "/body", depth);
      env[f->name].pop_back();
      return;
    default:
      return;
    }
  }
};

} // namespace

std::vector<Diagnostic> validate(const FormulaRef& f) {
  Validator v;
  v.walk(f, "root", 0);
  return v.out;
}

void validate_or_throw(const FormulaRef& f) {
  auto ds = validate(f);
  if (!ds.empty()) throw ValidationError(ds.front().message + " at " + ds.front().path);
}

FormulaIndex::FormulaIndex(FormulaRef root) : root_(std::move(root)) {
  validate_or_throw(root_);
  std::function<void(const FormulaRef&)> walk = [&](const FormulaRef& f) {
    switch (f->kind) {
    case FormulaKind::Mu:
    case FormulaKind::Nu:
      binders_.push_back(f->name);
      binderNode_[f->name] = f;
      freeInBody_[f->name] = free_vars(f->body());
      walk(f->body());
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      walk(f->lhs);
      walk(f->rhs);
      return;
    case FormulaKind::Modal:
      for (const auto& m : f->family) walk(m);
      return;
    default:
      return;
    }
  };
  walk(root_);
}

bool FormulaIndex::is_mu(const std::string& x) const {
  return binder(x)->kind == FormulaKind::Mu;
}

const FormulaRef& FormulaIndex::binder(const std::string& x) const {
  auto it = binderNode_.find(x);
  if (it == binderNode_.end()) throw ValidationError("unknown variable: " + x);
  return it->second;
}

const FormulaRef& FormulaIndex::body(const std::string& x) const { return binder(x)->body(); }

bool FormulaIndex::free_in_body(const std::string& x, const std::string& y) const {
  auto it = freeInBody_.find(y);
  if (it == freeInBody_.end()) throw ValidationError("unknown variable: " + y);
  return it->second.count(x) != 0;
}

} // namespace muforge
