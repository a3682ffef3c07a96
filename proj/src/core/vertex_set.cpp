#include "scturan/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scturan {

namespace {

void check_vertex(int v) {
  if (v < 0 || v >= kMaxVertices) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, 128)");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(const std::vector<int>& members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::range(int lo, int hi) {
  VertexSet s;
  for (int v = lo; v < hi; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_vertex(v);
  words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63U);
}

void VertexSet::erase(int v) {
  check_vertex(v);
  words_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) & 63U));
}

int VertexSet::min() const {
  if (words_[0] != 0) return std::countr_zero(words_[0]);
  if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
  return -1;
}

int VertexSet::max() const {
  if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
  if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
  return -1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::mapped(const std::vector<int>& perm) const {
  VertexSet out;
  for_each([&](int v) { out.insert(perm.at(static_cast<std::size_t>(v))); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string VertexSet::to_line() const {
  std::ostringstream os;
  bool first = true;
  for_each([&](int v) {
    if (!first) os << ' ';
    os << v;
    first = false;
  });
  return os.str();
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

void for_each_subset_of_size(const VertexSet& s, int r, const std::function<void(const VertexSet&)>& f) {
  const auto m = s.members();
  const int len = static_cast<int>(m.size());
  if (r < 0 || r > len) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet sub;
    for (int i : idx) sub.insert(m[static_cast<std::size_t>(i)]);
    f(sub);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == len - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void for_each_subset(const VertexSet& s, const std::function<void(const VertexSet&)>& f) {
  const auto m = s.members();
  if (m.size() > 30) throw std::length_error("for_each_subset: set too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    VertexSet sub;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if ((bits >> i) & 1U) sub.insert(m[i]);
    }
    f(sub);
  }
}

std::vector<VertexSet> all_subsets_of_size(int n, int r) {
  std::vector<VertexSet> out;
  for_each_subset_of_size(VertexSet::range(0, n), r, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

}  // namespace scturan
