#pragma once

#include <cassert>
#include <vector>

namespace progsat {

// Indexed max-heap over variable activities. Ties break toward the lower
// variable index so decisions are reproducible.
class ActivityHeap {
public:
  void grow(int nvars) { pos_.resize(nvars, -1); }

  bool contains(int v) const { return pos_[v] >= 0; }
  bool empty() const { return heap_.empty(); }

  void insert(int v, const std::vector<double> &act) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v], act);
  }

  int pop(const std::vector<double> &act) {
    int v = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    heap_.pop_back();
    pos_[v] = -1;
    if (!heap_.empty()) down(0, act);
    return v;
  }

  void increased(int v, const std::vector<double> &act) {
    if (contains(v)) up(pos_[v], act);
  }

  void rebuild(const std::vector<double> &act) {
    for (int i = static_cast<int>(heap_.size()) / 2 - 1; i >= 0; i--)
      down(i, act);
  }

private:
  static bool before(int a, int b, const std::vector<double> &act) {
    return act[a] > act[b] || (act[a] == act[b] && a < b);
  }

  void up(int i, const std::vector<double> &act) {
    int v = heap_[i];
    while (i > 0) {
      int p = (i - 1) >> 1;
      if (!before(v, heap_[p], act)) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void down(int i, const std::vector<double> &act) {
    int v = heap_[i];
    int n = static_cast<int>(heap_.size());
    while (true) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && before(heap_[c + 1], heap_[c], act)) c++;
      if (!before(heap_[c], v, act)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  std::vector<int> heap_;
  std::vector<int> pos_;
};

} // namespace progsat
