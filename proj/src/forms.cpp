#include "g2oct/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2oct::forms {

namespace {

std::vector<std::vector<int>> make_tuples(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < kDim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int tuple_index(int k, const std::vector<int>& idx) {
  const auto& ts = Form::tuples(k);
  auto it = std::lower_bound(ts.begin(), ts.end(), idx);
  if (it == ts.end() || *it != idx) throw std::invalid_argument("bad tuple");
  return static_cast<int>(it - ts.begin());
}

// Sign of merging two disjoint increasing tuples into one increasing tuple.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>* merged) {
  std::vector<int> seq = a;
  seq.insert(seq.end(), b.begin(), b.end());
  int sign = 1;
  // Bubble sort counting inversions; tuples are tiny.
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = 0; j + 1 < seq.size() - i; ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
  for (size_t j = 0; j + 1 < seq.size(); ++j)
    if (seq[j] == seq[j + 1]) return 0;
  *merged = seq;
  return sign;
}

}  // namespace

const std::vector<std::vector<int>>& Form::tuples(int k) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, make_tuples(k)).first;
  return it->second;
}

Form::Form(int degree) : degree_(degree), c_(tuples(degree).size()) {}

Scalar& Form::coeff(const std::vector<int>& idx) {
  return c_[static_cast<size_t>(tuple_index(degree_, idx))];
}
const Scalar& Form::coeff(const std::vector<int>& idx) const {
  return c_[static_cast<size_t>(tuple_index(degree_, idx))];
}

Form Form::operator+(const Form& o) const {
  Form r(degree_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Form Form::operator*(const Scalar& s) const {
  Form r(degree_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Form Form::wedge(const Form& o) const {
  Form r(degree_ + o.degree_);
  const auto& ta = tuples(degree_);
  const auto& tb = tuples(o.degree_);
  for (size_t i = 0; i < ta.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < tb.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      std::vector<int> merged;
      const int s = merge_sign(ta[i], tb[j], &merged);
      if (s == 0) continue;
      r.coeff(merged) += c_[i] * o.c_[j] * Scalar(s);
    }
  }
  return r;
}

Form Form::contract(const std::array<Scalar, kDim>& v) const {
  Form r(degree_ - 1);
  const auto& ts = tuples(degree_);
  for (size_t i = 0; i < ts.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const std::vector<int>& idx = ts[i];
    for (size_t pos = 0; pos < idx.size(); ++pos) {
      const Scalar& vc = v[static_cast<size_t>(idx[pos])];
      if (vc.is_zero()) continue;
      std::vector<int> rest;
      for (size_t k = 0; k < idx.size(); ++k)
        if (k != pos) rest.push_back(idx[k]);
      const int sign = (pos % 2 == 0) ? 1 : -1;
      r.coeff(rest) += c_[i] * vc * Scalar(sign);
    }
  }
  return r;
}

Scalar Form::eval(const std::vector<std::array<Scalar, kDim>>& vecs) const {
  if (static_cast<int>(vecs.size()) != degree_)
    throw std::invalid_argument("Form::eval arity");
  Form cur = *this;
  for (const auto& v : vecs) cur = cur.contract(v);
  // Degree zero: single coefficient.
  return cur.raw()[0];
}

}  // namespace forms
