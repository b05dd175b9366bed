#include "conred/cindex.hpp"

#include <algorithm>

namespace conred {

std::string to_string(SlotClass c) {
  switch (c) {
    case SlotClass::Null: return "N";
    case SlotClass::WobsOnly: return "W";
    case SlotClass::TotalOnly: return "T";
  }
  return "?";
}

SlotClass slot_class_from_string(const std::string& s) {
  if (s == "N") return SlotClass::Null;
  if (s == "W") return SlotClass::WobsOnly;
  if (s == "T") return SlotClass::TotalOnly;
  throw Error("ParseError", "unknown slot class '" + s + "'");
}

ConDim::ConDim(int t_, int w_, int n_) : t(t_), w(w_), n(n_) {
  if (n < 0 || n > w || w > t) throw Error("DimensionMismatch", "need 0 <= n_N <= n_W <= n_T");
}

ConIndexSet::ConIndexSet(std::vector<std::string> labels_t, std::vector<bool> in_w,
                         std::vector<bool> in_n)
    : labels_(std::move(labels_t)), w_(std::move(in_w)), n_(std::move(in_n)) {
  if (labels_.size() != w_.size() || labels_.size() != n_.size())
    throw Error("DimensionMismatch", "mask size mismatch");
  for (size_t i = 0; i < labels_.size(); ++i)
    if (n_[i] && !w_[i]) throw Error("DimensionMismatch", "N must be contained in W");
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) throw Error("DuplicateLabel", labels_[i]);
}

ConIndexSet ConIndexSet::from_dim(const ConDim& d) {
  std::vector<std::string> labels;
  std::vector<bool> w, n;
  for (int i = 1; i <= d.t; ++i) {
    labels.push_back(std::to_string(i));
    w.push_back(i <= d.w);
    n.push_back(i <= d.n);
  }
  return ConIndexSet(labels, w, n);
}

ConIndexSet ConIndexSet::from_classes(const std::vector<SlotClass>& classes) {
  std::vector<std::string> labels;
  std::vector<bool> w, n;
  for (size_t i = 0; i < classes.size(); ++i) {
    labels.push_back(std::to_string(i + 1));
    w.push_back(classes[i] != SlotClass::TotalOnly);
    n.push_back(classes[i] == SlotClass::Null);
  }
  return ConIndexSet(labels, w, n);
}

SlotClass ConIndexSet::cls(int i) const {
  if (n_[i]) return SlotClass::Null;
  if (w_[i]) return SlotClass::WobsOnly;
  return SlotClass::TotalOnly;
}

std::vector<SlotClass> ConIndexSet::classes() const {
  std::vector<SlotClass> cs(labels_.size());
  for (int i = 0; i < size(); ++i) cs[i] = cls(i);
  return cs;
}

ConDim ConIndexSet::cardinality() const {
  int w = 0, n = 0;
  for (int i = 0; i < size(); ++i) {
    if (w_[i]) ++w;
    if (n_[i]) ++n;
  }
  return ConDim(size(), w, n);
}

int ConIndexSet::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool ConIndexSet::operator==(const ConIndexSet& o) const {
  return labels_ == o.labels_ && w_ == o.w_ && n_ == o.n_;
}

ConIndexSet cindex_coproduct(const ConIndexSet& m, const ConIndexSet& n) {
  std::vector<std::string> labels;
  std::vector<bool> w, in_n;
  for (int i = 0; i < m.size(); ++i) {
    labels.push_back("l." + m.labels()[i]);
    w.push_back(m.in_w(i));
    in_n.push_back(m.in_n(i));
  }
  for (int j = 0; j < n.size(); ++j) {
    labels.push_back("r." + n.labels()[j]);
    w.push_back(n.in_w(j));
    in_n.push_back(n.in_n(j));
  }
  return ConIndexSet(labels, w, in_n);
}

static std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

ConIndexSet cindex_tensor(const ConIndexSet& m, const ConIndexSet& n) {
  std::vector<std::string> labels;
  std::vector<bool> w, in_n;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < n.size(); ++j) {
      labels.push_back(pair_label(m.labels()[i], n.labels()[j]));
      w.push_back(m.in_w(i) && n.in_w(j));
      in_n.push_back((m.in_w(i) && n.in_n(j)) || (m.in_n(i) && n.in_w(j)));
    }
  return ConIndexSet(labels, w, in_n);
}

ConIndexSet cindex_strong_tensor(const ConIndexSet& m, const ConIndexSet& n) {
  std::vector<std::string> labels;
  std::vector<bool> w, in_n;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < n.size(); ++j) {
      labels.push_back(pair_label(m.labels()[i], n.labels()[j]));
      bool null_part = m.in_n(i) || n.in_n(j);
      w.push_back((m.in_w(i) && n.in_w(j)) || null_part);
      in_n.push_back(null_part);
    }
  return ConIndexSet(labels, w, in_n);
}

ConIndexSet cindex_dual(const ConIndexSet& m) {
  std::vector<bool> w, n;
  for (int i = 0; i < m.size(); ++i) {
    w.push_back(!m.in_n(i));
    n.push_back(!m.in_w(i));
  }
  return ConIndexSet(m.labels(), w, n);
}

std::vector<std::string> cindex_reduce(const ConIndexSet& m) {
  std::vector<std::string> out;
  for (int i = 0; i < m.size(); ++i)
    if (m.in_w(i) && !m.in_n(i)) out.push_back(m.labels()[i]);
  return out;
}

ConIndexSet cindex_combine(const std::string& kind, const ConIndexSet& m, const ConIndexSet* n) {
  bool binary = kind == "coproduct" || kind == "tensor" || kind == "strong_tensor";
  if (binary && n == nullptr) throw Error("ArityMismatch", kind + " needs two operands");
  if (!binary && n != nullptr) throw Error("ArityMismatch", kind + " takes one operand");
  if (kind == "coproduct") return cindex_coproduct(m, *n);
  if (kind == "tensor") return cindex_tensor(m, *n);
  if (kind == "strong_tensor") return cindex_strong_tensor(m, *n);
  if (kind == "dual") return cindex_dual(m);
  if (kind == "reduce") {
    auto labels = cindex_reduce(m);
    return ConIndexSet(labels, std::vector<bool>(labels.size(), true),
                       std::vector<bool>(labels.size(), false));
  }
  throw Error("ArityMismatch", "unknown kind '" + kind + "'");
}

bool classify_map(const std::map<std::string, std::string>& f, const ConIndexSet& m,
                  const ConIndexSet& n) {
  for (int i = 0; i < m.size(); ++i) {
    auto it = f.find(m.labels()[i]);
    if (it == f.end()) throw Error("PartialMap", "no image for label '" + m.labels()[i] + "'");
    int j = n.find(it->second);
    if (j < 0) throw Error("PartialMap", "image label '" + it->second + "' not in target");
    if (m.in_w(i) && !n.in_w(j)) return false;
    if (m.in_n(i) && !n.in_n(j)) return false;
  }
  return true;
}

SlotClass pair_class_tensor(SlotClass a, SlotClass b) {
  bool aw = a != SlotClass::TotalOnly, bw = b != SlotClass::TotalOnly;
  if (!(aw && bw)) return SlotClass::TotalOnly;
  if (a == SlotClass::Null || b == SlotClass::Null) return SlotClass::Null;
  return SlotClass::WobsOnly;
}

SlotClass pair_class_strong(SlotClass a, SlotClass b) {
  if (a == SlotClass::Null || b == SlotClass::Null) return SlotClass::Null;
  bool aw = a != SlotClass::TotalOnly, bw = b != SlotClass::TotalOnly;
  return (aw && bw) ? SlotClass::WobsOnly : SlotClass::TotalOnly;
}

SlotClass dual_class(SlotClass a) {
  switch (a) {
    case SlotClass::Null: return SlotClass::TotalOnly;
    case SlotClass::WobsOnly: return SlotClass::WobsOnly;
    case SlotClass::TotalOnly: return SlotClass::Null;
  }
  return SlotClass::TotalOnly;
}

SlotClass wedge_tuple_class(const std::vector<SlotClass>& slots, const std::vector<int>& tuple,
                            bool strong) {
  if (tuple.empty()) return SlotClass::WobsOnly;  // scalars sit in the W-component
  SlotClass acc = slots[tuple[0]];
  for (size_t i = 1; i < tuple.size(); ++i)
    acc = strong ? pair_class_strong(acc, slots[tuple[i]]) : pair_class_tensor(acc, slots[tuple[i]]);
  return acc;
}

static void enumerate_tuples(int k, int nslots, int start, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < nslots; ++i) {
    cur.push_back(i);
    enumerate_tuples(k, nslots, i + 1, cur, out);
    cur.pop_back();
  }
}

std::map<std::vector<int>, SlotClass> wedge_classes(int k, const std::vector<SlotClass>& slots,
                                                    bool strong) {
  if (slots.empty()) throw Error("DegreeTooLarge", "empty slot list");
  if (k > static_cast<int>(slots.size()))
    throw Error("DegreeTooLarge", "degree exceeds slot count");
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  enumerate_tuples(k, static_cast<int>(slots.size()), 0, cur, tuples);
  std::map<std::vector<int>, SlotClass> out;
  for (const auto& t : tuples) out[t] = wedge_tuple_class(slots, t, strong);
  return out;
}

}  // namespace conred
