#pragma once

#include <map>
#include <string>
#include <vector>

#include "conred/exact.hpp"

namespace conred {

/// Membership class of a single label or basis slot: in N, in W\N, or in T\W.
enum class SlotClass { Null, WobsOnly, TotalOnly };

std::string to_string(SlotClass c);
SlotClass slot_class_from_string(const std::string& s);

/// Nested dimension triple n_N <= n_W <= n_T.
struct ConDim {
  int t = 0, w = 0, n = 0;

  ConDim() = default;
  ConDim(int t_, int w_, int n_);
  bool operator==(const ConDim& o) const { return t == o.t && w == o.w && n == o.n; }
  int reduced() const { return w - n; }
};

/// Finite label set with nested subsets N ⊆ W ⊆ T. Labels are ordered (the
/// order of labels_t), which fixes a canonical order on product labels.
class ConIndexSet {
 public:
  ConIndexSet() = default;
  ConIndexSet(std::vector<std::string> labels_t, std::vector<bool> in_w, std::vector<bool> in_n);

  /// ({1..n_T},{1..n_W},{1..n_N}).
  static ConIndexSet from_dim(const ConDim& d);
  static ConIndexSet from_classes(const std::vector<SlotClass>& classes);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool in_w(int i) const { return w_[i]; }
  bool in_n(int i) const { return n_[i]; }
  SlotClass cls(int i) const;
  std::vector<SlotClass> classes() const;
  ConDim cardinality() const;

  /// Position of a label in labels_t, or -1.
  int find(const std::string& label) const;

  bool operator==(const ConIndexSet& o) const;
  bool operator!=(const ConIndexSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
  std::vector<bool> w_, n_;
};

ConIndexSet cindex_coproduct(const ConIndexSet& m, const ConIndexSet& n);
ConIndexSet cindex_tensor(const ConIndexSet& m, const ConIndexSet& n);
ConIndexSet cindex_strong_tensor(const ConIndexSet& m, const ConIndexSet& n);
ConIndexSet cindex_dual(const ConIndexSet& m);
/// The plain set W \ N, in label order.
std::vector<std::string> cindex_reduce(const ConIndexSet& m);

/// Dispatcher mirroring the kinds above; `n` must be present iff the kind is
/// binary ("ArityMismatch" otherwise). `reduce` yields (S,S,∅) on the plain set.
ConIndexSet cindex_combine(const std::string& kind, const ConIndexSet& m, const ConIndexSet* n);

/// f given label-by-label on m's Total labels; true iff f(M_W) ⊆ N_W and
/// f(M_N) ⊆ N_N. Throws "PartialMap" if some label has no image.
bool classify_map(const std::map<std::string, std::string>& f, const ConIndexSet& m,
                  const ConIndexSet& n);

/// Per-slot pair class of the binary tensor / strong tensor rule.
SlotClass pair_class_tensor(SlotClass a, SlotClass b);
SlotClass pair_class_strong(SlotClass a, SlotClass b);
SlotClass dual_class(SlotClass a);

/// Class of a strictly increasing k-tuple of slots under the k-fold iteration
/// of the tensor (Λ^k_⊗) or strong tensor (Λ^k_⊠) rule.
SlotClass wedge_tuple_class(const std::vector<SlotClass>& slots, const std::vector<int>& tuple,
                            bool strong);

/// All strictly increasing k-tuples (0-based slot indices) with their classes.
std::map<std::vector<int>, SlotClass> wedge_classes(int k, const std::vector<SlotClass>& slots,
                                                    bool strong);

}  // namespace conred
