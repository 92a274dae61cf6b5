#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/fields.hpp"
#include "campedelli/monomial.hpp"

namespace campedelli {

class RingMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variables, coefficient field, default monomial order and grading blocks.
/// A single block means the standard grading; several blocks describe a
/// product of projective spaces.
class Ring {
 public:
  static RingPtr create(std::vector<std::string> variables, FieldDescriptor field,
                        MonomialOrder order = MonomialOrder::grevlex(), std::vector<std::vector<int>> blocks = {});

  int nvars() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(int i) const { return variables_[static_cast<std::size_t>(i)]; }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  const FieldDescriptor& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::uint32_t block_mask(std::size_t b) const;
  std::uint32_t all_mask() const { return nvars() == 32 ? ~0U : ((1U << nvars()) - 1U); }

  RingPtr with_order(const MonomialOrder& order) const;
  RingPtr with_field(const FieldDescriptor& field) const;
  /// Appends a variable in its own grading block.
  RingPtr with_extra_variable(const std::string& name) const;
  /// Same variables with a single grading block.
  RingPtr with_standard_grading() const;

  bool same_as(const Ring& o) const {
    return variables_ == o.variables_ && field_ == o.field_ && order_ == o.order_ && blocks_ == o.blocks_;
  }
  /// Same variables, field and grading; the order may differ.
  bool compatible_with(const Ring& o) const {
    return variables_ == o.variables_ && field_ == o.field_ && blocks_ == o.blocks_;
  }

  std::string to_string() const;

 private:
  Ring() = default;

  std::vector<std::string> variables_;
  FieldDescriptor field_;
  MonomialOrder order_;
  std::vector<std::vector<int>> blocks_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) {
    throw RingMismatch("ring mismatch: " + (a ? a->to_string() : "null") + " vs " + (b ? b->to_string() : "null"));
  }
}

}  // namespace campedelli
