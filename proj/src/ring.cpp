#include "campedelli/ring.hpp"

#include <set>
#include <sstream>

namespace campedelli {

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::deglex:
      return "deglex";
    case OrderKind::block: {
      std::ostringstream os;
      os << "block(0x" << std::hex << mask_ << ")";
      return os.str();
    }
    case OrderKind::weighted: {
      std::ostringstream os;
      os << "weighted(";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) os << ";";
        for (std::size_t i = 0; i < rows_[r].size(); ++i) os << (i > 0 ? "," : "") << rows_[r][i];
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

RingPtr Ring::create(std::vector<std::string> variables, FieldDescriptor field, MonomialOrder order,
                     std::vector<std::vector<int>> blocks) {
  if (variables.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !seen.insert(v).second) throw std::invalid_argument("duplicate or empty variable name '" + v + "'");
  }
  const int n = static_cast<int>(variables.size());
  if (blocks.empty()) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    blocks.push_back(std::move(all));
  }
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i : blocks[b]) {
      if (i < 0 || i >= n || owner[static_cast<std::size_t>(i)] != -1) {
        throw std::invalid_argument("grading blocks must partition the variables");
      }
      owner[static_cast<std::size_t>(i)] = static_cast<int>(b);
    }
  }
  for (int o : owner) {
    if (o == -1) throw std::invalid_argument("grading blocks must partition the variables");
  }
  auto* r = new Ring();
  r->variables_ = std::move(variables);
  r->field_ = field;
  r->order_ = std::move(order);
  r->blocks_ = std::move(blocks);
  return RingPtr(r);
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::uint32_t Ring::block_mask(std::size_t b) const {
  std::uint32_t m = 0;
  for (int i : blocks_[b]) m |= 1U << i;
  return m;
}

RingPtr Ring::with_order(const MonomialOrder& order) const {
  if (order == order_) return create(variables_, field_, order_, blocks_);
  return create(variables_, field_, order, blocks_);
}

RingPtr Ring::with_field(const FieldDescriptor& field) const { return create(variables_, field, order_, blocks_); }

RingPtr Ring::with_extra_variable(const std::string& name) const {
  auto vars = variables_;
  vars.push_back(name);
  auto blocks = blocks_;
  blocks.push_back({nvars()});
  return create(std::move(vars), field_, order_, std::move(blocks));
}

RingPtr Ring::with_standard_grading() const { return create(variables_, field_, order_); }

std::string Ring::to_string() const {
  std::ostringstream os;
  os << field_.to_string() << "[";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) os << " | ";
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k > 0) os << ",";
      os << variables_[static_cast<std::size_t>(blocks_[b][k])];
    }
  }
  os << "] " << order_.to_string();
  return os.str();
}

}  // namespace campedelli
