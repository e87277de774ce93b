#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qsv {

// One basis label: an ordered tuple of per-site tokens, e.g. {"+x", "intact"}.
using BasisLabel = std::vector<std::string>;

std::string label_to_string(const BasisLabel& label);

// Ordered list of distinct labels sharing one arity.  The order is the
// serialization contract; product bases enumerate site 1 most significantly.
class Basis {
 public:
  explicit Basis(std::vector<BasisLabel> labels);

  static std::shared_ptr<const Basis> single_site(
      std::vector<std::string> tokens);
  static std::shared_ptr<const Basis> product(const Basis& a, const Basis& b);

  std::size_t size() const { return labels_.size(); }
  std::size_t arity() const { return labels_.empty() ? 0 : labels_[0].size(); }
  const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
  std::string label_string(std::size_t i) const;
  std::optional<std::size_t> index_of(const BasisLabel& label) const;

  bool operator==(const Basis& other) const { return labels_ == other.labels_; }
  bool operator!=(const Basis& other) const { return !(*this == other); }

 private:
  std::vector<BasisLabel> labels_;
};

using BasisPtr = std::shared_ptr<const Basis>;

}  // namespace qsv
