#include "basis.hpp"

#include <set>

#include "types.hpp"

namespace qsv {

std::string label_to_string(const BasisLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i > 0) out += ",";
    out += label[i];
  }
  return out;
}

Basis::Basis(std::vector<BasisLabel> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvalidArgument("basis must contain at least one label");
  }
  const std::size_t arity = labels_[0].size();
  if (arity == 0) {
    throw InvalidArgument("basis labels must have at least one token");
  }
  std::set<BasisLabel> seen;
  for (const auto& l : labels_) {
    if (l.size() != arity) {
      throw InvalidArgument("basis labels must share one arity");
    }
    if (!seen.insert(l).second) {
      throw InvalidArgument("basis labels must be pairwise distinct: " +
                            label_to_string(l));
    }
  }
}

std::shared_ptr<const Basis> Basis::single_site(
    std::vector<std::string> tokens) {
  std::vector<BasisLabel> labels;
  labels.reserve(tokens.size());
  for (auto& t : tokens) labels.push_back({std::move(t)});
  return std::make_shared<Basis>(std::move(labels));
}

std::shared_ptr<const Basis> Basis::product(const Basis& a, const Basis& b) {
  std::vector<BasisLabel> labels;
  labels.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      BasisLabel l = a.label(i);
      const BasisLabel& r = b.label(j);
      l.insert(l.end(), r.begin(), r.end());
      labels.push_back(std::move(l));
    }
  }
  return std::make_shared<Basis>(std::move(labels));
}

std::string Basis::label_string(std::size_t i) const {
  return label_to_string(labels_.at(i));
}

std::optional<std::size_t> Basis::index_of(const BasisLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

}  // namespace qsv
