#pragma once

#include <map>
#include <set>
#include <vector>

#include "skipweb/structure.hpp"

namespace skipweb {

// Compressed digital trie over a fixed alphabet.  Stored strings carry a
// terminator ('$', outside the alphabet) so no stored string is a proper
// prefix of another.  Node range = the singleton string leading to the node;
// edge range = the base string extended by any prefix of the edge label.
class TrieStructure : public Structure {
 public:
  explicit TrieStructure(const Universe& u, const GroundSet& s);

  ElementId root_element() const override { return root_; }
  ElementId locate_step(ElementId at, const Query& q) const override;
  LocateResult finish_locate(ElementId at, const Query& q) const override;
  ElementId pick_entry(const std::vector<ElementId>& candidates, const Query& q) const override;

  bool contains_item(const Item& x) const override;
  UpdateDelta insert_item(const Item& x) override;
  UpdateDelta erase_item(const Item& x) override;

  std::vector<ElementId> conflicts_with(const Range& r) const override;

 private:
  struct NodeInfo {
    std::map<char, ElementId> child_edges;  // first label char -> edge element
    ElementId parent_edge = kNoElement;
  };

  const StringRange& srange(ElementId id) const { return std::get<StringRange>(graph_.at(id).range); }
  ElementId add_trie_node(std::string str);
  ElementId add_trie_edge(ElementId from, ElementId to, std::string label);
  ElementId build_rec(const std::vector<std::string>& sorted, std::size_t lo, std::size_t hi,
                      std::size_t depth, ElementId parent_node);
  // Walk q's path as far as possible; returns (element, matched chars of q).
  std::pair<ElementId, std::size_t> walk(const std::string& q) const;

  ElementId root_ = kNoElement;
  std::vector<NodeInfo> info_;
  std::set<std::string> stored_;  // terminated strings
};

}  // namespace skipweb
