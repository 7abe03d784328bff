#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

namespace xlog {

// Immutable ordered map backed by an AVL tree with path copying. Every
// insertion returns a new map that shares all untouched subtrees with the
// original, so snapshots are O(1) and old versions stay valid forever.
template <typename Key, typename Value, typename Less = std::less<Key>>
class PersistentMap {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Key key;
    Value value;
    NodePtr left;
    NodePtr right;
    int height;
    std::size_t size;
  };

 public:
  PersistentMap() = default;

  [[nodiscard]] bool empty() const { return root_ == nullptr; }
  [[nodiscard]] std::size_t size() const { return size_of(root_); }

  // Returns nullptr when the key is absent.
  [[nodiscard]] const Value* find(const Key& key) const {
    const Node* n = root_.get();
    Less less;
    while (n != nullptr) {
      if (less(key, n->key)) {
        n = n->left.get();
      } else if (less(n->key, key)) {
        n = n->right.get();
      } else {
        return &n->value;
      }
    }
    return nullptr;
  }

  [[nodiscard]] bool contains(const Key& key) const { return find(key) != nullptr; }

  // Keys are write-once: inserting an existing key throws.
  [[nodiscard]] PersistentMap insert(Key key, Value value) const {
    PersistentMap out;
    out.root_ = insert_at(root_, std::move(key), std::move(value));
    return out;
  }

  // In-order traversal.
  template <typename F>
  void for_each(F&& f) const {
    visit(root_.get(), f);
  }

  // Two maps are equal when they hold the same key/value pairs.
  template <typename Eq = std::equal_to<Value>>
  [[nodiscard]] bool same_entries(const PersistentMap& other, Eq eq = {}) const {
    if (size() != other.size()) return false;
    bool equal = true;
    for_each([&](const Key& k, const Value& v) {
      if (!equal) return;
      const Value* w = other.find(k);
      equal = w != nullptr && eq(v, *w);
    });
    return equal;
  }

  // Identity of the underlying tree; equal roots imply equal contents.
  [[nodiscard]] const void* identity() const { return root_.get(); }

 private:
  static int height_of(const NodePtr& n) { return n ? n->height : 0; }
  static std::size_t size_of(const NodePtr& n) { return n ? n->size : 0; }

  static NodePtr make(Key key, Value value, NodePtr left, NodePtr right) {
    const int h = 1 + std::max(height_of(left), height_of(right));
    const std::size_t s = 1 + size_of(left) + size_of(right);
    return std::make_shared<const Node>(
        Node{std::move(key), std::move(value), std::move(left), std::move(right), h, s});
  }

  static NodePtr rotate_right(const Node& n) {
    const Node& l = *n.left;
    return make(l.key, l.value, l.left, make(n.key, n.value, l.right, n.right));
  }

  static NodePtr rotate_left(const Node& n) {
    const Node& r = *n.right;
    return make(r.key, r.value, make(n.key, n.value, n.left, r.left), r.right);
  }

  static NodePtr balance(Key key, Value value, NodePtr left, NodePtr right) {
    const int diff = height_of(left) - height_of(right);
    if (diff > 1) {
      if (height_of(left->left) < height_of(left->right)) {
        left = rotate_left(*left);
      }
      return rotate_right(*make(std::move(key), std::move(value), std::move(left), std::move(right)));
    }
    if (diff < -1) {
      if (height_of(right->right) < height_of(right->left)) {
        right = rotate_right(*right);
      }
      return rotate_left(*make(std::move(key), std::move(value), std::move(left), std::move(right)));
    }
    return make(std::move(key), std::move(value), std::move(left), std::move(right));
  }

  static NodePtr insert_at(const NodePtr& n, Key key, Value value) {
    if (!n) return make(std::move(key), std::move(value), nullptr, nullptr);
    Less less;
    if (less(key, n->key)) {
      return balance(n->key, n->value, insert_at(n->left, std::move(key), std::move(value)), n->right);
    }
    if (less(n->key, key)) {
      return balance(n->key, n->value, n->left, insert_at(n->right, std::move(key), std::move(value)));
    }
    throw std::logic_error("PersistentMap: key already present");
  }

  template <typename F>
  static void visit(const Node* n, F& f) {
    if (n == nullptr) return;
    visit(n->left.get(), f);
    f(n->key, n->value);
    visit(n->right.get(), f);
  }

  NodePtr root_;
};

}  // namespace xlog
