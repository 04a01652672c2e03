#ifndef VALENCE_BOX_HPP_
#define VALENCE_BOX_HPP_

#include <compare>
#include <memory>
#include <utility>

namespace valence {

  // Heap cell with value semantics, used to close recursive variants
  // (product elements, nested descriptors, rational expressions).
  template <typename T>
  class Box {
   public:
    Box(T value)  // NOLINT(runtime/explicit)
        : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(Box const& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&& other) noexcept = default;
    Box& operator=(Box const& other) {
      if (this != &other) {
        ptr_ = std::make_unique<T>(*other.ptr_);
      }
      return *this;
    }
    Box& operator=(Box&& other) noexcept = default;
    ~Box() = default;

    T const& operator*() const noexcept {
      return *ptr_;
    }
    T const* operator->() const noexcept {
      return ptr_.get();
    }

    friend bool operator==(Box const& a, Box const& b) {
      return *a.ptr_ == *b.ptr_;
    }
    friend std::strong_ordering operator<=>(Box const& a, Box const& b) {
      return *a.ptr_ <=> *b.ptr_;
    }

   private:
    std::unique_ptr<T> ptr_;
  };

}  // namespace valence

#endif  // VALENCE_BOX_HPP_
