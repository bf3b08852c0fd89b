#include "galois/limits.hpp"

namespace galois {

  namespace {
    Limits& mutable_limits() {
      static Limits l;
      return l;
    }
  }  // namespace

  Limits const& limits() {
    return mutable_limits();
  }

  void set_limits(Limits const& l) {
    mutable_limits() = l;
  }

}  // namespace galois
