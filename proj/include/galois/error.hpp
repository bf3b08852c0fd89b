#pragma once

#include <stdexcept>
#include <string>

namespace galois {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed textual input (group specs, presentations, files).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A configured bound (element cap, coset cap, candidate cap) was exceeded.
  class SizeError : public Error {
   public:
    using Error::Error;
  };

  class NotNormal : public Error {
   public:
    using Error::Error;
  };

  class IncompatibleGroups : public Error {
   public:
    using Error::Error;
  };

  class BadBasepoint : public Error {
   public:
    using Error::Error;
  };

  class EmptyFamily : public Error {
   public:
    using Error::Error;
  };

  // The prime does not divide the group order, so the stable module category
  // is zero.
  class POrderError : public Error {
   public:
    using Error::Error;
  };

  class IllFormedMap : public Error {
   public:
    using Error::Error;
  };

  class MalformedAlgebra : public Error {
   public:
    using Error::Error;
  };

}  // namespace galois
