#pragma once

#include <stdexcept>
#include <string>

namespace permuta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERMUTA_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

PERMUTA_DEFINE_ERROR(ClosureCapExceeded)
PERMUTA_DEFINE_ERROR(OrderCapExceeded)
PERMUTA_DEFINE_ERROR(CapExceeded)
PERMUTA_DEFINE_ERROR(MixedRepresentation)
PERMUTA_DEFINE_ERROR(IndexError)
PERMUTA_DEFINE_ERROR(ParentMismatch)
PERMUTA_DEFINE_ERROR(NotUnitModRadical)
PERMUTA_DEFINE_ERROR(HypothesisFailed)
PERMUTA_DEFINE_ERROR(ZeroElement)
PERMUTA_DEFINE_ERROR(RankMismatch)
PERMUTA_DEFINE_ERROR(TruncationInsufficient)
PERMUTA_DEFINE_ERROR(ParseError)
PERMUTA_DEFINE_ERROR(InvalidGroup)

#undef PERMUTA_DEFINE_ERROR

}  // namespace permuta
