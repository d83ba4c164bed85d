#pragma once

#include <stdexcept>
#include <string>

namespace qtw {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QTW_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                               \
    explicit Name(const std::string& msg) : Error(msg) {}             \
  }

QTW_DEFINE_ERROR(InfiniteQuotientError);
QTW_DEFINE_ERROR(NoPresentationError);
QTW_DEFINE_ERROR(UnsupportedDegreeError);
QTW_DEFINE_ERROR(BadIndexError);
QTW_DEFINE_ERROR(GroupMismatchError);
QTW_DEFINE_ERROR(NotACocycleError);
QTW_DEFINE_ERROR(DegreeTooHighError);
QTW_DEFINE_ERROR(NotACharacterError);
QTW_DEFINE_ERROR(NotLemmaFormError);
QTW_DEFINE_ERROR(BadTransversalError);
QTW_DEFINE_ERROR(NotInKernelError);
QTW_DEFINE_ERROR(NonFiniteCenterError);
QTW_DEFINE_ERROR(MismatchError);
QTW_DEFINE_ERROR(BadQError);
QTW_DEFINE_ERROR(BadIndicesError);
QTW_DEFINE_ERROR(ParseError);
QTW_DEFINE_ERROR(OverflowError);

#undef QTW_DEFINE_ERROR

}  // namespace qtw
