#ifndef METAQA_ERROR_H_
#define METAQA_ERROR_H_

#include <stdexcept>
#include <string>

namespace metaqa {

enum class ErrorCode {
  kIo,
  kFormat,       // malformed input record or file
  kValidation,   // well-formed input violating a data invariant
  kNotFound,
  kRejected,     // input understood but unusable (no pronoun, no answer, ...)
  kConflict,     // stale store version
  kConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metaqa

#endif  // METAQA_ERROR_H_
