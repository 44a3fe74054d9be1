#ifndef LENICER_ERRORS_H_
#define LENICER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lenicer {

// Scoring was asked for a lattice with no complete start-to-final path.
class EmptyLatticeError : public std::runtime_error {
 public:
  explicit EmptyLatticeError(const std::string& what) : std::runtime_error(what) {}
};

// A reference (or every best-matching path) has zero characters, so no
// denominator exists.
class EmptyReferenceError : public std::runtime_error {
 public:
  explicit EmptyReferenceError(const std::string& what) : std::runtime_error(what) {}
};

// Kana conversion hit a scalar outside the convertible range.
class NotConvertibleError : public std::runtime_error {
 public:
  explicit NotConvertibleError(const std::string& what) : std::runtime_error(what) {}
};

// A spelling appeared in two equivalence classes.
class DuplicateSpellingError : public std::runtime_error {
 public:
  explicit DuplicateSpellingError(const std::string& what) : std::runtime_error(what) {}
};

// A resource line could not be parsed.
class MalformedLineError : public std::runtime_error {
 public:
  explicit MalformedLineError(const std::string& what) : std::runtime_error(what) {}
};

// N-gram training saw no usable text.
class EmptyCorpusError : public std::runtime_error {
 public:
  explicit EmptyCorpusError(const std::string& what) : std::runtime_error(what) {}
};

// Every corpus record was rejected.
class NoValidRecordsError : public std::runtime_error {
 public:
  explicit NoValidRecordsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lenicer

#endif  // LENICER_ERRORS_H_
