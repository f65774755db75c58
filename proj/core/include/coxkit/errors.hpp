#pragma once

#include <stdexcept>
#include <string>

namespace cox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coxeter matrix violates the structural rules (asymmetry, m_ii != 1,
/// off-diagonal entry < 2, unusable rank).
class InvalidMatrix : public Error {
public:
  using Error::Error;
};

/// The requested system is infinite or exceeds a configured cap
/// (root closure, element enumeration, or an explicit infinity marker).
class InfiniteOrTooLarge : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// Two elements from different CoxeterSystem instances were combined.
class SystemMismatch : public Error {
public:
  using Error::Error;
};

/// The subword oracle was asked for a word too long to enumerate.
class OracleTooLarge : public Error {
public:
  using Error::Error;
};

class DuplicateElements : public Error {
public:
  using Error::Error;
};

/// An element required to be a minimal double-coset representative is not.
class NotMinimalRep : public Error {
public:
  using Error::Error;
};

class NotASubset : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (named type string, matrix file, word,
/// one-line permutation).
class ParseFailure : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

/// A structural self-check failed; indicates a bug, not bad input.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

/// The minimal-representative comparison and the maximal-representative
/// comparison disagreed. Unreachable unless the implementation is wrong;
/// surfaced as its own type so audits can trap it.
class ComparisonMismatch : public Error {
public:
  using Error::Error;
};

}  // namespace cox
