#pragma once

#include <stdexcept>

namespace potseq {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A degree sequence admits no simple-graph realization.
class NotGraphical : public Error { public: using Error::Error; };

/// An edge scheduled for deletion is not present in the graph.
class MissingEdge : public Error { public: using Error::Error; };

/// Input text is not a valid graph6 encoding.
class MalformedGraph6 : public Error { public: using Error::Error; };

/// A part vector or witness spec violates its invariants.
class InvalidSpec : public Error { public: using Error::Error; };

/// A sequence has fewer terms than the check requires.
class TooShort : public Error { public: using Error::Error; };

/// The requested computation exceeds the configured exhaustion limit.
class TooLarge : public Error { public: using Error::Error; };

/// The target graph has more vertices than the sequence has terms.
class TargetTooBig : public Error { public: using Error::Error; };

/// The complete graph is too small to decompose.
class TooSmall : public Error { public: using Error::Error; };

/// A persisted cache entry could not be parsed.
class CorruptCache : public Error { public: using Error::Error; };

/// An internal construction invariant failed; indicates a bug.
class ConstructionError : public Error { public: using Error::Error; };

} // namespace potseq
