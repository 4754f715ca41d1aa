#pragma once

#include <stdexcept>
#include <string>

namespace aralg {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error { using Error::Error; };
class FieldMismatch : public Error { using Error::Error; };
class AlgebraMismatch : public Error { using Error::Error; };
class InfiniteDimensional : public Error { using Error::Error; };
class InadmissibleRelation : public Error { using Error::Error; };
class InvalidAlgebra : public Error { using Error::Error; };
class InvalidModule : public Error { using Error::Error; };
class UnsupportedCharacteristic : public Error { using Error::Error; };
class ProjectiveInput : public Error { using Error::Error; };
class NotIndecomposable : public Error { using Error::Error; };
class WindowTooSmall : public Error { using Error::Error; };
class NotSelfInjective : public Error { using Error::Error; };
class IndexOutOfWindow : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace aralg
