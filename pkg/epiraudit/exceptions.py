"""Custom exceptions for the epiraudit library."""


class AuditError(Exception):
    """Base class for every error raised by epiraudit."""
    pass


# Field construction and arithmetic

class NonPrimeP(AuditError):
    """Raised when the characteristic is not a prime."""
    pass


class ReducibleModulus(AuditError):
    """Raised when the modulus polynomial factors over GF(p)."""
    pass


class TableCapExceeded(AuditError):
    """Raised when p^n is above the configured log/antilog table cap."""
    pass


class ZeroInverse(AuditError, ZeroDivisionError):
    """Raised when inverting (or raising to a negative power) the zero element."""
    pass


class ZeroElement(AuditError):
    """Raised when an operation needs a nonzero element (e.g. order)."""
    pass


class UnknownModulus(AuditError):
    """Raised when no built-in modulus exists for the requested degree."""
    pass


class ParseError(AuditError):
    """Raised when polynomial or element text cannot be parsed."""

    def __init__(self, message: str, position: int = 0, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


# ElGamal

class NonPrimitiveGenerator(AuditError):
    """Raised when the field's alpha is not a generator of L^x."""
    pass


class ZeroPlaintext(AuditError):
    """Raised when encrypting 0, which is outside the group L^x."""
    pass


class DegenerateCiphertext(AuditError):
    """Raised when decrypting a ciphertext whose first component is 0."""
    pass


# Protocol

class TrivialCiphertext(AuditError):
    """Raised when the database receives a ciphertext with a zero component."""
    pass


class InvalidBlock(AuditError):
    """Raised in strict mode when a database block is outside the valid set."""
    pass


# Analysis

class ViolatedPartition(AuditError):
    """Raised when valid blocks are not a union of whole conjugacy classes."""
    pass


class LemmaViolation(AuditError):
    """Raised when a coset holds two roots of E for a polynomial in the class P."""
    pass


class BoundViolation(AuditError):
    """Raised when a computed probability falls below a proven lower bound."""
    pass


class IntractableSize(AuditError):
    """Raised when an exhaustive search would exceed the configured size."""
    pass
