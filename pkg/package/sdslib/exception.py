# Copyright SDSLIB CONTRIBUTORS 2024

"""
Exception types raised by sdslib.
"""


class SdsException(Exception):
    """
    Basic exception class for sdslib.
    """

    def __init__(self, message="Exception in sdslib:"):
        self.message = message
        super().__init__(self.message)

    def __str__(self):
        return f"{type(self).__name__}: {self.message}"


class InfeasibleParams(SdsException):
    """
    Parameter tuple violates lambda(v-1) = sum k_i(k_i-1).
    """


class OutOfRange(SdsException):
    """
    A parameter or residue lies outside of its admissible range.
    """


class InverseNotIntegral(SdsException):
    """
    PSD-constants do not correspond to integral PAF-constants.
    """


class BlockSizeMismatch(SdsException):
    """
    Base blocks do not match the block sizes declared by the parameters.
    """


class NotDivisible(SdsException):
    """
    Compressed length does not divide the sequence length.
    """


class UnsupportedFactor(SdsException):
    """
    Compression factor has no counting identities or lifting rules implemented.
    """


class AlphabetMismatch(SdsException):
    """
    Sequence entries do not belong to the expected compressed alphabet.
    """


class Unsupported(SdsException):
    """
    Requested search configuration is not supported, e.g. more than two base blocks.
    """


class TooLarge(SdsException):
    """
    Exhaustive enumeration would exceed the configured guard.
    """


class CorruptRegistry(SdsException):
    """
    A shipped witness failed verification.
    """


class InputError(SdsException):
    """
    Malformed user input: parameter strings, content specs, witness files.
    """
