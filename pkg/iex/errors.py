# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Exception types shared by the parsers, oracles and applications"""


class ParseError(ValueError):
    """Malformed input file

    line and column are 1-based; column is 0 when the whole line is at fault.
    """

    def __init__(self, message, line=0, column=0, path=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.path = path

    def __str__(self):
        where = self.path or "<input>"
        return f"{where}:{self.line}:{self.column}: {self.message}"


class BudgetExceeded(Exception):
    """Brute-force oracle asked to go beyond its configured cap"""

    def __init__(self, what, value, cap):
        super().__init__(f"{what} = {value} exceeds oracle budget of {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class AdmissibilityError(ValueError):
    """Constraints do not meet the preconditions of the upgrade A shortcut"""
