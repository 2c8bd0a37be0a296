#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/errors.py
# Purpose: Exception hierarchy shared by the pipelines and the CLI.
#
# Description of code and how it works:
# - Library code raises these; only the CLI maps them to exit codes.
# - exit_code on each class is the process status the CLI returns.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.0 (2026-10-17): Initial error classes.
###################################################################
#
from __future__ import annotations

EXIT_OK = 0
EXIT_NOT_VALID = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_REFUSED = 3
EXIT_VERIFICATION_FAILURE = 4


class QuarticDEError(Exception):
    exit_code = EXIT_INVALID_INPUT


class InvalidInput(QuarticDEError):
    exit_code = EXIT_INVALID_INPUT


class SingularCurve(InvalidInput):
    pass


class PointNotOnCurve(InvalidInput):
    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class DegeneratePoint(InvalidInput):
    pass


class DomainError(InvalidInput):
    pass


class UnknownFamily(InvalidInput):
    pass


class FamilyQuarantined(InvalidInput):
    pass


class ResourceRefused(QuarticDEError):
    exit_code = EXIT_RESOURCE_REFUSED


class VerificationFailure(QuarticDEError):
    exit_code = EXIT_VERIFICATION_FAILURE
