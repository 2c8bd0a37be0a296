#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/__init__.py
# Purpose: Package init
#
# Description of code and how it works:
# - Solutions of A^4 + h B^4 = C^4 + h D^4 from elliptic-curve points,
#   parametric families and exhaustive search. Entry point: quarticde_app.cli.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.4.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.4.0 (2026-10-17): Catalog sweep and conjecture scan.
# - 0.1.0 (2026-10-17): Initial package.
###################################################################
#
__version__ = "0.4.0"

__all__ = ['exactnum', 'weierstrass', 'models', 'method_one', 'method_two', 'parametric', 'search', 'schemas', 'cli']
