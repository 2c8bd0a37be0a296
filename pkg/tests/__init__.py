#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/__init__.py
# Purpose: Test package marker
#
# Description of code and how it works:
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.0 (2026-10-17): Initial tests.
###################################################################
#
