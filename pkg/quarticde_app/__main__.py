#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/__main__.py
# Purpose: `python -m quarticde_app` runs the CLI.
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
# - 0.1.0 (2026-10-17): Initial entry point.
###################################################################
#
import sys

from .cli import main

sys.exit(main())
