#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/connectors/__init__.py
# Purpose: Connectors package init (generator files, worked-example catalog)
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
# - 0.1.0 (2026-10-17): Initial connectors package.
###################################################################
#
