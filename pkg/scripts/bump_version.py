#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: scripts/bump_version.py
# Purpose: Bump the semantic version in versions.yml, the package and CHANGELOG.md
#
# Description of code and how it works:
# - Usage: scripts/bump_version.py [major|minor|patch]
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.2.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.2.0 (2026-10-17): Keep quarticde_app.__version__ in step.
# - 0.1.0 (2026-10-17): Initial bump script.
###################################################################
#
import os
import re
import sys
from datetime import date

import yaml

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
VERSIONS = os.path.join(ROOT, "versions.yml")
CHANGELOG = os.path.join(ROOT, "CHANGELOG.md")
PACKAGE_INIT = os.path.join(ROOT, "quarticde_app", "__init__.py")


def next_version(ver, part="patch"):
    major, minor, patch = [int(x) for x in ver.split(".")]
    if part == "major":
        major += 1; minor = 0; patch = 0
    elif part == "minor":
        minor += 1; patch = 0
    elif part == "patch":
        patch += 1
    else:
        raise ValueError(f"unknown part {part!r}")
    return f"{major}.{minor}.{patch}"


def bump(part="patch", root=ROOT):
    versions = os.path.join(root, "versions.yml")
    with open(versions, "r") as f:
        data = yaml.safe_load(f) or {}
    new_ver = next_version(data.get("version", "0.0.0"), part)
    data["version"] = new_ver
    with open(versions, "w") as f:
        yaml.safe_dump(data, f)
    init = os.path.join(root, "quarticde_app", "__init__.py")
    if os.path.exists(init):
        with open(init, "r", encoding="utf-8") as f:
            txt = f.read()
        with open(init, "w", encoding="utf-8") as f:
            f.write(re.sub(r'__version__ = "[^"]*"', f'__version__ = "{new_ver}"', txt))
    with open(os.path.join(root, "CHANGELOG.md"), "a") as f:
        f.write(f"\n## {new_ver} - {date.today()}\n- Version bump.\n")
    print(new_ver)
    return new_ver


if __name__ == "__main__":
    bump(sys.argv[1] if len(sys.argv) > 1 else "patch")
