"""Single source of truth for mip-delegate versioning.

All version references throughout the project should import from this module.
"""

import subprocess
from importlib import metadata
from pathlib import Path
from typing import Any, Dict, Optional

# Semantic version - MAJOR.MINOR.PATCH
__version__ = "0.4.0"

VERSION_INFO = tuple(map(int, __version__.split(".")))
MAJOR, MINOR, PATCH = VERSION_INFO

__title__ = "mip-delegate"
__description__ = (
    "On-demand hierarchical planning through skill delegation, "
    "with dependency-graph environments and baseline planners"
)
__author__ = "mip-delegate contributors"
__license__ = "MIT"

# Libraries whose versions affect benchmark numbers (rng streams, parsing)
RUNTIME_LIBRARIES = ("numpy", "networkx", "pyparsing", "click", "rich")


def get_git_commit() -> Optional[str]:
    """Short commit hash of the checkout, None outside git."""
    try:
        done = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True,
            text=True,
            timeout=1,
        )
    except (subprocess.TimeoutExpired, OSError):
        return None
    if done.returncode != 0:
        return None
    return done.stdout.strip() or None


def library_versions() -> Dict[str, str]:
    """Installed versions of the runtime libraries."""
    versions = {}
    for name in RUNTIME_LIBRARIES:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = "not installed"
    return versions


def get_version_info() -> Dict[str, Any]:
    """Version, build and library metadata for ``version --format table|json``."""
    commit = get_git_commit()
    return {
        "version": __version__,
        "major": MAJOR,
        "minor": MINOR,
        "patch": PATCH,
        "git_commit": commit,
        "full_version": f"{__version__}+{commit}" if commit else __version__,
        "title": __title__,
        "description": __description__,
        "license": __license__,
        "libraries": library_versions(),
    }
