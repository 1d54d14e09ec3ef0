"""Atomic, cross-process-safe file writes.

Settings and output files are written under a ``filelock.FileLock`` via a
temp file in the target directory and ``os.replace()``, so parallel
``tdc`` invocations sharing a settings file or an output path never see a
half-written file.
"""

import json
import os
import tempfile
from contextlib import contextmanager

from filelock import FileLock

_LOCK_TIMEOUT = 30


def _replace_atomically(path: str, text: str) -> None:
    dir_name = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=dir_name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp_path, path)
    except Exception:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


@contextmanager
def locked_json_rw(path: str, default=None):
    """Read-modify-write a JSON file under its lock.

    Yields the parsed object (or ``default`` when the file is missing or
    unreadable) for in-place modification and writes it back when the
    block exits.
    """
    with FileLock(path + ".lock", timeout=_LOCK_TIMEOUT):
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            data = {} if default is None else default
        yield data
        _replace_atomically(path, json.dumps(data, indent=2, sort_keys=True) + "\n")


def write_text(path: str, text: str) -> None:
    """Atomically replace ``path`` with ``text``."""
    with FileLock(path + ".lock", timeout=_LOCK_TIMEOUT):
        _replace_atomically(path, text)
