"""Translation of library errors into click errors."""

import json
from contextlib import contextmanager
from typing import Iterator

import click

from ...models import EnvParseError, MIPError


@contextmanager
def reported_errors() -> Iterator[None]:
    """Turn configuration, parse and I/O failures into ClickException (exit 1)."""
    try:
        yield
    except EnvParseError as e:
        raise click.ClickException(f"Parse error: {e}") from e
    except MIPError as e:
        raise click.ClickException(str(e)) from e
    except json.JSONDecodeError as e:
        raise click.ClickException(f"Invalid JSON: {e}") from e
    except OSError as e:
        raise click.ClickException(f"I/O error: {e}") from e
