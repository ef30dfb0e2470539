"""Allow ``python -m tracelab`` as an alias for the console script."""

from .cli import main_entry

main_entry()
