"""Entry point for ``python -m ss2d``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
