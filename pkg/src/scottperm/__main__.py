"""Allow running the command-line interface as `python3 -m scottperm`."""
from .cli import main

raise SystemExit(main())
