"""Allow running as `python -m pejantzen`."""

from pejantzen.cli import main

main()
