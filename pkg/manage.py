"""Command-line entry point: ``python manage.py gen --mode mon --m 4 --n 2``.

Subcommands are documented in ``mbasis.cli``; ``python manage.py --help``
lists them.
"""

import sys

from mbasis.cli import main

if __name__ == "__main__":
    sys.exit(main())
